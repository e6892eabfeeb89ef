#include "core/fusion.hpp"

#include <cmath>
#include <stdexcept>

#include "core/qspecial.hpp"

namespace qgm::fusion {

FreeWord::FreeWord(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
        if (c != 'a' && c != 'b')
            throw std::invalid_argument("FreeWord: letters must be 'a' or 'b'");
}

FreeWord bar(const FreeWord& w) {
    std::string out(w.letters().rbegin(), w.letters().rend());
    for (char& c : out) c = (c == 'a') ? 'b' : 'a';
    return FreeWord(std::move(out));
}

FusionElement<SpinLabel> fuse(SpinLabel a, SpinLabel b) {
    if (a.d < 0 || b.d < 0) throw std::invalid_argument("fuse: spin labels must be >= 0");
    FusionElement<SpinLabel> out;
    for (long c = std::abs(a.d - b.d); c <= a.d + b.d; c += 2) out.add(SpinLabel{c}, 1);
    return out;
}

FusionElement<FreeWord> fuse(const FreeWord& w, const FreeWord& v) {
    FusionElement<FreeWord> out;
    const std::string& ws = w.letters();
    const std::string& vs = v.letters();
    // Split w = x y over every suffix y, keep those with v = bar(y) z.
    for (std::size_t cut = 0; cut <= ws.size(); ++cut) {
        const std::string y = ws.substr(cut);
        const std::string ybar = bar(FreeWord(y)).letters();
        if (ybar.size() > vs.size()) continue;
        if (vs.compare(0, ybar.size(), ybar) != 0) continue;
        out.add(FreeWord(ws.substr(0, cut) + vs.substr(ybar.size())), 1);
    }
    return out;
}

double qdim(SpinLabel a, const QParam& q) {
    if (a.d < 0) throw std::invalid_argument("qdim: spin label must be >= 0");
    return std::exp(qspecial::log_chebyshev_mu(a.d, q.gauge()));
}

namespace {

// qdim('a' v) = gauge * qdim(v) - [v starts with 'b'] qdim(tail v),
// and symmetrically for 'b'; this is the single-letter fusion rule read
// through the ring homomorphism.
double qdim_word_rec(const std::string& w, std::size_t from, double gauge,
                     std::vector<double>& memo) {
    const std::size_t len = w.size() - from;
    if (len == 0) return 1.0;
    if (len == 1) return gauge;
    double& slot = memo[from];
    if (!std::isnan(slot)) return slot;
    const char head = w[from];
    const char conj = (head == 'a') ? 'b' : 'a';
    double val = gauge * qdim_word_rec(w, from + 1, gauge, memo);
    if (w[from + 1] == conj) val -= qdim_word_rec(w, from + 2, gauge, memo);
    slot = val;
    return val;
}

} // namespace

double qdim(const FreeWord& w, const QParam& q) {
    std::vector<double> memo(w.letters().size(), std::nan(""));
    return qdim_word_rec(w.letters(), 0, q.gauge(), memo);
}

FusionElement<SpinLabel> even_part(const FusionElement<SpinLabel>& x) {
    FusionElement<SpinLabel> out;
    for (const auto& [l, m] : x.terms())
        if (l.d % 2 == 0) out.add(l, m);
    return out;
}

DimGrowthTable dim_growth_table(const QParam& q, long n, long d_max) {
    if (n < 2) throw std::invalid_argument("dim_growth_table: requires N >= 2");
    if (d_max < 0) throw std::invalid_argument("dim_growth_table: d_max must be >= 0");

    DimGrowthTable table;
    table.n = n;
    table.trace = q.gauge();
    table.char_state_diverges = table.trace < double(n) * double(n) - 2.0;

    table.rows.reserve(static_cast<std::size_t>(d_max) + 1);
    for (long d = 0; d <= d_max; ++d) {
        DimGrowthRow row;
        row.d = d;
        row.log_dim = qspecial::log_chebyshev_mu(d, double(n));
        row.log_dim_q = qspecial::log_chebyshev_mu(d, table.trace);
        row.log_char_state = 2.0 * row.log_dim - row.log_dim_q;
        row.dim = std::exp(row.log_dim);
        row.dim_q = std::exp(row.log_dim_q);
        row.char_state = std::exp(row.log_char_state);
        row.char_state_over_norm = std::exp(row.log_char_state - std::log(double(d + 1)));
        table.rows.push_back(row);
    }
    return table;
}

} // namespace qgm::fusion
