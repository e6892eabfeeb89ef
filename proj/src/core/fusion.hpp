#ifndef QGMULT_CORE_FUSION_HPP
#define QGMULT_CORE_FUSION_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "core/qparam.hpp"

namespace qgm::fusion {

/// Irreducible label of spin d/2; d is a non-negative integer.
struct SpinLabel {
    long d = 0;
    auto operator<=>(const SpinLabel&) const = default;
};

inline long dim(SpinLabel a) { return a.d + 1; }

/// Word over the two-letter alphabet {'a', 'b'}; 'a' is the generator
/// and 'b' its conjugate. The empty word is the unit.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::string letters);

    const std::string& letters() const noexcept { return letters_; }
    long length() const noexcept { return static_cast<long>(letters_.size()); }
    bool empty() const noexcept { return letters_.empty(); }

    auto operator<=>(const FreeWord&) const = default;

private:
    std::string letters_;
};

/// Conjugate word: reverse the letters and swap a <-> b.
/// Antimultiplicative, and an involution.
FreeWord bar(const FreeWord& w);

/// Formal non-negative-integer combination of irreducible labels.
/// Multiplicities are exact integers; entries with multiplicity zero are
/// never stored.
template <class Label>
class FusionElement {
public:
    FusionElement() = default;

    void add(const Label& l, long long mult) {
        if (mult == 0) return;
        auto it = terms_.find(l);
        if (it == terms_.end()) {
            terms_.emplace(l, mult);
        } else {
            it->second += mult;
            if (it->second == 0) terms_.erase(it);
        }
    }

    long long multiplicity(const Label& l) const {
        auto it = terms_.find(l);
        return it == terms_.end() ? 0 : it->second;
    }

    const std::map<Label, long long>& terms() const noexcept { return terms_; }
    bool operator==(const FusionElement&) const = default;

private:
    std::map<Label, long long> terms_;
};

/// Clebsch-Gordan ladder: spins |a-b|, |a-b|+2, ..., a+b, each once.
FusionElement<SpinLabel> fuse(SpinLabel a, SpinLabel b);

/// Word fusion w . v = sum over factorizations w = xy, v = bar(y) z of
/// the concatenations xz, with accumulated multiplicities.
FusionElement<FreeWord> fuse(const FreeWord& w, const FreeWord& v);

/// Bilinear extension of fusion to formal combinations.
template <class Label>
FusionElement<Label> fuse(const FusionElement<Label>& x, const FusionElement<Label>& y) {
    FusionElement<Label> out;
    for (const auto& [la, ma] : x.terms())
        for (const auto& [lb, mb] : y.terms()) {
            const FusionElement<Label> product = fuse(la, lb);
            for (const auto& [lc, mc] : product.terms()) out.add(lc, ma * mb * mc);
        }
    return out;
}

/// Quantum dimension mu_d(gauge) of the spin-d/2 label.
double qdim(SpinLabel a, const QParam& q);

/// Quantum dimension of a word label: the unique ring homomorphism with
/// value gauge on both single-letter words.
double qdim(const FreeWord& w, const QParam& q);

template <class Label>
double qdim(const FusionElement<Label>& x, const QParam& q) {
    double acc = 0.0;
    for (const auto& [l, m] : x.terms()) acc += double(m) * qdim(l, q);
    return acc;
}

/// Keep only even-d labels (the integer-spin subring).
FusionElement<SpinLabel> even_part(const FusionElement<SpinLabel>& x);

struct DimGrowthRow {
    long d;
    double dim;                    ///< mu_d(N); +inf once past double range
    double dim_q;                  ///< mu_d(trace)
    double char_state;             ///< dim^2 / dim_q
    double char_state_over_norm;   ///< char_state / (d+1)
    double log_dim;
    double log_dim_q;
    double log_char_state;
};

struct DimGrowthTable {
    long n;
    double trace;                  ///< supplied as gauge = q + 1/q
    bool char_state_diverges;      ///< trace < N^2 - 2 strictly
    std::vector<DimGrowthRow> rows;
};

/// Dimension growth along the spin ladder when the classical dimension
/// of the generator is N and the quantum trace is gauge. Requires N >= 2.
DimGrowthTable dim_growth_table(const QParam& q, long n, long d_max);

} // namespace qgm::fusion

#endif
