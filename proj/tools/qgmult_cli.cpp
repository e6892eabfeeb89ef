// qgmult command-line front end. Talks to the library exclusively
// through the C API in qgmult/qgmult.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgmult/qgmult.h"

namespace {

enum class Format { json, csv, text };

// ---------------------------------------------------------------- output

// Floats are printed with 17 significant digits so that output for a
// fixed configuration is byte-stable across runs.
std::string fnum(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string jstr(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string jpair(double re, double im) { return "[" + fnum(re) + "," + fnum(im) + "]"; }

std::string jbool(bool b) { return b ? "true" : "false"; }

struct JsonObject {
    std::string body;
    void field(const std::string& key, const std::string& rendered) {
        if (!body.empty()) body += ",";
        body += jstr(key) + ":" + rendered;
    }
    std::string str() const { return "{" + body + "}"; }
};

std::string jarray(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ",";
        out += items[i];
    }
    return out + "]";
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void print(Format f) const {
        if (f == Format::csv) {
            std::string line;
            for (std::size_t i = 0; i < header.size(); ++i)
                line += (i ? "," : "") + header[i];
            std::cout << line << "\n";
            for (const auto& r : rows) {
                line.clear();
                for (std::size_t i = 0; i < r.size(); ++i) line += (i ? "," : "") + r[i];
                std::cout << line << "\n";
            }
            return;
        }
        std::vector<std::size_t> w(header.size());
        for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
        for (const auto& r : rows)
            for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
        const auto emit = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size(); ++i)
                std::cout << (i ? "  " : "") << r[i]
                          << std::string(w[i] - r[i].size(), ' ');
            std::cout << "\n";
        };
        emit(header);
        for (const auto& r : rows) emit(r);
    }
};

// ---------------------------------------------------------------- helpers

[[noreturn]] void config_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(2);
}

void check(qgm_status st, const char* who) {
    if (st != QGM_OK)
        config_error(std::string(who) + ": " + qgm_status_name(st) + " (" +
                     qgm_last_error() + ")");
}

struct ZArg {
    double re = 0.0, im = 0.0;
    bool is_real() const { return im == 0.0; }
};

ZArg parse_z(const std::string& s) {
    ZArg z;
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) {
            z.re = std::stod(s);
        } else {
            z.re = std::stod(s.substr(0, comma));
            z.im = std::stod(s.substr(comma + 1));
        }
    } catch (const std::exception&) {
        config_error("could not parse complex value '" + s + "' (expected re or re,im)");
    }
    return z;
}

std::string render_z(const ZArg& z) {
    return z.is_real() ? fnum(z.re) : jpair(z.re, z.im);
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    config_error("unknown format '" + s + "'");
}

void require_q(double q) {
    if (!(std::abs(q) > 0.0) || std::abs(q) >= 1.0)
        config_error("--q must satisfy 0 < |q| < 1");
}

// ---------------------------------------------------------------- special

int cmd_special(double q, const ZArg& z, long dmax, Format fmt) {
    require_q(q);
    const double lq = std::log(std::abs(q));
    const double xre_arg = z.re, xim_arg = z.im;
    // x = |q|^w + |q|^{-w}
    double xre, xim;
    {
        const double a = std::exp(xre_arg * lq), b = std::exp(-xre_arg * lq);
        const double c = std::cos(xim_arg * lq), s = std::sin(xim_arg * lq);
        xre = a * c + b * c;
        xim = a * s - b * s;
    }

    Table tbl;
    tbl.header = {"d", "mu_re", "mu_im", "hermite_re", "hermite_im", "poch", "qbinom"};
    std::vector<std::string> jrows;
    for (long d = 0; d <= dmax; ++d) {
        double mre, mim, hre, him, pre, pim, qb;
        check(qgm_chebyshev_mu(d, xre, xim, &mre, &mim), "chebyshev_mu");
        check(qgm_q_hermite(d, xre, xim, q, &hre, &him), "q_hermite");
        check(qgm_q_pochhammer(q, 0.0, q, d, &pre, &pim), "q_pochhammer");
        check(qgm_q_binomial(dmax, d, q, &qb), "q_binomial");
        tbl.rows.push_back({std::to_string(d), fnum(mre), fnum(mim), fnum(hre),
                            fnum(him), fnum(pre), fnum(qb)});
        JsonObject row;
        row.field("d", std::to_string(d));
        row.field("mu", jpair(mre, mim));
        row.field("hermite", jpair(hre, him));
        row.field("poch", fnum(pre));
        row.field("qbinom", fnum(qb));
        jrows.push_back(row.str());
    }

    if (fmt == Format::json) {
        JsonObject obj;
        obj.field("q", fnum(q));
        obj.field("t_or_z", render_z(z));
        obj.field("x", jpair(xre, xim));
        obj.field("d_max", std::to_string(dmax));
        obj.field("rows", jarray(jrows));
        std::cout << obj.str() << "\n";
    } else {
        tbl.print(fmt);
    }
    return 0;
}

// ---------------------------------------------------------------- multiplier

int cmd_multiplier(double q, const ZArg& z, long dmax, long power, Format fmt) {
    require_q(q);
    std::vector<double> bre(dmax + 1), bim(dmax + 1);
    for (long d = 0; d <= dmax; ++d)
        check(qgm_b_coeff(q, z.re, z.im, d, &bre[d], &bim[d]), "b_coeff");

    qgm_summability* sum = nullptr;
    if (z.is_real() && z.re > 0.0 && z.re < 1.0)
        check(qgm_summability_run(q, z.re, power, dmax, &sum), "summability");

    if (fmt == Format::json) {
        std::vector<std::string> bvals;
        for (long d = 0; d <= dmax; ++d)
            bvals.push_back(z.is_real() ? fnum(bre[d]) : jpair(bre[d], bim[d]));
        JsonObject obj;
        obj.field("q", fnum(q));
        obj.field("t_or_z", render_z(z));
        obj.field("power", std::to_string(power));
        obj.field("d_max", std::to_string(dmax));
        obj.field("b_values", jarray(bvals));
        if (sum) {
            std::vector<std::string> terms, psums;
            for (long d = 0; d < qgm_summability_count(sum); ++d) {
                terms.push_back(fnum(qgm_summability_term(sum, d)));
                psums.push_back(fnum(qgm_summability_partial_sum(sum, d)));
            }
            JsonObject rep;
            rep.field("q", fnum(q));
            rep.field("t_or_z", fnum(z.re));
            rep.field("power", std::to_string(power));
            rep.field("d_max", std::to_string(dmax));
            rep.field("terms", jarray(terms));
            rep.field("partial_sums", jarray(psums));
            rep.field("limiting_ratio", fnum(qgm_summability_limiting_ratio(sum)));
            rep.field("converges", jbool(qgm_summability_converges(sum) != 0));
            obj.field("summability", rep.str());
        }
        std::cout << obj.str() << "\n";
    } else {
        Table tbl;
        tbl.header = {"d", "b_re", "b_im"};
        if (sum) {
            tbl.header.push_back("term");
            tbl.header.push_back("partial_sum");
        }
        for (long d = 0; d <= dmax; ++d) {
            std::vector<std::string> row{std::to_string(d), fnum(bre[d]), fnum(bim[d])};
            if (sum) {
                row.push_back(fnum(qgm_summability_term(sum, d)));
                row.push_back(fnum(qgm_summability_partial_sum(sum, d)));
            }
            tbl.rows.push_back(std::move(row));
        }
        tbl.print(fmt);
        if (sum && fmt == Format::text)
            std::cout << "limiting_ratio = " << fnum(qgm_summability_limiting_ratio(sum))
                      << ", converges = "
                      << (qgm_summability_converges(sum) ? "true" : "false") << "\n";
    }
    if (sum) qgm_summability_free(sum);
    return 0;
}

// ---------------------------------------------------------------- eigen

int cmd_eigen(double q, const ZArg& z, long ntr, Format fmt) {
    require_q(q);
    qgm_eta* eta = nullptr;
    check(qgm_eta_compute(q, z.re, z.im, ntr, &eta), "eta");
    double evr, evi, cre, cim;
    qgm_eta_eigenvalue(eta, &evr, &evi);
    qgm_eta_c_z(eta, &cre, &cim);
    const double rv = qgm_eta_residual_valid_rows(eta);
    const double rf = qgm_eta_residual_full(eta);
    const double tail = qgm_eta_tail_bound(eta);
    qgm_eta_free(eta);

    if (fmt == Format::json) {
        JsonObject obj;
        obj.field("q", fnum(q));
        obj.field("t_or_z", render_z(z));
        obj.field("n_tr", std::to_string(ntr));
        obj.field("eigenvalue", jpair(evr, evi));
        obj.field("c_z", jpair(cre, cim));
        obj.field("tail_bound", fnum(tail));
        obj.field("residual_valid_rows", fnum(rv));
        obj.field("residual_full", fnum(rf));
        std::cout << obj.str() << "\n";
    } else {
        Table tbl;
        tbl.header = {"quantity", "value"};
        tbl.rows = {{"eigenvalue_re", fnum(evr)},
                    {"eigenvalue_im", fnum(evi)},
                    {"c_z_re", fnum(cre)},
                    {"c_z_im", fnum(cim)},
                    {"tail_bound", fnum(tail)},
                    {"residual_valid_rows", fnum(rv)},
                    {"residual_full", fnum(rf)}};
        tbl.print(fmt);
    }
    return 0;
}

// ---------------------------------------------------------------- theta

int cmd_theta(double q, const ZArg& z, long dmax, long ntr, Format fmt) {
    require_q(q);
    if (ntr == 0) check(qgm_theta_min_truncation(q, z.re, z.im, dmax, &ntr), "theta");
    qgm_theta* th = nullptr;
    check(qgm_theta_compute(q, z.re, z.im, dmax, ntr, &th), "theta");
    double cre, cim;
    qgm_theta_c_z(th, &cre, &cim);

    Table tbl;
    tbl.header = {"d", "theta_re", "theta_im", "b_re", "b_im", "rel_err"};
    std::vector<std::string> jrows;
    for (long d = 0; d <= dmax; ++d) {
        double tre, tim, bre, bim;
        qgm_theta_value(th, d, &tre, &tim);
        check(qgm_b_coeff(q, z.re, z.im, d, &bre, &bim), "b_coeff");
        // theta/c_z against the closed-form coefficient
        const double den = cre * cre + cim * cim;
        const double nre = (tre * cre + tim * cim) / den;
        const double nim = (tim * cre - tre * cim) / den;
        const double err = std::hypot(nre - bre, nim - bim) /
                           std::max(1e-300, std::hypot(bre, bim));
        tbl.rows.push_back({std::to_string(d), fnum(tre), fnum(tim), fnum(bre),
                            fnum(bim), fnum(err)});
        JsonObject row;
        row.field("d", std::to_string(d));
        row.field("theta", jpair(tre, tim));
        row.field("b", jpair(bre, bim));
        row.field("rel_err", fnum(err));
        jrows.push_back(row.str());
    }
    qgm_theta_free(th);

    if (fmt == Format::json) {
        JsonObject obj;
        obj.field("q", fnum(q));
        obj.field("t_or_z", render_z(z));
        obj.field("d_max", std::to_string(dmax));
        obj.field("n_tr", std::to_string(ntr));
        obj.field("c_z", jpair(cre, cim));
        obj.field("rows", jarray(jrows));
        std::cout << obj.str() << "\n";
    } else {
        tbl.print(fmt);
    }
    return 0;
}

// ---------------------------------------------------------------- fusion

int cmd_fusion(double q, std::optional<std::pair<long, long>> spins,
               std::optional<std::pair<std::string, std::string>> words,
               std::optional<long> table_n, long dmax, Format fmt) {
    require_q(q);
    if (!spins && !words && !table_n)
        config_error("fusion: request --spin-a/--spin-b, --word-a/--word-b or --N");

    JsonObject obj;
    obj.field("q", fnum(q));
    Table tbl;

    const auto fusion_terms = [&](qgm_fusion* f) {
        std::vector<std::string> jterms;
        char label[256];
        long long mult = 0;
        for (long i = 0; i < qgm_fusion_count(f); ++i) {
            check(qgm_fusion_term(f, i, label, sizeof label, &mult), "fusion_term");
            JsonObject term;
            term.field("label", jstr(label));
            term.field("mult", std::to_string(mult));
            jterms.push_back(term.str());
            tbl.rows.push_back({label, std::to_string(mult)});
        }
        return jarray(jterms);
    };

    if (spins) {
        qgm_fusion* f = nullptr;
        check(qgm_fuse_spins(spins->first, spins->second, &f), "fuse_spins");
        tbl.header = {"label", "mult"};
        JsonObject sec;
        sec.field("a", std::to_string(spins->first));
        sec.field("b", std::to_string(spins->second));
        sec.field("terms", fusion_terms(f));
        double qa, qb;
        check(qgm_qdim_spin(spins->first, q, &qa), "qdim");
        check(qgm_qdim_spin(spins->second, q, &qb), "qdim");
        sec.field("qdim_a", fnum(qa));
        sec.field("qdim_b", fnum(qb));
        obj.field("spins", sec.str());
        qgm_fusion_free(f);
    }

    if (words) {
        qgm_fusion* f = nullptr;
        check(qgm_fuse_words(words->first.c_str(), words->second.c_str(), &f),
              "fuse_words");
        tbl.header = {"label", "mult"};
        JsonObject sec;
        sec.field("a", jstr(words->first));
        sec.field("b", jstr(words->second));
        sec.field("terms", fusion_terms(f));
        double qa, qb;
        check(qgm_qdim_word(words->first.c_str(), q, &qa), "qdim");
        check(qgm_qdim_word(words->second.c_str(), q, &qb), "qdim");
        sec.field("qdim_a", fnum(qa));
        sec.field("qdim_b", fnum(qb));
        obj.field("words", sec.str());
        qgm_fusion_free(f);
    }

    if (table_n) {
        qgm_dim_table* dt = nullptr;
        check(qgm_dim_table_compute(q, *table_n, dmax, &dt), "dim_table");
        tbl.header = {"d", "dim", "dim_q", "char_state", "char_state_over_norm"};
        tbl.rows.clear();
        std::vector<std::string> jrows;
        for (long d = 0; d <= dmax; ++d) {
            tbl.rows.push_back({std::to_string(d), fnum(qgm_dim_table_dim(dt, d)),
                                fnum(qgm_dim_table_dim_q(dt, d)),
                                fnum(qgm_dim_table_char_state(dt, d)),
                                fnum(qgm_dim_table_char_state_over_norm(dt, d))});
            JsonObject row;
            row.field("d", std::to_string(d));
            row.field("dim", fnum(qgm_dim_table_dim(dt, d)));
            row.field("dim_q", fnum(qgm_dim_table_dim_q(dt, d)));
            row.field("char_state", fnum(qgm_dim_table_char_state(dt, d)));
            row.field("char_state_over_norm",
                      fnum(qgm_dim_table_char_state_over_norm(dt, d)));
            jrows.push_back(row.str());
        }
        JsonObject sec;
        sec.field("n", std::to_string(*table_n));
        sec.field("diverges", jbool(qgm_dim_table_diverges(dt) != 0));
        sec.field("rows", jarray(jrows));
        obj.field("dim_table", sec.str());
        qgm_dim_table_free(dt);
    }

    if (fmt == Format::json)
        std::cout << obj.str() << "\n";
    else
        tbl.print(fmt);
    return 0;
}

// ---------------------------------------------------------------- structure

std::vector<double> load_matrix(const std::string& path, long& n) {
    std::ifstream in(path);
    if (!in) config_error("cannot open matrix file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();

    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) config_error("matrix file is empty");

    std::vector<double> flat;
    if (text[first] == '{') {
        nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded() || !j.contains("n") || !j.contains("rows"))
            config_error("matrix JSON must be {\"n\": N, \"rows\": [[[re,im],...],...]}");
        n = j["n"].get<long>();
        const auto& rows = j["rows"];
        if (static_cast<long>(rows.size()) != n)
            config_error("matrix JSON: row count does not match n");
        for (const auto& row : rows) {
            if (static_cast<long>(row.size()) != n)
                config_error("matrix JSON: column count does not match n");
            for (const auto& cell : row) {
                if (!cell.is_array() || cell.size() != 2)
                    config_error("matrix JSON: entries must be [re, im] pairs");
                flat.push_back(cell[0].get<double>());
                flat.push_back(cell[1].get<double>());
            }
        }
        return flat;
    }

    // CSV: one row per line, either n real values or 2n interleaved re,im.
    std::vector<std::vector<double>> rows;
    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
        std::vector<double> vals;
        std::stringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ','))
            try {
                vals.push_back(std::stod(cell));
            } catch (const std::exception&) {
                config_error("matrix CSV: bad number '" + cell + "'");
            }
        rows.push_back(std::move(vals));
    }
    n = static_cast<long>(rows.size());
    for (const auto& row : rows) {
        const long len = static_cast<long>(row.size());
        if (len != n && len != 2 * n)
            config_error("matrix CSV: each row needs n or 2n values");
        for (long j = 0; j < n; ++j) {
            flat.push_back(len == n ? row[j] : row[2 * j]);
            flat.push_back(len == n ? 0.0 : row[2 * j + 1]);
        }
    }
    return flat;
}

int cmd_structure(const std::string& matrix_path, long max_exponent,
                  std::optional<double> sd_target, Format fmt) {
    long n = 0;
    const std::vector<double> flat = load_matrix(matrix_path, n);
    qgm_fprofile* p = nullptr;
    check(qgm_profile_compute(n, flat.data(), &p), "profile");

    std::vector<double> eigs(qgm_profile_q_eigenvalue_count(p));
    qgm_profile_q_eigenvalues(p, eigs.data(), static_cast<long>(eigs.size()));
    std::vector<double> gens(qgm_profile_sd_generator_count(p));
    if (!gens.empty())
        qgm_profile_sd_generators(p, gens.data(), static_cast<long>(gens.size()));

    std::optional<bool> member;
    if (sd_target) {
        if (gens.empty()) {
            member = std::abs(*sd_target - 1.0) < 1e-9;
        } else {
            int m = 0;
            check(qgm_subgroup_member(gens.data(), static_cast<long>(gens.size()),
                                      *sd_target, max_exponent, &m),
                  "subgroup_member");
            member = m != 0;
        }
    }

    const std::string ortho = qgm_profile_orthogonal_case(p);

    if (fmt == Format::json) {
        JsonObject obj;
        obj.field("n", std::to_string(qgm_profile_n(p)));
        obj.field("input_trace_ffstar", fnum(qgm_profile_input_trace(p)));
        obj.field("input_trace_inv", fnum(qgm_profile_input_trace_inv(p)));
        obj.field("normalized", jbool(qgm_profile_normalized(p) != 0));
        obj.field("scale", fnum(qgm_profile_scale(p)));
        obj.field("trace_ffstar", fnum(qgm_profile_trace_ffstar(p)));
        obj.field("q_param", fnum(qgm_profile_q_param(p)));
        obj.field("orthogonal_case", jstr(ortho));
        if (ortho == "no")
            obj.field("free_product_advisory",
                      jstr("F Fbar is not scalar: the associated quantum group "
                           "decomposes as a nontrivial free product"));
        std::vector<std::string> je, jg;
        for (double v : eigs) je.push_back(fnum(v));
        for (double v : gens) jg.push_back(fnum(v));
        obj.field("q_eigenvalues", jarray(je));
        obj.field("sd_generators", jarray(jg));
        JsonObject ninj;
        ninj.field("noninjective", jbool(qgm_profile_noninjective(p) != 0));
        ninj.field("lhs", fnum(qgm_profile_noninjective_lhs(p)));
        ninj.field("rhs", fnum(qgm_profile_noninjective_rhs(p)));
        obj.field("noninjectivity", ninj.str());
        if (member) obj.field("sd_member", jbool(*member));
        std::cout << obj.str() << "\n";
    } else {
        Table tbl;
        tbl.header = {"quantity", "value"};
        tbl.rows = {{"n", std::to_string(qgm_profile_n(p))},
                    {"normalized", qgm_profile_normalized(p) ? "true" : "false"},
                    {"scale", fnum(qgm_profile_scale(p))},
                    {"trace_ffstar", fnum(qgm_profile_trace_ffstar(p))},
                    {"q_param", fnum(qgm_profile_q_param(p))},
                    {"orthogonal_case", ortho},
                    {"noninjective", qgm_profile_noninjective(p) ? "true" : "false"}};
        for (std::size_t i = 0; i < gens.size(); ++i)
            tbl.rows.push_back({"sd_generator_" + std::to_string(i), fnum(gens[i])});
        if (member) tbl.rows.push_back({"sd_member", *member ? "true" : "false"});
        tbl.print(fmt);
    }
    qgm_profile_free(p);
    return 0;
}

// ---------------------------------------------------------------- schedule

int cmd_schedule(double delta, Format fmt) {
    long n = 0;
    double r, eps, tail, block;
    check(qgm_schedule_plan(delta, &n, &r, &eps, &tail, &block), "schedule");
    if (fmt == Format::json) {
        JsonObject obj;
        obj.field("delta", fnum(delta));
        obj.field("N", std::to_string(n));
        obj.field("r", fnum(r));
        obj.field("eps", fnum(eps));
        obj.field("tail_bound", fnum(tail));
        obj.field("block_error", fnum(block));
        std::cout << obj.str() << "\n";
    } else {
        Table tbl;
        tbl.header = {"quantity", "value"};
        tbl.rows = {{"delta", fnum(delta)}, {"N", std::to_string(n)},
                    {"r", fnum(r)},         {"eps", fnum(eps)},
                    {"tail_bound", fnum(tail)}, {"block_error", fnum(block)}};
        tbl.print(fmt);
    }
    return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(unsigned long long seed, Format fmt) {
    qgm_verify* v = nullptr;
    check(qgm_verify_run(seed, &v), "verify");
    const long count = qgm_verify_count(v);
    bool all = true;

    if (fmt == Format::json) {
        std::vector<std::string> jrows;
        for (long i = 0; i < count; ++i) {
            const bool ok = qgm_verify_passed(v, i) != 0;
            all = all && ok;
            JsonObject row;
            row.field("check", jstr(qgm_verify_name(v, i)));
            row.field("residual", fnum(qgm_verify_residual(v, i)));
            row.field("tolerance", fnum(qgm_verify_tolerance(v, i)));
            row.field("passed", jbool(ok));
            jrows.push_back(row.str());
        }
        JsonObject obj;
        obj.field("seed", std::to_string(seed));
        obj.field("checks", jarray(jrows));
        obj.field("all_passed", jbool(all));
        std::cout << obj.str() << "\n";
    } else {
        Table tbl;
        tbl.header = {"status", "residual", "tolerance", "check"};
        for (long i = 0; i < count; ++i) {
            const bool ok = qgm_verify_passed(v, i) != 0;
            all = all && ok;
            tbl.rows.push_back({ok ? "PASS" : "FAIL", fnum(qgm_verify_residual(v, i)),
                                fnum(qgm_verify_tolerance(v, i)), qgm_verify_name(v, i)});
        }
        tbl.print(fmt);
        std::cout << (all ? "all checks passed" : "FAILURES present") << "\n";
    }
    qgm_verify_free(v);
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"central multiplier and fusion-ring toolkit for free quantum groups"};
    app.require_subcommand(1);

    double q = 0.5;
    std::string z_str = "0";
    long dmax = 16, ntr = 0, power = 3, max_exponent = 4;
    double delta = 0.1;
    unsigned long long seed = 1;
    std::string format = "json", matrix_path;
    long spin_a = -1, spin_b = -1, table_n = 0;
    std::string word_a = "\x01", word_b = "\x01"; // sentinel: flag not given
    double sd_target = 0.0;
    bool sd_target_given = false;

    const auto add_common = [&](CLI::App* sub, bool with_q = true) {
        if (with_q) sub->add_option("--q", q, "deformation parameter, 0 < |q| < 1");
        sub->add_option("--t,--z", z_str, "spectral parameter t, or z as re,im");
        sub->add_option("--format", format, "json, csv or text");
    };

    auto* sp = app.add_subcommand("special", "special-function table");
    add_common(sp);
    sp->add_option("--dmax", dmax, "largest degree");

    auto* mu = app.add_subcommand("multiplier", "multiplier coefficients and summability");
    add_common(mu);
    mu->add_option("--dmax", dmax, "largest degree");
    mu->add_option("--power", power, "power of the multiplier in the budget");

    auto* ei = app.add_subcommand("eigen", "Jacobi eigenvector certification");
    add_common(ei);
    ei->add_option("--ntr", ntr, "truncation size")->default_val(200);

    auto* th = app.add_subcommand("theta", "central functional values");
    add_common(th);
    th->add_option("--dmax", dmax, "largest degree");
    th->add_option("--ntr", ntr, "truncation size (0 = automatic)");

    auto* fu = app.add_subcommand("fusion", "fusion decompositions and dimension tables");
    add_common(fu);
    fu->add_option("--spin-a", spin_a, "doubled spin of the first factor");
    fu->add_option("--spin-b", spin_b, "doubled spin of the second factor");
    fu->add_option("--word-a", word_a, "first word over letters a,b");
    fu->add_option("--word-b", word_b, "second word over letters a,b");
    fu->add_option("--N", table_n, "classical dimension for the growth table");
    fu->add_option("--dmax", dmax, "largest degree");

    auto* st = app.add_subcommand("structure", "defining-matrix diagnostics");
    st->add_option("--matrix", matrix_path, "matrix file (JSON or CSV)")->required();
    st->add_option("--max-exponent", max_exponent, "subgroup search bound");
    st->add_option("--sd-target", sd_target, "test membership of this value");
    st->add_option("--format", format, "json, csv or text");

    auto* sc = app.add_subcommand("schedule", "free-product truncation schedule");
    sc->add_option("--delta", delta, "total error budget in (0,1)")->required();
    sc->add_option("--format", format, "json, csv or text");

    auto* ve = app.add_subcommand("verify", "run the invariant suite");
    ve->add_option("--seed", seed, "seed for randomized checks");
    ve->add_option("--format", format, "json, csv or text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    sd_target_given = st->count("--sd-target") > 0;
    const Format fmt = parse_format(format);
    const ZArg z = parse_z(z_str);

    if (sp->parsed()) return cmd_special(q, z, dmax, fmt);
    if (mu->parsed()) return cmd_multiplier(q, z, dmax, power, fmt);
    if (ei->parsed()) return cmd_eigen(q, z, ntr, fmt);
    if (th->parsed()) return cmd_theta(q, z, dmax, ntr, fmt);
    if (fu->parsed()) {
        std::optional<std::pair<long, long>> spins;
        if (spin_a >= 0 || spin_b >= 0) {
            if (spin_a < 0 || spin_b < 0)
                config_error("fusion: --spin-a and --spin-b go together");
            spins = {spin_a, spin_b};
        }
        std::optional<std::pair<std::string, std::string>> words;
        if (word_a != "\x01" || word_b != "\x01") {
            if (word_a == "\x01" || word_b == "\x01")
                config_error("fusion: --word-a and --word-b go together");
            words = {word_a, word_b};
        }
        std::optional<long> tn;
        if (table_n > 0) tn = table_n;
        return cmd_fusion(q, spins, words, tn, dmax, fmt);
    }
    if (st->parsed())
        return cmd_structure(matrix_path, max_exponent,
                             sd_target_given ? std::optional<double>(sd_target)
                                             : std::nullopt,
                             fmt);
    if (sc->parsed()) return cmd_schedule(delta, fmt);
    if (ve->parsed()) return cmd_verify(seed, fmt);
    return 2;
}
