#include "core/structure.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace qgm::structure {

const char* to_string(OrthogonalCase c) {
    switch (c) {
        case OrthogonalCase::plus: return "plus";
        case OrthogonalCase::minus: return "minus";
        default: return "no";
    }
}

FMatrixProfile profile(const Eigen::MatrixXcd& f) {
    if (f.rows() != f.cols() || f.rows() < 2)
        throw std::invalid_argument("profile: F must be square of size >= 2");

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(f);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) >= 1e12)
        throw SingularMatrixError("profile: F is singular or ill-conditioned");

    FMatrixProfile p;
    p.n = f.rows();

    const Eigen::MatrixXcd ffstar = f * f.adjoint();
    p.input_trace = ffstar.trace().real();
    p.input_trace_inv = ffstar.inverse().trace().real();
    p.normalized = std::abs(p.input_trace - p.input_trace_inv) < 1e-10;

    // lambda^2 Tr(FF*) = lambda^{-2} Tr((FF*)^{-1})
    p.scale = std::pow(p.input_trace_inv / p.input_trace, 0.25);
    p.F = p.scale * f;
    p.Q = p.scale * p.scale * ffstar;
    p.trace_ffstar = std::sqrt(p.input_trace * p.input_trace_inv);
    p.trace_inv = p.trace_ffstar;

    const double tau = std::max(2.0, p.trace_ffstar);
    p.q_param = (tau - std::sqrt(tau * tau - 4.0)) / 2.0;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(p.Q, Eigen::EigenvaluesOnly);
    p.q_eigenvalues.assign(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());

    const Eigen::MatrixXcd ffbar = p.F * p.F.conjugate();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(p.n, p.n);
    if ((ffbar - id).cwiseAbs().maxCoeff() < 1e-10)
        p.orthogonal_case = OrthogonalCase::plus;
    else if ((ffbar + id).cwiseAbs().maxCoeff() < 1e-10)
        p.orthogonal_case = OrthogonalCase::minus;
    else
        p.orthogonal_case = OrthogonalCase::no;

    p.sd_generators = sd_generators(p);
    return p;
}

NoninjectivityVerdict noninjectivity_check(const FMatrixProfile& p) {
    NoninjectivityVerdict v;
    v.lhs = double(p.n) * double(p.n);
    v.rhs = p.trace_ffstar + 2.0;
    v.noninjective = v.lhs > v.rhs;
    return v;
}

std::vector<double> sd_generators(const FMatrixProfile& p) {
    std::vector<double> products;
    for (double a : p.q_eigenvalues)
        for (double b : p.q_eigenvalues) products.push_back(a * b);
    std::sort(products.begin(), products.end());

    std::vector<double> out;
    for (double v : products) {
        if (std::abs(v - 1.0) <= 1e-10) continue;
        if (!out.empty() && std::abs(v - out.back()) <= 1e-10 * std::abs(out.back()))
            continue;
        out.push_back(v);
    }
    return out;
}

bool subgroup_member(const std::vector<double>& generators, double target,
                     long max_exponent) {
    if (generators.empty())
        throw std::invalid_argument("subgroup_member: generators must be nonempty");
    if (!(target > 0.0))
        throw std::invalid_argument("subgroup_member: target must be > 0");
    if (max_exponent < 0)
        throw std::invalid_argument("subgroup_member: max_exponent must be >= 0");

    const std::size_t k = generators.size();
    const double radix = 2.0 * double(max_exponent) + 1.0;
    if (double(k) * std::log(radix) > std::log(1e8))
        throw std::invalid_argument("subgroup_member: exponent search space too large");

    std::vector<double> logs(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!(generators[i] > 0.0))
            throw std::invalid_argument("subgroup_member: generators must be > 0");
        logs[i] = std::log(generators[i]);
    }
    const double lt = std::log(target);

    std::vector<long> e(k, -max_exponent);
    for (;;) {
        double acc = 0.0;
        for (std::size_t i = 0; i < k; ++i) acc += double(e[i]) * logs[i];
        if (std::abs(acc - lt) < 1e-9) return true;
        std::size_t pos = 0;
        while (pos < k && e[pos] == max_exponent) e[pos++] = -max_exponent;
        if (pos == k) return false;
        ++e[pos];
    }
}

} // namespace qgm::structure
