#ifndef QGMULT_CORE_STRUCTURE_HPP
#define QGMULT_CORE_STRUCTURE_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace qgm::structure {

class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class OrthogonalCase { plus, minus, no };

const char* to_string(OrthogonalCase c);

/// Structural profile of a defining matrix F.
///
/// The stored F is the rescaled copy lambda F with
/// Tr(FF*) = Tr((FF*)^{-1}); q_param in (0, 1] is extracted from
/// q + 1/q = Tr(FF*), and Q is the trace-balanced positive multiple
/// of FF*.
struct FMatrixProfile {
    Eigen::MatrixXcd F;                 ///< rescaled
    long n = 0;
    double input_trace = 0.0;           ///< Tr(FF*) of the input
    double input_trace_inv = 0.0;       ///< Tr((FF*)^{-1}) of the input
    bool normalized = false;            ///< input already balanced within 1e-10
    double scale = 1.0;                 ///< lambda applied to the input
    double trace_ffstar = 0.0;          ///< balanced trace
    double trace_inv = 0.0;             ///< equals trace_ffstar after rescale
    double q_param = 1.0;
    Eigen::MatrixXcd Q;
    std::vector<double> q_eigenvalues;  ///< ascending
    std::vector<double> sd_generators;  ///< see sd_generators()
    OrthogonalCase orthogonal_case = OrthogonalCase::no;
};

/// Builds the profile; rejects singular or ill-conditioned input
/// (condition number >= 1e12).
FMatrixProfile profile(const Eigen::MatrixXcd& f);

struct NoninjectivityVerdict {
    bool noninjective;  ///< true iff N^2 > Tr(FF*) + 2 strictly
    double lhs;         ///< N^2
    double rhs;         ///< Tr(FF*) + 2
};

NoninjectivityVerdict noninjectivity_check(const FMatrixProfile& p);

/// Pairwise eigenvalue products of Q (the spectrum of Q (x) Q),
/// deduplicated at relative 1e-10 and with 1 removed; ascending.
std::vector<double> sd_generators(const FMatrixProfile& p);

/// Bounded membership test in the multiplicative subgroup of R_+*
/// generated by `generators`: searches integer exponent vectors with
/// |e_i| <= max_exponent. Sound but incomplete.
bool subgroup_member(const std::vector<double>& generators, double target,
                     long max_exponent);

} // namespace qgm::structure

#endif
