#pragma once

#include <span>
#include <string>
#include <vector>

#include "specdiag/coefficients.hpp"
#include "specdiag/quadrature.hpp"

namespace specdiag {

enum class FamilyKind { Torus, Jacobi, Hermite, Laguerre, Custom };

// User-supplied diagonalizing family: pointwise evaluator, eigenvalue map,
// measure and a matching analysis quadrature rule. The rule must integrate
// products b_m * conj(b_n) against the measure exactly enough for the
// truncation degree in use; the toolkit does not construct it.
struct CustomBasis {
    std::string name = "custom";
    std::function<Complex(int, double)> eval;
    std::function<Complex(int)> eigenvalue;
    WeightSpec measure;
    QuadratureRule analysis_rule;
    IndexKind index_kind = IndexKind::Naturals;
};

// Descriptor of a diagonalizing family: torus exponentials for P(d/dt),
// normalized Jacobi polynomials, Hermite functions, normalized Laguerre
// functions, or a custom plug-in.
class BasisFamily {
public:
    // P given by ascending complex coefficients; eigenvalues P(in).
    static BasisFamily torus(std::vector<Complex> poly);
    static BasisFamily jacobi(double alpha, double beta);
    static BasisFamily hermite();
    static BasisFamily laguerre(double alpha);
    static BasisFamily custom(CustomBasis handles);

    FamilyKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    Interval domain() const;
    IndexKind index_kind() const noexcept {
        return kind_ == FamilyKind::Torus
                   ? IndexKind::Integers
                   : (kind_ == FamilyKind::Custom ? custom_.index_kind
                                                  : IndexKind::Naturals);
    }

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    const std::vector<Complex>& poly() const noexcept { return poly_; }
    const CustomBasis& custom_handles() const { return custom_; }

    // The L^p measure of the family's function space (w == 1 for
    // Hermite/Laguerre, dt/2pi for the torus, the beta weight for Jacobi).
    WeightSpec measure() const;

private:
    BasisFamily() = default;
    FamilyKind kind_ = FamilyKind::Torus;
    std::string name_;
    double alpha_ = 0.0;
    double beta_ = 0.0;
    std::vector<Complex> poly_;
    CustomBasis custom_;
};

// Basis function value b_n(t).
Complex eval_basis(const BasisFamily& b, int n, double t);

// All values b_n(t) for n in the truncated index set of degree N, in dense
// index order (one recurrence pass).
std::vector<Complex> eval_basis_all(const BasisFamily& b, int N, double t);

EigenvalueMap eig_map(const BasisFamily& b);

// binom(n + max(alpha, beta), n), the uniform sup bound for the
// unnormalized Jacobi polynomial; valid for max(alpha, beta) >= -1/2.
double jacobi_sup_bound(int n, double alpha, double beta);

// Normalization constant turning P_n^(alpha,beta) into the orthonormal
// polynomial (computed via log-Gamma).
double jacobi_normalization(int n, double alpha, double beta);

// Unnormalized P_n^(alpha,beta)(t), standardized by P_n(1) = binom(n+alpha,n).
double jacobi_poly_unnormalized(int n, double alpha, double beta, double t);

// Real-valued fast paths used by quadrature fusion; out has size N+1.
void jacobi_normalized_all(int N, double alpha, double beta, double t,
                           std::span<double> out);
void hermite_function_all(int N, double t, std::span<double> out);
void laguerre_function_all(int N, double alpha, double t, std::span<double> out);

// Normalized Laguerre polynomial part: l_n(t) without the exp(-t/2) t^{a/2}
// envelope. Defined for every real t.
void laguerre_polypart_all(int N, double alpha, double t,
                           std::span<double> out);

// (||b_0||_p, ..., ||b_N||_p) against the family measure.
std::vector<double> basis_norm_sequence(const BasisFamily& b, double p, int N);

}  // namespace specdiag
