#pragma once

// Schur-class coefficient machinery: truncated Taylor prefixes with
// forced-zero masks, the upper-triangular Toeplitz test matrix, Hermitian
// eigenvalues by cyclic Jacobi, the explicit region C of admissible
// (|a0|^2, |a1|^2) pairs, and sup-norm normalization of masked polynomials
// into the closed-disc Schur class.

#include "neil/parabola.hpp"

#include <vector>

namespace neil {

// prefix (a_0, ..., a_N); masked entries are forced to exactly zero
struct SchurPrefix {
    SchurPrefix(std::vector<cplx> c, std::vector<bool> msk);
    explicit SchurPrefix(std::vector<cplx> c);

    std::vector<cplx> coeffs;
    std::vector<bool> mask;

    int order() const { return static_cast<int>(coeffs.size()); }  // N+1
};

// M[i][i+j] = a_j, zero below the diagonal
struct ToeplitzUpper {
    int order = 0;
    std::vector<cplx> entries;  // row-major, order x order

    cplx at(int i, int j) const { return entries[static_cast<std::size_t>(i) * order + j]; }
};

ToeplitzUpper toeplitz_from_prefix(const SchurPrefix& p);

// I - M*M for the prefix's Toeplitz matrix (Hermitian, row-major)
std::vector<cplx> schur_gram(const std::vector<cplx>& coeffs);

// eigenvalues of a Hermitian matrix by cyclic Jacobi rotations; intended for
// the small matrices of this project (order <= 64)
std::vector<double> hermitian_eigenvalues(std::vector<cplx> A, int n);
double hermitian_min_eigenvalue(std::vector<cplx> A, int n);

struct Feasibility {
    bool feasible = false;
    double margin = 0.0;  // minimum eigenvalue of I - M*M
};

// a Schur function with the given Taylor prefix exists iff I - M*M >= 0;
// margins above -1e-12 count as feasible
Feasibility schur_feasible(const SchurPrefix& p);

// region C = {(a,b) in R_+^2 : b <= (1-a)(1-sqrt(a)), a <= 1}; coincides
// with 3x3 feasibility of the prefix (sqrt(a), sqrt(b), 0)
bool region_C_membership(double a, double b);

// sufficient condition 2 cos(pi/(n+1)) |ab| <= 1 - a^2 - b^2 for a Schur
// function a + b z + o(z^{n-1}); cos(pi/(n+1)) is the largest eigenvalue of
// the quadratic form sum X_{j-1} X_j on R^n
bool two_coeff_sufficient(double a, double b, int n);

cplx horner(const std::vector<cplx>& coeffs, cplx z);
cplx horner_deriv(const std::vector<cplx>& coeffs, cplx z);

// sup of |p| on |z| = 1: grid scan plus golden-section refinement of the
// leading local maxima
double boundary_sup(const std::vector<cplx>& coeffs, int grid_points = 4096);

// masked polynomial scaled into the closed-disc Schur class
class SchurFunction {
public:
    SchurFunction(std::vector<cplx> scaled, double divisor)
        : coeffs_(std::move(scaled)), divisor_(divisor) {}

    cplx eval(cplx z) const { return horner(coeffs_, z); }
    cplx deriv(cplx z) const { return horner_deriv(coeffs_, z); }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    double divisor() const { return divisor_; }

private:
    std::vector<cplx> coeffs_;
    double divisor_ = 1.0;
};

// divides by the boundary sup (4096-point grid, refined) times a 1+1e-9
// safety factor; polynomials already inside the closed class are returned
// unchanged, so admissible extremals are preserved exactly
SchurFunction normalize_to_schur(const std::vector<cplx>& coeffs);

}  // namespace neil
