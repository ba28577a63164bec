#pragma once

// Independent numerical oracles used to validate every closed form:
// extremal maximization over normalized masked polynomials for the
// Caratheodory distance and the Reiffen metric, feasibility-constrained
// search over Schur prefixes for origin metrics, the rho^(m) family, and
// curve-length minimization for the inner distance.  All values of
// supremum-type problems are certified lower bounds attained by explicit
// feasible functions.

#include "neil/closed_forms.hpp"
#include "neil/schur.hpp"

#include <cstdint>

namespace neil::oracle {

struct OracleConfig {
    int degree = -1;       // truncation N; -1 selects the per-operation default
    int starts = 64;
    std::uint64_t seed = 0;
    int max_evals = -1;    // Nelder-Mead budget per start; -1 per-operation default
    bool parallel = true;
};

struct OracleResult {
    double value = 0.0;
    std::vector<double> argmax;  // optimizer parameter vector achieving value
    long evaluations = 0;
    bool converged = false;
};

// N = max(nm - m - n, 8) + 4: covers all mask indices with headroom
int default_degree(const ParabolaParams& p);

// sup of m_D(h(lambda), h(mu)) over normalized masked polynomials of degree
// N; value in the m_D scale (atanh for the distance)
OracleResult caratheodory_lower(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu,
                                const OracleConfig& cfg = {});

// re-evaluates the returned argmax through the public normalization path
double caratheodory_value_at(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu,
                             const std::vector<double>& argmax, int degree = -1);

// max over alpha in D of rho(lambda^2 Phi_alpha(lambda), mu^2 Phi_alpha(mu)),
// merged continuously with the boundary family value rho(lambda^2, mu^2)
OracleResult knese_family_check(DiscPoint lambda, DiscPoint mu, const OracleConfig& cfg = {});

// sup of |h'(lambda)| / (1 - |h(lambda)|^2) over the same family; the
// monomial z^m is always among the starts and attains the closed form
OracleResult reiffen_lower(const ParabolaParams& p, DiscPoint lambda,
                           const OracleConfig& cfg = {});

double reiffen_value_at(const ParabolaParams& p, DiscPoint lambda,
                        const std::vector<double>& argmax, int degree = -1);

// max of |X1 a_{n-m} + X2 a_0| over shifted-mask Schur prefixes subject to
// I - M*M >= 0; homogeneous of degree one in X
OracleResult origin_gamma_lower(const ParabolaParams& p, cplx X1, cplx X2,
                                const OracleConfig& cfg = {});

double origin_gamma_value_at(const ParabolaParams& p, cplx X1, cplx X2,
                             const std::vector<double>& argmax, int degree = -1);

// feasibility margin of the boundary prefix behind an origin_gamma argmax
double origin_gamma_margin_at(const ParabolaParams& p, cplx X1, cplx X2,
                              const std::vector<double>& argmax, int degree = -1);

// rho^{(m)}(lambda, mu): max of rho(lambda^m z, mu^m w) over pairs with
// m_D(z, w) = m_D(lambda, mu) plus the unimodular family z = w on the circle
OracleResult rho_m(int m, DiscPoint lambda, DiscPoint mu, const OracleConfig& cfg = {});

// min over two curve families: the tracked m-th root of the Poincare
// geodesic (sector case) and the through-origin radial concatenation
OracleResult inner_length_oracle(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu,
                                 const OracleConfig& cfg = {});

// atanh(caratheodory_lower) / origin_gamma_lower(X_{lambda,mu}) with
// X_{lambda,mu} = (lambda^n - mu^n, lambda^m - mu^m); tends to 1 at 0
double origin_ratio(const ParabolaParams& p, DiscPoint lambda, DiscPoint mu,
                    const OracleConfig& cfg = {});

struct StrictPairNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StrictPair {
    DiscPoint lambda, mu;
    double c_value = 0.0;    // oracle lower bound, distance scale
    double rhs_value = 0.0;  // max(rho(l^m, mu^m), rho(l^{m+1}, mu^{m+1}))
};

// searches pairs near 0 with lambda^m - mu^m = lambda^n - mu^n != 0 until the
// Caratheodory lower bound strictly exceeds the right-hand side by 1e-6
StrictPair find_strict_points(const ParabolaParams& p, const OracleConfig& cfg = {});

struct InterpResult {
    bool found = false;
    double residual = 0.0;
};

// feasibility search for a masked Schur h on A_{2,2k+1} with h(lambda) = eta,
// h(-lambda) = zeta; residual is the larger interpolation defect in m_D
InterpResult masked_interpolation(int k, DiscPoint lambda, cplx eta, cplx zeta,
                                  const OracleConfig& cfg = {});

}  // namespace neil::oracle
