#pragma once

// The variety A_{m,n} = {(z,w) in D^2 : z^m = w^n} with its parametrization
// p(lambda) = (lambda^n, lambda^m), the inverse q(z,w) = z^k w^l, the gap
// set of the numerical semigroup <m,n>, coefficient masks for the
// constrained function class, and tangent vectors.

#include "neil/disc.hpp"

#include <optional>
#include <vector>

namespace neil {

struct NotCoprimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OrderViolationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OffVarietyError : std::domain_error {
    using std::domain_error::domain_error;
};

// integer power by binary exponentiation; cpow_int(z, 0) = 1, negative
// exponents as reciprocal powers
cplx cpow_int(cplx base, long e);

class ParabolaParams {
public:
    static ParabolaParams make(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    // k*n + l*m = 1 with 0 <= k < m for m >= 2 (k = 0, l = 1 for m = 1)
    long k() const { return k_; }
    long l() const { return l_; }
    const std::vector<int>& gap_set() const { return gap_set_; }
    std::optional<int> frobenius() const { return frobenius_; }
    bool in_gap_set(int s) const;

private:
    ParabolaParams() = default;
    int m_ = 1, n_ = 1;
    long k_ = 0, l_ = 1;
    std::vector<int> gap_set_;
    std::optional<int> frobenius_;
};

inline ParabolaParams make_params(int m, int n) { return ParabolaParams::make(m, n); }

struct ParabolaPoint {
    DiscPoint lambda;
    cplx z{0.0, 0.0};  // lambda^n
    cplx w{0.0, 0.0};  // lambda^m
};

struct Tangent {
    cplx X1{0.0, 0.0};
    cplx X2{0.0, 0.0};
    ParabolaPoint base;
};

ParabolaPoint parametrize(const ParabolaParams& p, DiscPoint lambda);

// relative residual |z^m - w^n| / max(|z|^m, |w|^n, 1e-300)
double off_variety_residual(const ParabolaParams& p, cplx z, cplx w);

// q(z,w) = z^k w^l away from the origin, 0 at the origin; rejects points
// with off-variety residual above 1e-10
DiscPoint invert(const ParabolaParams& p, cplx z, cplx w);

// entry j is true (coefficient forced to zero) iff j is in the gap set
// (unshifted) or j + m is (shifted form, for h with f o p = lambda^m h)
std::vector<bool> coefficient_mask(const ParabolaParams& p, int N, bool shifted_by_m);

// scale * p'(lambda) = scale * (n lambda^{n-1}, m lambda^{m-1})
Tangent tangent_at(const ParabolaParams& p, DiscPoint lambda, cplx scale);

}  // namespace neil
