#include "neil/parabola.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace neil {

cplx cpow_int(cplx base, long e) {
    if (e == 0) return cplx(1.0, 0.0);
    if (e < 0) return 1.0 / cpow_int(base, -e);
    cplx acc(1.0, 0.0);
    cplx b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        k >>= 1;
        if (k > 0) b *= b;
    }
    return acc;
}

ParabolaParams ParabolaParams::make(int m, int n) {
    if (m < 1 || m > n)
        throw OrderViolationError("ParabolaParams: need 1 <= m <= n");
    if (std::gcd(m, n) != 1)
        throw NotCoprimeError("ParabolaParams: m and n must be coprime");

    ParabolaParams p;
    p.m_ = m;
    p.n_ = n;

    // extended Euclid for x*n + y*m = 1, then normalize 0 <= k < m
    long r0 = n, r1 = m, x0 = 1, x1 = 0;
    while (r1 != 0) {
        const long q = r0 / r1;
        std::tie(r0, r1) = std::pair<long, long>(r1, r0 - q * r1);
        std::tie(x0, x1) = std::pair<long, long>(x1, x0 - q * x1);
    }
    long k = ((x0 % m) + m) % m;
    p.k_ = k;
    p.l_ = (1 - k * static_cast<long>(n)) / m;

    if (m >= 2) {
        const int frob = m * n - m - n;
        std::vector<char> rep(frob + 1, 0);
        rep[0] = 1;
        for (int s = 1; s <= frob; ++s)
            rep[s] = (s >= m && rep[s - m]) || (s >= n && rep[s - n]);
        for (int s = 1; s <= frob; ++s)
            if (!rep[s]) p.gap_set_.push_back(s);
        p.frobenius_ = frob;
    }
    return p;
}

bool ParabolaParams::in_gap_set(int s) const {
    return std::binary_search(gap_set_.begin(), gap_set_.end(), s);
}

ParabolaPoint parametrize(const ParabolaParams& p, DiscPoint lambda) {
    return {lambda, cpow_int(lambda.value(), p.n()), cpow_int(lambda.value(), p.m())};
}

double off_variety_residual(const ParabolaParams& p, cplx z, cplx w) {
    const cplx zm = cpow_int(z, p.m());
    const cplx wn = cpow_int(w, p.n());
    const double scale = std::max({std::abs(zm), std::abs(wn), 1e-300});
    return std::abs(zm - wn) / scale;
}

DiscPoint invert(const ParabolaParams& p, cplx z, cplx w) {
    if (!(std::abs(z) < 1.0) || !(std::abs(w) < 1.0))
        throw std::domain_error("invert: point outside the bidisc");
    if (off_variety_residual(p, z, w) > 1e-10)
        throw OffVarietyError("invert: z^m != w^n beyond tolerance");

    const double az = std::abs(z), aw = std::abs(w);
    if (az <= 1e-100 || aw <= 1e-100) return DiscPoint(0.0);

    cplx lam;
    if (az < 1e-8 || aw < 1e-8) {
        // log form avoids overflow in reciprocal powers near the singular point
        lam = std::exp(static_cast<double>(p.k()) * std::log(z) +
                       static_cast<double>(p.l()) * std::log(w));
    } else {
        lam = cpow_int(z, p.k()) * cpow_int(w, p.l());
    }
    return DiscPoint(lam);
}

std::vector<bool> coefficient_mask(const ParabolaParams& p, int N, bool shifted_by_m) {
    if (N < 0) throw std::invalid_argument("coefficient_mask: N must be >= 0");
    std::vector<bool> mask(N + 1, false);
    for (int j = 0; j <= N; ++j)
        mask[j] = p.in_gap_set(shifted_by_m ? j + p.m() : j);
    return mask;
}

Tangent tangent_at(const ParabolaParams& p, DiscPoint lambda, cplx scale) {
    const cplx lv = lambda.value();
    Tangent t;
    t.X1 = scale * static_cast<double>(p.n()) * cpow_int(lv, p.n() - 1);
    t.X2 = scale * static_cast<double>(p.m()) * cpow_int(lv, p.m() - 1);
    t.base = parametrize(p, lambda);
    return t;
}

}  // namespace neil
