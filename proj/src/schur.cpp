#include "neil/schur.hpp"

#include "neil/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace neil {

SchurPrefix::SchurPrefix(std::vector<cplx> c, std::vector<bool> msk)
    : coeffs(std::move(c)), mask(std::move(msk)) {
    if (coeffs.empty() || coeffs.size() != mask.size())
        throw std::invalid_argument("SchurPrefix: coeffs/mask size mismatch");
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (mask[j]) coeffs[j] = cplx(0.0, 0.0);
}

SchurPrefix::SchurPrefix(std::vector<cplx> c)
    : SchurPrefix(std::vector<cplx>(c), std::vector<bool>(c.size(), false)) {}

ToeplitzUpper toeplitz_from_prefix(const SchurPrefix& p) {
    const int n = p.order();
    ToeplitzUpper M;
    M.order = n;
    M.entries.assign(static_cast<std::size_t>(n) * n, cplx(0.0, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            M.entries[static_cast<std::size_t>(i) * n + j] = p.coeffs[j - i];
    return M;
}

std::vector<cplx> schur_gram(const std::vector<cplx>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<cplx> G(static_cast<std::size_t>(n) * n, cplx(0.0, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            cplx s(0.0, 0.0);
            for (int k = 0; k <= i; ++k)
                s += std::conj(a[i - k]) * a[j - k];
            cplx val = (i == j ? cplx(1.0, 0.0) : cplx(0.0, 0.0)) - s;
            G[static_cast<std::size_t>(i) * n + j] = val;
            G[static_cast<std::size_t>(j) * n + i] = std::conj(val);
        }
    }
    return G;
}

std::vector<double> hermitian_eigenvalues(std::vector<cplx> A, int n) {
    if (n <= 0) throw std::invalid_argument("hermitian_eigenvalues: empty matrix");
    auto at = [&](int i, int j) -> cplx& { return A[static_cast<std::size_t>(i) * n + j]; };

    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(at(i, j)));
    const double thresh = 1e-14 * std::max(1.0, scale);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(p, q)));
        if (off <= thresh) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = at(p, q);
                const double mag = std::abs(apq);
                if (mag <= thresh * 1e-2) continue;

                // phase similarity reduces the 2x2 block to real symmetric
                const cplx u = apq / mag;
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double tt = (tau >= 0.0 ? 1.0 : -1.0) /
                                  (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + tt * tt);
                const double s = tt * c;

                // J[p][p]=c, J[p][q]=s, J[q][p]=-s*conj(u), J[q][q]=c*conj(u)
                for (int r = 0; r < n; ++r) {
                    const cplx arp = at(r, p), arq = at(r, q);
                    at(r, p) = c * arp - s * std::conj(u) * arq;
                    at(r, q) = s * arp + c * std::conj(u) * arq;
                }
                for (int r = 0; r < n; ++r) {
                    const cplx apr = at(p, r), aqr = at(q, r);
                    at(p, r) = c * apr - s * u * aqr;
                    at(q, r) = s * apr + c * u * aqr;
                }
                at(p, q) = cplx(0.0, 0.0);
                at(q, p) = cplx(0.0, 0.0);
                at(p, p) = cplx(at(p, p).real(), 0.0);
                at(q, q) = cplx(at(q, q).real(), 0.0);
            }
        }
    }

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = at(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

double hermitian_min_eigenvalue(std::vector<cplx> A, int n) {
    return hermitian_eigenvalues(std::move(A), n).front();
}

Feasibility schur_feasible(const SchurPrefix& p) {
    const ToeplitzUpper M = toeplitz_from_prefix(p);
    (void)M;  // the gram below is I - M*M written out from the prefix
    const auto G = schur_gram(p.coeffs);
    const double margin = hermitian_min_eigenvalue(G, p.order());
    return {margin >= -1e-12, margin};
}

bool region_C_membership(double a, double b) {
    if (a < 0.0 || b < 0.0)
        throw std::invalid_argument("region_C_membership: need a, b >= 0");
    return a <= 1.0 && b <= (1.0 - a) * (1.0 - std::sqrt(a));
}

bool two_coeff_sufficient(double a, double b, int n) {
    if (a < 0.0 || b < 0.0)
        throw std::invalid_argument("two_coeff_sufficient: need a, b >= 0");
    if (n < 2) throw std::invalid_argument("two_coeff_sufficient: need n >= 2");
    return 2.0 * std::cos(std::numbers::pi / (n + 1)) * std::abs(a * b) <=
           1.0 - a * a - b * b;
}

cplx horner(const std::vector<cplx>& c, cplx z) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

cplx horner_deriv(const std::vector<cplx>& c, cplx z) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = c.size(); i-- > 1;)
        acc = acc * z + static_cast<double>(i) * c[i];
    return acc;
}

double boundary_sup(const std::vector<cplx>& coeffs, int grid_points) {
    const int M = std::max(grid_points, 16);
    const double tau = 2.0 * std::numbers::pi;

    auto mag2 = [&](double theta) {
        const cplx v = horner(coeffs, std::polar(1.0, theta));
        return std::norm(v);
    };

    std::vector<double> g(M);
    for (int j = 0; j < M; ++j) g[j] = mag2(tau * j / M);

    // polish the three best local maxima of the scan
    struct Cand { double val; int idx; };
    std::vector<Cand> cands;
    for (int j = 0; j < M; ++j) {
        const double left = g[(j + M - 1) % M], right = g[(j + 1) % M];
        if (g[j] >= left && g[j] >= right) cands.push_back({g[j], j});
    }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return a.val > b.val; });
    if (cands.size() > 3) cands.resize(3);

    double best = 0.0;
    for (const Cand& c : cands) {
        const double lo = tau * (c.idx - 1) / M;
        const double hi = tau * (c.idx + 1) / M;
        best = std::max(best, opt::golden_max(mag2, lo, hi, 64));
    }
    for (double v : g) best = std::max(best, v);
    return std::sqrt(best);
}

SchurFunction normalize_to_schur(const std::vector<cplx>& coeffs) {
    double mx = 0.0;
    for (const cplx& c : coeffs) mx = std::max(mx, std::abs(c));
    if (mx == 0.0)
        throw std::invalid_argument("normalize_to_schur: zero polynomial");

    const double sup = boundary_sup(coeffs, 4096);
    const double divisor = (sup <= 1.0 + 1e-12) ? 1.0 : sup * (1.0 + 1e-9);
    if (divisor == 1.0) return SchurFunction(coeffs, 1.0);

    std::vector<cplx> scaled(coeffs);
    for (cplx& c : scaled) c /= divisor;
    return SchurFunction(std::move(scaled), divisor);
}

}  // namespace neil
