#include "neil/disc.hpp"

#include <algorithm>
#include <cmath>

namespace neil {

DiscPoint::DiscPoint(cplx v) : v_(v) {
    if (!(std::abs(v) < 1.0 - kDiscMargin))
        throw std::domain_error("DiscPoint: |value| must be < 1");
}

double moebius_pseudodistance(cplx a, cplx b) {
    return std::abs((a - b) / (1.0 - a * std::conj(b)));
}

double poincare_distance(cplx a, cplx b) {
    return std::atanh(moebius_pseudodistance(a, b));
}

double moebius_pseudodistance(DiscPoint a, DiscPoint b) {
    return moebius_pseudodistance(a.value(), b.value());
}

double poincare_distance(DiscPoint a, DiscPoint b) {
    return poincare_distance(a.value(), b.value());
}

MobiusMap::MobiusMap(cplx alpha, double phase) : alpha_(alpha), phase_(phase) {
    if (std::abs(alpha) > 1.0 + 1e-12)
        throw std::domain_error("MobiusMap: |alpha| must be <= 1");
}

bool MobiusMap::degenerate() const {
    return std::abs(alpha_) >= 1.0 - kDiscMargin;
}

cplx MobiusMap::operator()(cplx z) const {
    if (phase_ != 0.0) z *= std::polar(1.0, phase_);
    return (alpha_ - z) / (1.0 - std::conj(alpha_) * z);
}

MoebiusImage apply_moebius(const MobiusMap& map, DiscPoint z) {
    return {map(z.value()), map.degenerate()};
}

DiscPoint geodesic(DiscPoint a, DiscPoint b, double t) {
    if (a.value() == b.value())
        throw std::invalid_argument("geodesic: coincident endpoints");
    if (t < 0.0 || t > 1.0)
        throw std::invalid_argument("geodesic: parameter outside [0,1]");
    const MobiusMap to_origin(a.value());
    const cplx c = to_origin(b.value());  // |c| = m_D(a,b)
    return DiscPoint(to_origin(t * c));   // Phi_a is an involution
}

SampledCurve::SampledCurve(std::vector<cplx> nodes, std::vector<double> grid)
    : nodes_(std::move(nodes)), grid_(std::move(grid)) {
    if (nodes_.empty() || nodes_.size() != grid_.size())
        throw std::invalid_argument("SampledCurve: nodes/grid size mismatch");
    if (grid_.front() != 0.0 || grid_.back() != 1.0)
        throw std::invalid_argument("SampledCurve: grid must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < grid_.size(); ++i)
        if (!(grid_[i] < grid_[i + 1]))
            throw std::invalid_argument("SampledCurve: grid must be strictly increasing");
    for (const cplx& z : nodes_)
        if (!(std::abs(z) < 1.0))
            throw std::invalid_argument("SampledCurve: node outside the open disc");
}

SampledCurve SampledCurve::uniform(std::vector<cplx> nodes) {
    const std::size_t n = nodes.size();
    if (n < 2) throw std::invalid_argument("SampledCurve: need at least 2 nodes");
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = static_cast<double>(i) / static_cast<double>(n - 1);
    grid.front() = 0.0;
    grid.back() = 1.0;
    return SampledCurve(std::move(nodes), std::move(grid));
}

LengthResult curve_length(const SampledCurve& curve, const MetricFn& metric) {
    const auto& z = curve.nodes();
    const auto& t = curve.grid();
    const long n = static_cast<long>(z.size());
    if (n < 2) throw std::invalid_argument("curve_length: need at least 2 nodes");

    std::vector<cplx> vel(n);
    vel[0] = (z[1] - z[0]) / (t[1] - t[0]);
    vel[n - 1] = (z[n - 1] - z[n - 2]) / (t[n - 1] - t[n - 2]);
    for (long i = 1; i + 1 < n; ++i)
        vel[i] = (z[i + 1] - z[i - 1]) / (t[i + 1] - t[i - 1]);

    // integrand on interval i at fraction u in [0,1], position and velocity
    // interpolated linearly between the nodes
    auto integrand = [&](long i, double u) {
        const cplx pos = z[i] + u * (z[i + 1] - z[i]);
        const cplx v = vel[i] + u * (vel[i + 1] - vel[i]);
        const double val = metric(pos, v);
        if (!std::isfinite(val))
            throw std::domain_error("curve_length: non-finite metric value along curve");
        return val;
    };

    const long intervals = n - 1;
    const long max_panels = 1L << 20;
    double prev = 0.0;
    bool have_prev = false;
    long panels_per = 1;

    for (;;) {
        double total = 0.0;
        for (long i = 0; i < intervals; ++i) {
            const double h = t[i + 1] - t[i];
            const long pts = 2 * panels_per;
            double s = integrand(i, 0.0) + integrand(i, 1.0);
            for (long j = 1; j < pts; ++j)
                s += integrand(i, static_cast<double>(j) / static_cast<double>(pts)) * (j % 2 ? 4.0 : 2.0);
            total += s * h / (6.0 * static_cast<double>(panels_per));
        }
        const long used = intervals * panels_per;
        if (have_prev && std::abs(total - prev) <= 1e-8 * std::max(std::abs(total), 1e-12))
            return {total, true, used};
        if (2 * used > max_panels)
            return {total, false, used};
        prev = total;
        have_prev = true;
        panels_per *= 2;
    }
}

}  // namespace neil
