#pragma once

// Hyperbolic primitives of the open unit disc: the Moebius pseudodistance,
// the Poincare distance, disc automorphisms, geodesics, and lengths of
// sampled curves under a caller-supplied infinitesimal metric.

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace neil {

using cplx = std::complex<double>;

// Points with |z| >= 1 - kDiscMargin are rejected so every denominator of
// the form 1 - conj(a)*b stays bounded away from zero.
inline constexpr double kDiscMargin = 1e-14;

class DiscPoint {
public:
    DiscPoint() = default;
    explicit DiscPoint(cplx v);
    explicit DiscPoint(double re, double im = 0.0) : DiscPoint(cplx(re, im)) {}

    cplx value() const { return v_; }
    double abs() const { return std::abs(v_); }

private:
    cplx v_{0.0, 0.0};
};

// Unchecked variants on raw complex values; callers guarantee the arguments
// lie in the closed unit disc with |1 - a*conj(b)| > 0.
double moebius_pseudodistance(cplx a, cplx b);
double poincare_distance(cplx a, cplx b);

double moebius_pseudodistance(DiscPoint a, DiscPoint b);
double poincare_distance(DiscPoint a, DiscPoint b);

// Phi_alpha(z) = (alpha - z) / (1 - conj(alpha) z), optionally precomposed
// with a rotation z -> e^{i phase} z.  For |alpha| < 1 this is a disc
// automorphism and an involution (phase = 0); |alpha| = 1 collapses the map
// to the constant alpha and is flagged as degenerate.
class MobiusMap {
public:
    explicit MobiusMap(cplx alpha, double phase = 0.0);

    cplx alpha() const { return alpha_; }
    double phase() const { return phase_; }
    bool degenerate() const;
    cplx operator()(cplx z) const;

private:
    cplx alpha_{0.0, 0.0};
    double phase_ = 0.0;
};

struct MoebiusImage {
    cplx value{0.0, 0.0};
    bool degenerate = false;
};

MoebiusImage apply_moebius(const MobiusMap& map, DiscPoint z);

// Point at parameter t in [0,1] on the Poincare geodesic from a to b,
// realized by Moebius transport of the radial segment [0, m_D(a,b)].  The
// parameter is proportional to the Euclidean radius of the transported
// image; only monotonicity and the endpoint conditions are contractual.
DiscPoint geodesic(DiscPoint a, DiscPoint b, double t);

class SampledCurve {
public:
    SampledCurve(std::vector<cplx> nodes, std::vector<double> grid);

    // nodes at a uniform grid on [0,1]
    static SampledCurve uniform(std::vector<cplx> nodes);

    const std::vector<cplx>& nodes() const { return nodes_; }
    const std::vector<double>& grid() const { return grid_; }

private:
    std::vector<cplx> nodes_;
    std::vector<double> grid_;
};

// metric(point, velocity) -> local length density; the integrand of the
// curve-length functional.
using MetricFn = std::function<double(cplx, cplx)>;

struct LengthResult {
    double value = 0.0;
    bool converged = false;
    long panels = 0;
};

// Composite Simpson along the sampled curve with per-interval doubling;
// node velocities come from centered finite differences (one-sided at the
// endpoints).  Refines until the relative change drops below 1e-8 or the
// panel budget 2^20 is exhausted; the last estimate is reported either way.
LengthResult curve_length(const SampledCurve& curve, const MetricFn& metric);

}  // namespace neil
