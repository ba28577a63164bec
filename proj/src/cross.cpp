#include "neil/cross.hpp"

#include <cmath>
#include <limits>

namespace neil {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// both points on a common irreducible branch (the origin lies on both)
bool same_branch(const CrossPoint& p, const CrossPoint& q) {
    return p.branch() == q.branch() || p.branch() == CrossBranch::Origin ||
           q.branch() == CrossBranch::Origin;
}

// rho(|z|, -|w|) = atanh((|z| + |w|) / (1 + |z||w|))
double opposite_distance(const CrossPoint& p, const CrossPoint& q) {
    const double x = p.coordinate().abs(), y = q.coordinate().abs();
    return std::atanh((x + y) / (1.0 + x * y));
}

}  // namespace

CrossPoint CrossPoint::z_axis(DiscPoint z) {
    if (z.value() == cplx(0.0, 0.0)) return origin();
    return CrossPoint(CrossBranch::ZAxis, z);
}

CrossPoint CrossPoint::w_axis(DiscPoint w) {
    if (w.value() == cplx(0.0, 0.0)) return origin();
    return CrossPoint(CrossBranch::WAxis, w);
}

CrossPoint CrossPoint::origin() { return CrossPoint(CrossBranch::Origin, DiscPoint(0.0)); }

CrossPoint CrossPoint::from_coordinates(cplx z, cplx w) {
    if (z != cplx(0.0, 0.0) && w != cplx(0.0, 0.0))
        throw std::invalid_argument("CrossPoint: zw must vanish");
    if (z != cplx(0.0, 0.0)) return z_axis(DiscPoint(z));
    if (w != cplx(0.0, 0.0)) return w_axis(DiscPoint(w));
    return origin();
}

double cross_caratheodory(const CrossPoint& p, const CrossPoint& q) {
    if (same_branch(p, q))
        return poincare_distance(p.coordinate(), q.coordinate());
    return opposite_distance(p, q);
}

double cross_lempert(const CrossPoint& p, const CrossPoint& q) {
    if (same_branch(p, q))
        return poincare_distance(p.coordinate(), q.coordinate());
    return kInf;  // opposite branches, both coordinates nonzero
}

double cross_kobayashi(const CrossPoint& p, const CrossPoint& q) {
    if (same_branch(p, q))
        return poincare_distance(p.coordinate(), q.coordinate());
    return opposite_distance(p, q);  // = k~ through the origin; c_V = k_V
}

double cross_gamma(const CrossPoint& p, cplx X1, cplx X2) {
    switch (p.branch()) {
        case CrossBranch::Origin:
            return std::abs(X1) + std::abs(X2);
        case CrossBranch::ZAxis:
            if (X2 != cplx(0.0, 0.0))
                throw std::invalid_argument("cross_gamma: X not tangent to the z-axis branch");
            return std::abs(X1) / (1.0 - std::norm(p.coordinate().value()));
        case CrossBranch::WAxis:
            if (X1 != cplx(0.0, 0.0))
                throw std::invalid_argument("cross_gamma: X not tangent to the w-axis branch");
            return std::abs(X2) / (1.0 - std::norm(p.coordinate().value()));
    }
    return 0.0;
}

double cross_kappa(const CrossPoint& p, cplx X1, cplx X2) {
    if (p.branch() == CrossBranch::Origin) {
        if (X1 == cplx(0.0, 0.0) || X2 == cplx(0.0, 0.0))
            return std::hypot(std::abs(X1), std::abs(X2));
        return kInf;
    }
    return cross_gamma(p, X1, X2);
}

}  // namespace neil
