#pragma once

// The reducible variety V = {(z,w) in D^2 : zw = 0}, biholomorphic to
// A_{2,2}.  Points are stored by branch tag so the zw = 0 invariant cannot
// be broken.

#include "neil/disc.hpp"

namespace neil {

enum class CrossBranch { ZAxis, WAxis, Origin };

class CrossPoint {
public:
    static CrossPoint z_axis(DiscPoint z);
    static CrossPoint w_axis(DiscPoint w);
    static CrossPoint origin();
    static CrossPoint from_coordinates(cplx z, cplx w);

    CrossBranch branch() const { return branch_; }
    DiscPoint coordinate() const { return coord_; }
    cplx z() const { return branch_ == CrossBranch::ZAxis ? coord_.value() : cplx(0.0, 0.0); }
    cplx w() const { return branch_ == CrossBranch::WAxis ? coord_.value() : cplx(0.0, 0.0); }

private:
    CrossPoint(CrossBranch b, DiscPoint c) : branch_(b), coord_(c) {}
    CrossBranch branch_ = CrossBranch::Origin;
    DiscPoint coord_;
};

double cross_caratheodory(const CrossPoint& p, const CrossPoint& q);
double cross_lempert(const CrossPoint& p, const CrossPoint& q);  // may be +inf
double cross_kobayashi(const CrossPoint& p, const CrossPoint& q);

// off the origin the tangent must point along the branch
double cross_gamma(const CrossPoint& p, cplx X1, cplx X2);
double cross_kappa(const CrossPoint& p, cplx X1, cplx X2);  // may be +inf

}  // namespace neil
