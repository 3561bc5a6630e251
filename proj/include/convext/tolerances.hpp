#pragma once

namespace convext {

/// Central numeric tolerances. Every predicate and solver in the library
/// reads its thresholds from here, so a single scale factor tightens or
/// loosens the whole pipeline coherently.
struct Tolerances {
    double feasibility = 1e-9;       // LP feasibility / optimality slack
    double rank = 1e-9;              // relative rank threshold (vs largest column norm)
    double membership = 1e-8;        // relative reconstruction error for hull certificates
    double pivot_breakdown = 1e-12;  // smallest acceptable simplex pivot
    double duplicate_point = 1e-12;  // min pairwise distance in a point cloud
    double collinearity = 1e-9;      // triangle area / base length
    double strictness = 1e-9;        // slack below which a tie counts as non-strict
    double interior = 1e-9;          // min-weight threshold for relative interior

    Tolerances scaled(double s) const {
        Tolerances t = *this;
        t.feasibility *= s;
        t.rank *= s;
        t.membership *= s;
        t.collinearity *= s;
        t.strictness *= s;
        t.interior *= s;
        return t;
    }
};

}  // namespace convext
