#ifndef STABREP_BOUNDS_HPP
#define STABREP_BOUNDS_HPP

#include "stabrep/rational.hpp"

namespace stabrep {

// (p^n - p)/(p - 1); requires n >= 5 or p > 3.
Int min_nontrivial_dim(int n, long p);

// p^((n-1)k) * (1 - 1/p): floor for representations of SL_n(Z/p^k) that do
// not factor through SL_n(Z/p^(k-1)).
Rat bmk_lower_bound(int n, long p, int k);

struct DepthDimBound {
    Rat bound;      // ell^(n-1) * prod_{p | ell} (1 - 1/p)
    Int weak_floor; // ell^(n-2)
};

DepthDimBound depth_dim_lower_bound(long ell, int n);

// Largest ell whose irreducible depth-ell dimension bound still fits under N.
long max_depth_for_dim(const Int& N, int n);

} // namespace stabrep

#endif
