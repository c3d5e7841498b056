#include "stabrep/bounds.hpp"

#include "stabrep/errors.hpp"

namespace stabrep {

Int min_nontrivial_dim(int n, long p)
{
    if (!(n >= 5 || p > 3))
        throw PreconditionError("minimal-dimension formula requires n >= 5 or p > 3");
    return (int_pow(Int(p), n) - p) / (p - 1);
}

Rat bmk_lower_bound(int n, long p, int k)
{
    if (k < 1)
        throw PreconditionError("prime-power exponent must be >= 1");
    Rat r(int_pow(Int(p), static_cast<unsigned long>(n - 1) * k));
    Rat f(p - 1, p);
    f.canonicalize();
    return r * f;
}

DepthDimBound depth_dim_lower_bound(long ell, int n)
{
    if (ell < 1)
        throw PreconditionError("depth must be >= 1");
    DepthDimBound out;
    out.bound = Rat(int_pow(Int(ell), n - 1));
    for (auto [p, k] : factorize(ell)) {
        Rat f(p - 1, p);
        f.canonicalize();
        out.bound *= f;
    }
    out.weak_floor = n >= 2 ? int_pow(Int(ell), n - 2) : Int(1);
    return out;
}

long max_depth_for_dim(const Int& N, int n)
{
    if (N < 1 || n < 3)
        throw PreconditionError("max_depth_for_dim needs N >= 1, n >= 3");
    long best = 1;
    // The weak floor ell^(n-2) <= bound bounds the scan.
    for (long ell = 2;; ++ell) {
        if (int_pow(Int(ell), n - 2) > N)
            break;
        if (depth_dim_lower_bound(ell, n).bound <= Rat(N))
            best = ell;
    }
    return best;
}

} // namespace stabrep
