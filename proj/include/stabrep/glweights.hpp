#ifndef STABREP_GLWEIGHTS_HPP
#define STABREP_GLWEIGHTS_HPP

#include "stabrep/partition.hpp"
#include "stabrep/qpoly.hpp"
#include "stabrep/rational.hpp"

#include <vector>

namespace stabrep {

// Weakly decreasing integer n-tuple.
struct DominantWeight {
    std::vector<int> entries;

    int rank() const { return static_cast<int>(entries.size()); }
    bool valid() const;
    std::string str() const;
    bool operator==(const DominantWeight& o) const = default;
};

// V_n(lambda+, lambda-); requires len(lambda+) + len(lambda-) <= rank.
struct AlgebraicLabel {
    Bipartition bipartition;
    int rank = 0;

    bool fits() const { return bipartition.total_length() <= rank; }
    std::string str() const;
    bool operator==(const AlgebraicLabel& o) const = default;
};

struct Branch {
    AlgebraicLabel label;  // rank n-1 factor
    int torus_exponent;    // GL_1 character C_k
    long multiplicity = 1;
};

struct LrTerm {
    AlgebraicLabel left;   // rank m
    AlgebraicLabel right;  // rank n-m
    long multiplicity;
};

DominantWeight weight_of(const Bipartition& b, int n);

// Unique (b, k) with weight_of(b, n) + k*(1,...,1) = w and minimal total
// length of b. Among tied det-shifts, k = 0 is preferred, then smaller |k|.
std::pair<Bipartition, int> normalize_weight(const DominantWeight& w);

Int weyl_dimension(const AlgebraicLabel& label);

// p with p(n) = dim V_n(b) for every n >= total length; degree |b+| + |b-|.
QPoly dimension_polynomial(const Bipartition& b);

// Restriction to GL_{n-1} x GL_1; requires total length < n strictly.
std::vector<Branch> pieri_restrict(const AlgebraicLabel& label);

// Restriction to GL_m x GL_{n-m} via determinant shift + LR expansion.
std::vector<LrTerm> lr_restrict(const AlgebraicLabel& label, int m);

// Necessary condition for GL_{n-m}-invariants: total length <= 2m.
bool trivial_factor_length_bound(const AlgebraicLabel& label, int m);

// Multiplicity of (V_m(b), trivial) in lr_restrict; equals 1 when
// total length <= m < n.
long unique_copy_check(const Bipartition& b, int m, int n);

} // namespace stabrep

#endif
