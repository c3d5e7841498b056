#ifndef STABREP_FINREP_HPP
#define STABREP_FINREP_HPP

#include "stabrep/chartab.hpp"
#include "stabrep/modgroup.hpp"
#include "stabrep/qmatrix.hpp"

#include <vector>

namespace stabrep {

// Representation of an enumerated group, one image per group generator.
// Either a permutation representation (images as point permutations) or a
// dense exact-matrix representation.
class FiniteRep {
public:
    static FiniteRep dense(const FiniteMatrixGroup& g, std::vector<QMatrix> images);
    static FiniteRep permutation(const FiniteMatrixGroup& g, std::vector<std::vector<int>> perms);

    // Permutation action on P(F_q^n) for the group's own modulus (prime).
    static FiniteRep projective_permutation(const FiniteMatrixGroup& g);
    // Sum-zero subrepresentation of a permutation rep, in the basis
    // e_x - e_0 (x > 0); dense matrices.
    FiniteRep sum_zero_subrep() const;
    // Regular representation (permutation of the group on itself).
    static FiniteRep regular(const FiniteMatrixGroup& g);
    // Permutation action on all column vectors (Z/ell)^n.
    static FiniteRep vector_permutation(const FiniteMatrixGroup& g);

    const FiniteMatrixGroup& group() const { return *g_; }
    int dim() const { return dim_; }
    bool is_permutation() const { return is_perm_; }
    const std::vector<std::vector<int>>& perm_images() const { return perms_; }

    QMatrix image_of_generator(size_t gi) const;
    QMatrix image_of(uint32_t element_id) const;          // via the BFS word
    std::vector<int> perm_of(uint32_t element_id) const;  // perm path only
    Rat trace_of(uint32_t element_id) const;

    // chi(class rep) for every class.
    std::vector<Rat> character() const;

    // Generator relations satisfied: E_{ij}(1)^ell = 1, Steinberg
    // commutators, plus seeded random product spot checks against the group.
    void validate(uint64_t seed = 1, int samples = 25) const;

    // Smallest ell' | ell with rho(E_{1,2})^{ell'} = 1. By the normal
    // generation of the reduction kernel this is the level the
    // representation factors through.
    long factoring_level() const;

    // Direct check that every element of the reduction kernel acts
    // trivially; exhaustive over the kernel.
    bool kernel_acts_trivially(long ell2) const;

private:
    const FiniteMatrixGroup* g_ = nullptr;
    int dim_ = 0;
    bool is_perm_ = false;
    std::vector<QMatrix> images_;
    std::vector<std::vector<int>> perms_;
};

} // namespace stabrep

#endif
