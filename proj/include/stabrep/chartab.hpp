#ifndef STABREP_CHARTAB_HPP
#define STABREP_CHARTAB_HPP

#include "stabrep/cyclotomic.hpp"
#include "stabrep/modgroup.hpp"
#include "stabrep/qmatrix.hpp"
#include "stabrep/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace stabrep {

// Exact character table computed by the modular (Dixon) method: class-sum
// matrices are simultaneously diagonalized over F_p for a prime p = 1 mod
// exponent(G), and every character value is lifted exactly to a multiset of
// eigenvalue exponents in Z[zeta_e] via Fourier inversion over the power
// classes. The lifted multiplicities are exact integers (each lies in
// [0, degree], so its mod-p image pins it down).
class CharacterTable {
public:
    static CharacterTable compute(const FiniteMatrixGroup& g, uint64_t seed = 1);

    const FiniteMatrixGroup& group() const { return *g_; }
    size_t irrep_count() const { return degrees_.size(); }
    long degree(size_t i) const { return degrees_[i]; }
    long exponent() const { return e_; }
    long dixon_prime() const { return p_; }

    // chi_i(class rep of cls) as eigenvalue-exponent multiset (conductor e).
    const std::map<long, long>& eigen_multiset(size_t i, size_t cls) const { return lift_[i][cls]; }
    CycSum value(size_t i, size_t cls) const;

    // Deterministic identifier: dimension plus a hash of the sorted values.
    std::string irrep_id(size_t i) const;

    // Orders of the eigenvalues of the image of E_{1,2} in irrep i, and
    // their lcm (the depth of the pulled-back SL_n(Z)-representation).
    std::vector<long> elementary_eigenvalue_orders(size_t i) const;
    long depth_from_elementary(size_t i) const;

    // Smallest ell' | ell such that the reduction kernel acts trivially.
    long factoring_level(size_t i) const;

    // Multiplicities <chi_V, chi_i> for a rational class function; exact.
    std::vector<long> decompose(const std::vector<Rat>& class_values) const;

    // Exact row orthogonality in Z[zeta_e]; cost grows with e, so callers
    // choose where to apply it.
    bool row_orthogonality_exact(size_t i, size_t j) const;
    // Same check in the modular image; cheap for any size.
    bool row_orthogonality_modp(size_t i, size_t j) const;

    Int sum_of_degree_squares() const;

private:
    const FiniteMatrixGroup* g_ = nullptr;
    long e_ = 1;
    long p_ = 0;
    std::vector<long> degrees_;
    std::vector<std::vector<long>> chi_p_;               // [irrep][class], mod p
    std::vector<std::vector<std::map<long, long>>> lift_; // [irrep][class], exponent -> mult
};

} // namespace stabrep

#endif
