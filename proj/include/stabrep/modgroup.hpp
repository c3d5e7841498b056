#ifndef STABREP_MODGROUP_HPP
#define STABREP_MODGROUP_HPP

#include "stabrep/rational.hpp"
#include "stabrep/words.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace stabrep {

// Square matrix over Z/ell, entries in [0, ell).
struct ModMat {
    int n = 0;
    long ell = 0;
    std::vector<uint8_t> a;

    static ModMat identity(int n, long ell);
    static ModMat elem(int n, long ell, int i, int j, long c); // E_{ij}(c)
    static ModMat diag(int n, long ell, const std::vector<long>& d);
    static ModMat from_int(const ZMat& m, long ell);

    uint8_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    uint8_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }

    ModMat mul(const ModMat& o) const;
    ModMat inverse() const; // adjugate route; throws if det is not a unit
    ModMat reduce(long ell2) const;
    ModMat transpose() const;
    long det() const;
    bool is_identity() const;
    bool operator==(const ModMat& o) const { return n == o.n && ell == o.ell && a == o.a; }

    uint64_t key() const; // base-ell packing; requires ell^(n^2) < 2^63
    ZMat lift() const;
    std::string str() const;
};

enum class Variant { SL, SLpm, GL, U };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& s);

// Predicted order, multiplicative over the prime factorization of ell.
Int predicted_group_order(int n, long ell, Variant variant);

// Fully enumerated matrix group over Z/ell with BFS words back to the
// standard generators; identity is element 0.
class FiniteMatrixGroup {
public:
    // Throws ResourceCapError when the predicted order exceeds the cap.
    static FiniteMatrixGroup enumerate(int n, long ell, Variant variant, long order_cap = 10000000);

    int rank() const { return n_; }
    long modulus() const { return ell_; }
    Variant variant() const { return variant_; }
    size_t size() const { return count_; }

    const std::vector<ModMat>& generators() const { return gens_; }
    const std::vector<std::string>& generator_names() const { return gen_names_; }

    ModMat element(uint32_t id) const;
    uint32_t id_of(const ModMat& m) const; // throws IntegrityError when absent
    bool contains(const ModMat& m) const;
    uint32_t mul_ids(uint32_t a, uint32_t b) const;
    uint32_t inverse_id(uint32_t a) const;
    long element_order(uint32_t a) const;

    // Word of BFS generators multiplying (left to right) to the element.
    std::vector<int> word_of(uint32_t id) const;

    // Conjugacy data (computed on first use).
    size_t class_count() const;
    uint32_t class_of(uint32_t id) const;
    uint32_t class_rep(uint32_t cls) const;      // element id
    uint64_t class_size(uint32_t cls) const;
    uint32_t class_of_inverse(uint32_t cls) const;
    const std::vector<uint32_t>& class_members(uint32_t cls) const;
    long exponent() const; // lcm of element orders

    // Smallest normal subgroup containing the element; sorted element ids.
    std::vector<uint32_t> normal_closure(uint32_t id) const;
    // Elements congruent to the identity mod ell2 (ell2 | ell).
    std::vector<uint32_t> reduction_kernel(long ell2) const;

    // id of E_{1,2}.
    uint32_t elementary_id() const;

private:
    FiniteMatrixGroup() = default;
    void compute_classes() const;

    int n_ = 0;
    long ell_ = 0;
    Variant variant_ = Variant::SL;
    size_t count_ = 0;
    std::vector<uint8_t> arena_; // count_ * n*n entries
    std::unordered_map<uint64_t, uint32_t> index_;
    std::vector<std::pair<uint32_t, int32_t>> parent_; // BFS tree: (parent, generator)
    std::vector<ModMat> gens_;
    std::vector<std::string> gen_names_;

    // lazily computed class data
    mutable bool classes_done_ = false;
    mutable std::vector<uint32_t> class_of_;
    mutable std::vector<uint32_t> class_reps_;
    mutable std::vector<uint64_t> class_sizes_;
    mutable std::vector<std::vector<uint32_t>> class_members_;
    mutable std::vector<uint32_t> class_inv_;
    mutable std::vector<long> orders_;
};

struct CrtFactor {
    long p;
    int k;
    long pk;
};

// Prime-power factorization of ell with the reduction data for
// SL_n(Z/ell) = prod SL_n(Z/p^k).
std::vector<CrtFactor> crt_split(long ell);

// Normalized points of P(F_q^n) (first nonzero coordinate 1), lex order.
std::vector<std::vector<uint8_t>> proj_points(int n, long q);

// Permutation of the point list induced by a matrix mod q: out[i] is the
// index of (m * points[i]) normalized.
std::vector<int> proj_perm(const ModMat& m, const std::vector<std::vector<uint8_t>>& points);

// Orbit count of the group generated by `perms` acting on {0..npoints-1}^2;
// this is the permutation character norm <chi, chi>.
long orbit_count_on_pairs(const std::vector<std::vector<int>>& perms, int npoints);
long orbit_count_on_points(const std::vector<std::vector<int>>& perms, int npoints);

} // namespace stabrep

#endif
