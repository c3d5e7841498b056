#ifndef STABREP_VIC_HPP
#define STABREP_VIC_HPP

#include "stabrep/glweights.hpp"
#include "stabrep/partition.hpp"
#include "stabrep/qmatrix.hpp"
#include "stabrep/words.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace stabrep {

// Action of the rank-n generators (E_{ij} and D1 = diag(-1,1,...,1)) on one
// level of a VIC(Z) window module. Permutation storage keeps the projective
// family workable at ranks where dense matrices would not be.
class GenAction {
public:
    enum class Kind { Dense, Perm };

    static GenAction dense(int rank, std::map<std::pair<int, int>, QMatrix> elem, QMatrix d1);
    static GenAction perm(int rank, std::map<std::pair<int, int>, std::vector<int>> elem,
                          std::vector<int> d1);

    Kind kind() const { return kind_; }
    int rank() const { return rank_; }
    long dim() const { return dim_; }

    const QMatrix& elem_matrix(int i, int j) const;
    const std::vector<int>& elem_perm(int i, int j) const;
    const QMatrix& d1_matrix() const;
    const std::vector<int>& d1_perm() const;

    // Image of an arbitrary matrix in GL_rank(Z) through the generator word.
    QMatrix act(const ZMat& g) const;
    std::vector<int> act_as_perm(const ZMat& g) const; // Perm kind only

    // rho(g) * M without materializing rho(g) on the Perm path.
    QMatrix act_on(const ZMat& g, const QMatrix& m) const;

    GenAction densified() const; // Perm -> Dense
    GenAction inverse_transpose_twist() const;
    GenAction tensor(const GenAction& o) const; // Perm x Perm stays Perm

    // Restriction to the top-left rank-(n-1) generators.
    GenAction restrict_top_left() const;

private:
    Kind kind_ = Kind::Dense;
    int rank_ = 0;
    long dim_ = 0;
    std::map<std::pair<int, int>, QMatrix> mats_;
    std::map<std::pair<int, int>, std::vector<int>> perms_;
    QMatrix d1_mat_;
    std::vector<int> d1_perm_;
};

// Window truncation [lo, hi] of a VIC(Z)-module: per-level generator
// actions plus structure maps T_k : V_{lo+k} -> V_{lo+k+1}.
struct VicModule {
    int lo = 3, hi = 3;
    std::vector<GenAction> levels;      // hi - lo + 1 entries
    std::vector<QMatrix> tmaps;         // hi - lo entries
    std::vector<std::string> tags;      // "finite" | "algebraic" | "integral"

    int level_count() const { return hi - lo + 1; }
    const GenAction& level(int n) const { return levels[n - lo]; }
    const QMatrix& tmap(int n) const { return tmaps[n - lo]; } // V_n -> V_{n+1}
    long dim(int n) const { return level(n).dim(); }
    void check_shape() const;
};

// Tensor-decomposed module: levelwise alg ⊗ fin with a label annotation.
// The Kronecker product is never materialized; operations work factorwise.
struct PairVicModule {
    VicModule alg;
    VicModule fin;
    long dim(int n) const { return alg.dim(n) * fin.dim(n); }
};

struct TripleVerdict {
    bool equivariant_low = false, equivariant_high = false;
    bool generated_mid = false, generated_high = false;
    bool comp_gl1_low = false, comp_gl1_high = false;
    bool comp_gl2 = false;
    bool injective_low = false, injective_high = false;
    std::string detail;

    bool weak() const
    {
        return equivariant_low && equivariant_high && generated_mid && generated_high &&
               comp_gl1_low && comp_gl1_high && comp_gl2;
    }
    bool strong() const { return weak() && injective_low && injective_high; }
};

// Checks the five weak-triple conditions on levels n, n+1, n+2 of m.
TripleVerdict validate_weak_triple(const VicModule& m, int n, long closure_dim_budget = 512);

// Equivariance of every structure map (condition 2 across the window).
bool check_equivariance(const VicModule& m);

VicModule shift(const VicModule& m);

struct PhiModule {
    int a = 0;
    int lo = 0;                  // first level (> a)
    std::vector<long> dims;      // covariant dimensions per level
    std::vector<QMatrix> tmaps;  // induced maps between covariant spaces
};

// Covariants (= invariants, by semisimplicity) of the bottom-right
// GL_{n-a}(Z) with the induced transition maps.
PhiModule covariants_phi(const VicModule& m, int a);

// Least level from which every induced map is an isomorphism.
std::optional<int> stabilization_degree(const PhiModule& phi);

// Least level from which every structure map is injective.
std::optional<int> injectivity_degree(const VicModule& m);

// Least level L such that every map im(V_n) generates V_{n+1} for n >= L,
// measured within the window; nullopt when not measurable under the budget.
std::optional<int> generation_degree(const VicModule& m, long closure_dim_budget = 512);

VicModule tensor_modules(const VicModule& a, const VicModule& b, long dense_budget = 4096);
PairVicModule tensor_as_pair(VicModule alg, VicModule fin);

struct DepthPropVerdict {
    bool pass = true;
    std::string witness;
};

// Lemma-style propagation: levels n and n+1 factoring through
// SL^pm(Z/ell) force level n+2 to factor as well; failures are
// reported as invariant violations of the input triple.
DepthPropVerdict depth_propagation_check(const VicModule& m, int n, long ell);

struct StableDepthReport {
    long ell = 1;
    std::vector<long> per_level;
    bool propagation_ok = true;
};

// lcm of per-level factoring levels (finite type required), with the
// propagation check run across the window.
StableDepthReport stable_depth(const VicModule& m);
long level_factoring_level(const GenAction& a, long ell_hint = 0);

// --- SL^u -> GL extension (finite ring levels) ---

struct GlExtensionLevel {
    int n = 0;
    // images of diag(u,1,...,1) for each unit u, plus a flag set when the
    // extended action matched the supplied SL images on all generators.
    std::map<long, QMatrix> unit_images;
    std::map<long, std::vector<int>> unit_perms; // Perm path
    bool restriction_matches = false;
};

struct GlExtension {
    long ell = 0;
    std::vector<GlExtensionLevel> levels; // interior levels lo..hi-1
    bool equivariance_ok = false;
    bool complementary_gl1_ok = false;
    // Evaluate the extended GL_n(Z/ell) action on an arbitrary matrix.
    QMatrix act(const VicModule& m, int n, const ZMat& g) const;
    std::vector<int> act_as_perm(const VicModule& m, int n, const ZMat& g) const;
};

// Constructs the GL_n(Z/ell) action level by level through the embedding
// A -> diag(A, det(A)^{-1}) into SL_{n+1}(Z/ell), then verifies restriction,
// equivariance of the structure maps, and complementary-GL_1 triviality.
GlExtension extend_sl_to_gl(const VicModule& m, long ell);

// --- decomposition, filtration, growth ---

struct LevelDecomposition {
    std::vector<std::pair<Bipartition, int>> labels; // label, multiplicity
    int total_multiplicity() const;
};

// Highest-weight analysis of a pointwise algebraic level: requires every
// rho(E_{ij}) unipotent; weights read from the Lie algebra action, the
// determinant parity from D1.
LevelDecomposition decompose_algebraic_level(const GenAction& a);

struct FiltrationLayer {
    Bipartition label;
    std::vector<long> mult_dims; // dim M_n across the window tail
    long depth = 1;              // stable depth of the multiplicity data
};

struct FiltrationReport {
    std::vector<FiltrationLayer> layers; // ordered by containment refinement
    int head_boundary = 0;               // first level past the torsion head
    std::vector<long> head_dims;
    bool dimension_identity = true;
    std::string note;
};

FiltrationReport algebraic_isotypic_filtration(const VicModule& m, long closure_dim_budget = 512);
FiltrationReport algebraic_isotypic_filtration(const PairVicModule& m, long closure_dim_budget = 512);

struct GrowthReport {
    std::string kind;     // "torsion" | "polynomial" | "exponential"
    int degree = -1;      // polynomial degree, when polynomial
    long exp_base = 0;    // least integer C with dim_n <= C^n on the window
    long stable_depth = 0;
    std::vector<Int> dims;
    bool pointwise_algebraic_checked = false;
};

GrowthReport growth_classify(const VicModule& m, long dense_budget = 512);
GrowthReport growth_classify(const PairVicModule& m);

// Per-level count of irreducible summands (max over the window) where an
// exact count is certifiable; see the module notes.
struct LengthReport {
    long bound = 0;
    std::vector<long> per_level;
    bool constant_tail = true;
};
LengthReport length_bound(const VicModule& m);
LengthReport length_bound(const PairVicModule& m);

VicModule inverse_transpose_twist(const VicModule& m);

// Noetherianity desk witness: closure of the submodule generated by a
// seeded random vector at the lowest level, with covariant stabilization
// and generation-degree measurements.
struct SubmoduleWitness {
    std::vector<long> dims;
    std::vector<long> phi_dims;
    std::optional<int> phi_stabilization;
    std::optional<int> generation;
};
SubmoduleWitness noetherian_witness(const VicModule& m, int a, uint64_t seed);

} // namespace stabrep

#endif
