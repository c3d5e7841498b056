#ifndef STABREP_INTREP_HPP
#define STABREP_INTREP_HPP

#include "stabrep/finrep.hpp"
#include "stabrep/qmatrix.hpp"
#include "stabrep/words.hpp"

#include <map>
#include <string>
#include <vector>

namespace stabrep {

// Representation of SL_n(Z) (n >= 3) given by images of the elementary
// generators E_{ij}, i != j. Steinberg relations are checked on
// construction; this is the declared soundness boundary: a generator
// assignment satisfying them is taken to define a representation.
class IntegralRep {
public:
    IntegralRep(int n, std::map<std::pair<int, int>, QMatrix> images);

    static IntegralRep trivial(int n, int dim);
    static IntegralRep standard(int n);
    // Pullback of a finite representation along SL_n(Z) -> SL_n(Z/ell).
    static IntegralRep pullback(const FiniteRep& rep);

    int rank() const { return n_; }
    int dim() const { return dim_; }
    const QMatrix& image(int i, int j) const; // E_{ij}, 0-based
    QMatrix elementary() const { return image(0, 1); }

    // Image of an arbitrary unimodular matrix through the generator word.
    QMatrix image_of(const ZMat& a) const;

    IntegralRep dual() const;                       // g -> rho(g^-T)
    IntegralRep tensor(const IntegralRep& o) const; // Kronecker
    IntegralRep direct_sum(const IntegralRep& o) const;

private:
    IntegralRep() = default;
    int n_ = 0;
    int dim_ = 0;
    std::map<std::pair<int, int>, QMatrix> images_;
};

enum class DepthClass { Algebraic, FiniteType, Mixed };

std::string depth_class_name(DepthClass c);

struct DepthReport {
    long depth = 1;
    std::map<long, int> p_depths;                  // prime -> exponent
    std::vector<std::pair<long, int>> eigenvalue_orders; // (order, multiplicity)
    DepthClass classification = DepthClass::Algebraic;
    int dim_fin = 0;  // dimension of the E^ell fixed space witness
    int dim_alg = 0;  // dim / dim_fin when exact, else 0
    bool dim_alg_exact = false;
};

// Depth via the eigenvalue orders of rho(E); throws ResourceCapError when a
// non-root-of-unity eigenvalue survives below the cyclotomic cap.
DepthReport depth(const IntegralRep& rep, long cyclotomic_cap = 5040);

bool depth_divides(const IntegralRep& rep, long ell);

int p_depth(const IntegralRep& rep, long p, long cyclotomic_cap = 5040);

struct GammaUVerdict {
    bool pass = true;
    int samples = 0;
    std::string witness; // description of a failing element, when any
};

// Randomized unipotence check over Gamma U_n(ell): random words in the
// E_{ij}^ell (i<j) plus random upper unitriangular matrices with entries
// divisible by ell, factored through the word machinery. Sampling evidence,
// not proof; the exact E^ell criterion lives in depth_divides.
GammaUVerdict gamma_u_check(const IntegralRep& rep, long ell, int samples, uint64_t seed);

// Dimension of the common fixed space of the rho(E_{ij})^ell, i < j.
// For an irreducible of depth ell this is the finite-type tensor factor
// dimension (socle witness).
int finite_part_dimension(const IntegralRep& rep, long ell);

// Full report: depth, classification (algebraic iff depth 1; finite type
// iff rho(E) semisimple), and the dimension split.
DepthReport classify(const IntegralRep& rep, bool irreducible_asserted = false,
                     long cyclotomic_cap = 5040);

// Randomized Schur check: dimension of the commutant of the images of a
// sample of group words; 1 suggests irreducibility.
int commutant_dimension(const IntegralRep& rep, int samples, uint64_t seed);

struct GrowthDichotomyReport {
    bool consistent = true;
    int violating_index = -1; // index into the supplied window
    std::string verdict;      // "eventually-algebraic-consistent" | "bounded-depth-consistent" | "inconsistent"
};

// Pure window arithmetic for the growth corollaries: checks
// dim_n >= depth bound at every index and classifies the window.
GrowthDichotomyReport check_growth_dichotomy(const std::vector<Int>& dims,
                                             const std::vector<long>& depths,
                                             int n_start);

} // namespace stabrep

#endif
