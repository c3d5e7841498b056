#include "stabrep/intrep.hpp"

#include "stabrep/bounds.hpp"
#include "stabrep/errors.hpp"

#include "doctest.h"

using namespace stabrep;

namespace {

IntegralRep sumzero_pullback(long q, int n = 3)
{
    auto g = FiniteMatrixGroup::enumerate(n, q, Variant::SL);
    return IntegralRep::pullback(FiniteRep::projective_permutation(g).sum_zero_subrep());
}

} // namespace

TEST_CASE("construction validates Steinberg relations")
{
    auto std3 = IntegralRep::standard(3);
    CHECK(std3.dim() == 3);
    // Tampered images: swap two generator images to break a relation.
    std::map<std::pair<int, int>, QMatrix> img;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j)
                img.emplace(std::make_pair(i, j), std3.image(i, j));
    std::swap(img.at({0, 1}), img.at({1, 0}));
    CHECK_THROWS_AS(IntegralRep(3, std::move(img)), IntegrityError);
}

TEST_CASE("depth of named representations")
{
    CHECK(depth(IntegralRep::trivial(3, 4)).depth == 1);
    CHECK(depth(IntegralRep::standard(3)).depth == 1);
    CHECK(depth(IntegralRep::standard(4)).depth == 1);

    auto sz2 = sumzero_pullback(2);
    CHECK(sz2.dim() == 6);
    auto rep2 = depth(sz2);
    CHECK(rep2.depth == 2);
    for (auto [d, m] : rep2.eigenvalue_orders)
        CHECK((d == 1 || d == 2));

    auto sz3 = sumzero_pullback(3);
    CHECK(sz3.dim() == 12);
    CHECK(depth(sz3).depth == 3);
}

TEST_CASE("depth_divides")
{
    CHECK(depth_divides(IntegralRep::standard(3), 1));
    auto sz2 = sumzero_pullback(2);
    CHECK(depth_divides(sz2, 2));
    CHECK_FALSE(depth_divides(sz2, 1));
    CHECK(depth_divides(sz2, 4)); // any multiple works
    // Consistency with the computed depth.
    for (auto* rep : {&sz2}) {
        long l = depth(*rep).depth;
        CHECK(depth_divides(*rep, l));
    }
}

TEST_CASE("eigenvalue-lcm depth is the minimal ell with depth_divides")
{
    auto sz2 = sumzero_pullback(2);
    auto sz3 = sumzero_pullback(3);
    auto six = sz2.tensor(sz3);
    long l = depth(six).depth;
    CHECK(l == 6);
    for (long d = 1; d <= 8; ++d) {
        bool divides = depth_divides(six, d);
        CHECK(divides == (d % l == 0));
    }
}

TEST_CASE("p_depth via tensor of depth-2 and depth-3 pullbacks")
{
    auto six = sumzero_pullback(2).tensor(sumzero_pullback(3));
    CHECK(six.dim() == 72);
    CHECK(p_depth(six, 2) == 1);
    CHECK(p_depth(six, 3) == 1);
    CHECK(p_depth(six, 5) == 0);
    CHECK(p_depth(IntegralRep::standard(3), 2) == 0);

    // Depth-4 pullback: the faithful vector permutation representation.
    auto g4 = FiniteMatrixGroup::enumerate(3, 4, Variant::SL);
    auto vec = IntegralRep::pullback(FiniteRep::vector_permutation(g4));
    CHECK(depth(vec).depth == 4);
    CHECK(p_depth(vec, 2) == 2);
}

TEST_CASE("duality and sums")
{
    auto sz2 = sumzero_pullback(2);
    CHECK(depth(sz2.dual()).depth == depth(sz2).depth);
    auto std3 = IntegralRep::standard(3);
    CHECK(depth(std3.dual()).depth == 1);

    auto sum = sz2.direct_sum(sumzero_pullback(3));
    CHECK(depth(sum).depth == 6);
    auto mixed = std3.tensor(sz2);
    CHECK(depth(mixed).depth == 2);
    CHECK(depth(mixed.dual()).depth == 2);
}

TEST_CASE("gamma_u_check")
{
    auto verdict = gamma_u_check(IntegralRep::standard(3), 1, 40, 17);
    CHECK(verdict.pass);

    auto sz2 = sumzero_pullback(2);
    CHECK(gamma_u_check(sz2, 2, 40, 17).pass);
    auto fail = gamma_u_check(sz2, 1, 40, 17);
    CHECK_FALSE(fail.pass);
    CHECK(!fail.witness.empty());

    auto mixed = IntegralRep::standard(3).tensor(sz2);
    CHECK(gamma_u_check(mixed, 2, 40, 17).pass);
}

TEST_CASE("finite_part_dimension")
{
    auto sz2 = sumzero_pullback(2);
    CHECK(finite_part_dimension(sz2, 2) == 6);
    CHECK(finite_part_dimension(IntegralRep::standard(3), 1) == 1);
    CHECK(finite_part_dimension(IntegralRep::standard(4), 1) == 1);
    auto mixed = IntegralRep::standard(3).tensor(sz2);
    CHECK(finite_part_dimension(mixed, 2) == 6);
}

TEST_CASE("classification")
{
    auto r1 = classify(IntegralRep::standard(3));
    CHECK(r1.classification == DepthClass::Algebraic);

    auto sz2 = sumzero_pullback(2);
    auto r2 = classify(sz2, true);
    CHECK(r2.classification == DepthClass::FiniteType);
    CHECK(r2.dim_fin == 6);
    CHECK(r2.dim_alg == 1);

    auto mixed = IntegralRep::standard(3).tensor(sz2);
    auto r3 = classify(mixed, true);
    CHECK(r3.classification == DepthClass::Mixed);
    CHECK(r3.dim_fin == 6);
    CHECK(r3.dim_alg == 3);
    CHECK(r3.dim_alg_exact);
}

TEST_CASE("commutant dimension flags irreducibility")
{
    CHECK(commutant_dimension(IntegralRep::standard(3), 6, 23) == 1);
    auto sz2 = sumzero_pullback(2);
    CHECK(commutant_dimension(sz2, 6, 23) == 1);
    auto sum = sz2.direct_sum(sz2);
    CHECK(commutant_dimension(sum, 6, 23) == 4);
}

TEST_CASE("cross-module oracle: depth equals factoring level for pullbacks")
{
    for (long ell : {2L, 3L}) {
        auto g = FiniteMatrixGroup::enumerate(3, ell, Variant::SL);
        auto perm = FiniteRep::projective_permutation(g);
        auto sz = perm.sum_zero_subrep();
        CHECK(depth(IntegralRep::pullback(sz)).depth == sz.factoring_level());
    }
}

TEST_CASE("dimension bound holds on irreducible pullbacks")
{
    auto sz2 = sumzero_pullback(2);
    CHECK(Rat(sz2.dim()) >= depth_dim_lower_bound(2, 3).bound);
    auto sz3 = sumzero_pullback(3);
    CHECK(Rat(sz3.dim()) >= depth_dim_lower_bound(3, 3).bound);
}

TEST_CASE("growth dichotomy window checks")
{
    {
        std::vector<Int> dims;
        std::vector<long> depths;
        for (int n = 3; n <= 10; ++n) {
            dims.push_back(Int(n) * n);
            depths.push_back(1);
        }
        auto r = check_growth_dichotomy(dims, depths, 3);
        CHECK(r.consistent);
        CHECK(r.verdict == "eventually-algebraic-consistent");
    }
    {
        std::vector<Int> dims;
        std::vector<long> depths;
        for (int n = 3; n <= 10; ++n) {
            dims.push_back(int_pow(Int(2), n));
            depths.push_back(2);
        }
        auto r = check_growth_dichotomy(dims, depths, 3);
        CHECK(r.consistent);
        CHECK(r.verdict == "bounded-depth-consistent");
    }
    {
        std::vector<Int> dims;
        std::vector<long> depths;
        for (int n = 3; n <= 10; ++n) {
            dims.push_back(Int(n));
            depths.push_back(n == 10 ? 3 : 1);
        }
        auto r = check_growth_dichotomy(dims, depths, 3);
        CHECK_FALSE(r.consistent);
        CHECK(r.violating_index == 7);
        CHECK(r.verdict == "inconsistent");
    }
}
