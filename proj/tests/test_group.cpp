#include "stabrep/bounds.hpp"
#include "stabrep/chartab.hpp"
#include "stabrep/errors.hpp"
#include "stabrep/finrep.hpp"
#include "stabrep/modgroup.hpp"
#include "stabrep/words.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

using namespace stabrep;

TEST_CASE("word factorization over Z")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng() % 2);
        // Random product of elementaries and the sign matrix.
        ZMat a = zmat_identity(n);
        for (int t = 0; t < 8; ++t) {
            int i = static_cast<int>(rng() % n);
            int j = static_cast<int>(rng() % n);
            if (i == j)
                continue;
            ZMat e = zmat_identity(n);
            e[i][j] = static_cast<long>(rng() % 5) - 2;
            a = zmat_mul(a, e);
        }
        if (trial % 3 == 0) {
            ZMat d = zmat_identity(n);
            d[0][0] = -1;
            a = zmat_mul(d, a);
        }
        Word w = word_for_integer(a);
        ZMat prod = zmat_identity(n);
        for (const auto& op : w)
            prod = zmat_mul(prod, group_elem_matrix(n, op));
        CHECK(prod == a);
    }
}

TEST_CASE("word factorization over Z/ell")
{
    std::mt19937_64 rng(11);
    for (long ell : {2L, 3L, 4L, 5L, 6L}) {
        for (int trial = 0; trial < 15; ++trial) {
            int n = 3;
            ZMat a = zmat_identity(n);
            for (int t = 0; t < 6; ++t) {
                int i = static_cast<int>(rng() % n);
                int j = static_cast<int>(rng() % n);
                if (i == j)
                    continue;
                ZMat e = zmat_identity(n);
                e[i][j] = static_cast<long>(rng() % ell);
                a = zmat_mul(a, e);
            }
            // Random unit determinant twist.
            std::vector<long> units;
            for (long u = 1; u < ell; ++u)
                if (std::gcd(u, ell) == 1)
                    units.push_back(u);
            ZMat d = zmat_identity(n);
            d[0][0] = units[rng() % units.size()];
            a = zmat_mul(d, a);
            Word w = word_for_mod(a, ell);
            ZMat prod = zmat_identity(n);
            for (const auto& op : w)
                prod = zmat_mul(prod, group_elem_matrix(n, op));
            ModMat lhs = ModMat::from_int(prod, ell);
            ModMat rhs = ModMat::from_int(a, ell);
            CHECK(lhs == rhs);
        }
    }
    // Non-invertible input must be rejected.
    ZMat bad = zmat_identity(3);
    bad[0][0] = 2;
    CHECK_THROWS_AS(word_for_mod(bad, 4), IntegrityError);
}

TEST_CASE("group orders")
{
    CHECK(predicted_group_order(3, 2, Variant::SL) == 168);
    CHECK(predicted_group_order(3, 4, Variant::SL) == 43008);
    CHECK(predicted_group_order(3, 2, Variant::U) == 8);
    CHECK(predicted_group_order(3, 3, Variant::SL) == 5616);
    CHECK(predicted_group_order(3, 5, Variant::SL) == 372000);
    CHECK(predicted_group_order(3, 6, Variant::SL) == Int(168) * 5616);
    CHECK(predicted_group_order(3, 3, Variant::SLpm) == 2 * 5616);

    auto g = FiniteMatrixGroup::enumerate(3, 2, Variant::SL);
    CHECK(g.size() == 168);
    auto u = FiniteMatrixGroup::enumerate(3, 2, Variant::U);
    CHECK(u.size() == 8);
    auto g4 = FiniteMatrixGroup::enumerate(3, 4, Variant::SL);
    CHECK(g4.size() == 43008);
    CHECK_THROWS_AS(FiniteMatrixGroup::enumerate(3, 8, Variant::SL, 10000000), ResourceCapError);
}

TEST_CASE("crt split and order identity")
{
    auto f6 = crt_split(6);
    REQUIRE(f6.size() == 2);
    CHECK(f6[0].p == 2);
    CHECK(f6[1].p == 3);
    auto f4 = crt_split(4);
    REQUIRE(f4.size() == 1);
    CHECK(f4[0].pk == 4);

    // |SL_3(Z/6)| = |SL_3(F_2)| * |SL_3(F_3)| via enumeration.
    auto g6 = FiniteMatrixGroup::enumerate(3, 6, Variant::SL);
    auto g2 = FiniteMatrixGroup::enumerate(3, 2, Variant::SL);
    auto g3 = FiniteMatrixGroup::enumerate(3, 3, Variant::SL);
    CHECK(g6.size() == g2.size() * g3.size());
}

TEST_CASE("group words reproduce elements")
{
    auto g = FiniteMatrixGroup::enumerate(3, 3, Variant::SL);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 25; ++t) {
        uint32_t id = static_cast<uint32_t>(rng() % g.size());
        ModMat prod = ModMat::identity(3, 3);
        for (int gi : g.word_of(id))
            prod = prod.mul(g.generators()[gi]);
        CHECK(prod == g.element(id));
    }
}

TEST_CASE("normal closures: Mennicke instances")
{
    auto g2 = FiniteMatrixGroup::enumerate(3, 2, Variant::SL);
    auto closure = g2.normal_closure(g2.elementary_id());
    CHECK(closure.size() == 168); // SL_3(F_2) is simple

    auto g4 = FiniteMatrixGroup::enumerate(3, 4, Variant::SL);
    uint32_t e2 = g4.id_of(ModMat::elem(3, 4, 0, 1, 2));
    auto closure2 = g4.normal_closure(e2);
    auto kernel = g4.reduction_kernel(2);
    CHECK(closure2.size() == 256);
    CHECK(closure2 == kernel);

    auto triv = g2.normal_closure(0);
    CHECK(triv.size() == 1);
}

TEST_CASE("projective points and permutation representation")
{
    auto pts2 = proj_points(3, 2);
    CHECK(pts2.size() == 7);
    auto pts5 = proj_points(3, 5);
    CHECK(pts5.size() == 31);

    auto g = FiniteMatrixGroup::enumerate(3, 2, Variant::SL);
    auto rep = FiniteRep::projective_permutation(g);
    CHECK(rep.dim() == 7);
    rep.validate(5, 30);
    auto sz = rep.sum_zero_subrep();
    CHECK(sz.dim() == 6);
    sz.validate(5, 20);

    // 2-transitivity: orbit counts 1 on points, 2 on ordered pairs.
    CHECK(orbit_count_on_points(rep.perm_images(), rep.dim()) == 1);
    CHECK(orbit_count_on_pairs(rep.perm_images(), rep.dim()) == 2);
}

TEST_CASE("bounds formulas")
{
    CHECK(min_nontrivial_dim(5, 2) == 30);
    CHECK(min_nontrivial_dim(3, 5) == 30);
    CHECK_THROWS_AS(min_nontrivial_dim(3, 2), PreconditionError);

    CHECK(bmk_lower_bound(3, 2, 2) == Rat(8));
    CHECK(bmk_lower_bound(3, 2, 1) == Rat(2));
    CHECK(bmk_lower_bound(4, 3, 1) == Rat(18));

    CHECK(depth_dim_lower_bound(6, 4).bound == Rat(72));
    CHECK(depth_dim_lower_bound(2, 5).bound == Rat(8));
    for (long ell : {2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L})
        for (int n : {3, 4, 5})
            CHECK(depth_dim_lower_bound(ell, n).bound >= Rat(depth_dim_lower_bound(ell, n).weak_floor));

    CHECK(max_depth_for_dim(Int(1), 4) == 1);
    CHECK(max_depth_for_dim(Int(8), 5) == 2);
}

TEST_CASE("character table of SL_3(F_2)")
{
    auto g = FiniteMatrixGroup::enumerate(3, 2, Variant::SL);
    CHECK(g.class_count() == 6);
    auto tab = CharacterTable::compute(g);
    std::multiset<long> dims;
    for (size_t i = 0; i < tab.irrep_count(); ++i)
        dims.insert(tab.degree(i));
    CHECK(dims == std::multiset<long>({1, 3, 3, 6, 7, 8}));
    CHECK(tab.sum_of_degree_squares() == Int(168));
    for (size_t i = 0; i < tab.irrep_count(); ++i)
        for (size_t j = 0; j < tab.irrep_count(); ++j) {
            CHECK(tab.row_orthogonality_modp(i, j));
            CHECK(tab.row_orthogonality_exact(i, j));
        }
}

TEST_CASE("character table of U_3(Z/2) and the regular representation")
{
    auto g = FiniteMatrixGroup::enumerate(3, 2, Variant::U);
    auto tab = CharacterTable::compute(g);
    std::multiset<long> dims;
    for (size_t i = 0; i < tab.irrep_count(); ++i)
        dims.insert(tab.degree(i));
    CHECK(dims == std::multiset<long>({1, 1, 1, 1, 2})); // dihedral of order 8
    auto reg = FiniteRep::regular(g);
    auto mult = tab.decompose(reg.character());
    for (size_t i = 0; i < tab.irrep_count(); ++i)
        CHECK(mult[i] == tab.degree(i));
    // Trivial representation decomposes as the trivial irreducible once.
    std::vector<Rat> triv(g.class_count(), Rat(1));
    auto tm = tab.decompose(triv);
    long total = 0;
    for (size_t i = 0; i < tab.irrep_count(); ++i) {
        total += tm[i];
        if (tm[i])
            CHECK(tab.degree(i) == 1);
    }
    CHECK(total == 1);
}

TEST_CASE("sum-zero representation of SL_3(F_5) is irreducible of dimension 30")
{
    auto g = FiniteMatrixGroup::enumerate(3, 5, Variant::SL);
    auto rep = FiniteRep::projective_permutation(g);
    CHECK(rep.dim() == 31);
    CHECK(orbit_count_on_points(rep.perm_images(), rep.dim()) == 1);
    CHECK(orbit_count_on_pairs(rep.perm_images(), rep.dim()) == 2);
    CHECK(Int(rep.dim() - 1) == min_nontrivial_dim(3, 5));
}

TEST_CASE("factoring levels")
{
    auto g4 = FiniteMatrixGroup::enumerate(3, 4, Variant::SL);
    // Trivial representation factors through level 1.
    auto triv = FiniteRep::dense(g4, std::vector<QMatrix>(g4.generators().size(), QMatrix::identity(1)));
    CHECK(triv.factoring_level() == 1);
    CHECK(triv.kernel_acts_trivially(1));

    // The vector permutation representation is faithful: level 4.
    auto vec = FiniteRep::vector_permutation(g4);
    CHECK(vec.dim() == 64);
    CHECK(vec.factoring_level() == 4);
    CHECK_FALSE(vec.kernel_acts_trivially(2));
    CHECK(vec.kernel_acts_trivially(4));

    // Pullback of the mod-2 sum-zero representation to Z/6 has level 2.
    auto g6 = FiniteMatrixGroup::enumerate(3, 6, Variant::SL);
    auto g2 = FiniteMatrixGroup::enumerate(3, 2, Variant::SL);
    auto sz2 = FiniteRep::projective_permutation(g2).sum_zero_subrep();
    std::vector<QMatrix> images;
    for (const auto& gen : g6.generators())
        images.push_back(sz2.image_of(g2.id_of(gen.reduce(2))));
    auto lifted = FiniteRep::dense(g6, std::move(images));
    lifted.validate(9, 15);
    CHECK(lifted.factoring_level() == 2);
    CHECK(lifted.kernel_acts_trivially(2));
}
