#include "stabrep/cyclotomic.hpp"
#include "stabrep/errors.hpp"
#include "stabrep/qmatrix.hpp"
#include "stabrep/qpoly.hpp"

#include "doctest.h"

using namespace stabrep;

namespace {

QMatrix M(const std::vector<std::vector<long>>& rows)
{
    std::vector<std::vector<Rat>> rs;
    for (const auto& r : rows) {
        std::vector<Rat> row;
        for (long v : r)
            row.emplace_back(v);
        rs.push_back(std::move(row));
    }
    return QMatrix::from_rows(rs);
}

} // namespace

TEST_CASE("polynomial arithmetic")
{
    QPoly p({Rat(-1), Rat(0), Rat(1)}); // x^2 - 1
    QPoly lin({Rat(-1), Rat(1)});       // x - 1
    auto [q, r] = p.divrem(lin);
    CHECK(r.is_zero());
    CHECK(q == QPoly({Rat(1), Rat(1)}));
    CHECK(QPoly::gcd(p, lin) == lin.monic());
    CHECK(p.eval(Rat(3)) == Rat(8));

    QPoly sq = lin * lin * QPoly({Rat(2), Rat(1)});
    CHECK(sq.radical() == (lin * QPoly({Rat(2), Rat(1)})).monic());
}

TEST_CASE("interpolation reproduces a cubic")
{
    QPoly cubic({Rat(1), Rat(-2, 3), Rat(0), Rat(5)});
    std::vector<Rat> xs, ys;
    for (int t = 0; t < 4; ++t) {
        xs.emplace_back(t);
        ys.push_back(cubic.eval(Rat(t)));
    }
    CHECK(interpolate(xs, ys) == cubic);
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_poly(1) == QPoly({Rat(-1), Rat(1)}));
    CHECK(cyclotomic_poly(2) == QPoly({Rat(1), Rat(1)}));
    CHECK(cyclotomic_poly(3) == QPoly({Rat(1), Rat(1), Rat(1)}));
    CHECK(cyclotomic_poly(6) == QPoly({Rat(1), Rat(-1), Rat(1)}));
    CHECK(cyclotomic_poly(12).degree() == 4);
}

TEST_CASE("cyclotomic_orders")
{
    // x^2 - 1 -> Phi_1 Phi_2
    auto f1 = cyclotomic_orders(QPoly({Rat(-1), Rat(0), Rat(1)}), 100);
    CHECK(f1.orders == std::vector<std::pair<long, int>>{{1, 1}, {2, 1}});
    CHECK(f1.remainder.degree() == 0);

    // (x-1)^3
    QPoly lin({Rat(-1), Rat(1)});
    auto f2 = cyclotomic_orders(lin * lin * lin, 100);
    CHECK(f2.orders == std::vector<std::pair<long, int>>{{1, 3}});

    // Phi_3
    auto f3 = cyclotomic_orders(QPoly({Rat(1), Rat(1), Rat(1)}), 100);
    CHECK(f3.orders == std::vector<std::pair<long, int>>{{3, 1}});

    // Product reconstructs the input.
    QPoly p = cyclotomic_poly(4) * cyclotomic_poly(5) * QPoly({Rat(-3), Rat(1)});
    auto f4 = cyclotomic_orders(p, 100);
    QPoly back = f4.remainder;
    for (auto [d, m] : f4.orders)
        for (int i = 0; i < m; ++i)
            back = back * cyclotomic_poly(d);
    CHECK(back == p.monic());
    CHECK(f4.remainder == QPoly({Rat(-3), Rat(1)}));
    CHECK_THROWS_AS(cyclotomic_orders(p, 100, true), ResourceCapError);
    // Cap exceeded: Phi_7 invisible below cap 5.
    auto f5 = cyclotomic_orders(cyclotomic_poly(7), 5);
    CHECK(f5.orders.empty());
    CHECK(f5.remainder == cyclotomic_poly(7).monic());
}

TEST_CASE("cyclotomic number arithmetic")
{
    auto z3 = CyclotomicNumber::root_of_unity(3, 1);
    auto z3sq = CyclotomicNumber::root_of_unity(3, 2);
    // 1 + z + z^2 = 0 in Q(zeta_3)
    auto sum = CyclotomicNumber::from_rat(Rat(1), 3) + z3 + z3sq;
    CHECK(sum.is_zero());
    // z * z^2 = 1
    CHECK(z3 * z3sq == CyclotomicNumber::from_rat(Rat(1), 3));
    // conj(z) = z^2
    CHECK(z3.conj() == z3sq);
    // embedding into Q(zeta_6): zeta_3 = zeta_6^2
    CHECK(z3.embed(6) == CyclotomicNumber::root_of_unity(6, 2));
    // norm of 1 + zeta_4: (1+i)(1-i) = 2
    auto z4 = CyclotomicNumber::root_of_unity(4, 1);
    auto one = CyclotomicNumber::from_rat(Rat(1), 4);
    CHECK((one + z4) * (one + z4).conj() == CyclotomicNumber::from_rat(Rat(2), 4));
}

TEST_CASE("CycSum reduction")
{
    CycSum s(6);
    for (int k = 0; k < 6; ++k)
        s.add(k, Rat(1));
    Rat v;
    CHECK(s.is_rational(&v)); // full sum of 6th roots of unity
    CHECK(v == 0);

    CycSum t(4);
    t.add(0, Rat(2));
    t.add(2, Rat(1)); // 2 + zeta_4^2 = 2 - 1 = 1
    CHECK(t.is_rational(&v));
    CHECK(v == 1);

    CycSum u(5);
    u.add(1, Rat(1));
    CHECK_FALSE(u.is_rational());
}

TEST_CASE("matrix basics and inverse")
{
    QMatrix a = M({{1, 2}, {3, 4}});
    QMatrix b = M({{0, 1}, {1, 0}});
    CHECK((a * b) == M({{2, 1}, {4, 3}}));
    CHECK(a.inverse() * a == QMatrix::identity(2));
    CHECK(a.pow(Int(-1)) == a.inverse());
    CHECK(a.transpose().at(0, 1) == 3);
    CHECK_THROWS_AS(M({{1, 1}, {1, 1}}).inverse(), IntegrityError);
    CHECK(M({{1, 2}, {2, 4}}).rank() == 1);
}

TEST_CASE("char_poly")
{
    // identity 2x2 -> (x-1)^2
    CHECK(QMatrix::identity(2).char_poly() == QPoly({Rat(1), Rat(-2), Rat(1)}));
    // diag(1,-1) -> x^2 - 1
    CHECK(M({{1, 0}, {0, -1}}).char_poly() == QPoly({Rat(-1), Rat(0), Rat(1)}));
    // companion matrix of x^3 - 1
    QMatrix c = M({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    CHECK(c.char_poly() == QPoly({Rat(-1), Rat(0), Rat(0), Rat(1)}));
    // rational entries
    QMatrix h(2, 2);
    h.at(0, 0) = Rat(1, 2);
    h.at(1, 1) = Rat(1, 3);
    CHECK(h.char_poly() == QPoly({Rat(1, 6), Rat(-5, 6), Rat(1)}));
}

TEST_CASE("unipotence")
{
    CHECK(QMatrix::identity(3).is_unipotent());
    CHECK(M({{1, 5, 7}, {0, 1, -2}, {0, 0, 1}}).is_unipotent());
    CHECK_FALSE(M({{1, 0}, {0, -1}}).is_unipotent());
    // is_unipotent(M) iff char_poly(M) = (x-1)^dim
    QMatrix u = M({{1, 1}, {0, 1}});
    CHECK(u.is_unipotent());
    CHECK(u.char_poly() == QPoly({Rat(1), Rat(-2), Rat(1)}));
}

TEST_CASE("fixed_space")
{
    CHECK(fixed_space({}, 4).cols() == 4);
    CHECK(fixed_space({QMatrix::identity(3)}).cols() == 3);
    QMatrix d = M({{1, 0}, {0, -1}});
    QMatrix f = fixed_space({d});
    REQUIRE(f.cols() == 1);
    CHECK(f.at(0, 0) != 0);
    CHECK(f.at(1, 0) == 0);
    // invariant under simultaneous conjugation
    QMatrix g = M({{2, 1}, {1, 1}});
    QMatrix conj = g * d * g.inverse();
    CHECK(fixed_space({conj}).cols() == 1);
}

TEST_CASE("kernel and solve")
{
    QMatrix a = M({{1, 2, 3}, {2, 4, 6}});
    QMatrix k = a.kernel();
    CHECK(k.cols() == 2);
    CHECK((a * k).is_zero());

    QMatrix b = M({{1, 1}, {0, 1}});
    auto x = b.solve(M({{3}, {2}}));
    REQUIRE(x.has_value());
    CHECK(b * *x == M({{3}, {2}}));
    // inconsistent system
    CHECK_FALSE(M({{1, 1}, {1, 1}}).solve(M({{0}, {1}})).has_value());
}

TEST_CASE("SpanBasis closure bookkeeping")
{
    SpanBasis sb(3);
    CHECK(sb.add({Rat(1), Rat(0), Rat(1)}));
    CHECK(sb.add({Rat(0), Rat(1), Rat(0)}));
    CHECK_FALSE(sb.add({Rat(2), Rat(3), Rat(2)}));
    CHECK(sb.dim() == 2);
    CHECK(sb.contains({Rat(5), Rat(-1), Rat(5)}));
    CHECK_FALSE(sb.contains({Rat(0), Rat(0), Rat(1)}));
}
