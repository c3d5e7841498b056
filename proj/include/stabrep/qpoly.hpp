#ifndef STABREP_QPOLY_HPP
#define STABREP_QPOLY_HPP

#include "stabrep/rational.hpp"

#include <string>
#include <vector>

namespace stabrep {

// Dense univariate polynomial over Q, coefficient c[k] on x^k.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly constant(const Rat& a);
    static QPoly monomial(int deg, const Rat& a = Rat(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero poly
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& a) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // Euclidean division; second component is the remainder.
    std::pair<QPoly, QPoly> divrem(const QPoly& d) const;
    // Exact division, throws if a remainder is left.
    QPoly divexact(const QPoly& d) const;

    QPoly derivative() const;
    QPoly monic() const;
    Rat eval(const Rat& x) const;

    static QPoly gcd(QPoly a, QPoly b);

    // Largest squarefree divisor p / gcd(p, p').
    QPoly radical() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Lagrange interpolation through (xs[i], ys[i]), exact.
QPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

} // namespace stabrep

#endif
