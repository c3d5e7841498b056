#ifndef STABREP_CYCLOTOMIC_HPP
#define STABREP_CYCLOTOMIC_HPP

#include "stabrep/qpoly.hpp"
#include "stabrep/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace stabrep {

// Phi_d, integer coefficients. Cached.
const QPoly& cyclotomic_poly(long d);

struct CyclotomicFactorization {
    std::vector<std::pair<long, int>> orders; // (d, multiplicity), ascending d
    QPoly remainder;                          // no root-of-unity roots of order <= cap
};

// Peels every cyclotomic factor Phi_d with d <= cap off p.
// If require_all is set, a nonconstant remainder raises ResourceCapError.
CyclotomicFactorization cyclotomic_orders(const QPoly& p, long cap, bool require_all = false);

// Element of Q(zeta_m) in the power basis 1, z, ..., z^(phi(m)-1).
class CyclotomicNumber {
public:
    explicit CyclotomicNumber(long conductor = 1);
    CyclotomicNumber(long conductor, std::vector<Rat> coeffs); // reduced or reducible length
    static CyclotomicNumber from_rat(const Rat& a, long conductor = 1);
    static CyclotomicNumber root_of_unity(long m, long exponent); // zeta_m^exponent

    long conductor() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const; // throws unless is_rational()

    CyclotomicNumber embed(long conductor) const; // m_ | conductor required

    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const Rat& a) const;
    bool operator==(const CyclotomicNumber& o) const;

    CyclotomicNumber conj() const; // zeta -> zeta^{-1}

    std::string str() const;

private:
    long m_;
    std::vector<Rat> c_; // length phi(m_)
};

// Sparse element of Q[zeta_e] kept as exponent -> coefficient, exponents mod e.
// This is the group-ring form; equality and rationality tests reduce mod Phi_e.
class CycSum {
public:
    explicit CycSum(long e = 1) : e_(e) {}
    long conductor() const { return e_; }
    void add(long exponent, const Rat& coeff);
    const std::map<long, Rat>& terms() const { return t_; }

    CycSum operator+(const CycSum& o) const;
    CycSum operator*(const CycSum& o) const;
    CycSum operator*(const Rat& a) const;
    CycSum conj() const;

    CyclotomicNumber reduce() const;

    bool is_rational(Rat* value = nullptr) const;

private:
    long e_;
    std::map<long, Rat> t_;
};

} // namespace stabrep

#endif
