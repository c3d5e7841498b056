#include "stabrep/cyclotomic.hpp"

#include "stabrep/errors.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace stabrep {

const QPoly& cyclotomic_poly(long d)
{
    static std::map<long, QPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end())
        return it->second;
    // Fill divisors bottom-up: Phi_k = (x^k - 1) / prod of proper Phi_e.
    for (long k = 1; k <= d; ++k) {
        if (d % k != 0 || cache.count(k))
            continue;
        std::vector<Rat> xk(k + 1, Rat(0));
        xk[0] = Rat(-1);
        xk[k] = Rat(1);
        QPoly p{std::move(xk)};
        for (long e = 1; e < k; ++e)
            if (k % e == 0)
                p = p.divexact(cache.at(e));
        cache.emplace(k, std::move(p));
    }
    return cache.at(d);
}

CyclotomicFactorization cyclotomic_orders(const QPoly& p, long cap, bool require_all)
{
    CyclotomicFactorization out;
    QPoly rem = p;
    for (long d = 1; d <= cap && rem.degree() > 0; ++d) {
        if (euler_phi(d) > rem.degree())
            continue;
        const QPoly& phi = cyclotomic_poly(d);
        int mult = 0;
        for (;;) {
            auto [q, r] = rem.divrem(phi);
            if (!r.is_zero())
                break;
            rem = q;
            ++mult;
        }
        if (mult > 0)
            out.orders.emplace_back(d, mult);
    }
    out.remainder = rem.monic();
    if (require_all && out.remainder.degree() > 0)
        throw ResourceCapError("non-cyclotomic factor remains below order cap " + std::to_string(cap));
    return out;
}

CyclotomicNumber::CyclotomicNumber(long conductor) : m_(conductor), c_(euler_phi(conductor), Rat(0)) {}

CyclotomicNumber::CyclotomicNumber(long conductor, std::vector<Rat> coeffs) : m_(conductor)
{
    long deg = euler_phi(conductor);
    if (static_cast<long>(coeffs.size()) <= deg) {
        coeffs.resize(deg, Rat(0));
        c_ = std::move(coeffs);
        return;
    }
    // Reduce mod Phi_m.
    QPoly r = QPoly(std::move(coeffs)).divrem(cyclotomic_poly(conductor)).second;
    c_.assign(deg, Rat(0));
    for (int k = 0; k <= r.degree(); ++k)
        c_[k] = r.coeff(k);
}

CyclotomicNumber CyclotomicNumber::from_rat(const Rat& a, long conductor)
{
    CyclotomicNumber z(conductor);
    if (!z.c_.empty())
        z.c_[0] = a;
    return z;
}

CyclotomicNumber CyclotomicNumber::root_of_unity(long m, long exponent)
{
    exponent %= m;
    if (exponent < 0)
        exponent += m;
    std::vector<Rat> v(exponent + 1, Rat(0));
    v[exponent] = Rat(1);
    return CyclotomicNumber(m, std::move(v));
}

bool CyclotomicNumber::is_zero() const
{
    for (const auto& a : c_)
        if (a != 0)
            return false;
    return true;
}

bool CyclotomicNumber::is_rational() const
{
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

Rat CyclotomicNumber::rational_value() const
{
    if (!is_rational())
        throw IntegrityError("cyclotomic number is not rational");
    return c_.empty() ? Rat(0) : c_[0];
}

CyclotomicNumber CyclotomicNumber::embed(long conductor) const
{
    if (conductor == m_)
        return *this;
    if (conductor % m_ != 0)
        throw PreconditionError("conductor does not extend current field");
    long step = conductor / m_;
    std::vector<Rat> v(conductor, Rat(0));
    for (size_t k = 0; k < c_.size(); ++k)
        v[k * step] = c_[k];
    return CyclotomicNumber(conductor, std::move(v));
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const
{
    long m = lcm_long(m_, o.m_);
    CyclotomicNumber a = embed(m), b = o.embed(m);
    for (size_t i = 0; i < a.c_.size(); ++i)
        a.c_[i] += b.c_[i];
    return a;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const
{
    long m = lcm_long(m_, o.m_);
    CyclotomicNumber a = embed(m), b = o.embed(m);
    for (size_t i = 0; i < a.c_.size(); ++i)
        a.c_[i] -= b.c_[i];
    return a;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const
{
    long m = lcm_long(m_, o.m_);
    CyclotomicNumber a = embed(m), b = o.embed(m);
    std::vector<Rat> prod(a.c_.size() + b.c_.size(), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0)
                prod[i + j] += a.c_[i] * b.c_[j];
    }
    return CyclotomicNumber(m, std::move(prod));
}

CyclotomicNumber CyclotomicNumber::operator*(const Rat& a) const
{
    CyclotomicNumber r = *this;
    for (auto& x : r.c_)
        x *= a;
    return r;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const
{
    return (*this - o).is_zero();
}

CyclotomicNumber CyclotomicNumber::conj() const
{
    std::vector<Rat> v(m_, Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0)
            continue;
        long e = (m_ - static_cast<long>(k)) % m_;
        v[e] += c_[k];
    }
    return CyclotomicNumber(m_, std::move(v));
}

std::string CyclotomicNumber::str() const
{
    std::ostringstream os;
    os << "[m=" << m_ << "]";
    bool any = false;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0)
            continue;
        os << (any ? " + " : " ") << c_[k].get_str() << "*z^" << k;
        any = true;
    }
    if (!any)
        os << " 0";
    return os.str();
}

void CycSum::add(long exponent, const Rat& coeff)
{
    exponent %= e_;
    if (exponent < 0)
        exponent += e_;
    Rat& slot = t_[exponent];
    slot += coeff;
    if (slot == 0)
        t_.erase(exponent);
}

CycSum CycSum::operator+(const CycSum& o) const
{
    if (e_ != o.e_)
        throw PreconditionError("CycSum conductor mismatch");
    CycSum r = *this;
    for (const auto& [k, a] : o.t_)
        r.add(k, a);
    return r;
}

CycSum CycSum::operator*(const CycSum& o) const
{
    if (e_ != o.e_)
        throw PreconditionError("CycSum conductor mismatch");
    CycSum r(e_);
    for (const auto& [i, a] : t_)
        for (const auto& [j, b] : o.t_)
            r.add(i + j, a * b);
    return r;
}

CycSum CycSum::operator*(const Rat& a) const
{
    CycSum r(e_);
    if (a != 0)
        for (const auto& [k, b] : t_)
            r.add(k, b * a);
    return r;
}

CycSum CycSum::conj() const
{
    CycSum r(e_);
    for (const auto& [k, a] : t_)
        r.add(-k, a);
    return r;
}

CyclotomicNumber CycSum::reduce() const
{
    std::vector<Rat> v(e_, Rat(0));
    for (const auto& [k, a] : t_)
        v[k] = a;
    return CyclotomicNumber(e_, std::move(v));
}

bool CycSum::is_rational(Rat* value) const
{
    CyclotomicNumber z = reduce();
    if (!z.is_rational())
        return false;
    if (value)
        *value = z.rational_value();
    return true;
}

} // namespace stabrep
