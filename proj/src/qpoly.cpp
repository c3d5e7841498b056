#include "stabrep/qpoly.hpp"

#include "stabrep/errors.hpp"

#include <sstream>

namespace stabrep {

static const Rat kZero(0);

void QPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

QPoly QPoly::constant(const Rat& a)
{
    QPoly p;
    if (a != 0)
        p.c_ = {a};
    return p;
}

QPoly QPoly::monomial(int deg, const Rat& a)
{
    QPoly p;
    if (a != 0) {
        p.c_.assign(deg + 1, Rat(0));
        p.c_[deg] = a;
    }
    return p;
}

const Rat& QPoly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return kZero;
    return c_[k];
}

Rat QPoly::leading() const
{
    return c_.empty() ? Rat(0) : c_.back();
}

QPoly QPoly::operator+(const QPoly& o) const
{
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i)
        r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const
{
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i)
        r[i] -= o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const
{
    if (is_zero() || o.is_zero())
        return QPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0)
                r[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Rat& a) const
{
    std::vector<Rat> r(c_);
    for (auto& x : r)
        x *= a;
    return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& d) const
{
    if (d.is_zero())
        throw IntegrityError("polynomial division by zero");
    std::vector<Rat> rem(c_);
    int dd = d.degree();
    Rat lead = d.leading();
    if (static_cast<int>(rem.size()) - 1 < dd)
        return {QPoly(), QPoly(rem)};
    std::vector<Rat> quo(rem.size() - dd, Rat(0));
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        if (rem[k] == 0)
            continue;
        Rat q = rem[k] / lead;
        quo[k - dd] = q;
        for (int j = 0; j <= dd; ++j)
            rem[k - dd + j] -= q * d.c_[j];
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::divexact(const QPoly& d) const
{
    auto [q, r] = divrem(d);
    if (!r.is_zero())
        throw IntegrityError("inexact polynomial division");
    return q;
}

QPoly QPoly::derivative() const
{
    if (c_.size() <= 1)
        return QPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const
{
    if (is_zero())
        return *this;
    return *this * (Rat(1) / leading());
}

Rat QPoly::eval(const Rat& x) const
{
    Rat acc(0);
    for (int k = degree(); k >= 0; --k)
        acc = acc * x + c_[k];
    return acc;
}

QPoly QPoly::gcd(QPoly a, QPoly b)
{
    while (!b.is_zero()) {
        QPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

QPoly QPoly::radical() const
{
    if (is_zero() || degree() == 0)
        return monic();
    QPoly g = gcd(*this, derivative());
    return divexact(g).monic();
}

std::string QPoly::str(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k] == 0)
            continue;
        Rat a = c_[k];
        if (!first)
            os << (a < 0 ? " - " : " + ");
        else if (a < 0)
            os << "-";
        Rat mag = abs(a);
        if (k == 0 || mag != 1)
            os << mag.get_str();
        if (k > 0) {
            if (mag != 1)
                os << "*";
            os << var;
            if (k > 1)
                os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

QPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys)
{
    // Newton's divided differences.
    size_t n = xs.size();
    std::vector<Rat> dd(ys);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    QPoly p = QPoly::constant(dd[n - 1]);
    for (size_t i = n - 1; i-- > 0;) {
        QPoly lin({-xs[i], Rat(1)});
        p = p * lin + QPoly::constant(dd[i]);
    }
    return p;
}

} // namespace stabrep
