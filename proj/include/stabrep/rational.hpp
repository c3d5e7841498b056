#ifndef STABREP_RATIONAL_HPP
#define STABREP_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace stabrep {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline long lcm_long(long a, long b)
{
    if (a == 0 || b == 0)
        return 0;
    return Int(int_lcm(Int(a), Int(b))).get_si();
}

inline Int int_pow(const Int& base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// "p/q" (or plain integer) form used in all JSON surfaces.
inline std::string rat_str(const Rat& q)
{
    return q.get_str();
}

inline Rat parse_rat(const std::string& s)
{
    Rat q(s);
    q.canonicalize();
    return q;
}

// Prime factorization of a small positive integer, (prime, exponent) pairs.
inline std::vector<std::pair<long, int>> factorize(long n)
{
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int k = 0;
            while (n % p == 0) {
                n /= p;
                ++k;
            }
            out.emplace_back(p, k);
        }
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

inline long euler_phi(long n)
{
    long r = n;
    for (auto [p, k] : factorize(n))
        r = r / p * (p - 1);
    return r;
}

} // namespace stabrep

#endif
