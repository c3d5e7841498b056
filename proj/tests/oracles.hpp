// Test-only oracles, independent of the library's combinatorial kernels:
//  - Schur polynomials via Jacobi-Trudi determinants in explicit monomials,
//    used to cross-check Littlewood-Richardson coefficients.
//  - Gelfand-Tsetlin pattern counting, used to cross-check Weyl dimensions.
#ifndef STABREP_TESTS_ORACLES_HPP
#define STABREP_TESTS_ORACLES_HPP

#include "stabrep/partition.hpp"
#include "stabrep/rational.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace oracles {

using stabrep::Int;
using stabrep::Partition;

// Polynomial in N variables as exponent-vector -> integer coefficient.
using Mono = std::vector<int>;
using SymPoly = std::map<Mono, Int>;

inline SymPoly mul(const SymPoly& a, const SymPoly& b, int N)
{
    SymPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Mono e(N);
            for (int i = 0; i < N; ++i)
                e[i] = ea[i] + eb[i];
            r[e] += ca * cb;
        }
    for (auto it = r.begin(); it != r.end();)
        it = (it->second == 0) ? r.erase(it) : std::next(it);
    return r;
}

// Complete homogeneous h_k in N variables: sum of all degree-k monomials.
inline SymPoly h_poly(int k, int N)
{
    SymPoly r;
    Mono e(N, 0);
    auto rec = [&](auto&& self, int var, int rest) -> void {
        if (var == N - 1) {
            e[var] = rest;
            r[e] = 1;
            e[var] = 0;
            return;
        }
        for (int t = 0; t <= rest; ++t) {
            e[var] = t;
            self(self, var + 1, rest - t);
        }
        e[var] = 0;
    };
    if (k < 0)
        return r; // zero
    rec(rec, 0, k);
    return r;
}

// Schur polynomial s_lambda in N variables by the Jacobi-Trudi determinant
// det(h_{lambda_i - i + j}). Subset DP keeps the product count small.
inline const SymPoly& schur_poly(const Partition& lam, int N)
{
    static std::map<std::pair<std::vector<int>, int>, SymPoly> cache;
    auto key = std::make_pair(lam.parts(), N);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;

    int L = lam.length();
    if (L == 0) {
        SymPoly one;
        one[Mono(N, 0)] = 1;
        return cache.emplace(key, std::move(one)).first->second;
    }
    std::vector<std::vector<SymPoly>> H(L, std::vector<SymPoly>(L));
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            H[i][j] = h_poly(lam.part(i) - (i + 1) + (j + 1), N);

    // f[S] = det of rows (L-|S|..L-1) on column set S, built bottom-up.
    std::map<unsigned, SymPoly> f;
    f[0] = SymPoly{{Mono(N, 0), Int(1)}};
    for (int size = 1; size <= L; ++size) {
        std::map<unsigned, SymPoly> next;
        int row = L - size;
        for (unsigned S = 0; S < (1u << L); ++S) {
            if (__builtin_popcount(S) != size)
                continue;
            SymPoly acc;
            int pos = 0;
            for (int j = 0; j < L; ++j) {
                if (!(S & (1u << j)))
                    continue;
                unsigned rest = S & ~(1u << j);
                auto sub = f.find(rest);
                if (sub != f.end() && !sub->second.empty() && !H[row][j].empty()) {
                    SymPoly term = mul(H[row][j], sub->second, N);
                    for (auto& [e, c] : term)
                        acc[e] += (pos % 2 == 0) ? c : -c;
                }
                ++pos;
            }
            for (auto jt = acc.begin(); jt != acc.end();)
                jt = (jt->second == 0) ? acc.erase(jt) : std::next(jt);
            next[S] = std::move(acc);
        }
        f = std::move(next);
    }
    return cache.emplace(key, std::move(f[(1u << L) - 1])).first->second;
}

// Expand a symmetric polynomial in the Schur basis by greedy subtraction of
// the lexicographically largest monomial (whose exponent is a partition).
inline std::map<std::vector<int>, Int> schur_expand(SymPoly p, int N)
{
    std::map<std::vector<int>, Int> out;
    while (!p.empty()) {
        auto top = std::prev(p.end()); // lex-largest monomial
        Mono e = top->first;
        Int c = top->second;
        std::vector<int> nu(e);
        while (!nu.empty() && nu.back() == 0)
            nu.pop_back();
        for (size_t i = 1; i < nu.size(); ++i)
            if (nu[i] > nu[i - 1])
                throw std::runtime_error("schur_expand: leading monomial not a partition");
        out[nu] += c;
        const SymPoly& s = schur_poly(Partition(nu), N);
        for (const auto& [es, cs] : s) {
            Int& slot = p[es];
            slot -= c * cs;
            if (slot == 0)
                p.erase(es);
        }
    }
    return out;
}

inline Int lr_via_schur(const Partition& lam, const Partition& mu, const Partition& nu, int N)
{
    SymPoly prod = mul(schur_poly(lam, N), schur_poly(mu, N), N);
    auto expansion = schur_expand(std::move(prod), N);
    auto it = expansion.find(nu.parts());
    return it == expansion.end() ? Int(0) : it->second;
}

// Number of Gelfand-Tsetlin patterns with the given top row; equals the
// dimension of the irreducible with that highest weight.
inline Int gt_pattern_count(const std::vector<int>& top)
{
    static std::map<std::vector<int>, Int> memo;
    if (top.size() <= 1)
        return 1;
    auto it = memo.find(top);
    if (it != memo.end())
        return it->second;
    Int total = 0;
    std::vector<int> next(top.size() - 1);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == next.size()) {
            total += gt_pattern_count(next);
            return;
        }
        for (int v = top[i]; v >= top[i + 1]; --v) {
            next[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    memo[top] = total;
    return total;
}

// All bipartitions with |plus| + |minus| <= max_total (and optional length cap).
inline std::vector<stabrep::Bipartition> bipartitions_up_to(int max_total)
{
    std::vector<stabrep::Bipartition> out;
    for (int s = 0; s <= max_total; ++s)
        for (int a = 0; a <= s; ++a)
            for (const auto& p : stabrep::partitions_of(a))
                for (const auto& m : stabrep::partitions_of(s - a))
                    out.push_back({p, m});
    return out;
}

} // namespace oracles

#endif
