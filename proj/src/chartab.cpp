#include "stabrep/chartab.hpp"

#include "stabrep/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stabrep {

namespace {

// --- F_p utilities (p < 2^31) ---

using u64 = uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 a, u64 e, u64 p)
{
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0)
            return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

u64 sqrtmod(u64 a, u64 p)
{
    // Tonelli-Shanks.
    a %= p;
    if (a == 0)
        return 0;
    if (powmod(a, (p - 1) / 2, p) != 1)
        throw IntegrityError("no modular square root");
    if (p % 4 == 3)
        return powmod(a, (p + 1) / 4, p);
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1)
        ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 t2 = t;
        u64 i = 0;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
            if (i == m)
                throw IntegrityError("sqrtmod failed");
        }
        u64 b = powmod(c, 1ull << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

u64 primitive_root(u64 p)
{
    std::vector<long> primes;
    for (auto [q, k] : factorize(static_cast<long>(p - 1)))
        primes.push_back(q);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (long q : primes)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok)
            return g;
    }
}

// dense F_p matrices as vector<vector<u64>>
using FpMat = std::vector<std::vector<u64>>;
using FpVec = std::vector<u64>;

FpVec matvec(const FpMat& m, const FpVec& v, u64 p)
{
    FpVec out(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
        u64 acc = 0;
        for (size_t j = 0; j < v.size(); ++j)
            if (m[i][j] && v[j])
                acc = (acc + mulmod(m[i][j], v[j], p)) % p;
        out[i] = acc;
    }
    return out;
}

// Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<int> fp_eliminate(FpMat& a, u64 p)
{
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int sel = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col]) {
                sel = i;
                break;
            }
        if (sel < 0)
            continue;
        std::swap(a[sel], a[rank]);
        u64 inv = invmod(a[rank][col], p);
        for (int j = col; j < cols; ++j)
            a[rank][j] = mulmod(a[rank][j], inv, p);
        for (int i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0)
                continue;
            u64 f = a[i][col];
            for (int j = col; j < cols; ++j)
                a[i][j] = (a[i][j] + p - mulmod(f, a[rank][j], p)) % p;
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

// Kernel basis of a (rows x cols) matrix.
std::vector<FpVec> fp_kernel(FpMat a, u64 p)
{
    int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    auto pivots = fp_eliminate(a, p);
    std::vector<bool> is_pivot(cols, false);
    for (int pc : pivots)
        is_pivot[pc] = true;
    std::vector<FpVec> out;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        FpVec v(cols, 0);
        v[free] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = (p - a[k][free]) % p;
        out.push_back(std::move(v));
    }
    return out;
}

// Solve basis * X = rhs where basis is (n x d) with full column rank.
FpMat fp_solve_in_basis(const FpMat& basis_cols, const FpMat& rhs_cols, u64 p)
{
    int n = static_cast<int>(basis_cols.size());
    int d = n ? static_cast<int>(basis_cols[0].size()) : 0;
    int m = n ? static_cast<int>(rhs_cols[0].size()) : 0;
    FpMat aug(n, FpVec(d + m, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j)
            aug[i][j] = basis_cols[i][j];
        for (int j = 0; j < m; ++j)
            aug[i][d + j] = rhs_cols[i][j];
    }
    fp_eliminate(aug, p);
    FpMat x(d, FpVec(m, 0));
    for (int rrow = 0; rrow < n; ++rrow) {
        int lead = -1;
        for (int c = 0; c < d; ++c)
            if (aug[rrow][c]) {
                lead = c;
                break;
            }
        if (lead < 0) {
            for (int j = 0; j < m; ++j)
                if (aug[rrow][d + j])
                    throw IntegrityError("inconsistent modular solve");
            continue;
        }
        for (int j = 0; j < m; ++j)
            x[lead][j] = aug[rrow][d + j];
    }
    return x;
}

// Characteristic polynomial mod p by interpolation (degree < p guaranteed).
std::vector<u64> fp_charpoly(const FpMat& m, u64 p)
{
    int n = static_cast<int>(m.size());
    std::vector<u64> xs(n + 1), ys(n + 1);
    for (int t = 0; t <= n; ++t) {
        FpMat w = m;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                w[i][j] = (i == j) ? (static_cast<u64>(t) + p - w[i][j] % p) % p : (p - w[i][j] % p) % p;
        // determinant by elimination
        u64 det = 1;
        int sign = 1;
        for (int k = 0; k < n; ++k) {
            int sel = -1;
            for (int i = k; i < n; ++i)
                if (w[i][k]) {
                    sel = i;
                    break;
                }
            if (sel < 0) {
                det = 0;
                break;
            }
            if (sel != k) {
                std::swap(w[sel], w[k]);
                sign = -sign;
            }
            det = mulmod(det, w[k][k], p);
            u64 inv = invmod(w[k][k], p);
            for (int i = k + 1; i < n; ++i) {
                if (!w[i][k])
                    continue;
                u64 f = mulmod(w[i][k], inv, p);
                for (int j = k; j < n; ++j)
                    w[i][j] = (w[i][j] + p - mulmod(f, w[k][j], p)) % p;
            }
        }
        if (sign < 0)
            det = (p - det) % p;
        xs[t] = t;
        ys[t] = det;
    }
    // Lagrange interpolation mod p.
    std::vector<u64> poly(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        std::vector<u64> term{1};
        u64 denom = 1;
        for (int j = 0; j <= n; ++j) {
            if (i == j)
                continue;
            // term *= (x - xs[j])
            std::vector<u64> nt(term.size() + 1, 0);
            for (size_t k = 0; k < term.size(); ++k) {
                nt[k + 1] = (nt[k + 1] + term[k]) % p;
                nt[k] = (nt[k] + mulmod(term[k], (p - xs[j]) % p, p)) % p;
            }
            term = std::move(nt);
            denom = mulmod(denom, (xs[i] + p - xs[j]) % p, p);
        }
        u64 f = mulmod(ys[i], invmod(denom, p), p);
        for (size_t k = 0; k < term.size(); ++k)
            poly[k] = (poly[k] + mulmod(term[k], f, p)) % p;
    }
    return poly;
}

// --- F_p[x] helpers for root extraction ---

using FpPoly = std::vector<u64>; // coefficient on x^k

void poly_trim(FpPoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

FpPoly poly_rem(FpPoly a, const FpPoly& b, u64 p)
{
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        u64 f = mulmod(a.back(), invmod(b.back(), p), p);
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[off + i] = (a[off + i] + p - mulmod(f, b[i], p)) % p;
        poly_trim(a);
    }
    return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, u64 p)
{
    FpPoly r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j])
                r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    return poly_rem(std::move(r), m, p);
}

FpPoly poly_powmod(FpPoly base, u64 e, const FpPoly& m, u64 p)
{
    FpPoly r{1};
    base = poly_rem(std::move(base), m, p);
    while (e) {
        if (e & 1)
            r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, u64 p)
{
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        FpPoly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = invmod(a.back(), p);
        for (auto& c : a)
            c = mulmod(c, inv, p);
    }
    return a;
}

void collect_roots(const FpPoly& f, u64 p, u64& salt, std::vector<u64>& out)
{
    if (f.size() <= 1)
        return;
    if (f.size() == 2) {
        // x + c -> root -c
        out.push_back(mulmod((p - f[0]) % p, invmod(f[1], p), p));
        return;
    }
    for (;;) {
        ++salt;
        FpPoly shifted{salt % p, 1}; // x + salt
        FpPoly h = poly_powmod(shifted, (p - 1) / 2, f, p);
        if (!h.empty())
            h[0] = (h[0] + p - 1) % p;
        FpPoly g = poly_gcd(f, h, p);
        if (g.size() > 1 && g.size() < f.size()) {
            collect_roots(g, p, salt, out);
            FpPoly q = f;
            // exact division q / g
            FpPoly quo(q.size() - g.size() + 1, 0);
            while (q.size() >= g.size() && !q.empty()) {
                u64 fac = mulmod(q.back(), invmod(g.back(), p), p);
                size_t off = q.size() - g.size();
                quo[off] = fac;
                for (size_t i = 0; i < g.size(); ++i)
                    q[off + i] = (q[off + i] + p - mulmod(fac, g[i], p)) % p;
                poly_trim(q);
            }
            collect_roots(quo, p, salt, out);
            return;
        }
    }
}

// All distinct roots in F_p of a monic-ish polynomial.
std::vector<u64> fp_roots(FpPoly f, u64 p, u64 seed)
{
    poly_trim(f);
    std::vector<u64> roots;
    if (f.empty())
        return roots;
    // strip x^k
    size_t k = 0;
    while (k < f.size() && f[k] == 0)
        ++k;
    if (k > 0) {
        roots.push_back(0);
        f.erase(f.begin(), f.begin() + k);
    }
    if (f.size() <= 1)
        return roots;
    // g = gcd(x^p - x, f): product of distinct linear factors
    FpPoly xp = poly_powmod(FpPoly{0, 1}, p, f, p);
    if (xp.size() < 2)
        xp.resize(2, 0);
    xp[1] = (xp[1] + p - 1) % p; // x^p - x mod f
    FpPoly g = poly_gcd(f, xp, p);
    u64 salt = seed;
    collect_roots(g, p, salt, roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace

CharacterTable CharacterTable::compute(const FiniteMatrixGroup& g, uint64_t seed)
{
    CharacterTable tab;
    tab.g_ = &g;
    size_t r = g.class_count();
    long e = g.exponent();
    tab.e_ = e;
    size_t N = g.size();

    // Dixon prime: p = 1 mod e, p > 2 sqrt(N), p coprime to |G|, p < 2^31.
    u64 floor_p = 1u << 20;
    while (static_cast<u64>(floor_p) * floor_p < 4 * static_cast<u64>(N))
        floor_p <<= 1;
    u64 t = floor_p / e + 1;
    u64 p;
    for (;; ++t) {
        p = static_cast<u64>(e) * t + 1;
        if (is_prime(p) && N % p != 0)
            break;
    }
    if (p >= (1ull << 31))
        throw ResourceCapError("Dixon prime exceeds modular arithmetic range");
    tab.p_ = static_cast<long>(p);

    // Class data.
    std::vector<uint32_t> reps(r), invcls(r);
    std::vector<u64> csize(r);
    for (size_t c = 0; c < r; ++c) {
        reps[c] = g.class_rep(static_cast<uint32_t>(c));
        invcls[c] = g.class_of_inverse(static_cast<uint32_t>(c));
        csize[c] = g.class_size(static_cast<uint32_t>(c));
    }
    size_t idcls = g.class_of(0);

    // Class multiplication tensor a[i][j][k]; loop order keeps one inverse
    // per element.
    std::vector<std::vector<std::vector<u64>>> a(
        r, std::vector<std::vector<u64>>(r, std::vector<u64>(r, 0)));
    for (size_t i = 0; i < r; ++i) {
        for (uint32_t x : g.class_members(static_cast<uint32_t>(i))) {
            ModMat xinv = g.element(x).inverse();
            for (size_t k = 0; k < r; ++k) {
                uint32_t y = g.id_of(xinv.mul(g.element(reps[k])));
                a[i][g.class_of(y)][k] += 1;
            }
        }
    }

    // Simultaneous diagonalization of M_i with (M_i)[j][k] = a[i][j][k].
    std::vector<FpMat> subspaces;
    {
        FpMat full(r, FpVec(r, 0));
        for (size_t i = 0; i < r; ++i)
            full[i][i] = 1;
        subspaces.push_back(std::move(full));
    }
    for (size_t i = 0; i < r; ++i) {
        FpMat Mi(r, FpVec(r, 0));
        for (size_t j = 0; j < r; ++j)
            for (size_t k = 0; k < r; ++k)
                Mi[j][k] = a[i][j][k] % p;
        std::vector<FpMat> next;
        for (auto& basis : subspaces) {
            int d = static_cast<int>(basis[0].size());
            if (d == 1) {
                next.push_back(std::move(basis));
                continue;
            }
            // Restriction R: Mi * basis = basis * R.
            FpMat mb(r, FpVec(d, 0));
            for (int col = 0; col < d; ++col) {
                FpVec v(r);
                for (size_t row = 0; row < r; ++row)
                    v[row] = basis[row][col];
                FpVec w = matvec(Mi, v, p);
                for (size_t row = 0; row < r; ++row)
                    mb[row][col] = w[row];
            }
            FpMat R = fp_solve_in_basis(basis, mb, p);
            auto roots = fp_roots(fp_charpoly(R, p), p, seed);
            for (u64 lam : roots) {
                FpMat shifted = R;
                for (int dd = 0; dd < d; ++dd)
                    shifted[dd][dd] = (shifted[dd][dd] + p - lam) % p;
                auto ker = fp_kernel(shifted, p);
                if (ker.empty())
                    continue;
                FpMat sub(r, FpVec(ker.size(), 0));
                for (size_t kk = 0; kk < ker.size(); ++kk) {
                    // basis * ker[kk]
                    for (size_t row = 0; row < r; ++row) {
                        u64 acc = 0;
                        for (int col = 0; col < d; ++col)
                            if (basis[row][col] && ker[kk][col])
                                acc = (acc + mulmod(basis[row][col], ker[kk][col], p)) % p;
                        sub[row][kk] = acc;
                    }
                }
                next.push_back(std::move(sub));
            }
        }
        subspaces = std::move(next);
        bool all_one = true;
        for (const auto& s : subspaces)
            if (s[0].size() != 1)
                all_one = false;
        if (all_one)
            break;
    }
    if (subspaces.size() != r)
        throw IntegrityError("class algebra did not split into " + std::to_string(r) + " lines");

    // Normalize eigenvectors at the identity class and recover degrees.
    std::vector<FpVec> omegas;
    for (auto& s : subspaces) {
        FpVec v(r);
        for (size_t row = 0; row < r; ++row)
            v[row] = s[row][0];
        if (v[idcls] == 0)
            throw IntegrityError("eigenvector vanishes at the identity class");
        u64 scale = invmod(v[idcls], p);
        for (auto& x : v)
            x = mulmod(x, scale, p);
        omegas.push_back(std::move(v));
    }

    tab.degrees_.resize(r);
    tab.chi_p_.assign(r, std::vector<long>(r, 0));
    std::vector<size_t> order_by_degree(r);
    {
        std::vector<std::pair<long, size_t>> key;
        for (size_t ir = 0; ir < r; ++ir) {
            u64 s = 0;
            for (size_t i = 0; i < r; ++i)
                s = (s + mulmod(mulmod(omegas[ir][i], omegas[ir][invcls[i]], p), invmod(csize[i] % p, p), p)) % p;
            u64 d2 = mulmod(static_cast<u64>(N % p), invmod(s, p), p);
            u64 d = sqrtmod(d2, p);
            if (d > p - d)
                d = p - d;
            if (static_cast<unsigned long>(d) * d > N)
                throw IntegrityError("recovered degree out of range");
            key.push_back({static_cast<long>(d), ir});
        }
        std::sort(key.begin(), key.end());
        for (size_t pos = 0; pos < r; ++pos)
            order_by_degree[pos] = key[pos].second;
        for (size_t pos = 0; pos < r; ++pos)
            tab.degrees_[pos] = key[pos].first;
    }
    for (size_t pos = 0; pos < r; ++pos) {
        size_t ir = order_by_degree[pos];
        u64 d = static_cast<u64>(tab.degrees_[pos]) % p;
        for (size_t c = 0; c < r; ++c)
            tab.chi_p_[pos][c] =
                static_cast<long>(mulmod(mulmod(d, omegas[ir][c], p), invmod(csize[c] % p, p), p));
    }

    // Power maps and exact lift.
    std::vector<std::vector<size_t>> power_class(r); // class of rep^t
    for (size_t c = 0; c < r; ++c) {
        long o = g.element_order(reps[c]);
        power_class[c].resize(o);
        ModMat base = g.element(reps[c]);
        ModMat cur = ModMat::identity(g.rank(), g.modulus());
        for (long tt = 0; tt < o; ++tt) {
            power_class[c][tt] = g.class_of(g.id_of(cur));
            cur = cur.mul(base);
        }
    }
    u64 w = primitive_root(p);
    tab.lift_.assign(r, std::vector<std::map<long, long>>(r));
    for (size_t i = 0; i < r; ++i) {
        for (size_t c = 0; c < r; ++c) {
            long o = static_cast<long>(power_class[c].size());
            u64 zo = powmod(w, (p - 1) / o, p);       // order-o root in F_p
            u64 zo_inv = invmod(zo, p);
            u64 oinv = invmod(static_cast<u64>(o) % p, p);
            long total = 0;
            for (long s = 0; s < o; ++s) {
                u64 step = powmod(zo_inv, static_cast<u64>(s), p);
                u64 acc = 0;
                u64 zpow = 1;
                for (long tpow = 0; tpow < o; ++tpow) {
                    u64 cv = static_cast<u64>(tab.chi_p_[i][power_class[c][tpow]]);
                    acc = (acc + mulmod(cv, zpow, p)) % p;
                    zpow = mulmod(zpow, step, p);
                }
                u64 m = mulmod(acc, oinv, p);
                if (m > static_cast<u64>(tab.degrees_[i]))
                    throw IntegrityError("lifted multiplicity exceeds the degree");
                if (m) {
                    tab.lift_[i][c][(e / o) * s] = static_cast<long>(m);
                    total += static_cast<long>(m);
                }
            }
            if (total != tab.degrees_[i])
                throw IntegrityError("lifted multiplicities do not sum to the degree");
        }
    }
    return tab;
}

CycSum CharacterTable::value(size_t i, size_t cls) const
{
    CycSum s(e_);
    for (const auto& [exp, mult] : lift_[i][cls])
        s.add(exp, Rat(mult));
    return s;
}

std::string CharacterTable::irrep_id(size_t i) const
{
    std::ostringstream os;
    os << degrees_[i] << ":";
    uint64_t h = 1469598103934665603ull;
    auto feed = [&](uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    for (size_t c = 0; c < lift_[i].size(); ++c) {
        feed(c);
        for (const auto& [exp, mult] : lift_[i][c]) {
            feed(static_cast<uint64_t>(exp));
            feed(static_cast<uint64_t>(mult));
        }
    }
    os << std::hex << h;
    return os.str();
}

std::vector<long> CharacterTable::elementary_eigenvalue_orders(size_t i) const
{
    size_t cls = g_->class_of(g_->elementary_id());
    std::vector<long> out;
    for (const auto& [exp, mult] : lift_[i][cls])
        out.push_back(e_ / std::gcd(e_, exp == 0 ? e_ : exp));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long CharacterTable::depth_from_elementary(size_t i) const
{
    long l = 1;
    for (long d : elementary_eigenvalue_orders(i))
        l = lcm_long(l, d);
    return l;
}

long CharacterTable::factoring_level(size_t i) const
{
    long ell = g_->modulus();
    // Classes lying in the kernel of reduction mod ell2, for each divisor.
    for (long ell2 = 1; ell2 <= ell; ++ell2) {
        if (ell % ell2 != 0)
            continue;
        bool trivial = true;
        for (size_t c = 0; c < lift_[i].size() && trivial; ++c) {
            ModMat rep = g_->element(g_->class_rep(static_cast<uint32_t>(c)));
            bool in_kernel = true;
            for (int rr = 0; rr < rep.n && in_kernel; ++rr)
                for (int cc = 0; cc < rep.n && in_kernel; ++cc)
                    if (rep.at(rr, cc) % ell2 != (rr == cc ? 1 % ell2 : 0))
                        in_kernel = false;
            if (!in_kernel)
                continue;
            auto it = lift_[i][c].find(0);
            long m0 = it == lift_[i][c].end() ? 0 : it->second;
            if (m0 != degrees_[i])
                trivial = false;
        }
        if (trivial)
            return ell2;
    }
    return ell;
}

std::vector<long> CharacterTable::decompose(const std::vector<Rat>& class_values) const
{
    size_t r = lift_.size();
    if (class_values.size() != r)
        throw PreconditionError("class function has wrong length");
    std::vector<long> mults(r, 0);
    Rat order(Int(static_cast<unsigned long>(g_->size())));
    for (size_t i = 0; i < r; ++i) {
        CycSum acc(e_);
        for (size_t c = 0; c < r; ++c) {
            if (class_values[c] == 0)
                continue;
            size_t ci = g_->class_of_inverse(static_cast<uint32_t>(c));
            Rat coeff = class_values[c] * Rat(Int(g_->class_size(static_cast<uint32_t>(c))));
            for (const auto& [exp, mult] : lift_[i][ci])
                acc.add(exp, coeff * Rat(mult));
        }
        Rat v;
        if (!acc.is_rational(&v))
            throw IntegrityError("inner product is not rational");
        Rat m = v / order;
        if (!is_integer(m) || m < 0)
            throw IntegrityError("inner product is not a nonnegative integer");
        mults[i] = static_cast<long>(m.get_num().get_si());
    }
    return mults;
}

bool CharacterTable::row_orthogonality_exact(size_t i, size_t j) const
{
    size_t r = lift_.size();
    CycSum acc(e_);
    for (size_t c = 0; c < r; ++c) {
        CycSum prod = value(i, c) * value(j, c).conj();
        acc = acc + prod * Rat(Int(g_->class_size(static_cast<uint32_t>(c))));
    }
    Rat v;
    if (!acc.is_rational(&v))
        return false;
    Rat expect = (i == j) ? Rat(Int(static_cast<unsigned long>(g_->size()))) : Rat(0);
    return v == expect;
}

bool CharacterTable::row_orthogonality_modp(size_t i, size_t j) const
{
    u64 p = static_cast<u64>(p_);
    u64 acc = 0;
    size_t r = lift_.size();
    for (size_t c = 0; c < r; ++c) {
        size_t ci = g_->class_of_inverse(static_cast<uint32_t>(c));
        u64 term = mulmod(static_cast<u64>(chi_p_[i][c]), static_cast<u64>(chi_p_[j][ci]), p);
        acc = (acc + mulmod(term, g_->class_size(static_cast<uint32_t>(c)) % p, p)) % p;
    }
    u64 expect = (i == j) ? g_->size() % p : 0;
    return acc == expect;
}

Int CharacterTable::sum_of_degree_squares() const
{
    Int s(0);
    for (long d : degrees_)
        s += Int(d) * Int(d);
    return s;
}

} // namespace stabrep
