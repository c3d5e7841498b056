#include "stabrep/modgroup.hpp"

#include "stabrep/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace stabrep {

ModMat ModMat::identity(int n, long ell)
{
    ModMat m{n, ell, std::vector<uint8_t>(static_cast<size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

ModMat ModMat::elem(int n, long ell, int i, int j, long c)
{
    ModMat m = identity(n, ell);
    long r = c % ell;
    if (r < 0)
        r += ell;
    m.at(i, j) = static_cast<uint8_t>(r);
    return m;
}

ModMat ModMat::diag(int n, long ell, const std::vector<long>& d)
{
    ModMat m = identity(n, ell);
    for (int i = 0; i < n; ++i) {
        long r = d[i] % ell;
        if (r < 0)
            r += ell;
        m.at(i, i) = static_cast<uint8_t>(r);
    }
    return m;
}

ModMat ModMat::from_int(const ZMat& z, long ell)
{
    int n = static_cast<int>(z.size());
    ModMat m{n, ell, std::vector<uint8_t>(static_cast<size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int r = z[i][j] % ell;
            if (r < 0)
                r += ell;
            m.at(i, j) = static_cast<uint8_t>(r.get_ui());
        }
    return m;
}

ModMat ModMat::mul(const ModMat& o) const
{
    ModMat r{n, ell, std::vector<uint8_t>(static_cast<size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            long x = at(i, k);
            if (x == 0)
                continue;
            for (int j = 0; j < n; ++j) {
                long v = r.at(i, j) + x * o.at(k, j);
                r.at(i, j) = static_cast<uint8_t>(v % ell);
            }
        }
    return r;
}

long ModMat::det() const
{
    Int d = zmat_det(lift());
    Int r = d % ell;
    if (r < 0)
        r += ell;
    return r.get_si();
}

ModMat ModMat::inverse() const
{
    // Adjugate over Z, then multiply by det^{-1} mod ell.
    ZMat z = lift();
    Int d = zmat_det(z);
    Int dm = d % ell;
    if (dm < 0)
        dm += ell;
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), dm.get_mpz_t(), Int(ell).get_mpz_t());
    if (g != 1)
        throw IntegrityError("matrix determinant is not a unit mod " + std::to_string(ell));
    Int dinv = s % ell;
    if (dinv < 0)
        dinv += ell;
    ModMat r{n, ell, std::vector<uint8_t>(static_cast<size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // Cofactor C_{ji} (adjugate transposes).
            ZMat minor(n - 1, std::vector<Int>(n - 1));
            for (int r2 = 0, rr = 0; r2 < n; ++r2) {
                if (r2 == j)
                    continue;
                for (int c2 = 0, cc = 0; c2 < n; ++c2) {
                    if (c2 == i)
                        continue;
                    minor[rr][cc] = z[r2][c2];
                    ++cc;
                }
                ++rr;
            }
            Int cof = (n == 1) ? Int(1) : zmat_det(minor);
            if (((i + j) & 1) != 0)
                cof = -cof;
            Int v = (cof * dinv) % ell;
            if (v < 0)
                v += ell;
            r.at(i, j) = static_cast<uint8_t>(v.get_ui());
        }
    return r;
}

ModMat ModMat::reduce(long ell2) const
{
    ModMat r{n, ell2, std::vector<uint8_t>(a.size())};
    for (size_t i = 0; i < a.size(); ++i)
        r.a[i] = static_cast<uint8_t>(a[i] % ell2);
    return r;
}

ModMat ModMat::transpose() const
{
    ModMat r{n, ell, std::vector<uint8_t>(a.size())};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

bool ModMat::is_identity() const
{
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

uint64_t ModMat::key() const
{
    uint64_t k = 0;
    for (uint8_t v : a)
        k = k * static_cast<uint64_t>(ell) + v;
    return k;
}

ZMat ModMat::lift() const
{
    ZMat z(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            z[i][j] = at(i, j);
    return z;
}

std::string ModMat::str() const
{
    std::ostringstream os;
    for (int i = 0; i < n; ++i) {
        os << (i ? ";" : "[");
        for (int j = 0; j < n; ++j)
            os << (j ? "," : "") << static_cast<int>(at(i, j));
    }
    os << "]";
    return os.str();
}

std::string variant_name(Variant v)
{
    switch (v) {
    case Variant::SL: return "SL";
    case Variant::SLpm: return "SL+-";
    case Variant::GL: return "GL";
    case Variant::U: return "U";
    }
    return "?";
}

Variant variant_from_name(const std::string& s)
{
    if (s == "SL")
        return Variant::SL;
    if (s == "SL+-" || s == "SLpm" || s == "SL+/-")
        return Variant::SLpm;
    if (s == "GL")
        return Variant::GL;
    if (s == "U")
        return Variant::U;
    throw PreconditionError("unknown group variant: " + s);
}

Int predicted_group_order(int n, long ell, Variant variant)
{
    if (ell < 2)
        throw PreconditionError("modulus must be >= 2");
    if (variant == Variant::U) {
        return int_pow(Int(ell), static_cast<unsigned long>(n) * (n - 1) / 2);
    }
    Int total(1);
    for (auto [p, k] : factorize(ell)) {
        // |GL_n(F_p)| = p^(n(n-1)/2) * prod_{i=1..n} (p^i - 1)
        Int gl = int_pow(Int(p), static_cast<unsigned long>(n) * (n - 1) / 2);
        for (int i = 1; i <= n; ++i)
            gl *= int_pow(Int(p), i) - 1;
        Int sl = gl / (Int(p) - 1);
        if (variant == Variant::GL)
            total *= gl * int_pow(Int(p), static_cast<unsigned long>(k - 1) * n * n);
        else
            total *= sl * int_pow(Int(p), static_cast<unsigned long>(k - 1) * (n * n - 1));
    }
    if (variant == Variant::SLpm && ell > 2)
        total *= 2;
    return total;
}

FiniteMatrixGroup FiniteMatrixGroup::enumerate(int n, long ell, Variant variant, long order_cap)
{
    Int predicted = predicted_group_order(n, ell, variant);
    if (predicted > order_cap)
        throw ResourceCapError("predicted group order " + predicted.get_str() + " exceeds cap " +
                               std::to_string(order_cap));
    // Packing limit for uint64 keys.
    {
        Int limit = int_pow(Int(ell), static_cast<unsigned long>(n) * n);
        if (limit >= Int("9223372036854775807"))
            throw ResourceCapError("element packing limit exceeded");
    }

    FiniteMatrixGroup g;
    g.n_ = n;
    g.ell_ = ell;
    g.variant_ = variant;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (variant == Variant::U && i > j)
                continue;
            g.gens_.push_back(ModMat::elem(n, ell, i, j, 1));
            g.gen_names_.push_back("E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    if (variant == Variant::SLpm || variant == Variant::GL) {
        std::vector<long> d(n, 1);
        d[0] = ell - 1;
        g.gens_.push_back(ModMat::diag(n, ell, d));
        g.gen_names_.push_back("D1(-1)");
    }
    if (variant == Variant::GL) {
        for (long u = 2; u < ell - 1; ++u) {
            if (std::gcd(u, ell) != 1)
                continue;
            std::vector<long> d(n, 1);
            d[0] = u;
            g.gens_.push_back(ModMat::diag(n, ell, d));
            g.gen_names_.push_back("D1(" + std::to_string(u) + ")");
        }
    }

    // BFS closure from the identity.
    ModMat id = ModMat::identity(n, ell);
    auto push = [&](const ModMat& m, uint32_t parent, int32_t gen) -> bool {
        uint64_t k = m.key();
        if (g.index_.count(k))
            return false;
        uint32_t idx = static_cast<uint32_t>(g.count_);
        g.index_.emplace(k, idx);
        g.arena_.insert(g.arena_.end(), m.a.begin(), m.a.end());
        g.parent_.push_back({parent, gen});
        ++g.count_;
        return true;
    };
    push(id, 0, -1);
    std::deque<uint32_t> queue{0};
    while (!queue.empty()) {
        uint32_t cur = queue.front();
        queue.pop_front();
        ModMat m = g.element(cur);
        for (size_t gi = 0; gi < g.gens_.size(); ++gi) {
            ModMat next = g.gens_[gi].mul(m);
            if (push(next, cur, static_cast<int32_t>(gi)))
                queue.push_back(g.index_.at(next.key()));
        }
    }
    if (Int(static_cast<unsigned long>(g.count_)) != predicted)
        throw IntegrityError("enumerated order " + std::to_string(g.count_) +
                             " does not match predicted " + predicted.get_str());
    return g;
}

ModMat FiniteMatrixGroup::element(uint32_t id) const
{
    ModMat m{n_, ell_, {}};
    size_t stride = static_cast<size_t>(n_) * n_;
    m.a.assign(arena_.begin() + id * stride, arena_.begin() + (id + 1) * stride);
    return m;
}

uint32_t FiniteMatrixGroup::id_of(const ModMat& m) const
{
    auto it = index_.find(m.key());
    if (it == index_.end())
        throw IntegrityError("element not in group");
    return it->second;
}

bool FiniteMatrixGroup::contains(const ModMat& m) const
{
    return index_.count(m.key()) != 0;
}

uint32_t FiniteMatrixGroup::mul_ids(uint32_t a, uint32_t b) const
{
    return id_of(element(a).mul(element(b)));
}

uint32_t FiniteMatrixGroup::inverse_id(uint32_t a) const
{
    return id_of(element(a).inverse());
}

long FiniteMatrixGroup::element_order(uint32_t a) const
{
    ModMat m = element(a);
    ModMat acc = m;
    long o = 1;
    while (!acc.is_identity()) {
        acc = acc.mul(m);
        ++o;
    }
    return o;
}

std::vector<int> FiniteMatrixGroup::word_of(uint32_t id) const
{
    std::vector<int> w;
    while (id != 0) {
        auto [par, gen] = parent_[id];
        w.push_back(gen);
        id = par;
    }
    // BFS built next = gen * parent, so element = g_k ... g_1; collected in
    // product order already (outermost first).
    return w;
}

void FiniteMatrixGroup::compute_classes() const
{
    if (classes_done_)
        return;
    class_of_.assign(count_, UINT32_MAX);
    std::vector<ModMat> geninv;
    for (const auto& gmat : gens_)
        geninv.push_back(gmat.inverse());
    for (uint32_t start = 0; start < count_; ++start) {
        if (class_of_[start] != UINT32_MAX)
            continue;
        uint32_t cls = static_cast<uint32_t>(class_reps_.size());
        class_reps_.push_back(start);
        class_members_.push_back({});
        class_of_[start] = cls;
        std::deque<uint32_t> queue{start};
        class_members_[cls].push_back(start);
        while (!queue.empty()) {
            uint32_t cur = queue.front();
            queue.pop_front();
            ModMat m = element(cur);
            for (size_t gi = 0; gi < gens_.size(); ++gi) {
                ModMat conj = gens_[gi].mul(m).mul(geninv[gi]);
                uint32_t cid = id_of(conj);
                if (class_of_[cid] == UINT32_MAX) {
                    class_of_[cid] = cls;
                    class_members_[cls].push_back(cid);
                    queue.push_back(cid);
                }
            }
        }
        class_sizes_.push_back(class_members_[cls].size());
    }
    // Inverse classes and element orders per class.
    class_inv_.resize(class_reps_.size());
    orders_.resize(class_reps_.size());
    for (size_t c = 0; c < class_reps_.size(); ++c) {
        class_inv_[c] = class_of_[inverse_id(class_reps_[c])];
        orders_[c] = element_order(class_reps_[c]);
    }
    classes_done_ = true;
}

size_t FiniteMatrixGroup::class_count() const
{
    compute_classes();
    return class_reps_.size();
}

uint32_t FiniteMatrixGroup::class_of(uint32_t id) const
{
    compute_classes();
    return class_of_[id];
}

uint32_t FiniteMatrixGroup::class_rep(uint32_t cls) const
{
    compute_classes();
    return class_reps_[cls];
}

uint64_t FiniteMatrixGroup::class_size(uint32_t cls) const
{
    compute_classes();
    return class_sizes_[cls];
}

uint32_t FiniteMatrixGroup::class_of_inverse(uint32_t cls) const
{
    compute_classes();
    return class_inv_[cls];
}

const std::vector<uint32_t>& FiniteMatrixGroup::class_members(uint32_t cls) const
{
    compute_classes();
    return class_members_[cls];
}

long FiniteMatrixGroup::exponent() const
{
    compute_classes();
    long e = 1;
    for (long o : orders_)
        e = lcm_long(e, o);
    return e;
}

std::vector<uint32_t> FiniteMatrixGroup::normal_closure(uint32_t id) const
{
    // Alternate two closures until stable: subgroup closure under the
    // collected conjugates, then conjugation of those by the group generators.
    std::vector<ModMat> geninv;
    for (const auto& gmat : gens_)
        geninv.push_back(gmat.inverse());

    std::vector<uint32_t> subgens{id};
    std::vector<bool> in(count_, false);
    std::vector<uint32_t> members{0};
    in[0] = true;

    auto close_subgroup = [&]() {
        std::deque<uint32_t> queue(members.begin(), members.end());
        while (!queue.empty()) {
            uint32_t cur = queue.front();
            queue.pop_front();
            ModMat m = element(cur);
            for (uint32_t t : subgens) {
                uint32_t nxt = id_of(m.mul(element(t)));
                if (!in[nxt]) {
                    in[nxt] = true;
                    members.push_back(nxt);
                    queue.push_back(nxt);
                }
            }
        }
    };
    close_subgroup();
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<uint32_t> fresh;
        for (uint32_t t : subgens) {
            ModMat m = element(t);
            for (size_t gi = 0; gi < gens_.size(); ++gi) {
                uint32_t c = id_of(gens_[gi].mul(m).mul(geninv[gi]));
                if (!in[c])
                    fresh.push_back(c);
            }
        }
        for (uint32_t c : fresh)
            if (!in[c]) {
                subgens.push_back(c);
                in[c] = true;
                members.push_back(c);
                grew = true;
            }
        if (grew)
            close_subgroup();
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<uint32_t> FiniteMatrixGroup::reduction_kernel(long ell2) const
{
    if (ell_ % ell2 != 0)
        throw PreconditionError("kernel level must divide the modulus");
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < count_; ++i) {
        ModMat m = element(i);
        bool triv = true;
        for (int r = 0; r < n_ && triv; ++r)
            for (int c = 0; c < n_ && triv; ++c)
                if (m.at(r, c) % ell2 != (r == c ? 1 % ell2 : 0))
                    triv = false;
        if (triv)
            out.push_back(i);
    }
    return out;
}

uint32_t FiniteMatrixGroup::elementary_id() const
{
    return id_of(ModMat::elem(n_, ell_, 0, 1, 1));
}

std::vector<CrtFactor> crt_split(long ell)
{
    if (ell < 2)
        throw PreconditionError("crt_split needs ell >= 2");
    std::vector<CrtFactor> out;
    for (auto [p, k] : factorize(ell)) {
        long pk = 1;
        for (int i = 0; i < k; ++i)
            pk *= p;
        out.push_back({p, k, pk});
    }
    return out;
}

std::vector<std::vector<uint8_t>> proj_points(int n, long q)
{
    // First nonzero coordinate equals 1; lexicographic order.
    std::vector<std::vector<uint8_t>> pts;
    std::vector<uint8_t> v(n, 0);
    auto rec = [&](auto&& self, int pos, bool leading) -> void {
        if (pos == n) {
            if (!leading)
                pts.push_back(v);
            return;
        }
        if (leading) {
            v[pos] = 0;
            self(self, pos + 1, true);
            v[pos] = 1;
            self(self, pos + 1, false);
            v[pos] = 0;
        } else {
            for (long c = 0; c < q; ++c) {
                v[pos] = static_cast<uint8_t>(c);
                self(self, pos + 1, false);
            }
            v[pos] = 0;
        }
    };
    rec(rec, 0, true);
    return pts;
}

std::vector<int> proj_perm(const ModMat& m, const std::vector<std::vector<uint8_t>>& points)
{
    long q = m.ell;
    int n = m.n;
    // index points for lookup
    std::unordered_map<uint64_t, int> idx;
    auto pkey = [&](const std::vector<uint8_t>& p) {
        uint64_t k = 0;
        for (uint8_t x : p)
            k = k * q + x;
        return k;
    };
    for (size_t i = 0; i < points.size(); ++i)
        idx[pkey(points[i])] = static_cast<int>(i);

    // modular inverse table for normalization
    std::vector<long> inv(q, 0);
    for (long a = 1; a < q; ++a)
        for (long b = 1; b < q; ++b)
            if (a * b % q == 1)
                inv[a] = b;

    std::vector<int> out(points.size());
    std::vector<uint8_t> w(n);
    for (size_t i = 0; i < points.size(); ++i) {
        for (int r = 0; r < n; ++r) {
            long acc = 0;
            for (int c = 0; c < n; ++c)
                acc += static_cast<long>(m.at(r, c)) * points[i][c];
            w[r] = static_cast<uint8_t>(acc % q);
        }
        long lead = 0;
        for (int r = 0; r < n; ++r)
            if (w[r] != 0) {
                lead = w[r];
                break;
            }
        if (lead == 0)
            throw IntegrityError("projective action collapsed a point");
        for (int r = 0; r < n; ++r)
            w[r] = static_cast<uint8_t>(w[r] * inv[lead] % q);
        out[i] = idx.at(pkey(w));
    }
    return out;
}

namespace {

long orbit_count(const std::vector<std::vector<int>>& perms, long npts,
                 const std::function<long(long, const std::vector<int>&)>& act)
{
    std::vector<bool> seen(npts, false);
    long orbits = 0;
    for (long s = 0; s < npts; ++s) {
        if (seen[s])
            continue;
        ++orbits;
        std::deque<long> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            long cur = queue.front();
            queue.pop_front();
            for (const auto& p : perms) {
                long nxt = act(cur, p);
                if (!seen[nxt]) {
                    seen[nxt] = true;
                    queue.push_back(nxt);
                }
            }
        }
    }
    return orbits;
}

} // namespace

long orbit_count_on_pairs(const std::vector<std::vector<int>>& perms, int npoints)
{
    long total = static_cast<long>(npoints) * npoints;
    return orbit_count(perms, total, [npoints](long x, const std::vector<int>& p) {
        long a = x / npoints, b = x % npoints;
        return static_cast<long>(p[a]) * npoints + p[b];
    });
}

long orbit_count_on_points(const std::vector<std::vector<int>>& perms, int npoints)
{
    return orbit_count(perms, npoints, [](long x, const std::vector<int>& p) { return p[x]; });
}

} // namespace stabrep
