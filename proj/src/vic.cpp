#include "stabrep/vic.hpp"

#include "stabrep/cyclotomic.hpp"
#include "stabrep/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace stabrep {

namespace {

std::vector<int> perm_identity(long n)
{
    std::vector<int> p(n);
    for (long i = 0; i < n; ++i)
        p[i] = static_cast<int>(i);
    return p;
}

std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> r(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

std::vector<int> perm_inverse(const std::vector<int>& p)
{
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        r[p[i]] = static_cast<int>(i);
    return r;
}

long perm_order(const std::vector<int>& p)
{
    long o = 1;
    std::vector<bool> seen(p.size(), false);
    for (size_t s = 0; s < p.size(); ++s) {
        if (seen[s])
            continue;
        long len = 0;
        size_t cur = s;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = static_cast<size_t>(p[cur]);
            ++len;
        }
        o = lcm_long(o, len);
    }
    return o;
}

std::vector<int> perm_power(const std::vector<int>& p, Int e)
{
    long o = perm_order(p);
    Int r = e % o;
    if (r < 0)
        r += o;
    long k = r.get_si();
    std::vector<int> acc = perm_identity(static_cast<long>(p.size()));
    for (long t = 0; t < k; ++t)
        acc = perm_compose(acc, p);
    return acc;
}

QMatrix perm_to_matrix(const std::vector<int>& p)
{
    QMatrix m(static_cast<int>(p.size()), static_cast<int>(p.size()));
    for (size_t j = 0; j < p.size(); ++j)
        m.at(p[j], static_cast<int>(j)) = 1;
    return m;
}

} // namespace

GenAction GenAction::dense(int rank, std::map<std::pair<int, int>, QMatrix> elem, QMatrix d1)
{
    GenAction a;
    a.kind_ = Kind::Dense;
    a.rank_ = rank;
    a.mats_ = std::move(elem);
    a.d1_mat_ = std::move(d1);
    a.dim_ = a.d1_mat_.rows();
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (i == j)
                continue;
            auto it = a.mats_.find({i, j});
            if (it == a.mats_.end())
                throw PreconditionError("missing elementary image in level action");
            if (it->second.rows() != a.dim_ || it->second.cols() != a.dim_)
                throw IntegrityError("level action images have mixed dimensions");
        }
    return a;
}

GenAction GenAction::perm(int rank, std::map<std::pair<int, int>, std::vector<int>> elem,
                          std::vector<int> d1)
{
    GenAction a;
    a.kind_ = Kind::Perm;
    a.rank_ = rank;
    a.perms_ = std::move(elem);
    a.d1_perm_ = std::move(d1);
    a.dim_ = static_cast<long>(a.d1_perm_.size());
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (i == j)
                continue;
            auto it = a.perms_.find({i, j});
            if (it == a.perms_.end())
                throw PreconditionError("missing elementary image in level action");
            if (static_cast<long>(it->second.size()) != a.dim_)
                throw IntegrityError("level permutations have mixed sizes");
        }
    return a;
}

const QMatrix& GenAction::elem_matrix(int i, int j) const
{
    if (kind_ != Kind::Dense)
        throw PreconditionError("dense access on a permutation level");
    return mats_.at({i, j});
}

const std::vector<int>& GenAction::elem_perm(int i, int j) const
{
    if (kind_ != Kind::Perm)
        throw PreconditionError("perm access on a dense level");
    return perms_.at({i, j});
}

const QMatrix& GenAction::d1_matrix() const
{
    if (kind_ != Kind::Dense)
        throw PreconditionError("dense access on a permutation level");
    return d1_mat_;
}

const std::vector<int>& GenAction::d1_perm() const
{
    if (kind_ != Kind::Perm)
        throw PreconditionError("perm access on a dense level");
    return d1_perm_;
}

std::vector<int> GenAction::act_as_perm(const ZMat& g) const
{
    if (kind_ != Kind::Perm)
        throw PreconditionError("act_as_perm on a dense level");
    Word w = word_for_integer(g);
    std::vector<int> acc = perm_identity(dim_);
    for (const auto& op : w) {
        if (op.kind == GenOp::Kind::Elem)
            acc = perm_compose(acc, perm_power(perms_.at({op.i, op.j}), op.c));
        else if (op.c == -1)
            acc = perm_compose(acc, d1_perm_);
        else if (op.c != 1)
            throw IntegrityError("unit other than +-1 in an integer word");
    }
    return acc;
}

QMatrix GenAction::act(const ZMat& g) const
{
    if (kind_ == Kind::Perm)
        return perm_to_matrix(act_as_perm(g));
    Word w = word_for_integer(g);
    QMatrix acc = QMatrix::identity(static_cast<int>(dim_));
    for (const auto& op : w) {
        if (op.kind == GenOp::Kind::Elem)
            acc = acc * mats_.at({op.i, op.j}).pow(op.c);
        else if (op.c == -1)
            acc = acc * d1_mat_;
        else if (op.c != 1)
            throw IntegrityError("unit other than +-1 in an integer word");
    }
    return acc;
}

QMatrix GenAction::act_on(const ZMat& g, const QMatrix& m) const
{
    if (kind_ == Kind::Dense)
        return act(g) * m;
    std::vector<int> p = act_as_perm(g);
    std::vector<int> pinv = perm_inverse(p);
    QMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        int src = pinv[i];
        for (int j = 0; j < m.cols(); ++j)
            out.at(i, j) = m.at(src, j);
    }
    return out;
}

GenAction GenAction::densified() const
{
    if (kind_ == Kind::Dense)
        return *this;
    std::map<std::pair<int, int>, QMatrix> mats;
    for (const auto& [k, p] : perms_)
        mats.emplace(k, perm_to_matrix(p));
    return dense(rank_, std::move(mats), perm_to_matrix(d1_perm_));
}

GenAction GenAction::inverse_transpose_twist() const
{
    if (kind_ == Kind::Dense) {
        std::map<std::pair<int, int>, QMatrix> mats;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (i != j)
                    mats.emplace(std::make_pair(i, j), mats_.at({j, i}).inverse());
        return dense(rank_, std::move(mats), d1_mat_);
    }
    std::map<std::pair<int, int>, std::vector<int>> perms;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (i != j)
                perms.emplace(std::make_pair(i, j), perm_inverse(perms_.at({j, i})));
    return perm(rank_, std::move(perms), d1_perm_);
}

GenAction GenAction::tensor(const GenAction& o) const
{
    if (rank_ != o.rank_)
        throw PreconditionError("tensor of actions with different ranks");
    if (kind_ == Kind::Perm && o.kind_ == Kind::Perm) {
        long db = o.dim_;
        auto tensor_perm = [&](const std::vector<int>& a, const std::vector<int>& b) {
            std::vector<int> r(dim_ * db);
            for (long x = 0; x < dim_; ++x)
                for (long y = 0; y < db; ++y)
                    r[x * db + y] = static_cast<int>(a[x] * db + b[y]);
            return r;
        };
        std::map<std::pair<int, int>, std::vector<int>> perms;
        for (const auto& [k, p] : perms_)
            perms.emplace(k, tensor_perm(p, o.perms_.at(k)));
        return perm(rank_, std::move(perms), tensor_perm(d1_perm_, o.d1_perm_));
    }
    GenAction a = densified();
    GenAction b = o.densified();
    std::map<std::pair<int, int>, QMatrix> mats;
    for (const auto& [k, m] : a.mats_)
        mats.emplace(k, m.kron(b.mats_.at(k)));
    return dense(rank_, std::move(mats), a.d1_mat_.kron(b.d1_mat_));
}

GenAction GenAction::restrict_top_left() const
{
    if (rank_ < 2)
        throw PreconditionError("cannot restrict below rank 1");
    if (kind_ == Kind::Dense) {
        std::map<std::pair<int, int>, QMatrix> mats;
        for (const auto& [k, m] : mats_)
            if (k.first < rank_ - 1 && k.second < rank_ - 1)
                mats.emplace(k, m);
        return dense(rank_ - 1, std::move(mats), d1_mat_);
    }
    std::map<std::pair<int, int>, std::vector<int>> perms;
    for (const auto& [k, p] : perms_)
        if (k.first < rank_ - 1 && k.second < rank_ - 1)
            perms.emplace(k, p);
    return perm(rank_ - 1, std::move(perms), d1_perm_);
}

void VicModule::check_shape() const
{
    if (hi < lo)
        throw PreconditionError("empty window");
    if (static_cast<int>(levels.size()) != level_count())
        throw PreconditionError("level count does not match the window");
    if (static_cast<int>(tmaps.size()) != level_count() - 1)
        throw PreconditionError("structure map count does not match the window");
    for (int n = lo; n <= hi; ++n)
        if (level(n).rank() != n)
            throw PreconditionError("level rank does not match its position");
    for (int n = lo; n < hi; ++n)
        if (tmap(n).rows() != dim(n + 1) || tmap(n).cols() != dim(n))
            throw PreconditionError("structure map shape mismatch at level " + std::to_string(n));
}

namespace {

// All generator names of the rank-n group as integer matrices.
std::vector<std::pair<std::string, ZMat>> rank_generators(int n)
{
    std::vector<std::pair<std::string, ZMat>> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            ZMat e = zmat_identity(n);
            e[i][j] = 1;
            out.push_back({"E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", e});
        }
    ZMat d = zmat_identity(n);
    d[0][0] = -1;
    out.push_back({"D1", d});
    return out;
}

ZMat pad_to(const ZMat& g, int n)
{
    ZMat out = zmat_identity(n);
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            out[i][j] = g[i][j];
    return out;
}

// rho(g) * M for g a *stored* generator of the level.
QMatrix apply_stored_left(const GenAction& a, const std::string& name, int i, int j, const QMatrix& m)
{
    if (a.kind() == GenAction::Kind::Dense) {
        const QMatrix& g = (name == "D1") ? a.d1_matrix() : a.elem_matrix(i, j);
        return g * m;
    }
    const std::vector<int>& p = (name == "D1") ? a.d1_perm() : a.elem_perm(i, j);
    std::vector<int> pinv = perm_inverse(p);
    QMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            out.at(r, c) = m.at(pinv[r], c);
    return out;
}

// M * rho(g) for g a stored generator.
QMatrix apply_stored_right(const QMatrix& m, const GenAction& a, const std::string& name, int i, int j)
{
    if (a.kind() == GenAction::Kind::Dense) {
        const QMatrix& g = (name == "D1") ? a.d1_matrix() : a.elem_matrix(i, j);
        return m * g;
    }
    const std::vector<int>& p = (name == "D1") ? a.d1_perm() : a.elem_perm(i, j);
    QMatrix out(m.rows(), m.cols());
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
            out.at(r, c) = m.at(r, p[c]);
    return out;
}

bool map_equivariant(const VicModule& m, int n)
{
    const GenAction& low = m.level(n);
    const GenAction& high = m.level(n + 1);
    const QMatrix& t = m.tmap(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            QMatrix lhs = apply_stored_right(t, low, "E", i, j);
            QMatrix rhs = apply_stored_left(high, "E", i, j, t);
            if (!(lhs == rhs))
                return false;
        }
    QMatrix lhs = apply_stored_right(t, low, "D1", 0, 0);
    QMatrix rhs = apply_stored_left(high, "D1", 0, 0, t);
    return lhs == rhs;
}

bool columns_are_unit(const QMatrix& t, std::vector<int>* positions)
{
    for (int c = 0; c < t.cols(); ++c) {
        int pos = -1;
        for (int r = 0; r < t.rows(); ++r) {
            const Rat& v = t.at(r, c);
            if (v == 0)
                continue;
            if (v != 1 || pos >= 0)
                return false;
            pos = r;
        }
        if (pos < 0)
            return false;
        if (positions)
            positions->push_back(pos);
    }
    return true;
}

long matrix_rank_fast(const QMatrix& t)
{
    std::vector<int> pos;
    if (columns_are_unit(t, &pos)) {
        std::sort(pos.begin(), pos.end());
        return std::unique(pos.begin(), pos.end()) - pos.begin();
    }
    return t.rank();
}

// Does the image of t generate level n+1 of m as a module?
bool generated_by_image(const VicModule& m, int n, const QMatrix& t, long budget)
{
    const GenAction& a = m.level(n + 1);
    std::vector<int> embedded;
    if (a.kind() == GenAction::Kind::Perm && columns_are_unit(t, &embedded)) {
        // Orbit covering: the generated submodule contains delta_{g x} for
        // every embedded point x, and is contained in the span of the
        // reachable deltas, so generation == full orbit coverage.
        std::vector<bool> seen(a.dim(), false);
        std::deque<int> queue;
        for (int x : embedded)
            if (!seen[x]) {
                seen[x] = true;
                queue.push_back(x);
            }
        std::vector<const std::vector<int>*> gens;
        for (int i = 0; i < n + 1; ++i)
            for (int j = 0; j < n + 1; ++j)
                if (i != j)
                    gens.push_back(&a.elem_perm(i, j));
        gens.push_back(&a.d1_perm());
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (const auto* p : gens) {
                int nxt = (*p)[cur];
                if (!seen[nxt]) {
                    seen[nxt] = true;
                    queue.push_back(nxt);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }
    if (a.dim() > budget)
        throw ResourceCapError("generation check exceeds the closure dimension budget");
    GenAction ad = a.densified();
    SpanBasis basis(static_cast<int>(ad.dim()));
    std::deque<std::vector<Rat>> queue;
    for (int c = 0; c < t.cols(); ++c) {
        std::vector<Rat> v(t.rows());
        for (int r = 0; r < t.rows(); ++r)
            v[r] = t.at(r, c);
        if (basis.add(v))
            queue.push_back(std::move(v));
    }
    std::vector<const QMatrix*> gens;
    for (int i = 0; i < n + 1; ++i)
        for (int j = 0; j < n + 1; ++j)
            if (i != j)
                gens.push_back(&ad.elem_matrix(i, j));
    gens.push_back(&ad.d1_matrix());
    while (!queue.empty() && basis.dim() < ad.dim()) {
        std::vector<Rat> cur = std::move(queue.front());
        queue.pop_front();
        for (const auto* g : gens) {
            std::vector<Rat> w = g->apply(cur);
            if (basis.add(w))
                queue.push_back(std::move(w));
        }
    }
    return basis.dim() == ad.dim();
}

} // namespace

bool check_equivariance(const VicModule& m)
{
    m.check_shape();
    for (int n = m.lo; n < m.hi; ++n)
        if (!map_equivariant(m, n))
            return false;
    return true;
}

TripleVerdict validate_weak_triple(const VicModule& m, int n, long closure_dim_budget)
{
    m.check_shape();
    if (n < m.lo || n + 2 > m.hi)
        throw PreconditionError("triple does not fit in the window");
    TripleVerdict v;
    const QMatrix& t_low = m.tmap(n);
    const QMatrix& t_high = m.tmap(n + 1);

    v.equivariant_low = map_equivariant(m, n);
    v.equivariant_high = map_equivariant(m, n + 1);
    v.generated_mid = generated_by_image(m, n, t_low, closure_dim_budget);
    v.generated_high = generated_by_image(m, n + 1, t_high, closure_dim_budget);

    // Complementary GL_1 = diag(1,...,1,-1) in the bottom-right slot.
    auto comp_gl1 = [&](int level, const QMatrix& image) {
        ZMat s = zmat_identity(level);
        s[level - 1][level - 1] = -1;
        QMatrix moved = m.level(level).act_on(s, image);
        return moved == image;
    };
    v.comp_gl1_low = comp_gl1(n + 1, t_low);
    v.comp_gl1_high = comp_gl1(n + 2, t_high);

    // Complementary GL_2 inside GL_{n+2} on the image of V_n.
    QMatrix t2 = t_high * t_low;
    {
        int r = n + 2;
        std::vector<ZMat> gens;
        ZMat e1 = zmat_identity(r);
        e1[r - 2][r - 1] = 1;
        gens.push_back(e1);
        ZMat e2 = zmat_identity(r);
        e2[r - 1][r - 2] = 1;
        gens.push_back(e2);
        ZMat s = zmat_identity(r);
        s[r - 1][r - 1] = -1;
        gens.push_back(s);
        v.comp_gl2 = true;
        for (const auto& g : gens)
            if (!(m.level(n + 2).act_on(g, t2) == t2))
                v.comp_gl2 = false;
    }

    v.injective_low = matrix_rank_fast(t_low) == m.dim(n);
    v.injective_high = matrix_rank_fast(t_high) == m.dim(n + 1);

    if (!v.weak()) {
        v.detail = "failed:";
        if (!v.equivariant_low || !v.equivariant_high)
            v.detail += " equivariance";
        if (!v.generated_mid || !v.generated_high)
            v.detail += " generation";
        if (!v.comp_gl1_low || !v.comp_gl1_high)
            v.detail += " complementary-GL1";
        if (!v.comp_gl2)
            v.detail += " complementary-GL2";
    }
    return v;
}

VicModule shift(const VicModule& m)
{
    m.check_shape();
    if (m.level_count() < 2)
        throw PreconditionError("window too small to shift");
    VicModule out;
    out.lo = m.lo;
    out.hi = m.hi - 1;
    for (int n = out.lo; n <= out.hi; ++n) {
        out.levels.push_back(m.level(n + 1).restrict_top_left());
        out.tags.push_back(m.tags.empty() ? "" : m.tags[n + 1 - m.lo]);
    }
    for (int n = out.lo; n < out.hi; ++n) {
        // SV structure map: rho(swap of the last two coordinates) after the
        // original map V_{n+1} -> V_{n+2}.
        int r = n + 2;
        ZMat sigma = zmat_identity(r);
        sigma[r - 2][r - 2] = 0;
        sigma[r - 1][r - 1] = 0;
        sigma[r - 2][r - 1] = 1;
        sigma[r - 1][r - 2] = 1;
        out.tmaps.push_back(m.level(n + 2).act_on(sigma, m.tmap(n + 1)));
    }
    out.check_shape();
    return out;
}

namespace {

struct InvariantSpace {
    QMatrix basis;      // dim x c
    QMatrix complement; // dim x (dim - c), spans the augmentation part
    std::vector<long> orbit_of_point;  // perm path only
    std::vector<long> orbit_sizes;     // perm path only
    bool permutation = false;
};

// Invariants of the bottom-right GL_{n-a} block at one level.
InvariantSpace bottom_right_invariants(const GenAction& act, int a)
{
    int n = act.rank();
    InvariantSpace out;
    std::vector<std::pair<std::string, std::pair<int, int>>> gen_keys;
    for (int i = a; i < n; ++i)
        for (int j = a; j < n; ++j)
            if (i != j)
                gen_keys.push_back({"E", {i, j}});
    // The sign matrix of the block, diag(1,...,1,-1).
    ZMat s = zmat_identity(n);
    s[n - 1][n - 1] = -1;

    if (act.kind() == GenAction::Kind::Perm) {
        out.permutation = true;
        std::vector<std::vector<int>> gens;
        for (const auto& [name, ij] : gen_keys)
            gens.push_back(act.elem_perm(ij.first, ij.second));
        gens.push_back(act.act_as_perm(s));
        long npts = act.dim();
        out.orbit_of_point.assign(npts, -1);
        long orbits = 0;
        for (long st = 0; st < npts; ++st) {
            if (out.orbit_of_point[st] >= 0)
                continue;
            std::deque<long> queue{st};
            out.orbit_of_point[st] = orbits;
            long size = 0;
            while (!queue.empty()) {
                long cur = queue.front();
                queue.pop_front();
                ++size;
                for (const auto& p : gens) {
                    long nxt = p[cur];
                    if (out.orbit_of_point[nxt] < 0) {
                        out.orbit_of_point[nxt] = orbits;
                        queue.push_back(nxt);
                    }
                }
            }
            out.orbit_sizes.push_back(size);
            ++orbits;
        }
        QMatrix basis(static_cast<int>(npts), static_cast<int>(orbits));
        for (long x = 0; x < npts; ++x)
            basis.at(static_cast<int>(x), static_cast<int>(out.orbit_of_point[x])) = 1;
        out.basis = std::move(basis);
        return out;
    }

    std::vector<QMatrix> mats;
    for (const auto& [name, ij] : gen_keys)
        mats.push_back(act.elem_matrix(ij.first, ij.second));
    mats.push_back(act.act(s));
    out.basis = fixed_space(mats, static_cast<int>(act.dim()));

    // Augmentation part: H-closure of the images of (rho(g) - 1).
    SpanBasis aug(static_cast<int>(act.dim()));
    std::deque<std::vector<Rat>> queue;
    for (const auto& g : mats) {
        QMatrix diff = g - QMatrix::identity(g.rows());
        for (int c = 0; c < diff.cols(); ++c) {
            std::vector<Rat> v(diff.rows());
            for (int r = 0; r < diff.rows(); ++r)
                v[r] = diff.at(r, c);
            if (aug.add(v))
                queue.push_back(std::move(v));
        }
    }
    while (!queue.empty()) {
        std::vector<Rat> cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : mats) {
            std::vector<Rat> w = g.apply(cur);
            if (aug.add(w))
                queue.push_back(std::move(w));
        }
    }
    if (aug.dim() + out.basis.cols() != act.dim())
        throw IntegrityError("level is not semisimple for the block action");
    out.complement = aug.basis_matrix();
    return out;
}

// Coordinates of the projection of v onto the invariant basis.
std::vector<Rat> project_to_invariants(const InvariantSpace& inv, const std::vector<Rat>& v)
{
    if (inv.permutation) {
        std::vector<Rat> coords(inv.orbit_sizes.size(), Rat(0));
        for (size_t x = 0; x < v.size(); ++x)
            if (v[x] != 0)
                coords[inv.orbit_of_point[x]] += v[x];
        for (size_t o = 0; o < coords.size(); ++o) {
            Rat scale(1, inv.orbit_sizes[o]);
            scale.canonicalize();
            coords[o] *= scale;
        }
        return coords;
    }
    QMatrix full = inv.basis.hstack(inv.complement);
    QMatrix rhs(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i)
        rhs.at(static_cast<int>(i), 0) = v[i];
    auto sol = full.solve(rhs);
    if (!sol)
        throw IntegrityError("projection solve failed");
    std::vector<Rat> coords(inv.basis.cols());
    for (int i = 0; i < inv.basis.cols(); ++i)
        coords[i] = sol->at(i, 0);
    return coords;
}

} // namespace

PhiModule covariants_phi(const VicModule& m, int a)
{
    m.check_shape();
    if (a < 0)
        throw PreconditionError("covariant index must be >= 0");
    PhiModule phi;
    phi.a = a;
    phi.lo = std::max(m.lo, a + 1);
    std::vector<InvariantSpace> spaces;
    for (int n = phi.lo; n <= m.hi; ++n) {
        spaces.push_back(bottom_right_invariants(m.level(n), a));
        phi.dims.push_back(spaces.back().basis.cols());
    }
    for (int n = phi.lo; n < m.hi; ++n) {
        const InvariantSpace& src = spaces[n - phi.lo];
        const InvariantSpace& dst = spaces[n + 1 - phi.lo];
        QMatrix mapped = m.tmap(n) * src.basis;
        QMatrix out(static_cast<int>(dst.basis.cols()), src.basis.cols());
        for (int c = 0; c < mapped.cols(); ++c) {
            std::vector<Rat> v(mapped.rows());
            for (int r = 0; r < mapped.rows(); ++r)
                v[r] = mapped.at(r, c);
            auto coords = project_to_invariants(dst, v);
            for (size_t r = 0; r < coords.size(); ++r)
                out.at(static_cast<int>(r), c) = coords[r];
        }
        phi.tmaps.push_back(std::move(out));
    }
    return phi;
}

std::optional<int> stabilization_degree(const PhiModule& phi)
{
    if (phi.tmaps.empty())
        return phi.lo;
    auto iso = [&](int k) {
        const QMatrix& t = phi.tmaps[k];
        return t.rows() == t.cols() && matrix_rank_fast(t) == t.rows();
    };
    int k = static_cast<int>(phi.tmaps.size()) - 1;
    if (!iso(k))
        return std::nullopt; // not reached within the window
    int best = phi.lo + k;
    for (--k; k >= 0 && iso(k); --k)
        best = phi.lo + k;
    return best;
}

std::optional<int> injectivity_degree(const VicModule& m)
{
    m.check_shape();
    std::optional<int> best;
    for (int k = static_cast<int>(m.tmaps.size()) - 1; k >= 0; --k) {
        if (matrix_rank_fast(m.tmaps[k]) != m.dim(m.lo + k))
            return best;
        best = m.lo + k;
    }
    return best;
}

std::optional<int> generation_degree(const VicModule& m, long closure_dim_budget)
{
    m.check_shape();
    std::optional<int> best;
    for (int k = static_cast<int>(m.tmaps.size()) - 1; k >= 0; --k) {
        if (!generated_by_image(m, m.lo + k, m.tmaps[k], closure_dim_budget))
            return best;
        best = m.lo + k;
    }
    return best;
}

VicModule tensor_modules(const VicModule& a, const VicModule& b, long dense_budget)
{
    a.check_shape();
    b.check_shape();
    if (a.lo != b.lo || a.hi != b.hi)
        throw PreconditionError("tensor needs matching windows");
    VicModule out;
    out.lo = a.lo;
    out.hi = a.hi;
    for (int n = a.lo; n <= a.hi; ++n) {
        bool both_perm = a.level(n).kind() == GenAction::Kind::Perm &&
                         b.level(n).kind() == GenAction::Kind::Perm;
        if (!both_perm && a.dim(n) * b.dim(n) > dense_budget)
            throw ResourceCapError("tensor level exceeds the dense budget");
        out.levels.push_back(a.level(n).tensor(b.level(n)));
        out.tags.push_back("tensor");
    }
    for (int n = a.lo; n < a.hi; ++n)
        out.tmaps.push_back(a.tmap(n).kron(b.tmap(n)));
    out.check_shape();
    return out;
}

PairVicModule tensor_as_pair(VicModule alg, VicModule fin)
{
    alg.check_shape();
    fin.check_shape();
    if (alg.lo != fin.lo || alg.hi != fin.hi)
        throw PreconditionError("pair factors need matching windows");
    return {std::move(alg), std::move(fin)};
}

long level_factoring_level(const GenAction& a, long ell_hint)
{
    if (a.kind() == GenAction::Kind::Perm) {
        long o = perm_order(a.elem_perm(0, 1));
        if (ell_hint > 0 && ell_hint % o != 0)
            throw IntegrityError("elementary order does not divide the asserted level");
        return o;
    }
    const QMatrix& e = a.elem_matrix(0, 1);
    if (e.is_identity())
        return 1;
    if (ell_hint > 0) {
        // Test divisors of the asserted level by direct powers; much cheaper
        // than a characteristic polynomial on large levels.
        for (long d = 2; d <= ell_hint; ++d)
            if (ell_hint % d == 0 && e.pow(Int(d)).is_identity())
                return d;
        throw IntegrityError("level does not factor through Z/" + std::to_string(ell_hint));
    }
    if (e.is_unipotent())
        throw IntegrityError("level is not finite type: rho(E) is unipotent and nontrivial");
    auto f = cyclotomic_orders(e.char_poly(), 5040);
    if (f.remainder.degree() > 0)
        throw IntegrityError("level is not finite type: rho(E) has a non-root-of-unity eigenvalue");
    long o = 1;
    for (auto [d, mult] : f.orders)
        o = lcm_long(o, d);
    if (!e.pow(Int(o)).is_identity())
        throw IntegrityError("level is not finite type: rho(E) is not semisimple");
    return o;
}

DepthPropVerdict depth_propagation_check(const VicModule& m, int n, long ell)
{
    m.check_shape();
    if (n + 2 > m.hi)
        throw PreconditionError("triple does not fit in the window");
    // Depth divides ell iff rho(E)^ell acts unipotently; for finite-order
    // actions unipotent means trivial, which is the factoring statement.
    auto depth_divides_level = [&](int level) {
        if (m.level(level).kind() == GenAction::Kind::Perm) {
            auto p = m.level(level).elem_perm(0, 1);
            auto acc = perm_power(p, Int(ell));
            for (size_t i = 0; i < acc.size(); ++i)
                if (acc[i] != static_cast<int>(i))
                    return false;
            return true;
        }
        return m.level(level).elem_matrix(0, 1).pow(Int(ell)).is_unipotent();
    };
    if (!depth_divides_level(n) || !depth_divides_level(n + 1))
        throw PreconditionError("hypothesis levels do not have depth dividing ell");
    DepthPropVerdict v;
    if (!depth_divides_level(n + 2)) {
        v.pass = false;
        v.witness = "rho(E_{1,2})^" + std::to_string(ell) + " acts non-unipotently at level " +
                    std::to_string(n + 2) + "; the input violates the weak-triple invariants";
    }
    return v;
}

StableDepthReport stable_depth(const VicModule& m)
{
    m.check_shape();
    StableDepthReport rep;
    for (int n = m.lo; n <= m.hi; ++n) {
        long f = level_factoring_level(m.level(n));
        rep.per_level.push_back(f);
        rep.ell = lcm_long(rep.ell, f);
    }
    for (int n = m.lo; n + 2 <= m.hi; ++n) {
        auto v = depth_propagation_check(m, n, rep.ell);
        if (!v.pass)
            rep.propagation_ok = false;
    }
    return rep;
}

VicModule inverse_transpose_twist(const VicModule& m)
{
    m.check_shape();
    VicModule out = m;
    for (auto& lvl : out.levels)
        lvl = lvl.inverse_transpose_twist();
    return out;
}

} // namespace stabrep
