#include "stabrep/errors.hpp"
#include "stabrep/vic.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>

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

long perm_order_of(const std::vector<int>& p)
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

long orbit_count_generic(const std::vector<std::vector<int>>& perms, long npts, bool pairs)
{
    long total = pairs ? npts * npts : npts;
    std::vector<bool> seen(total, false);
    long orbits = 0;
    for (long s = 0; s < total; ++s) {
        if (seen[s])
            continue;
        ++orbits;
        std::deque<long> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            long cur = queue.front();
            queue.pop_front();
            for (const auto& p : perms) {
                long nxt;
                if (pairs) {
                    long a = cur / npts, b = cur % npts;
                    nxt = static_cast<long>(p[a]) * npts + p[b];
                } else {
                    nxt = p[cur];
                }
                if (!seen[nxt]) {
                    seen[nxt] = true;
                    queue.push_back(nxt);
                }
            }
        }
    }
    return orbits;
}

std::vector<std::vector<int>> level_perm_generators(const GenAction& a)
{
    std::vector<std::vector<int>> perms;
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j)
            if (i != j)
                perms.push_back(a.elem_perm(i, j));
    perms.push_back(a.d1_perm());
    return perms;
}

// log of a unipotent matrix, exact.
QMatrix unipotent_log(const QMatrix& m)
{
    int d = m.rows();
    QMatrix u = m - QMatrix::identity(d);
    QMatrix acc(d, d);
    QMatrix pw = u;
    for (int k = 1; k <= d; ++k) {
        Rat coeff(k % 2 == 1 ? 1 : -1, k);
        coeff.canonicalize();
        acc = acc + pw * coeff;
        if (pw.is_zero())
            break;
        if (k < d)
            pw = pw * u;
    }
    return acc;
}

struct WeightLine {
    std::vector<int> eigenvalues; // one per operator
    QMatrix basis;
};

// Simultaneous integer-eigenvalue splitting of commuting semisimple
// operators on the column span of `basis`.
std::vector<WeightLine> joint_integer_eigenspaces(const std::vector<QMatrix>& ops, QMatrix basis)
{
    std::vector<WeightLine> spaces{{std::vector<int>{}, std::move(basis)}};
    for (const auto& h : ops) {
        std::vector<WeightLine> next;
        for (auto& sp : spaces) {
            auto solved = sp.basis.solve(h * sp.basis);
            if (!solved)
                throw IntegrityError("weight operator does not preserve the subspace");
            QMatrix r = *solved;
            long bound = 1;
            for (int i = 0; i < r.rows(); ++i) {
                Rat row(0);
                for (int j = 0; j < r.cols(); ++j)
                    row += abs(r.at(i, j));
                Int ceil = row.get_num() / row.get_den() + 1;
                bound = std::max(bound, ceil.get_si());
            }
            long found = 0;
            for (long t = -bound; t <= bound && found < sp.basis.cols(); ++t) {
                QMatrix shifted = r - QMatrix::identity(r.rows()) * Rat(t);
                QMatrix ker = shifted.kernel();
                if (ker.cols() == 0)
                    continue;
                found += ker.cols();
                WeightLine nl;
                nl.eigenvalues = sp.eigenvalues;
                nl.eigenvalues.push_back(static_cast<int>(t));
                nl.basis = sp.basis * ker;
                next.push_back(std::move(nl));
            }
            if (found != sp.basis.cols())
                throw IntegrityError("weight operator is not semisimple with integer spectrum");
        }
        spaces = std::move(next);
    }
    return spaces;
}

} // namespace

int LevelDecomposition::total_multiplicity() const
{
    int t = 0;
    for (const auto& [b, m] : labels)
        t += m;
    return t;
}

LevelDecomposition decompose_algebraic_level(const GenAction& a_in)
{
    GenAction a = a_in.densified();
    int n = a.rank();
    int d = static_cast<int>(a.dim());
    if (d == 0)
        return {};

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !a.elem_matrix(i, j).is_unipotent())
                throw IntegrityError("level is not pointwise algebraic: rho(E_{ij}) not unipotent");

    // Cartan operators from the Lie algebra action, plus D1 to separate
    // determinant parity.
    std::vector<QMatrix> ops;
    for (int i = 0; i + 1 < n; ++i) {
        QMatrix e = unipotent_log(a.elem_matrix(i, i + 1));
        QMatrix f = unipotent_log(a.elem_matrix(i + 1, i));
        ops.push_back(e * f - f * e);
    }
    ops.push_back(a.d1_matrix());

    std::vector<QMatrix> uppers;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            uppers.push_back(a.elem_matrix(i, j));
    QMatrix hw = fixed_space(uppers, d);
    if (hw.cols() == 0)
        throw IntegrityError("no highest weight vectors in a nonzero algebraic level");

    auto lines = joint_integer_eigenspaces(ops, hw);

    LevelDecomposition out;
    for (const auto& line : lines) {
        std::vector<int> diffs(line.eigenvalues.begin(), line.eigenvalues.end() - 1);
        int sign = line.eigenvalues.back();
        if (sign != 1 && sign != -1)
            throw IntegrityError("D1 does not act by +-1 on a weight line");
        for (int c : diffs)
            if (c < 0)
                throw IntegrityError("highest weight has a negative simple coordinate");
        int parity = sign == 1 ? 0 : 1;

        std::vector<long> suffix(n, 0);
        for (int i = n - 2; i >= 0; --i)
            suffix[i] = suffix[i + 1] + diffs[i];

        // Choose the determinant shift: minimal bipartition length with the
        // right parity of a_1; scan a small window around zero.
        long best_t = 0;
        int best_len = -1;
        for (long t = -suffix[0] - 2; t <= 2; ++t) {
            if (((suffix[0] + t) % 2 + 2) % 2 != parity)
                continue;
            int len = 0;
            for (int i = 0; i < n; ++i)
                if (suffix[i] + t != 0)
                    ++len;
            if (best_len < 0 || len < best_len) {
                best_len = len;
                best_t = t;
            }
        }
        std::vector<int> plus, minus;
        for (int i = 0; i < n; ++i) {
            long e = suffix[i] + best_t;
            if (e > 0)
                plus.push_back(static_cast<int>(e));
            else if (e < 0)
                minus.push_back(static_cast<int>(-e));
        }
        std::reverse(minus.begin(), minus.end());
        Bipartition b{Partition(std::move(plus)), Partition(std::move(minus))};
        bool merged = false;
        for (auto& [lbl, mult] : out.labels)
            if (lbl == b) {
                mult += line.basis.cols();
                merged = true;
            }
        if (!merged)
            out.labels.push_back({b, line.basis.cols()});
    }
    std::sort(out.labels.begin(), out.labels.end(),
              [](const auto& x, const auto& y) { return refinement_less(x.first, y.first); });

    Int total(0);
    for (const auto& [b, mult] : out.labels)
        total += weyl_dimension({b, n}) * mult;
    if (total != Int(d))
        throw IntegrityError("algebraic decomposition does not fill the level dimension");
    return out;
}

namespace {

bool level_is_algebraic(const GenAction& a)
{
    if (a.kind() == GenAction::Kind::Perm) {
        // A finite-order unipotent permutation is the identity.
        for (int i = 0; i < a.rank(); ++i)
            for (int j = 0; j < a.rank(); ++j)
                if (i != j) {
                    const auto& p = a.elem_perm(i, j);
                    for (size_t x = 0; x < p.size(); ++x)
                        if (p[x] != static_cast<int>(x))
                            return false;
                }
        return true;
    }
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j)
            if (i != j && !a.elem_matrix(i, j).is_unipotent())
                return false;
    return true;
}

bool level_is_finite_type(const GenAction& a)
{
    try {
        level_factoring_level(a);
        return true;
    } catch (const IntegrityError&) {
        return false;
    }
}

int head_boundary_level(const VicModule& m, long budget, std::string& note)
{
    auto inj = injectivity_degree(m);
    std::optional<int> gen;
    try {
        gen = generation_degree(m, budget);
    } catch (const ResourceCapError&) {
        note += "generation degree not measured (budget); ";
    }
    int b = m.lo;
    if (inj)
        b = std::max(b, *inj);
    else {
        note += "injectivity not reached in window; ";
        b = m.hi + 1;
    }
    if (gen)
        b = std::max(b, *gen);
    return b;
}

} // namespace

FiltrationReport algebraic_isotypic_filtration(const VicModule& m, long closure_dim_budget)
{
    m.check_shape();
    FiltrationReport rep;
    rep.head_boundary = head_boundary_level(m, closure_dim_budget, rep.note);
    for (int n = m.lo; n < rep.head_boundary && n <= m.hi; ++n)
        rep.head_dims.push_back(m.dim(n));
    int start = std::max(m.lo, rep.head_boundary);

    bool all_finite = true, all_algebraic = true;
    for (int n = start; n <= m.hi; ++n) {
        if (!level_is_finite_type(m.level(n)))
            all_finite = false;
        if (!level_is_algebraic(m.level(n)))
            all_algebraic = false;
    }

    if (all_algebraic) {
        std::vector<LevelDecomposition> decs;
        for (int n = start; n <= m.hi; ++n)
            decs.push_back(decompose_algebraic_level(m.level(n)));
        std::vector<Bipartition> order;
        for (const auto& dec : decs)
            for (const auto& [b, mult] : dec.labels)
                if (std::find(order.begin(), order.end(), b) == order.end())
                    order.push_back(b);
        order = containment_refinement(order);
        for (const auto& b : order) {
            FiltrationLayer layer;
            layer.label = b;
            layer.depth = 1;
            for (const auto& dec : decs) {
                long mult = 0;
                for (const auto& [lb, mu] : dec.labels)
                    if (lb == b)
                        mult = mu;
                layer.mult_dims.push_back(mult);
            }
            rep.layers.push_back(std::move(layer));
        }
    } else if (all_finite) {
        FiltrationLayer layer;
        layer.label = Bipartition{};
        for (int n = start; n <= m.hi; ++n)
            layer.mult_dims.push_back(m.dim(n));
        layer.depth = stable_depth(m).ell;
        rep.layers.push_back(std::move(layer));
    } else {
        throw IntegrityError(
            "undecomposable mixed level: present the module as label x multiplicity pairs");
    }

    for (int n = start; n <= m.hi; ++n) {
        Int total(0);
        for (const auto& layer : rep.layers)
            total += weyl_dimension({layer.label, n}) * layer.mult_dims[n - start];
        if (total != Int(m.dim(n)))
            rep.dimension_identity = false;
    }
    return rep;
}

namespace {

// Exact generation certificate for pair modules: an irreducible nontrivial
// algebraic factor tensored with a 2-transitive permutation factor splits
// into two non-isomorphic irreducibles (trivial and sum-zero finite parts),
// so any submodule with nonzero projections onto both is everything. The
// image of a pair structure map always has both projections nonzero when
// the factor maps are injective point embeddings.
bool pair_generation_exact(const PairVicModule& m, int n, std::string& note)
{
    const GenAction& fin = m.fin.level(n + 1);
    if (fin.kind() != GenAction::Kind::Perm) {
        note += "pair generation needs a permutation finite factor; ";
        return false;
    }
    auto perms = level_perm_generators(fin);
    long pts = fin.dim();
    if (pts < 2 || orbit_count_generic(perms, pts, false) != 1 ||
        orbit_count_generic(perms, pts, true) != 2) {
        note += "finite factor is not 2-transitive; ";
        return false;
    }
    auto dec = decompose_algebraic_level(m.alg.level(n + 1));
    if (dec.labels.size() != 1 || dec.labels[0].second != 1 || dec.labels[0].first == Bipartition{}) {
        note += "algebraic factor is not a single nontrivial irreducible; ";
        return false;
    }
    const QMatrix& tf = m.fin.tmap(n);
    for (int c = 0; c < tf.cols(); ++c) {
        int pos = -1;
        for (int r = 0; r < tf.rows(); ++r) {
            if (tf.at(r, c) == 0)
                continue;
            if (tf.at(r, c) != 1 || pos >= 0) {
                note += "finite structure map is not a point embedding; ";
                return false;
            }
            pos = r;
        }
        if (pos < 0) {
            note += "finite structure map is not a point embedding; ";
            return false;
        }
    }
    if (m.alg.tmap(n).rank() != m.alg.dim(n)) {
        note += "algebraic structure map not injective; ";
        return false;
    }
    return true;
}

} // namespace

FiltrationReport algebraic_isotypic_filtration(const PairVicModule& m, long closure_dim_budget)
{
    m.alg.check_shape();
    m.fin.check_shape();
    FiltrationReport rep;

    int lo = m.alg.lo, hi = m.alg.hi;
    int boundary = lo;
    {
        std::optional<int> inj;
        for (int k = static_cast<int>(m.alg.tmaps.size()) - 1; k >= 0; --k) {
            bool ok = m.alg.tmaps[k].rank() == m.alg.dim(lo + k) &&
                      m.fin.tmaps[k].rank() == m.fin.dim(lo + k);
            if (!ok)
                break;
            inj = lo + k;
        }
        if (!inj) {
            rep.note += "pair injectivity not reached; ";
            boundary = hi + 1;
        } else {
            boundary = std::max(boundary, *inj);
        }
        std::optional<int> gen;
        for (int n = hi - 1; n >= lo; --n) {
            if (!pair_generation_exact(m, n, rep.note))
                break;
            gen = n;
        }
        if (gen)
            boundary = std::max(boundary, *gen);
        else
            rep.note += "pair generation certificate unavailable; ";
    }
    rep.head_boundary = boundary;
    for (int n = lo; n < boundary && n <= hi; ++n)
        rep.head_dims.push_back(m.dim(n));
    int start = std::max(lo, boundary);
    if (start > hi)
        throw IntegrityError("window is entirely torsion head");

    std::optional<Bipartition> label;
    for (int n = start; n <= hi; ++n) {
        auto dec = decompose_algebraic_level(m.alg.level(n));
        if (dec.labels.size() != 1 || dec.labels[0].second != 1)
            throw IntegrityError("pair module with a non-irreducible algebraic factor");
        if (label && !(dec.labels[0].first == *label))
            throw IntegrityError("pair module label varies across levels");
        label = dec.labels[0].first;
    }
    FiltrationLayer layer;
    layer.label = *label;
    for (int n = start; n <= hi; ++n)
        layer.mult_dims.push_back(m.fin.dim(n));
    layer.depth = stable_depth(m.fin).ell;
    rep.layers.push_back(std::move(layer));

    for (int n = start; n <= hi; ++n) {
        Int expect = weyl_dimension({*label, n}) * Int(m.fin.dim(n));
        if (expect != Int(m.dim(n)))
            rep.dimension_identity = false;
    }
    (void)closure_dim_budget;
    return rep;
}

namespace {

// Quotient module coker(V -> SV) for the polynomial-degree recursion.
std::optional<VicModule> shift_cokernel(const VicModule& m, long budget)
{
    VicModule sv = shift(m);
    VicModule out;
    out.lo = m.lo;
    out.hi = sv.hi;
    std::vector<QMatrix> proj, section;
    for (int n = out.lo; n <= out.hi; ++n) {
        if (m.dim(n + 1) > budget)
            return std::nullopt;
        const QMatrix& t = m.tmap(n);
        int big = static_cast<int>(m.dim(n + 1));
        // Independent columns of t, then unit vectors, as an invertible P.
        SpanBasis span(big);
        std::vector<int> keep_cols, extra_units;
        for (int c = 0; c < t.cols(); ++c) {
            std::vector<Rat> v(big);
            for (int r = 0; r < big; ++r)
                v[r] = t.at(r, c);
            if (span.add(std::move(v)))
                keep_cols.push_back(c);
        }
        int rank = static_cast<int>(keep_cols.size());
        for (int e = 0; e < big && span.dim() < big; ++e) {
            std::vector<Rat> v(big, Rat(0));
            v[e] = 1;
            if (span.add(std::move(v)))
                extra_units.push_back(e);
        }
        QMatrix P(big, big);
        for (int c = 0; c < rank; ++c)
            for (int r = 0; r < big; ++r)
                P.at(r, c) = t.at(r, keep_cols[c]);
        for (size_t k = 0; k < extra_units.size(); ++k)
            P.at(extra_units[k], rank + static_cast<int>(k)) = 1;
        QMatrix Pinv = P.inverse();
        int c = big - rank;
        QMatrix pr(c, big);
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < big; ++j)
                pr.at(i, j) = Pinv.at(rank + i, j);
        QMatrix sec(big, c);
        for (int i = 0; i < c; ++i)
            sec.at(extra_units[i], i) = 1;
        proj.push_back(std::move(pr));
        section.push_back(std::move(sec));
    }
    for (int n = out.lo; n <= out.hi; ++n) {
        const QMatrix& pr = proj[n - out.lo];
        const QMatrix& sec = section[n - out.lo];
        GenAction lvl = sv.level(n).densified();
        std::map<std::pair<int, int>, QMatrix> mats;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    mats.emplace(std::make_pair(i, j), pr * lvl.elem_matrix(i, j) * sec);
        out.levels.push_back(GenAction::dense(n, std::move(mats), pr * lvl.d1_matrix() * sec));
        out.tags.push_back("cokernel");
    }
    for (int n = out.lo; n < out.hi; ++n)
        out.tmaps.push_back(proj[n + 1 - out.lo] * sv.tmap(n) * section[n - out.lo]);
    out.check_shape();
    return out;
}

// Degree per the shift recursion; `determined` reports whether the window
// sufficed.
int polynomial_degree_recursive(const VicModule& m, long budget, bool& determined)
{
    bool all_zero = true;
    for (int n = m.lo; n <= m.hi; ++n)
        if (m.dim(n) != 0)
            all_zero = false;
    if (all_zero)
        return -1;
    if (m.level_count() < 2) {
        determined = false;
        return -1;
    }
    for (int n = m.lo; n < m.hi; ++n)
        if (m.tmap(n).rank() != m.dim(n)) {
            determined = false;
            return -1;
        }
    auto coker = shift_cokernel(m, budget);
    if (!coker) {
        determined = false;
        return -1;
    }
    int sub = polynomial_degree_recursive(*coker, budget, determined);
    return determined ? sub + 1 : -1;
}

VicModule truncate_left(const VicModule& m, int new_lo)
{
    VicModule out;
    out.lo = new_lo;
    out.hi = m.hi;
    for (int n = new_lo; n <= m.hi; ++n) {
        out.levels.push_back(m.level(n));
        out.tags.push_back("");
    }
    for (int n = new_lo; n < m.hi; ++n)
        out.tmaps.push_back(m.tmap(n));
    return out;
}

} // namespace

GrowthReport growth_classify(const VicModule& m, long dense_budget)
{
    m.check_shape();
    GrowthReport rep;
    for (int n = m.lo; n <= m.hi; ++n)
        rep.dims.push_back(Int(m.dim(n)));

    if (m.dim(m.hi) == 0) {
        rep.kind = "torsion";
        return rep;
    }

    // Polynomial-degree recursion; non-injective head levels may be dropped,
    // matching the "in degrees > N" form of the definition.
    for (int start = m.lo; start < m.hi; ++start) {
        bool determined = true;
        int deg = polynomial_degree_recursive(start == m.lo ? m : truncate_left(m, start),
                                              dense_budget, determined);
        if (determined) {
            rep.kind = "polynomial";
            rep.degree = deg;
            rep.pointwise_algebraic_checked = true;
            for (int n = start; n <= m.hi; ++n)
                if (!level_is_algebraic(m.level(n)))
                    rep.pointwise_algebraic_checked = false;
            return rep;
        }
        bool head_map_injective = m.tmap(start).rank() == m.dim(start);
        if (head_map_injective)
            break;
    }

    rep.kind = "exponential";
    for (long c = 1;; ++c) {
        bool fits = true;
        for (int n = m.lo; n <= m.hi; ++n)
            if (Int(m.dim(n)) > int_pow(Int(c), n))
                fits = false;
        if (fits) {
            rep.exp_base = c;
            break;
        }
    }
    bool finite = true;
    for (int n = m.lo; n <= m.hi; ++n)
        if (!level_is_finite_type(m.level(n)))
            finite = false;
    if (finite)
        rep.stable_depth = stable_depth(m).ell;
    return rep;
}

GrowthReport growth_classify(const PairVicModule& m)
{
    GrowthReport rep;
    for (int n = m.alg.lo; n <= m.alg.hi; ++n)
        rep.dims.push_back(Int(m.dim(n)));
    rep.kind = "exponential";
    for (long c = 1;; ++c) {
        bool fits = true;
        for (int n = m.alg.lo; n <= m.alg.hi; ++n)
            if (Int(m.dim(n)) > int_pow(Int(c), n))
                fits = false;
        if (fits) {
            rep.exp_base = c;
            break;
        }
    }
    rep.stable_depth = stable_depth(m.fin).ell;
    return rep;
}

LengthReport length_bound(const VicModule& m)
{
    m.check_shape();
    LengthReport rep;
    for (int n = m.lo; n <= m.hi; ++n) {
        const GenAction& a = m.level(n);
        long len;
        if (level_is_algebraic(a)) {
            len = decompose_algebraic_level(a).total_multiplicity();
        } else if (a.kind() == GenAction::Kind::Perm) {
            // <pi,pi> = orbit count on ordered pairs; with <pi,1> = 1 and a
            // small value this pins the multiplicity-free summand count.
            len = orbit_count_generic(level_perm_generators(a), a.dim(), true);
        } else {
            throw IntegrityError("length bound needs algebraic or permutation levels");
        }
        rep.per_level.push_back(len);
        rep.bound = std::max(rep.bound, len);
    }
    for (size_t i = 1; i < rep.per_level.size(); ++i)
        if (rep.per_level[i] != rep.per_level[0])
            rep.constant_tail = false;
    return rep;
}

LengthReport length_bound(const PairVicModule& m)
{
    for (int n = m.alg.lo; n <= m.alg.hi; ++n) {
        auto dec = decompose_algebraic_level(m.alg.level(n));
        if (dec.labels.size() != 1 || dec.labels[0].second != 1)
            throw IntegrityError("pair length bound needs an irreducible algebraic factor");
    }
    return length_bound(m.fin);
}

// --- SL -> GL extension ---

namespace {

std::vector<long> units_mod(long ell)
{
    std::vector<long> us;
    for (long u = 1; u < ell; ++u)
        if (std::gcd(u, ell) == 1)
            us.push_back(u);
    return us;
}

QMatrix act_mod_sl(const GenAction& a, const ZMat& g, long ell)
{
    Word w = word_for_mod(g, ell);
    GenAction dense = a.densified();
    QMatrix acc = QMatrix::identity(static_cast<int>(a.dim()));
    for (const auto& op : w) {
        if (op.kind == GenOp::Kind::Diag1)
            throw IntegrityError("determinant factor in an SL word");
        acc = acc * dense.elem_matrix(op.i, op.j).pow(op.c);
    }
    return acc;
}

std::vector<int> act_mod_sl_perm(const GenAction& a, const ZMat& g, long ell)
{
    Word w = word_for_mod(g, ell);
    std::vector<int> acc = perm_identity(a.dim());
    for (const auto& op : w) {
        if (op.kind == GenOp::Kind::Diag1)
            throw IntegrityError("determinant factor in an SL word");
        const auto& p = a.elem_perm(op.i, op.j);
        Int r = op.c % perm_order_of(p);
        if (r < 0)
            r += perm_order_of(p);
        for (long t = 0; t < r.get_si(); ++t)
            acc = perm_compose(acc, p);
    }
    return acc;
}

ZMat embed_det_inverse(const ZMat& a, long ell)
{
    int n = static_cast<int>(a.size());
    ZMat m = zmat_identity(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = a[i][j];
    Int det = zmat_det(a) % ell;
    if (det < 0)
        det += ell;
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), det.get_mpz_t(), Int(ell).get_mpz_t());
    if (g != 1)
        throw PreconditionError("matrix determinant is not a unit");
    Int dinv = s % ell;
    if (dinv < 0)
        dinv += ell;
    m[n][n] = dinv;
    return m;
}

std::vector<int> unit_positions_of(const QMatrix& t)
{
    std::vector<int> pos;
    for (int c = 0; c < t.cols(); ++c) {
        int hit = -1;
        for (int r = 0; r < t.rows(); ++r) {
            if (t.at(r, c) == 0)
                continue;
            if (t.at(r, c) != 1 || hit >= 0)
                return {};
            hit = r;
        }
        if (hit < 0)
            return {};
        pos.push_back(hit);
    }
    return pos;
}

} // namespace

QMatrix GlExtension::act(const VicModule& m, int n, const ZMat& g) const
{
    Word w = word_for_mod(g, ell);
    GenAction lvl = m.level(n).densified();
    QMatrix acc = QMatrix::identity(static_cast<int>(lvl.dim()));
    const GlExtensionLevel& lv = levels.at(n - m.lo);
    for (const auto& op : w) {
        if (op.kind == GenOp::Kind::Diag1)
            acc = acc * lv.unit_images.at(op.c.get_si());
        else
            acc = acc * lvl.elem_matrix(op.i, op.j).pow(op.c);
    }
    return acc;
}

std::vector<int> GlExtension::act_as_perm(const VicModule& m, int n, const ZMat& g) const
{
    Word w = word_for_mod(g, ell);
    const GenAction& lvl = m.level(n);
    std::vector<int> acc = perm_identity(lvl.dim());
    const GlExtensionLevel& lv = levels.at(n - m.lo);
    for (const auto& op : w) {
        if (op.kind == GenOp::Kind::Diag1) {
            acc = perm_compose(acc, lv.unit_perms.at(op.c.get_si()));
        } else {
            const auto& p = lvl.elem_perm(op.i, op.j);
            Int r = op.c % perm_order_of(p);
            if (r < 0)
                r += perm_order_of(p);
            for (long t = 0; t < r.get_si(); ++t)
                acc = perm_compose(acc, p);
        }
    }
    return acc;
}

GlExtension extend_sl_to_gl(const VicModule& m, long ell)
{
    m.check_shape();
    GlExtension ext;
    ext.ell = ell;
    auto units = units_mod(ell);

    for (int n = m.lo; n <= m.hi; ++n) {
        long f = level_factoring_level(m.level(n), ell);
        if (ell % f != 0)
            throw PreconditionError("level does not factor through Z/ell");
    }

    for (int n = m.lo; n < m.hi; ++n) {
        GlExtensionLevel lvl;
        lvl.n = n;
        const QMatrix& t = m.tmap(n);
        bool perm_path = m.level(n).kind() == GenAction::Kind::Perm &&
                         m.level(n + 1).kind() == GenAction::Kind::Perm;
        std::vector<int> unit_cols = perm_path ? unit_positions_of(t) : std::vector<int>{};
        perm_path = perm_path && !unit_cols.empty();
        std::vector<long> back;
        if (perm_path) {
            back.assign(m.dim(n + 1), -1);
            for (size_t c = 0; c < unit_cols.size(); ++c)
                back[unit_cols[c]] = static_cast<long>(c);
        }

        auto pull_perm = [&](const ZMat& big) -> std::optional<std::vector<int>> {
            std::vector<int> pbig = act_mod_sl_perm(m.level(n + 1), big, ell);
            std::vector<int> y(m.dim(n));
            for (size_t c = 0; c < unit_cols.size(); ++c) {
                int target = pbig[unit_cols[c]];
                if (back[target] < 0)
                    return std::nullopt;
                y[c] = static_cast<int>(back[target]);
            }
            return y;
        };

        for (long u : units) {
            ZMat du = zmat_identity(n);
            du[0][0] = u;
            ZMat big = embed_det_inverse(du, ell);
            if (perm_path) {
                auto y = pull_perm(big);
                if (!y)
                    throw IntegrityError("embedded image is not preserved by the extension");
                lvl.unit_perms[u] = std::move(*y);
            } else {
                QMatrix big_img = act_mod_sl(m.level(n + 1), big, ell);
                auto y = t.solve(big_img * t);
                if (!y)
                    throw IntegrityError("embedded image is not preserved by the extension");
                lvl.unit_images[u] = std::move(*y);
            }
        }

        lvl.restriction_matches = true;
        for (int i = 0; i < n && lvl.restriction_matches; ++i)
            for (int j = 0; j < n && lvl.restriction_matches; ++j) {
                if (i == j)
                    continue;
                ZMat e = zmat_identity(n);
                e[i][j] = 1;
                ZMat big = embed_det_inverse(e, ell);
                if (perm_path) {
                    auto y = pull_perm(big);
                    if (!y || *y != act_mod_sl_perm(m.level(n), e, ell))
                        lvl.restriction_matches = false;
                } else {
                    QMatrix big_img = act_mod_sl(m.level(n + 1), big, ell);
                    auto y = t.solve(big_img * t);
                    if (!y || !(*y == act_mod_sl(m.level(n), e, ell)))
                        lvl.restriction_matches = false;
                }
            }
        ext.levels.push_back(std::move(lvl));
    }

    ext.equivariance_ok = true;
    ext.complementary_gl1_ok = true;
    for (int n = m.lo; n + 1 < m.hi; ++n) {
        const QMatrix& t = m.tmap(n);
        const GlExtensionLevel& low = ext.levels[n - m.lo];
        const GlExtensionLevel& high = ext.levels[n + 1 - m.lo];
        std::vector<int> unit_cols = unit_positions_of(t);
        bool perm_path = !low.unit_perms.empty() && !high.unit_perms.empty() && !unit_cols.empty();
        for (long u : units) {
            if (perm_path) {
                const auto& ylow = low.unit_perms.at(u);
                const auto& yhigh = high.unit_perms.at(u);
                for (int c = 0; c < t.cols(); ++c)
                    if (yhigh[unit_cols[c]] != unit_cols[ylow[c]])
                        ext.equivariance_ok = false;
            } else {
                if (!(high.unit_images.at(u) * t == t * low.unit_images.at(u)))
                    ext.equivariance_ok = false;
            }
            ZMat comp = zmat_identity(n + 1);
            comp[n][n] = u;
            if (perm_path) {
                auto p = ext.act_as_perm(m, n + 1, comp);
                for (int c = 0; c < t.cols(); ++c)
                    if (p[unit_cols[c]] != unit_cols[c])
                        ext.complementary_gl1_ok = false;
            } else {
                if (!(ext.act(m, n + 1, comp) * t == t))
                    ext.complementary_gl1_ok = false;
            }
        }
    }
    return ext;
}

SubmoduleWitness noetherian_witness(const VicModule& m, int a, uint64_t seed)
{
    m.check_shape();
    std::mt19937_64 rng(seed);
    std::vector<Rat> v(m.dim(m.lo));
    for (auto& x : v)
        x = Rat(static_cast<long>(rng() % 7) - 3);
    bool nonzero = false;
    for (const auto& x : v)
        if (x != 0)
            nonzero = true;
    if (!nonzero)
        v[0] = 1;

    VicModule sub;
    sub.lo = m.lo;
    sub.hi = m.hi;
    std::vector<QMatrix> bases;
    std::vector<std::vector<Rat>> seeds{v};
    for (int n = m.lo; n <= m.hi; ++n) {
        GenAction lvl = m.level(n).densified();
        SpanBasis basis(static_cast<int>(lvl.dim()));
        std::deque<std::vector<Rat>> queue;
        for (auto& s : seeds)
            if (basis.add(s))
                queue.push_back(s);
        std::vector<const QMatrix*> gens;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    gens.push_back(&lvl.elem_matrix(i, j));
        gens.push_back(&lvl.d1_matrix());
        while (!queue.empty()) {
            auto cur = std::move(queue.front());
            queue.pop_front();
            for (const auto* g : gens) {
                auto w = g->apply(cur);
                if (basis.add(w))
                    queue.push_back(std::move(w));
            }
        }
        QMatrix b = basis.basis_matrix();
        std::map<std::pair<int, int>, QMatrix> mats;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                auto r = b.solve(lvl.elem_matrix(i, j) * b);
                if (!r)
                    throw IntegrityError("closure is not invariant");
                mats.emplace(std::make_pair(i, j), std::move(*r));
            }
        auto rd = b.solve(lvl.d1_matrix() * b);
        if (!rd)
            throw IntegrityError("closure is not invariant");
        sub.levels.push_back(GenAction::dense(n, std::move(mats), std::move(*rd)));
        sub.tags.push_back("submodule");
        if (n < m.hi) {
            seeds.clear();
            QMatrix mapped = m.tmap(n) * b;
            for (int c = 0; c < mapped.cols(); ++c) {
                std::vector<Rat> w(mapped.rows());
                for (int r = 0; r < mapped.rows(); ++r)
                    w[r] = mapped.at(r, c);
                seeds.push_back(std::move(w));
            }
        }
        bases.push_back(std::move(b));
    }
    for (int n = m.lo; n < m.hi; ++n) {
        auto r = bases[n + 1 - m.lo].solve(m.tmap(n) * bases[n - m.lo]);
        if (!r)
            throw IntegrityError("structure map does not preserve the submodule");
        sub.tmaps.push_back(std::move(*r));
    }
    sub.check_shape();

    SubmoduleWitness wit;
    for (int n = sub.lo; n <= sub.hi; ++n)
        wit.dims.push_back(sub.dim(n));
    PhiModule phi = covariants_phi(sub, a);
    wit.phi_dims = std::vector<long>(phi.dims.begin(), phi.dims.end());
    wit.phi_stabilization = stabilization_degree(phi);
    wit.generation = sub.lo; // generated from the seed level by construction
    return wit;
}

} // namespace stabrep
