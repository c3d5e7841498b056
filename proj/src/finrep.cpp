#include "stabrep/finrep.hpp"

#include "stabrep/errors.hpp"

#include <algorithm>
#include <random>

namespace stabrep {

namespace {

std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b)
{
    // (a after b): x -> a[b[x]]
    std::vector<int> r(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

QMatrix perm_matrix(const std::vector<int>& p)
{
    QMatrix m(static_cast<int>(p.size()), static_cast<int>(p.size()));
    for (size_t j = 0; j < p.size(); ++j)
        m.at(p[j], static_cast<int>(j)) = 1;
    return m;
}

} // namespace

FiniteRep FiniteRep::dense(const FiniteMatrixGroup& g, std::vector<QMatrix> images)
{
    if (images.size() != g.generators().size())
        throw PreconditionError("one image per group generator required");
    FiniteRep r;
    r.g_ = &g;
    r.dim_ = images.empty() ? 0 : images[0].rows();
    r.is_perm_ = false;
    r.images_ = std::move(images);
    for (const auto& m : r.images_)
        if (m.rows() != r.dim_ || m.cols() != r.dim_)
            throw PreconditionError("generator images must be square of equal size");
    return r;
}

FiniteRep FiniteRep::permutation(const FiniteMatrixGroup& g, std::vector<std::vector<int>> perms)
{
    if (perms.size() != g.generators().size())
        throw PreconditionError("one permutation per group generator required");
    FiniteRep r;
    r.g_ = &g;
    r.dim_ = perms.empty() ? 0 : static_cast<int>(perms[0].size());
    r.is_perm_ = true;
    r.perms_ = std::move(perms);
    return r;
}

FiniteRep FiniteRep::projective_permutation(const FiniteMatrixGroup& g)
{
    auto pts = proj_points(g.rank(), g.modulus());
    std::vector<std::vector<int>> perms;
    for (const auto& gen : g.generators())
        perms.push_back(proj_perm(gen, pts));
    return permutation(g, std::move(perms));
}

FiniteRep FiniteRep::sum_zero_subrep() const
{
    if (!is_perm_)
        throw PreconditionError("sum-zero subrepresentation needs a permutation model");
    int n = dim_;
    std::vector<QMatrix> images;
    for (const auto& p : perms_) {
        // Basis v_x = e_x - e_0 for x = 1..n-1; p moves v_x to
        // e_{p(x)} - e_{p(0)} = v_{p(x)} - v_{p(0)} (v_0 = 0).
        QMatrix m(n - 1, n - 1);
        for (int x = 1; x < n; ++x) {
            int px = p[x], p0 = p[0];
            if (px != 0)
                m.at(px - 1, x - 1) += 1;
            if (p0 != 0)
                m.at(p0 - 1, x - 1) -= 1;
        }
        images.push_back(std::move(m));
    }
    return dense(*g_, std::move(images));
}

FiniteRep FiniteRep::regular(const FiniteMatrixGroup& g)
{
    std::vector<std::vector<int>> perms;
    for (const auto& gen : g.generators()) {
        std::vector<int> p(g.size());
        for (uint32_t x = 0; x < g.size(); ++x)
            p[x] = static_cast<int>(g.id_of(gen.mul(g.element(x))));
        perms.push_back(std::move(p));
    }
    return permutation(g, std::move(perms));
}

FiniteRep FiniteRep::vector_permutation(const FiniteMatrixGroup& g)
{
    int n = g.rank();
    long q = g.modulus();
    long count = 1;
    for (int i = 0; i < n; ++i)
        count *= q;
    auto decode = [&](long idx) {
        std::vector<long> v(n);
        for (int i = 0; i < n; ++i) {
            v[i] = idx % q;
            idx /= q;
        }
        return v;
    };
    auto encode = [&](const std::vector<long>& v) {
        long idx = 0;
        for (int i = n - 1; i >= 0; --i)
            idx = idx * q + v[i];
        return idx;
    };
    std::vector<std::vector<int>> perms;
    for (const auto& gen : g.generators()) {
        std::vector<int> p(count);
        for (long idx = 0; idx < count; ++idx) {
            auto v = decode(idx);
            std::vector<long> w(n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    w[i] = (w[i] + gen.at(i, j) * v[j]) % q;
            p[idx] = static_cast<int>(encode(w));
        }
        perms.push_back(std::move(p));
    }
    return permutation(g, std::move(perms));
}

QMatrix FiniteRep::image_of_generator(size_t gi) const
{
    return is_perm_ ? perm_matrix(perms_[gi]) : images_[gi];
}

std::vector<int> FiniteRep::perm_of(uint32_t element_id) const
{
    if (!is_perm_)
        throw PreconditionError("not a permutation representation");
    std::vector<int> acc(dim_);
    for (int i = 0; i < dim_; ++i)
        acc[i] = i;
    for (int gi : g_->word_of(element_id))
        acc = perm_compose(acc, perms_[gi]);
    return acc;
}

QMatrix FiniteRep::image_of(uint32_t element_id) const
{
    if (is_perm_)
        return perm_matrix(perm_of(element_id));
    QMatrix acc = QMatrix::identity(dim_);
    for (int gi : g_->word_of(element_id))
        acc = acc * images_[gi];
    return acc;
}

Rat FiniteRep::trace_of(uint32_t element_id) const
{
    if (is_perm_) {
        auto p = perm_of(element_id);
        long fixed = 0;
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i] == static_cast<int>(i))
                ++fixed;
        return Rat(fixed);
    }
    QMatrix m = image_of(element_id);
    Rat t(0);
    for (int i = 0; i < dim_; ++i)
        t += m.at(i, i);
    return t;
}

std::vector<Rat> FiniteRep::character() const
{
    std::vector<Rat> chi;
    for (size_t c = 0; c < g_->class_count(); ++c)
        chi.push_back(trace_of(g_->class_rep(static_cast<uint32_t>(c))));
    return chi;
}

void FiniteRep::validate(uint64_t seed, int samples) const
{
    // rho(g)^order(g) = 1 for every generator, plus seeded random product
    // spot checks of multiplicativity against the enumerated group.
    for (size_t gi = 0; gi < g_->generators().size(); ++gi) {
        long o = g_->element_order(g_->id_of(g_->generators()[gi]));
        QMatrix img = image_of_generator(gi);
        if (!img.pow(Int(o)).is_identity())
            throw IntegrityError("generator image order does not divide the group order");
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        uint32_t x = static_cast<uint32_t>(rng() % g_->size());
        uint32_t y = static_cast<uint32_t>(rng() % g_->size());
        uint32_t xy = g_->mul_ids(x, y);
        if (is_perm_) {
            if (perm_compose(perm_of(x), perm_of(y)) != perm_of(xy))
                throw IntegrityError("representation is not multiplicative");
        } else {
            if (!(image_of(x) * image_of(y) == image_of(xy)))
                throw IntegrityError("representation is not multiplicative");
        }
    }
}

long FiniteRep::factoring_level() const
{
    long ell = g_->modulus();
    size_t e_gi = SIZE_MAX;
    for (size_t gi = 0; gi < g_->generator_names().size(); ++gi)
        if (g_->generator_names()[gi] == "E(1,2)")
            e_gi = gi;
    if (e_gi == SIZE_MAX)
        throw IntegrityError("group has no E(1,2) generator");
    for (long ell2 = 1; ell2 <= ell; ++ell2) {
        if (ell % ell2 != 0)
            continue;
        bool trivial;
        if (is_perm_) {
            std::vector<int> acc(dim_);
            for (int i = 0; i < dim_; ++i)
                acc[i] = i;
            for (long t = 0; t < ell2; ++t)
                acc = perm_compose(perms_[e_gi], acc);
            trivial = true;
            for (int i = 0; i < dim_; ++i)
                if (acc[i] != i)
                    trivial = false;
        } else {
            trivial = images_[e_gi].pow(Int(ell2)).is_identity();
        }
        if (trivial)
            return ell2;
    }
    return ell;
}

bool FiniteRep::kernel_acts_trivially(long ell2) const
{
    for (uint32_t id : g_->reduction_kernel(ell2)) {
        if (is_perm_) {
            auto p = perm_of(id);
            for (size_t i = 0; i < p.size(); ++i)
                if (p[i] != static_cast<int>(i))
                    return false;
        } else if (!image_of(id).is_identity()) {
            return false;
        }
    }
    return true;
}

} // namespace stabrep
