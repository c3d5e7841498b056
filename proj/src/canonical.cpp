#include "stabrep/canonical.hpp"

#include "stabrep/errors.hpp"
#include "stabrep/modgroup.hpp"

#include <unordered_map>

namespace stabrep {

namespace {

GenAction scalar_level(int n, const Rat& d1_value)
{
    std::map<std::pair<int, int>, QMatrix> mats;
    QMatrix one = QMatrix::identity(1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                mats.emplace(std::make_pair(i, j), one);
    QMatrix d1(1, 1);
    d1.at(0, 0) = d1_value;
    return GenAction::dense(n, std::move(mats), std::move(d1));
}

} // namespace

VicModule trivial_module(int lo, int hi)
{
    VicModule m;
    m.lo = lo;
    m.hi = hi;
    for (int n = lo; n <= hi; ++n) {
        m.levels.push_back(scalar_level(n, Rat(1)));
        m.tags.push_back("algebraic");
    }
    for (int n = lo; n < hi; ++n)
        m.tmaps.push_back(QMatrix::identity(1));
    m.check_shape();
    return m;
}

VicModule standard_module(int lo, int hi)
{
    VicModule m;
    m.lo = lo;
    m.hi = hi;
    for (int n = lo; n <= hi; ++n) {
        std::map<std::pair<int, int>, QMatrix> mats;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                QMatrix e = QMatrix::identity(n);
                e.at(i, j) = 1;
                mats.emplace(std::make_pair(i, j), std::move(e));
            }
        QMatrix d1 = QMatrix::identity(n);
        d1.at(0, 0) = -1;
        m.levels.push_back(GenAction::dense(n, std::move(mats), std::move(d1)));
        m.tags.push_back("algebraic");
    }
    for (int n = lo; n < hi; ++n) {
        QMatrix t(n + 1, n);
        for (int i = 0; i < n; ++i)
            t.at(i, i) = 1;
        m.tmaps.push_back(std::move(t));
    }
    m.check_shape();
    return m;
}

namespace {

uint64_t point_key(const std::vector<uint8_t>& p, long q)
{
    uint64_t k = 0;
    for (uint8_t x : p)
        k = k * static_cast<uint64_t>(q) + x;
    return k;
}

} // namespace

VicModule projective_module(long q, int lo, int hi)
{
    VicModule m;
    m.lo = lo;
    m.hi = hi;
    std::vector<std::vector<std::vector<uint8_t>>> pts;
    for (int n = lo; n <= hi; ++n)
        pts.push_back(proj_points(n, q));
    for (int n = lo; n <= hi; ++n) {
        const auto& points = pts[n - lo];
        std::map<std::pair<int, int>, std::vector<int>> perms;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                perms.emplace(std::make_pair(i, j), proj_perm(ModMat::elem(n, q, i, j, 1), points));
            }
        std::vector<long> d(n, 1);
        d[0] = q - 1; // -1 mod q
        std::vector<int> d1 = proj_perm(ModMat::diag(n, q, d), points);
        m.levels.push_back(GenAction::perm(n, std::move(perms), std::move(d1)));
        m.tags.push_back("finite");
    }
    for (int n = lo; n < hi; ++n) {
        const auto& src = pts[n - lo];
        const auto& dst = pts[n + 1 - lo];
        std::unordered_map<uint64_t, int> idx;
        for (size_t i = 0; i < dst.size(); ++i)
            idx[point_key(dst[i], q)] = static_cast<int>(i);
        QMatrix t(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (size_t c = 0; c < src.size(); ++c) {
            std::vector<uint8_t> padded = src[c];
            padded.push_back(0);
            t.at(idx.at(point_key(padded, q)), static_cast<int>(c)) = 1;
        }
        m.tmaps.push_back(std::move(t));
    }
    m.check_shape();
    return m;
}

VicModule sumzero_module(long q, int lo, int hi)
{
    VicModule proj = projective_module(q, lo, hi);
    VicModule m;
    m.lo = lo;
    m.hi = hi;
    for (int n = lo; n <= hi; ++n) {
        const GenAction& p = proj.level(n);
        long d = p.dim();
        // Basis v_x = delta_x - delta_0 for x = 1..d-1.
        auto to_dense = [&](const std::vector<int>& perm) {
            QMatrix out(static_cast<int>(d - 1), static_cast<int>(d - 1));
            for (long x = 1; x < d; ++x) {
                int px = perm[x], p0 = perm[0];
                if (px != 0)
                    out.at(px - 1, static_cast<int>(x - 1)) += 1;
                if (p0 != 0)
                    out.at(p0 - 1, static_cast<int>(x - 1)) -= 1;
            }
            return out;
        };
        std::map<std::pair<int, int>, QMatrix> mats;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    mats.emplace(std::make_pair(i, j), to_dense(p.elem_perm(i, j)));
        m.levels.push_back(GenAction::dense(n, std::move(mats), to_dense(p.d1_perm())));
        m.tags.push_back("finite");
    }
    for (int n = lo; n < hi; ++n) {
        const QMatrix& tp = proj.tmap(n);
        long dsrc = proj.dim(n), ddst = proj.dim(n + 1);
        auto embedded = [&](long x) {
            for (int r = 0; r < tp.rows(); ++r)
                if (tp.at(r, static_cast<int>(x)) == 1)
                    return static_cast<long>(r);
            throw IntegrityError("projective embedding lost a point");
        };
        // T(v_x) = delta_{i(x)} - delta_{i(0)} = v'_{i(x)} - v'_{i(0)}.
        QMatrix t(static_cast<int>(ddst - 1), static_cast<int>(dsrc - 1));
        long base = embedded(0);
        for (long x = 1; x < dsrc; ++x) {
            long ix = embedded(x);
            if (ix != 0)
                t.at(static_cast<int>(ix - 1), static_cast<int>(x - 1)) += 1;
            if (base != 0)
                t.at(static_cast<int>(base - 1), static_cast<int>(x - 1)) -= 1;
        }
        m.tmaps.push_back(std::move(t));
    }
    m.check_shape();
    return m;
}

VicModule torsion_head_module(int lo, int hi)
{
    VicModule m = trivial_module(lo, hi);
    m.tmaps[0] = QMatrix(1, 1); // zero map out of the lowest level
    return m;
}

VicModule det_module(int lo, int hi)
{
    VicModule m;
    m.lo = lo;
    m.hi = hi;
    for (int n = lo; n <= hi; ++n) {
        m.levels.push_back(scalar_level(n, Rat(-1)));
        m.tags.push_back("algebraic");
    }
    for (int n = lo; n < hi; ++n)
        m.tmaps.push_back(QMatrix::identity(1));
    m.check_shape();
    return m;
}

} // namespace stabrep
