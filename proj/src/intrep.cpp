#include "stabrep/intrep.hpp"

#include "stabrep/bounds.hpp"
#include "stabrep/cyclotomic.hpp"
#include "stabrep/errors.hpp"

#include <random>
#include <sstream>

namespace stabrep {

IntegralRep::IntegralRep(int n, std::map<std::pair<int, int>, QMatrix> images)
    : n_(n), images_(std::move(images))
{
    if (n < 3)
        throw PreconditionError("rank must be >= 3");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            auto it = images_.find({i, j});
            if (it == images_.end())
                throw PreconditionError("missing image for an elementary generator");
            if (it->second.rows() != it->second.cols())
                throw IntegrityError("generator image is not square");
        }
    dim_ = images_.begin()->second.rows();
    for (const auto& [k, m] : images_)
        if (m.rows() != dim_)
            throw IntegrityError("generator images have mixed dimensions");

    // Steinberg relations: commuting pairs and [E_ij, E_jk] = E_ik.
    QMatrix id = QMatrix::identity(dim_);
    auto comm = [&](const QMatrix& a, const QMatrix& b) {
        return a * b * a.inverse() * b.inverse();
    };
    for (const auto& [kl1, m1] : images_)
        for (const auto& [kl2, m2] : images_) {
            auto [i, j] = kl1;
            auto [k, l] = kl2;
            if (std::make_pair(i, j) >= std::make_pair(k, l))
                continue;
            if (j == k && i != l) {
                if (!(comm(m1, m2) == image(i, l)))
                    throw IntegrityError("Steinberg relation [E_ij,E_jk] = E_ik fails");
            } else if (l == i && j != k) {
                // [E_kl, E_ij] = E_kj when l == i; equivalently inverse order
                if (!(comm(m2, m1) == image(k, j)))
                    throw IntegrityError("Steinberg relation [E_ij,E_jk] = E_ik fails");
            } else if (j != k && i != l) {
                if (!(comm(m1, m2) == id))
                    throw IntegrityError("disjoint elementary images do not commute");
            }
        }
    // w(1)^4 = 1 for w(1) = E12 E21^-1 E12.
    QMatrix w = image(0, 1) * image(1, 0).inverse() * image(0, 1);
    if (!w.pow(Int(4)).is_identity())
        throw IntegrityError("braid relation w(1)^4 = 1 fails");
}

IntegralRep IntegralRep::trivial(int n, int dim)
{
    std::map<std::pair<int, int>, QMatrix> img;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                img.emplace(std::make_pair(i, j), QMatrix::identity(dim));
    return IntegralRep(n, std::move(img));
}

IntegralRep IntegralRep::standard(int n)
{
    std::map<std::pair<int, int>, QMatrix> img;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            QMatrix m = QMatrix::identity(n);
            m.at(i, j) = 1;
            img.emplace(std::make_pair(i, j), std::move(m));
        }
    return IntegralRep(n, std::move(img));
}

IntegralRep IntegralRep::pullback(const FiniteRep& rep)
{
    const FiniteMatrixGroup& g = rep.group();
    if (g.variant() != Variant::SL && g.variant() != Variant::SLpm)
        throw PreconditionError("pullback needs an SL or SL+- image group");
    int n = g.rank();
    std::map<std::pair<int, int>, QMatrix> img;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            uint32_t id = g.id_of(ModMat::elem(n, g.modulus(), i, j, 1));
            img.emplace(std::make_pair(i, j), rep.image_of(id));
        }
    return IntegralRep(n, std::move(img));
}

const QMatrix& IntegralRep::image(int i, int j) const
{
    return images_.at({i, j});
}

QMatrix IntegralRep::image_of(const ZMat& a) const
{
    Word w = word_for_integer(a);
    return evaluate_word(
        w,
        [&](const GenOp& op) -> QMatrix {
            if (op.kind == GenOp::Kind::Diag1)
                throw PreconditionError("SL_n(Z) word required a determinant factor");
            return image(op.i, op.j);
        },
        dim_);
}

IntegralRep IntegralRep::dual() const
{
    // Twist by inverse-transpose at generator level: E_{ij} -> E_{ji}^{-1}
    // composed with the original images gives rho(g^-T); equivalently the
    // dual acts by rho(g^-1)^T = transpose of the inverse image.
    std::map<std::pair<int, int>, QMatrix> img;
    for (const auto& [kl, m] : images_)
        img.emplace(kl, m.inverse().transpose());
    return IntegralRep(n_, std::move(img));
}

IntegralRep IntegralRep::tensor(const IntegralRep& o) const
{
    if (n_ != o.n_)
        throw PreconditionError("tensor needs equal ranks");
    std::map<std::pair<int, int>, QMatrix> img;
    for (const auto& [kl, m] : images_)
        img.emplace(kl, m.kron(o.images_.at(kl)));
    return IntegralRep(n_, std::move(img));
}

IntegralRep IntegralRep::direct_sum(const IntegralRep& o) const
{
    if (n_ != o.n_)
        throw PreconditionError("direct sum needs equal ranks");
    std::map<std::pair<int, int>, QMatrix> img;
    for (const auto& [kl, m] : images_) {
        const QMatrix& b = o.images_.at(kl);
        QMatrix s(dim_ + o.dim_, dim_ + o.dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                s.at(i, j) = m.at(i, j);
        for (int i = 0; i < o.dim_; ++i)
            for (int j = 0; j < o.dim_; ++j)
                s.at(dim_ + i, dim_ + j) = b.at(i, j);
        img.emplace(kl, std::move(s));
    }
    return IntegralRep(n_, std::move(img));
}

std::string depth_class_name(DepthClass c)
{
    switch (c) {
    case DepthClass::Algebraic: return "algebraic";
    case DepthClass::FiniteType: return "finite type";
    case DepthClass::Mixed: return "mixed";
    }
    return "?";
}

DepthReport depth(const IntegralRep& rep, long cyclotomic_cap)
{
    DepthReport out;
    QPoly cp = rep.elementary().char_poly();
    CyclotomicFactorization f;
    try {
        f = cyclotomic_orders(cp, cyclotomic_cap, true);
    } catch (const ResourceCapError&) {
        throw ResourceCapError(
            "rho(E) has an eigenvalue that is no root of unity below the cap; "
            "input is not an SL_n(Z)-representation or the cap is too low");
    }
    out.eigenvalue_orders = f.orders;
    long l = 1;
    for (auto [d, m] : f.orders)
        l = lcm_long(l, d);
    out.depth = l;
    for (auto [p, k] : factorize(l))
        out.p_depths[p] = k;
    return out;
}

bool depth_divides(const IntegralRep& rep, long ell)
{
    return rep.elementary().pow(Int(ell)).is_unipotent();
}

int p_depth(const IntegralRep& rep, long p, long cyclotomic_cap)
{
    bool isprime = p >= 2;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            isprime = false;
    if (!isprime)
        throw PreconditionError("p_depth needs a prime");
    long l = depth(rep, cyclotomic_cap).depth;
    int k = 0;
    while (l % p == 0) {
        l /= p;
        ++k;
    }
    return k;
}

GammaUVerdict gamma_u_check(const IntegralRep& rep, long ell, int samples, uint64_t seed)
{
    if (samples < 1)
        throw PreconditionError("gamma_u_check needs samples >= 1");
    GammaUVerdict v;
    v.samples = samples;
    int n = rep.rank();
    std::mt19937_64 rng(seed);

    auto fail_with = [&](const std::string& desc) {
        v.pass = false;
        v.witness = desc;
    };

    for (int s = 0; s < samples && v.pass; ++s) {
        if (s % 2 == 0) {
            // Random word in the E_{ij}^ell, i < j.
            int len = 1 + static_cast<int>(rng() % 6);
            QMatrix acc = QMatrix::identity(rep.dim());
            std::ostringstream desc;
            for (int t = 0; t < len; ++t) {
                int i = static_cast<int>(rng() % n);
                int j = static_cast<int>(rng() % n);
                if (i == j)
                    j = (j + 1) % n;
                if (i > j)
                    std::swap(i, j);
                long c = ell * (1 + static_cast<long>(rng() % 3));
                acc = acc * rep.image(i, j).pow(Int(c));
                desc << "E(" << i + 1 << "," << j + 1 << ")^" << c << " ";
            }
            if (!acc.is_unipotent())
                fail_with("word " + desc.str());
        } else {
            // Random element of Gamma U_n(ell) via the word machinery.
            ZMat u = zmat_identity(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    u[i][j] = ell * (static_cast<long>(rng() % 7) - 3);
            QMatrix img = rep.image_of(u);
            if (!img.is_unipotent()) {
                std::ostringstream desc;
                desc << "Gamma U element";
                fail_with(desc.str());
            }
        }
    }
    return v;
}

int finite_part_dimension(const IntegralRep& rep, long ell)
{
    std::vector<QMatrix> powers;
    int n = rep.rank();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            powers.push_back(rep.image(i, j).pow(Int(ell)));
    return fixed_space(powers, rep.dim()).cols();
}

DepthReport classify(const IntegralRep& rep, bool irreducible_asserted, long cyclotomic_cap)
{
    DepthReport r = depth(rep, cyclotomic_cap);
    QMatrix e = rep.elementary();
    if (r.depth == 1) {
        r.classification = DepthClass::Algebraic;
    } else {
        // Finite type iff rho(E) is semisimple: the squarefree part of the
        // characteristic polynomial annihilates the matrix.
        QPoly rad = e.char_poly().radical();
        QMatrix acc(rep.dim(), rep.dim());
        QMatrix pw = QMatrix::identity(rep.dim());
        for (int k = 0; k <= rad.degree(); ++k) {
            acc = acc + pw * rad.coeff(k);
            if (k < rad.degree())
                pw = pw * e;
        }
        r.classification = acc.is_zero() ? DepthClass::FiniteType : DepthClass::Mixed;
    }
    r.dim_fin = finite_part_dimension(rep, r.depth);
    if (irreducible_asserted && r.dim_fin > 0 && rep.dim() % r.dim_fin == 0) {
        r.dim_alg = rep.dim() / r.dim_fin;
        r.dim_alg_exact = true;
    }
    return r;
}

int commutant_dimension(const IntegralRep& rep, int samples, uint64_t seed)
{
    // Solve [X, rho(w)] = 0 for random generator words w; the solution space
    // of the stacked system contains the commutant (equality once enough
    // words are sampled).
    std::mt19937_64 rng(seed);
    int d = rep.dim();
    int n = rep.rank();
    std::vector<QMatrix> words;
    for (int s = 0; s < samples; ++s) {
        QMatrix acc = QMatrix::identity(d);
        int len = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < len; ++t) {
            int i = static_cast<int>(rng() % n);
            int j = static_cast<int>(rng() % n);
            if (i == j)
                j = (j + 1) % n;
            long c = static_cast<long>(rng() % 3) - 1;
            if (c == 0)
                c = 1;
            acc = acc * rep.image(i, j).pow(Int(c));
        }
        words.push_back(acc);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                words.push_back(rep.image(i, j));
    // Commutation as a linear system on vec(X): (A ⊗ I - I ⊗ A^T) vec = 0.
    QMatrix id = QMatrix::identity(d);
    QMatrix stacked(0, d * d);
    for (const auto& a : words) {
        QMatrix lhs = a.kron(id) - id.kron(a.transpose());
        stacked = stacked.rows() == 0 ? lhs : stacked.vstack(lhs);
    }
    return stacked.kernel().cols();
}

GrowthDichotomyReport check_growth_dichotomy(const std::vector<Int>& dims,
                                             const std::vector<long>& depths,
                                             int n_start)
{
    if (dims.size() != depths.size())
        throw PreconditionError("dims and depths must align");
    GrowthDichotomyReport rep;
    for (size_t idx = 0; idx < dims.size(); ++idx) {
        int n = n_start + static_cast<int>(idx);
        auto bound = depth_dim_lower_bound(depths[idx], n);
        if (Rat(dims[idx]) < bound.bound) {
            rep.consistent = false;
            rep.violating_index = static_cast<int>(idx);
            rep.verdict = "inconsistent";
            return rep;
        }
    }
    bool all_algebraic_tail = true;
    long max_depth = 1;
    for (size_t idx = 0; idx < depths.size(); ++idx) {
        max_depth = std::max(max_depth, depths[idx]);
        if (depths[idx] != 1)
            all_algebraic_tail = false;
    }
    // Polynomial-growth window: dims fit below n^k for the smallest k that
    // works at the right edge; exponential windows keep bounded depth.
    rep.verdict = all_algebraic_tail ? "eventually-algebraic-consistent" : "bounded-depth-consistent";
    return rep;
}

} // namespace stabrep
