#include "stabrep/qmatrix.hpp"

#include "stabrep/errors.hpp"

#include <sstream>

namespace stabrep {

QMatrix QMatrix::identity(int n)
{
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows)
{
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw IntegrityError("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

bool QMatrix::is_zero() const
{
    for (const auto& x : a_)
        if (x != 0)
            return false;
    return true;
}

bool QMatrix::is_identity() const
{
    if (r_ != c_)
        return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

QMatrix QMatrix::operator+(const QMatrix& o) const
{
    if (r_ != o.r_ || c_ != o.c_)
        throw IntegrityError("matrix shape mismatch in +");
    QMatrix m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = a_[i] + o.a_[i];
    return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const
{
    if (r_ != o.r_ || c_ != o.c_)
        throw IntegrityError("matrix shape mismatch in -");
    QMatrix m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = a_[i] - o.a_[i];
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const
{
    if (c_ != o.r_)
        throw IntegrityError("matrix shape mismatch in *");
    QMatrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0)
                continue;
            for (int j = 0; j < o.c_; ++j) {
                const Rat& y = o.at(k, j);
                if (y != 0)
                    m.at(i, j) += x * y;
            }
        }
    return m;
}

QMatrix QMatrix::operator*(const Rat& s) const
{
    QMatrix m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = a_[i] * s;
    return m;
}

QMatrix QMatrix::transpose() const
{
    QMatrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

QMatrix QMatrix::kron(const QMatrix& o) const
{
    QMatrix m(r_ * o.r_, c_ * o.c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            const Rat& x = at(i, j);
            if (x == 0)
                continue;
            for (int p = 0; p < o.r_; ++p)
                for (int q = 0; q < o.c_; ++q)
                    if (o.at(p, q) != 0)
                        m.at(i * o.r_ + p, j * o.c_ + q) = x * o.at(p, q);
        }
    return m;
}

QMatrix QMatrix::pow(const Int& e) const
{
    if (r_ != c_)
        throw IntegrityError("pow of non-square matrix");
    QMatrix base = *this;
    Int k = e;
    if (k < 0) {
        base = inverse();
        k = -k;
    }
    QMatrix acc = identity(r_);
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t()))
            acc = acc * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return acc;
}

namespace {

// Gauss-Jordan on an augmented block [A | B]; returns pivot columns of A.
std::vector<int> gauss_jordan(QMatrix& A, QMatrix* B)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < A.cols() && row < A.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < A.rows(); ++i)
            if (A.at(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel < 0)
            continue;
        if (sel != row) {
            for (int j = 0; j < A.cols(); ++j)
                swap(A.at(sel, j), A.at(row, j));
            if (B)
                for (int j = 0; j < B->cols(); ++j)
                    swap(B->at(sel, j), B->at(row, j));
        }
        Rat inv = Rat(1) / A.at(row, col);
        for (int j = 0; j < A.cols(); ++j)
            A.at(row, j) *= inv;
        if (B)
            for (int j = 0; j < B->cols(); ++j)
                B->at(row, j) *= inv;
        for (int i = 0; i < A.rows(); ++i) {
            if (i == row || A.at(i, col) == 0)
                continue;
            Rat f = A.at(i, col);
            for (int j = 0; j < A.cols(); ++j)
                A.at(i, j) -= f * A.at(row, j);
            if (B)
                for (int j = 0; j < B->cols(); ++j)
                    B->at(i, j) -= f * B->at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

QMatrix QMatrix::inverse() const
{
    if (r_ != c_)
        throw IntegrityError("inverse of non-square matrix");
    QMatrix A = *this;
    QMatrix B = identity(r_);
    auto pivots = gauss_jordan(A, &B);
    if (static_cast<int>(pivots.size()) != r_)
        throw IntegrityError("singular matrix has no inverse");
    return B;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& v) const
{
    if (static_cast<int>(v.size()) != c_)
        throw IntegrityError("apply: dimension mismatch");
    std::vector<Rat> out(r_, Rat(0));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (at(i, j) != 0 && v[j] != 0)
                out[i] += at(i, j) * v[j];
    return out;
}

int QMatrix::rank() const
{
    QMatrix A = *this;
    return static_cast<int>(gauss_jordan(A, nullptr).size());
}

QMatrix QMatrix::kernel() const
{
    QMatrix A = *this;
    auto pivots = gauss_jordan(A, nullptr);
    std::vector<bool> is_pivot(c_, false);
    for (int p : pivots)
        is_pivot[p] = true;
    int nullity = c_ - static_cast<int>(pivots.size());
    QMatrix K(c_, nullity);
    int k = 0;
    for (int free = 0; free < c_; ++free) {
        if (is_pivot[free])
            continue;
        K.at(free, k) = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            K.at(pivots[r], k) = -A.at(static_cast<int>(r), free);
        ++k;
    }
    return K;
}

std::optional<QMatrix> QMatrix::solve(const QMatrix& B) const
{
    if (B.rows() != r_)
        throw IntegrityError("solve: row mismatch");
    QMatrix A = *this;
    QMatrix R = B;
    auto pivots = gauss_jordan(A, &R);
    int rk = static_cast<int>(pivots.size());
    // Consistency: zero rows of A must have zero rows in R.
    for (int i = rk; i < r_; ++i)
        for (int j = 0; j < R.cols(); ++j)
            if (R.at(i, j) != 0)
                return std::nullopt;
    QMatrix X(c_, B.cols());
    for (int r = 0; r < rk; ++r)
        for (int j = 0; j < B.cols(); ++j)
            X.at(pivots[r], j) = R.at(r, j);
    return X;
}

QPoly QMatrix::char_poly() const
{
    if (r_ != c_)
        throw IntegrityError("char_poly of non-square matrix");
    int n = r_;
    if (n == 0)
        return QPoly::constant(Rat(1));
    // Clear denominators: charpoly_A(x) = D^-n charpoly_{DA}(Dx).
    Int D(1);
    for (const auto& x : a_)
        D = int_lcm(D, x.get_den());
    std::vector<Int> M(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat scaled = at(i, j) * Rat(D);
            M[static_cast<size_t>(i) * n + j] = scaled.get_num();
        }
    // det(tI - DA) at t = 0..n by fraction-free Bareiss elimination.
    std::vector<Rat> xs, ys;
    for (int t = 0; t <= n; ++t) {
        std::vector<Int> W(M.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int v = -M[static_cast<size_t>(i) * n + j];
                if (i == j)
                    v += t;
                W[static_cast<size_t>(i) * n + j] = v;
            }
        Int det(1);
        Int prev(1);
        int sign = 1;
        bool singular = false;
        for (int k = 0; k < n && !singular; ++k) {
            int sel = -1;
            for (int i = k; i < n; ++i)
                if (W[static_cast<size_t>(i) * n + k] != 0) {
                    sel = i;
                    break;
                }
            if (sel < 0) {
                singular = true;
                break;
            }
            if (sel != k) {
                for (int j = 0; j < n; ++j)
                    std::swap(W[static_cast<size_t>(sel) * n + j], W[static_cast<size_t>(k) * n + j]);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j) {
                    Int num = W[static_cast<size_t>(k) * n + k] * W[static_cast<size_t>(i) * n + j] -
                              W[static_cast<size_t>(i) * n + k] * W[static_cast<size_t>(k) * n + j];
                    W[static_cast<size_t>(i) * n + j] = num / prev;
                }
            prev = W[static_cast<size_t>(k) * n + k];
        }
        det = singular ? Int(0) : Int(sign) * W[static_cast<size_t>(n - 1) * n + (n - 1)];
        xs.emplace_back(t);
        ys.emplace_back(Rat(det));
    }
    QPoly scaled = interpolate(xs, ys); // det(xI - DA)
    // Substitute x -> Dx and divide by D^n.
    std::vector<Rat> out(n + 1, Rat(0));
    Rat Dk(1);
    for (int k = 0; k <= n; ++k) {
        out[k] = scaled.coeff(k) * Dk / Rat(int_pow(D, n));
        Dk *= Rat(D);
    }
    return QPoly(std::move(out));
}

bool QMatrix::is_unipotent() const
{
    if (r_ != c_)
        throw IntegrityError("is_unipotent of non-square matrix");
    QMatrix N = *this - identity(r_);
    int covered = 1;
    while (covered < r_) {
        if (N.is_zero())
            return true;
        N = N * N;
        covered *= 2;
    }
    return N.is_zero();
}

QMatrix QMatrix::hstack(const QMatrix& o) const
{
    if (r_ != o.r_)
        throw IntegrityError("hstack row mismatch");
    QMatrix m(r_, c_ + o.c_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j)
            m.at(i, j) = at(i, j);
        for (int j = 0; j < o.c_; ++j)
            m.at(i, c_ + j) = o.at(i, j);
    }
    return m;
}

QMatrix QMatrix::vstack(const QMatrix& o) const
{
    if (c_ != o.c_)
        throw IntegrityError("vstack column mismatch");
    QMatrix m(r_ + o.r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            m.at(i, j) = at(i, j);
    for (int i = 0; i < o.r_; ++i)
        for (int j = 0; j < c_; ++j)
            m.at(r_ + i, j) = o.at(i, j);
    return m;
}

QMatrix QMatrix::columns(const std::vector<int>& idx) const
{
    QMatrix m(r_, static_cast<int>(idx.size()));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < r_; ++i)
            m.at(i, j) = at(i, idx[j]);
    return m;
}

std::string QMatrix::str() const
{
    std::ostringstream os;
    for (int i = 0; i < r_; ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < c_; ++j)
            os << (j ? " " : "") << at(i, j).get_str();
        os << "]";
    }
    return os.str();
}

QMatrix fixed_space(const std::vector<QMatrix>& mats, int dim_if_empty)
{
    if (mats.empty()) {
        if (dim_if_empty < 0)
            throw PreconditionError("fixed_space of empty list needs an ambient dimension");
        return QMatrix::identity(dim_if_empty);
    }
    int d = mats[0].cols();
    QMatrix stacked(0, d);
    for (const auto& M : mats) {
        if (M.rows() != d || M.cols() != d)
            throw PreconditionError("fixed_space: matrices must be square of equal size");
        stacked = stacked.rows() == 0 ? (M - QMatrix::identity(d)) : stacked.vstack(M - QMatrix::identity(d));
    }
    return stacked.kernel();
}

bool SpanBasis::add(std::vector<Rat> v)
{
    if (static_cast<int>(v.size()) != dim_)
        throw IntegrityError("SpanBasis: dimension mismatch");
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rat& x = v[pivots_[k]];
        if (x != 0) {
            Rat f = x;
            for (int j = 0; j < dim_; ++j)
                if (rows_[k][j] != 0)
                    v[j] -= f * rows_[k][j];
        }
    }
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
        if (v[j] != 0) {
            piv = j;
            break;
        }
    if (piv < 0)
        return false;
    Rat inv = Rat(1) / v[piv];
    for (int j = 0; j < dim_; ++j)
        v[j] *= inv;
    // Back-substitute into existing rows.
    for (size_t k = 0; k < rows_.size(); ++k) {
        Rat f = rows_[k][piv];
        if (f != 0)
            for (int j = 0; j < dim_; ++j)
                if (v[j] != 0)
                    rows_[k][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool SpanBasis::contains(std::vector<Rat> v) const
{
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Rat& x = v[pivots_[k]];
        if (x != 0) {
            Rat f = x;
            for (int j = 0; j < dim_; ++j)
                if (rows_[k][j] != 0)
                    v[j] -= f * rows_[k][j];
        }
    }
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

QMatrix SpanBasis::basis_matrix() const
{
    QMatrix m(dim_, static_cast<int>(rows_.size()));
    for (size_t k = 0; k < rows_.size(); ++k)
        for (int i = 0; i < dim_; ++i)
            m.at(i, static_cast<int>(k)) = rows_[k][i];
    return m;
}

} // namespace stabrep
