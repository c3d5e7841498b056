#include "stabrep/words.hpp"

#include "stabrep/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace stabrep {

ZMat zmat_identity(int n)
{
    ZMat m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b)
{
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int m = static_cast<int>(b[0].size());
    ZMat r(n, std::vector<Int>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0)
                continue;
            for (int j = 0; j < m; ++j)
                if (b[t][j] != 0)
                    r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

Int zmat_det(ZMat a)
{
    int n = static_cast<int>(a.size());
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int sel = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                sel = i;
                break;
            }
        if (sel < 0)
            return Int(0);
        if (sel != k) {
            std::swap(a[sel], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return Int(sign) * a[n - 1][n - 1];
}

ZMat zmat_of(const QMatrix& m)
{
    ZMat r(m.rows(), std::vector<Int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& q = m.at(i, j);
            if (q.get_den() != 1)
                throw IntegrityError("matrix entry is not an integer");
            r[i][j] = q.get_num();
        }
    return r;
}

QMatrix qmat_of(const ZMat& m)
{
    QMatrix r(static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m[0].size()));
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j)
            r.at(i, j) = Rat(m[i][j]);
    return r;
}

ZMat group_elem_matrix(int n, const GenOp& op)
{
    ZMat m = zmat_identity(n);
    if (op.kind == GenOp::Kind::Elem)
        m[op.i][op.j] = op.c;
    else
        m[0][0] = op.c;
    return m;
}

namespace {

// Shared reduction core. `mod` is 0 over Z, else the modulus. Emits the row
// operations that bring A to the identity; the word is the reversed,
// inverted op list, prefixed by a Diag1 factor carrying the determinant.
class Reducer {
public:
    Reducer(ZMat a, long mod) : a_(std::move(a)), n_(static_cast<int>(a_.size())), mod_(mod) {}

    Word run()
    {
        Int det = determinant();
        Int u, uinv;
        normalize_det(det, u, uinv);
        Word word;
        if (u != 1)
            word.push_back(GenOp::diag1(u));
        // Strip the determinant off: A' = diag(u^-1,1,..,1) * A.
        for (auto& x : a_[0])
            x = reduce(x * uinv);
        for (int k = 0; k < n_; ++k)
            eliminate_column(k);
        // L_m ... L_1 A' = I, so A' = L_1^-1 L_2^-1 ... L_m^-1.
        for (const auto& op : ops_)
            word.push_back(GenOp::elem(op.i, op.j, -op.c));
        return word;
    }

private:
    struct RowOp {
        int i, j;
        Int c;
    };

    Int reduce(Int v) const
    {
        if (mod_ == 0)
            return v;
        Int r = v % mod_;
        if (r < 0)
            r += mod_;
        return r;
    }

    Int determinant() const
    {
        Int d = zmat_det(a_);
        return mod_ ? reduce(d) : d;
    }

    void normalize_det(const Int& det, Int& u, Int& uinv) const
    {
        if (mod_ == 0) {
            if (det != 1 && det != -1)
                throw IntegrityError("matrix is not unimodular over Z");
            u = det;
            uinv = det;
            return;
        }
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), det.get_mpz_t(), Int(mod_).get_mpz_t());
        if (g != 1)
            throw IntegrityError("matrix determinant is not a unit mod " + std::to_string(mod_));
        u = det;
        uinv = s % mod_;
        if (uinv < 0)
            uinv += mod_;
    }

    // row_i += c * row_j
    void row_add(int i, int j, const Int& c)
    {
        if (c == 0)
            return;
        for (int t = 0; t < n_; ++t)
            a_[i][t] = reduce(a_[i][t] + c * a_[j][t]);
        ops_.push_back({i, j, c});
    }

    void eliminate_column(int k)
    {
        // Euclid among rows k..n-1 on column k until one nonzero remains.
        for (;;) {
            int count = 0, last = -1;
            for (int r = k; r < n_; ++r)
                if (a_[r][k] != 0) {
                    ++count;
                    last = r;
                }
            if (count == 0)
                throw IntegrityError("singular input to word factorization");
            if (count == 1) {
                make_unit_pivot(k, last);
                break;
            }
            int rmin = -1;
            for (int r = k; r < n_; ++r) {
                if (a_[r][k] == 0)
                    continue;
                if (rmin < 0 || abs_cmp(a_[r][k], a_[rmin][k]))
                    rmin = r;
            }
            for (int r = k; r < n_; ++r) {
                if (r == rmin || a_[r][k] == 0)
                    continue;
                Int q = quot(a_[r][k], a_[rmin][k]);
                row_add(r, rmin, -q);
            }
        }
        // Clear the column with the unit pivot at (k,k).
        for (int r = 0; r < n_; ++r) {
            if (r == k || a_[r][k] == 0)
                continue;
            row_add(r, k, mod_ ? reduce(-a_[r][k]) : -a_[r][k]);
        }
    }

    bool abs_cmp(const Int& x, const Int& y) const
    {
        Int ax = abs(x), ay = abs(y);
        return ax < ay;
    }

    Int quot(const Int& a, const Int& b) const
    {
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }

    // Single nonzero entry v in column k at row r; bring +1 to (k,k).
    void make_unit_pivot(int k, int r)
    {
        Int v = a_[r][k];
        Int vinv;
        if (mod_ == 0) {
            if (v != 1 && v != -1)
                throw IntegrityError("column gcd is not 1; input not unimodular");
            vinv = v;
        } else {
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v.get_mpz_t(), Int(mod_).get_mpz_t());
            if (g != 1)
                throw IntegrityError("column gcd is not a unit; input not invertible");
            vinv = reduce(s);
        }
        if (r == k && v == 1)
            return;
        if (r == k) {
            if (k + 1 >= n_)
                throw IntegrityError("trailing pivot is not 1; determinant bookkeeping failed");
            // Build a 1 in row k+1, then fix (k,k) from it.
            row_add(k + 1, k, vinv);
            row_add(k, k + 1, mod_ ? reduce(1 - v) : Int(1) - v);
        } else {
            Int want = mod_ ? reduce(Int(1) - a_[k][k]) : Int(1) - a_[k][k];
            // Make the (k,k) entry exactly 1 using row r.
            row_add(k, r, mod_ ? reduce(want * vinv) : want * vinv);
        }
    }

    ZMat a_;
    int n_;
    long mod_;
    std::vector<RowOp> ops_;
};

} // namespace

Word word_for_integer(const ZMat& A)
{
    return Reducer(A, 0).run();
}

Word word_for_mod(const ZMat& A, long ell)
{
    ZMat B = A;
    for (auto& row : B)
        for (auto& x : row) {
            x %= ell;
            if (x < 0)
                x += ell;
        }
    return Reducer(std::move(B), ell).run();
}

QMatrix evaluate_word(const Word& w,
                      const std::function<QMatrix(const GenOp&)>& gen_image,
                      int dim)
{
    QMatrix acc = QMatrix::identity(dim);
    for (const auto& op : w) {
        if (op.kind == GenOp::Kind::Elem) {
            GenOp unit = GenOp::elem(op.i, op.j, Int(1));
            acc = acc * gen_image(unit).pow(op.c);
        } else {
            acc = acc * gen_image(op);
        }
    }
    return acc;
}

} // namespace stabrep
