#ifndef STABREP_QMATRIX_HPP
#define STABREP_QMATRIX_HPP

#include "stabrep/qpoly.hpp"
#include "stabrep/rational.hpp"

#include <optional>
#include <vector>

namespace stabrep {

// Dense matrix over Q. Row-major.
class QMatrix {
public:
    QMatrix() : r_(0), c_(0) {}
    QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}
    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    bool operator==(const QMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool is_zero() const;
    bool is_identity() const;

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator*(const Rat& s) const;
    QMatrix transpose() const;
    QMatrix kron(const QMatrix& o) const;

    QMatrix pow(const Int& e) const; // negative exponents use the inverse
    QMatrix inverse() const;         // throws IntegrityError if singular

    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    int rank() const;
    // Basis of the right kernel, as columns of the returned matrix.
    QMatrix kernel() const;
    // Solve A X = B exactly; nullopt when inconsistent. X is cols(A) x cols(B);
    // if the kernel is nonzero an arbitrary consistent solution is returned.
    std::optional<QMatrix> solve(const QMatrix& B) const;

    // Characteristic polynomial det(xI - A), monic. Fraction-free integer
    // evaluation (Bareiss) at dim+1 points plus exact interpolation.
    QPoly char_poly() const;

    // True iff (A - I)^n = 0.
    bool is_unipotent() const;

    QMatrix hstack(const QMatrix& o) const;
    QMatrix vstack(const QMatrix& o) const;
    QMatrix columns(const std::vector<int>& idx) const;

    std::string str() const;

private:
    int r_, c_;
    std::vector<Rat> a_;
};

// Basis (as columns) of the intersection of ker(M - I) over all given matrices.
// An empty list fixes the whole space; dim must then be supplied.
QMatrix fixed_space(const std::vector<QMatrix>& mats, int dim_if_empty = -1);

// Row-reduce the span of the given column vectors; returns an RREF basis
// (each vector a column). Used for iterative submodule closures.
class SpanBasis {
public:
    explicit SpanBasis(int dim) : dim_(dim) {}
    // Returns true when v enlarged the span.
    bool add(std::vector<Rat> v);
    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return dim_; }
    const std::vector<std::vector<Rat>>& vectors() const { return rows_; }
    bool contains(std::vector<Rat> v) const;
    QMatrix basis_matrix() const; // dim_ x dim()

private:
    int dim_;
    std::vector<std::vector<Rat>> rows_; // reduced vectors
    std::vector<int> pivots_;
};

} // namespace stabrep

#endif
