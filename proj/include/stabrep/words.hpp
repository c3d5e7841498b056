#ifndef STABREP_WORDS_HPP
#define STABREP_WORDS_HPP

#include "stabrep/qmatrix.hpp"
#include "stabrep/rational.hpp"

#include <functional>
#include <vector>

namespace stabrep {

// One factor of a generator word: either an elementary matrix power
// E_{ij}(c) (ones on the diagonal, c in slot (i,j)) or diag(u,1,...,1).
struct GenOp {
    enum class Kind { Elem, Diag1 };
    Kind kind;
    int i = 0, j = 0; // 0-based, Elem only
    Int c;            // Elem: exponent; Diag1: the unit u

    static GenOp elem(int i, int j, Int c) { return {Kind::Elem, i, j, std::move(c)}; }
    static GenOp diag1(Int u) { return {Kind::Diag1, 0, 0, std::move(u)}; }
};

using Word = std::vector<GenOp>;

// Integer matrices for word computations.
using ZMat = std::vector<std::vector<Int>>;

ZMat zmat_identity(int n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
Int zmat_det(ZMat a); // fraction-free elimination
ZMat zmat_of(const QMatrix& m);
QMatrix qmat_of(const ZMat& m);

// Factor A in GL_n(Z) (det +-1) as a product of E_{ij}(c) and at most one
// leading diag(-1,1,...,1). Product of the word, left to right, equals A.
Word word_for_integer(const ZMat& A);

// Same over Z/ell: A must have unit determinant; the word multiplies to A
// modulo ell, with a single leading diag(u,1,...,1) carrying the determinant.
Word word_for_mod(const ZMat& A, long ell);

// Evaluate a word through generator images. The callback must return the
// image of E_{ij}(1) for Elem ops (the power is applied here) and the image
// of diag(u,1,...,1) for Diag1 ops.
QMatrix evaluate_word(const Word& w,
                      const std::function<QMatrix(const GenOp&)>& gen_image,
                      int dim);

// Build the elementary matrix / sign matrix of the ambient group itself.
ZMat group_elem_matrix(int n, const GenOp& op);

} // namespace stabrep

#endif
