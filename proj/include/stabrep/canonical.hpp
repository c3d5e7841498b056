#ifndef STABREP_CANONICAL_HPP
#define STABREP_CANONICAL_HPP

#include "stabrep/vic.hpp"

namespace stabrep {

// Window modules used throughout the tests and the CLI.
VicModule trivial_module(int lo, int hi);
VicModule standard_module(int lo, int hi);
// Functions on P(F_q^n) as a permutation module (q prime).
VicModule projective_module(long q, int lo, int hi);
// Sum-zero submodule of the projective module, dense.
VicModule sumzero_module(long q, int lo, int hi);
// Trivial levels with a zero map out of the lowest level.
VicModule torsion_head_module(int lo, int hi);
// The determinant character; deliberately *not* a VIC(Z)-module (the
// complementary copy acts by -1 on the image), used as a negative control.
VicModule det_module(int lo, int hi);

} // namespace stabrep

#endif
