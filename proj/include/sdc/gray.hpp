#pragma once

// The Gray isometry from F2+uF2 to pairs of bits,
//
//   phi(a + b*u) = (b, a + b),
//
// extended coordinatewise: a length-n vector maps to a length-2n binary
// vector whose first block holds the u-parts and whose second block holds
// the sums a xor b.  The map is an isometry from Lee weight to Hamming
// weight and carries duality across: phi of a self-dual module is a
// self-dual binary code of twice the length.
//
// On F2-linear spans, phi(x + y) = phi(x) + phi(y) only holds for the
// F2-span, not the R-span, so the image of a module spanned by rows g_i is
// generated by the binary vectors phi(g_i) together with phi(u * g_i).

#include "sdc/binary_matrix.hpp"
#include "sdc/ring.hpp"
#include "sdc/ring_matrix.hpp"

namespace sdc {

// Image of a single vector as a 1 x 2n matrix row.  F2u input only.
BinaryMatrix gray_vector(const RingVector& v);

// Row-reduced generator of phi(M) for the module M spanned by the rows of g.
// For a free module of rank k the result has exactly 2k rows.
BinaryMatrix gray_generator(const RingMatrix& g);

} // namespace sdc
