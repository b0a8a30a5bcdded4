#pragma once

// Twisted circulant machinery.  A lambda-circulant is a polynomial in the
// shift P_lambda, the n x n matrix with an identity block in the upper right
// corner and lambda in the lower left, so its rows repeat the first row with
// a cyclic shift that picks up a factor lambda on the wrap-around:
//
//   sigma_lambda(a) row i, column j  =  a[j-i]            for j >= i
//                                    =  lambda * a[n-i+j] for j <  i
//
// P_lambda^n = lambda I, products and sums of lambda-circulants are again
// lambda-circulant, and for unit lambda the transpose is lambda^{-1}-circulant.

#include "sdc/ring.hpp"
#include "sdc/ring_matrix.hpp"

namespace sdc {

// First row plus twist; the full matrix is recoverable via circulant().
struct CirculantSpec {
    Elem lambda;
    RingVector first_row;
};

RingMatrix shift_matrix(RingId ring, size_t n, Elem lambda);
RingMatrix circulant(const CirculantSpec& s);

bool is_lambda_circulant(const RingMatrix& m, Elem lambda);

// First row of sigma_lambda(a) * sigma_lambda(b) without forming either
// factor: entry k collects a_i b_j over i+j = k mod n, twisted by lambda on
// the pairs that wrap (i+j >= n).
RingVector product_first_row(const CirculantSpec& a, const CirculantSpec& b);

// Spec of sigma_lambda(a)^T, which is lambda^{-1}-circulant with first row
// (a_0, lambda a_{n-1}, ..., lambda a_1).  Requires unit lambda.
CirculantSpec transpose_spec(const CirculantSpec& s);

} // namespace sdc
