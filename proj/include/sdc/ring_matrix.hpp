#pragma once

// Matrices over F2 or F2+uF2, stored as two GF(2) bit planes: entry (r,c) is
// a + b*u where a comes from the a-plane and b from the b-plane.  The b-plane
// of an F2 matrix is identically zero.  Ring products reduce to three plane
// products via (a1 + b1 u)(a2 + b2 u) = a1 a2 + (a1 b2 + b1 a2) u.

#include "sdc/binary_matrix.hpp"
#include "sdc/ring.hpp"

namespace sdc {

class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(RingId ring, size_t rows, size_t cols);

    static RingMatrix identity(RingId ring, size_t n);
    static RingMatrix from_planes(RingId ring, BinaryMatrix a, BinaryMatrix b);

    RingId ring() const { return ring_; }
    size_t rows() const { return a_.rows(); }
    size_t cols() const { return a_.cols(); }

    Elem get(size_t r, size_t c) const;
    void set(size_t r, size_t c, Elem e);

    const BinaryMatrix& a_plane() const { return a_; }
    const BinaryMatrix& b_plane() const { return b_; }

    RingVector row_vector(size_t r) const;
    void set_row(size_t r, const RingVector& v);

    bool operator==(const RingMatrix&) const = default;

private:
    RingId ring_ = RingId::F2;
    BinaryMatrix a_, b_;
};

RingMatrix add(const RingMatrix& x, const RingMatrix& y);
RingMatrix mul(const RingMatrix& x, const RingMatrix& y);
RingMatrix transpose(const RingMatrix& m);
RingMatrix scale(Elem s, const RingMatrix& m);

RingVector vec_mat_mul(const RingVector& v, const RingMatrix& m);

// Rank of the standard-form free part.  Reduction mod u is an isomorphism of
// the residue onto F2, so this equals the GF(2) rank of the a-plane; for F2
// matrices it is the ordinary rank.
size_t free_rank(const RingMatrix& m);

} // namespace sdc
