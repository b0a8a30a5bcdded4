#include "sdc/ring_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sdc {

RingMatrix::RingMatrix(RingId ring, size_t rows, size_t cols)
    : ring_(ring), a_(rows, cols), b_(rows, cols)
{
}

RingMatrix RingMatrix::identity(RingId ring, size_t n)
{
    RingMatrix m(ring, n, n);
    for (size_t i = 0; i < n; ++i)
        m.set(i, i, one(ring));
    return m;
}

RingMatrix RingMatrix::from_planes(RingId ring, BinaryMatrix a, BinaryMatrix b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("RingMatrix::from_planes(): plane shape mismatch");
    RingMatrix m;
    m.ring_ = ring;
    m.a_ = std::move(a);
    m.b_ = std::move(b);
    return m;
}

Elem RingMatrix::get(size_t r, size_t c) const
{
    return Elem{ring_, static_cast<uint8_t>(a_.get(r, c)), static_cast<uint8_t>(b_.get(r, c))};
}

void RingMatrix::set(size_t r, size_t c, Elem e)
{
    if (e.ring != ring_)
        throw std::invalid_argument("RingMatrix::set(): ring mismatch");
    a_.set(r, c, e.a);
    b_.set(r, c, e.b);
}

RingVector RingMatrix::row_vector(size_t r) const
{
    RingVector v(ring_, cols());
    for (size_t c = 0; c < cols(); ++c)
        v[c] = get(r, c);
    return v;
}

void RingMatrix::set_row(size_t r, const RingVector& v)
{
    if (v.ring != ring_ || v.size() != cols())
        throw std::invalid_argument("RingMatrix::set_row(): shape or ring mismatch");
    for (size_t c = 0; c < cols(); ++c)
        set(r, c, v[c]);
}

static void require_same_ring(const RingMatrix& x, const RingMatrix& y, const char* fn)
{
    if (x.ring() != y.ring())
        throw std::invalid_argument(std::string(fn) + "(): ring mismatch");
}

RingMatrix add(const RingMatrix& x, const RingMatrix& y)
{
    require_same_ring(x, y, "add");
    return RingMatrix::from_planes(x.ring(),
                                   sdc::add(x.a_plane(), y.a_plane()),
                                   sdc::add(x.b_plane(), y.b_plane()));
}

RingMatrix mul(const RingMatrix& x, const RingMatrix& y)
{
    require_same_ring(x, y, "mul");
    BinaryMatrix a = sdc::mul(x.a_plane(), y.a_plane());
    BinaryMatrix b = sdc::add(sdc::mul(x.a_plane(), y.b_plane()), sdc::mul(x.b_plane(), y.a_plane()));
    return RingMatrix::from_planes(x.ring(), std::move(a), std::move(b));
}

RingMatrix transpose(const RingMatrix& m)
{
    return RingMatrix::from_planes(m.ring(), sdc::transpose(m.a_plane()), sdc::transpose(m.b_plane()));
}

RingMatrix scale(Elem s, const RingMatrix& m)
{
    if (s.ring != m.ring())
        throw std::invalid_argument("scale(): ring mismatch");
    RingMatrix out(m.ring(), m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t c = 0; c < m.cols(); ++c)
            out.set(i, c, mul(s, m.get(i, c)));
    return out;
}

RingVector vec_mat_mul(const RingVector& v, const RingMatrix& m)
{
    if (v.ring != m.ring() || v.size() != m.rows())
        throw std::invalid_argument("vec_mat_mul(): shape or ring mismatch");
    RingVector out(m.ring(), m.cols());
    for (size_t c = 0; c < m.cols(); ++c) {
        Elem acc = zero(m.ring());
        for (size_t r = 0; r < m.rows(); ++r)
            acc = sdc::add(acc, sdc::mul(v[r], m.get(r, c)));
        out[c] = acc;
    }
    return out;
}

size_t free_rank(const RingMatrix& m)
{
    return rank_f2(m.a_plane());
}

} // namespace sdc
