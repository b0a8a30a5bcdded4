#include "sdc/gray.hpp"

#include <stdexcept>

namespace sdc {

BinaryMatrix gray_vector(const RingVector& v)
{
    if (v.ring != RingId::F2u)
        throw std::invalid_argument("gray_vector(): input must live over F2+uF2");
    size_t n = v.size();
    BinaryMatrix m(1, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        m.set(0, i, v[i].b);
        m.set(0, n + i, v[i].a ^ v[i].b);
    }
    return m;
}

BinaryMatrix gray_generator(const RingMatrix& g)
{
    if (g.ring() != RingId::F2u)
        throw std::invalid_argument("gray_generator(): input must live over F2+uF2");
    size_t k = g.rows(), n = g.cols();
    // Stack phi(row) and phi(u*row) for every row; u*(a+bu) = a*u, so the
    // second image is (a | a).
    BinaryMatrix stack(2 * k, 2 * n);
    for (size_t r = 0; r < k; ++r) {
        for (size_t c = 0; c < n; ++c) {
            Elem e = g.get(r, c);
            stack.set(r, c, e.b);
            stack.set(r, n + c, e.a ^ e.b);
            stack.set(k + r, c, e.a);
            stack.set(k + r, n + c, e.a);
        }
    }
    RrefResult red = rref_f2(stack);
    BinaryMatrix out(red.pivots.size(), 2 * n);
    for (size_t r = 0; r < out.rows(); ++r)
        std::copy(red.mat.row(r).begin(), red.mat.row(r).end(), out.row(r).begin());
    return out;
}

} // namespace sdc
