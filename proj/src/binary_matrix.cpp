#include "sdc/binary_matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace sdc {

BinaryMatrix::BinaryMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0)
{
}

BinaryMatrix BinaryMatrix::identity(size_t n)
{
    BinaryMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

bool BinaryMatrix::get(size_t r, size_t c) const
{
    return (w_[r * wpr_ + c / 64] >> (c % 64)) & 1u;
}

void BinaryMatrix::set(size_t r, size_t c, bool v)
{
    uint64_t& word = w_[r * wpr_ + c / 64];
    uint64_t bit = uint64_t(1) << (c % 64);
    if (v)
        word |= bit;
    else
        word &= ~bit;
}

void BinaryMatrix::xor_rows(size_t dst, size_t src)
{
    uint64_t* d = w_.data() + dst * wpr_;
    const uint64_t* s = w_.data() + src * wpr_;
    for (size_t i = 0; i < wpr_; ++i)
        d[i] ^= s[i];
}

void BinaryMatrix::swap_rows(size_t r1, size_t r2)
{
    if (r1 == r2)
        return;
    std::swap_ranges(w_.begin() + r1 * wpr_, w_.begin() + (r1 + 1) * wpr_, w_.begin() + r2 * wpr_);
}

size_t BinaryMatrix::row_weight(size_t r) const
{
    return word_weight(row(r));
}

bool BinaryMatrix::row_is_zero(size_t r) const
{
    auto w = row(r);
    return std::all_of(w.begin(), w.end(), [](uint64_t x) { return x == 0; });
}

size_t word_weight(std::span<const uint64_t> w)
{
    size_t n = 0;
    for (uint64_t x : w)
        n += std::popcount(x);
    return n;
}

size_t dot_weight(std::span<const uint64_t> x, std::span<const uint64_t> y)
{
    size_t n = 0;
    for (size_t i = 0; i < x.size(); ++i)
        n += std::popcount(x[i] & y[i]);
    return n;
}

bool parity(std::span<const uint64_t> x, std::span<const uint64_t> y)
{
    return dot_weight(x, y) & 1;
}

BinaryMatrix add(const BinaryMatrix& x, const BinaryMatrix& y)
{
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("add(): shape mismatch");
    BinaryMatrix r = x;
    for (size_t i = 0; i < r.rows(); ++i)
        for (size_t w = 0; w < r.words_per_row(); ++w)
            r.row(i)[w] ^= y.row(i)[w];
    return r;
}

BinaryMatrix mul(const BinaryMatrix& x, const BinaryMatrix& y)
{
    if (x.cols() != y.rows())
        throw std::invalid_argument("mul(): inner dimension mismatch");
    BinaryMatrix r(x.rows(), y.cols());
    for (size_t i = 0; i < x.rows(); ++i) {
        auto xi = x.row(i);
        auto ri = r.row(i);
        // Row i of the product is the xor of the y-rows selected by row i of x.
        for (size_t w = 0; w < x.words_per_row(); ++w) {
            uint64_t bits = xi[w];
            while (bits) {
                size_t c = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                auto yc = y.row(c);
                for (size_t j = 0; j < r.words_per_row(); ++j)
                    ri[j] ^= yc[j];
            }
        }
    }
    return r;
}

BinaryMatrix transpose(const BinaryMatrix& m)
{
    BinaryMatrix r(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        auto mi = m.row(i);
        for (size_t w = 0; w < m.words_per_row(); ++w) {
            uint64_t bits = mi[w];
            while (bits) {
                size_t c = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                r.set(c, i, true);
            }
        }
    }
    return r;
}

BinaryMatrix vstack(const BinaryMatrix& top, const BinaryMatrix& bottom)
{
    if (top.cols() != bottom.cols())
        throw std::invalid_argument("vstack(): column mismatch");
    BinaryMatrix r(top.rows() + bottom.rows(), top.cols());
    for (size_t i = 0; i < top.rows(); ++i)
        std::copy(top.row(i).begin(), top.row(i).end(), r.row(i).begin());
    for (size_t i = 0; i < bottom.rows(); ++i)
        std::copy(bottom.row(i).begin(), bottom.row(i).end(), r.row(top.rows() + i).begin());
    return r;
}

RrefResult rref_f2(const BinaryMatrix& m, std::span<const size_t> col_order)
{
    RrefResult res;
    res.mat = m;
    BinaryMatrix& a = res.mat;
    size_t next = 0;
    for (size_t c : col_order) {
        if (next == a.rows())
            break;
        size_t pivot = next;
        while (pivot < a.rows() && !a.get(pivot, c))
            ++pivot;
        if (pivot == a.rows())
            continue;
        a.swap_rows(next, pivot);
        for (size_t r = 0; r < a.rows(); ++r)
            if (r != next && a.get(r, c))
                a.xor_rows(r, next);
        res.pivots.push_back(c);
        ++next;
    }
    return res;
}

RrefResult rref_f2(const BinaryMatrix& m)
{
    std::vector<size_t> order(m.cols());
    std::iota(order.begin(), order.end(), size_t(0));
    return rref_f2(m, order);
}

size_t rank_f2(const BinaryMatrix& m)
{
    return rref_f2(m).pivots.size();
}

BinaryMatrix kernel_f2(const BinaryMatrix& m)
{
    RrefResult r = rref_f2(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (size_t p : r.pivots)
        is_pivot[p] = 1;

    BinaryMatrix ker(m.cols() - r.pivots.size(), m.cols());
    size_t out = 0;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        // Free column f induces the kernel vector with a 1 at f and the
        // column-f entries of the reduced rows copied onto the pivot columns.
        ker.set(out, f, true);
        for (size_t i = 0; i < r.pivots.size(); ++i)
            if (r.mat.get(i, f))
                ker.set(out, r.pivots[i], true);
        ++out;
    }
    return ker;
}

BinaryMatrix intersect_rowspaces(const BinaryMatrix& x, const BinaryMatrix& y)
{
    if (x.cols() != y.cols())
        throw std::invalid_argument("intersect_rowspaces(): column mismatch");
    // rowspace(x) meet rowspace(y) is the dual of rowspace(x)-perp plus
    // rowspace(y)-perp, and kernel_f2 hands us those perps as row bases.
    BinaryMatrix duals = vstack(kernel_f2(x), kernel_f2(y));
    return kernel_f2(duals);
}

} // namespace sdc
