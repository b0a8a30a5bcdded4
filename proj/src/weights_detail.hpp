#pragma once

// Internal building blocks shared by the parallel and serial weight engines.
// Everything here works on "systematic views": the generator reduced so that
// an information set holds the message bits, with rows trimmed down to their
// redundancy columns.  A weight-p message then gives a codeword of weight
// p + wt(m * R), so the hot loops only ever touch the redundancy words.

#include "sdc/code.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sdc::detail {

struct SysView {
    size_t k = 0;
    size_t red_cols = 0;
    size_t wr = 1; // words per redundancy row, at least one to keep loops simple
    std::vector<uint64_t> rows;
    std::vector<size_t> pivots;    // pivot column of each row
    std::vector<size_t> red_index; // column index behind each redundancy bit

    const uint64_t* row(size_t r) const { return rows.data() + r * wr; }
};

inline SysView systemize(const BinaryMatrix& gen, std::span<const size_t> pref)
{
    RrefResult red = rref_f2(gen, pref);
    if (red.pivots.size() != gen.rows())
        throw std::logic_error("systemize(): generator rows are not independent");

    SysView v;
    v.k = gen.rows();
    v.pivots = red.pivots;

    std::vector<char> is_piv(gen.cols(), 0);
    for (size_t p : v.pivots)
        is_piv[p] = 1;
    for (size_t c = 0; c < gen.cols(); ++c)
        if (!is_piv[c])
            v.red_index.push_back(c);

    v.red_cols = v.red_index.size();
    v.wr = v.red_cols == 0 ? 1 : (v.red_cols + 63) / 64;
    v.rows.assign(v.k * v.wr, 0);
    for (size_t r = 0; r < v.k; ++r)
        for (size_t t = 0; t < v.red_cols; ++t)
            if (red.mat.get(r, v.red_index[t]))
                v.rows[r * v.wr + t / 64] |= uint64_t(1) << (t % 64);
    return v;
}

inline SysView natural_view(const BinaryCode& c)
{
    std::vector<size_t> order(c.length());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    return systemize(c.generator(), order);
}

// Second view: pivots are searched among the complement of the first
// information set before falling back to its columns, which keeps the two
// sets disjoint whenever the complement has full rank.
inline SysView complement_view(const BinaryCode& c, const SysView& first)
{
    std::vector<char> is_piv(c.length(), 0);
    for (size_t p : first.pivots)
        is_piv[p] = 1;
    std::vector<size_t> pref;
    pref.reserve(c.length());
    for (size_t i = 0; i < c.length(); ++i)
        if (!is_piv[i])
            pref.push_back(i);
    for (size_t p : first.pivots)
        pref.push_back(p);
    return systemize(c.generator(), pref);
}

inline uint32_t view_overlap(const SysView& a, const SysView& b)
{
    std::vector<char> in_a(0);
    size_t cols = 0;
    for (size_t p : a.pivots)
        cols = p + 1 > cols ? p + 1 : cols;
    for (size_t p : b.pivots)
        cols = p + 1 > cols ? p + 1 : cols;
    in_a.assign(cols, 0);
    for (size_t p : a.pivots)
        in_a[p] = 1;
    uint32_t n = 0;
    for (size_t p : b.pivots)
        n += in_a[p];
    return n;
}

inline int resolve_threads(int threads)
{
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

// All xors of exactly p distinct single-word rows with first index in
// [lo, hi), leaf(word, bcnt) per subset; bcnt counts chosen rows with a set
// flag (flag may be null).  The last level runs as a flat loop.
template <class F>
inline void combos_w1_rec(const uint64_t* rows, const uint8_t* flag, size_t k, uint32_t p,
                          size_t start, uint32_t depth, uint64_t acc, uint32_t bcnt, F& leaf)
{
    if (depth + 1 == p) {
        if (flag) {
            for (size_t i = start; i < k; ++i)
                leaf(acc ^ rows[i], bcnt + flag[i]);
        } else {
            for (size_t i = start; i < k; ++i)
                leaf(acc ^ rows[i], 0u);
        }
        return;
    }
    size_t lim = k - (p - depth - 1);
    for (size_t i = start; i < lim; ++i)
        combos_w1_rec(rows, flag, k, p, i + 1, depth + 1, acc ^ rows[i],
                      flag ? bcnt + flag[i] : 0u, leaf);
}

template <class F>
inline void combos_w1(const uint64_t* rows, const uint8_t* flag, size_t k, uint32_t p,
                      size_t lo, size_t hi, F&& leaf)
{
    if (p == 0 || k < p)
        return;
    if (p == 1) {
        for (size_t i = lo; i < hi; ++i)
            leaf(rows[i], flag ? uint32_t(flag[i]) : 0u);
        return;
    }
    for (size_t i0 = lo; i0 < hi; ++i0)
        combos_w1_rec(rows, flag, k, p, i0 + 1, 1, rows[i0], flag ? uint32_t(flag[i0]) : 0u, leaf);
}

// Multi-word fallback; leaf(const uint64_t* words, bcnt).
template <class F>
inline void combos_gen_rec(const SysView& v, const uint8_t* flag, uint32_t p, size_t start,
                           uint32_t depth, std::vector<uint64_t>& stack, uint32_t bcnt, F& leaf)
{
    size_t wr = v.wr;
    const uint64_t* acc = stack.data() + depth * wr;
    uint64_t* next = stack.data() + (depth + 1) * wr;
    if (depth + 1 == p) {
        for (size_t i = start; i < v.k; ++i) {
            const uint64_t* row = v.row(i);
            for (size_t w = 0; w < wr; ++w)
                next[w] = acc[w] ^ row[w];
            leaf(next, flag ? bcnt + flag[i] : 0u);
        }
        return;
    }
    size_t lim = v.k - (p - depth - 1);
    for (size_t i = start; i < lim; ++i) {
        const uint64_t* row = v.row(i);
        for (size_t w = 0; w < wr; ++w)
            next[w] = acc[w] ^ row[w];
        combos_gen_rec(v, flag, p, i + 1, depth + 1, stack, flag ? bcnt + flag[i] : 0u, leaf);
    }
}

template <class F>
inline void combos_gen(const SysView& v, const uint8_t* flag, uint32_t p,
                       size_t lo, size_t hi, F&& leaf)
{
    if (p == 0 || v.k < p)
        return;
    std::vector<uint64_t> stack((size_t(p) + 1) * v.wr, 0);
    for (size_t i0 = lo; i0 < hi; ++i0) {
        const uint64_t* row = v.row(i0);
        for (size_t w = 0; w < v.wr; ++w)
            stack[v.wr + w] = row[w];
        if (p == 1)
            leaf(stack.data() + v.wr, flag ? uint32_t(flag[i0]) : 0u);
        else
            combos_gen_rec(v, flag, p, i0 + 1, 1, stack, flag ? uint32_t(flag[i0]) : 0u, leaf);
    }
}

// Walk Gray-code message indices j in [lo, hi) and report each codeword
// weight.  g(j) = j ^ (j >> 1); stepping to j flips message bit ctz(j).
template <class F>
inline void gray_chunk(const SysView& v, uint64_t lo, uint64_t hi, F&& visit)
{
    if (lo >= hi)
        return;
    uint64_t m = lo ^ (lo >> 1);
    int mw = std::popcount(m);

    if (v.wr == 1) {
        uint64_t acc = 0;
        for (size_t r = 0; r < v.k; ++r)
            if ((m >> r) & 1)
                acc ^= v.rows[r];
        visit(uint32_t(mw + std::popcount(acc)));
        for (uint64_t j = lo + 1; j < hi; ++j) {
            unsigned bit = unsigned(std::countr_zero(j));
            m ^= uint64_t(1) << bit;
            mw += ((m >> bit) & 1) ? 1 : -1;
            acc ^= v.rows[bit];
            visit(uint32_t(mw + std::popcount(acc)));
        }
        return;
    }

    std::vector<uint64_t> acc(v.wr, 0);
    auto acc_weight = [&] {
        int s = 0;
        for (uint64_t w : acc)
            s += std::popcount(w);
        return s;
    };
    for (size_t r = 0; r < v.k; ++r)
        if ((m >> r) & 1)
            for (size_t w = 0; w < v.wr; ++w)
                acc[w] ^= v.row(r)[w];
    visit(uint32_t(mw + acc_weight()));
    for (uint64_t j = lo + 1; j < hi; ++j) {
        unsigned bit = unsigned(std::countr_zero(j));
        m ^= uint64_t(1) << bit;
        mw += ((m >> bit) & 1) ? 1 : -1;
        for (size_t w = 0; w < v.wr; ++w)
            acc[w] ^= v.row(bit)[w];
        visit(uint32_t(mw + acc_weight()));
    }
}

} // namespace sdc::detail
