#include "sdc/weights.hpp"

#include "weights_detail.hpp"

#include <algorithm>

// Single-threaded reference engines.  They share the systematic-view setup
// with the parallel kernels but drive the enumeration in one plain pass, so
// any chunking or merge bug in the parallel paths shows up as a mismatch.

namespace sdc::serial {

using detail::SysView;

namespace {

WeightProfile profile_from_counts(size_t length, size_t k, uint32_t cutoff,
                                  const std::vector<uint64_t>& counts)
{
    WeightProfile p;
    p.length = length;
    p.k = k;
    p.cutoff = cutoff;
    for (uint32_t w = 0; w < counts.size() && w <= cutoff; ++w)
        if (counts[w]) {
            p.census[w] = counts[w];
            if (w > 0 && !p.min_distance)
                p.min_distance = w;
        }
    return p;
}

uint32_t bz_lower_bound(uint32_t p, uint32_t delta)
{
    return (p + 1) + (p + 1 > delta ? p + 1 - delta : 0);
}

uint32_t level_min(const SysView& v, uint32_t p)
{
    uint32_t best = UINT32_MAX;
    if (v.k < p)
        return best;
    size_t nfirst = v.k - p + 1;
    if (v.wr == 1) {
        detail::combos_w1(v.rows.data(), nullptr, v.k, p, 0, nfirst,
                          [&](uint64_t red, uint32_t) {
                              uint32_t w = p + uint32_t(std::popcount(red));
                              if (w < best)
                                  best = w;
                          });
    } else {
        detail::combos_gen(v, nullptr, p, 0, nfirst, [&](const uint64_t* red, uint32_t) {
            uint32_t w = p;
            for (size_t j = 0; j < v.wr; ++j)
                w += uint32_t(std::popcount(red[j]));
            if (w < best)
                best = w;
        });
    }
    return best;
}

void census_level(const SysView& v, uint32_t p, uint32_t wmax, const uint64_t* maskA,
                  const uint8_t* flag, uint32_t pfilter, std::vector<uint64_t>& counts)
{
    if (v.k < p)
        return;
    size_t nfirst = v.k - p + 1;
    if (v.wr == 1) {
        uint64_t mask0 = maskA ? maskA[0] : 0;
        detail::combos_w1(v.rows.data(), flag, v.k, p, 0, nfirst,
                          [&](uint64_t red, uint32_t bcnt) {
                              uint32_t w = p + uint32_t(std::popcount(red));
                              if (w > wmax)
                                  return;
                              if (maskA && uint32_t(std::popcount(red & mask0)) + bcnt <= pfilter)
                                  return;
                              ++counts[w];
                          });
    } else {
        detail::combos_gen(v, flag, p, 0, nfirst, [&](const uint64_t* red, uint32_t bcnt) {
            uint32_t w = p;
            for (size_t j = 0; j < v.wr; ++j)
                w += uint32_t(std::popcount(red[j]));
            if (w > wmax)
                return;
            if (maskA) {
                uint32_t onp1 = bcnt;
                for (size_t j = 0; j < v.wr; ++j)
                    onp1 += uint32_t(std::popcount(red[j] & maskA[j]));
                if (onp1 <= pfilter)
                    return;
            }
            ++counts[w];
        });
    }
}

} // namespace

WeightProfile weight_distribution_exhaustive(const BinaryCode& c)
{
    if (c.dim() > 34)
        throw std::invalid_argument("weight_distribution_exhaustive(): dimension above 34");
    std::vector<uint64_t> counts(c.length() + 1, 0);
    if (c.dim() == 0) {
        counts[0] = 1;
        return profile_from_counts(c.length(), 0, uint32_t(c.length()), counts);
    }
    SysView v = detail::natural_view(c);
    detail::gray_chunk(v, 0, uint64_t(1) << c.dim(), [&](uint32_t w) { ++counts[w]; });
    return profile_from_counts(c.length(), c.dim(), uint32_t(c.length()), counts);
}

uint32_t min_distance_exhaustive(const BinaryCode& c)
{
    if (c.dim() == 0)
        throw std::invalid_argument("min_distance_exhaustive(): the zero code has no distance");
    return *serial::weight_distribution_exhaustive(c).min_distance;
}

uint32_t min_distance_bz(const BinaryCode& c, BzTrace* trace)
{
    if (c.dim() == 0)
        throw std::invalid_argument("min_distance_bz(): the zero code has no distance");
    SysView v1 = detail::natural_view(c);
    SysView v2 = detail::complement_view(c, v1);
    uint32_t delta = detail::view_overlap(v1, v2);
    if (trace) {
        trace->levels.clear();
        trace->deficit = delta;
    }
    uint32_t ub = UINT32_MAX;
    for (uint32_t p = 1; p <= c.dim(); ++p) {
        ub = std::min(ub, level_min(v1, p));
        ub = std::min(ub, level_min(v2, p));
        uint32_t lb = bz_lower_bound(p, delta);
        if (trace)
            trace->levels.push_back({p, lb, ub});
        if (lb >= ub)
            break;
    }
    return ub;
}

WeightProfile low_weight_census(const BinaryCode& c, uint32_t wmax)
{
    wmax = std::min<uint32_t>(wmax, uint32_t(c.length()));
    std::vector<uint64_t> counts(c.length() + 1, 0);
    counts[0] = 1;
    if (c.dim() == 0)
        return profile_from_counts(c.length(), 0, wmax, counts);

    SysView v1 = detail::natural_view(c);
    SysView v2 = detail::complement_view(c, v1);
    uint32_t delta = detail::view_overlap(v1, v2);

    uint32_t pmax = 1;
    while (pmax < c.dim() && bz_lower_bound(pmax, delta) <= wmax)
        ++pmax;

    std::vector<char> in_p1(c.length(), 0);
    for (size_t p : v1.pivots)
        in_p1[p] = 1;
    std::vector<uint64_t> maskA(v2.wr, 0);
    for (size_t t = 0; t < v2.red_cols; ++t)
        if (in_p1[v2.red_index[t]])
            maskA[t / 64] |= uint64_t(1) << (t % 64);
    std::vector<uint8_t> flag(v2.k, 0);
    bool any_flag = false;
    for (size_t r = 0; r < v2.k; ++r)
        if (in_p1[v2.pivots[r]]) {
            flag[r] = 1;
            any_flag = true;
        }

    for (uint32_t p = 1; p <= pmax; ++p) {
        census_level(v1, p, wmax, nullptr, nullptr, 0, counts);
        census_level(v2, p, wmax, maskA.data(), any_flag ? flag.data() : nullptr, pmax, counts);
    }
    return profile_from_counts(c.length(), c.dim(), wmax, counts);
}

} // namespace sdc::serial
