#include "sdc/weights.hpp"

#include "weights_detail.hpp"

#include <algorithm>
#include <string>

namespace sdc {

using detail::SysView;

uint32_t extremal_bound(size_t length, CodeType type)
{
    if (length == 0 || length % 2 != 0)
        throw std::invalid_argument("extremal_bound(): length must be positive and even");
    size_t q = length / 24, r = length % 24;
    if (type == CodeType::TypeII) {
        if (length % 8 != 0)
            throw std::invalid_argument("extremal_bound(): Type II codes need length divisible by 8");
        return uint32_t(4 * q + 4);
    }
    if (r == 0)
        return uint32_t(4 * q + 2);
    if (r == 22)
        return uint32_t(4 * q + 6);
    return uint32_t(4 * q + 4);
}

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

uint32_t level_min(const SysView& v, uint32_t p, int T)
{
    if (v.k < p)
        return UINT32_MAX;
    int64_t nfirst = int64_t(v.k - p + 1);
    uint32_t best = UINT32_MAX;
    if (v.wr == 1) {
        const uint64_t* rows = v.rows.data();
#ifdef _OPENMP
#pragma omp parallel for num_threads(T) schedule(dynamic, 1) reduction(min : best)
#endif
        for (int64_t i0 = 0; i0 < nfirst; ++i0) {
            uint32_t local = UINT32_MAX;
            detail::combos_w1(rows, nullptr, v.k, p, size_t(i0), size_t(i0) + 1,
                              [&](uint64_t red, uint32_t) {
                                  uint32_t w = p + uint32_t(std::popcount(red));
                                  if (w < local)
                                      local = w;
                              });
            if (local < best)
                best = local;
        }
    } else {
#ifdef _OPENMP
#pragma omp parallel for num_threads(T) schedule(dynamic, 1) reduction(min : best)
#endif
        for (int64_t i0 = 0; i0 < nfirst; ++i0) {
            uint32_t local = UINT32_MAX;
            detail::combos_gen(v, nullptr, p, size_t(i0), size_t(i0) + 1,
                               [&](const uint64_t* red, uint32_t) {
                                   uint32_t w = p;
                                   for (size_t j = 0; j < v.wr; ++j)
                                       w += uint32_t(std::popcount(red[j]));
                                   if (w < local)
                                       local = w;
                               });
            if (local < best)
                best = local;
        }
    }
    return best;
}

// One census level of one view.  A null mask admits every codeword; with a
// mask, a codeword counts only if its weight on the first information set
// (mask bits of the redundancy word plus flagged chosen rows) exceeds
// pfilter, i.e. only if the first view cannot have produced it.
void census_level(const SysView& v, uint32_t p, uint32_t wmax, const uint64_t* maskA,
                  const uint8_t* flag, uint32_t pfilter, std::vector<uint64_t>& counts, int T)
{
    if (v.k < p)
        return;
    int64_t nfirst = int64_t(v.k - p + 1);
    std::vector<std::vector<uint64_t>> parts(static_cast<size_t>(nfirst));
#ifdef _OPENMP
#pragma omp parallel for num_threads(T) schedule(dynamic, 1)
#endif
    for (int64_t i0 = 0; i0 < nfirst; ++i0) {
        std::vector<uint64_t> local(counts.size(), 0);
        if (v.wr == 1) {
            const uint64_t* rows = v.rows.data();
            uint64_t mask0 = maskA ? maskA[0] : 0;
            detail::combos_w1(rows, flag, v.k, p, size_t(i0), size_t(i0) + 1,
                              [&](uint64_t red, uint32_t bcnt) {
                                  uint32_t w = p + uint32_t(std::popcount(red));
                                  if (w > wmax)
                                      return;
                                  if (maskA && uint32_t(std::popcount(red & mask0)) + bcnt <= pfilter)
                                      return;
                                  ++local[w];
                              });
        } else {
            detail::combos_gen(v, flag, p, size_t(i0), size_t(i0) + 1,
                               [&](const uint64_t* red, uint32_t bcnt) {
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
                                   ++local[w];
                               });
        }
        parts[size_t(i0)] = std::move(local);
    }
    for (const auto& part : parts)
        for (size_t w = 0; w < counts.size(); ++w)
            counts[w] += part[w];
}

struct CensusFilter {
    std::vector<uint64_t> maskA;
    std::vector<uint8_t> flag;
    bool any_flag = false;
};

CensusFilter make_filter(size_t length, const SysView& v1, const SysView& v2)
{
    CensusFilter f;
    std::vector<char> in_p1(length, 0);
    for (size_t p : v1.pivots)
        in_p1[p] = 1;
    f.maskA.assign(v2.wr, 0);
    for (size_t t = 0; t < v2.red_cols; ++t)
        if (in_p1[v2.red_index[t]])
            f.maskA[t / 64] |= uint64_t(1) << (t % 64);
    f.flag.assign(v2.k, 0);
    for (size_t r = 0; r < v2.k; ++r)
        if (in_p1[v2.pivots[r]]) {
            f.flag[r] = 1;
            f.any_flag = true;
        }
    return f;
}

} // namespace

WeightProfile weight_distribution_exhaustive(const BinaryCode& c, int threads)
{
    if (c.dim() > 34)
        throw std::invalid_argument("weight_distribution_exhaustive(): dimension above 34");
    std::vector<uint64_t> counts(c.length() + 1, 0);
    if (c.dim() == 0) {
        counts[0] = 1;
        return profile_from_counts(c.length(), 0, uint32_t(c.length()), counts);
    }
    SysView v = detail::natural_view(c);
    uint64_t total = uint64_t(1) << c.dim();
    int T = detail::resolve_threads(threads);
    uint64_t nchunks = std::min<uint64_t>(total, uint64_t(T) * 4);
    std::vector<std::vector<uint64_t>> parts(static_cast<size_t>(nchunks));
#ifdef _OPENMP
#pragma omp parallel for num_threads(T) schedule(dynamic, 1)
#endif
    for (int64_t ci = 0; ci < int64_t(nchunks); ++ci) {
        std::vector<uint64_t> local(c.length() + 1, 0);
        uint64_t lo = total / nchunks * uint64_t(ci) + std::min<uint64_t>(uint64_t(ci), total % nchunks);
        uint64_t len = total / nchunks + (uint64_t(ci) < total % nchunks ? 1 : 0);
        detail::gray_chunk(v, lo, lo + len, [&](uint32_t w) { ++local[w]; });
        parts[size_t(ci)] = std::move(local);
    }
    for (const auto& part : parts)
        for (size_t w = 0; w < counts.size(); ++w)
            counts[w] += part[w];
    return profile_from_counts(c.length(), c.dim(), uint32_t(c.length()), counts);
}

uint32_t min_distance_exhaustive(const BinaryCode& c, int threads)
{
    if (c.dim() == 0)
        throw std::invalid_argument("min_distance_exhaustive(): the zero code has no distance");
    return *weight_distribution_exhaustive(c, threads).min_distance;
}

uint32_t min_distance_bz(const BinaryCode& c, int threads, BzTrace* trace)
{
    if (c.dim() == 0)
        throw std::invalid_argument("min_distance_bz(): the zero code has no distance");
    int T = detail::resolve_threads(threads);
    SysView v1 = detail::natural_view(c);
    SysView v2 = detail::complement_view(c, v1);
    uint32_t delta = detail::view_overlap(v1, v2);
    if (trace) {
        trace->levels.clear();
        trace->deficit = delta;
    }
    uint32_t ub = UINT32_MAX;
    for (uint32_t p = 1; p <= c.dim(); ++p) {
        ub = std::min(ub, level_min(v1, p, T));
        ub = std::min(ub, level_min(v2, p, T));
        uint32_t lb = bz_lower_bound(p, delta);
        if (trace)
            trace->levels.push_back({p, lb, ub});
        if (lb >= ub)
            break;
    }
    return ub;
}

std::optional<uint32_t> distance_at_least(const BinaryCode& c, uint32_t dmin, int threads)
{
    if (c.dim() == 0)
        throw std::invalid_argument("distance_at_least(): the zero code has no distance");
    int T = detail::resolve_threads(threads);
    SysView v1 = detail::natural_view(c);
    SysView v2 = detail::complement_view(c, v1);
    uint32_t delta = detail::view_overlap(v1, v2);
    uint32_t ub = UINT32_MAX;
    for (uint32_t p = 1; p <= c.dim(); ++p) {
        ub = std::min(ub, level_min(v1, p, T));
        if (ub < dmin)
            return std::nullopt;
        ub = std::min(ub, level_min(v2, p, T));
        if (ub < dmin)
            return std::nullopt;
        if (bz_lower_bound(p, delta) >= ub)
            break;
    }
    return ub;
}

WeightProfile low_weight_census(const BinaryCode& c, uint32_t wmax, int threads)
{
    wmax = std::min<uint32_t>(wmax, uint32_t(c.length()));
    std::vector<uint64_t> counts(c.length() + 1, 0);
    counts[0] = 1;
    if (c.dim() == 0)
        return profile_from_counts(c.length(), 0, wmax, counts);

    int T = detail::resolve_threads(threads);
    SysView v1 = detail::natural_view(c);
    SysView v2 = detail::complement_view(c, v1);
    uint32_t delta = detail::view_overlap(v1, v2);

    // Deepest level needed: either the two-view bound clears wmax, or the
    // levels reach the dimension and the first view alone walks everything.
    uint32_t pmax = 1;
    while (pmax < c.dim() && bz_lower_bound(pmax, delta) <= wmax)
        ++pmax;

    CensusFilter f = make_filter(c.length(), v1, v2);
    for (uint32_t p = 1; p <= pmax; ++p) {
        census_level(v1, p, wmax, nullptr, nullptr, 0, counts, T);
        census_level(v2, p, wmax, f.maskA.data(), f.any_flag ? f.flag.data() : nullptr, pmax,
                     counts, T);
    }
    return profile_from_counts(c.length(), c.dim(), wmax, counts);
}

namespace {

long long aw(const WeightProfile& w, uint32_t i)
{
    auto it = w.census.find(i);
    return it == w.census.end() ? 0 : static_cast<long long>(it->second);
}

long long exact_div(long long num, long long den, const char* what)
{
    // Truncating division would silently mangle a bad census, so demand
    // exactness: these inversions are integral for every tabulated family.
    if (num % den != 0)
        throw ClassifyError(std::string("classify_enumerator(): non-integral ") + what);
    return num / den;
}

} // namespace

EnumeratorClass classify_enumerator(const WeightProfile& w)
{
    EnumeratorClass cls;
    switch (w.length) {
    case 54: {
        if (w.cutoff < 10)
            throw ClassifyError("classify_enumerator(): length 54 needs a census to weight 10");
        long long alpha = exact_div(351 - aw(w, 10), 8, "alpha at length 54");
        cls.alpha = alpha;
        if (w.cutoff >= 12) {
            long long a12 = aw(w, 12);
            if (a12 == 5031 + 24 * alpha)
                cls.family = 1;
            else if (a12 == 5543 + 24 * alpha)
                cls.family = 2;
            else
                throw ClassifyError("classify_enumerator(): length 54 counts fit no family");
        }
        break;
    }
    case 68: {
        if (w.cutoff < 12)
            throw ClassifyError("classify_enumerator(): length 68 needs a census to weight 12");
        long long alpha = exact_div(aw(w, 12) - 442, 4, "alpha at length 68");
        cls.alpha = alpha;
        if (w.cutoff >= 14) {
            long long a14 = aw(w, 14);
            if (a14 == 10864 - 8 * alpha) {
                cls.family = 1;
            } else {
                cls.beta = exact_div(14960 - 8 * alpha - a14, 256, "beta at length 68");
                cls.family = 2;
            }
        }
        break;
    }
    case 82: {
        if (w.cutoff < 18)
            throw ClassifyError("classify_enumerator(): length 82 needs a census to weight 18");
        long long a14 = aw(w, 14), a16 = aw(w, 16), a18 = aw(w, 18);
        if (a14 == 560 && a16 == 60724 && a18 == 233545) {
            cls.family = 1;
            break;
        }
        long long alpha = exact_div(a14 - 3280, 2, "alpha at length 82");
        long long beta = exact_div(a16 - 36244 + 2 * alpha, 128, "beta at length 82");
        cls.alpha = alpha;
        cls.beta = beta;
        if (a18 == 506153 - 26 * alpha - 896 * beta)
            cls.family = 2;
        else if (a18 == 514345 - 26 * alpha - 896 * beta)
            cls.family = 3;
        else
            throw ClassifyError("classify_enumerator(): length 82 counts fit no family");
        break;
    }
    case 94: {
        if (w.cutoff < 16)
            throw ClassifyError("classify_enumerator(): length 94 needs a census to weight 16");
        long long alpha = exact_div(aw(w, 16), 2, "alpha at length 94");
        cls.alpha = alpha;
        if (w.cutoff >= 18)
            cls.beta = exact_div(aw(w, 18) - 134044 + 2 * alpha, 128, "beta at length 94");
        if (w.cutoff >= 20) {
            long long t = aw(w, 20) + 30 * alpha + 896 * *cls.beta;
            if (t == 2010660)
                cls.family = 1;
            else if (t == 2018852)
                cls.family = 2;
            else if (t == 2190884)
                cls.family = 3;
            else
                throw ClassifyError("classify_enumerator(): length 94 counts fit no family");
        }
        break;
    }
    default:
        throw ClassifyError("classify_enumerator(): length " + std::to_string(w.length) +
                            " has no tabulated families");
    }
    return cls;
}

std::map<uint32_t, long long> predicted_counts(size_t length, const EnumeratorClass& cls)
{
    if (!cls.family)
        throw std::invalid_argument("predicted_counts(): family not resolved");
    int j = *cls.family;
    auto need_alpha = [&]() -> long long {
        if (!cls.alpha)
            throw std::invalid_argument("predicted_counts(): alpha not resolved");
        return *cls.alpha;
    };
    auto need_beta = [&]() -> long long {
        if (!cls.beta)
            throw std::invalid_argument("predicted_counts(): beta not resolved");
        return *cls.beta;
    };
    switch (length) {
    case 54: {
        long long a = need_alpha();
        return {{10, 351 - 8 * a}, {12, (j == 1 ? 5031 : 5543) + 24 * a}};
    }
    case 68: {
        long long a = need_alpha();
        long long a14 = j == 1 ? 10864 - 8 * a : 14960 - 8 * a - 256 * need_beta();
        return {{12, 442 + 4 * a}, {14, a14}};
    }
    case 82: {
        if (j == 1)
            return {{14, 560}, {16, 60724}, {18, 233545}};
        long long a = need_alpha(), b = need_beta();
        long long a18 = (j == 2 ? 506153 : 514345) - 26 * a - 896 * b;
        return {{14, 3280 + 2 * a}, {16, 36244 - 2 * a + 128 * b}, {18, a18}};
    }
    case 94: {
        long long a = need_alpha(), b = need_beta();
        long long base = j == 1 ? 2010660 : j == 2 ? 2018852 : 2190884;
        return {{16, 2 * a}, {18, 134044 - 2 * a + 128 * b}, {20, base - 30 * a - 896 * b}};
    }
    default:
        throw std::invalid_argument("predicted_counts(): length has no tabulated families");
    }
}

} // namespace sdc
