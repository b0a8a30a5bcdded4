#pragma once

// Minimum distance and low-weight census engines, plus the weight-enumerator
// bookkeeping for self-dual codes of lengths 54, 68, 82 and 94.
//
// Two engine families are provided.  The exhaustive engine walks every
// nonzero codeword once (message space in Gray-code order, one row xor per
// step) and is the ground truth for codes of dimension up to 34.  The
// enumeration engine works on two systematic generators with disjoint
// information sets: all messages of weight up to p touch every codeword of
// weight below the pair lower bound, which yields both the classical
// minimum-distance procedure and an exact census of all weights <= wmax once
// the bound clears wmax.  Counts are exact, never sampled, and independent
// of the thread count: per-thread partials are merged by addition and min.
//
// The serial namespace repeats the engines without any threading; it is the
// reference the parallel kernels are tested and benchmarked against.

#include "sdc/code.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sdc {

struct WeightProfile {
    size_t length = 0;
    size_t k = 0;
    uint32_t cutoff = 0;                    // counts are complete for all w <= cutoff
    std::optional<uint32_t> min_distance;   // least positive weight, when it is <= cutoff
    std::map<uint32_t, uint64_t> census;    // weight -> exact count; zero counts omitted
};

// Upper bound on the minimum distance of a self-dual code of the given
// length: 4*floor(len/24) + 4 for Type II, and for Type I the same with the
// additive term replaced by 2 when len = 0 (mod 24) and 6 when len = 22.
uint32_t extremal_bound(size_t length, CodeType type);

struct BzTrace {
    struct Level {
        uint32_t p;
        uint32_t lower;
        uint32_t upper;
    };
    std::vector<Level> levels;
    uint32_t deficit = 0; // overlap of the second information set with the first
};

// threads <= 0 selects the OpenMP default.
uint32_t min_distance_exhaustive(const BinaryCode& c, int threads = 0);
WeightProfile weight_distribution_exhaustive(const BinaryCode& c, int threads = 0);
uint32_t min_distance_bz(const BinaryCode& c, int threads = 0, BzTrace* trace = nullptr);

// Early-exit screen: exact distance when it is >= dmin, nullopt as soon as a
// lighter codeword rules the code out.
std::optional<uint32_t> distance_at_least(const BinaryCode& c, uint32_t dmin, int threads = 0);

WeightProfile low_weight_census(const BinaryCode& c, uint32_t wmax, int threads = 0);

namespace serial {
uint32_t min_distance_exhaustive(const BinaryCode& c);
WeightProfile weight_distribution_exhaustive(const BinaryCode& c);
uint32_t min_distance_bz(const BinaryCode& c, BzTrace* trace = nullptr);
WeightProfile low_weight_census(const BinaryCode& c, uint32_t wmax);
} // namespace serial

class ClassifyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Family membership and parameters recovered from a census.  Fields stay
// unset when the census is too shallow to pin them down; alpha (and beta
// where the family has one) need the first two or three coefficients,
// family resolution needs the deepest listed coefficient.
struct EnumeratorClass {
    std::optional<int> family;
    std::optional<long long> alpha;
    std::optional<long long> beta;
};

// Lengths 54, 68, 82, 94 only.  Throws ClassifyError when the counts fit no
// family or a parameter inversion is non-integral.
EnumeratorClass classify_enumerator(const WeightProfile& w);

// The pinned coefficients implied by a fully resolved class, keyed by weight.
std::map<uint32_t, long long> predicted_counts(size_t length, const EnumeratorClass& cls);

} // namespace sdc
