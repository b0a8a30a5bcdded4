#pragma once

// Randomised parameter search and neighbour sweeps.  A search draws
// parameters, rejects cheaply on the construction conditions, screens the
// survivors with the early-exit distance bound, and only then pays for a
// census; discoveries are deduplicated by their distance/census fingerprint.
//
// Reproducibility contract: one worker replays identically for a fixed seed;
// several workers draw from per-worker streams derived from (seed, index),
// so the discovered set depends only on the seed and the worker count, never
// on scheduling.  The trial counter always satisfies
//   trials = condition rejects + distance rejects + duplicates + discoveries
// (+ skipped x inside the code, for sweeps).

#include "sdc/bordered.hpp"
#include "sdc/weights.hpp"

#include <array>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace sdc {

struct SearchConfig {
    RingId ring = RingId::F2;
    uint32_t n = 2;
    uint32_t min_d = 2;
    uint32_t census_cutoff = 0; // floor; survivors are counted at least to their distance
    uint64_t max_trials = 1000;
    uint64_t seed = 0;
    uint32_t workers = 1;
    int threads = 0;
    std::vector<std::pair<Elem, Elem>> lambda_mu; // empty selects every involutory unit pair
    std::vector<ConstructionParams> replay;       // evaluated by worker 0 before random trials
};

struct Discovery {
    std::optional<ConstructionParams> params; // parameter searches
    std::string x0;                           // neighbour sweeps
    WeightProfile profile;
    std::optional<EnumeratorClass> cls;
    std::string fingerprint;
};

struct SearchStats {
    uint64_t trials = 0;
    std::array<uint64_t, 5> condition_rejects{}; // indexed by first failed condition,
                                                 // in ConditionReport field order
    uint64_t distance_rejects = 0;
    uint64_t duplicates = 0;
    uint64_t discoveries = 0;
    uint64_t skipped_in_code = 0; // neighbour sweeps only
};

struct SearchResult {
    std::vector<Discovery> found;
    SearchStats stats;
};

std::mt19937_64 rng_for_worker(uint64_t seed, uint32_t worker);

ConstructionParams sample_params(std::mt19937_64& rng, const SearchConfig& cfg);

std::string census_fingerprint(const WeightProfile& p);

SearchResult run_search(const SearchConfig& cfg);

struct SweepConfig {
    uint32_t min_d = 2;
    uint32_t census_cutoff = 0;
    uint64_t trials = 1000;
    uint64_t seed = 0;
    uint32_t workers = 1;
    int threads = 0;
};

// Random even-weight vectors of the form (0 ... 0 | x0) applied as
// neighbours of a fixed self-dual starting code.
SearchResult neighbour_sweep(const BinaryCode& start, const SweepConfig& cfg);

} // namespace sdc
