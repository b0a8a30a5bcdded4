#include "sdc/search.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sdc {

namespace {

std::vector<std::pair<Elem, Elem>> default_pairs(RingId ring)
{
    std::vector<Elem> units;
    if (ring == RingId::F2) {
        units = {one(ring)};
    } else {
        units = {make_elem(ring, 1, 0), make_elem(ring, 1, 1)}; // 1 and 1+u
    }
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem l : units)
        for (Elem m : units)
            pairs.emplace_back(l, m);
    return pairs;
}

Elem sample_elem(std::mt19937_64& rng, RingId ring)
{
    if (ring == RingId::F2)
        return make_elem(ring, rng() & 1);
    uint64_t r = rng();
    return make_elem(ring, r & 1, (r >> 1) & 1);
}

RingVector sample_vector(std::mt19937_64& rng, RingId ring, uint32_t n)
{
    RingVector v(ring, n);
    for (uint32_t i = 0; i < n; ++i)
        v[i] = sample_elem(rng, ring);
    return v;
}

int first_failed_condition(const ConditionReport& rep)
{
    if (!rep.orth_ab)
        return 0;
    if (!rep.orth_c)
        return 1;
    if (!rep.xi_squares)
        return 2;
    if (!rep.xi_annihilate)
        return 3;
    if (!rep.border_rank)
        return 4;
    return -1;
}

// Census, classification attempt and fingerprint for a screened survivor.
Discovery finish_survivor(const BinaryCode& code, uint32_t d, uint32_t cutoff_floor, int threads)
{
    Discovery disc;
    uint32_t cutoff = std::max(cutoff_floor, d);
    disc.profile = low_weight_census(code, cutoff, threads);
    switch (code.length()) {
    case 54:
    case 68:
    case 82:
    case 94:
        try {
            disc.cls = classify_enumerator(disc.profile);
        } catch (const ClassifyError&) {
            // Counts outside every tabulated family are still a discovery.
        }
        break;
    default:
        break;
    }
    disc.fingerprint = census_fingerprint(disc.profile);
    return disc;
}

// Deterministic merge: workers in index order, their survivors in trial
// order, duplicates counted against the merged set.
void merge_survivors(std::vector<std::vector<Discovery>>& per_worker, SearchResult& out)
{
    std::set<std::string> seen;
    for (auto& bucket : per_worker)
        for (auto& disc : bucket) {
            if (seen.insert(disc.fingerprint).second) {
                out.found.push_back(std::move(disc));
                ++out.stats.discoveries;
            } else {
                ++out.stats.duplicates;
            }
        }
}

} // namespace

std::mt19937_64 rng_for_worker(uint64_t seed, uint32_t worker)
{
    std::seed_seq seq{uint32_t(seed), uint32_t(seed >> 32), worker, uint32_t(0x9e3779b9)};
    return std::mt19937_64(seq);
}

ConstructionParams sample_params(std::mt19937_64& rng, const SearchConfig& cfg)
{
    auto pairs = cfg.lambda_mu.empty() ? default_pairs(cfg.ring) : cfg.lambda_mu;
    ConstructionParams p;
    p.ring = cfg.ring;
    p.n = cfg.n;
    auto [lam, mu] = pairs[rng() % pairs.size()];
    p.lambda = lam;
    p.mu = mu;
    p.a = sample_vector(rng, cfg.ring, cfg.n);
    p.b = sample_vector(rng, cfg.ring, cfg.n);
    p.c = sample_vector(rng, cfg.ring, cfg.n);
    for (auto& x : p.xi)
        x = sample_elem(rng, cfg.ring);
    return p;
}

std::string census_fingerprint(const WeightProfile& p)
{
    std::ostringstream os;
    os << "c" << p.cutoff << ";d";
    if (p.min_distance)
        os << *p.min_distance;
    else
        os << "?";
    for (const auto& [w, n] : p.census)
        os << ";" << w << ":" << n;
    return os.str();
}

SearchResult run_search(const SearchConfig& cfg)
{
    if (cfg.workers == 0)
        throw std::invalid_argument("run_search(): need at least one worker");

    SearchResult out;
    std::vector<std::vector<Discovery>> survivors(cfg.workers);

    for (uint32_t w = 0; w < cfg.workers; ++w) {
        std::mt19937_64 rng = rng_for_worker(cfg.seed, w);
        uint64_t quota = cfg.max_trials / cfg.workers + (w < cfg.max_trials % cfg.workers ? 1 : 0);

        uint64_t done = 0;
        auto one_trial = [&](const ConstructionParams& p) {
            ++out.stats.trials;
            ++done;
            ConditionReport rep = check_conditions(p);
            if (!rep.all()) {
                ++out.stats.condition_rejects[size_t(first_failed_condition(rep))];
                return;
            }
            BinaryCode code = build_selfdual(p);
            std::optional<uint32_t> d = distance_at_least(code, cfg.min_d, cfg.threads);
            if (!d) {
                ++out.stats.distance_rejects;
                return;
            }
            Discovery disc = finish_survivor(code, *d, cfg.census_cutoff, cfg.threads);
            disc.params = p;
            survivors[w].push_back(std::move(disc));
        };

        if (w == 0)
            for (const ConstructionParams& p : cfg.replay)
                one_trial(p);
        while (done < quota)
            one_trial(sample_params(rng, cfg));
    }

    merge_survivors(survivors, out);
    return out;
}

SearchResult neighbour_sweep(const BinaryCode& start, const SweepConfig& cfg)
{
    if (cfg.workers == 0)
        throw std::invalid_argument("neighbour_sweep(): need at least one worker");
    if (!is_self_dual(start))
        throw std::invalid_argument("neighbour_sweep(): starting code must be self-dual");

    size_t half = start.length() / 2;
    SearchResult out;
    std::vector<std::vector<Discovery>> survivors(cfg.workers);

    for (uint32_t w = 0; w < cfg.workers; ++w) {
        std::mt19937_64 rng = rng_for_worker(cfg.seed, w);
        uint64_t quota = cfg.trials / cfg.workers + (w < cfg.trials % cfg.workers ? 1 : 0);

        for (uint64_t t = 0; t < quota; ++t) {
            ++out.stats.trials;
            // Draw x = (0...0 | x0) and redraw until the total weight is even.
            BinaryMatrix x(1, start.length());
            while (true) {
                for (size_t i = 0; i < half; ++i)
                    x.set(0, half + i, rng() & 1);
                if (x.row_weight(0) % 2 == 0)
                    break;
            }
            if (start.contains(x.row(0))) {
                ++out.stats.skipped_in_code;
                continue;
            }
            BinaryCode cand = neighbour(start, x);
            std::optional<uint32_t> d = distance_at_least(cand, cfg.min_d, cfg.threads);
            if (!d) {
                ++out.stats.distance_rejects;
                continue;
            }
            Discovery disc = finish_survivor(cand, *d, cfg.census_cutoff, cfg.threads);
            std::string x0(half, '0');
            for (size_t i = 0; i < half; ++i)
                if (x.get(0, half + i))
                    x0[i] = '1';
            disc.x0 = std::move(x0);
            survivors[w].push_back(std::move(disc));
        }
    }

    merge_survivors(survivors, out);
    return out;
}

} // namespace sdc
