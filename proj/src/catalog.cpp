#include "sdc/catalog.hpp"

#include <map>
#include <set>
#include <sstream>

namespace sdc {

uint64_t fnv1a64(std::string_view text)
{
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::vector<std::string> tokenize(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t)
        toks.push_back(t);
    return toks;
}

// key=value token; '-' leaves the value unset.
std::pair<std::string, std::optional<long long>> parse_kv(const std::string& tok)
{
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::runtime_error("expected key=value, got '" + tok + "'");
    std::string key = tok.substr(0, eq);
    std::string val = tok.substr(eq + 1);
    if (val == "-")
        return {key, std::nullopt};
    size_t used = 0;
    long long parsed = std::stoll(val, &used);
    if (used != val.size())
        throw std::runtime_error("bad integer '" + val + "' for key " + key);
    return {key, parsed};
}

std::map<std::string, std::optional<long long>>
parse_kv_tail(const std::vector<std::string>& toks, size_t from)
{
    static const std::set<std::string> known = {"d", "j", "alpha", "beta", "aut"};
    std::map<std::string, std::optional<long long>> kv;
    for (size_t i = from; i < toks.size(); ++i) {
        auto [key, val] = parse_kv(toks[i]);
        if (!known.count(key))
            throw std::runtime_error("unknown key '" + key + "'");
        if (!kv.emplace(key, val).second)
            throw std::runtime_error("duplicate key '" + key + "'");
    }
    if (kv.size() != known.size())
        throw std::runtime_error("record needs all of d, j, alpha, beta, aut");
    return kv;
}

CatalogEntry entry_from_tokens(const std::vector<std::string>& toks)
{
    CatalogEntry e;
    e.id = toks[0];
    const std::string& kind = toks[1];
    size_t tail;
    if (kind == "construction") {
        if (toks.size() != 15)
            throw std::runtime_error("construction record needs 15 fields");
        e.kind = EntryKind::Construction;
        std::string rec;
        for (size_t i = 2; i < 10; ++i)
            rec += (i > 2 ? " " : "") + toks[i];
        e.params = parse_record(rec);
        tail = 10;
    } else if (kind == "neighbour") {
        if (toks.size() != 9)
            throw std::runtime_error("neighbour record needs 9 fields");
        e.kind = EntryKind::Neighbour;
        e.parent = toks[2];
        e.x0 = toks[3];
        for (char c : e.x0)
            if (c != '0' && c != '1')
                throw std::runtime_error("x0 must be a bit string");
        tail = 4;
    } else {
        throw std::runtime_error("unknown record kind '" + kind + "'");
    }
    auto kv = parse_kv_tail(toks, tail);
    if (kv["d"]) {
        if (*kv["d"] < 0)
            throw std::runtime_error("d must be nonnegative");
        e.d = static_cast<uint32_t>(*kv["d"]);
    }
    if (kv["j"])
        e.family = static_cast<int>(*kv["j"]);
    e.alpha = kv["alpha"];
    e.beta = kv["beta"];
    e.aut = kv["aut"];
    return e;
}

// Census depth at which classify_enumerator can resolve the family.
uint32_t classify_cutoff(size_t length)
{
    switch (length) {
    case 54: return 12;
    case 68: return 14;
    case 82: return 18;
    case 94: return 20;
    default: return 0;
    }
}

int family_count(size_t length)
{
    return (length == 54 || length == 68) ? 2 : 3;
}

bool family_uses_beta(size_t length, int family)
{
    switch (length) {
    case 54: return false;
    case 68: return family == 2;
    case 82: return family >= 2;
    case 94: return true;
    default: return false;
    }
}

} // namespace

Catalog Catalog::parse(const std::string& text)
{
    Catalog cat;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto toks = tokenize(line);
        if (toks.empty())
            continue;
        try {
            if (toks.size() < 2)
                throw std::runtime_error("truncated record");
            CatalogEntry e = entry_from_tokens(toks);
            if (!seen.insert(e.id).second)
                throw std::runtime_error("duplicate id '" + e.id + "'");
            cat.entries_.push_back(std::move(e));
        } catch (const std::exception& ex) {
            throw std::runtime_error("Catalog::parse(): line " + std::to_string(lineno) +
                                     ": " + ex.what());
        }
    }
    return cat;
}

const Catalog& Catalog::embedded()
{
    static const Catalog cat = [] {
        if (fnv1a64(kCatalogText) != kCatalogChecksum)
            throw std::runtime_error("Catalog::embedded(): catalog text fails its checksum");
        return parse(kCatalogText);
    }();
    return cat;
}

bool Catalog::has(const std::string& id) const
{
    for (const auto& e : entries_)
        if (e.id == id)
            return true;
    return false;
}

const CatalogEntry& Catalog::at(const std::string& id) const
{
    for (const auto& e : entries_)
        if (e.id == id)
            return e;
    throw std::out_of_range("Catalog::at(): no entry '" + id + "'");
}

namespace {

size_t chain_length(const Catalog& cat, const CatalogEntry& e, std::set<std::string>& visiting)
{
    if (!visiting.insert(e.id).second)
        throw std::runtime_error("Catalog: parent cycle through '" + e.id + "'");
    if (e.kind == EntryKind::Construction)
        return binary_length(*e.params);
    return chain_length(cat, cat.at(e.parent), visiting);
}

BinaryCode build_chain(const Catalog& cat, const CatalogEntry& e, std::set<std::string>& visiting)
{
    if (!visiting.insert(e.id).second)
        throw std::runtime_error("Catalog::build(): parent cycle through '" + e.id + "'");
    if (e.kind == EntryKind::Construction)
        return build_selfdual(*e.params);
    BinaryCode parent = build_chain(cat, cat.at(e.parent), visiting);
    size_t len = parent.length();
    if (e.x0.size() * 2 != len)
        throw std::runtime_error("Catalog::build(): x0 of '" + e.id + "' has " +
                                 std::to_string(e.x0.size()) + " bits, parent length is " +
                                 std::to_string(len));
    BinaryMatrix x(1, len);
    for (size_t i = 0; i < e.x0.size(); ++i)
        if (e.x0[i] == '1')
            x.set(0, len / 2 + i, 1);
    return neighbour(parent, x);
}

} // namespace

BinaryCode Catalog::build(const std::string& id) const
{
    std::set<std::string> visiting;
    return build_chain(*this, at(id), visiting);
}

std::vector<std::string> Catalog::lint() const
{
    std::vector<std::string> msgs;
    auto flag = [&](const CatalogEntry& e, const std::string& m) {
        msgs.push_back(e.id + ": " + m);
    };
    for (const auto& e : entries_) {
        size_t len = 0;
        try {
            std::set<std::string> visiting;
            len = chain_length(*this, e, visiting);
        } catch (const std::exception& ex) {
            flag(e, ex.what());
            continue;
        }
        if (e.kind == EntryKind::Neighbour) {
            if (e.x0.size() * 2 != len)
                flag(e, "x0 length does not match the parent code");
            size_t ones = 0;
            for (char c : e.x0)
                ones += c == '1';
            if (ones % 2 != 0)
                flag(e, "x0 has odd weight");
        }
        if (!e.family) {
            if (e.alpha || e.beta)
                flag(e, "alpha/beta recorded without a family");
            continue;
        }
        int j = *e.family;
        if (classify_cutoff(len) == 0) {
            flag(e, "family recorded at a length with no tabulated families");
            continue;
        }
        if (j < 1 || j > family_count(len)) {
            flag(e, "family index out of range");
            continue;
        }
        bool wants_beta = family_uses_beta(len, j);
        if (wants_beta != e.beta.has_value()) {
            flag(e, wants_beta ? "family needs beta" : "family has no beta");
            continue;
        }
        EnumeratorClass cls{j, e.alpha, e.beta};
        std::map<uint32_t, long long> counts;
        try {
            counts = predicted_counts(len, cls);
        } catch (const std::exception& ex) {
            flag(e, ex.what());
            continue;
        }
        for (const auto& [w, c] : counts) {
            if (c < 0)
                flag(e, "predicted count at weight " + std::to_string(w) + " is negative");
            else if (e.d && w < *e.d && c != 0)
                flag(e, "predicted count below the recorded distance is nonzero");
            else if (e.d && w == *e.d && c == 0)
                flag(e, "predicted count at the recorded distance is zero");
        }
    }
    return msgs;
}

VerifyResult Catalog::verify_entry(const std::string& id, VerifyDepth depth, int threads) const
{
    VerifyResult r;
    r.id = id;
    auto fail = [&](const std::string& m) {
        r.ok = false;
        r.failures.push_back(m);
    };

    const CatalogEntry& e = at(id);
    BinaryCode code;
    try {
        code = build(id);
    } catch (const std::exception& ex) {
        fail(std::string("build: ") + ex.what());
        return r;
    }
    if (!is_self_dual(code)) {
        fail("binary image is not self-dual");
        return r;
    }

    if (depth == VerifyDepth::Fast) {
        if (e.d) {
            uint32_t d = min_distance_bz(code, threads);
            if (d != *e.d)
                fail("distance " + std::to_string(d) + " != recorded " + std::to_string(*e.d));
        }
        return r;
    }

    uint32_t target = classify_cutoff(code.length());
    if (e.d && *e.d > target)
        target = *e.d;
    if (target == 0)
        return r;

    WeightProfile prof = low_weight_census(code, target, threads);
    r.profile = prof;
    if (e.d) {
        if (!prof.min_distance)
            fail("no codeword of weight <= " + std::to_string(target) +
                 ", recorded distance is " + std::to_string(*e.d));
        else if (*prof.min_distance != *e.d)
            fail("distance " + std::to_string(*prof.min_distance) + " != recorded " +
                 std::to_string(*e.d));
    }
    if (e.family) {
        try {
            EnumeratorClass cls = classify_enumerator(prof);
            if (cls.family != e.family)
                fail("enumerator family does not match the record");
            if (e.alpha && cls.alpha != e.alpha)
                fail("alpha does not match the record");
            if (e.beta && cls.beta != e.beta)
                fail("beta does not match the record");
        } catch (const ClassifyError& ex) {
            fail(std::string("classify: ") + ex.what());
        }
    }
    return r;
}

std::vector<VerifyResult> Catalog::verify_all(VerifyDepth depth, int threads) const
{
    std::vector<VerifyResult> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_)
        out.push_back(verify_entry(e.id, depth, threads));
    return out;
}

} // namespace sdc
