#pragma once

// Embedded catalog of recorded codes: construction parameters for lengths
// 54, 68, 82 and 94, plus the neighbour chains seeded by them.  Each entry
// carries the properties recorded for it (minimum distance, enumerator
// family and parameters, automorphism group order) so that the library can
// rebuild the codes and verify the records against its own engines.
//
// The catalog text is compiled in as one record per line and protected by a
// 64-bit FNV-1a checksum; an edit to the data without a matching checksum
// update fails loudly at load time.

#include "sdc/bordered.hpp"
#include "sdc/code.hpp"
#include "sdc/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sdc {

enum class EntryKind { Construction, Neighbour };

struct CatalogEntry {
    std::string id;
    EntryKind kind = EntryKind::Construction;

    // Construction entries carry the full parameter set.
    std::optional<ConstructionParams> params;

    // Neighbour entries name a parent entry and the appended word: the code
    // is the neighbour of the parent's binary code along x = (0 | x0).
    std::string parent;
    std::string x0;

    // Recorded properties; a '-' in the catalog text leaves a field unset.
    // aut is carried as metadata only and is never recomputed.
    std::optional<uint32_t> d;
    std::optional<int> family;
    std::optional<long long> alpha;
    std::optional<long long> beta;
    std::optional<long long> aut;
};

// Fast rebuilds the code, checks self-duality and the recorded minimum
// distance.  Full additionally runs a census deep enough to classify the
// weight enumerator and compares family, alpha and beta with the record.
enum class VerifyDepth { Fast, Full };

struct VerifyResult {
    std::string id;
    bool ok = true;
    std::vector<std::string> failures;       // one message per failed check
    std::optional<WeightProfile> profile;    // census from Full verification
};

class Catalog {
public:
    // Parses catalog text, one record per line; '#' starts a comment.
    // Throws std::runtime_error on malformed lines or duplicate ids.
    static Catalog parse(const std::string& text);

    // The compiled-in catalog, checksum-verified on first use.
    static const Catalog& embedded();

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    bool has(const std::string& id) const;
    const CatalogEntry& at(const std::string& id) const;

    // Rebuilds the binary code behind an entry, resolving neighbour parents
    // recursively.  Propagates BuildError / std::invalid_argument from the
    // construction and neighbour steps.
    BinaryCode build(const std::string& id) const;

    // Arithmetic consistency of the recorded data, with no code rebuilt:
    // recorded enumerator parameters must give nonnegative leading counts,
    // zero below the recorded distance and positive at it, and neighbour
    // parents must exist with a matching x0 length.  Returns one message
    // per inconsistency.
    std::vector<std::string> lint() const;

    VerifyResult verify_entry(const std::string& id, VerifyDepth depth,
                              int threads = 0) const;
    std::vector<VerifyResult> verify_all(VerifyDepth depth, int threads = 0) const;

private:
    std::vector<CatalogEntry> entries_;
};

// Raw embedded text and its expected checksum.
extern const char* const kCatalogText;
extern const uint64_t kCatalogChecksum;

uint64_t fnv1a64(std::string_view text);

} // namespace sdc
