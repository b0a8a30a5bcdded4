#pragma once

// Text formats shared by the command-line tools and tests.
//
// Matrix files carry one generator per file: any number of '#' comment
// lines, a header line "cols rows ring", then one line of symbol digits per
// row ({0,1} for F2, {0,1,2,3} for F2+uF2).  Reports are "key = value"
// lines whose order is fixed by the writer.

#include "sdc/code.hpp"
#include "sdc/ring_matrix.hpp"
#include "sdc/search.hpp"
#include "sdc/weights.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sdc {

struct MatrixFile {
    RingMatrix mat;
    std::vector<std::string> comments; // without the leading '#'
};

MatrixFile read_matrix(std::istream& in);
MatrixFile read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const RingMatrix& m,
                  const std::vector<std::string>& comments = {});
void write_matrix_file(const std::string& path, const RingMatrix& m,
                       const std::vector<std::string>& comments = {});

// The binary code a matrix file denotes: F2 rows span it directly, F2+uF2
// rows through the Gray map.
BinaryCode code_from_matrix(const MatrixFile& mf);

// Ordered key-value report.  set() keeps first-insertion order, so a writer
// fixes the key order simply by the sequence of its set() calls.
class Report {
public:
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, long long value);
    std::optional<std::string> get(const std::string& key) const;

    const std::vector<std::pair<std::string, std::string>>& items() const { return items_; }

    std::string to_string() const;
    static Report parse(const std::string& text);

private:
    std::vector<std::pair<std::string, std::string>> items_;
};

// "w:count" pairs in increasing weight, space separated.
std::string census_to_string(const WeightProfile& p);

// Search configuration as "key = value" lines.  Keys: ring, n, min_d,
// census_cutoff, max_trials, seed, workers, threads, lambda_mu (pairs like
// "1,1 1,3"), replay (path to a file of construction records).
SearchConfig parse_search_config(const std::string& text);
SearchConfig read_search_config_file(const std::string& path);

} // namespace sdc
