#include "sdc/io.hpp"

#include "sdc/bordered.hpp"
#include "sdc/gray.hpp"

#include <fstream>
#include <sstream>

namespace sdc {

namespace {

std::string trim(const std::string& s)
{
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

MatrixFile read_matrix(std::istream& in)
{
    MatrixFile mf;
    std::string line;
    bool have_header = false;
    size_t rows = 0, cols = 0, next_row = 0;
    RingId ring = RingId::F2;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty())
            continue;
        if (t[0] == '#') {
            size_t b = t.find_first_not_of(" \t", 1);
            mf.comments.push_back(b == std::string::npos ? "" : t.substr(b));
            continue;
        }
        if (!have_header) {
            std::istringstream hs(t);
            std::string ring_tok;
            if (!(hs >> cols >> rows >> ring_tok))
                throw std::runtime_error("read_matrix(): bad header '" + t + "'");
            std::string extra;
            if (hs >> extra)
                throw std::runtime_error("read_matrix(): trailing header field '" + extra + "'");
            ring = parse_ring(ring_tok);
            mf.mat = RingMatrix(ring, rows, cols);
            have_header = true;
            continue;
        }
        if (next_row >= rows)
            throw std::runtime_error("read_matrix(): more than " + std::to_string(rows) + " rows");
        if (t.size() != cols)
            throw std::runtime_error("read_matrix(): row " + std::to_string(next_row) + " has " +
                                     std::to_string(t.size()) + " symbols, header says " +
                                     std::to_string(cols));
        for (size_t c = 0; c < cols; ++c)
            mf.mat.set(next_row, c, from_symbol(t[c], ring));
        ++next_row;
    }
    if (!have_header)
        throw std::runtime_error("read_matrix(): missing header");
    if (next_row != rows)
        throw std::runtime_error("read_matrix(): got " + std::to_string(next_row) +
                                 " rows, header says " + std::to_string(rows));
    return mf;
}

MatrixFile read_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("read_matrix_file(): cannot open " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const RingMatrix& m,
                  const std::vector<std::string>& comments)
{
    for (const auto& c : comments)
        out << "# " << c << "\n";
    out << m.cols() << " " << m.rows() << " " << ring_name(m.ring()) << "\n";
    for (size_t r = 0; r < m.rows(); ++r) {
        std::string row(m.cols(), '0');
        for (size_t c = 0; c < m.cols(); ++c)
            row[c] = to_symbol(m.get(r, c));
        out << row << "\n";
    }
}

void write_matrix_file(const std::string& path, const RingMatrix& m,
                       const std::vector<std::string>& comments)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_matrix_file(): cannot open " + path);
    write_matrix(out, m, comments);
    if (!out)
        throw std::runtime_error("write_matrix_file(): write to " + path + " failed");
}

BinaryCode code_from_matrix(const MatrixFile& mf)
{
    if (mf.mat.ring() == RingId::F2)
        return BinaryCode::from_generator(mf.mat.a_plane());
    return BinaryCode::from_generator(gray_generator(mf.mat));
}

void Report::set(const std::string& key, const std::string& value)
{
    for (auto& [k, v] : items_)
        if (k == key) {
            v = value;
            return;
        }
    items_.emplace_back(key, value);
}

void Report::set(const std::string& key, long long value)
{
    set(key, std::to_string(value));
}

std::optional<std::string> Report::get(const std::string& key) const
{
    for (const auto& [k, v] : items_)
        if (k == key)
            return v;
    return std::nullopt;
}

std::string Report::to_string() const
{
    std::string out;
    for (const auto& [k, v] : items_) {
        out += k;
        out += " = ";
        out += v;
        out += "\n";
    }
    return out;
}

Report Report::parse(const std::string& text)
{
    Report r;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("Report::parse(): line " + std::to_string(lineno) +
                                     " has no '='");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("Report::parse(): line " + std::to_string(lineno) +
                                     " has an empty key");
        r.set(key, val);
    }
    return r;
}

std::string census_to_string(const WeightProfile& p)
{
    std::string out;
    for (const auto& [w, count] : p.census) {
        if (!out.empty())
            out += " ";
        out += std::to_string(w) + ":" + std::to_string(count);
    }
    return out;
}

namespace {

uint64_t parse_u64(const std::string& v, const std::string& key)
{
    size_t used = 0;
    unsigned long long x = std::stoull(v, &used);
    if (used != v.size())
        throw std::runtime_error("parse_search_config(): bad value '" + v + "' for " + key);
    return x;
}

long long parse_i64(const std::string& v, const std::string& key)
{
    size_t used = 0;
    long long x = std::stoll(v, &used);
    if (used != v.size())
        throw std::runtime_error("parse_search_config(): bad value '" + v + "' for " + key);
    return x;
}

std::vector<std::pair<Elem, Elem>> parse_lambda_mu(const std::string& v, RingId ring)
{
    std::vector<std::pair<Elem, Elem>> out;
    std::istringstream in(v);
    std::string pair;
    while (in >> pair) {
        auto comma = pair.find(',');
        if (comma == std::string::npos || comma + 2 != pair.size() || comma != 1)
            throw std::runtime_error("parse_search_config(): lambda_mu pair '" + pair +
                                     "' is not of the form s,s");
        out.emplace_back(from_symbol(pair[0], ring), from_symbol(pair[2], ring));
    }
    return out;
}

std::vector<ConstructionParams> read_replay(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("parse_search_config(): cannot open replay file " + path);
    std::vector<ConstructionParams> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        out.push_back(parse_record(t));
    }
    return out;
}

} // namespace

SearchConfig parse_search_config(const std::string& text)
{
    SearchConfig cfg;
    // lambda_mu parsing needs the ring, so collect first and decode after.
    std::vector<std::pair<std::string, std::string>> kvs;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("parse_search_config(): line " + std::to_string(lineno) +
                                     " has no '='");
        kvs.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    for (const auto& [key, val] : kvs)
        if (key == "ring")
            cfg.ring = parse_ring(val);
    for (const auto& [key, val] : kvs) {
        if (key == "ring")
            continue;
        else if (key == "n")
            cfg.n = static_cast<uint32_t>(parse_u64(val, key));
        else if (key == "min_d")
            cfg.min_d = static_cast<uint32_t>(parse_u64(val, key));
        else if (key == "census_cutoff")
            cfg.census_cutoff = static_cast<uint32_t>(parse_u64(val, key));
        else if (key == "max_trials")
            cfg.max_trials = parse_u64(val, key);
        else if (key == "seed")
            cfg.seed = parse_u64(val, key);
        else if (key == "workers")
            cfg.workers = static_cast<uint32_t>(parse_u64(val, key));
        else if (key == "threads")
            cfg.threads = static_cast<int>(parse_i64(val, key));
        else if (key == "lambda_mu")
            cfg.lambda_mu = parse_lambda_mu(val, cfg.ring);
        else if (key == "replay")
            cfg.replay = read_replay(val);
        else
            throw std::runtime_error("parse_search_config(): unknown key '" + key + "'");
    }
    return cfg;
}

SearchConfig read_search_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("read_search_config_file(): cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_search_config(buf.str());
}

} // namespace sdc
