// Command-line front end: construction, checking, distance, census,
// neighbours, parameter search and catalog verification.
//
// Exit codes: 0 success, 1 verification mismatch (failed construction
// conditions or catalog verification), 2 input error.

#include "sdc/bordered.hpp"
#include "sdc/catalog.hpp"
#include "sdc/io.hpp"
#include "sdc/search.hpp"
#include "sdc/weights.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace sdc;

class Timer {
public:
    long long ms() const
    {
        auto dt = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw std::runtime_error("cannot open output file " + out_path);
    out << text;
    if (!out)
        throw std::runtime_error("write to " + out_path + " failed");
}

// Flag wins over the SDC_THREADS environment variable; 0 means the OpenMP
// default.
int resolve_threads(const CLI::Option* opt, int flag_value)
{
    if (opt != nullptr && opt->count() > 0)
        return flag_value;
    if (const char* env = std::getenv("SDC_THREADS")) {
        try {
            size_t used = 0;
            int v = std::stoi(env, &used);
            if (used != std::string(env).size())
                throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw std::runtime_error("SDC_THREADS is set but is not an integer");
        }
    }
    return 0;
}

// x0 given either as a bit string or as 0x-prefixed hex (big-endian nibbles,
// left-padded with zeros to the target width).
std::vector<bool> parse_x0(const std::string& s, size_t half)
{
    std::vector<bool> bits;
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) {
        for (size_t i = 2; i < s.size(); ++i) {
            char c = s[i];
            int v;
            if (c >= '0' && c <= '9')
                v = c - '0';
            else if (c >= 'a' && c <= 'f')
                v = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                v = c - 'A' + 10;
            else
                throw std::runtime_error("bad hex digit '" + std::string(1, c) + "' in x0");
            for (int b = 3; b >= 0; --b)
                bits.push_back((v >> b) & 1);
        }
        if (bits.size() < half)
            bits.insert(bits.begin(), half - bits.size(), false);
        while (bits.size() > half) {
            if (bits.front())
                throw std::runtime_error("x0 has more than " + std::to_string(half) + " bits");
            bits.erase(bits.begin());
        }
    } else {
        for (char c : s) {
            if (c != '0' && c != '1')
                throw std::runtime_error("x0 must be a bit string or 0x-prefixed hex");
            bits.push_back(c == '1');
        }
        if (bits.size() != half)
            throw std::runtime_error("x0 has " + std::to_string(bits.size()) +
                                     " bits, expected " + std::to_string(half));
    }
    return bits;
}

std::string report_source(const std::string& path)
{
    return path.empty() ? "-" : path;
}

void add_census_keys(Report& rep, const WeightProfile& prof)
{
    rep.set("census", census_to_string(prof));
    if ((prof.length == 54 || prof.length == 68 || prof.length == 82 || prof.length == 94)) {
        try {
            EnumeratorClass cls = classify_enumerator(prof);
            if (cls.family)
                rep.set("family", *cls.family);
            if (cls.alpha)
                rep.set("alpha", *cls.alpha);
            if (cls.beta)
                rep.set("beta", *cls.beta);
        } catch (const ClassifyError&) {
            // census too shallow or counts off-family; omit the keys
        }
    }
}

struct BuildOpts {
    std::string params_file;
    std::string ring = "F2";
    uint32_t n = 0;
    std::string lambda = "1", mu = "1";
    std::string a, b, c, xi;
    std::string out;
};

ConstructionParams params_from_opts(const BuildOpts& o)
{
    if (!o.params_file.empty()) {
        std::ifstream in(o.params_file);
        if (!in)
            throw std::runtime_error("cannot open params file " + o.params_file);
        std::string line;
        while (std::getline(in, line)) {
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#')
                continue;
            return parse_record(line);
        }
        throw std::runtime_error("params file " + o.params_file + " holds no record");
    }
    if (o.n == 0 || o.a.empty() || o.b.empty() || o.c.empty() || o.xi.empty())
        throw std::runtime_error("build needs either --params-file or all of "
                                 "--n, --a, --b, --c, --xi");
    std::string rec = o.ring + " " + std::to_string(o.n) + " " + o.lambda + " " + o.mu +
                      " " + o.a + " " + o.b + " " + o.c + " " + o.xi;
    return parse_record(rec);
}

int cmd_build(const BuildOpts& o)
{
    ConstructionParams p = params_from_opts(o);
    ConditionReport rep = check_conditions(p);
    if (!rep.all()) {
        std::cerr << "construction conditions failed: " << rep.describe() << "\n";
        return 1;
    }
    BinaryCode code = build_selfdual(p);
    RingMatrix m = RingMatrix::from_planes(RingId::F2, code.generator(), BinaryMatrix(code.dim(), code.length()));
    std::ostringstream out;
    write_matrix(out, m, {"params: " + to_record(p)});
    emit(out.str(), o.out);
    return 0;
}

struct FileOpts {
    std::string path;
    std::string out;
    int threads = 0;
    const CLI::Option* threads_opt = nullptr;
};

int cmd_check(const FileOpts& o)
{
    MatrixFile mf = read_matrix_file(o.path);
    Timer t;
    BinaryCode code = code_from_matrix(mf);
    bool sd = is_self_dual(code);
    Report rep;
    rep.set("source", report_source(o.path));
    rep.set("length", static_cast<long long>(code.length()));
    rep.set("k", static_cast<long long>(code.dim()));
    rep.set("self_dual", sd ? "true" : "false");
    if (sd)
        rep.set("type", type_of(code) == CodeType::TypeII ? "II" : "I");
    rep.set("timing_ms", t.ms());
    emit(rep.to_string(), o.out);
    return 0;
}

int cmd_distance(const FileOpts& o, const std::string& engine)
{
    MatrixFile mf = read_matrix_file(o.path);
    BinaryCode code = code_from_matrix(mf);
    int threads = resolve_threads(o.threads_opt, o.threads);
    std::string chosen = engine;
    if (chosen == "auto")
        chosen = code.dim() <= 28 ? "exhaustive" : "bz";
    Timer t;
    uint32_t d = chosen == "exhaustive" ? min_distance_exhaustive(code, threads)
                                        : min_distance_bz(code, threads);
    Report rep;
    rep.set("source", report_source(o.path));
    rep.set("length", static_cast<long long>(code.length()));
    rep.set("k", static_cast<long long>(code.dim()));
    rep.set("self_dual", is_self_dual(code) ? "true" : "false");
    rep.set("engine", chosen);
    rep.set("d", static_cast<long long>(d));
    rep.set("timing_ms", t.ms());
    emit(rep.to_string(), o.out);
    return 0;
}

int cmd_census(const FileOpts& o, uint32_t wmax)
{
    MatrixFile mf = read_matrix_file(o.path);
    BinaryCode code = code_from_matrix(mf);
    int threads = resolve_threads(o.threads_opt, o.threads);
    Timer t;
    WeightProfile prof = low_weight_census(code, wmax, threads);
    Report rep;
    rep.set("source", report_source(o.path));
    rep.set("length", static_cast<long long>(code.length()));
    rep.set("k", static_cast<long long>(code.dim()));
    rep.set("self_dual", is_self_dual(code) ? "true" : "false");
    if (prof.min_distance)
        rep.set("d", static_cast<long long>(*prof.min_distance));
    add_census_keys(rep, prof);
    rep.set("timing_ms", t.ms());
    emit(rep.to_string(), o.out);
    return 0;
}

int cmd_neighbour(const FileOpts& o, const std::string& x0_str)
{
    MatrixFile mf = read_matrix_file(o.path);
    BinaryCode code = code_from_matrix(mf);
    if (!is_self_dual(code))
        throw std::runtime_error("neighbour needs a self-dual input code");
    size_t len = code.length();
    std::vector<bool> bits = parse_x0(x0_str, len / 2);
    BinaryMatrix x(1, len);
    std::string x0_bits(len / 2, '0');
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) {
            x.set(0, len / 2 + i, 1);
            x0_bits[i] = '1';
        }
    BinaryCode nb = neighbour(code, x);
    RingMatrix m = RingMatrix::from_planes(RingId::F2, nb.generator(),
                                           BinaryMatrix(nb.dim(), nb.length()));
    std::ostringstream out;
    write_matrix(out, m, {"neighbour of " + report_source(o.path), "x0: " + x0_bits});
    emit(out.str(), o.out);
    return 0;
}

int cmd_search(const std::string& config_path, const CLI::Option* seed_opt, uint64_t seed,
               const FileOpts& o)
{
    SearchConfig cfg = read_search_config_file(config_path);
    if (seed_opt->count() > 0)
        cfg.seed = seed;
    if (o.threads_opt->count() > 0 || std::getenv("SDC_THREADS"))
        cfg.threads = resolve_threads(o.threads_opt, o.threads);
    Timer t;
    SearchResult res = run_search(cfg);
    std::ostringstream out;
    size_t idx = 0;
    for (const auto& disc : res.found) {
        Report rep;
        rep.set("source", "search[" + std::to_string(idx++) + "]");
        if (disc.params)
            rep.set("params", to_record(*disc.params));
        if (!disc.x0.empty())
            rep.set("x0", disc.x0);
        rep.set("length", static_cast<long long>(disc.profile.length));
        rep.set("k", static_cast<long long>(disc.profile.k));
        if (disc.profile.min_distance)
            rep.set("d", static_cast<long long>(*disc.profile.min_distance));
        rep.set("census", census_to_string(disc.profile));
        if (disc.cls) {
            if (disc.cls->family)
                rep.set("family", *disc.cls->family);
            if (disc.cls->alpha)
                rep.set("alpha", *disc.cls->alpha);
            if (disc.cls->beta)
                rep.set("beta", *disc.cls->beta);
        }
        out << rep.to_string() << "\n";
    }
    Report stats;
    stats.set("source", "search-stats");
    stats.set("trials", static_cast<long long>(res.stats.trials));
    std::string rejects;
    for (size_t i = 0; i < res.stats.condition_rejects.size(); ++i)
        rejects += (i ? " " : "") + std::to_string(res.stats.condition_rejects[i]);
    stats.set("condition_rejects", rejects);
    stats.set("distance_rejects", static_cast<long long>(res.stats.distance_rejects));
    stats.set("duplicates", static_cast<long long>(res.stats.duplicates));
    stats.set("discoveries", static_cast<long long>(res.stats.discoveries));
    stats.set("timing_ms", t.ms());
    out << stats.to_string();
    emit(out.str(), o.out);
    return 0;
}

int cmd_verify_catalog(const std::string& depth, const std::vector<std::string>& ids,
                       const FileOpts& o)
{
    const Catalog& cat = Catalog::embedded();
    int threads = resolve_threads(o.threads_opt, o.threads);
    VerifyDepth vd = depth == "full" ? VerifyDepth::Full : VerifyDepth::Fast;
    std::ostringstream out;
    bool all_ok = true;
    auto lint = cat.lint();
    for (const auto& msg : lint) {
        out << "lint: " << msg << "\n";
        all_ok = false;
    }
    std::vector<std::string> todo = ids;
    if (todo.empty())
        for (const auto& e : cat.entries())
            todo.push_back(e.id);
    for (const auto& id : todo) {
        Timer t;
        VerifyResult r = cat.verify_entry(id, vd, threads);
        if (r.ok) {
            out << id << " ok (" << t.ms() << " ms)\n";
        } else {
            all_ok = false;
            out << id << " FAIL";
            for (const auto& f : r.failures)
                out << "; " << f;
            out << "\n";
        }
    }
    out << (all_ok ? "catalog: all entries verified\n" : "catalog: verification failed\n");
    emit(out.str(), o.out);
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Self-dual code construction and verification toolkit"};
    app.require_subcommand(1);

    BuildOpts build_opts;
    auto* build = app.add_subcommand("build", "Build a binary generator from construction parameters");
    build->add_option("--params-file", build_opts.params_file, "File holding one parameter record");
    build->add_option("--ring", build_opts.ring, "F2 or F2u")->check(CLI::IsMember({"F2", "F2u"}));
    build->add_option("--n", build_opts.n, "Circulant block size");
    build->add_option("--lambda", build_opts.lambda, "Twist unit symbol");
    build->add_option("--mu", build_opts.mu, "Twist unit symbol for the C block");
    build->add_option("--a", build_opts.a, "First row of A, symbol string");
    build->add_option("--b", build_opts.b, "First row of B, symbol string");
    build->add_option("--c", build_opts.c, "First row of C, symbol string");
    build->add_option("--xi", build_opts.xi, "Six border symbols");
    build->add_option("-o,--out", build_opts.out, "Output matrix file (default stdout)");

    FileOpts check_opts, dist_opts, census_opts, nbr_opts, search_opts, verify_opts;
    std::string engine = "auto";
    uint32_t wmax = 0;
    std::string x0_str;
    std::string search_config;
    uint64_t seed = 0;
    std::string depth = "fast";
    std::vector<std::string> verify_ids;

    auto add_common = [](CLI::App* cmd, FileOpts& o, bool with_input) {
        if (with_input)
            cmd->add_option("matrix", o.path, "Generator matrix file")->required();
        cmd->add_option("-o,--out", o.out, "Output file (default stdout)");
        o.threads_opt = cmd->add_option("--threads", o.threads,
                                        "Thread count (0 = OpenMP default; SDC_THREADS honoured)");
    };

    auto* check = app.add_subcommand("check", "Self-duality and type of a stored generator");
    add_common(check, check_opts, true);

    auto* dist = app.add_subcommand("distance", "Exact minimum distance");
    add_common(dist, dist_opts, true);
    dist->add_option("--engine", engine, "auto, exhaustive or bz")
        ->check(CLI::IsMember({"auto", "exhaustive", "bz"}));

    auto* census = app.add_subcommand("census", "Exact low-weight census");
    add_common(census, census_opts, true);
    census->add_option("--wmax", wmax, "Largest weight to count")->required();

    auto* nbr = app.add_subcommand("neighbour", "Self-dual neighbour along x = (0 | x0)");
    add_common(nbr, nbr_opts, true);
    nbr->add_option("--x0", x0_str, "Bit string or 0x-prefixed hex")->required();

    auto* search = app.add_subcommand("search", "Seeded random parameter search");
    search->add_option("config", search_config, "Search configuration file")->required();
    auto* seed_opt = search->add_option("--seed", seed, "Override the configured seed");
    add_common(search, search_opts, false);

    auto* verify = app.add_subcommand("verify-catalog", "Rebuild and verify recorded codes");
    verify->add_option("--depth", depth, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--id", verify_ids, "Verify only these entries");
    add_common(verify, verify_opts, false);

    try {
        app.parse(argc, argv);
        if (*build)
            return cmd_build(build_opts);
        if (*check)
            return cmd_check(check_opts);
        if (*dist)
            return cmd_distance(dist_opts, engine);
        if (*census)
            return cmd_census(census_opts, wmax);
        if (*nbr)
            return cmd_neighbour(nbr_opts, x0_str);
        if (*search)
            return cmd_search(search_config, seed_opt, seed, search_opts);
        if (*verify)
            return cmd_verify_catalog(depth, verify_ids, verify_opts);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const BuildError& e) {
        std::cerr << e.what() << ": " << e.report().describe() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
