// patmaj: major-index distributions over pattern-avoiding permutations.
//
// Exit codes: 0 success, 1 verification or verdict failure, 2 invalid input,
// 3 resource ceiling.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "patmaj/patmaj.hpp"

namespace {

using namespace patmaj;

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kResource = 3 };

struct Globals {
    std::uint64_t max_nodes = SearchLimits{}.max_nodes;
    unsigned jobs = 1;
    int search_bound = SearchLimits{}.max_n;

    SearchLimits limits() const { return {search_bound, max_nodes, jobs}; }
};

Algorithm parse_algorithm(const std::string& s) {
    if (s == "brute") return Algorithm::brute;
    if (s == "cores") return Algorithm::cores;
    return Algorithm::both;
}

std::string core_text(const Permutation& g) { return g.empty() ? "()" : to_string(g); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct TableArgs {
    std::string patterns;
    int max_n = 0;
    int max_maj = -1;
    std::string algorithm = "both";
    std::string format = "csv";
};

int run_table(const TableArgs& a, const Globals& g) {
    const PatternSet patterns = parse_pattern_set(a.patterns);
    const int max_maj = a.max_maj >= 0 ? a.max_maj : MajTable::max_maj_of_length(a.max_n);
    const MajTable t = maj_table(a.max_n, max_maj, patterns, parse_algorithm(a.algorithm), g.limits());
    if (a.format == "json") {
        emit(table_to_json(t));
    } else {
        std::cout << table_to_csv(t);
    }
    return kOk;
}

struct DegreeArgs {
    std::string patterns;
    long long m = 0;
    int max_n = 0;
    int window = 3;
    std::string algorithm = "cores";
};

int run_degree(const DegreeArgs& a, const Globals& g) {
    const PatternSet patterns = parse_pattern_set(a.patterns);
    if (a.m < 0) throw InvalidInput("--maj must be non-negative");
    if (a.window < 1) throw InvalidInput("--window must be at least 1");
    const SearchLimits limits = g.limits();
    const int m = static_cast<int>(a.m);
    int max_n = a.max_n;
    if (max_n <= 0) max_n = detection_length(eventual_polynomial(m, patterns, limits), a.m, a.window);

    std::vector<Count> series;
    const Algorithm algorithm = parse_algorithm(a.algorithm);
    if (algorithm != Algorithm::brute) series = column_by_cores(m, max_n, patterns, limits);
    if (algorithm != Algorithm::cores) {
        auto brute = brute_force_table(max_n, m, patterns, limits).column(m);
        if (algorithm == Algorithm::both && brute != series) {
            for (int n = 1; n <= max_n; ++n) {
                if (brute[n - 1] != series[n - 1]) {
                    throw VerificationFailure("brute-force and core counts disagree at n=" + std::to_string(n) +
                                              ": " + std::to_string(brute[n - 1]) + " vs " +
                                              std::to_string(series[n - 1]));
                }
            }
        }
        series = std::move(brute);
    }
    const DegreeReport r = degree_report(a.m, patterns, std::span<const Count>(series), a.window, limits);
    Json j = degree_report_json(r);
    Json counts = Json::array();
    for (Count c : series) counts.push_back(c);
    j["series"] = {{"first_n", 1}, {"counts", counts}};
    emit(j);
    return r.verdict == Verdict::mismatch ? kFailed : kOk;
}

struct MonotoneArgs {
    std::string patterns;
    int n = 0;
    int max_maj = -1;
};

int run_verify_monotonic(const MonotoneArgs& a, const Globals& g) {
    const PatternSet patterns = parse_pattern_set(a.patterns);
    if (patterns.size() != 1) throw InvalidInput("verify-monotonic takes exactly one pattern");
    const int max_maj = a.max_maj >= 0 ? a.max_maj : MajTable::max_maj_of_length(a.n);
    const MonotonicityReport r = verify_monotonicity(patterns.patterns().front(), a.n, max_maj, g.limits());
    emit(monotonicity_report_json(r));
    return r.verified ? kOk : kFailed;
}

struct CoresArgs {
    std::string patterns;
    int m = 0;
    std::string format = "text";
    int samples = 0;
    std::uint64_t seed = 1;
};

int run_cores(const CoresArgs& a, const Globals& g) {
    const PatternSet patterns = parse_pattern_set(a.patterns);
    const CoreSet cs = core_set(a.m, patterns, g.limits());
    Json list = Json::array();
    int status = kOk;
    for (std::size_t idx = 0; idx < cs.cores.size(); ++idx) {
        const Permutation& gamma = cs.cores[idx];
        std::vector<std::string> minimal;
        for (int i : admissible_unit_indices(gamma, patterns)) {
            minimal.push_back(to_string(PaddingProfile::unit(gamma.size() + 1, i)));
        }
        std::optional<DownsetViolation> bad;
        if (a.samples > 0) bad = sample_downset(gamma, patterns, a.samples, a.seed + idx);
        if (bad) status = kFailed;
        if (a.format == "json") {
            Json entry = {{"core", core_text(gamma)}, {"maj_plus", maj_plus(gamma)}, {"minimal_profiles", minimal}};
            if (bad) entry["downset_violation"] = {{"upper", to_string(bad->upper)}, {"lower", to_string(bad->lower)}};
            list.push_back(entry);
        } else {
            std::cout << core_text(gamma) << "\tmaj+=" << maj_plus(gamma) << "\t";
            for (std::size_t i = 0; i < minimal.size(); ++i) std::cout << (i ? " " : "") << minimal[i];
            if (bad) std::cout << "\tdownset violation " << to_string(bad->upper) << " > " << to_string(bad->lower);
            std::cout << "\n";
        }
    }
    if (a.format == "json") {
        emit({{"schema", kSchemaVersion},
              {"kind", "core_set"},
              {"m", a.m},
              {"patterns", detail::patterns_json(patterns)},
              {"cores", list}});
    }
    return status;
}

struct OeisArgs {
    std::string file;
    int max_n = 0;
    std::string algorithm = "brute";
};

int run_check_oeis(const OeisArgs& a, const Globals& g) {
    std::ifstream in(a.file);
    if (!in) throw InvalidInput("cannot read " + a.file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::vector<Count> reference;
    try {
        reference = parse_oeis_values(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(a.file + ": " + e.what());
    }
    const MajTable t = maj_table(a.max_n, MajTable::max_maj_of_length(a.max_n), PatternSet{},
                                 parse_algorithm(a.algorithm), g.limits());
    const OeisComparison c = compare_triangle(t, reference);
    if (c.match) {
        std::cout << "match: " << c.compared << " values compared\n";
        return kOk;
    }
    const auto& d = *c.mismatch;
    if (c.reference_too_short) {
        std::cout << "mismatch: reference ends before n=" << d.n << ", m=" << d.m << " (" << c.compared
                  << " values compared)\n";
    } else {
        std::cout << "mismatch at n=" << d.n << ", m=" << d.m << ": computed " << d.left << ", reference "
                  << d.right << "\n";
    }
    return kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Major-index distributions over pattern-avoiding permutations"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--max-nodes", g.max_nodes, "Search node ceiling")->envname("PATMAJ_MAX_NODES");
    app.add_option("--jobs", g.jobs, "Worker threads, 1..1024")->envname("PATMAJ_JOBS");
    app.add_option("--search-bound", g.search_bound, "Longest permutation the brute-force generator builds")
        ->check(CLI::Range(0, 64));

    const auto algorithms = CLI::IsMember({"brute", "cores", "both"});

    TableArgs ta;
    auto* table = app.add_subcommand("table", "Emit the M_n^m table");
    table->add_option("--patterns,-p", ta.patterns, "Patterns, e.g. 3412,1324 (empty: no restriction)");
    table->add_option("--max-n", ta.max_n, "Largest n")->required()->check(CLI::Range(1, 64));
    table->add_option("--max-maj", ta.max_maj, "Largest major index (default: full rows)")->check(CLI::NonNegativeNumber);
    table->add_option("--algorithm", ta.algorithm, "brute, cores, or both (cross-checked)")->check(algorithms);
    table->add_option("--format", ta.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    DegreeArgs da;
    auto* degree = app.add_subcommand("degree", "Predicted and detected degree of the column m");
    degree->add_option("--patterns,-p", da.patterns, "Patterns");
    degree->add_option("--maj,-m", da.m, "Major index m")->required();
    degree->add_option("--max-n", da.max_n, "Series length (default: onset + m + window + 1)");
    degree->add_option("--window", da.window, "Trailing constant differences required");
    degree->add_option("--algorithm", da.algorithm, "Series source: cores, brute, or both")->check(algorithms);

    MonotoneArgs ma;
    auto* mono = app.add_subcommand("verify-monotonic", "Check the length-increasing injection on one pattern");
    mono->add_option("--patterns,-p", ma.patterns, "A single pattern with a descent")->required();
    mono->add_option("--n", ma.n, "Length of the source permutations")->required()->check(CLI::Range(0, 64));
    mono->add_option("--max-maj", ma.max_maj, "Largest major index (default: n(n-1)/2)")->check(CLI::NonNegativeNumber);

    CoresArgs ca;
    auto* cores = app.add_subcommand("cores", "List the admissible cores with maj+ = m");
    cores->add_option("--patterns,-p", ca.patterns, "Patterns");
    cores->add_option("--maj,-m", ca.m, "maj+ of the cores")->required()->check(CLI::NonNegativeNumber);
    cores->add_option("--format", ca.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cores->add_option("--sample-downset", ca.samples, "Random down-set checks per core")->check(CLI::NonNegativeNumber);
    cores->add_option("--seed", ca.seed, "Seed for --sample-downset");

    OeisArgs oa;
    auto* oeis = app.add_subcommand("check-oeis", "Compare the unrestricted triangle with a local reference file");
    oeis->add_option("--file", oa.file, "b-file or one value per line, read row by row")->required();
    oeis->add_option("--max-n", oa.max_n, "Rows to compare")->required()->check(CLI::Range(1, 64));
    oeis->add_option("--algorithm", oa.algorithm, "brute, cores, or both")->check(algorithms);

    try {
        app.parse(argc, argv);
        // Checked here: CLI11 silently drops environment values that fail a validator.
        if (g.jobs < 1 || g.jobs > 1024) throw CLI::ValidationError("--jobs", "must be in 1..1024");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*table) return run_table(ta, g);
        if (*degree) return run_degree(da, g);
        if (*mono) return run_verify_monotonic(ma, g);
        if (*cores) return run_cores(ca, g);
        if (*oeis) return run_check_oeis(oa, g);
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kFailed;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const UnsupportedPattern& e) {
        std::cerr << "unsupported pattern: " << e.what() << "\n";
        return kInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
