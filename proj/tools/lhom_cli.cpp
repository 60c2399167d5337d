// Command-line surface: validation, homology reports, order structures,
// the exact-sequence suite, fibration verification, instance generation,
// and the exploratory three-object search. Exit codes: 0 all checks pass,
// 1 a verified-property violation or a witness of the requested kind was
// found, 2 input or usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lhom/dcomplex_io.hpp"
#include "lhom/reports.hpp"

using namespace lhom;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string format = "text";
    bool serial = false;
    ExecMode mode() const { return serial ? ExecMode::Serial : ExecMode::Parallel; }
};

GridIndex parse_at(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InputError("--at expects \"i,j\"");
    try {
        return {std::stoul(s.substr(0, comma)), std::stoul(s.substr(comma + 1))};
    } catch (const std::logic_error&) {
        throw InputError("--at expects \"i,j\" with decimal indices");
    }
}

FieldSpec parse_field(const std::string& s) {
    if (s == "Q" || s == "q") return FieldSpec::rationals();
    std::string digits = s;
    if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'f')) digits = digits.substr(1);
    try {
        return FieldSpec::prime_field(static_cast<std::uint32_t>(std::stoul(digits)));
    } catch (const std::logic_error&) {
        throw InputError("--field expects Q or a prime (e.g. 2, F5)");
    }
}

GenConfig::Mode parse_mode(const std::string& s) {
    if (s == "tensor") return GenConfig::Mode::Tensor;
    if (s == "zero") return GenConfig::Mode::Zero;
    if (s == "exact_rows") return GenConfig::Mode::ExactRows;
    if (s == "direct_sum") return GenConfig::Mode::DirectSum;
    throw InputError("--mode expects tensor|zero|exact_rows|direct_sum");
}

void emit(const json& j) { std::cout << j.dump(1) << "\n"; }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open for writing: " + path);
    out << text;
}

std::string at_str(GridIndex g) {
    return std::to_string(g.row) + "," + std::to_string(g.col);
}

int cmd_validate(const std::string& file, const Options& opt) {
    const DoubleComplex dc = load_file(file, /*check_laws=*/false);
    const ValidationReport report = validate(dc);
    if (opt.format == "json") {
        json j = report_validation(report);
        j["command"] = "validate";
        emit(j);
    } else if (report.ok()) {
        std::cout << "valid: " << dc.rows() << "x" << dc.cols() << " grid over "
                  << dc.field().to_string() << "\n";
    } else {
        for (const LawViolation& v : report.violations)
            std::cout << law_name(v.law) << " at (" << at_str(v.at) << "): " << v.detail << "\n";
        std::cout << report.violations.size() << " violation(s)\n";
    }
    return report.ok() ? kExitOk : kExitViolation;
}

int cmd_homology(const std::string& file, const std::string& at_opt, const std::string& kind_opt,
                 const Options& opt) {
    const DoubleComplex dc = load_file(file);
    std::vector<HomologyRow> rows = homology_table(dc, opt.mode());
    if (!at_opt.empty()) {
        const GridIndex at = parse_at(at_opt);
        if (!dc.in_bounds(at)) throw InputError("--at out of bounds");
        std::erase_if(rows, [&](const HomologyRow& r) { return !(r.at == at); });
    }
    if (!kind_opt.empty()) {
        const auto k = kind_from_name(kind_opt);
        if (!k) throw InputError("unknown kind: " + kind_opt);
        std::erase_if(rows, [&](const HomologyRow& r) { return r.kind != *k; });
    }
    if (opt.format == "json") {
        json j = report_homology(rows);
        j["command"] = "homology";
        emit(j);
    } else {
        std::cout << std::left << std::setw(8) << "at" << std::setw(12) << "kind" << std::setw(6)
                  << "dimU" << std::setw(6) << "dimV" << std::setw(6) << "dim" << "trivial\n";
        for (const HomologyRow& r : rows)
            std::cout << std::left << std::setw(8) << at_str(r.at) << std::setw(12)
                      << kind_name(r.kind) << std::setw(6) << r.dim_num << std::setw(6)
                      << r.dim_den << std::setw(6) << r.dim << (r.trivial ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_poset(const std::string& file, const std::string& at_opt, const std::string& relation,
              const std::string& dot_path, const Options& opt) {
    const DoubleComplex dc = load_file(file);
    const GridIndex at = parse_at(at_opt);
    if (!dc.in_bounds(at)) throw InputError("--at out of bounds");
    const ObjectAnalysis a = analyze(context(dc, at));
    PosetReport report;
    if (relation == "hook")
        report = semilattice_report(a);
    else if (relation == "prec")
        report = poset_report(a);
    else
        throw InputError("--relation expects hook|prec");
    if (!dot_path.empty()) write_file(dot_path, hasse_dot(report, a));
    if (opt.format == "json") {
        json j = report_poset(report);
        j["command"] = "poset";
        emit(j);
    } else {
        std::cout << relation << " relation at (" << at_str(at) << "): "
                  << (report.ok ? "ok" : "VIOLATIONS") << "\n";
        if (report.top) std::cout << "top: " << kind_name(*report.top) << "\n";
        if (report.bottom) std::cout << "bottom: " << kind_name(*report.bottom) << "\n";
        std::cout << "related pairs: " << report.edges.size()
                  << ", value classes: " << report.value_classes.size() << "\n";
        for (const auto& v : report.violations) std::cout << "violation: " << v << "\n";
        if (report.relation == PosetReport::Relation::Prec)
            std::cout << "literal biconditional failures: "
                      << report.literal_biconditional_failures << "\n";
    }
    return report.ok ? kExitOk : kExitViolation;
}

int cmd_exact(const std::string& file, const std::string& suite, const Options& opt) {
    if (suite != "paper") throw InputError("--suite expects \"paper\"");
    const DoubleComplex dc = load_file(file);
    const SuiteReport report = run_suite(dc, opt.mode());
    const bool ok = report.all_exact() && report.salamander_ok();
    if (opt.format == "json") {
        json j = report_suite(report);
        j["command"] = "exact";
        emit(j);
    } else {
        for (const SequenceCheck& s : report.sequences)
            std::cout << std::left << std::setw(8) << at_str(s.at) << std::setw(7) << s.id
                      << std::setw(32)
                      << (std::string(kind_name(s.kinds[0])) + " -> " + kind_name(s.kinds[1]) +
                          " -> " + kind_name(s.kinds[2]))
                      << (s.exact ? "exact" : "NOT EXACT") << "\n";
        std::cout << report.sequences.size() << " sequence(s), "
                  << (report.all_exact() ? "all exact" : "FAILURES") << "; salamander "
                  << (report.salamander_ok() ? "ok" : "FAILED") << "\n";
    }
    return ok ? kExitOk : kExitViolation;
}

int cmd_salamander(const std::string& file, const Options& opt) {
    const DoubleComplex dc = load_file(file);
    SuiteReport full = run_suite(dc, opt.mode());
    SuiteReport report;
    report.salamander = full.salamander;
    for (const SequenceCheck& s : full.sequences)
        if (std::string(s.id) == "II.a" || std::string(s.id) == "III.e")
            report.sequences.push_back(s);
    const bool ok = report.all_exact() && report.salamander_ok();
    if (opt.format == "json") {
        json j = report_suite(report);
        j["command"] = "salamander";
        emit(j);
    } else {
        for (const SalamanderCheck& s : report.salamander)
            std::cout << "edge (" << at_str(s.at) << ")-h: "
                      << (s.applicable
                              ? (s.iso_ok ? "donor/receptor isomorphism ok" : "ISOMORPHISM FAILS")
                              : "not applicable (horizontal homology nonzero)")
                      << "\n";
        std::cout << report.sequences.size() << " segment check(s) "
                  << (report.all_exact() ? "exact" : "NOT EXACT") << "\n";
    }
    return ok ? kExitOk : kExitViolation;
}

int cmd_fibration(const std::string& file, const std::string& dot_com, const std::string& dot_hlg,
                  const Options& opt) {
    const DoubleComplex dc = load_file(file);
    const FibBuild b = build_fibration(dc, opt.mode());
    const FibReport report = verify_all(b, opt.mode());
    if (!dot_com.empty()) write_file(dot_com, com_dot(b));
    if (!dot_hlg.empty()) write_file(dot_hlg, hlg_dot(b));
    if (opt.format == "json") {
        json j = report_fibration(report);
        j["command"] = "fibration";
        emit(j);
    } else {
        const auto line = [](const char* name, bool ok) {
            std::cout << std::left << std::setw(16) << name << (ok ? "ok" : "FAILED") << "\n";
        };
        line("faithful", report.faithful_ok);
        line("amnestic", report.amnestic_ok);
        line("functorial", report.functorial_ok);
        line("fibration", report.fibration_ok);
        line("bottom chain", report.chain_ok);
        line("left adjoint", report.left_adjoint_ok);
        line("right adjoint", report.right_adjoint_ok);
        std::cout << report.fibers << " fiber(s), " << report.within_fiber_arrows
                  << " within-fiber arrow(s), " << report.cross_arrows << " cross arrow(s), "
                  << report.lifts_checked << " lift(s), " << report.factorizations_checked
                  << " factorization(s)\n";
        for (const auto& f : report.failures) std::cout << "failure: " << f << "\n";
    }
    return report.ok() ? kExitOk : kExitViolation;
}

int cmd_gen(const std::string& mode, std::uint64_t seed, const std::string& field,
            std::size_t rows, std::size_t cols, std::size_t dim_max, const std::string& out) {
    GenConfig cfg;
    cfg.mode = parse_mode(mode);
    cfg.seed = seed;
    cfg.field = parse_field(field);
    cfg.max_rows = rows;
    cfg.max_cols = cols;
    cfg.max_dim = dim_max;
    save_file(generate(cfg), out);
    return kExitOk;
}

int cmd_search_iv(const std::string& file, std::size_t random_count, std::uint64_t seed,
                  const std::string& field, std::size_t rows, std::size_t cols,
                  std::size_t dim_max, std::uint64_t budget, std::size_t max_witnesses,
                  const Options& opt) {
    if (file.empty() == (random_count == 0))
        throw InputError("search-iv needs exactly one of --file or --random");
    json instances = json::array();
    std::uint64_t remaining = budget;
    std::size_t total_witnesses = 0, nondegenerate = 0;
    const auto run_one = [&](const DoubleComplex& dc, const json& origin) {
        const SearchIvResult r = search_type_iv(dc, remaining);
        remaining -= std::min<std::uint64_t>(remaining, r.triples_examined);
        total_witnesses += r.witnesses.size();
        for (const TypeIvWitness& w : r.witnesses)
            if (!w.degenerate) ++nondegenerate;
        json j = report_search(r, max_witnesses);
        j["origin"] = origin;
        instances.push_back(std::move(j));
    };
    if (!file.empty()) {
        run_one(load_file(file), json{{"file", file}});
    } else {
        for (std::size_t i = 0; i < random_count && remaining > 0; ++i) {
            GenConfig cfg;
            cfg.mode = GenConfig::Mode::Tensor;
            cfg.field = parse_field(field);
            cfg.max_rows = rows;
            cfg.max_cols = cols;
            cfg.max_dim = dim_max;
            cfg.seed = seed + i;
            run_one(generate(cfg), json{{"seed", cfg.seed}, {"mode", "tensor"}});
        }
    }
    if (opt.format == "json") {
        emit(json{{"schema", 1},
                  {"command", "search-iv"},
                  {"witness_count", total_witnesses},
                  {"nondegenerate_count", nondegenerate},
                  {"instances", instances}});
    } else {
        std::cout << "instances scanned: " << instances.size() << ", witnesses: "
                  << total_witnesses << " (" << nondegenerate << " nondegenerate)\n";
    }
    return total_witnesses > 0 ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for the homologies and order structures of double complexes"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--serial", opt.serial, "force the serial reference path");

    std::string file, at_opt, kind_opt, relation, dot_path, dot_com, dot_hlg, suite = "paper";
    std::string mode = "tensor", field = "Q", out;
    std::uint64_t seed = 0, budget = 2'000'000;
    std::size_t rows = 3, cols = 3, dim_max = 4, random_count = 0, max_witnesses = 1000;
    bool all_kinds = false;

    auto* validate_cmd = app.add_subcommand("validate", "check the grid laws of a document");
    validate_cmd->add_option("file", file)->required();

    auto* homology_cmd = app.add_subcommand("homology", "homology dimensions per object");
    homology_cmd->add_option("file", file)->required();
    homology_cmd->add_option("--at", at_opt, "restrict to one position i,j");
    homology_cmd->add_option("--kind", kind_opt, "restrict to one kind (e.g. Ah, Astar)");
    homology_cmd->add_flag("--all", all_kinds, "all eighteen kinds (the default)");

    auto* poset_cmd = app.add_subcommand("poset", "order structure on one object's homologies");
    poset_cmd->add_option("file", file)->required();
    poset_cmd->add_option("--at", at_opt)->required();
    poset_cmd->add_option("--relation", relation, "hook|prec")->required();
    poset_cmd->add_option("--dot", dot_path, "write the Hasse diagram as DOT");

    auto* exact_cmd = app.add_subcommand("exact", "run an exact-sequence suite");
    exact_cmd->add_option("file", file)->required();
    exact_cmd->add_option("--suite", suite, "suite name (paper)");

    auto* sala_cmd = app.add_subcommand("salamander",
                                        "donor/receptor isomorphisms and their two segments");
    sala_cmd->add_option("file", file)->required();

    auto* fib_cmd = app.add_subcommand("fibration", "build and verify the projection functor");
    fib_cmd->add_option("file", file)->required();
    fib_cmd->add_option("--dot-com", dot_com, "write the base graph as DOT");
    fib_cmd->add_option("--dot-hlg", dot_hlg, "write the homology graph as DOT");

    auto* gen_cmd = app.add_subcommand("gen", "generate a valid instance");
    gen_cmd->add_option("--mode", mode, "tensor|zero|exact_rows|direct_sum");
    gen_cmd->add_option("--seed", seed)->required();
    gen_cmd->add_option("--field", field, "Q or a prime");
    gen_cmd->add_option("--rows", rows, "row bound");
    gen_cmd->add_option("--cols", cols, "column bound");
    gen_cmd->add_option("--dim-max", dim_max, "dimension bound");
    gen_cmd->add_option("-o,--output", out)->required();

    auto* search_cmd = app.add_subcommand("search-iv",
                                          "search for three-object exact sequences");
    search_cmd->add_option("--file", file);
    search_cmd->add_option("--random", random_count, "scan this many generated instances");
    search_cmd->add_option("--seed", seed);
    search_cmd->add_option("--field", field);
    search_cmd->add_option("--rows", rows);
    search_cmd->add_option("--cols", cols);
    search_cmd->add_option("--dim-max", dim_max);
    search_cmd->add_option("--budget", budget, "cap on kind triples examined");
    search_cmd->add_option("--max-witnesses", max_witnesses, "cap on witnesses listed per instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(file, opt);
        if (homology_cmd->parsed()) return cmd_homology(file, at_opt, kind_opt, opt);
        if (poset_cmd->parsed()) return cmd_poset(file, at_opt, relation, dot_path, opt);
        if (exact_cmd->parsed()) return cmd_exact(file, suite, opt);
        if (sala_cmd->parsed()) return cmd_salamander(file, opt);
        if (fib_cmd->parsed()) return cmd_fibration(file, dot_com, dot_hlg, opt);
        if (gen_cmd->parsed()) return cmd_gen(mode, seed, field, rows, cols, dim_max, out);
        if (search_cmd->parsed())
            return cmd_search_iv(file, random_count, seed, field, rows, cols, dim_max, budget,
                                 max_witnesses, opt);
    } catch (const ParseError& e) {
        std::cerr << json{{"schema", 1}, {"error", "parse"}, {"where", e.where()},
                          {"message", e.what()}}
                         .dump()
                  << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        json j = report_validation(e.report());
        j["error"] = "validation";
        std::cerr << j.dump() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        std::cerr << json{{"schema", 1}, {"error", "input"}, {"message", e.what()}}.dump() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
