// invconn: classification tables, character decompositions and the numerical
// connection checks from the command line.
//
// Exit codes: 0 success, 1 verification failure or mismatch, 2 usage error.

#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invconn/battery.hpp"
#include "invconn/chars.hpp"
#include "invconn/conncalc.hpp"
#include "invconn/error.hpp"
#include "invconn/siiclass.hpp"

namespace {

using namespace invconn;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct RunConfig {
    std::string format = "md";
    double tolerance = 1e-9;
    uint64_t seed = 42;
    std::string budget = "default";
    bool strict = false;
    bool timing = false;
    std::string catalog_path;
    std::string output;
    int jobs = 1;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<siiclass::IsotropyDatum> load(const RunConfig& cfg) {
    return cfg.catalog_path.empty() ? siiclass::default_catalog() : siiclass::load_catalog(cfg.catalog_path);
}

// Rows are independent; results come back in input order whatever `jobs` is.
std::vector<siiclass::SIIReport> classify_all(const std::vector<siiclass::IsotropyDatum>& rows,
                                              const siiclass::Budget& budget, int jobs) {
    std::vector<std::vector<siiclass::SIIReport>> parts(rows.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < rows.size(); ++i) parts[i] = siiclass::classify(rows[i], budget);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::future<void>> workers;
        for (int w = 0; w < jobs; ++w)
            workers.push_back(std::async(std::launch::async, [&] {
                for (size_t i; (i = next++) < rows.size();) parts[i] = siiclass::classify(rows[i], budget);
            }));
        for (auto& f : workers) f.get();
    }
    std::vector<siiclass::SIIReport> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

int table_exit(const std::vector<siiclass::SIIReport>& reports, bool strict) {
    for (auto& r : reports) {
        if (r.status == siiclass::Status::Mismatch) return kFail;
        if (strict && r.status == siiclass::Status::Skipped) return kFail;
    }
    return kOk;
}

siiclass::Budget parse_budget(const RunConfig& cfg) {
    auto b = siiclass::Budget::parse(cfg.budget);
    if (b.unlimited) std::cerr << "warning: unlimited budget; E8-size rows can run for hours or exhaust memory\n";
    return b;
}

// "2|1,1" -> {{2},{1,1}}
siiclass::Constituent parse_constituent(const std::string& s) {
    siiclass::Constituent c;
    std::stringstream blocks(s);
    std::string block;
    while (std::getline(blocks, block, '|')) {
        std::vector<int> labels;
        std::stringstream ls(block);
        std::string tok;
        while (std::getline(ls, tok, ',')) {
            try {
                labels.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw UsageError("bad label '" + tok + "' in constituent '" + s + "'");
            }
        }
        c.push_back(labels);
    }
    return c;
}

int cmd_classify(const RunConfig& cfg, const std::vector<std::string>& selectors, const std::map<std::string, int>& params,
                 const std::string& ambient, const std::string& factors, const std::vector<std::string>& constituents,
                 std::ostream& out) {
    std::vector<siiclass::IsotropyDatum> rows;
    if (!factors.empty()) {
        if (ambient.empty() || constituents.empty())
            throw UsageError("explicit data needs --ambient, --factors and at least one --constituent");
        siiclass::IsotropyDatum d;
        d.id = "custom";
        d.ambient = rootsys::parse_type(ambient);
        d.factors = rootsys::parse_factors(factors);
        for (auto& c : constituents) d.constituents.push_back(parse_constituent(c));
        rows.push_back(d);
    }
    const auto catalog = load(cfg);
    for (auto& s : selectors) {
        auto sel = siiclass::select(catalog, s, params);
        rows.insert(rows.end(), sel.begin(), sel.end());
    }
    if (rows.empty()) throw UsageError("nothing to classify: give a row id, a family id or explicit data");
    const auto reports = classify_all(rows, parse_budget(cfg), cfg.jobs);
    out << siiclass::emit_tables(reports, siiclass::parse_format(cfg.format), cfg.timing);
    return table_exit(reports, cfg.strict);
}

int cmd_table(const RunConfig& cfg, const std::string& only, std::ostream& out) {
    const auto rows = siiclass::select(load(cfg), only.empty() ? "all" : only);
    const auto reports = classify_all(rows, parse_budget(cfg), cfg.jobs);
    out << siiclass::emit_tables(reports, siiclass::parse_format(cfg.format), cfg.timing);
    return table_exit(reports, cfg.strict);
}

int cmd_decompose(const RunConfig& cfg, const std::string& algebra, const std::string& expr, const std::string& hw,
                  std::ostream& out) {
    auto rs = rootsys::build_root_system(rootsys::parse_factors(algebra));
    const rootsys::Weight lambda = rs->parse_weight(hw);
    if (!rs->is_dominant(lambda)) throw UsageError("highest weight " + rs->format(lambda) + " is not dominant");
    const chars::Plethysm p = chars::parse_plethysm(expr);
    const chars::Character& base = chars::irrep_character(rs, lambda);
    const chars::Character chi = chars::materialize(base, p);
    const chars::RepSum parts = chars::decompose(chi, 2'000'000);
    const chars::Mult trivial = chars::multiplicity(chi, rootsys::Weight{});

    int64_t check = 0;
    for (auto& [w, m] : parts.terms) check += m * rootsys::weyl_dimension(*rs, w).convert_to<int64_t>();
    const auto fmt = siiclass::parse_format(cfg.format);
    if (fmt == siiclass::Format::Json) {
        json terms = json::array();
        for (auto& [w, m] : parts.terms)
            terms.push_back({{"weight", rs->format(w)},
                             {"multiplicity", m},
                             {"dimension", rootsys::weyl_dimension(*rs, w).convert_to<int64_t>()}});
        json j = {{"algebra", rs->name()},    {"expression", chars::plethysm_name(p)},
                  {"hw", rs->format(lambda)}, {"dimension", chi.dimension()},
                  {"terms", terms},           {"trivial_multiplicity", trivial}};
        out << j.dump(2) << "\n";
    } else if (fmt == siiclass::Format::Csv) {
        out << "weight,multiplicity,dimension\n";
        for (auto& [w, m] : parts.terms)
            out << "\"" << rs->format(w) << "\"," << m << "," << rootsys::weyl_dimension(*rs, w) << "\n";
    } else {
        out << chars::plethysm_name(p) << " of " << rs->format(lambda) << " over " << rs->name() << ", dimension "
            << chi.dimension() << "\n";
        for (auto& [w, m] : parts.terms)
            out << "  " << (m > 1 ? std::to_string(m) + " x " : "") << rs->format(w) << "  dim "
                << rootsys::weyl_dimension(*rs, w) << "\n";
        out << "trivial multiplicity " << trivial << "\n";
    }
    if (check != chi.dimension()) {
        std::cerr << "error: summand dimensions add up to " << check << ", expected " << chi.dimension() << "\n";
        return kFail;
    }
    return kOk;
}

json checks_json(const std::vector<battery::CheckResult>& checks) {
    json arr = json::array();
    for (auto& c : checks)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"tol", c.tol}, {"detail", c.detail}});
    return arr;
}

int cmd_verify_un(const RunConfig& cfg, int n, std::ostream& out) {
    const auto checks = battery::verify_unitary(n, cfg.tolerance, cfg.seed);
    bool ok = true;
    for (auto& c : checks) ok = ok && c.pass;
    if (siiclass::parse_format(cfg.format) == siiclass::Format::Json) {
        out << json{{"n", n}, {"checks", checks_json(checks)}, {"pass", ok}}.dump(2) << "\n";
    } else {
        out << "u(" << n << "), mu = mu_4 - mu_5, tolerance " << cfg.tolerance << "\n" << battery::format_checks(checks);
        int failed = 0;
        for (auto& c : checks) failed += !c.pass;
        out << (ok ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
    }
    return ok ? kOk : kFail;
}

int cmd_einstein(const RunConfig& cfg, const std::string& algebra, const std::vector<double>& alphas,
                 std::ostream& out) {
    const auto alg = conncalc::build_algebra(algebra);
    const bool simple = alg.kind != conncalc::AlgebraKind::U && !(alg.kind == conncalc::AlgebraKind::SO && alg.n < 3) &&
                        !(alg.kind == conncalc::AlgebraKind::SO && alg.n == 4);
    std::vector<battery::EinsteinRow> rows;
    for (double a : alphas) rows.push_back(battery::einstein_row(alg, a, cfg.tolerance));
    bool ok = true;
    for (auto& r : rows) {
        if (simple && (!r.report.is_einstein || r.parallel_torsion > cfg.tolerance)) ok = false;
        if (!simple && r.report.is_einstein && !r.flat) ok = false;
    }
    if (siiclass::parse_format(cfg.format) == siiclass::Format::Json) {
        json arr = json::array();
        for (auto& r : rows)
            arr.push_back({{"alpha", r.alpha},
                           {"is_einstein", r.report.is_einstein},
                           {"residual", r.report.residual},
                           {"scal", r.report.scal},
                           {"einstein_constant", r.report.einstein_constant},
                           {"parallel_torsion", r.parallel_torsion},
                           {"flat", r.flat},
                           {"ricci_null_directions", r.report.null_directions},
                           {"note", r.note}});
        out << json{{"algebra", alg.name}, {"simple", simple}, {"rows", arr}}.dump(2) << "\n";
    } else {
        out << alg.name << (simple ? "" : " (not simple)") << ", mu = (1 - alpha)/2 [.,.]\n";
        for (auto& r : rows) {
            out << "  alpha = " << r.alpha << ": " << (r.report.is_einstein ? "Einstein" : "not Einstein")
                << ", residual " << r.report.residual << ", scal " << r.report.scal << ", |nabla T| "
                << r.parallel_torsion;
            if (r.flat) out << ", flat";
            if (!r.note.empty()) out << ", " << r.note;
            if (r.flat && !simple) out << " (flat connection: Ric = 0 is trivially Einstein)";
            out << "\n";
        }
    }
    return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant connections on strongly isotropy irreducible spaces"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "md", "markdown", "csv"}))
        ->capture_default_str();
    app.add_option("--tolerance", cfg.tolerance, "Absolute tolerance for numerical checks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for random samples")->capture_default_str();
    app.add_option("--budget", cfg.budget, "'unlimited' or W:S (max Weyl order : max support), e.g. 1e6:5e4")
        ->capture_default_str();
    app.add_flag("--strict", cfg.strict, "Treat skipped rows as failures");
    app.add_flag("--timing", cfg.timing, "Include elapsed times (output is then not reproducible)");
    app.add_option("--catalog", cfg.catalog_path, "Load the catalog from a JSON file")->check(CLI::ExistingFile);
    app.add_option("-o,--output", cfg.output, "Write to a file instead of standard output");
    app.add_option("-j,--jobs", cfg.jobs, "Worker threads for table rows")->check(CLI::Range(1, 256));

    auto* classify = app.add_subcommand("classify", "Classify catalog rows, families or explicit data");
    std::vector<std::string> selectors;
    int p = 0, q = 0, n = 0;
    std::string ambient, factors;
    std::vector<std::string> constituents;
    classify->add_option("selector", selectors, "Row id (G2/SU3), family id (SU_pq), table4, table5 or all");
    classify->add_option("--p", p, "Family parameter p");
    classify->add_option("--q", q, "Family parameter q");
    classify->add_option("--n", n, "Family parameter n");
    classify->add_option("--ambient", ambient, "Ambient type for explicit data, e.g. B3");
    classify->add_option("--factors", factors, "Subgroup factors for explicit data, e.g. A1xA2");
    classify->add_option("--constituent", constituents, "One summand of m^C, labels per factor: '2|1,1'");

    auto* table = app.add_subcommand("table", "Regenerate the tables with computed and expected columns");
    bool all = false;
    std::string only;
    table->add_flag("--all", all, "All rows (default)");
    table->add_option("--only", only, "table4 | table5 | classical | exceptions | a family id");

    auto* decompose = app.add_subcommand("decompose", "Decompose a plethysm of an irreducible");
    std::string algebra, expr, hw;
    decompose->add_option("algebra", algebra, "Root system, e.g. A3 or A1xA2")->required();
    decompose->add_option("expression", expr, "base, tensor, alt2, sym2, alt3, sym3, tensor-alt2, plethysm21")
        ->required();
    decompose->add_option("--hw", hw, "Highest weight labels, e.g. 1,0,1")->required();

    auto* verify = app.add_subcommand("verify-un", "Numerical checks for the vectorial connection on u(n)");
    int un = 3;
    verify->add_option("n", un, "Matrix size (>= 3)")->required();

    auto* einstein = app.add_subcommand("einstein", "Einstein test for the Lie bracket family");
    std::string ealg;
    std::vector<double> alphas{-1, 0.5, 1, 2};
    einstein->add_option("algebra", ealg, "su3, so5, u3, ...")->required();
    einstein->add_option("--alphas", alphas, "Comma separated alpha values")->delimiter(',')->capture_default_str();

    auto* dump = app.add_subcommand("catalog-dump", "Print the catalog as JSON");

    // Global flags may also follow the subcommand.
    for (auto* sub : {classify, table, decompose, verify, einstein, dump}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            std::cerr << "error: cannot write " << cfg.output << "\n";
            return kUsage;
        }
    }
    std::ostream& out = cfg.output.empty() ? std::cout : file;

    try {
        if (*classify) {
            std::map<std::string, int> params;
            if (p) params["p"] = p;
            if (q) params["q"] = q;
            if (n) params["n"] = n;
            return cmd_classify(cfg, selectors, params, ambient, factors, constituents, out);
        }
        if (*table) return cmd_table(cfg, all ? "" : only, out);
        if (*decompose) return cmd_decompose(cfg, algebra, expr, hw, out);
        if (*verify) return cmd_verify_un(cfg, un, out);
        if (*einstein) return cmd_einstein(cfg, ealg, alphas, out);
        if (*dump) {
            out << siiclass::dump_catalog(load(cfg));
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
