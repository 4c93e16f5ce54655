#include "bellcert/cli.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellcert/behavior_table.hpp"
#include "bellcert/certifier.hpp"
#include "bellcert/quantum.hpp"
#include "bellcert/scenarios.hpp"

namespace bellcert::cli {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot open input file: " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": invalid JSON: " + e.what());
    }
}

BehaviorTable load_table(const std::string& path) {
    return BehaviorTable::from_json(parse_file(path));
}

sim::ExperimentSpec load_experiment(const std::string& path) {
    return sim::ExperimentSpec::from_json(parse_file(path));
}

// Reports carry their own trailing newline in text form; JSON dumps do not.
int emit(const std::string& text, const std::string& out_path, std::ostream& out,
         std::ostream& err) {
    const char* tail = (!text.empty() && text.back() == '\n') ? "" : "\n";
    if (out_path.empty()) {
        out << text << tail;
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        err << "error: cannot open output file: " << out_path << "\n";
        return 2;
    }
    f << text << tail;
    return 0;
}

std::string sig6(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

std::string known_scenarios() {
    std::string s;
    for (const auto& id : scenarios::scenario_ids()) {
        if (!s.empty())
            s += ", ";
        s += id;
    }
    return s;
}

std::array<int, 5> parse_random_sizes(const std::string& text) {
    std::array<int, 5> out{};
    std::stringstream ss(text);
    std::string piece;
    std::size_t i = 0;
    while (std::getline(ss, piece, ',')) {
        if (i >= out.size())
            throw ParseError("--random expects 5 comma-separated sizes: d,n_x,n_y,n_a,n_b");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(piece, &used);
        } catch (const std::exception&) {
            throw ParseError("--random: '" + piece + "' is not an integer");
        }
        if (used != piece.size())
            throw ParseError("--random: '" + piece + "' is not an integer");
        if (v < 1)
            throw ParseError("--random: every size must be at least 1");
        out[i++] = v;
    }
    if (i != out.size())
        throw ParseError("--random expects 5 comma-separated sizes: d,n_x,n_y,n_a,n_b");
    return out;
}

json exclusion_json(const LambdaMinBound& bound, const std::vector<std::pair<int, bool>>& verdicts,
                    const ExclusionInterval& interval, double epsilon_p) {
    json doc;
    if (bound.vacuous) {
        doc["lambda_min_bound"] = "vacuous";
    } else {
        doc["lambda_min_bound"] = bound.value;
        if (bound.exact)
            doc["lambda_min_bound_exact"] = bound.exact->str();
    }
    json arr = json::array();
    for (const auto& [d, excluded] : verdicts)
        arr.push_back(json{{"d", d}, {"excluded", excluded}});
    doc["max_entangled"] = std::move(arr);
    if (interval.empty) {
        doc["two_qubit_exclusion"] = nullptr;
    } else {
        json iv{{"lo", interval.lo}, {"hi", interval.hi}};
        if (interval.lo_exact && interval.hi_exact) {
            iv["lo_exact"] = interval.lo_exact->str();
            iv["hi_exact"] = interval.hi_exact->str();
        }
        doc["two_qubit_exclusion"] = std::move(iv);
    }
    doc["epsilon_p"] = epsilon_p;
    return doc;
}

std::string exclusion_text(const LambdaMinBound& bound,
                           const std::vector<std::pair<int, bool>>& verdicts,
                           const ExclusionInterval& interval) {
    std::ostringstream os;
    auto line = [&os](const char* name, const std::string& value) {
        os << std::left << std::setw(26) << name << value << "\n";
    };
    if (bound.vacuous) {
        line("lambda_min_bound", "vacuous (no tuple qualified; nothing can be excluded)");
        return os.str();
    }
    std::string v = sig6(bound.value);
    if (bound.exact)
        v += " (= " + bound.exact->str() + ")";
    line("lambda_min_bound", v);

    std::string excluded, allowed;
    for (const auto& [d, flag] : verdicts) {
        std::string& bucket = flag ? excluded : allowed;
        if (!bucket.empty())
            bucket += ", ";
        bucket += std::to_string(d);
    }
    line("max entangled excluded", excluded.empty() ? "none" : "d = " + excluded);
    if (!allowed.empty())
        line("max entangled allowed", "d = " + allowed);

    if (interval.empty) {
        line("two-qubit exclusion", "none");
    } else {
        std::string iv = "weight a in (" + sig6(interval.lo) + ", " + sig6(interval.hi) + ")";
        if (interval.lo_exact && interval.hi_exact)
            iv += " (= (" + interval.lo_exact->str() + ", " + interval.hi_exact->str() + "))";
        line("two-qubit exclusion", iv);
    }
    return os.str();
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"device-independent bounds on the quantum state behind a Bell correlation table"};
    app.require_subcommand(1);

    // --- validate ---------------------------------------------------------
    std::string v_input, v_out, v_format = "json", v_level = "basic";
    Tolerances v_tol;
    CLI::App* v = app.add_subcommand(
        "validate", "check range, normalization, and no-signaling constraints of a table");
    v->add_option("input", v_input, "correlation table JSON file")->required();
    v->add_option("--level", v_level, "constraint level to enforce")
        ->check(CLI::IsMember({"basic", "no-signaling"}))
        ->capture_default_str();
    v->add_option("--format", v_format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    v->add_option("--tol-norm", v_tol.norm, "normalization tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    v->add_option("--tol-ns", v_tol.no_signaling, "no-signaling tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    v->add_option("--out", v_out, "write the report to this file instead of stdout");

    // --- certify ----------------------------------------------------------
    std::string c_input, c_out, c_format = "json";
    double c_eps = kDefaultEpsilonP;
    double c_eta = 0.0;
    int c_dim = 0;
    CLI::App* c =
        app.add_subcommand("certify", "bound the state that generated a correlation table");
    c->add_option("input", c_input, "correlation table JSON file")->required();
    c->add_option("--format", c_format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    c->add_option("--epsilon-p", c_eps,
                  "skip joint probabilities at or below this when bounding the smallest "
                  "coefficient")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    auto* c_eta_opt = c->add_option(
        "--eta", c_eta, "purity deficit hypothesis enabling the entanglement-of-formation bound");
    auto* c_dim_opt = c->add_option(
        "--dim", c_dim, "local-dimension cap for the entanglement-of-formation bound");
    c_eta_opt->needs(c_dim_opt);
    c_dim_opt->needs(c_eta_opt);
    c->add_option("--out", c_out, "write the report to this file instead of stdout");

    // --- simulate ---------------------------------------------------------
    std::string s_input, s_out, s_random;
    std::uint64_t s_seed = 1;
    bool s_mixed = false;
    bool s_chain = false;
    double s_eps = kDefaultEpsilonP;
    CLI::App* s = app.add_subcommand(
        "simulate", "evaluate p(ab|xy) for a shared state and per-setting POVMs");
    auto* s_in_opt = s->add_option("input", s_input, "experiment JSON file");
    auto* s_rand_opt =
        s->add_option("--random", s_random,
                      "generate a seeded random experiment instead: d,n_x,n_y,n_a,n_b");
    s_rand_opt->excludes(s_in_opt);
    s->add_option("--seed", s_seed, "seed for --random")->needs(s_rand_opt)->capture_default_str();
    s->add_flag("--mixed", s_mixed, "draw a full-rank mixed state instead of a pure one")
        ->needs(s_rand_opt);
    s->add_flag("--certify", s_chain,
                "also certify the simulated table (output becomes {table, report})");
    s->add_option("--epsilon-p", s_eps, "epsilon_p forwarded to the chained certification")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    s->add_option("--out", s_out, "write the output document to this file instead of stdout");

    // --- scenario ---------------------------------------------------------
    std::string n_id, n_out;
    bool n_list = false;
    CLI::App* n =
        app.add_subcommand("scenario", "emit a stock correlation table by identifier");
    n->add_option("id", n_id, "one of: " + known_scenarios());
    n->add_flag("--list", n_list, "list known identifiers and exit");
    n->add_option("--out", n_out, "write the table to this file instead of stdout");

    // --- exclude ----------------------------------------------------------
    std::string e_input, e_out, e_format = "json";
    int e_dim = 2;
    double e_eps = kDefaultEpsilonP;
    CLI::App* e = app.add_subcommand(
        "exclude", "state-exclusion verdicts from the smallest-coefficient bound");
    e->add_option("input", e_input, "correlation table JSON file")->required();
    e->add_option("--dim", e_dim, "test maximally entangled states of local dimension 2..dim")
        ->check(CLI::Range(2, 4096))
        ->capture_default_str();
    e->add_option("--epsilon-p", e_eps,
                  "skip joint probabilities at or below this when bounding the smallest "
                  "coefficient")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    e->add_option("--format", e_format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    e->add_option("--out", e_out, "write the report to this file instead of stdout");

    try {
        std::vector<std::string> full;
        full.reserve(args.size() + 1);
        full.emplace_back("bellcert");
        for (auto& a : args)
            full.push_back(std::move(a));
        std::vector<const char*> argv;
        argv.reserve(full.size());
        for (const auto& sarg : full)
            argv.push_back(sarg.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& pe) {
        const int code = app.exit(pe, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (v->parsed()) {
            const BehaviorTable table = load_table(v_input);
            const auto level = v_level == "no-signaling" ? ValidationLevel::no_signaling
                                                         : ValidationLevel::basic;
            const ValidationReport report = validate(table, level, v_tol);
            const int rc = emit(v_format == "text" ? report.to_text() : report.to_json().dump(2),
                                v_out, out, err);
            if (rc != 0)
                return rc;
            return report.ok() ? 0 : 1;
        }

        if (c->parsed()) {
            const BehaviorTable table = load_table(c_input);
            CertifyOptions opts;
            opts.epsilon_p = c_eps;
            if (c_eta_opt->count() > 0) {
                opts.eta = c_eta;
                opts.ef_dim = c_dim;
            }
            const BoundsReport report = certify(table, opts);
            return emit(c_format == "text" ? report.to_text() : report.to_json().dump(2), c_out,
                        out, err);
        }

        if (s->parsed()) {
            std::optional<sim::ExperimentSpec> spec;
            if (s_rand_opt->count() > 0) {
                const auto sz = parse_random_sizes(s_random);
                spec = s_mixed
                           ? sim::random_mixed_instance(sz[0], sz[1], sz[2], sz[3], sz[4], s_seed)
                           : sim::random_instance(sz[0], sz[1], sz[2], sz[3], sz[4], s_seed);
            } else if (s_in_opt->count() > 0) {
                spec = load_experiment(s_input);
            } else {
                err << "error: provide an experiment file or --random\n";
                return 2;
            }
            const BehaviorTable table = sim::simulate(*spec);
            const json table_doc = table.to_json();
            if (!s_chain)
                return emit(table_doc.dump(2), s_out, out, err);
            CertifyOptions opts;
            opts.epsilon_p = s_eps;
            const BoundsReport report = certify(table, opts);
            const json combined{{"table", table_doc}, {"report", report.to_json()}};
            return emit(combined.dump(2), s_out, out, err);
        }

        if (n->parsed()) {
            if (n_list) {
                for (const auto& id : scenarios::scenario_ids())
                    out << id << "\n";
                return 0;
            }
            if (n_id.empty()) {
                err << "error: no scenario named; known identifiers: " << known_scenarios()
                    << "\n";
                return 2;
            }
            const auto sc = scenarios::find_scenario(n_id);
            if (!sc) {
                err << "error: unknown scenario '" << n_id
                    << "'; known identifiers: " << known_scenarios() << "\n";
                return 2;
            }
            return emit(sc->table.to_json().dump(2), n_out, out, err);
        }

        if (e->parsed()) {
            const BehaviorTable table = load_table(e_input);
            const LambdaMinBound bound = lambda_min_bound(table, e_eps);
            std::vector<std::pair<int, bool>> verdicts;
            verdicts.reserve(static_cast<std::size_t>(e_dim) - 1);
            for (int d = 2; d <= e_dim; ++d)
                verdicts.emplace_back(d, exclude_maximally_entangled(table, d, e_eps));
            const ExclusionInterval interval = exclude_two_qubit_range(table, e_eps);
            const std::string text = e_format == "text"
                                         ? exclusion_text(bound, verdicts, interval)
                                         : exclusion_json(bound, verdicts, interval, e_eps).dump(2);
            return emit(text, e_out, out, err);
        }
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }

    err << "error: no subcommand selected\n";
    return 2;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(std::move(args), std::cout, std::cerr);
}

} // namespace bellcert::cli
