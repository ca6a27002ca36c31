#include "kempe/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kempe/constructions.hpp"
#include "kempe/errors.hpp"
#include "kempe/graph_ops.hpp"
#include "kempe/io.hpp"
#include "kempe/reconfig.hpp"
#include "kempe/verify.hpp"

namespace kempe {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw input_error("cannot open file for writing: " + path);
    file << text;
}

std::string plural(long long count, const char* noun) {
    std::string out = std::to_string(count) + " " + noun;
    if (count != 1) out += (out.back() == 's' ? "es" : "s");
    return out;
}

int resolve_k(const GraphDocument& doc, int k_flag) {
    if (k_flag > 0) return k_flag;
    if (doc.k) return *doc.k;
    throw input_error("no palette size: pass --k or store \"k\" in the document");
}

void maybe_export_dot(const std::string& path, const GraphDocument& doc,
                      const Coloring* c, std::ostream& out) {
    if (path.empty()) return;
    std::string text =
        doc.is_partitioned() ? export_dot(doc.to_partitioned(), c) : export_dot(doc.to_graph(), c);
    write_file(path, text, out);
}

json outcome_to_json(const VerificationOutcome& outcome) {
    json root;
    root["claim"] = outcome.claim;
    root["tried"] = outcome.tried;
    root["passed"] = outcome.passed;
    json failures = json::array();
    for (const auto& f : outcome.failures) {
        json item;
        item["detail"] = f.detail;
        item["instance"] = f.instance_json.empty() ? json() : json::parse(f.instance_json);
        failures.push_back(item);
    }
    root["failures"] = failures;
    json skipped = json::array();
    for (const auto& s : outcome.skipped) {
        json item;
        item["reason"] = s.reason;
        item["instance"] = s.instance_json.empty() ? json() : json::parse(s.instance_json);
        skipped.push_back(item);
    }
    root["skipped"] = skipped;
    return root;
}

void print_outcome(const VerificationOutcome& outcome, std::ostream& out) {
    out << "claim: " << outcome.claim << "\n";
    out << "tried: " << outcome.tried << "\n";
    out << "passed: " << outcome.passed << "\n";
    out << "failures: " << outcome.failures.size() << "\n";
    for (size_t i = 0; i < outcome.failures.size(); ++i) {
        out << "failure[" << i << "]: " << outcome.failures[i].detail << "\n";
        if (!outcome.failures[i].instance_json.empty())
            out << outcome.failures[i].instance_json;
    }
    out << "skipped: " << outcome.skipped.size() << "\n";
    for (size_t i = 0; i < outcome.skipped.size(); ++i)
        out << "skipped[" << i << "]: " << outcome.skipped[i].reason << "\n";
}

void maybe_write_report(const std::string& path, const VerificationOutcome& outcome,
                        std::ostream& out) {
    if (path.empty()) return;
    write_file(path, outcome_to_json(outcome).dump(2) + "\n", out);
}

long long default_cap_from_env() {
    if (const char* env = std::getenv("KEMPE_DEFAULT_CAP")) {
        char* end = nullptr;
        long long value = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && value >= 0) return value;
        throw input_error("KEMPE_DEFAULT_CAP must be a nonnegative integer");
    }
    return kDefaultStateCap;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kempe-change reconfiguration of graph colorings"};
    app.require_subcommand(1);

    long long default_cap;
    try {
        default_cap = default_cap_from_env();
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    // count
    auto* count_cmd = app.add_subcommand("count", "count proper colorings and Kempe classes");
    std::string count_file, count_dot, count_report;
    int count_k = 0;
    long long count_cap = default_cap;
    count_cmd->add_option("file", count_file, "GraphDocument JSON file")->required();
    count_cmd->add_option("--k", count_k, "palette size (default: document's k)");
    count_cmd->add_option("--cap", count_cap, "max colorings before truncation");
    count_cmd->add_option("--dot", count_dot, "export the instance as DOT");
    count_cmd->add_option("--report", count_report, "write the full report as JSON");

    // equiv
    auto* equiv_cmd = app.add_subcommand("equiv", "decide Kempe equivalence of two colorings");
    std::string equiv_file, equiv_c1, equiv_c2, equiv_dot;
    int equiv_k = 0;
    long long equiv_cap = default_cap;
    equiv_cmd->add_option("file", equiv_file, "GraphDocument JSON file")->required();
    equiv_cmd->add_option("--c1", equiv_c1, "name of the first coloring")->required();
    equiv_cmd->add_option("--c2", equiv_c2, "name of the second coloring")->required();
    equiv_cmd->add_option("--k", equiv_k, "palette size (default: document's k)");
    equiv_cmd->add_option("--cap", equiv_cap, "max visited colorings");
    equiv_cmd->add_option("--dot", equiv_dot, "export the instance as DOT");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "generate a named instance family");
    std::string construct_what, construct_base, construct_out = "-", construct_dot;
    int construct_k = 0;
    construct_cmd->add_option("what", construct_what, "prop3 | prop4i | prop4ii | gss")
        ->required()
        ->check(CLI::IsMember({"prop3", "prop4i", "prop4ii", "gss"}));
    construct_cmd->add_option("--k", construct_k, "palette size (prop3/prop4i/prop4ii)");
    construct_cmd->add_option("--base", construct_base, "base graph file (gss)");
    construct_cmd->add_option("--out", construct_out, "output file, '-' for stdout");
    construct_cmd->add_option("--dot", construct_dot, "export the instance as DOT");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a theorem/proposition at desk scale");
    std::string verify_claim, verify_shape, verify_report, verify_dot;
    VerifyParams vp;
    vp.cap = default_cap;
    bool verify_extended = false;
    bool seed_given = false;
    verify_cmd->add_option("claim", verify_claim,
                           "bm5 | c3e5 | main | fourcri | bipar | dege | fiveedges | "
                           "prop3 | prop4i | prop4ii")
        ->required();
    verify_cmd->add_option("--k", vp.k, "palette size (default per claim)");
    verify_cmd->add_option("--trials", vp.trials, "number of sampled instances");
    verify_cmd->add_option("--seed", vp.seed, "RNG seed (required for randomized claims)")
        ->each([&seed_given](const std::string&) { seed_given = true; });
    verify_cmd->add_option("--max-n", vp.max_n, "max vertex count of sampled instances");
    verify_cmd->add_option("--cap", vp.cap, "max colorings per instance");
    verify_cmd->add_option("--shape", verify_shape,
                           "added-edge shape for 'main' (paths | cycles4plus | "
                           "complete_bipartite | matching)");
    verify_cmd->add_flag("--extended", verify_extended, "fourcri: include the K_4 base");
    verify_cmd->add_option("--report", verify_report, "write the outcome as JSON");
    verify_cmd->add_option("--dot", verify_dot, "export the first failure instance as DOT");

    // search
    auto* search_cmd = app.add_subcommand("search", "random counterexample search for the conjecture");
    ConjectureSearchParams sp;
    sp.cap = default_cap;
    std::string search_report, search_dot;
    bool search_seed_given = false;
    search_cmd->add_option("--k", sp.k, "palette size (>= 4)");
    search_cmd->add_option("--trials", sp.trials, "number of sampled instances");
    search_cmd->add_option("--seed", sp.seed, "RNG seed")
        ->each([&search_seed_given](const std::string&) { search_seed_given = true; });
    search_cmd->add_option("--ns-max", sp.n_s_max, "max size of side S");
    search_cmd->add_option("--nt-max", sp.n_t_max, "max size of side T");
    search_cmd->add_option("--cap", sp.cap, "max colorings per instance");
    search_cmd->add_option("--report", search_report, "write the outcome as JSON");
    search_cmd->add_option("--dot", search_dot, "export the first counterexample as DOT");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (count_cmd->parsed()) {
            GraphDocument doc = parse_graph(read_file(count_file));
            int k = resolve_k(doc, count_k);
            KempeClassReport report = count_kempe_classes(doc.to_graph(), k, count_cap);
            out << plural(report.num_colorings, "coloring") << ", "
                << plural(report.num_classes, "class") << "\n";
            if (!count_report.empty()) {
                json j;
                j["k"] = report.k;
                j["num_colorings"] = report.num_colorings;
                j["num_classes"] = report.num_classes;
                j["truncated"] = report.truncated;
                json reps = json::array();
                for (const auto& rep : report.representatives) reps.push_back(rep.colors());
                j["representatives"] = reps;
                write_file(count_report, j.dump(2) + "\n", out);
            }
            std::optional<Coloring> shown;
            if (!doc.colorings.empty() && doc.k) shown = doc.coloring(doc.colorings.begin()->first);
            maybe_export_dot(count_dot, doc, shown ? &*shown : nullptr, out);
            if (report.truncated) {
                err << "capacity: coloring cap " << count_cap << " reached; counts are partial\n";
                return kExitCapacity;
            }
            return kExitOk;
        }

        if (equiv_cmd->parsed()) {
            GraphDocument doc = parse_graph(read_file(equiv_file));
            if (equiv_k > 0) doc.k = equiv_k;
            if (!doc.k) throw input_error("no palette size: pass --k or store \"k\"");
            Coloring c1 = doc.coloring(equiv_c1);
            Coloring c2 = doc.coloring(equiv_c2);
            EquivalenceResult result = are_kempe_equivalent(doc.to_graph(), c1, c2, equiv_cap);
            maybe_export_dot(equiv_dot, doc, &c1, out);
            switch (result.verdict) {
                case Verdict::equivalent:
                    out << "equivalent, witness length " << result.witness.size() << "\n";
                    return kExitOk;
                case Verdict::not_equivalent:
                    out << "not equivalent\n";
                    return kExitOk;
                case Verdict::undecided:
                    out << "undecided, visited cap " << equiv_cap << " reached\n";
                    return kExitCapacity;
            }
        }

        if (construct_cmd->parsed()) {
            GraphDocument doc;
            std::optional<Coloring> shown;
            if (construct_what == "gss") {
                if (construct_base.empty())
                    throw input_error("construct gss requires --base <file>");
                GadgetMap map = gstarstar(parse_graph(read_file(construct_base)).to_graph());
                doc = GraphDocument::from_partitioned(map.partitioned);
                doc.k = 4;
            } else {
                if (construct_k <= 0)
                    throw input_error("construct " + construct_what + " requires --k");
                CertifiedPair pair;
                if (construct_what == "prop3") pair = prop3_graph(construct_k);
                else if (construct_what == "prop4i") pair = prop4i_graph(construct_k);
                else pair = prop4ii_graph(construct_k);
                doc = GraphDocument::from_partitioned(pair.pg);
                doc.k = pair.k;
                doc.colorings["c1"] = pair.c1.colors();
                doc.colorings["c2"] = pair.c2.colors();
                shown = pair.c1;
            }
            write_file(construct_out, serialize_graph(doc), out);
            maybe_export_dot(construct_dot, doc, shown ? &*shown : nullptr, out);
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            Claim claim = parse_claim(verify_claim);
            if (claim_is_randomized(claim) && !seed_given)
                throw input_error("claim '" + verify_claim +
                                  "' is randomized: --seed is required");
            if (!verify_shape.empty()) vp.shape = parse_added_shape(verify_shape);
            vp.extended = verify_extended;
            VerificationOutcome outcome = verify_theorem(claim, vp);
            print_outcome(outcome, out);
            maybe_write_report(verify_report, outcome, out);
            if (!verify_dot.empty() && !outcome.failures.empty() &&
                !outcome.failures.front().instance_json.empty()) {
                GraphDocument doc = parse_graph(outcome.failures.front().instance_json);
                maybe_export_dot(verify_dot, doc, nullptr, out);
            }
            if (!outcome.failures.empty() && claim_is_proved_theorem(claim)) {
                err << "FAIL: proved claim '" << outcome.claim << "' has "
                    << outcome.failures.size() << " failing instance(s); this is a bug\n";
                return kExitClaimFailure;
            }
            return kExitOk;
        }

        if (search_cmd->parsed()) {
            if (!search_seed_given) throw input_error("search requires --seed");
            VerificationOutcome outcome = conjecture_search(sp);
            print_outcome(outcome, out);
            maybe_write_report(search_report, outcome, out);
            if (!outcome.failures.empty()) {
                err << "NOTE: " << outcome.failures.size()
                    << " counterexample candidate(s) found; instances printed above replay "
                       "deterministically\n";
                if (!search_dot.empty()) {
                    GraphDocument doc = parse_graph(outcome.failures.front().instance_json);
                    maybe_export_dot(search_dot, doc, nullptr, out);
                }
            }
            return kExitOk;
        }
    } catch (const capacity_error& e) {
        err << "capacity: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitClaimFailure;
    }
    return kExitUsage;
}

} // namespace kempe
