// Command-line surface for the dissociation-set engine: exact counts,
// closed forms, potted enumeration, family construction, and the
// verification sweeps, with human/CSV/JSON output.

#include "dissoc/json_io.hpp"
#include "dissoc/verifier.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace dissoc;

namespace {

enum class Format { Human, Csv, Json };

struct GlobalOpts {
    Format format = Format::Human;
    std::string out_path; // empty = stdout
    int jobs = 1;
    int cap = kDefaultOracleCap;
};

void write_output(const GlobalOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw FormatError("cannot open output file: " + opts.out_path);
    out << text;
}

Graph load_graph(const std::string& path) { return graph_from_json(load_json_file(path)); }

std::string join(const std::vector<std::string>& xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

std::string human_theorem(const std::vector<TheoremReport>& reports) {
    std::ostringstream out;
    out << std::left << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(10) << "bound"
        << std::setw(10) << "observed" << std::setw(22) << "verdict"
        << "argmax" << '\n';
    for (const auto& r : reports) {
        out << std::left << std::setw(4) << r.n << std::setw(4) << r.k << std::setw(10)
            << r.bound.value << std::setw(10) << r.observed_max << std::setw(22)
            << verdict_name(r.verdict) << join(r.argmax_codes, ' ') << '\n';
    }
    return out.str();
}

std::string human_tables(const std::vector<TableReport>& reports) {
    std::ostringstream out;
    for (const auto& rep : reports) {
        out << "Table " << rep.table_id << ": " << (rep.all_pass ? "PASS" : "FAIL") << '\n';
        for (const auto& inst : rep.instances) {
            out << "  n=" << inst.n << " " << inst.shape << (inst.all_pass ? "" : "  <-- FAIL") << '\n';
            for (const auto& cell : inst.cells)
                out << "    " << std::left << std::setw(4) << cell.label << " removed-v=" << std::setw(6)
                    << cell.observed_v << " removed-N(v)=" << std::setw(6) << cell.observed_nv
                    << (cell.pass ? "" : "  <-- FAIL") << '\n';
        }
    }
    return out.str();
}

std::string human_small(const std::vector<SmallCaseReport>& reports) {
    std::ostringstream out;
    for (const auto& rep : reports)
        for (const auto& row : rep.rows)
            out << "k=" << rep.k << " n=" << row.n << " " << std::left << std::setw(36) << row.check
                << (row.pass ? "PASS  " : "FAIL  ") << row.detail << '\n';
    return out.str();
}

std::string human_structure(const std::vector<StructureReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        out << "k=" << r.k << " orders=";
        for (std::size_t i = 0; i < r.orders.size(); ++i) out << (i ? "+" : "") << r.orders[i];
        out << " max=" << r.observed_max << " " << (r.match ? "MATCH" : "MISMATCH") << '\n'
            << "  argmax:    " << join(r.argmax_codes, ' ') << '\n'
            << "  predicted: " << join(r.predicted_codes, ' ') << '\n';
    }
    return out.str();
}

std::string human_inequalities(const InequalityReport& rep) {
    std::ostringstream out;
    out << "instances checked: " << rep.instances_checked << '\n'
        << "counterexamples:   " << rep.counterexamples.size() << '\n'
        << "equality mismatches: " << rep.equality_mismatches.size() << '\n'
        << (rep.all_pass ? "PASS" : "FAIL") << '\n';
    for (const auto& c : rep.counterexamples) out << "  violated: " << c << '\n';
    for (const auto& c : rep.equality_mismatches) out << "  equality: " << c << '\n';
    return out.str();
}

std::vector<int> parse_orders(const std::string& text) {
    std::vector<int> orders;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!part.empty()) orders.push_back(std::stoi(part));
    if (orders.empty()) throw DomainError("--orders: expected a comma-separated list");
    return orders;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting and verification of maximum dissociation sets in potted graphs"};
    app.require_subcommand(1);

    GlobalOpts opts;
    if (const char* env_cap = std::getenv("DISSOC_CAP_N")) opts.cap = std::atoi(env_cap);

    std::map<std::string, Format> format_names{
        {"human", Format::Human}, {"csv", Format::Csv}, {"json", Format::Json}};
    app.add_option("--format", opts.format, "Output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    app.add_option("--out", opts.out_path, "Write output to a file instead of stdout");
    app.add_option("--jobs", opts.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--cap", opts.cap, "Search order cap (also env DISSOC_CAP_N)");

    // diss <graph.json>
    std::string graph_path;
    auto* diss_cmd = app.add_subcommand("diss", "Exact diss(G) and m(G) for a graph file");
    diss_cmd->add_option("graph", graph_path, "Graph JSON file")->required();

    // classify <graph.json> --vertex V
    int classify_vertex = 0;
    auto* classify_cmd = app.add_subcommand("classify", "Counts split by a vertex state");
    classify_cmd->add_option("graph", graph_path, "Graph JSON file")->required();
    classify_cmd->add_option("--vertex", classify_vertex, "Distinguished vertex")->required();

    // closed path|cycle N
    std::string closed_kind;
    long long closed_n = 0;
    auto* closed_cmd = app.add_subcommand("closed", "Closed forms for paths and cycles");
    closed_cmd->add_option("kind", closed_kind, "path or cycle")
        ->check(CLI::IsMember({"path", "cycle"}))
        ->required();
    closed_cmd->add_option("n", closed_n, "Order")->required();

    // anchor K
    long long anchor_k = 0;
    auto* anchor_cmd = app.add_subcommand("anchor", "Cycle anchor split (m(C_k,u^-), u^0, u^1)");
    anchor_cmd->add_option("k", anchor_k, "Cycle order")->required();

    // bound --n N --k K
    long long bound_n = 0, bound_k = 0;
    auto* bound_cmd = app.add_subcommand("bound", "Maximum of m over P(n,k) with predicted families");
    bound_cmd->add_option("--n", bound_n)->required();
    bound_cmd->add_option("--k", bound_k)->required();

    // enumerate --n N --k K [--emit]
    int enum_n = 0, enum_k = 0;
    bool enum_emit = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "All non-isomorphic potted graphs of P(n,k)");
    enum_cmd->add_option("--n", enum_n)->required();
    enum_cmd->add_option("--k", enum_k)->required();
    enum_cmd->add_flag("--emit", enum_emit, "Emit full graphs, not just canonical codes");

    // family --id ID --n N [--k K]
    std::string family_id;
    int fam_n = 0, fam_k = 0;
    auto* family_cmd = app.add_subcommand("family", "Members of an extremal family at a given order");
    family_cmd->add_option("--id", family_id, "T1..T5, H, G1..G9")->required();
    family_cmd->add_option("--n", fam_n)->required();
    family_cmd->add_option("--k", fam_k, "Cycle order (potted families)");

    // verify --mode ... --k K [--n-min A --n-max B] [...]
    std::string verify_mode;
    int verify_k = 0, verify_nmin = 0, verify_nmax = 0, verify_maxn = 12;
    std::string verify_orders;
    InequalityBudget budget;
    auto* verify_cmd = app.add_subcommand("verify", "Verification sweeps");
    verify_cmd->add_option("--mode", verify_mode, "theorem|structure|tables|inequalities|small")
        ->check(CLI::IsMember({"theorem", "structure", "tables", "inequalities", "small"}))
        ->required();
    verify_cmd->add_option("--k", verify_k, "Cycle order");
    verify_cmd->add_option("--n-min", verify_nmin, "Sweep lower bound (default k+1)");
    verify_cmd->add_option("--n-max", verify_nmax, "Sweep upper bound (default k+9)");
    verify_cmd->add_option("--orders", verify_orders, "Component orders, e.g. 3,4 (structure mode)");
    verify_cmd->add_option("--max-n", verify_maxn, "Largest instance order (tables mode)");
    verify_cmd->add_option("--t-max", budget.t_max, "Partition total budget");
    verify_cmd->add_option("--l-max", budget.l_max, "l budget");
    verify_cmd->add_option("--m-extra", budget.m_extra, "m ranges over l+3..l+m-extra");
    verify_cmd->add_option("--s-max", budget.s_max, "s budget");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*diss_cmd) {
            Graph g = load_graph(graph_path);
            DissResult r = solve(g, SolveMode::Count, opts.cap);
            switch (opts.format) {
                case Format::Json:
                    write_output(opts, nlohmann::json{{"diss", r.diss}, {"count", r.count}}.dump() + "\n");
                    break;
                case Format::Csv:
                    write_output(opts, "diss,m\n" + std::to_string(r.diss) + "," + std::to_string(r.count) + "\n");
                    break;
                default:
                    write_output(opts, "diss=" + std::to_string(r.diss) + " m=" + std::to_string(r.count) + "\n");
            }
        } else if (*classify_cmd) {
            Graph g = load_graph(graph_path);
            ClassifiedCounts c = classify(g, classify_vertex, opts.cap);
            switch (opts.format) {
                case Format::Json:
                    write_output(opts, nlohmann::json{{"minus", c.minus}, {"zero", c.zero}, {"one", c.one}}.dump() + "\n");
                    break;
                case Format::Csv:
                    write_output(opts, "minus,zero,one\n" + std::to_string(c.minus) + "," +
                                           std::to_string(c.zero) + "," + std::to_string(c.one) + "\n");
                    break;
                default:
                    write_output(opts, "m(G,v^-)=" + std::to_string(c.minus) +
                                           " m(G,v^0)=" + std::to_string(c.zero) +
                                           " m(G,v^1)=" + std::to_string(c.one) + "\n");
            }
        } else if (*closed_cmd) {
            long long m = closed_kind == "path" ? closed_form::m_path(closed_n)
                                                : closed_form::m_cycle(closed_n);
            long long d = closed_kind == "path" ? closed_form::diss_path(closed_n)
                                                : closed_form::diss_cycle(closed_n);
            switch (opts.format) {
                case Format::Json:
                    write_output(opts, nlohmann::json{{"m", m}, {"diss", d}}.dump() + "\n");
                    break;
                case Format::Csv:
                    write_output(opts, "m,diss\n" + std::to_string(m) + "," + std::to_string(d) + "\n");
                    break;
                default:
                    write_output(opts, "m=" + std::to_string(m) + " diss=" + std::to_string(d) + "\n");
            }
        } else if (*anchor_cmd) {
            closed_form::AnchorSplit s = closed_form::anchor_split(anchor_k);
            switch (opts.format) {
                case Format::Json:
                    write_output(opts, nlohmann::json{{"minus", s.minus}, {"zero", s.zero}, {"one", s.one}}.dump() + "\n");
                    break;
                case Format::Csv:
                    write_output(opts, "minus,zero,one\n" + std::to_string(s.minus) + "," +
                                           std::to_string(s.zero) + "," + std::to_string(s.one) + "\n");
                    break;
                default:
                    write_output(opts, "m(C,u^-)=" + std::to_string(s.minus) +
                                           " m(C,u^0)=" + std::to_string(s.zero) +
                                           " m(C,u^1)=" + std::to_string(s.one) + "\n");
            }
        } else if (*bound_cmd) {
            closed_form::BoundResult b = closed_form::theorem_bound(bound_n, bound_k);
            if (opts.format == Format::Json) {
                nlohmann::json cands = nlohmann::json::array();
                for (const auto& c : b.candidates) cands.push_back({{"name", c.name}, {"value", c.value}});
                nlohmann::json fams = nlohmann::json::array();
                for (FamilyId id : b.families) fams.push_back(family_name(id));
                write_output(opts, nlohmann::json{{"value", b.value}, {"candidates", cands}, {"families", fams}}.dump() + "\n");
            } else {
                std::ostringstream out;
                out << "value=" << b.value;
                out << " candidates=";
                for (std::size_t i = 0; i < b.candidates.size(); ++i)
                    out << (i ? "," : "") << b.candidates[i].name << "=" << b.candidates[i].value;
                out << " families=";
                for (std::size_t i = 0; i < b.families.size(); ++i)
                    out << (i ? "," : "") << family_name(b.families[i]);
                out << "\n";
                write_output(opts, out.str());
            }
        } else if (*enum_cmd) {
            std::vector<PottedGraph> graphs = enumerate_potted(enum_n, enum_k, opts.cap);
            if (opts.format == Format::Json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& p : graphs) {
                    nlohmann::json rec{{"code", canonical_code(p)}};
                    if (enum_emit) {
                        rec["potted"] = potted_to_json(p);
                        rec["graph"] = graph_to_json(flatten_potted(p));
                    }
                    arr.push_back(rec);
                }
                write_output(opts, nlohmann::json{{"n", enum_n}, {"k", enum_k},
                                                  {"count", graphs.size()}, {"members", arr}}.dump() + "\n");
            } else {
                std::ostringstream out;
                out << "count=" << graphs.size() << "\n";
                if (enum_emit || opts.format == Format::Csv)
                    for (const auto& p : graphs) out << canonical_code(p) << "\n";
                write_output(opts, out.str());
            }
        } else if (*family_cmd) {
            FamilyId id = family_from_name(family_id);
            auto members = enumerate_family(id, fam_n, fam_k);
            if (opts.format == Format::Json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& m : members)
                    arr.push_back({{"descriptor", descriptor_to_json(m.descriptor)}, {"code", m.code}});
                write_output(opts, arr.dump() + "\n");
            } else {
                std::ostringstream out;
                for (const auto& m : members) {
                    out << m.code << "  p4=" << m.descriptor.p4 << " k13=" << m.descriptor.k13;
                    if (m.descriptor.id == FamilyId::H)
                        out << " form=" << (m.descriptor.variant == 0 ? "P3" : "P2P2");
                    out << "\n";
                }
                write_output(opts, out.str());
            }
        } else if (*verify_cmd) {
            bool all_ok = true;
            std::string text;
            if (verify_mode == "theorem" || verify_mode == "small") {
                if (verify_k < 3) throw DomainError("verify: --k >= 3 required for this mode");
            }
            if (verify_mode == "theorem") {
                int n_min = verify_nmin > 0 ? verify_nmin : verify_k + 1;
                int n_max = verify_nmax > 0 ? verify_nmax : verify_k + 9;
                auto reports = sweep_theorem(verify_k, n_min, n_max, opts.jobs, opts.cap);
                for (const auto& r : reports) all_ok = all_ok && r.verdict == Verdict::MATCH;
                text = opts.format == Format::Json ? theorem_reports_to_json(reports).dump(2) + "\n"
                       : opts.format == Format::Csv ? theorem_reports_csv(reports)
                                                    : human_theorem(reports);
            } else if (verify_mode == "structure") {
                std::vector<std::vector<int>> batteries;
                if (!verify_orders.empty()) {
                    batteries.push_back(parse_orders(verify_orders));
                } else {
                    if (verify_k < 3) throw DomainError("verify: --k >= 3 required for this mode");
                    batteries = {{3}, {4}, {5}, {3, 3}};
                    if (verify_k % 3 != 0) batteries.push_back({3, 1});
                }
                std::vector<StructureReport> reports;
                for (const auto& orders : batteries)
                    reports.push_back(verify_structure_theorem(orders, verify_k, opts.cap));
                for (const auto& r : reports) all_ok = all_ok && r.match;
                text = opts.format == Format::Json ? structure_reports_to_json(reports).dump(2) + "\n"
                       : opts.format == Format::Csv ? structure_report_csv(reports)
                                                    : human_structure(reports);
            } else if (verify_mode == "tables") {
                auto reports = verify_appendix_tables(verify_maxn, opts.cap);
                for (const auto& r : reports) all_ok = all_ok && r.all_pass;
                text = opts.format == Format::Json ? table_reports_to_json(reports).dump(2) + "\n"
                       : opts.format == Format::Csv ? table_reports_csv(reports)
                                                    : human_tables(reports);
            } else if (verify_mode == "inequalities") {
                InequalityReport report = verify_inequality_lemmas(budget);
                all_ok = report.all_pass;
                text = opts.format == Format::Json ? inequality_report_to_json(report).dump(2) + "\n"
                       : opts.format == Format::Csv ? inequality_report_csv(report)
                                                    : human_inequalities(report);
            } else { // small
                std::vector<SmallCaseReport> reports = {verify_small_cases(verify_k, opts.cap)};
                all_ok = reports[0].all_pass;
                text = opts.format == Format::Json ? small_case_reports_to_json(reports).dump(2) + "\n"
                       : opts.format == Format::Csv ? small_case_reports_csv(reports)
                                                    : human_small(reports);
            }
            write_output(opts, text);
            return all_ok ? 0 : 2;
        }
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 1;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
