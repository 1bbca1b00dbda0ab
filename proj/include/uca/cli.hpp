#pragma once

#include "uca/io.hpp"
#include "uca/svg.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace uca {

/// Exit codes: 0 = sat / ok / valid / yes; 1 = unsat / invalid / no;
/// 2 = unknown (budget exhausted); 64 = input error.
namespace exit_code {
inline constexpr int yes = 0;
inline constexpr int no = 1;
inline constexpr int unknown = 2;
inline constexpr int input_error = 64;
} // namespace exit_code

namespace cli_detail {

inline json stats_to_json(const SolveStats& s) {
    return {{"orderings", s.orderings_explored},
            {"checks", s.feasibility_checks},
            {"seconds", s.elapsed_seconds}};
}

inline void require_no_clobber(const std::string& out_path,
                               const std::vector<std::string>& inputs) {
    for (const auto& in : inputs)
        if (!out_path.empty() && out_path == in)
            throw ParseError("output path would overwrite input: " + out_path);
}

inline int emit_outcome(std::ostream& out, const SolveOutcome& outcome,
                        const SolveInstance& inst, const std::string& witness_out,
                        const std::string& svg_out) {
    switch (outcome.verdict) {
    case Verdict::Sat:
        if (!witness_out.empty())
            save_text_file(witness_out, witness_to_json(*outcome.witness).dump(2) + "\n");
        if (!svg_out.empty()) save_text_file(svg_out, render_svg(inst, outcome.witness));
        out << json{{"outcome", "sat"}, {"stats", stats_to_json(outcome.stats)}}.dump()
            << "\n";
        return exit_code::yes;
    case Verdict::Unsat:
        out << json{{"outcome", "unsat"}, {"stats", stats_to_json(outcome.stats)}}.dump()
            << "\n";
        return exit_code::no;
    default:
        out << json{{"outcome", "unknown"}, {"stats", stats_to_json(outcome.stats)}}.dump()
            << "\n";
        return exit_code::unknown;
    }
}

inline json report_to_json(const ValidationReport& report) {
    json mism = json::array();
    for (const auto& m : report.mismatches)
        mism.push_back({{"u", m.u},
                        {"v", m.v},
                        {"distance", m.distance.str()},
                        {"kind", m.kind == MismatchKind::MissingEdge ? "missing-edge"
                                                                     : "extra-edge"}});
    return {{"mismatches", mism}, {"coverage", report.coverage_errors}};
}

} // namespace cli_detail

/// Runs one CLI invocation; argv follows main() conventions. All results go
/// to `out` as a single JSON line; diagnostics go to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"Exact decision toolkit for partial representation extension "
                 "on unit circular-arc graphs"};
    app.require_subcommand(1);

    std::string in_path, out_path, witness_path, svg_path, mode_flag;
    std::uint64_t budget_checks = 0;
    double budget_seconds = 0;
    int threads = 1;
    std::int64_t lemma_ell = 0;
    std::string lemma_window;

    auto add_budget_flags = [&](CLI::App* cmd) {
        cmd->add_option("--budget-checks", budget_checks,
                        "Max feasibility checks before giving up (0 = unlimited)");
        cmd->add_option("--budget-seconds", budget_seconds,
                        "Wall-clock limit in seconds (0 = unlimited)");
        cmd->add_option("--threads", threads, "Solver threads (currently single-threaded)")
            ->check(CLI::PositiveNumber);
    };

    auto* reduce = app.add_subcommand("reduce", "Build the RepExt instance of a "
                                                "3-partition instance");
    reduce->add_option("input", in_path, "3-partition JSON file")->required();
    reduce->add_option("--out", out_path, "Instance JSON output")->required();
    reduce->add_option("--mode", mode_flag, "Override the file's mode")
        ->check(CLI::IsMember({"checked", "unchecked"}));

    auto* solve_cmd = app.add_subcommand("solve", "Decide extendability of an instance");
    solve_cmd->add_option("input", in_path, "Instance JSON file")->required();
    solve_cmd->add_option("--witness-out", witness_path, "Witness JSON output (Sat only)");
    solve_cmd->add_option("--svg", svg_path, "Render the witness to SVG (Sat only)");
    add_budget_flags(solve_cmd);

    auto* check = app.add_subcommand("check", "Verify a witness against an instance");
    check->add_option("input", in_path, "Instance JSON file")->required();
    check->add_option("witness", witness_path, "Witness JSON file")->required();

    auto* oracle = app.add_subcommand("oracle", "Run the brute-force partition oracle");
    oracle->add_option("input", in_path, "3-partition JSON file")->required();
    oracle->add_option("--mode", mode_flag, "Override the file's mode")
        ->check(CLI::IsMember({"checked", "unchecked"}));

    auto* render = app.add_subcommand("render", "Render an instance (and witness) to SVG");
    render->add_option("input", in_path, "Instance JSON file")->required();
    render->add_option("witness", witness_path, "Witness JSON file (optional)");
    render->add_option("--svg", svg_path, "SVG output path")->required();

    auto* lemma = app.add_subcommand(
        "lemma", "Solve the path P_{2l} on a line window (span lemma check)");
    lemma->add_option("--l", lemma_ell, "Half the number of path vertices")
        ->required()
        ->check(CLI::PositiveNumber);
    lemma->add_option("--window", lemma_window, "Window length as p/q")->required();
    lemma->add_option("--witness-out", witness_path, "Witness JSON output (Sat only)");
    lemma->add_option("--svg", svg_path, "Render the witness to SVG (Sat only)");
    add_budget_flags(lemma);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_code::yes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::input_error;
    }

    Budget budget;
    if (budget_checks > 0) budget.max_feasibility_checks = budget_checks;
    if (budget_seconds > 0) budget.max_seconds = budget_seconds;

    try {
        if (*reduce) {
            require_no_clobber(out_path, {in_path});
            auto [inst, file_mode] = three_partition_from_json(load_json_file(in_path));
            PartitionMode mode = mode_flag.empty()
                                     ? file_mode
                                     : (mode_flag == "checked" ? PartitionMode::Checked
                                                               : PartitionMode::Unchecked);
            auto violations = validate_3p(inst, mode);
            if (!violations.empty()) {
                for (const auto& v : violations) err << "error: " << v << "\n";
                return exit_code::input_error;
            }
            SolveInstance rep_inst = reduce_to_repext(inst, mode);
            save_text_file(out_path, instance_to_json(rep_inst).dump(2) + "\n");
            out << json{{"outcome", "ok"},
                        {"circumference", rep_inst.domain.circumference().str()},
                        {"vertices", rep_inst.graph.vertices().size()},
                        {"edges", rep_inst.graph.edges().size()}}
                       .dump()
                << "\n";
            return exit_code::yes;
        }

        if (*solve_cmd) {
            require_no_clobber(witness_path, {in_path});
            require_no_clobber(svg_path, {in_path});
            SolveInstance inst = instance_from_json(load_json_file(in_path));
            auto report = inst.validate();
            if (!report.ok) {
                err << "error: partial representation does not validate: "
                    << report_to_json(report).dump() << "\n";
                return exit_code::input_error;
            }
            return emit_outcome(out, solve(inst, budget), inst, witness_path, svg_path);
        }

        if (*check) {
            SolveInstance inst = instance_from_json(load_json_file(in_path));
            Representation rep = witness_from_json(load_json_file(witness_path));
            auto report = validate_rep(inst.graph, rep, inst.domain);
            bool ext = extends(rep, inst.partial);
            if (report.ok && ext) {
                out << json{{"outcome", "valid"}}.dump() << "\n";
                return exit_code::yes;
            }
            json j = {{"outcome", "invalid"}, {"report", report_to_json(report)}};
            if (!ext) j["extends"] = false;
            out << j.dump() << "\n";
            return exit_code::no;
        }

        if (*oracle) {
            auto [inst, file_mode] = three_partition_from_json(load_json_file(in_path));
            PartitionMode mode = mode_flag.empty()
                                     ? file_mode
                                     : (mode_flag == "checked" ? PartitionMode::Checked
                                                               : PartitionMode::Unchecked);
            auto violations = validate_3p(inst, mode);
            if (!violations.empty()) {
                for (const auto& v : violations) err << "error: " << v << "\n";
                return exit_code::input_error;
            }
            auto witness = oracle_partition(inst, mode);
            if (!witness) {
                out << json{{"outcome", "none"}}.dump() << "\n";
                return exit_code::no;
            }
            out << json{{"outcome", "yes"},
                        {"witness", partition_witness_to_json(*witness)}}
                       .dump()
                << "\n";
            return exit_code::yes;
        }

        if (*render) {
            require_no_clobber(svg_path, {in_path, witness_path});
            SolveInstance inst = instance_from_json(load_json_file(in_path));
            std::optional<Representation> rep;
            if (!witness_path.empty()) {
                rep = witness_from_json(load_json_file(witness_path));
                auto report = validate_rep(inst.graph, *rep, inst.domain);
                if (!report.ok || !extends(*rep, inst.partial)) {
                    out << json{{"outcome", "invalid"}, {"report", report_to_json(report)}}
                               .dump()
                        << "\n";
                    return exit_code::no;
                }
            }
            save_text_file(svg_path, render_svg(inst, rep));
            out << json{{"outcome", "ok"}}.dump() << "\n";
            return exit_code::yes;
        }

        if (*lemma) {
            auto window = Rat::parse(lemma_window);
            if (!window) {
                err << "error: --window: malformed rational \"" << lemma_window << "\"\n";
                return exit_code::input_error;
            }
            std::vector<std::string> names;
            for (std::int64_t t = 0; t < 2 * lemma_ell; ++t)
                names.push_back("p0_" + std::to_string(t));
            Graph g(names);
            for (std::int64_t t = 0; t + 1 < 2 * lemma_ell; ++t)
                g.add_edge(names[static_cast<std::size_t>(t)],
                           names[static_cast<std::size_t>(t + 1)]);
            SolveInstance inst{std::move(g), Domain::line(*window), PartialRep{}};
            return emit_outcome(out, solve(inst, budget), inst, witness_path, svg_path);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_code::input_error;
    }
    return exit_code::input_error;
}

} // namespace uca
