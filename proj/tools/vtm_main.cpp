// vtm: command-line front end for value taxonomy files.
//
// Exit codes: 0 success, 1 usage, 2 validation, 3 incoherence,
// 4 infeasibility, 5 evaluation error.

#include "vtm/alignment.hpp"
#include "vtm/context.hpp"
#include "vtm/errors.hpp"
#include "vtm/holders.hpp"
#include "vtm/io.hpp"
#include "vtm/propagation.hpp"
#include "vtm/taxonomy.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIncoherent = 3;
constexpr int kExitInfeasible = 4;
constexpr int kExitEvaluation = 5;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write file: " + path);
    }
    out << content;
}

int propagation_failure(const vtm::PropagationOutcome& outcome) {
    using Status = vtm::PropagationOutcome::Status;
    if (outcome.status == Status::Incoherent) {
        std::cerr << "error: incoherent importance at node '" << outcome.node << "': expected "
                  << vtm::format_number(outcome.expected) << ", found "
                  << vtm::format_number(outcome.found) << "\n";
        return kExitIncoherent;
    }
    std::cerr << "error: infeasible importance at node '" << outcome.node << "': required "
              << vtm::format_number(outcome.required) << " outside [-1, 1]\n";
    return kExitInfeasible;
}

std::string format_score(double score) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", score);
    return buf;
}

vtm::RelevanceStrategy parse_strategy(const std::string& text) {
    if (text == "nonzero") {
        return vtm::RelevanceStrategy::non_zero();
    }
    if (text == "kmeans2") {
        return vtm::RelevanceStrategy::kmeans2();
    }
    if (text.rfind("threshold:", 0) == 0) {
        const std::string number = text.substr(10);
        std::size_t used = 0;
        double theta = 0.0;
        try {
            theta = std::stod(number, &used);
        } catch (const std::exception&) {
            throw UsageError("bad threshold value in --strategy: " + text);
        }
        if (used != number.size() || theta < -1.0 || theta > 1.0) {
            throw UsageError("bad threshold value in --strategy: " + text);
        }
        return vtm::RelevanceStrategy::threshold(theta);
    }
    throw UsageError("unknown strategy '" + text + "'; expected nonzero, threshold:<t> or kmeans2");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"value taxonomy toolkit: validation, propagation, context building, "
                 "pruning and alignment scoring"};
    app.require_subcommand(1);

    std::string taxonomy_path;
    std::string context_path;
    std::string world_path;
    std::string out_path;
    std::string report_path;
    std::string strategy_text = "nonzero";
    std::string variant_text = "simple";
    std::string op_text;
    std::string node_id;
    std::vector<std::string> taxonomy_paths;
    double tol = vtm::kDefaultTol;

    auto* cmd_validate = app.add_subcommand("validate", "check a taxonomy file");
    cmd_validate->add_option("taxonomy", taxonomy_path)->required();

    auto* cmd_propagate = app.add_subcommand("propagate", "complete the importance map");
    cmd_propagate->add_option("taxonomy", taxonomy_path)->required();
    cmd_propagate->add_option("--tol", tol, "comparison tolerance");
    cmd_propagate->add_option("-o,--output", out_path, "output file (stdout when absent)");

    auto* cmd_context = app.add_subcommand("context", "build a context-based taxonomy");
    cmd_context->add_option("taxonomy", taxonomy_path)->required();
    cmd_context->add_option("--context", context_path)->required();
    cmd_context->add_option("--tol", tol, "comparison tolerance");
    cmd_context->add_option("-o,--output", out_path, "output file (stdout when absent)");

    auto* cmd_prune = app.add_subcommand("prune", "drop branches of irrelevant properties");
    cmd_prune->add_option("taxonomy", taxonomy_path)->required();
    cmd_prune->add_option("--strategy", strategy_text, "nonzero | threshold:<t> | kmeans2");
    cmd_prune->add_option("--tol", tol, "comparison tolerance");
    cmd_prune->add_option("-o,--output", out_path, "output file (stdout when absent)");

    auto* cmd_align = app.add_subcommand("align", "score behaviour against a taxonomy");
    cmd_align->add_option("taxonomy", taxonomy_path)->required();
    cmd_align->add_option("--world", world_path)->required();
    cmd_align->add_option("--variant", variant_text, "simple | path-weighted");
    cmd_align->add_option("--report", report_path, "write the per-property report");

    auto* cmd_aggregate = app.add_subcommand("aggregate", "combine individual taxonomies");
    cmd_aggregate->add_option("taxonomies", taxonomy_paths)->required()->expected(-1);
    cmd_aggregate->add_option("--op", op_text, "mean | median | min")->required();
    cmd_aggregate->add_option("--tol", tol, "comparison tolerance");
    cmd_aggregate->add_option("-o,--output", out_path, "output file (stdout when absent)");

    auto* cmd_dot = app.add_subcommand("dot", "export GraphViz DOT");
    cmd_dot->add_option("taxonomy", taxonomy_path)->required();
    cmd_dot->add_option("-o,--output", out_path, "output file (stdout when absent)");

    auto* cmd_sd = app.add_subcommand("sd", "satisfaction degree of one property node");
    cmd_sd->add_option("taxonomy", taxonomy_path)->required();
    cmd_sd->add_option("--node", node_id)->required();
    cmd_sd->add_option("--world", world_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(cmd_validate)) {
            const auto t = vtm::parse_taxonomy(read_file(taxonomy_path), false);
            const auto report = vtm::validate(t);
            if (report.ok()) {
                std::cout << "ok\n";
                return kExitOk;
            }
            for (const auto& v : report.violations) {
                std::cout << "[" << v.rule << "] " << v.message << "\n";
            }
            return kExitValidation;
        }

        if (app.got_subcommand(cmd_propagate)) {
            auto t = vtm::parse_taxonomy(read_file(taxonomy_path));
            auto outcome = vtm::propagate(t, tol);
            if (!outcome.completed()) {
                return propagation_failure(outcome);
            }
            t.importance = std::move(outcome.importance);
            write_output(out_path, vtm::serialize_taxonomy(t));
            return kExitOk;
        }

        if (app.got_subcommand(cmd_context)) {
            const auto general = vtm::parse_taxonomy(read_file(taxonomy_path));
            const auto ctx = vtm::parse_context(read_file(context_path));
            auto result = vtm::build_context_taxonomy(general, ctx, tol);
            if (!result.outcome.completed()) {
                return propagation_failure(result.outcome);
            }
            write_output(out_path, vtm::serialize_taxonomy(result.taxonomy));
            return kExitOk;
        }

        if (app.got_subcommand(cmd_prune)) {
            const auto t = vtm::parse_taxonomy(read_file(taxonomy_path));
            const auto strategy = parse_strategy(strategy_text);
            const auto pruned = vtm::prune(t, strategy, tol);
            write_output(out_path, vtm::serialize_taxonomy(pruned));
            return kExitOk;
        }

        if (app.got_subcommand(cmd_align)) {
            const auto t = vtm::parse_taxonomy(read_file(taxonomy_path));
            const auto world = vtm::parse_world(read_file(world_path));
            vtm::AlignmentVariant variant;
            if (variant_text == "simple") {
                variant = vtm::AlignmentVariant::Simple;
            } else if (variant_text == "path-weighted") {
                variant = vtm::AlignmentVariant::PathWeighted;
            } else {
                throw UsageError("unknown variant '" + variant_text +
                                 "'; expected simple or path-weighted");
            }
            const auto report = vtm::align(t, world, variant);
            std::cout << format_score(report.score) << "\n";
            if (!report_path.empty()) {
                write_output(report_path, vtm::serialize_alignment_report(report));
            }
            return kExitOk;
        }

        if (app.got_subcommand(cmd_aggregate)) {
            std::vector<vtm::Taxonomy> taxonomies;
            taxonomies.reserve(taxonomy_paths.size());
            for (const auto& path : taxonomy_paths) {
                taxonomies.push_back(vtm::parse_taxonomy(read_file(path)));
            }
            vtm::CollectiveOp op;
            if (op_text == "mean") {
                op = vtm::CollectiveOp::Mean;
            } else if (op_text == "median") {
                op = vtm::CollectiveOp::Median;
            } else if (op_text == "min") {
                op = vtm::CollectiveOp::Min;
            } else {
                throw UsageError("unknown op '" + op_text + "'; expected mean, median or min");
            }
            const auto collective = vtm::aggregate_collective(taxonomies, op, tol);
            write_output(out_path, vtm::serialize_taxonomy(collective));
            return kExitOk;
        }

        if (app.got_subcommand(cmd_dot)) {
            const auto t = vtm::parse_taxonomy(read_file(taxonomy_path));
            write_output(out_path, vtm::export_dot(t));
            return kExitOk;
        }

        if (app.got_subcommand(cmd_sd)) {
            const auto t = vtm::parse_taxonomy(read_file(taxonomy_path));
            const auto world = vtm::parse_world(read_file(world_path));
            std::cout << format_score(vtm::sd_of(t, node_id, world)) << "\n";
            return kExitOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const vtm::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const vtm::PropagationError& e) {
        return propagation_failure(e.outcome);
    } catch (const vtm::EvaluationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEvaluation;
    } catch (const vtm::VtmError& e) {
        // unknown nodes, broken preconditions, structural mismatches
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    return kExitUsage;
}
