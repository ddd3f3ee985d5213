// Acceptance suite. Runs every acceptance criterion end to end, printing one
// PASS/FAIL line per criterion, plus a block of CLI interface checks.
//
// Usage: vtm_acceptance <path-to-vtm-binary> <fixtures-dir>

#include "dot_check.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#include "vtm/alignment.hpp"
#include "vtm/context.hpp"
#include "vtm/errors.hpp"
#include "vtm/io.hpp"
#include "vtm/propagation.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace vtm;
using namespace vtm_test;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spit(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

class Harness {
  public:
    Harness(std::string vtm, fs::path fixtures, fs::path tmp)
        : vtm_(std::move(vtm)), fixtures_(std::move(fixtures)), tmp_(std::move(tmp)) {}

    CliResult run(const std::string& args) {
        const fs::path out_file = tmp_ / "stdout.txt";
        const fs::path err_file = tmp_ / "stderr.txt";
        const std::string command = "\"" + vtm_ + "\" " + args + " > \"" + out_file.string() +
                                    "\" 2> \"" + err_file.string() + "\"";
        const int status = std::system(command.c_str());
        CliResult result;
        result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        result.out = slurp(out_file);
        result.err = slurp(err_file);
        return result;
    }

    std::string fixture(const std::string& name) const {
        return "\"" + (fixtures_ / name).string() + "\"";
    }
    fs::path fixture_path(const std::string& name) const { return fixtures_ / name; }
    fs::path tmp_file(const std::string& name) const { return tmp_ / name; }
    std::string tmp_arg(const std::string& name) const {
        return "\"" + (tmp_ / name).string() + "\"";
    }

    void criterion(int number, const std::string& name, bool ok,
                   const std::string& detail = "") {
        line("criterion " + std::to_string(number) + ": " + name, ok, detail);
    }

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        line("interface: " + name, ok, detail);
    }

    void line(const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!ok && !detail.empty()) {
            std::cout << "  [" << detail << "]";
        }
        std::cout << "\n";
        failures_ += ok ? 0 : 1;
    }

    int failures() const { return failures_; }

  private:
    std::string vtm_;
    fs::path fixtures_;
    fs::path tmp_;
    int failures_ = 0;
};

// --- criterion 1: the worked alignment example prints 0.475000 in under 1 s

void criterion_worked_example(Harness& h) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = h.run("align " + h.fixture("single_parent_pruned.json") + " --world " +
                              h.fixture("world_mutual_aid.json"));
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    const bool ok = result.exit_code == 0 && result.out == "0.475000\n" && elapsed.count() < 1.0;
    h.criterion(1, "worked example aligns at 0.475000 in < 1 s", ok,
                "exit " + std::to_string(result.exit_code) + ", stdout '" + result.out +
                    "', seconds " + std::to_string(elapsed.count()));
}

// --- criterion 2: elderly pipeline prunes to the 4-node chain at 0.9

void criterion_elderly_pipeline(Harness& h) {
    const auto ctx = h.run("context " + h.fixture("uhelp_fairness.json") + " --context " +
                           h.fixture("ctx_elderly.json") + " -o " + h.tmp_arg("elderly.json"));
    const auto pruned = h.run("prune " + h.tmp_arg("elderly.json") + " --strategy nonzero -o " +
                              h.tmp_arg("elderly_pruned.json"));
    bool ok = ctx.exit_code == 0 && pruned.exit_code == 0;
    std::string detail;
    if (ok) {
        const auto t = parse_taxonomy(slurp(h.tmp_file("elderly_pruned.json")));
        const std::set<std::pair<std::string, std::string>> chain{
            {"fairness", "fair_treatment"},
            {"fair_treatment", "balanced_division"},
            {"balanced_division", "p3"}};
        ok = t.nodes.size() == 4 && t.edges == chain && t.importance.size() == 4;
        for (const auto& [id, v] : t.importance) {
            (void)id;
            ok = ok && std::abs(v - 0.9) <= 1e-9;
        }
        if (!ok) {
            detail = "pruned taxonomy is not the 0.9 chain: " + slurp(h.tmp_file("elderly_pruned.json"));
        }
    } else {
        detail = "exit codes " + std::to_string(ctx.exit_code) + "/" +
                 std::to_string(pruned.exit_code) + " " + ctx.err + pruned.err;
    }
    h.criterion(2, "elderly context prunes to the p3 chain at importance 0.9", ok, detail);
}

// --- criterion 3: single-parents pipeline keeps 7 nodes with fairness 0.75

void criterion_single_parent_pipeline(Harness& h) {
    const auto ctx = h.run("context " + h.fixture("uhelp_fairness.json") + " --context " +
                           h.fixture("ctx_single_parents.json") + " -o " +
                           h.tmp_arg("single.json"));
    const auto pruned = h.run("prune " + h.tmp_arg("single.json") + " --strategy nonzero -o " +
                              h.tmp_arg("single_pruned.json"));
    bool ok = ctx.exit_code == 0 && pruned.exit_code == 0;
    std::string detail;
    if (ok) {
        const auto t = parse_taxonomy(slurp(h.tmp_file("single_pruned.json")));
        ok = t.nodes.size() == 7 && t.nodes.contains("p1") && t.nodes.contains("p3") &&
             !t.nodes.contains("p2") && !t.nodes.contains("fitting_reward") &&
             t.importance.count("fairness") == 1 &&
             std::abs(t.importance.at("fairness") - 0.75) <= 1e-9;
        if (!ok) {
            detail = "unexpected pruned taxonomy: " + slurp(h.tmp_file("single_pruned.json"));
        }
    } else {
        detail = ctx.err + pruned.err;
    }
    h.criterion(3, "updated single-parents context keeps 7 nodes, fairness 0.75", ok, detail);
}

// --- criterion 4: propagation property suite over random taxonomies

void criterion_propagation_properties(Harness& h) {
    Rng rng(987654321);
    int completed = 0;
    std::string detail;
    bool ok = true;
    for (int round = 0; ok && round < 1000; ++round) {
        const auto t = random_dag_taxonomy(rng, 12, round % 3 != 0);
        if (!validate(t).ok()) {
            ok = false;
            detail = "generator produced an invalid taxonomy";
            break;
        }
        const auto out = propagate(t, 1e-9);

        const auto shuffled_out = propagate(shuffled_copy(t, rng), 1e-9);
        if (out.status != shuffled_out.status || out.importance != shuffled_out.importance ||
            out.node != shuffled_out.node) {
            ok = false;
            detail = "outcome depends on input ordering";
            break;
        }
        if (!out.completed()) {
            continue;
        }
        ++completed;
        for (const auto& [id, v] : t.importance) {
            if (!out.importance.count(id) || out.importance.at(id) != v) {
                ok = false;
                detail = "input importance altered at " + id;
            }
        }
        auto settled = t;
        settled.importance = out.importance;
        if (!check_coherence(settled, 1e-9).coherent()) {
            ok = false;
            detail = "completed output fails coherence";
        }
        if (!is_fixpoint(settled, 1e-9)) {
            ok = false;
            detail = "second propagation assigned new values";
        }
    }
    if (ok && completed < 500) {
        ok = false;
        detail = "only " + std::to_string(completed) + " completed outcomes";
    }
    h.criterion(4, "1000 random taxonomies: coherent, conservative, idempotent, order-free",
                ok, detail);
}

// --- criterion 5: aggregation axioms on random measure lists

void criterion_aggregation_axioms(Harness& h) {
    Rng rng(24601);
    bool ok = true;
    std::string detail;
    for (int round = 0; ok && round < 10000; ++round) {
        const int n = rng.between(1, 10);
        std::vector<double> values(n);
        for (double& v : values) {
            v = rng.real(-1.0, 1.0);
        }
        const double mean = aggregate(values);

        auto permuted = values;
        std::shuffle(permuted.begin(), permuted.end(), rng.engine);
        if (aggregate(permuted) != mean) {
            ok = false;
            detail = "symmetry broke";
        }
        const double lo = *std::min_element(values.begin(), values.end());
        const double hi = *std::max_element(values.begin(), values.end());
        if (mean < lo || mean > hi) {
            ok = false;
            detail = "compensativeness broke";
        }
        std::vector<double> constant(static_cast<std::size_t>(n), values.front());
        if (aggregate(constant) != values.front()) {
            ok = false;
            detail = "idempotence broke";
        }
        auto raised = values;
        for (double& v : raised) {
            v = std::min(1.0, v + rng.real(0.0, 0.5));
        }
        if (aggregate(raised) < mean) {
            ok = false;
            detail = "monotonicity broke";
        }
    }
    h.criterion(5, "aggregation axioms hold on 10000 random lists", ok, detail);
}

// --- criterion 6: satisfaction degree boundaries, knees and sign consistency

void criterion_satisfaction_boundaries(Harness& h) {
    bool ok = true;
    std::string detail;

    const double max_ratio = 5.0;
    auto ratio_world = [](std::uint64_t requests, std::uint64_t offers) {
        WorldState w;
        w.counters = {{"requests", requests}, {"offers", offers}};
        return w;
    };
    const SatisfactionSpec ratio = RatioThreshold{"requests", "offers", max_ratio};
    if (satisfaction_degree(ratio, ratio_world(1, 1)) != 0.0 ||
        satisfaction_degree(ratio, ratio_world(5, 1)) != 1.0 ||
        satisfaction_degree(ratio, ratio_world(0, 1)) != -1.0) {
        ok = false;
        detail = "ratio boundary values wrong";
    }

    // knee values picked to be exact in binary: emd([0.75, 0.25], U) = 0.25
    // and emd([1, 0], U) = 0.5
    const double epsilon = 0.25;
    const double max_delta = 0.5;
    const SatisfactionSpec uniformity =
        DistributionUniformity{"tasks", epsilon, max_delta, DistanceKind::Emd};
    auto tasks_world = [](std::vector<double> d) {
        WorldState w;
        w.distributions["tasks"] = std::move(d);
        return w;
    };
    if (satisfaction_degree(uniformity, tasks_world({0.5, 0.5})) != 1.0 ||
        satisfaction_degree(uniformity, tasks_world({0.75, 0.25})) != 0.0 ||
        satisfaction_degree(uniformity, tasks_world({1.0, 0.0})) != -1.0) {
        ok = false;
        detail = "uniformity boundary values wrong";
    }

    // knee continuity across a 1000-point sweep: both pieces shrink to 0 at
    // the knee at their Lipschitz rate
    const double ratio_slope = std::max(1.0, 1.0 / (max_ratio - 1.0));
    const double delta_slope = std::max(1.0 / epsilon, 1.0 / (max_delta - epsilon));
    for (int i = 1; ok && i <= 1000; ++i) {
        const double d = 1e-6 * i / 1000.0;
        const double above = (1.0 + d - 1.0) / (max_ratio - 1.0);
        const double below = (1.0 - d) - 1.0;
        if (std::abs(above) > 1e-9 + ratio_slope * d ||
            std::abs(below) > 1e-9 + ratio_slope * d ||
            std::abs(above - below) > 1e-9 + 2.0 * ratio_slope * d) {
            ok = false;
            detail = "ratio knee discontinuous";
        }
        const double sd_over = -((epsilon + d) - epsilon) / (max_delta - epsilon);
        const double sd_under = 1.0 - (epsilon - d) / epsilon;
        if (std::abs(sd_over) > 1e-9 + delta_slope * d ||
            std::abs(sd_under) > 1e-9 + delta_slope * d ||
            std::abs(sd_over - sd_under) > 1e-9 + 2.0 * delta_slope * d) {
            ok = false;
            detail = "uniformity knee discontinuous";
        }
    }

    Rng rng(1123);
    for (int round = 0; ok && round < 1000; ++round) {
        const auto world = random_world(rng);
        const SatisfactionSpec r = RatioThreshold{"requests", "offers", rng.real(1.5, 9.0)};
        if (eval_predicate(r, world) != (satisfaction_degree(r, world) > 0.0)) {
            ok = false;
            detail = "ratio predicate/degree sign mismatch";
        }
        const double eps = rng.real(0.01, 0.6);
        const SatisfactionSpec u = DistributionUniformity{
            "tasks", eps, eps + rng.real(0.01, 1.0),
            round % 2 == 0 ? DistanceKind::Emd : DistanceKind::Kl};
        if (eval_predicate(u, world) != (satisfaction_degree(u, world) > 0.0)) {
            ok = false;
            detail = "uniformity predicate/degree sign mismatch";
        }
    }
    h.criterion(6, "satisfaction degree boundaries, knees and sign consistency", ok, detail);
}

// --- criterion 7: incoherence detection exits 3 and names the parent

void criterion_incoherence_detection(Harness& h) {
    const auto result = h.run("propagate " + h.fixture("incoherent_parent.json"));
    const bool ok = result.exit_code == 3 && result.err.find("parent") != std::string::npos;
    h.criterion(7, "incoherent fixture exits with code 3 naming the parent", ok,
                "exit " + std::to_string(result.exit_code) + ", stderr '" + result.err + "'");
}

// --- criterion 8: alignment matches the brute-force oracle

void criterion_alignment_oracle(Harness& h) {
    Rng rng(8642);
    bool ok = true;
    std::string detail;
    for (int round = 0; ok && round < 100; ++round) {
        const int k = rng.between(1, 5);
        Taxonomy t;
        t.add_node(label("root"));
        std::map<std::string, double> importances;
        for (int i = 0; i < k; ++i) {
            const std::string id = "p" + std::to_string(i);
            t.add_node(property(id, RatioThreshold{"requests", "offers", rng.real(2.0, 8.0)}));
            t.add_edge("root", id);
            importances[id] = rng.real(-1.0, 1.0);
            t.importance[id] = importances[id];
        }
        if (rng.chance(0.5)) {
            t.add_node(label("alt"));
            t.add_edge("root", "alt");
            t.add_edge("alt", "p0");
        }
        const auto world = random_world(rng);

        std::map<std::string, double> degrees;
        std::map<std::string, std::uint64_t> paths;
        for (const auto& id : property_nodes(t)) {
            degrees[id] = sd_of(t, id, world);
            paths[id] = count_paths_oracle(t, id);
            if (count_paths(t, id) != paths[id]) {
                ok = false;
                detail = "count_paths disagrees with DFS enumeration";
            }
        }
        const double simple = align(t, world, AlignmentVariant::Simple).score;
        const double weighted = align(t, world, AlignmentVariant::PathWeighted).score;
        if (std::abs(simple - align_oracle(importances, degrees, paths, false)) > 1e-12) {
            ok = false;
            detail = "simple score differs from the oracle";
        }
        if (std::abs(weighted - align_oracle(importances, degrees, paths, true)) > 1e-12) {
            ok = false;
            detail = "path-weighted score differs from the oracle";
        }
    }
    h.criterion(8, "alignment matches the sum/divide oracle on 100 random taxonomies", ok,
                detail);
}

// --- criterion 9: round trips of fixtures and of every CLI output

void criterion_round_trips(Harness& h) {
    bool ok = true;
    std::string detail;

    const std::vector<std::pair<std::string, char>> fixtures{
        {"uhelp_fairness.json", 't'},      {"single_parent_pruned.json", 't'},
        {"incoherent_parent.json", 't'},   {"infeasible.json", 't'},
        {"member_alice.json", 't'},        {"member_bob.json", 't'},
        {"member_carol.json", 't'},        {"boolexpr_taxonomy.json", 't'},
        {"world_mutual_aid.json", 'w'},    {"ctx_elderly.json", 'c'},
        {"ctx_single_parents.json", 'c'},  {"value_system_community.json", 'v'}};
    for (const auto& [name, kind] : fixtures) {
        const std::string text = slurp(h.fixture_path(name));
        if (text.empty()) {
            ok = false;
            detail = name + " missing";
            continue;
        }
        std::string serialised;
        try {
            switch (kind) {
                case 't': serialised = serialize_taxonomy(parse_taxonomy(text)); break;
                case 'w': serialised = serialize_world(parse_world(text)); break;
                case 'c': serialised = serialize_context(parse_context(text)); break;
                case 'v': serialised = serialize_value_system(parse_value_system(text)); break;
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = name + ": " + e.what();
            continue;
        }
        if (serialised != text) {
            ok = false;
            detail = name + " is not canonical or does not round-trip";
        }
    }

    // every CLI output must re-parse (and the pipelines must be deterministic)
    const std::vector<std::pair<std::string, std::string>> commands{
        {"context " + h.fixture("uhelp_fairness.json") + " --context " +
             h.fixture("ctx_elderly.json"),
         "t"},
        {"context " + h.fixture("uhelp_fairness.json") + " --context " +
             h.fixture("ctx_single_parents.json"),
         "t"},
        {"propagate " + h.fixture("member_alice.json"), "t"},
        {"aggregate " + h.fixture("member_alice.json") + " " + h.fixture("member_bob.json") +
             " " + h.fixture("member_carol.json") + " --op mean",
         "t"},
        {"aggregate " + h.fixture("member_alice.json") + " " + h.fixture("member_bob.json") +
             " --op min",
         "t"},
    };
    for (const auto& [args, kind] : commands) {
        const auto first = h.run(args + " -o " + h.tmp_arg("roundtrip.json"));
        const std::string once = slurp(h.tmp_file("roundtrip.json"));
        const auto second = h.run(args + " -o " + h.tmp_arg("roundtrip2.json"));
        if (first.exit_code != 0 || second.exit_code != 0) {
            ok = false;
            detail = "command failed: " + args;
            continue;
        }
        if (once != slurp(h.tmp_file("roundtrip2.json"))) {
            ok = false;
            detail = "command not deterministic: " + args;
        }
        try {
            if (kind == "t" && serialize_taxonomy(parse_taxonomy(once)) != once) {
                ok = false;
                detail = "output not canonical: " + args;
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = "output does not re-parse: " + args + ": " + e.what();
        }
    }

    // prune output, alignment report and dot export
    h.run("context " + h.fixture("uhelp_fairness.json") + " --context " +
          h.fixture("ctx_single_parents.json") + " -o " + h.tmp_arg("ctx.json"));
    const auto prune_result =
        h.run("prune " + h.tmp_arg("ctx.json") + " -o " + h.tmp_arg("pruned.json"));
    try {
        const std::string once = slurp(h.tmp_file("pruned.json"));
        if (prune_result.exit_code != 0 || serialize_taxonomy(parse_taxonomy(once)) != once) {
            ok = false;
            detail = "prune output not canonical";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("prune output does not re-parse: ") + e.what();
    }

    const auto align_result =
        h.run("align " + h.fixture("single_parent_pruned.json") + " --world " +
              h.fixture("world_mutual_aid.json") + " --report " + h.tmp_arg("report.json"));
    try {
        const std::string report = slurp(h.tmp_file("report.json"));
        if (align_result.exit_code != 0 ||
            serialize_alignment_report(parse_alignment_report(report)) != report) {
            ok = false;
            detail = "alignment report not canonical";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("alignment report does not re-parse: ") + e.what();
    }

    const auto dot_result =
        h.run("dot " + h.fixture("single_parent_pruned.json") + " -o " + h.tmp_arg("graph.dot"));
    if (dot_result.exit_code != 0 || !dot_grammar_ok(slurp(h.tmp_file("graph.dot")))) {
        ok = false;
        detail = "dot output rejected by the grammar check";
    }

    h.criterion(9, "fixtures and CLI outputs round-trip canonically", ok, detail);
}

// --- supplementary CLI checks beyond the numbered criteria

void interface_checks(Harness& h) {
    h.run("context " + h.fixture("uhelp_fairness.json") + " --context " +
          h.fixture("ctx_single_parents.json") + " -o " + h.tmp_arg("ctx.json"));

    const auto ok_validate = h.run("validate " + h.fixture("uhelp_fairness.json"));
    h.check("validate accepts a good taxonomy with exit 0",
            ok_validate.exit_code == 0 && ok_validate.out == "ok\n");

    spit(h.tmp_file("broken.json"), R"({
      "format_version": 1,
      "values": [
        {"id": "p1", "kind": "property", "label": "p1",
         "grounding": {"kind": "ratio_threshold", "numerator": "requests",
                       "denominator": "offers", "max_ratio": 5}},
        {"id": "x", "kind": "label", "label": "x"}
      ],
      "edges": [["p1", "x"]],
      "importance": {}
    })");
    const auto bad_validate = h.run("validate " + h.tmp_arg("broken.json"));
    h.check("validate reports violations with exit 2",
            bad_validate.exit_code == 2 &&
                bad_validate.out.find("property-node-is-parent") != std::string::npos,
            "exit " + std::to_string(bad_validate.exit_code));

    const auto infeasible = h.run("propagate " + h.fixture("infeasible.json"));
    h.check("infeasible propagation exits 4",
            infeasible.exit_code == 4 && infeasible.err.find("outside") != std::string::npos,
            "exit " + std::to_string(infeasible.exit_code));

    spit(h.tmp_file("empty_world.json"), "{\n  \"format_version\": 1\n}\n");
    const auto eval_error = h.run("align " + h.fixture("single_parent_pruned.json") +
                                  " --world " + h.tmp_arg("empty_world.json"));
    h.check("missing metrics exit 5", eval_error.exit_code == 5,
            "exit " + std::to_string(eval_error.exit_code));

    const auto usage = h.run("prune " + h.fixture("uhelp_fairness.json") + " --strategy bogus");
    h.check("unknown strategy exits 1", usage.exit_code == 1,
            "exit " + std::to_string(usage.exit_code));

    const auto missing = h.run("align " + h.fixture("no_such_file.json") + " --world " +
                               h.fixture("world_mutual_aid.json"));
    h.check("missing input file exits 1", missing.exit_code == 1,
            "exit " + std::to_string(missing.exit_code));

    const auto sd = h.run("sd " + h.fixture("single_parent_pruned.json") + " --node p3 --world " +
                          h.fixture("world_mutual_aid.json"));
    h.check("sd prints the satisfaction degree", sd.exit_code == 0 && sd.out == "0.900000\n",
            "exit " + std::to_string(sd.exit_code) + " stdout '" + sd.out + "'");

    const auto sd_label = h.run("sd " + h.fixture("single_parent_pruned.json") +
                                " --node fairness --world " +
                                h.fixture("world_mutual_aid.json"));
    h.check("sd on a label node exits 2", sd_label.exit_code == 2,
            "exit " + std::to_string(sd_label.exit_code));

    const auto pw = h.run("align " + h.fixture("single_parent_pruned.json") + " --world " +
                          h.fixture("world_mutual_aid.json") + " --variant path-weighted");
    h.check("path-weighted variant is accepted", pw.exit_code == 0 && pw.out == "0.475000\n",
            "stdout '" + pw.out + "'");

    const auto kmeans = h.run("prune " + h.tmp_arg("ctx.json") + " --strategy kmeans2 -o " +
                              h.tmp_arg("kmeans_pruned.json"));
    bool kmeans_ok = kmeans.exit_code == 0;
    if (kmeans_ok) {
        const auto t = parse_taxonomy(slurp(h.tmp_file("kmeans_pruned.json")));
        kmeans_ok = t.nodes.contains("p1") && t.nodes.contains("p3") && !t.nodes.contains("p2");
    }
    h.check("kmeans2 pruning keeps the high-importance cluster", kmeans_ok);

    const auto threshold = h.run("prune " + h.tmp_arg("ctx.json") + " --strategy threshold:0.75 -o " +
                                 h.tmp_arg("threshold_pruned.json"));
    bool threshold_ok = threshold.exit_code == 0;
    if (threshold_ok) {
        const auto t = parse_taxonomy(slurp(h.tmp_file("threshold_pruned.json")));
        threshold_ok = t.nodes.contains("p1") && !t.nodes.contains("p3");
    }
    h.check("threshold pruning keeps only nodes above theta", threshold_ok);

    const auto mismatch = h.run("aggregate " + h.fixture("member_alice.json") + " " +
                                h.fixture("single_parent_pruned.json") + " --op mean");
    h.check("aggregating mismatched structures exits 2",
            mismatch.exit_code == 2 && mismatch.err.find("differs") != std::string::npos,
            "exit " + std::to_string(mismatch.exit_code));

    spit(h.tmp_file("bad_ctx.json"), R"({
      "format_version": 1,
      "id": "bad",
      "defining_properties": [],
      "params": {"epsilon": 0.2, "max_delta": 1, "max_ratio": 5},
      "leaf_importance": {"ghost": 0.5}
    })");
    const auto bad_ctx = h.run("context " + h.fixture("uhelp_fairness.json") + " --context " +
                               h.tmp_arg("bad_ctx.json"));
    h.check("context naming an unknown property exits 2", bad_ctx.exit_code == 2,
            "exit " + std::to_string(bad_ctx.exit_code));

    const auto loose = h.run("propagate " + h.fixture("incoherent_parent.json") + " --tol 0.5");
    h.check("a loose --tol accepts the incoherent fixture", loose.exit_code == 0,
            "exit " + std::to_string(loose.exit_code));
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: vtm_acceptance <path-to-vtm> <fixtures-dir>\n";
        return 2;
    }
    const fs::path tmp = fs::temp_directory_path() /
                         ("vtm_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(tmp);

    Harness h(argv[1], argv[2], tmp);
    criterion_worked_example(h);
    criterion_elderly_pipeline(h);
    criterion_single_parent_pipeline(h);
    criterion_propagation_properties(h);
    criterion_aggregation_axioms(h);
    criterion_satisfaction_boundaries(h);
    criterion_incoherence_detection(h);
    criterion_alignment_oracle(h);
    criterion_round_trips(h);
    interface_checks(h);

    fs::remove_all(tmp);
    if (h.failures() > 0) {
        std::cout << h.failures() << " check(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
