#include "vtm/context.hpp"

#include "graph_index.hpp"
#include "vtm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vtm {

namespace {

const Node& property_node_or_throw(const Taxonomy& t, const std::string& id,
                                   const char* role) {
    const Node* node = t.find(id);
    if (node == nullptr) {
        throw UnknownNodeError(id);
    }
    if (node->kind != NodeKind::Property) {
        throw PreconditionError(std::string(role) + " names label node '" + id +
                                "'; only property nodes are allowed");
    }
    return *node;
}

} // namespace

void check_context(const ContextSpec& ctx, const Taxonomy& t) {
    if (!(ctx.params.max_ratio > 1.0)) {
        throw PreconditionError("context '" + ctx.id + "': max_ratio must be > 1");
    }
    if (!(ctx.params.epsilon > 0.0) || !(ctx.params.max_delta > ctx.params.epsilon)) {
        throw PreconditionError("context '" + ctx.id +
                                "': requires 0 < epsilon < max_delta");
    }
    for (const auto& id : ctx.defining_properties) {
        property_node_or_throw(t, id, "defining_properties");
    }
    for (const auto& [id, v] : ctx.leaf_importance) {
        property_node_or_throw(t, id, "leaf_importance");
        if (!(v >= -1.0 && v <= 1.0)) {
            throw PreconditionError("context '" + ctx.id + "': importance of '" + id +
                                    "' must lie in [-1, 1]");
        }
    }
}

ContextTaxonomyResult build_context_taxonomy(const Taxonomy& general, const ContextSpec& ctx,
                                             double tol) {
    check_context(ctx, general);
    Taxonomy seeded;
    seeded.nodes = general.nodes;
    seeded.edges = general.edges;
    seeded.importance = ctx.leaf_importance;

    ContextTaxonomyResult result;
    result.outcome = propagate(seeded, tol);
    if (result.outcome.completed()) {
        seeded.importance = result.outcome.importance;
        result.taxonomy = std::move(seeded);
    }
    return result;
}

Taxonomy prune(const Taxonomy& ctx_taxonomy, const RelevanceStrategy& strategy, double tol) {
    const auto props = property_nodes(ctx_taxonomy);
    std::map<std::string, double> prop_importance;
    for (const auto& id : props) {
        auto it = ctx_taxonomy.importance.find(id);
        if (it == ctx_taxonomy.importance.end()) {
            throw PreconditionError("prune: property node '" + id + "' has no importance");
        }
        prop_importance.emplace(id, it->second);
    }

    std::set<std::string> relevant;
    switch (strategy.kind) {
        case RelevanceStrategy::Kind::NonZero:
            for (const auto& [id, v] : prop_importance) {
                if (v != 0.0) {
                    relevant.insert(id);
                }
            }
            break;
        case RelevanceStrategy::Kind::Threshold:
            for (const auto& [id, v] : prop_importance) {
                if (v > strategy.theta) {
                    relevant.insert(id);
                }
            }
            break;
        case RelevanceStrategy::Kind::KMeans2:
            if (!prop_importance.empty()) {
                relevant = kmeans2_relevant(prop_importance);
            }
            break;
    }

    // Upward closure: a retained node pulls in all of its parents, so the
    // kept set is the relevant nodes plus every node on a root path to one.
    detail::GraphIndex g(ctx_taxonomy);
    std::set<std::string> kept = relevant;
    std::vector<int> stack;
    for (const auto& id : relevant) {
        stack.push_back(g.find(id));
    }
    while (!stack.empty()) {
        const int n = stack.back();
        stack.pop_back();
        for (int p : g.parents[n]) {
            if (kept.insert(g.ids[p]).second) {
                stack.push_back(p);
            }
        }
    }

    Taxonomy pruned;
    for (const auto& id : kept) {
        pruned.add_node(ctx_taxonomy.nodes.at(id));
    }
    for (const auto& [parent, child] : ctx_taxonomy.edges) {
        if (kept.contains(parent) && kept.contains(child)) {
            pruned.add_edge(parent, child);
        }
    }
    for (const auto& [id, v] : prop_importance) {
        if (kept.contains(id)) {
            pruned.importance.emplace(id, v);
        }
    }

    // Inner importances are recomputed on the pruned structure; values carried
    // over from the full structure would not be coherent here.
    auto outcome = propagate(pruned, tol);
    if (!outcome.completed()) {
        throw PropagationError(std::move(outcome));
    }
    pruned.importance = std::move(outcome.importance);
    return pruned;
}

std::set<std::string> kmeans2_relevant(const std::map<std::string, double>& importances) {
    if (importances.empty()) {
        throw PreconditionError("kmeans2_relevant: empty importance map");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& [id, v] : importances) {
        (void)id;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo == hi) {
        // fewer than two distinct values: everything is relevant
        std::set<std::string> all;
        for (const auto& [id, v] : importances) {
            (void)v;
            all.insert(id);
        }
        return all;
    }

    double c_lo = lo;
    double c_hi = hi;
    for (int iter = 0; iter < 10000; ++iter) {
        double sum_lo = 0.0, sum_hi = 0.0;
        int n_lo = 0, n_hi = 0;
        for (const auto& [id, v] : importances) {
            (void)id;
            if (std::abs(v - c_lo) < std::abs(v - c_hi)) {
                sum_lo += v;
                ++n_lo;
            } else {
                sum_hi += v; // ties join the higher cluster
                ++n_hi;
            }
        }
        const double next_lo = n_lo > 0 ? sum_lo / n_lo : c_lo;
        const double next_hi = n_hi > 0 ? sum_hi / n_hi : c_hi;
        const double shift = std::max(std::abs(next_lo - c_lo), std::abs(next_hi - c_hi));
        c_lo = next_lo;
        c_hi = next_hi;
        if (shift < 1e-12) {
            break;
        }
    }

    std::set<std::string> relevant;
    for (const auto& [id, v] : importances) {
        if (!(std::abs(v - c_lo) < std::abs(v - c_hi))) {
            relevant.insert(id);
        }
    }
    return relevant;
}

bool context_holds(const ContextSpec& ctx, const WorldState& world, const Taxonomy& t) {
    for (const auto& id : ctx.defining_properties) {
        const Node& node = property_node_or_throw(t, id, "defining_properties");
        if (!eval_predicate(*node.grounding, world)) {
            return false;
        }
    }
    return true;
}

} // namespace vtm
