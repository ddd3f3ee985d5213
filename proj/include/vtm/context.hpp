#pragma once

#include "vtm/propagation.hpp"
#include "vtm/taxonomy.hpp"

#include <map>
#include <set>
#include <string>

namespace vtm {

struct ContextParams {
    double max_ratio = 2.0; // > 1
    double epsilon = 0.1;   // > 0
    double max_delta = 1.0; // > epsilon
};

/// A situation: the property nodes that define when it holds, its
/// domain-specific tuning parameters, and the importance it assigns to
/// property leaves (independent of the general taxonomy's importances).
struct ContextSpec {
    std::string id;
    std::set<std::string> defining_properties;
    ContextParams params;
    std::map<std::string, double> leaf_importance;
};

/// How relevant property nodes are selected when pruning.
struct RelevanceStrategy {
    enum class Kind { NonZero, Threshold, KMeans2 };

    Kind kind = Kind::NonZero;
    double theta = 0.0; // Threshold only, in [-1, 1]

    static RelevanceStrategy non_zero() { return {Kind::NonZero, 0.0}; }
    static RelevanceStrategy threshold(double theta) { return {Kind::Threshold, theta}; }
    static RelevanceStrategy kmeans2() { return {Kind::KMeans2, 0.0}; }
};

struct ContextTaxonomyResult {
    PropagationOutcome outcome;
    Taxonomy taxonomy; // meaningful iff outcome.completed()
};

/// Throws PreconditionError when ctx names unknown nodes, label nodes, or
/// carries parameters or importances outside their bounds.
void check_context(const ContextSpec& ctx, const Taxonomy& t);

/// Rebuilds the taxonomy for a context: same nodes and edges, importance
/// seeded from ctx.leaf_importance on property nodes only, then propagated.
/// The general taxonomy's importances are ignored entirely.
ContextTaxonomyResult build_context_taxonomy(const Taxonomy& general, const ContextSpec& ctx,
                                             double tol = kDefaultTol);

/// Keeps the relevant property nodes plus every node on a root path to one of
/// them, restricts importances to property nodes and re-propagates so the
/// pruned structure is coherent. Every property node must carry an
/// importance.
Taxonomy prune(const Taxonomy& ctx_taxonomy, const RelevanceStrategy& strategy,
               double tol = kDefaultTol);

/// 1-D 2-means over the importance values, seeds at min and max, Lloyd
/// iterations until the centroids shift by less than 1e-12. Returns the
/// cluster with the higher centroid; with fewer than two distinct values all
/// nodes are relevant. Ties join the higher cluster.
std::set<std::string> kmeans2_relevant(const std::map<std::string, double>& importances);

/// True iff every defining property of ctx is satisfied in the world state.
bool context_holds(const ContextSpec& ctx, const WorldState& world, const Taxonomy& t);

} // namespace vtm
