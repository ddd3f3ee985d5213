#pragma once

#include "vtm/taxonomy.hpp"

#include <map>
#include <string>
#include <vector>

namespace vtm {

/// The individual or collective a value system is attributed to. Collective
/// membership is non-empty and may nest, but no holder may contain itself
/// transitively.
struct HolderId {
    enum class Kind { Individual, Collective };

    std::string id;
    Kind kind = Kind::Individual;
    std::vector<HolderId> members; // Collective only
};

/// A holder's set of value taxonomies, keyed by value name.
struct ValueSystem {
    HolderId holder;
    std::map<std::string, Taxonomy> taxonomies;
};

/// One holder's view of another's value system. observer == subject is the
/// self-view.
struct BeliefView {
    HolderId observer;
    HolderId subject;
    ValueSystem system;
};

enum class CollectiveOp { Mean, Median, Min };

/// True iff the node sets (ids and kinds) and edge sets coincide; importances,
/// labels and groundings are ignored.
bool structural_equal(const Taxonomy& a, const Taxonomy& b);

/// Combines structurally identical taxonomies into a collective one: each
/// property node takes op over the individuals' importances (Median is the
/// lower median), inner nodes are then filled in by propagation. Nodes,
/// labels and groundings are taken from the first taxonomy.
Taxonomy aggregate_collective(const std::vector<Taxonomy>& individuals, CollectiveOp op,
                              double tol = kDefaultTol);

ValidationReport validate_holder(const HolderId& h);
ValidationReport validate_value_system(const ValueSystem& vs);

} // namespace vtm
