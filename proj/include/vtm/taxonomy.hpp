#pragma once

#include "vtm/grounding.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vtm {

/// Default tolerance for importance comparisons.
inline constexpr double kDefaultTol = 1e-9;

enum class NodeKind { Label, Property };

struct Node {
    std::string id;
    NodeKind kind = NodeKind::Label;
    std::string label;
    std::optional<SatisfactionSpec> grounding; // present iff kind == Property
};

/// DAG of value concepts. Label nodes name abstract values, property nodes
/// carry machine-checkable grounding semantics and may only appear as leaves.
/// importance is a partial map into [-1, 1]; absent means undefined.
struct Taxonomy {
    std::map<std::string, Node> nodes;                   // keyed by Node::id
    std::set<std::pair<std::string, std::string>> edges; // (parent, child)
    std::map<std::string, double> importance;

    void add_node(Node n);
    void add_edge(std::string parent, std::string child);
    const Node* find(const std::string& id) const;
};

struct Violation {
    std::string rule;    // stable rule identifier
    std::string subject; // offending node id or "parent->child" edge
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// True iff id is non-empty and made of [A-Za-z0-9_-] only.
bool valid_node_id(const std::string& id);

/// Checks every structural invariant; violations are data, not exceptions.
ValidationReport validate(const Taxonomy& t);

/// Nodes with no incoming edge, in lexicographic order.
std::vector<std::string> roots(const Taxonomy& t);

/// Children of n in lexicographic order. Throws UnknownNodeError.
std::vector<std::string> children(const Taxonomy& t, const std::string& n);

/// Ids of all property nodes, in lexicographic order.
std::vector<std::string> property_nodes(const Taxonomy& t);

/// True iff some strict descendant of any listed node has a defined
/// importance. Throws UnknownNodeError for ids not in t.
bool has_descendant_with_value(const Taxonomy& t, std::span<const std::string> ns);

/// Number of distinct directed root-to-n paths; a root counts 1.
std::uint64_t count_paths(const Taxonomy& t, const std::string& n);

/// Arithmetic mean of a non-empty list of measures in [-1, 1]. Values are
/// summed in sorted order and the result clamped to [min, max] so that the
/// symmetry, idempotence and compensativeness axioms hold exactly in
/// floating point.
double aggregate(std::span<const double> measures);

struct IncoherentParent {
    std::string node;
    double expected = 0.0; // aggregate of the children
    double found = 0.0;    // stored parent importance
};

struct CoherenceReport {
    std::vector<IncoherentParent> incoherent;
    bool coherent() const { return incoherent.empty(); }
};

/// Reports every parent whose importance differs from the aggregate of its
/// children by more than tol. Families with any undefined participant are
/// skipped.
CoherenceReport check_coherence(const Taxonomy& t, double tol = kDefaultTol);

} // namespace vtm
