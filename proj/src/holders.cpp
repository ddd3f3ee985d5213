#include "vtm/holders.hpp"

#include "vtm/errors.hpp"
#include "vtm/propagation.hpp"

#include <algorithm>
#include <set>

namespace vtm {

namespace {

void check_membership(const HolderId& h, std::vector<std::string>& chain,
                      ValidationReport& report) {
    if (h.kind == HolderId::Kind::Individual) {
        if (!h.members.empty()) {
            report.violations.push_back(
                {"individual-with-members", h.id, "individual '" + h.id + "' lists members"});
        }
        return;
    }
    if (h.members.empty()) {
        report.violations.push_back(
            {"empty-collective", h.id, "collective '" + h.id + "' has no members"});
    }
    if (std::find(chain.begin(), chain.end(), h.id) != chain.end()) {
        report.violations.push_back(
            {"cyclic-membership", h.id, "collective '" + h.id + "' contains itself"});
        return;
    }
    chain.push_back(h.id);
    for (const auto& m : h.members) {
        check_membership(m, chain, report);
    }
    chain.pop_back();
}

} // namespace

bool structural_equal(const Taxonomy& a, const Taxonomy& b) {
    if (a.nodes.size() != b.nodes.size() || a.edges != b.edges) {
        return false;
    }
    for (const auto& [id, node] : a.nodes) {
        const Node* other = b.find(id);
        if (other == nullptr || other->kind != node.kind) {
            return false;
        }
    }
    return true;
}

Taxonomy aggregate_collective(const std::vector<Taxonomy>& individuals, CollectiveOp op,
                              double tol) {
    if (individuals.empty()) {
        throw PreconditionError("aggregate_collective: empty list of taxonomies");
    }
    const Taxonomy& first = individuals.front();
    for (std::size_t i = 1; i < individuals.size(); ++i) {
        const Taxonomy& other = individuals[i];
        if (structural_equal(first, other)) {
            continue;
        }
        // name the first difference
        for (const auto& [id, node] : first.nodes) {
            const Node* o = other.find(id);
            if (o == nullptr || o->kind != node.kind) {
                throw StructuralMismatchError("taxonomy " + std::to_string(i) +
                                              " differs at node '" + id + "'");
            }
        }
        for (const auto& [id, node] : other.nodes) {
            (void)node;
            if (first.find(id) == nullptr) {
                throw StructuralMismatchError("taxonomy " + std::to_string(i) +
                                              " differs at node '" + id + "'");
            }
        }
        std::set<std::pair<std::string, std::string>> diff;
        std::set_symmetric_difference(first.edges.begin(), first.edges.end(),
                                      other.edges.begin(), other.edges.end(),
                                      std::inserter(diff, diff.begin()));
        const auto& [p, c] = *diff.begin();
        throw StructuralMismatchError("taxonomy " + std::to_string(i) + " differs at edge '" +
                                      p + "->" + c + "'");
    }

    Taxonomy collective;
    collective.nodes = first.nodes;
    collective.edges = first.edges;

    for (const auto& id : property_nodes(first)) {
        std::vector<double> values;
        values.reserve(individuals.size());
        for (std::size_t i = 0; i < individuals.size(); ++i) {
            auto it = individuals[i].importance.find(id);
            if (it == individuals[i].importance.end()) {
                throw PreconditionError("aggregate_collective: property node '" + id +
                                        "' has no importance in taxonomy " + std::to_string(i));
            }
            values.push_back(it->second);
        }
        std::sort(values.begin(), values.end());
        double combined = 0.0;
        switch (op) {
            case CollectiveOp::Mean:
                combined = aggregate(values);
                break;
            case CollectiveOp::Median:
                combined = values[(values.size() - 1) / 2]; // lower median
                break;
            case CollectiveOp::Min:
                combined = values.front();
                break;
        }
        collective.importance.emplace(id, combined);
    }

    auto outcome = propagate(collective, tol);
    if (!outcome.completed()) {
        throw PropagationError(std::move(outcome));
    }
    collective.importance = std::move(outcome.importance);
    return collective;
}

ValidationReport validate_holder(const HolderId& h) {
    ValidationReport report;
    std::vector<std::string> chain;
    check_membership(h, chain, report);
    return report;
}

ValidationReport validate_value_system(const ValueSystem& vs) {
    ValidationReport report = validate_holder(vs.holder);
    for (const auto& [name, taxonomy] : vs.taxonomies) {
        auto sub = validate(taxonomy);
        for (auto& v : sub.violations) {
            v.subject = name + ":" + v.subject;
            report.violations.push_back(std::move(v));
        }
    }
    return report;
}

} // namespace vtm
