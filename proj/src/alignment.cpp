#include "vtm/alignment.hpp"

#include "vtm/errors.hpp"

namespace vtm {

AlignmentReport align(const Taxonomy& t, const WorldState& world, AlignmentVariant variant) {
    AlignmentReport report;
    report.variant = variant;

    const auto props = property_nodes(t);
    double sum = 0.0;
    for (const auto& id : props) {
        auto it = t.importance.find(id);
        if (it == t.importance.end()) {
            throw PreconditionError("align: property node '" + id + "' has no importance");
        }
        PropertyContribution c;
        c.importance = it->second;
        c.degree = sd_of(t, id, world);
        c.contribution = c.importance * c.degree;
        if (variant == AlignmentVariant::PathWeighted) {
            c.contribution *= static_cast<double>(count_paths(t, id));
        }
        sum += c.contribution;
        report.per_property.emplace(id, c);
    }
    report.score = props.empty() ? 0.0 : sum / static_cast<double>(props.size());
    return report;
}

double sd_of(const Taxonomy& t, const std::string& p, const WorldState& world) {
    const Node* node = t.find(p);
    if (node == nullptr) {
        throw UnknownNodeError(p);
    }
    if (node->kind != NodeKind::Property || !node->grounding.has_value()) {
        throw PreconditionError("sd_of: '" + p + "' is not a property node");
    }
    return satisfaction_degree(*node->grounding, world);
}

} // namespace vtm
