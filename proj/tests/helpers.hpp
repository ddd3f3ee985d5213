#pragma once

#include "vtm/context.hpp"
#include "vtm/taxonomy.hpp"

#include <string>
#include <vector>

namespace vtm_test {

inline vtm::Node label(std::string id, std::string text = "") {
    vtm::Node n;
    n.id = std::move(id);
    n.kind = vtm::NodeKind::Label;
    n.label = text.empty() ? n.id : std::move(text);
    return n;
}

inline vtm::Node property(std::string id, vtm::SatisfactionSpec grounding,
                          std::string text = "") {
    vtm::Node n;
    n.id = std::move(id);
    n.kind = vtm::NodeKind::Property;
    n.label = text.empty() ? n.id : std::move(text);
    n.grounding = std::move(grounding);
    return n;
}

inline vtm::RatioThreshold ratio_requests_offers(double max_ratio = 5.0) {
    return {"requests", "offers", max_ratio};
}

inline vtm::RatioThreshold ratio_requests_volunteering(double max_ratio = 5.0) {
    return {"requests", "volunteering", max_ratio};
}

inline vtm::DistributionUniformity tasks_uniformity(double epsilon = 0.2,
                                                    double max_delta = 1.0) {
    return {"tasks", epsilon, max_delta, vtm::DistanceKind::Emd};
}

// The uHelp fairness taxonomy: fairness splits into reciprocity and fair
// treatment; reciprocity grounds out in the request/offer ratios p1 and p2,
// fair treatment in the task distribution p3 plus the ungrounded label leaf
// fitting_reward. 9 nodes, 8 edges.
inline vtm::Taxonomy uhelp_fairness() {
    vtm::Taxonomy t;
    t.add_node(label("fairness"));
    t.add_node(label("reciprocity"));
    t.add_node(label("fair_treatment", "fair treatment"));
    t.add_node(label("balanced_give_take", "balanced give and take"));
    t.add_node(label("balanced_division", "balanced division of labour"));
    t.add_node(label("fitting_reward", "fitting reward"));
    t.add_node(property("p1", ratio_requests_offers(), "requests proportionate to offers"));
    t.add_node(
        property("p2", ratio_requests_volunteering(), "requests proportionate to volunteering"));
    t.add_node(property("p3", tasks_uniformity(), "tasks equally distributed"));
    t.add_edge("fairness", "reciprocity");
    t.add_edge("fairness", "fair_treatment");
    t.add_edge("reciprocity", "balanced_give_take");
    t.add_edge("balanced_give_take", "p1");
    t.add_edge("balanced_give_take", "p2");
    t.add_edge("fair_treatment", "balanced_division");
    t.add_edge("fair_treatment", "fitting_reward");
    t.add_edge("balanced_division", "p3");
    return t;
}

// Diamond of label nodes: universalism generalises social justice and
// equality, both of which generalise equal treatment.
inline vtm::Taxonomy universalism_diamond() {
    vtm::Taxonomy t;
    t.add_node(label("universalism"));
    t.add_node(label("social_justice", "social justice"));
    t.add_node(label("equality"));
    t.add_node(label("equal_treatment", "equal treatment"));
    t.add_edge("universalism", "social_justice");
    t.add_edge("universalism", "equality");
    t.add_edge("social_justice", "equal_treatment");
    t.add_edge("equality", "equal_treatment");
    return t;
}

inline vtm::Taxonomy with_importance(vtm::Taxonomy t,
                                     std::vector<std::pair<std::string, double>> values) {
    for (auto& [id, v] : values) {
        t.importance[id] = v;
    }
    return t;
}

inline vtm::ContextSpec elderly_context() {
    vtm::ContextSpec ctx;
    ctx.id = "elderly";
    ctx.params = {5.0, 0.2, 1.0};
    ctx.leaf_importance = {{"p1", 0.0}, {"p2", 0.0}, {"p3", 0.9}};
    return ctx;
}

inline vtm::ContextSpec single_parent_context() {
    vtm::ContextSpec ctx;
    ctx.id = "single_parents";
    ctx.params = {5.0, 0.2, 1.0};
    ctx.leaf_importance = {{"p1", 0.8}, {"p2", 0.0}, {"p3", 0.7}};
    return ctx;
}

} // namespace vtm_test
