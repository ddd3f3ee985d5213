#include "vtm/taxonomy.hpp"

#include "graph_index.hpp"
#include "vtm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vtm {

void Taxonomy::add_node(Node n) {
    std::string id = n.id;
    nodes.insert_or_assign(std::move(id), std::move(n));
}

void Taxonomy::add_edge(std::string parent, std::string child) {
    edges.emplace(std::move(parent), std::move(child));
}

const Node* Taxonomy::find(const std::string& id) const {
    auto it = nodes.find(id);
    return it == nodes.end() ? nullptr : &it->second;
}

bool valid_node_id(const std::string& id) {
    if (id.empty()) {
        return false;
    }
    for (char c : id) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-';
        if (!ok) {
            return false;
        }
    }
    return true;
}

ValidationReport validate(const Taxonomy& t) {
    ValidationReport report;
    auto add = [&](std::string rule, std::string subject, std::string message) {
        report.violations.push_back({std::move(rule), std::move(subject), std::move(message)});
    };

    for (const auto& [id, node] : t.nodes) {
        if (!valid_node_id(id)) {
            add("node-id-syntax", id, "node id must be non-empty and match [A-Za-z0-9_-]+");
        }
        if (id != node.id) {
            add("node-id-mismatch", id, "node keyed as '" + id + "' carries id '" + node.id + "'");
        }
        const bool is_property = node.kind == NodeKind::Property;
        if (is_property && !node.grounding.has_value()) {
            add("grounding-mismatch", id, "property node '" + id + "' has no grounding");
        }
        if (!is_property && node.grounding.has_value()) {
            add("grounding-mismatch", id, "label node '" + id + "' carries a grounding");
        }
    }

    for (const auto& [parent, child] : t.edges) {
        const std::string subject = parent + "->" + child;
        const Node* p = t.find(parent);
        const Node* c = t.find(child);
        if (p == nullptr) {
            add("unknown-node-in-edge", subject, "edge parent '" + parent + "' is not a node");
        }
        if (c == nullptr) {
            add("unknown-node-in-edge", subject, "edge child '" + child + "' is not a node");
        }
        if (p != nullptr && p->kind == NodeKind::Property) {
            add("property-node-is-parent", subject,
                "property node '" + parent + "' is a parent; property nodes must be leaves");
        }
    }

    for (const auto& [id, value] : t.importance) {
        if (t.find(id) == nullptr) {
            add("importance-unknown-node", id, "importance names unknown node '" + id + "'");
        }
        if (!(value >= -1.0 && value <= 1.0)) { // also rejects NaN
            add("importance-out-of-range", id,
                "importance of '" + id + "' must lie in [-1, 1]");
        }
    }

    detail::GraphIndex g(t);
    const auto topo = g.topological();
    if (topo.size() != t.nodes.size()) {
        std::vector<char> processed(t.nodes.size(), 0);
        for (int i : topo) {
            processed[i] = 1;
        }
        std::string cyclic;
        for (int i = 0; i < g.size(); ++i) {
            if (!processed[i]) {
                if (!cyclic.empty()) {
                    cyclic += ", ";
                }
                cyclic += g.ids[i];
            }
        }
        add("cycle", cyclic, "cycle through nodes: " + cyclic);
    }

    if (!t.nodes.empty() && roots(t).empty()) {
        add("no-root", "", "taxonomy has nodes but no root");
    }

    return report;
}

std::vector<std::string> roots(const Taxonomy& t) {
    std::set<std::string> with_parent;
    for (const auto& [parent, child] : t.edges) {
        (void)parent;
        with_parent.insert(child);
    }
    std::vector<std::string> out;
    for (const auto& [id, node] : t.nodes) {
        (void)node;
        if (!with_parent.contains(id)) {
            out.push_back(id);
        }
    }
    return out; // nodes map iterates sorted
}

std::vector<std::string> children(const Taxonomy& t, const std::string& n) {
    if (t.find(n) == nullptr) {
        throw UnknownNodeError(n);
    }
    std::vector<std::string> out;
    for (auto it = t.edges.lower_bound({n, std::string()});
         it != t.edges.end() && it->first == n; ++it) {
        out.push_back(it->second);
    }
    return out;
}

std::vector<std::string> property_nodes(const Taxonomy& t) {
    std::vector<std::string> out;
    for (const auto& [id, node] : t.nodes) {
        if (node.kind == NodeKind::Property) {
            out.push_back(id);
        }
    }
    return out;
}

bool has_descendant_with_value(const Taxonomy& t, std::span<const std::string> ns) {
    detail::GraphIndex g(t);
    std::vector<int> stack;
    for (const auto& id : ns) {
        int i = g.find(id);
        if (i < 0) {
            throw UnknownNodeError(id);
        }
        // strict descendants only: seed with children
        stack.insert(stack.end(), g.children[i].begin(), g.children[i].end());
    }
    std::vector<char> seen(g.ids.size(), 0);
    while (!stack.empty()) {
        int n = stack.back();
        stack.pop_back();
        if (seen[n]) {
            continue;
        }
        seen[n] = 1;
        if (t.importance.contains(g.ids[n])) {
            return true;
        }
        stack.insert(stack.end(), g.children[n].begin(), g.children[n].end());
    }
    return false;
}

std::uint64_t count_paths(const Taxonomy& t, const std::string& n) {
    detail::GraphIndex g(t);
    const int target = g.find(n);
    if (target < 0) {
        throw UnknownNodeError(n);
    }
    const auto topo = g.topological();
    std::vector<std::uint64_t> paths(g.ids.size(), 0);
    for (int i : topo) {
        if (g.parents[i].empty()) {
            paths[i] = 1;
        } else {
            std::uint64_t sum = 0;
            for (int p : g.parents[i]) {
                sum += paths[p];
            }
            paths[i] = sum;
        }
    }
    return paths[target];
}

double aggregate(std::span<const double> measures) {
    if (measures.empty()) {
        throw PreconditionError("aggregate: empty list of measures");
    }
    std::vector<double> sorted(measures.begin(), measures.end());
    std::sort(sorted.begin(), sorted.end());
    const double sum = std::accumulate(sorted.begin(), sorted.end(), 0.0);
    const double mean = sum / static_cast<double>(sorted.size());
    return std::clamp(mean, sorted.front(), sorted.back());
}

CoherenceReport check_coherence(const Taxonomy& t, double tol) {
    CoherenceReport report;
    detail::GraphIndex g(t);
    for (int i = 0; i < g.size(); ++i) {
        if (g.children[i].empty()) {
            continue;
        }
        auto parent_it = t.importance.find(g.ids[i]);
        if (parent_it == t.importance.end()) {
            continue;
        }
        std::vector<double> child_values;
        child_values.reserve(g.children[i].size());
        bool all_defined = true;
        for (int c : g.children[i]) {
            auto it = t.importance.find(g.ids[c]);
            if (it == t.importance.end()) {
                all_defined = false;
                break;
            }
            child_values.push_back(it->second);
        }
        if (!all_defined) {
            continue; // coherence is only checkable on fully defined families
        }
        const double expected = aggregate(child_values);
        if (std::abs(parent_it->second - expected) > tol) {
            report.incoherent.push_back({g.ids[i], expected, parent_it->second});
        }
    }
    return report;
}

} // namespace vtm
