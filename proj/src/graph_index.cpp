#include "graph_index.hpp"

#include <queue>

namespace vtm::detail {

GraphIndex::GraphIndex(const Taxonomy& t) {
    ids.reserve(t.nodes.size());
    for (const auto& [id, node] : t.nodes) {
        (void)node;
        by_id.emplace(id, static_cast<int>(ids.size()));
        ids.push_back(id);
    }
    children.assign(ids.size(), {});
    parents.assign(ids.size(), {});
    // edges iterate sorted by (parent, child), keeping adjacency lists sorted
    for (const auto& [parent, child] : t.edges) {
        auto p = by_id.find(parent);
        auto c = by_id.find(child);
        if (p == by_id.end() || c == by_id.end()) {
            continue;
        }
        children[p->second].push_back(c->second);
        parents[c->second].push_back(p->second);
    }
}

int GraphIndex::find(const std::string& id) const {
    auto it = by_id.find(id);
    return it == by_id.end() ? -1 : it->second;
}

std::vector<int> GraphIndex::topological() const {
    std::vector<int> indegree(ids.size(), 0);
    for (const auto& cs : children) {
        for (int c : cs) {
            ++indegree[c];
        }
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int i = 0; i < size(); ++i) {
        if (indegree[i] == 0) {
            ready.push(i);
        }
    }
    std::vector<int> order;
    order.reserve(ids.size());
    while (!ready.empty()) {
        int n = ready.top();
        ready.pop();
        order.push_back(n);
        for (int c : children[n]) {
            if (--indegree[c] == 0) {
                ready.push(c);
            }
        }
    }
    return order;
}

} // namespace vtm::detail
