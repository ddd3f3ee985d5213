#pragma once

#include "vtm/taxonomy.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace vtm::detail {

// Integer-indexed adjacency over a taxonomy. Ids are sorted, so index order
// is lexicographic id order and child/parent lists come out sorted too.
// Assumes every edge endpoint exists.
struct GraphIndex {
    std::vector<std::string> ids;
    std::unordered_map<std::string, int> by_id;
    std::vector<std::vector<int>> children;
    std::vector<std::vector<int>> parents;

    explicit GraphIndex(const Taxonomy& t);

    int size() const { return static_cast<int>(ids.size()); }
    int find(const std::string& id) const;

    // Kahn order with lexicographic tie-breaking. Shorter than size() when
    // the graph has a cycle.
    std::vector<int> topological() const;
};

} // namespace vtm::detail
