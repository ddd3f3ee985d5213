#include "vtm/propagation.hpp"

#include "graph_index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace vtm {

namespace {

std::string describe(const PropagationOutcome& o) {
    std::ostringstream s;
    if (o.status == PropagationOutcome::Status::Incoherent) {
        s << "incoherent importance at '" << o.node << "': expected " << o.expected
          << ", found " << o.found;
    } else if (o.status == PropagationOutcome::Status::Infeasible) {
        s << "infeasible importance at '" << o.node << "': required " << o.required
          << " outside [-1, 1]";
    } else {
        s << "propagation completed";
    }
    return s.str();
}

// Sum in ascending order, matching the summation used by aggregate().
double sorted_sum(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return std::accumulate(values.begin(), values.end(), 0.0);
}

} // namespace

PropagationError::PropagationError(PropagationOutcome o)
    : VtmError(describe(o)), outcome(std::move(o)) {}

PropagationOutcome propagate(const Taxonomy& t, double tol) {
    detail::GraphIndex g(t);
    const auto topo = g.topological();
    if (topo.size() != t.nodes.size()) {
        throw PreconditionError("propagate: taxonomy must be acyclic");
    }

    const int n = g.size();
    std::vector<double> value(n, 0.0);
    std::vector<char> has_value(n, 0);
    for (const auto& [id, v] : t.importance) {
        const int i = g.find(id);
        if (i < 0) {
            throw PreconditionError("propagate: importance names unknown node '" + id + "'");
        }
        value[i] = v;
        has_value[i] = 1;
    }

    // hvd[i]: some strict descendant of i carries a value. Maintained
    // incrementally; hvd true implies hvd true on all ancestors.
    std::vector<char> hvd(n, 0);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        for (int c : g.children[*it]) {
            if (has_value[c] || hvd[c]) {
                hvd[*it] = 1;
                break;
            }
        }
    }

    std::vector<int> walk;
    auto mark_ancestors = [&](int node) {
        walk.assign(g.parents[node].begin(), g.parents[node].end());
        while (!walk.empty()) {
            const int p = walk.back();
            walk.pop_back();
            if (!hvd[p]) {
                hvd[p] = 1;
                walk.insert(walk.end(), g.parents[p].begin(), g.parents[p].end());
            }
        }
    };

    PropagationOutcome out;
    bool assigned_any = true;

    // One solved value per node, so at most |N| sweeps make progress.
    std::vector<double> valued;
    std::vector<int> unvalued;
    while (assigned_any) {
        assigned_any = false;
        for (const int i : topo) {
            const auto& cs = g.children[i];
            if (cs.empty()) {
                continue;
            }
            valued.clear();
            unvalued.clear();
            for (int c : cs) {
                if (has_value[c]) {
                    valued.push_back(value[c]);
                } else {
                    unvalued.push_back(c);
                }
            }

            auto solve = [&](int node, double v) -> bool {
                if (v < -1.0 - tol || v > 1.0 + tol || std::isnan(v)) {
                    out.status = PropagationOutcome::Status::Infeasible;
                    out.node = g.ids[node];
                    out.required = v;
                    return false;
                }
                value[node] = std::clamp(v, -1.0, 1.0);
                has_value[node] = 1;
                mark_ancestors(node);
                assigned_any = true;
                return true;
            };

            if (has_value[i]) {
                if (unvalued.empty()) {
                    const double expected = aggregate(valued);
                    if (std::abs(value[i] - expected) > tol) {
                        out.status = PropagationOutcome::Status::Incoherent;
                        out.node = g.ids[i];
                        out.expected = expected;
                        out.found = value[i];
                        return out;
                    }
                } else if (unvalued.size() == 1) {
                    // Forced: the single missing child must balance the mean.
                    const double imp =
                        value[i] * static_cast<double>(cs.size()) - sorted_sum(valued);
                    if (!solve(unvalued.front(), imp)) {
                        return out;
                    }
                } else {
                    bool any_hvd = false;
                    for (int u : unvalued) {
                        any_hvd = any_hvd || hvd[u];
                    }
                    if (!any_hvd) {
                        const double imp =
                            (value[i] * static_cast<double>(cs.size()) - sorted_sum(valued)) /
                            static_cast<double>(unvalued.size());
                        for (int u : unvalued) {
                            if (!solve(u, imp)) {
                                return out;
                            }
                        }
                    }
                    // otherwise postponed: some unvalued child has valued
                    // descendants that must settle first
                }
            } else {
                if (valued.empty()) {
                    continue;
                }
                if (unvalued.empty()) {
                    if (!solve(i, aggregate(valued))) {
                        return out;
                    }
                } else {
                    bool any_hvd = false;
                    for (int u : unvalued) {
                        any_hvd = any_hvd || hvd[u];
                    }
                    if (!any_hvd) {
                        const double mean = aggregate(valued);
                        if (!solve(i, mean)) {
                            return out;
                        }
                        for (int u : unvalued) {
                            if (!solve(u, mean)) {
                                return out;
                            }
                        }
                    }
                }
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        if (has_value[i]) {
            out.importance.emplace(g.ids[i], value[i]);
        }
    }
    return out;
}

bool is_fixpoint(const Taxonomy& t, double tol) {
    const auto out = propagate(t, tol);
    return out.completed() && out.importance.size() == t.importance.size();
}

} // namespace vtm
