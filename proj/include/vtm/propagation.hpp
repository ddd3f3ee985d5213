#pragma once

#include "vtm/errors.hpp"
#include "vtm/taxonomy.hpp"

#include <map>
#include <string>

namespace vtm {

/// Result of fixpoint importance propagation.
///
/// Completed carries the input importance map extended (never overwritten)
/// with every value the fixpoint could determine; it may be partial.
/// Incoherent names a parent whose stored importance contradicts the
/// aggregate of its fully valued children. Infeasible names a node whose
/// solved-for importance falls outside [-1, 1].
struct PropagationOutcome {
    enum class Status { Completed, Incoherent, Infeasible };

    Status status = Status::Completed;
    std::map<std::string, double> importance; // Completed only
    std::string node;                         // offending node otherwise
    double expected = 0.0;                    // Incoherent: aggregate of children
    double found = 0.0;                       // Incoherent: stored parent value
    double required = 0.0;                    // Infeasible: out-of-range solved value

    bool completed() const { return status == Status::Completed; }
};

/// Thrown by operations that propagate internally (pruning, collective
/// aggregation) when that propagation fails.
struct PropagationError : VtmError {
    explicit PropagationError(PropagationOutcome o);
    PropagationOutcome outcome;
};

/// Completes the importance map of a valid taxonomy by repeated deterministic
/// sweeps of the downward/upward case analysis until no new value appears.
///
/// Per sweep, every node is examined in topological order (lexicographic
/// tie-break). A valued parent with one unvalued child solves that child so
/// the parent equals the children's mean; with several unvalued children none
/// of which has a valued descendant it splits the residual equally. An
/// unvalued parent with all children valued takes their mean; with a mix
/// whose unvalued children have no valued descendants it takes the mean of
/// the valued ones and pushes it down. A fully valued family is checked for
/// coherence at tolerance tol.
PropagationOutcome propagate(const Taxonomy& t, double tol = kDefaultTol);

/// True iff propagate(t, tol) completes without assigning anything new.
bool is_fixpoint(const Taxonomy& t, double tol = kDefaultTol);

} // namespace vtm
