#pragma once

#include <stdexcept>
#include <string>

namespace vtm {

/// Base class for all errors thrown by the library.
struct VtmError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A node id that does not exist in the taxonomy at hand.
struct UnknownNodeError : VtmError {
    explicit UnknownNodeError(const std::string& id)
        : VtmError("unknown node id: " + id), node(id) {}
    std::string node;
};

/// An operation was called with inputs that break its contract (a label node
/// where a property node is required, a missing importance, an empty list).
struct PreconditionError : VtmError {
    using VtmError::VtmError;
};

/// World-state evaluation failure: missing metric, zero denominator,
/// mismatched or degenerate distributions.
struct EvaluationError : VtmError {
    using VtmError::VtmError;
};

/// Taxonomies that must share nodes and edges do not.
struct StructuralMismatchError : VtmError {
    using VtmError::VtmError;
};

/// Document parsing or schema failure. line/column locate malformed text
/// (1-based, 0 when unknown); path names the offending field when known.
struct ParseError : VtmError {
    ParseError(const std::string& message, int line_, int column_, std::string path_)
        : VtmError(message), line(line_), column(column_), path(std::move(path_)) {}
    int line = 0;
    int column = 0;
    std::string path;
};

} // namespace vtm
