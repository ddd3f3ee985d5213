#pragma once

#include "vtm/taxonomy.hpp"

#include <map>
#include <string>

namespace vtm {

enum class AlignmentVariant { Simple, PathWeighted };

struct PropertyContribution {
    double importance = 0.0;
    double degree = 0.0;
    double contribution = 0.0; // importance * degree, times paths when weighted
};

struct AlignmentReport {
    double score = 0.0;
    std::map<std::string, PropertyContribution> per_property;
    AlignmentVariant variant = AlignmentVariant::Simple;
};

/// Importance-weighted average of satisfaction degrees over the property
/// nodes of t. The denominator is the number of property nodes in the
/// supplied taxonomy; align a pruned context taxonomy to score against a
/// context. PathWeighted multiplies each contribution by the number of
/// root paths reaching the property node.
AlignmentReport align(const Taxonomy& t, const WorldState& world,
                      AlignmentVariant variant = AlignmentVariant::Simple);

/// Satisfaction degree of property node p against the world state.
double sd_of(const Taxonomy& t, const std::string& p, const WorldState& world);

} // namespace vtm
