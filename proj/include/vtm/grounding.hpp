#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace vtm {

/// Observed behaviour of an entity: named non-negative counters plus named
/// discrete distributions (each summing to 1).
struct WorldState {
    std::map<std::string, std::uint64_t> counters;
    std::map<std::string, std::vector<double>> distributions;
};

enum class DistanceKind { Emd, Kl };

/// Satisfied while numerator/denominator exceeds 1; the degree saturates at
/// max_ratio.
struct RatioThreshold {
    std::string numerator;
    std::string denominator;
    double max_ratio = 2.0; // must be > 1
};

/// Satisfied while the named distribution stays within epsilon of uniform;
/// the degree saturates at max_delta.
struct DistributionUniformity {
    std::string distribution;
    double epsilon = 0.1;   // must be > 0
    double max_delta = 1.0; // must be > epsilon
    DistanceKind distance = DistanceKind::Emd;
};

/// Expression tree over counter metrics and real literals. A comparison may
/// appear only at the root of a predicate.
struct MetricExpr {
    enum class Op { Metric, Const, Add, Sub, Mul, Div, Lt, Le, Gt, Ge, Eq };

    Op op = Op::Const;
    double value = 0.0;  // Const
    std::string metric;  // Metric
    std::shared_ptr<const MetricExpr> lhs;
    std::shared_ptr<const MetricExpr> rhs;

    static MetricExpr metric_ref(std::string name);
    static MetricExpr constant(double v);
    static MetricExpr binary(Op op, MetricExpr left, MetricExpr right);

    bool is_comparison() const;
};

/// Predicate form of a boolean metric expression; the root must compare.
struct BooleanExpr {
    MetricExpr expr;
};

/// Computable grounding attached to a property node.
using SatisfactionSpec = std::variant<RatioThreshold, DistributionUniformity, BooleanExpr>;

/// Evaluates the arithmetic value of a non-comparison expression.
double eval_metric_expr(const MetricExpr& e, const WorldState& world);

/// True iff the property holds in the given world state.
bool eval_predicate(const SatisfactionSpec& spec, const WorldState& world);

/// Signed degree in [-1, 1] of how strongly the world state satisfies the
/// property. Positive iff eval_predicate is true.
double satisfaction_degree(const SatisfactionSpec& spec, const WorldState& world);

/// Distance between two same-length discrete distributions. Emd accumulates
/// absolute CDF differences over the ordered support; Kl is the divergence
/// d‖u with 0·ln 0 = 0 (error when u_i = 0 while d_i > 0).
double distribution_distance(DistanceKind kind,
                             const std::vector<double>& d,
                             const std::vector<double>& u);

/// Uniform distribution over n outcomes.
std::vector<double> uniform_distribution(std::size_t n);

} // namespace vtm
