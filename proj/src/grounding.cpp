#include "vtm/grounding.hpp"

#include "vtm/errors.hpp"

#include <algorithm>
#include <cmath>

namespace vtm {

namespace {

double counter_value(const WorldState& world, const std::string& name) {
    auto it = world.counters.find(name);
    if (it == world.counters.end()) {
        throw EvaluationError("unknown metric: " + name);
    }
    return static_cast<double>(it->second);
}

const std::vector<double>& distribution_of(const WorldState& world, const std::string& name) {
    auto it = world.distributions.find(name);
    if (it == world.distributions.end()) {
        throw EvaluationError("unknown distribution: " + name);
    }
    return it->second;
}

double ratio_of(const RatioThreshold& spec, const WorldState& world) {
    const double num = counter_value(world, spec.numerator);
    const double den = counter_value(world, spec.denominator);
    if (den == 0.0) {
        throw EvaluationError("zero denominator: " + spec.denominator);
    }
    return num / den;
}

double delta_of(const DistributionUniformity& spec, const WorldState& world) {
    const auto& d = distribution_of(world, spec.distribution);
    if (d.empty()) {
        throw EvaluationError("empty distribution: " + spec.distribution);
    }
    return distribution_distance(spec.distance, d, uniform_distribution(d.size()));
}

bool compare(MetricExpr::Op op, double a, double b) {
    switch (op) {
        case MetricExpr::Op::Lt: return a < b;
        case MetricExpr::Op::Le: return a <= b;
        case MetricExpr::Op::Gt: return a > b;
        case MetricExpr::Op::Ge: return a >= b;
        case MetricExpr::Op::Eq: return a == b;
        default: throw PreconditionError("not a comparison operator");
    }
}

} // namespace

MetricExpr MetricExpr::metric_ref(std::string name) {
    MetricExpr e;
    e.op = Op::Metric;
    e.metric = std::move(name);
    return e;
}

MetricExpr MetricExpr::constant(double v) {
    MetricExpr e;
    e.op = Op::Const;
    e.value = v;
    return e;
}

MetricExpr MetricExpr::binary(Op op, MetricExpr left, MetricExpr right) {
    MetricExpr e;
    e.op = op;
    e.lhs = std::make_shared<const MetricExpr>(std::move(left));
    e.rhs = std::make_shared<const MetricExpr>(std::move(right));
    return e;
}

bool MetricExpr::is_comparison() const {
    switch (op) {
        case Op::Lt:
        case Op::Le:
        case Op::Gt:
        case Op::Ge:
        case Op::Eq:
            return true;
        default:
            return false;
    }
}

double eval_metric_expr(const MetricExpr& e, const WorldState& world) {
    switch (e.op) {
        case MetricExpr::Op::Metric:
            return counter_value(world, e.metric);
        case MetricExpr::Op::Const:
            return e.value;
        case MetricExpr::Op::Add:
            return eval_metric_expr(*e.lhs, world) + eval_metric_expr(*e.rhs, world);
        case MetricExpr::Op::Sub:
            return eval_metric_expr(*e.lhs, world) - eval_metric_expr(*e.rhs, world);
        case MetricExpr::Op::Mul:
            return eval_metric_expr(*e.lhs, world) * eval_metric_expr(*e.rhs, world);
        case MetricExpr::Op::Div: {
            const double den = eval_metric_expr(*e.rhs, world);
            if (den == 0.0) {
                throw EvaluationError("division by zero in metric expression");
            }
            return eval_metric_expr(*e.lhs, world) / den;
        }
        default:
            throw PreconditionError("comparison allowed only at the root of a predicate");
    }
}

bool eval_predicate(const SatisfactionSpec& spec, const WorldState& world) {
    if (const auto* ratio = std::get_if<RatioThreshold>(&spec)) {
        return ratio_of(*ratio, world) > 1.0;
    }
    if (const auto* uni = std::get_if<DistributionUniformity>(&spec)) {
        return delta_of(*uni, world) < uni->epsilon;
    }
    const auto& pred = std::get<BooleanExpr>(spec).expr;
    if (!pred.is_comparison()) {
        throw PreconditionError("boolean expression must compare at the root");
    }
    return compare(pred.op, eval_metric_expr(*pred.lhs, world), eval_metric_expr(*pred.rhs, world));
}

double satisfaction_degree(const SatisfactionSpec& spec, const WorldState& world) {
    if (const auto* ratio = std::get_if<RatioThreshold>(&spec)) {
        // Piecewise map of the ratio onto [-1, 1]: 0 -> -1, 1 -> 0, max_ratio -> 1.
        const double r = std::min(ratio_of(*ratio, world), ratio->max_ratio);
        if (r > 1.0) {
            return (r - 1.0) / (ratio->max_ratio - 1.0);
        }
        return r - 1.0;
    }
    if (const auto* uni = std::get_if<DistributionUniformity>(&spec)) {
        // Piecewise map of the distance onto [-1, 1]: 0 -> 1, epsilon -> 0, max_delta -> -1.
        const double delta = std::min(delta_of(*uni, world), uni->max_delta);
        if (delta < uni->epsilon) {
            return 1.0 - delta / uni->epsilon;
        }
        return -(delta - uni->epsilon) / (uni->max_delta - uni->epsilon);
    }
    return eval_predicate(spec, world) ? 1.0 : -1.0;
}

double distribution_distance(DistanceKind kind,
                             const std::vector<double>& d,
                             const std::vector<double>& u) {
    if (d.size() != u.size()) {
        throw EvaluationError("distribution length mismatch");
    }
    if (d.empty()) {
        throw EvaluationError("empty distribution");
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0.0 || u[i] < 0.0) {
            throw EvaluationError("negative distribution entry");
        }
    }
    if (kind == DistanceKind::Emd) {
        double cdf_d = 0.0;
        double cdf_u = 0.0;
        double sum = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i) {
            cdf_d += d[i];
            cdf_u += u[i];
            sum += std::abs(cdf_d - cdf_u);
        }
        return sum;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0.0) {
            continue; // 0 * ln 0 = 0
        }
        if (u[i] == 0.0) {
            throw EvaluationError("KL divergence undefined: zero reference mass at index " +
                                  std::to_string(i));
        }
        sum += d[i] * std::log(d[i] / u[i]);
    }
    return std::max(0.0, sum);
}

std::vector<double> uniform_distribution(std::size_t n) {
    if (n == 0) {
        throw EvaluationError("empty distribution");
    }
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

} // namespace vtm
