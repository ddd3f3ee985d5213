#include "vtm/io.hpp"

#include "vtm/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace vtm {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// canonical emission

std::string format_uint(std::uint64_t v) {
    return std::to_string(v);
}

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

bool is_scalar(const json& j) {
    return !j.is_object() && !j.is_array();
}

bool all_scalar(const json& j) {
    return std::all_of(j.begin(), j.end(), [](const json& e) { return is_scalar(e); });
}

void append_scalar(std::string& out, const json& j) {
    if (j.is_string()) {
        append_escaped(out, j.get<std::string>());
    } else if (j.is_boolean()) {
        out += j.get<bool>() ? "true" : "false";
    } else if (j.is_number_unsigned()) {
        out += format_uint(j.get<std::uint64_t>());
    } else if (j.is_number_integer()) {
        out += std::to_string(j.get<std::int64_t>());
    } else if (j.is_number_float()) {
        out += format_number(j.get<double>());
    } else {
        out += "null";
    }
}

// Canonical form: keys sorted (json object is map-backed), two-space indent,
// containers holding only scalars on a single line.
void append_canonical(std::string& out, const json& j, int depth) {
    if (is_scalar(j)) {
        append_scalar(out, j);
        return;
    }
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
    if (j.is_array()) {
        if (j.empty()) {
            out += "[]";
            return;
        }
        if (all_scalar(j)) {
            out += '[';
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (it != j.begin()) {
                    out += ", ";
                }
                append_scalar(out, *it);
            }
            out += ']';
            return;
        }
        out += "[\n";
        for (auto it = j.begin(); it != j.end(); ++it) {
            out += inner;
            append_canonical(out, *it, depth + 1);
            if (std::next(it) != j.end()) {
                out += ',';
            }
            out += '\n';
        }
        out += pad + ']';
        return;
    }
    if (j.empty()) {
        out += "{}";
        return;
    }
    if (all_scalar(j)) {
        out += '{';
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it != j.begin()) {
                out += ", ";
            }
            append_escaped(out, it.key());
            out += ": ";
            append_scalar(out, it.value());
        }
        out += '}';
        return;
    }
    out += "{\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
        out += inner;
        append_escaped(out, it.key());
        out += ": ";
        append_canonical(out, it.value(), depth + 1);
        if (std::next(it) != j.end()) {
            out += ',';
        }
        out += '\n';
    }
    out += pad + '}';
}

std::string dump_canonical(const json& j) {
    std::string out;
    append_canonical(out, j, 0);
    out += '\n';
    return out;
}

// ---------------------------------------------------------------------------
// parsing helpers

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what, 0, 0, path);
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // map the byte offset onto line/column
        std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        byte = std::min(byte, text.size());
        int line = 1;
        int column = 1;
        for (std::size_t i = 0; i < byte; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string message = "malformed JSON at line " + std::to_string(line) + ", column " +
                              std::to_string(column);
        throw ParseError(message, line, column, "");
    }
}

const json& member(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(path, std::string("missing required key '") + key + "'");
    }
    return *it;
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) {
        fail(path, "expected a string");
    }
    return j.get<std::string>();
}

double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) {
        fail(path, "expected a number");
    }
    return j.get<double>();
}

std::uint64_t get_uint(const json& j, const std::string& path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        fail(path, "expected a non-negative integer");
    }
    return j.get<std::uint64_t>();
}

const json& get_object(const json& j, const std::string& path) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    return j;
}

const json& get_array(const json& j, const std::string& path) {
    if (!j.is_array()) {
        fail(path, "expected an array");
    }
    return j;
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) {
            known = known || it.key() == k;
        }
        if (!known) {
            fail(path, "unexpected key '" + it.key() + "'");
        }
    }
}

void require_version(const json& obj, const std::string& path) {
    const json& v = member(obj, path, "format_version");
    if (!v.is_number_integer() || v.get<std::int64_t>() != 1) {
        fail(path + ".format_version", "unsupported format_version, expected 1");
    }
}

// ---------------------------------------------------------------------------
// metric expressions

constexpr const char* kCmpNames[] = {"<", "<=", ">", ">=", "="};
constexpr MetricExpr::Op kCmpOps[] = {MetricExpr::Op::Lt, MetricExpr::Op::Le, MetricExpr::Op::Gt,
                                      MetricExpr::Op::Ge, MetricExpr::Op::Eq};
constexpr const char* kArithNames[] = {"+", "-", "*", "/"};
constexpr MetricExpr::Op kArithOps[] = {MetricExpr::Op::Add, MetricExpr::Op::Sub,
                                        MetricExpr::Op::Mul, MetricExpr::Op::Div};

MetricExpr parse_arith(const json& j, const std::string& path);

MetricExpr parse_comparison(const json& j, const std::string& path) {
    const json& obj = get_object(j, path);
    if (obj.contains("cmp")) {
        reject_unknown_keys(obj, path, {"cmp", "lhs", "rhs"});
        const std::string cmp = get_string(member(obj, path, "cmp"), path + ".cmp");
        for (std::size_t i = 0; i < std::size(kCmpNames); ++i) {
            if (cmp == kCmpNames[i]) {
                return MetricExpr::binary(kCmpOps[i],
                                          parse_arith(member(obj, path, "lhs"), path + ".lhs"),
                                          parse_arith(member(obj, path, "rhs"), path + ".rhs"));
            }
        }
        fail(path + ".cmp", "unknown comparison '" + cmp + "'");
    }
    fail(path, "predicate must carry a comparison ('cmp') at the root");
}

MetricExpr parse_arith(const json& j, const std::string& path) {
    const json& obj = get_object(j, path);
    if (obj.contains("cmp")) {
        fail(path, "comparison may appear only at the root of a predicate");
    }
    if (obj.contains("metric")) {
        reject_unknown_keys(obj, path, {"metric"});
        return MetricExpr::metric_ref(get_string(obj["metric"], path + ".metric"));
    }
    if (obj.contains("const")) {
        reject_unknown_keys(obj, path, {"const"});
        return MetricExpr::constant(get_number(obj["const"], path + ".const"));
    }
    reject_unknown_keys(obj, path, {"lhs", "op", "rhs"});
    const std::string op = get_string(member(obj, path, "op"), path + ".op");
    for (std::size_t i = 0; i < std::size(kArithNames); ++i) {
        if (op == kArithNames[i]) {
            return MetricExpr::binary(kArithOps[i],
                                      parse_arith(member(obj, path, "lhs"), path + ".lhs"),
                                      parse_arith(member(obj, path, "rhs"), path + ".rhs"));
        }
    }
    fail(path + ".op", "unknown operator '" + op + "'");
}

json expr_to_json(const MetricExpr& e) {
    switch (e.op) {
        case MetricExpr::Op::Metric:
            return json{{"metric", e.metric}};
        case MetricExpr::Op::Const:
            return json{{"const", e.value}};
        default:
            break;
    }
    json out;
    out["lhs"] = expr_to_json(*e.lhs);
    out["rhs"] = expr_to_json(*e.rhs);
    for (std::size_t i = 0; i < std::size(kCmpOps); ++i) {
        if (e.op == kCmpOps[i]) {
            out["cmp"] = kCmpNames[i];
            return out;
        }
    }
    for (std::size_t i = 0; i < std::size(kArithOps); ++i) {
        if (e.op == kArithOps[i]) {
            out["op"] = kArithNames[i];
            return out;
        }
    }
    throw VtmError("unserialisable expression");
}

// ---------------------------------------------------------------------------
// groundings

SatisfactionSpec parse_grounding(const json& j, const std::string& path) {
    const json& obj = get_object(j, path);
    const std::string kind = get_string(member(obj, path, "kind"), path + ".kind");
    if (kind == "ratio_threshold") {
        reject_unknown_keys(obj, path, {"kind", "numerator", "denominator", "max_ratio"});
        RatioThreshold spec;
        spec.numerator = get_string(member(obj, path, "numerator"), path + ".numerator");
        spec.denominator = get_string(member(obj, path, "denominator"), path + ".denominator");
        spec.max_ratio = get_number(member(obj, path, "max_ratio"), path + ".max_ratio");
        if (!(spec.max_ratio > 1.0)) {
            fail(path + ".max_ratio", "max_ratio must be > 1");
        }
        return spec;
    }
    if (kind == "distribution_uniformity") {
        reject_unknown_keys(obj, path,
                            {"kind", "distribution", "epsilon", "max_delta", "distance"});
        DistributionUniformity spec;
        spec.distribution = get_string(member(obj, path, "distribution"), path + ".distribution");
        spec.epsilon = get_number(member(obj, path, "epsilon"), path + ".epsilon");
        spec.max_delta = get_number(member(obj, path, "max_delta"), path + ".max_delta");
        const std::string distance = get_string(member(obj, path, "distance"), path + ".distance");
        if (distance == "emd") {
            spec.distance = DistanceKind::Emd;
        } else if (distance == "kl") {
            spec.distance = DistanceKind::Kl;
        } else {
            fail(path + ".distance", "unknown distance '" + distance + "', expected emd or kl");
        }
        if (!(spec.epsilon > 0.0) || !(spec.max_delta > spec.epsilon)) {
            fail(path, "requires 0 < epsilon < max_delta");
        }
        return spec;
    }
    if (kind == "boolean_expr") {
        reject_unknown_keys(obj, path, {"kind", "expr"});
        BooleanExpr spec;
        spec.expr = parse_comparison(member(obj, path, "expr"), path + ".expr");
        return spec;
    }
    fail(path + ".kind", "unknown grounding kind '" + kind + "'");
}

json grounding_to_json(const SatisfactionSpec& spec) {
    json out;
    if (const auto* ratio = std::get_if<RatioThreshold>(&spec)) {
        out["kind"] = "ratio_threshold";
        out["numerator"] = ratio->numerator;
        out["denominator"] = ratio->denominator;
        out["max_ratio"] = ratio->max_ratio;
        return out;
    }
    if (const auto* uni = std::get_if<DistributionUniformity>(&spec)) {
        out["kind"] = "distribution_uniformity";
        out["distribution"] = uni->distribution;
        out["epsilon"] = uni->epsilon;
        out["max_delta"] = uni->max_delta;
        out["distance"] = uni->distance == DistanceKind::Emd ? "emd" : "kl";
        return out;
    }
    out["kind"] = "boolean_expr";
    out["expr"] = expr_to_json(std::get<BooleanExpr>(spec).expr);
    return out;
}

// ---------------------------------------------------------------------------
// taxonomy documents

Taxonomy taxonomy_from_json(const json& doc, const std::string& path) {
    const json& obj = get_object(doc, path);
    reject_unknown_keys(obj, path, {"format_version", "values", "edges", "importance"});
    require_version(obj, path);

    Taxonomy t;
    const json& values = get_array(member(obj, path, "values"), path + ".values");
    int index = 0;
    for (const json& v : values) {
        const std::string npath = path + ".values[" + std::to_string(index++) + "]";
        const json& node_obj = get_object(v, npath);
        reject_unknown_keys(node_obj, npath, {"id", "kind", "label", "grounding"});
        Node node;
        node.id = get_string(member(node_obj, npath, "id"), npath + ".id");
        const std::string kind = get_string(member(node_obj, npath, "kind"), npath + ".kind");
        if (kind == "label") {
            node.kind = NodeKind::Label;
        } else if (kind == "property") {
            node.kind = NodeKind::Property;
        } else {
            fail(npath + ".kind", "unknown kind '" + kind + "', expected label or property");
        }
        if (node_obj.contains("label")) {
            node.label = get_string(node_obj["label"], npath + ".label");
        }
        if (node_obj.contains("grounding")) {
            node.grounding = parse_grounding(node_obj["grounding"], npath + ".grounding");
        }
        if (t.nodes.contains(node.id)) {
            fail(npath + ".id", "duplicate node id '" + node.id + "'");
        }
        t.add_node(std::move(node));
    }

    if (obj.contains("edges")) {
        const json& edges = get_array(obj["edges"], path + ".edges");
        index = 0;
        for (const json& e : edges) {
            const std::string epath = path + ".edges[" + std::to_string(index++) + "]";
            const json& pair = get_array(e, epath);
            if (pair.size() != 2) {
                fail(epath, "expected a [parent, child] pair");
            }
            t.add_edge(get_string(pair[0], epath + "[0]"), get_string(pair[1], epath + "[1]"));
        }
    }

    if (obj.contains("importance")) {
        const json& imp = get_object(obj["importance"], path + ".importance");
        for (auto it = imp.begin(); it != imp.end(); ++it) {
            t.importance.emplace(it.key(),
                                 get_number(it.value(), path + ".importance." + it.key()));
        }
    }
    return t;
}

json taxonomy_to_json(const Taxonomy& t) {
    json values = json::array();
    for (const auto& [id, node] : t.nodes) {
        json v;
        v["id"] = id;
        v["kind"] = node.kind == NodeKind::Property ? "property" : "label";
        v["label"] = node.label;
        if (node.grounding.has_value()) {
            v["grounding"] = grounding_to_json(*node.grounding);
        }
        values.push_back(std::move(v));
    }
    json edges = json::array();
    for (const auto& [parent, child] : t.edges) {
        edges.push_back(json::array({parent, child}));
    }
    json importance = json::object();
    for (const auto& [id, v] : t.importance) {
        importance[id] = v;
    }
    json doc;
    doc["format_version"] = 1;
    doc["values"] = std::move(values);
    doc["edges"] = std::move(edges);
    doc["importance"] = std::move(importance);
    return doc;
}

// ---------------------------------------------------------------------------
// holders

HolderId holder_from_json(const json& j, const std::string& path) {
    const json& obj = get_object(j, path);
    reject_unknown_keys(obj, path, {"id", "kind", "members"});
    HolderId h;
    h.id = get_string(member(obj, path, "id"), path + ".id");
    const std::string kind = get_string(member(obj, path, "kind"), path + ".kind");
    if (kind == "individual") {
        h.kind = HolderId::Kind::Individual;
        if (obj.contains("members")) {
            fail(path + ".members", "individuals may not list members");
        }
    } else if (kind == "collective") {
        h.kind = HolderId::Kind::Collective;
        const json& members = get_array(member(obj, path, "members"), path + ".members");
        int index = 0;
        for (const json& m : members) {
            h.members.push_back(
                holder_from_json(m, path + ".members[" + std::to_string(index++) + "]"));
        }
    } else {
        fail(path + ".kind", "unknown kind '" + kind + "', expected individual or collective");
    }
    return h;
}

json holder_to_json(const HolderId& h) {
    json out;
    out["id"] = h.id;
    out["kind"] = h.kind == HolderId::Kind::Collective ? "collective" : "individual";
    if (h.kind == HolderId::Kind::Collective) {
        json members = json::array();
        for (const auto& m : h.members) {
            members.push_back(holder_to_json(m));
        }
        out["members"] = std::move(members);
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// public surface

std::string format_number(double v) {
    if (std::isnan(v) || std::isinf(v)) {
        throw VtmError("cannot serialise a non-finite number");
    }
    if (v == 0.0) {
        return "0";
    }
    char target_buf[40];
    std::snprintf(target_buf, sizeof target_buf, "%.12g", v);
    const double target = std::strtod(target_buf, nullptr);
    for (int precision = 1; precision < 12; ++precision) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == target) {
            return buf;
        }
    }
    return target_buf;
}

Taxonomy parse_taxonomy(const std::string& text, bool check) {
    Taxonomy t = taxonomy_from_json(parse_json(text), "$");
    if (check) {
        const auto report = validate(t);
        if (!report.ok()) {
            std::string message = "invalid taxonomy:";
            for (const auto& v : report.violations) {
                message += "\n  [" + v.rule + "] " + v.message;
            }
            throw ParseError(message, 0, 0, "$");
        }
    }
    return t;
}

std::string serialize_taxonomy(const Taxonomy& t) {
    return dump_canonical(taxonomy_to_json(t));
}

WorldState parse_world(const std::string& text) {
    const json doc = parse_json(text);
    const json& obj = get_object(doc, "$");
    reject_unknown_keys(obj, "$", {"format_version", "counters", "distributions"});
    require_version(obj, "$");
    WorldState w;
    if (obj.contains("counters")) {
        const json& counters = get_object(obj["counters"], "$.counters");
        for (auto it = counters.begin(); it != counters.end(); ++it) {
            w.counters.emplace(it.key(), get_uint(it.value(), "$.counters." + it.key()));
        }
    }
    if (obj.contains("distributions")) {
        const json& dists = get_object(obj["distributions"], "$.distributions");
        for (auto it = dists.begin(); it != dists.end(); ++it) {
            const std::string dpath = "$.distributions." + it.key();
            const json& arr = get_array(it.value(), dpath);
            std::vector<double> entries;
            double sum = 0.0;
            int index = 0;
            for (const json& e : arr) {
                const double v = get_number(e, dpath + "[" + std::to_string(index++) + "]");
                if (v < 0.0) {
                    fail(dpath, "distribution entries must be non-negative");
                }
                entries.push_back(v);
                sum += v;
            }
            if (entries.empty()) {
                fail(dpath, "distribution must not be empty");
            }
            if (std::abs(sum - 1.0) > 1e-9) {
                fail(dpath, "distribution must sum to 1 (got " + format_number(sum) + ")");
            }
            w.distributions.emplace(it.key(), std::move(entries));
        }
    }
    return w;
}

std::string serialize_world(const WorldState& w) {
    json counters = json::object();
    for (const auto& [name, v] : w.counters) {
        counters[name] = v;
    }
    json dists = json::object();
    for (const auto& [name, entries] : w.distributions) {
        dists[name] = entries;
    }
    json doc;
    doc["format_version"] = 1;
    doc["counters"] = std::move(counters);
    doc["distributions"] = std::move(dists);
    return dump_canonical(doc);
}

ContextSpec parse_context(const std::string& text) {
    const json doc = parse_json(text);
    const json& obj = get_object(doc, "$");
    reject_unknown_keys(
        obj, "$", {"format_version", "id", "defining_properties", "params", "leaf_importance"});
    require_version(obj, "$");
    ContextSpec ctx;
    ctx.id = get_string(member(obj, "$", "id"), "$.id");
    if (obj.contains("defining_properties")) {
        const json& props = get_array(obj["defining_properties"], "$.defining_properties");
        int index = 0;
        for (const json& p : props) {
            ctx.defining_properties.insert(
                get_string(p, "$.defining_properties[" + std::to_string(index++) + "]"));
        }
    }
    const json& params = get_object(member(obj, "$", "params"), "$.params");
    reject_unknown_keys(params, "$.params", {"max_ratio", "epsilon", "max_delta"});
    ctx.params.max_ratio = get_number(member(params, "$.params", "max_ratio"), "$.params.max_ratio");
    ctx.params.epsilon = get_number(member(params, "$.params", "epsilon"), "$.params.epsilon");
    ctx.params.max_delta = get_number(member(params, "$.params", "max_delta"), "$.params.max_delta");
    if (!(ctx.params.max_ratio > 1.0)) {
        fail("$.params.max_ratio", "max_ratio must be > 1");
    }
    if (!(ctx.params.epsilon > 0.0) || !(ctx.params.max_delta > ctx.params.epsilon)) {
        fail("$.params", "requires 0 < epsilon < max_delta");
    }
    if (obj.contains("leaf_importance")) {
        const json& imp = get_object(obj["leaf_importance"], "$.leaf_importance");
        for (auto it = imp.begin(); it != imp.end(); ++it) {
            const std::string ipath = "$.leaf_importance." + it.key();
            const double v = get_number(it.value(), ipath);
            if (!(v >= -1.0 && v <= 1.0)) {
                fail(ipath, "importance must lie in [-1, 1]");
            }
            ctx.leaf_importance.emplace(it.key(), v);
        }
    }
    return ctx;
}

std::string serialize_context(const ContextSpec& c) {
    json doc;
    doc["format_version"] = 1;
    doc["id"] = c.id;
    doc["defining_properties"] = json(c.defining_properties);
    doc["params"] = {{"max_ratio", c.params.max_ratio},
                     {"epsilon", c.params.epsilon},
                     {"max_delta", c.params.max_delta}};
    json imp = json::object();
    for (const auto& [id, v] : c.leaf_importance) {
        imp[id] = v;
    }
    doc["leaf_importance"] = std::move(imp);
    return dump_canonical(doc);
}

ValueSystem parse_value_system(const std::string& text) {
    const json doc = parse_json(text);
    const json& obj = get_object(doc, "$");
    reject_unknown_keys(obj, "$", {"format_version", "holder", "taxonomies"});
    require_version(obj, "$");
    ValueSystem vs;
    vs.holder = holder_from_json(member(obj, "$", "holder"), "$.holder");
    const auto holder_report = validate_holder(vs.holder);
    if (!holder_report.ok()) {
        fail("$.holder", holder_report.violations.front().message);
    }
    if (obj.contains("taxonomies")) {
        const json& taxonomies = get_object(obj["taxonomies"], "$.taxonomies");
        for (auto it = taxonomies.begin(); it != taxonomies.end(); ++it) {
            const std::string tpath = "$.taxonomies." + it.key();
            Taxonomy t = taxonomy_from_json(it.value(), tpath);
            const auto report = validate(t);
            if (!report.ok()) {
                fail(tpath, report.violations.front().message);
            }
            vs.taxonomies.emplace(it.key(), std::move(t));
        }
    }
    return vs;
}

std::string serialize_value_system(const ValueSystem& vs) {
    json taxonomies = json::object();
    for (const auto& [name, t] : vs.taxonomies) {
        taxonomies[name] = taxonomy_to_json(t);
    }
    json doc;
    doc["format_version"] = 1;
    doc["holder"] = holder_to_json(vs.holder);
    doc["taxonomies"] = std::move(taxonomies);
    return dump_canonical(doc);
}

AlignmentReport parse_alignment_report(const std::string& text) {
    const json doc = parse_json(text);
    const json& obj = get_object(doc, "$");
    reject_unknown_keys(obj, "$", {"format_version", "score", "variant", "per_property"});
    require_version(obj, "$");
    AlignmentReport r;
    r.score = get_number(member(obj, "$", "score"), "$.score");
    const std::string variant = get_string(member(obj, "$", "variant"), "$.variant");
    if (variant == "simple") {
        r.variant = AlignmentVariant::Simple;
    } else if (variant == "path-weighted") {
        r.variant = AlignmentVariant::PathWeighted;
    } else {
        fail("$.variant", "unknown variant '" + variant + "'");
    }
    const json& per = get_object(member(obj, "$", "per_property"), "$.per_property");
    for (auto it = per.begin(); it != per.end(); ++it) {
        const std::string ppath = "$.per_property." + it.key();
        const json& entry = get_object(it.value(), ppath);
        reject_unknown_keys(entry, ppath, {"importance", "degree", "contribution"});
        PropertyContribution c;
        c.importance = get_number(member(entry, ppath, "importance"), ppath + ".importance");
        c.degree = get_number(member(entry, ppath, "degree"), ppath + ".degree");
        c.contribution =
            get_number(member(entry, ppath, "contribution"), ppath + ".contribution");
        r.per_property.emplace(it.key(), c);
    }
    return r;
}

std::string serialize_alignment_report(const AlignmentReport& r) {
    json per = json::object();
    for (const auto& [id, c] : r.per_property) {
        per[id] = {{"importance", c.importance},
                   {"degree", c.degree},
                   {"contribution", c.contribution}};
    }
    json doc;
    doc["format_version"] = 1;
    doc["score"] = r.score;
    doc["variant"] = r.variant == AlignmentVariant::PathWeighted ? "path-weighted" : "simple";
    doc["per_property"] = std::move(per);
    return dump_canonical(doc);
}

std::string export_dot(const Taxonomy& t) {
    auto dot_id = [](const std::string& id) {
        const bool alpha_ok = !id.empty() && !(id.front() >= '0' && id.front() <= '9') &&
                              std::all_of(id.begin(), id.end(), [](char c) {
                                  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                                         (c >= '0' && c <= '9') || c == '_';
                              });
        const bool numeral = !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
                                 return c >= '0' && c <= '9';
                             });
        if (alpha_ok || numeral) {
            return id;
        }
        return '"' + id + '"';
    };

    std::string out = "digraph taxonomy {\n";
    for (const auto& [id, node] : t.nodes) {
        const char* shape = node.kind == NodeKind::Property ? "box" : "ellipse";
        std::string label = id;
        auto it = t.importance.find(id);
        if (it != t.importance.end()) {
            label += "\\n(" + format_number(it->second) + ")";
        }
        out += "  " + dot_id(id) + " [shape=" + shape + ", label=\"" + label + "\"];\n";
    }
    for (const auto& [parent, child] : t.edges) {
        out += "  " + dot_id(parent) + " -> " + dot_id(child) + ";\n";
    }
    out += "}\n";
    return out;
}

} // namespace vtm
