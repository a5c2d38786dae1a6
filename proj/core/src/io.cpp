#include "dzx/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

namespace dzx::io {

namespace {

Json parse_text(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) throw FormatError(std::string(what) + " must be a number");
    return j.get<double>();
}

std::size_t count(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw FormatError(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

std::map<long long, std::size_t> port_table(const Json& ports, const char* what) {
    if (!ports.is_array()) throw FormatError(std::string(what) + " must be an array of port ids");
    std::map<long long, std::size_t> table;
    for (std::size_t i = 0; i < ports.size(); ++i) {
        if (!ports[i].is_number_integer()) throw FormatError(std::string(what) + " port ids must be integers");
        if (!table.emplace(ports[i].get<long long>(), i).second)
            throw FormatError(std::string("duplicate port id in ") + what);
    }
    return table;
}

}  // namespace

Diagram diagram_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("diagram must be a JSON object");
    const auto inputs = port_table(field(j, "inputs"), "inputs");
    const auto outputs = port_table(field(j, "outputs"), "outputs");
    const Json& nodes = field(j, "nodes");
    const Json& edges = field(j, "edges");
    if (!nodes.is_array() || !edges.is_array()) throw FormatError("nodes and edges must be arrays");

    struct Pending {
        NodeKind kind;
        double param;
        std::optional<double> weight;
        std::size_t ins = 0;
        std::size_t outs = 0;
    };
    std::map<long long, std::size_t> index;
    std::vector<Pending> pending;
    for (const auto& n : nodes) {
        if (!field(n, "id").is_number_integer()) throw FormatError("node id must be an integer");
        const auto id = n.at("id").get<long long>();
        if (!index.emplace(id, pending.size()).second) throw FormatError("duplicate node id " + std::to_string(id));
        const Json& kind = field(n, "kind");
        Pending p{};
        if (kind == "green") {
            p.kind = NodeKind::green;
            p.param = n.contains("param") ? number(n.at("param"), "param") : 1.0;
        } else if (kind == "red") {
            p.kind = NodeKind::red;
            p.param = n.contains("param") ? number(n.at("param"), "param") : 0.0;
        } else if (kind == "scalar") {
            p.kind = NodeKind::scalar;
            p.param = number(field(n, "param"), "scalar param");
        } else {
            throw FormatError("unknown node kind " + kind.dump());
        }
        if (n.contains("weight")) p.weight = number(n.at("weight"), "weight");
        pending.push_back(p);
    }

    std::vector<std::pair<Endpoint, Endpoint>> links;
    auto endpoint = [&](const Json& e) -> Endpoint {
        if (!e.is_object() || e.size() != 1) throw FormatError("endpoint must be {\"node\"|\"in\"|\"out\": id}");
        const std::string key = e.begin().key();
        const Json& value = e.begin().value();
        if (!value.is_number_integer()) throw FormatError("endpoint id must be an integer");
        const auto id = value.get<long long>();
        const std::map<long long, std::size_t>* table = nullptr;
        if (key == "node") table = &index;
        if (key == "in") table = &inputs;
        if (key == "out") table = &outputs;
        if (table == nullptr) throw FormatError("unknown endpoint kind \"" + key + "\"");
        const auto it = table->find(id);
        if (it == table->end()) throw FormatError("endpoint refers to unknown " + key + " " + std::to_string(id));
        if (key == "in") return Endpoint::input(it->second);
        if (key == "out") return Endpoint::output(it->second);
        return Endpoint::node(static_cast<NodeId>(it->second));
    };
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2) throw FormatError("edge must be a pair of endpoints");
        const Endpoint a = endpoint(e[0]);
        const Endpoint b = endpoint(e[1]);
        if (a.is_node()) ++pending[a.index].outs;
        if (b.is_node()) ++pending[b.index].ins;
        links.emplace_back(a, b);
    }

    Diagram d(inputs.size(), outputs.size());
    for (const auto& p : pending) {
        double weight = 1.0;
        double param = p.param;
        switch (p.kind) {
            case NodeKind::green:
                weight = p.weight.value_or(std::ldexp(1.0, static_cast<int>(p.ins) - 1));
                break;
            case NodeKind::red:
                weight = p.weight.value_or(std::ldexp(1.0, 1 - static_cast<int>(p.outs)));
                break;
            case NodeKind::scalar:
                weight = p.param * p.weight.value_or(1.0);
                param = 0.0;
                break;
        }
        // Ids are assigned densely in file order, matching `index`.
        (void)d.add_node(p.kind, param, weight);
    }
    for (const auto& [a, b] : links) d.add_edge(a, b);
    require_valid(d);
    return d;
}

Diagram parse_diagram(std::string_view text) { return diagram_from_json(parse_text(text)); }

Json diagram_to_json(const Diagram& d) {
    Json j;
    j["inputs"] = Json::array();
    j["outputs"] = Json::array();
    for (std::size_t i = 0; i < d.num_inputs(); ++i) j["inputs"].push_back(i);
    for (std::size_t i = 0; i < d.num_outputs(); ++i) j["outputs"].push_back(i);
    j["nodes"] = Json::array();
    for (const auto& n : d.nodes()) {
        Json node;
        node["id"] = n.id;
        node["kind"] = to_string(n.kind);
        if (n.kind == NodeKind::scalar) {
            node["param"] = n.weight;
        } else {
            node["param"] = n.param;
            node["weight"] = n.weight;
        }
        j["nodes"].push_back(std::move(node));
    }
    auto endpoint = [](const Endpoint& e) {
        Json out;
        switch (e.kind) {
            case Endpoint::Kind::node:
                out["node"] = e.index;
                break;
            case Endpoint::Kind::input:
                out["in"] = e.index;
                break;
            case Endpoint::Kind::output:
                out["out"] = e.index;
                break;
        }
        return out;
    };
    j["edges"] = Json::array();
    for (const auto& e : d.edges()) j["edges"].push_back(Json::array({endpoint(e.a), endpoint(e.b)}));
    return j;
}

NonNegMatrix matrix_from_json(const Json& j) {
    const std::size_t in = count(field(j, "in_qubits"), "in_qubits");
    const std::size_t out = count(field(j, "out_qubits"), "out_qubits");
    if (in + out > 30) throw FormatError("matrix is too large");
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) throw FormatError("entries must be an array");
    if (entries.size() != (std::size_t{1} << (in + out)))
        throw FormatError("entries must hold 2^(in_qubits + out_qubits) values");
    std::vector<double> values;
    values.reserve(entries.size());
    for (const auto& e : entries) {
        const double v = number(e, "entry");
        if (!(v >= 0.0) || !std::isfinite(v)) throw FormatError("entries must be finite and nonnegative");
        values.push_back(v);
    }
    return {in, out, std::move(values)};
}

NonNegMatrix parse_matrix(std::string_view text) { return matrix_from_json(parse_text(text)); }

Json matrix_to_json(const NonNegMatrix& m) {
    Json j;
    j["in_qubits"] = m.in_qubits();
    j["out_qubits"] = m.out_qubits();
    j["entries"] = Json::array();
    for (double e : m.entries()) j["entries"].push_back(round_significant(e));
    return j;
}

Json normal_form_to_json(const NormalFormData& nf) {
    Json j;
    if (const auto* zero = std::get_if<ZeroForm>(&nf)) {
        j["zero"] = zero->n;
        return j;
    }
    const auto& form = std::get<AffineForm>(nf);
    j["n"] = form.n;
    j["k"] = form.k();
    j["A"] = Json::array();
    for (std::size_t r = 0; r < form.a.rows(); ++r)
        for (std::size_t c = 0; c < form.a.cols(); ++c) j["A"].push_back(form.a(r, c) ? 1 : 0);
    j["x"] = Json::array();
    for (std::size_t i = 0; i < form.x.size(); ++i) j["x"].push_back(form.x[i] ? 1 : 0);
    j["Lambda"] = round_significant(form.fd.big_lambda);
    j["lambda"] = Json::array();
    for (double l : form.fd.lambda) j["lambda"].push_back(round_significant(l));
    return j;
}

Json trace_to_json(const std::vector<RuleInstance>& trace) {
    Json j = Json::array();
    for (const auto& step : trace) {
        Json s;
        s["rule"] = to_string(step.rule);
        s["site"] = step.site;
        s["params"] = Json::array();
        for (double p : step.params) s["params"].push_back(round_significant(p));
        j.push_back(std::move(s));
    }
    return j;
}

double round_significant(double x, int digits) {
    if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace dzx::io
