#include "dzx/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace dzx {

const char* to_string(NodeKind kind) noexcept {
    switch (kind) {
        case NodeKind::green:
            return "green";
        case NodeKind::red:
            return "red";
        case NodeKind::scalar:
            return "scalar";
    }
    return "?";
}

NodeId Diagram::add_node(NodeKind kind, double param, double weight) {
    const NodeId id = next_id_++;
    nodes_.push_back(Node{id, kind, param, weight});
    return id;
}

void Diagram::insert_node(const Node& node) {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node.id,
                               [](const Node& n, NodeId id) { return n.id < id; });
    if (it != nodes_.end() && it->id == node.id) throw DiagramError("duplicate node id " + std::to_string(node.id));
    nodes_.insert(it, node);
    next_id_ = std::max(next_id_, node.id + 1);
}

void Diagram::add_edge(Endpoint a, Endpoint b) { edges_.push_back(Edge{a, b}); }

void Diagram::remove_edge(std::size_t edge_index) {
    edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(edge_index));
}

void Diagram::remove_node(NodeId id) {
    const auto ep = Endpoint::node(id);
    std::erase_if(edges_, [&](const Edge& e) { return e.touches(ep); });
    std::erase_if(nodes_, [id](const Node& n) { return n.id == id; });
}

void Diagram::set_node(const Node& node) {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node.id,
                               [](const Node& n, NodeId id) { return n.id < id; });
    if (it == nodes_.end() || it->id != node.id) throw DiagramError("unknown node id " + std::to_string(node.id));
    *it = node;
}

bool Diagram::has_node(NodeId id) const {
    return std::binary_search(nodes_.begin(), nodes_.end(), Node{id},
                              [](const Node& a, const Node& b) { return a.id < b.id; });
}

const Node& Diagram::node(NodeId id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id, [](const Node& n, NodeId v) { return n.id < v; });
    if (it == nodes_.end() || it->id != id) throw DiagramError("unknown node id " + std::to_string(id));
    return *it;
}

std::size_t Diagram::degree(NodeId id) const {
    const auto ep = Endpoint::node(id);
    std::size_t d = 0;
    for (const auto& e : edges_) d += static_cast<std::size_t>(e.a == ep) + static_cast<std::size_t>(e.b == ep);
    return d;
}

std::vector<std::size_t> Diagram::incident_edges(const Endpoint& e) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].touches(e)) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

Diagram single_spider(NodeKind kind, std::size_t n, std::size_t m, double param, double weight) {
    Diagram d(n, m);
    const NodeId v = d.add_node(kind, param, weight);
    for (std::size_t i = 0; i < n; ++i) d.add_edge(Endpoint::input(i), Endpoint::node(v));
    for (std::size_t j = 0; j < m; ++j) d.add_edge(Endpoint::node(v), Endpoint::output(j));
    return d;
}

}  // namespace

Diagram green(std::size_t n, std::size_t m, double mu) {
    if (!(mu >= 0.0) || !std::isfinite(mu)) throw DiagramError("green spider parameter must be a finite μ >= 0");
    return single_spider(NodeKind::green, n, m, mu, std::ldexp(1.0, static_cast<int>(n) - 1));
}

Diagram red(std::size_t n, std::size_t m, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DiagramError("red spider parameter must be a probability in [0,1]");
    return single_spider(NodeKind::red, n, m, p, std::ldexp(1.0, 1 - static_cast<int>(m)));
}

Diagram scalar(double s) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw DiagramError("scalar must be a finite s >= 0");
    Diagram d;
    d.add_node(NodeKind::scalar, 0.0, s);
    return d;
}

Diagram identity(std::size_t n) {
    Diagram d(n, n);
    for (std::size_t i = 0; i < n; ++i) d.add_edge(Endpoint::input(i), Endpoint::output(i));
    return d;
}

Diagram swap() {
    const std::size_t perm[] = {1, 0};
    return permutation(perm);
}

Diagram cup() { return green(0, 2, 1.0); }

Diagram cap() { return green(2, 0, 1.0); }

Diagram permutation(std::span<const std::size_t> perm) {
    std::vector<bool> seen(perm.size(), false);
    Diagram d(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= perm.size() || seen[perm[i]]) throw DiagramError("not a permutation");
        seen[perm[i]] = true;
        d.add_edge(Endpoint::input(i), Endpoint::output(perm[i]));
    }
    return d;
}

// ---------------------------------------------------------------------------
// Composition

namespace {

// Endpoint with an extra "junction" kind used while gluing two diagrams.
struct GlueEnd {
    enum class Kind : std::uint8_t { node, input, output, junction };
    Kind kind;
    std::size_t index;
    friend bool operator==(const GlueEnd&, const GlueEnd&) = default;
};

struct GlueEdge {
    GlueEnd a;
    GlueEnd b;
};

Endpoint to_endpoint(const GlueEnd& g) {
    switch (g.kind) {
        case GlueEnd::Kind::node:
            return Endpoint::node(static_cast<NodeId>(g.index));
        case GlueEnd::Kind::input:
            return Endpoint::input(g.index);
        case GlueEnd::Kind::output:
            return Endpoint::output(g.index);
        case GlueEnd::Kind::junction:
            break;
    }
    throw DiagramError("unresolved junction");
}

}  // namespace

Diagram compose_seq(const Diagram& first, const Diagram& second) {
    if (first.num_outputs() != second.num_inputs()) {
        std::ostringstream msg;
        msg << "arity mismatch: " << first.num_outputs() << " outputs composed with " << second.num_inputs()
            << " inputs";
        throw DiagramError(msg.str());
    }
    const NodeId offset = first.next_id();
    Diagram out(first.num_inputs(), second.num_outputs());
    for (const auto& n : first.nodes()) out.insert_node(n);
    for (auto n : second.nodes()) {
        n.id += offset;
        out.insert_node(n);
    }

    std::vector<GlueEdge> edges;
    edges.reserve(first.edges().size() + second.edges().size());
    auto map_first = [](const Endpoint& e) {
        switch (e.kind) {
            case Endpoint::Kind::node:
                return GlueEnd{GlueEnd::Kind::node, e.index};
            case Endpoint::Kind::input:
                return GlueEnd{GlueEnd::Kind::input, e.index};
            case Endpoint::Kind::output:
                break;
        }
        return GlueEnd{GlueEnd::Kind::junction, e.index};
    };
    auto map_second = [offset](const Endpoint& e) {
        switch (e.kind) {
            case Endpoint::Kind::node:
                return GlueEnd{GlueEnd::Kind::node, e.index + offset};
            case Endpoint::Kind::input:
                return GlueEnd{GlueEnd::Kind::junction, e.index};
            case Endpoint::Kind::output:
                break;
        }
        return GlueEnd{GlueEnd::Kind::output, e.index};
    };
    for (const auto& e : first.edges()) edges.push_back({map_first(e.a), map_first(e.b)});
    for (const auto& e : second.edges()) edges.push_back({map_second(e.a), map_second(e.b)});

    std::size_t closed_loops = 0;
    for (std::size_t j = 0; j < first.num_outputs(); ++j) {
        const GlueEnd junction{GlueEnd::Kind::junction, j};
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].a == junction) hits.push_back(i);
            if (edges[i].b == junction) hits.push_back(i);
        }
        if (hits.size() != 2) throw DiagramError("dangling boundary at composed wire " + std::to_string(j));
        if (hits[0] == hits[1]) {
            // A bare wire closed on itself: the circle, worth dimension 2.
            edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(hits[0]));
            ++closed_loops;
            continue;
        }
        const GlueEnd x = edges[hits[0]].a == junction ? edges[hits[0]].b : edges[hits[0]].a;
        const GlueEnd y = edges[hits[1]].a == junction ? edges[hits[1]].b : edges[hits[1]].a;
        edges[hits[0]] = GlueEdge{x, y};
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(hits[1]));
    }
    for (const auto& e : edges) out.add_edge(to_endpoint(e.a), to_endpoint(e.b));
    for (std::size_t i = 0; i < closed_loops; ++i) out.add_node(NodeKind::scalar, 0.0, 2.0);
    return out;
}

Diagram compose_par(const Diagram& top, const Diagram& bottom) {
    const NodeId offset = top.next_id();
    Diagram out(top.num_inputs() + bottom.num_inputs(), top.num_outputs() + bottom.num_outputs());
    for (const auto& n : top.nodes()) out.insert_node(n);
    for (auto n : bottom.nodes()) {
        n.id += offset;
        out.insert_node(n);
    }
    for (const auto& e : top.edges()) out.add_edge(e.a, e.b);
    auto shift = [&](Endpoint e) {
        switch (e.kind) {
            case Endpoint::Kind::node:
                e.index += offset;
                break;
            case Endpoint::Kind::input:
                e.index += top.num_inputs();
                break;
            case Endpoint::Kind::output:
                e.index += top.num_outputs();
                break;
        }
        return e;
    };
    for (const auto& e : bottom.edges()) out.add_edge(shift(e.a), shift(e.b));
    return out;
}

Diagram bend_name(const Diagram& d) {
    const std::size_t n = d.num_inputs();
    const std::size_t m = d.num_outputs();
    Diagram out(0, m + n);
    for (const auto& node : d.nodes()) out.insert_node(node);
    std::vector<NodeId> cups(n);
    for (std::size_t i = 0; i < n; ++i) cups[i] = out.add_node(NodeKind::green, 1.0, 0.5);
    auto bend = [&](const Endpoint& e) {
        return e.kind == Endpoint::Kind::input ? Endpoint::node(cups[e.index]) : e;
    };
    for (const auto& e : d.edges()) out.add_edge(bend(e.a), bend(e.b));
    for (std::size_t i = 0; i < n; ++i) out.add_edge(Endpoint::node(cups[i]), Endpoint::output(m + i));
    return out;
}

namespace {

bool is_plain_bend(const Node& node, double weight) {
    return node.kind == NodeKind::green && node.param == 1.0 && node.weight == weight;
}

// Straightens cap_i followed by a cup into a single wire.
void yank(Diagram& d, NodeId cap_id) {
    const auto cap_end = Endpoint::node(cap_id);
    auto cap_edges = d.incident_edges(cap_end);
    if (cap_edges.size() != 2 || d.degree(cap_id) != 2) return;
    // The cap's first edge goes to the new input; the second to the bent wire.
    const Endpoint outer = d.edges()[cap_edges[0]].other(cap_end);
    const Endpoint inner = d.edges()[cap_edges[1]].other(cap_end);
    if (!inner.is_node()) return;
    const auto cup_id = static_cast<NodeId>(inner.index);
    if (!is_plain_bend(d.node(cup_id), 0.5) || d.degree(cup_id) != 2) return;
    auto cup_edges = d.incident_edges(inner);
    if (cup_edges.size() != 2) return;
    const std::size_t far_edge = d.edges()[cup_edges[0]].touches(cap_end) ? cup_edges[1] : cup_edges[0];
    if (d.edges()[far_edge].touches(cap_end)) return;
    const Endpoint far = d.edges()[far_edge].other(inner);
    d.remove_node(cap_id);
    d.remove_node(cup_id);
    d.add_edge(outer, far);
}

}  // namespace

Diagram unbend(const Diagram& d, std::size_t n) {
    if (n > d.num_outputs()) throw DiagramError("cannot unbend more wires than outputs");
    const std::size_t a = d.num_inputs();
    const std::size_t m = d.num_outputs() - n;
    Diagram out(a + n, m);
    for (const auto& node : d.nodes()) out.insert_node(node);
    std::vector<NodeId> caps(n);
    for (std::size_t i = 0; i < n; ++i) {
        caps[i] = out.add_node(NodeKind::green, 1.0, 2.0);
        out.add_edge(Endpoint::input(a + i), Endpoint::node(caps[i]));
    }
    auto turn = [&](const Endpoint& e) {
        if (e.kind == Endpoint::Kind::output && e.index >= m) return Endpoint::node(caps[e.index - m]);
        return e;
    };
    for (const auto& e : d.edges()) out.add_edge(turn(e.a), turn(e.b));
    for (NodeId c : caps) yank(out, c);
    return out;
}

// ---------------------------------------------------------------------------
// Validation

std::vector<std::string> validate(const Diagram& d) {
    std::vector<std::string> problems;
    std::vector<std::size_t> in_count(d.num_inputs(), 0);
    std::vector<std::size_t> out_count(d.num_outputs(), 0);
    std::map<NodeId, std::size_t> node_degree;

    auto visit = [&](const Endpoint& e, std::size_t edge_index) {
        switch (e.kind) {
            case Endpoint::Kind::node:
                if (!d.has_node(static_cast<NodeId>(e.index))) {
                    problems.push_back("edge " + std::to_string(edge_index) + " references unknown node " +
                                       std::to_string(e.index));
                } else {
                    ++node_degree[static_cast<NodeId>(e.index)];
                }
                break;
            case Endpoint::Kind::input:
                if (e.index >= in_count.size()) {
                    problems.push_back("edge " + std::to_string(edge_index) + " references missing input " +
                                       std::to_string(e.index));
                } else {
                    ++in_count[e.index];
                }
                break;
            case Endpoint::Kind::output:
                if (e.index >= out_count.size()) {
                    problems.push_back("edge " + std::to_string(edge_index) + " references missing output " +
                                       std::to_string(e.index));
                } else {
                    ++out_count[e.index];
                }
                break;
        }
    };
    for (std::size_t i = 0; i < d.edges().size(); ++i) {
        visit(d.edges()[i].a, i);
        visit(d.edges()[i].b, i);
    }
    for (std::size_t i = 0; i < in_count.size(); ++i) {
        if (in_count[i] == 0) problems.push_back("dangling boundary: input " + std::to_string(i));
        if (in_count[i] > 1) problems.push_back("boundary with several edges: input " + std::to_string(i));
    }
    for (std::size_t i = 0; i < out_count.size(); ++i) {
        if (out_count[i] == 0) problems.push_back("dangling boundary: output " + std::to_string(i));
        if (out_count[i] > 1) problems.push_back("boundary with several edges: output " + std::to_string(i));
    }
    for (const auto& n : d.nodes()) {
        const std::string who = std::string(to_string(n.kind)) + " node " + std::to_string(n.id);
        switch (n.kind) {
            case NodeKind::green:
                if (!(n.param >= 0.0) || !std::isfinite(n.param))
                    problems.push_back("parameter range: " + who + " has mu outside [0, inf)");
                break;
            case NodeKind::red:
                if (!(n.param >= 0.0 && n.param <= 1.0))
                    problems.push_back("parameter range: " + who + " has p outside [0, 1]");
                break;
            case NodeKind::scalar:
                if (node_degree.contains(n.id)) problems.push_back("scalar with edges: " + who);
                break;
        }
        const bool weight_ok = n.kind == NodeKind::scalar ? n.weight >= 0.0 : n.weight > 0.0;
        if (!weight_ok || !std::isfinite(n.weight)) problems.push_back("weight: " + who + " has invalid weight");
    }
    return problems;
}

void require_valid(const Diagram& d) {
    auto problems = validate(d);
    if (problems.empty()) return;
    std::string msg = "invalid diagram:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw DiagramError(msg);
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

class IsoSearch {
public:
    IsoSearch(const Diagram& lhs, const Diagram& rhs, double tol) : lhs_(lhs), rhs_(rhs), tol_(tol) {
        for (std::size_t i = 0; i < lhs.nodes().size(); ++i) lhs_index_[lhs.nodes()[i].id] = i;
        for (std::size_t i = 0; i < rhs.nodes().size(); ++i) rhs_index_[rhs.nodes()[i].id] = i;
        lhs_adj_ = adjacency(lhs, lhs_index_);
        rhs_adj_ = adjacency(rhs, rhs_index_);
        map_.assign(lhs.nodes().size(), kUnmapped);
        used_.assign(rhs.nodes().size(), false);
    }

    bool run() {
        if (lhs_adj_.boundary != rhs_adj_.boundary) return false;
        return extend(0);
    }

private:
    static constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

    // Multiplicities keyed by (local endpoint code, local endpoint code). Nodes use their
    // position; ports use negative codes so they are fixed by the search.
    struct Adjacency {
        std::map<std::pair<long, long>, std::size_t> pairs;
        std::map<std::pair<long, long>, std::size_t> boundary;  // port-port bare wires
        std::vector<std::map<long, std::size_t>> per_node;      // neighbor code -> multiplicity
    };

    static long code(const Endpoint& e, const std::map<NodeId, std::size_t>& index) {
        switch (e.kind) {
            case Endpoint::Kind::node:
                return static_cast<long>(index.at(static_cast<NodeId>(e.index)));
            case Endpoint::Kind::input:
                return -1 - 2 * static_cast<long>(e.index);
            case Endpoint::Kind::output:
                break;
        }
        return -2 - 2 * static_cast<long>(e.index);
    }

    static Adjacency adjacency(const Diagram& d, const std::map<NodeId, std::size_t>& index) {
        Adjacency adj;
        adj.per_node.resize(d.nodes().size());
        for (const auto& e : d.edges()) {
            long a = code(e.a, index);
            long b = code(e.b, index);
            if (a > b) std::swap(a, b);
            if (b < 0) {
                ++adj.boundary[{a, b}];
                continue;
            }
            ++adj.per_node[static_cast<std::size_t>(b)][a];
            if (a >= 0 && a != b) ++adj.per_node[static_cast<std::size_t>(a)][b];
        }
        return adj;
    }

    bool compatible(std::size_t l, std::size_t r) const {
        const Node& a = lhs_.nodes()[l];
        const Node& b = rhs_.nodes()[r];
        if (a.kind != b.kind || !close(a.param, b.param, tol_) || !close(a.weight, b.weight, tol_)) return false;
        const auto& la = lhs_adj_.per_node[l];
        const auto& rb = rhs_adj_.per_node[r];
        std::size_t ld = 0;
        std::size_t rd = 0;
        for (auto [k, v] : la) ld += v;
        for (auto [k, v] : rb) rd += v;
        if (ld != rd) return false;
        // Check every neighbor already fixed: ports, self, and mapped nodes.
        for (auto [nb, mult] : la) {
            long target;
            if (nb < 0) {
                target = nb;
            } else if (static_cast<std::size_t>(nb) == l) {
                target = static_cast<long>(r);
            } else if (map_[static_cast<std::size_t>(nb)] != kUnmapped) {
                target = static_cast<long>(map_[static_cast<std::size_t>(nb)]);
            } else {
                continue;
            }
            auto it = rb.find(target);
            if (it == rb.end() || it->second != mult) return false;
        }
        for (auto [nb, mult] : rb) {
            if (nb < 0) {
                auto it = la.find(nb);
                if (it == la.end() || it->second != mult) return false;
            }
        }
        return true;
    }

    bool extend(std::size_t l) {
        if (l == map_.size()) return true;
        for (std::size_t r = 0; r < used_.size(); ++r) {
            if (used_[r] || !compatible(l, r)) continue;
            map_[l] = r;
            used_[r] = true;
            if (extend(l + 1)) return true;
            map_[l] = kUnmapped;
            used_[r] = false;
        }
        return false;
    }

    const Diagram& lhs_;
    const Diagram& rhs_;
    double tol_;
    std::map<NodeId, std::size_t> lhs_index_;
    std::map<NodeId, std::size_t> rhs_index_;
    Adjacency lhs_adj_;
    Adjacency rhs_adj_;
    std::vector<std::size_t> map_;
    std::vector<bool> used_;
};

}  // namespace

bool is_isomorphic(const Diagram& lhs, const Diagram& rhs, double tol) {
    if (lhs.num_inputs() != rhs.num_inputs() || lhs.num_outputs() != rhs.num_outputs()) return false;
    if (lhs.nodes().size() != rhs.nodes().size() || lhs.edges().size() != rhs.edges().size()) return false;
    return IsoSearch(lhs, rhs, tol).run();
}

}  // namespace dzx
