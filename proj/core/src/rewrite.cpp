#include "dzx/rewrite.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "dzx/fourier.hpp"
#include "dzx/semantics.hpp"

namespace dzx {

const char* to_string(RuleId rule) noexcept {
    switch (rule) {
        case RuleId::F1:
            return "F1";
        case RuleId::F2:
            return "F2";
        case RuleId::M:
            return "M";
        case RuleId::L:
            return "L";
        case RuleId::ID:
            return "ID";
        case RuleId::COPY:
            return "COPY";
        case RuleId::BIALG:
            return "BIALG";
        case RuleId::SCALAR:
            return "SCALAR";
        case RuleId::custom:
            return "custom";
    }
    return "?";
}

std::optional<RuleId> parse_rule_id(std::string_view name) noexcept {
    for (auto r : {RuleId::F1, RuleId::F2, RuleId::M, RuleId::L, RuleId::ID, RuleId::COPY, RuleId::BIALG,
                   RuleId::SCALAR, RuleId::custom})
        if (name == to_string(r)) return r;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Patches

namespace {

constexpr double kSoundnessTol = 1e-9;
constexpr std::size_t kMaxGateWires = 16;

struct Leg {
    std::size_t edge;
    Endpoint other;
};

// Edges at a node; a self-loop appears once with other == the node itself.
std::vector<Leg> legs_of(const Diagram& d, NodeId v) {
    const auto ep = Endpoint::node(v);
    std::vector<Leg> out;
    for (std::size_t i = 0; i < d.edges().size(); ++i) {
        const auto& e = d.edges()[i];
        if (e.touches(ep)) out.push_back({i, e.other(ep)});
    }
    return out;
}

std::size_t self_loops(const std::vector<Leg>& legs, NodeId v) {
    return static_cast<std::size_t>(
        std::count_if(legs.begin(), legs.end(), [v](const Leg& l) { return l.other == Endpoint::node(v); }));
}

bool relative_match(const NonNegMatrix& lhs, const NonNegMatrix& rhs, double tol) {
    double diff = 0.0;
    double mag = 0.0;
    for (std::size_t i = 0; i < lhs.entries().size(); ++i) {
        diff = std::max(diff, std::abs(lhs.entries()[i] - rhs.entries()[i]));
        mag = std::max({mag, lhs.entries()[i], rhs.entries()[i]});
    }
    return diff <= tol * mag;
}

bool same_semantics(const Diagram& lhs, const Diagram& rhs) {
    if (lhs.num_inputs() != rhs.num_inputs() || lhs.num_outputs() != rhs.num_outputs()) return false;
    return relative_match(evaluate(lhs), evaluate(rhs), kSoundnessTol);
}

Diagram commit(const Diagram& d, const Patch& patch, const Diagram& replacement, RuleId rule, Gate gate) {
    if (gate == Gate::checked && !patch_is_sound(d, patch, replacement))
        throw RewriteError(std::string("rule shape rejected: ") + to_string(rule) +
                           " replacement does not preserve the interpretation");
    return replace_patch(d, patch, replacement);
}

std::size_t cut_index(const Patch& patch, NodeId inside) {
    auto it = std::find(patch.inside.begin(), patch.inside.end(), inside);
    if (it == patch.inside.end()) throw RewriteError("node has no cut edge");
    return static_cast<std::size_t>(it - patch.inside.begin());
}

}  // namespace

Patch extract_patch(const Diagram& d, std::span<const NodeId> nodes) {
    Patch patch;
    patch.nodes.assign(nodes.begin(), nodes.end());
    std::sort(patch.nodes.begin(), patch.nodes.end());
    patch.nodes.erase(std::unique(patch.nodes.begin(), patch.nodes.end()), patch.nodes.end());
    auto inside = [&](const Endpoint& e) {
        return e.is_node() && std::binary_search(patch.nodes.begin(), patch.nodes.end(), static_cast<NodeId>(e.index));
    };
    for (NodeId v : patch.nodes) patch.local.insert_node(d.node(v));
    std::vector<Edge> internal;
    std::vector<Endpoint> near;
    for (const auto& e : d.edges()) {
        const bool ia = inside(e.a);
        const bool ib = inside(e.b);
        if (ia && ib) {
            internal.push_back(e);
        } else if (ia || ib) {
            near.push_back(ia ? e.a : e.b);
            patch.outside.push_back(ia ? e.b : e.a);
            patch.inside.push_back(static_cast<NodeId>(near.back().index));
        }
    }
    patch.local.set_arity(0, near.size());
    for (const auto& e : internal) patch.local.add_edge(e.a, e.b);
    for (std::size_t j = 0; j < near.size(); ++j) patch.local.add_edge(near[j], Endpoint::output(j));
    return patch;
}

Diagram replace_patch(const Diagram& d, const Patch& patch, const Diagram& replacement) {
    if (replacement.num_inputs() != 0 || replacement.num_outputs() != patch.outside.size())
        throw RewriteError("replacement arity does not match the patch boundary");
    Diagram out = d;
    for (NodeId v : patch.nodes) out.remove_node(v);
    std::map<NodeId, NodeId> fresh;
    for (const auto& n : replacement.nodes()) fresh[n.id] = out.add_node(n.kind, n.param, n.weight);
    auto map_end = [&](const Endpoint& e) {
        switch (e.kind) {
            case Endpoint::Kind::node:
                return Endpoint::node(fresh.at(static_cast<NodeId>(e.index)));
            case Endpoint::Kind::output:
                return patch.outside.at(e.index);
            case Endpoint::Kind::input:
                break;
        }
        throw RewriteError("replacement must be a state");
    };
    for (const auto& e : replacement.edges()) out.add_edge(map_end(e.a), map_end(e.b));
    return out;
}

bool patch_is_sound(const Diagram& d, const Patch& patch, const Diagram& replacement) {
    try {
        if (patch.local.num_outputs() <= kMaxGateWires) return same_semantics(patch.local, replacement);
        if (d.num_inputs() + d.num_outputs() <= kMaxGateWires)
            return same_semantics(d, replace_patch(d, patch, replacement));
    } catch (const EvaluationError&) {
    }
    throw RewriteError("soundness check infeasible: patch and diagram boundaries are too wide");
}

// ---------------------------------------------------------------------------
// Fusion

namespace {

Diagram fuse(const Diagram& d, NodeId a, NodeId b, NodeKind kind, Gate gate) {
    const RuleId rule = kind == NodeKind::green ? RuleId::F1 : RuleId::F2;
    if (!d.has_node(a) || !d.has_node(b)) throw RewriteError("fusion site references unknown node");
    const Node& na = d.node(a);
    const Node& nb = d.node(b);
    if (na.kind != kind || nb.kind != kind) throw RewriteError("wrong-color site for fusion");
    if (a == b) throw RewriteError("cannot fuse a node with itself");
    const auto legs_a = legs_of(d, a);
    const auto shared = static_cast<std::size_t>(std::count_if(
        legs_a.begin(), legs_a.end(), [b](const Leg& l) { return l.other == Endpoint::node(b); }));
    if (shared == 0) throw RewriteError("fusion site nodes are not adjacent");
    const std::size_t loops = self_loops(legs_a, a) + self_loops(legs_of(d, b), b);

    const NodeId site[] = {a, b};
    Patch patch = extract_patch(d, site);
    Diagram merged(0, patch.outside.size());
    double param = 0.0;
    double weight = na.weight * nb.weight;
    if (kind == NodeKind::green) {
        param = na.param * nb.param;
    } else {
        // Every leftover loop on a red spider sums a free wire against an even parity.
        param = prob_xor(na.param, nb.param);
        weight *= std::ldexp(1.0, static_cast<int>(shared - 1 + loops));
    }
    const NodeId v = merged.add_node(kind, param, weight);
    for (std::size_t j = 0; j < patch.outside.size(); ++j) merged.add_edge(Endpoint::node(v), Endpoint::output(j));
    return commit(d, patch, merged, rule, gate);
}

}  // namespace

Diagram fuse_green(const Diagram& d, NodeId a, NodeId b, Gate gate) { return fuse(d, a, b, NodeKind::green, gate); }

Diagram fuse_red(const Diagram& d, NodeId a, NodeId b, Gate gate) { return fuse(d, a, b, NodeKind::red, gate); }

// ---------------------------------------------------------------------------
// Colour change, identity, copy

Diagram color_convert_state(const Diagram& d, NodeId state, Gate gate) {
    if (!d.has_node(state)) throw RewriteError("M site references unknown node");
    const Node& n = d.node(state);
    if (n.kind == NodeKind::scalar || d.degree(state) != 1) throw RewriteError("M site must be a degree-1 spider");
    const NodeId site[] = {state};
    Patch patch = extract_patch(d, site);
    Diagram out(0, 1);
    NodeId v = 0;
    if (n.kind == NodeKind::red) {
        if (n.param >= 1.0) throw RewriteError("pole: red state with p = 1 has no green form");
        out.add_node(NodeKind::scalar, 0.0, n.weight * (1.0 - n.param));
        v = out.add_node(NodeKind::green, n.param / (1.0 - n.param), 1.0);
    } else {
        out.add_node(NodeKind::scalar, 0.0, n.weight * (1.0 + n.param));
        v = out.add_node(NodeKind::red, n.param / (1.0 + n.param), 1.0);
    }
    out.add_edge(Endpoint::node(v), Endpoint::output(0));
    return commit(d, patch, out, RuleId::M, gate);
}

Diagram remove_identity(const Diagram& d, NodeId node, Gate gate) {
    if (!d.has_node(node)) throw RewriteError("ID site references unknown node");
    const Node& n = d.node(node);
    const bool phaseless = (n.kind == NodeKind::green && n.param == 1.0) || (n.kind == NodeKind::red && n.param == 0.0);
    const auto legs = legs_of(d, node);
    if (!phaseless || legs.size() != 2 || self_loops(legs, node) != 0)
        throw RewriteError("ID site must be a phaseless degree-2 spider");
    const NodeId site[] = {node};
    Patch patch = extract_patch(d, site);
    Diagram wire(0, 2);
    wire.add_edge(Endpoint::output(0), Endpoint::output(1));
    if (n.weight != 1.0) wire.add_node(NodeKind::scalar, 0.0, n.weight);
    return commit(d, patch, wire, RuleId::ID, gate);
}

Diagram copy_rule(const Diagram& d, NodeId state, Gate gate) {
    if (!d.has_node(state)) throw RewriteError("COPY site references unknown node");
    const Node& s = d.node(state);
    const auto legs = legs_of(d, state);
    if (s.kind != NodeKind::red || legs.size() != 1 || !legs[0].other.is_node())
        throw RewriteError("COPY site must be a red state attached to a spider");
    const auto g = static_cast<NodeId>(legs[0].other.index);
    const Node& gn = d.node(g);
    if (gn.kind != NodeKind::green) throw RewriteError("COPY site must feed a green spider");
    const NodeId site[] = {state, g};
    Patch patch = extract_patch(d, site);
    Diagram copies(0, patch.outside.size());
    const double p = s.param;
    const double factor = s.weight * gn.weight * ((1.0 - p) + p * gn.param);
    if (factor != 1.0) copies.add_node(NodeKind::scalar, 0.0, factor);
    for (std::size_t j = 0; j < patch.outside.size(); ++j) {
        const NodeId c = copies.add_node(NodeKind::red, p, 1.0);
        copies.add_edge(Endpoint::node(c), Endpoint::output(j));
    }
    return commit(d, patch, copies, RuleId::COPY, gate);
}

// ---------------------------------------------------------------------------
// Bialgebra

namespace {

struct Square {
    NodeId g1, g2, r1, r2;
};

bool plain_degree3(const Diagram& d, NodeId v, NodeKind kind) {
    const Node& n = d.node(v);
    const double plain = kind == NodeKind::green ? 1.0 : 0.0;
    if (n.kind != kind || n.param != plain) return false;
    const auto legs = legs_of(d, v);
    if (legs.size() != 3 || self_loops(legs, v) != 0) return false;
    std::set<Endpoint> distinct;
    for (const auto& l : legs) distinct.insert(l.other);
    return distinct.size() == 3;
}

std::vector<NodeId> node_neighbors(const Diagram& d, NodeId v, NodeKind kind) {
    std::vector<NodeId> out;
    for (const auto& l : legs_of(d, v))
        if (l.other.is_node() && l.other.index != v && d.node(static_cast<NodeId>(l.other.index)).kind == kind)
            out.push_back(static_cast<NodeId>(l.other.index));
    return out;
}

std::optional<Square> match_square(const Diagram& d, NodeId g1) {
    if (!d.has_node(g1) || !plain_degree3(d, g1, NodeKind::green)) return std::nullopt;
    auto reds = node_neighbors(d, g1, NodeKind::red);
    std::erase_if(reds, [&](NodeId r) { return !plain_degree3(d, r, NodeKind::red); });
    for (std::size_t i = 0; i < reds.size(); ++i)
        for (std::size_t j = i + 1; j < reds.size(); ++j) {
            const auto greens1 = node_neighbors(d, reds[i], NodeKind::green);
            const auto greens2 = node_neighbors(d, reds[j], NodeKind::green);
            for (NodeId g2 : greens1) {
                if (g2 == g1 || std::find(greens2.begin(), greens2.end(), g2) == greens2.end()) continue;
                if (!plain_degree3(d, g2, NodeKind::green)) continue;
                return Square{g1, g2, reds[i], reds[j]};
            }
        }
    return std::nullopt;
}

}  // namespace

Diagram bialgebra(const Diagram& d, NodeId g, Gate gate) {
    const auto sq = match_square(d, g);
    if (!sq) throw RewriteError("BIALG site is not a green/red square");
    const NodeId site[] = {sq->g1, sq->g2, sq->r1, sq->r2};
    Patch patch = extract_patch(d, site);
    if (patch.outside.size() != 4) throw RewriteError("BIALG square must have exactly four external legs");
    for (NodeId v : site)
        if (std::count(patch.inside.begin(), patch.inside.end(), v) != 1)
            throw RewriteError("BIALG square nodes must have one external leg each");

    Diagram pair(0, 4);
    const NodeId parity = pair.add_node(NodeKind::red, 0.0, 1.0);
    const NodeId copy = pair.add_node(NodeKind::green, 1.0, 1.0);
    pair.add_edge(Endpoint::output(cut_index(patch, sq->g1)), Endpoint::node(parity));
    pair.add_edge(Endpoint::output(cut_index(patch, sq->g2)), Endpoint::node(parity));
    pair.add_edge(Endpoint::node(parity), Endpoint::node(copy));
    pair.add_edge(Endpoint::node(copy), Endpoint::output(cut_index(patch, sq->r1)));
    pair.add_edge(Endpoint::node(copy), Endpoint::output(cut_index(patch, sq->r2)));
    double w = 1.0;
    for (NodeId v : site) w *= d.node(v).weight;
    if (w != 1.0) pair.add_node(NodeKind::scalar, 0.0, w);
    return commit(d, patch, pair, RuleId::BIALG, gate);
}

// ---------------------------------------------------------------------------
// Rule L

namespace {

struct LGadget {
    NodeId center;
    std::vector<NodeId> xors;    // in the centre's edge order
    std::vector<NodeId> leaves;  // green μ_i leaf of each xor
};

std::optional<LGadget> match_L(const Diagram& d, NodeId center) {
    if (!d.has_node(center)) return std::nullopt;
    const Node& c = d.node(center);
    if (c.kind != NodeKind::green) return std::nullopt;
    const auto legs = legs_of(d, center);
    if (legs.empty() || self_loops(legs, center) != 0) return std::nullopt;
    LGadget gadget{center, {}, {}};
    std::vector<std::size_t> free_edges;
    for (const auto& leg : legs) {
        if (!leg.other.is_node()) return std::nullopt;
        const auto r = static_cast<NodeId>(leg.other.index);
        if (std::find(gadget.xors.begin(), gadget.xors.end(), r) != gadget.xors.end()) return std::nullopt;
        if (!plain_degree3(d, r, NodeKind::red)) return std::nullopt;
        std::optional<NodeId> leaf;
        std::optional<std::size_t> free_edge;
        for (const auto& rl : legs_of(d, r)) {
            if (rl.edge == leg.edge) continue;
            const bool is_leaf = rl.other.is_node() && d.node(static_cast<NodeId>(rl.other.index)).kind == NodeKind::green &&
                                 d.degree(static_cast<NodeId>(rl.other.index)) == 1;
            if (is_leaf && !leaf) {
                leaf = static_cast<NodeId>(rl.other.index);
            } else {
                free_edge = rl.edge;
            }
        }
        if (!leaf || !free_edge) return std::nullopt;
        gadget.xors.push_back(r);
        gadget.leaves.push_back(*leaf);
        free_edges.push_back(*free_edge);
    }
    std::set<NodeId> members(gadget.xors.begin(), gadget.xors.end());
    members.insert(gadget.leaves.begin(), gadget.leaves.end());
    members.insert(center);
    for (std::size_t i = 0; i < free_edges.size(); ++i) {
        const auto& e = d.edges()[free_edges[i]];
        const Endpoint far = e.other(Endpoint::node(gadget.xors[i]));
        if (far.is_node() && members.contains(static_cast<NodeId>(far.index))) return std::nullopt;
    }
    return gadget;
}

}  // namespace

Diagram apply_rule_L(const Diagram& d, NodeId center, Gate gate) {
    const auto gadget = match_L(d, center);
    if (!gadget) throw RewriteError("L site does not match the copied-bit gadget");
    const double lambda = d.node(center).param;
    if (!(lambda > 0.0)) throw RewriteError("L precondition violated: λ must be positive");
    const std::size_t n = gadget->xors.size();
    std::vector<double> mu(n);
    double w = d.node(center).weight;
    for (std::size_t i = 0; i < n; ++i) {
        const Node& leaf = d.node(gadget->leaves[i]);
        mu[i] = leaf.param;
        if (!(mu[i] > 0.0)) throw RewriteError("L precondition violated: every μ_i must be positive");
        w *= leaf.weight * d.node(gadget->xors[i]).weight;
    }
    // v_y = Π μ_i^{y_i} + λ Π μ_i^{1−y_i}, the two branches of the copied bit.
    std::vector<double> v(std::size_t{1} << n);
    for (std::size_t y = 0; y < v.size(); ++y) {
        double zero_branch = 1.0;
        double one_branch = lambda;
        for (std::size_t i = 0; i < n; ++i) {
            const bool bit = ((y >> (n - 1 - i)) & 1U) != 0;
            zero_branch *= bit ? mu[i] : 1.0;
            one_branch *= bit ? 1.0 : mu[i];
        }
        v[y] = w * (zero_branch + one_branch);
    }
    const FourierData fd = fourier_synthesize(v);

    std::vector<NodeId> site{center};
    site.insert(site.end(), gadget->xors.begin(), gadget->xors.end());
    site.insert(site.end(), gadget->leaves.begin(), gadget->leaves.end());
    Patch patch = extract_patch(d, site);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = cut_index(patch, gadget->xors[i]);
    const Diagram fnf = compose_seq(fourier_gadget_state(fd.lambda, fd.big_lambda), permutation(perm));
    return commit(d, patch, fnf, RuleId::L, gate);
}

// ---------------------------------------------------------------------------
// Scalars, dispatch, matching

Diagram merge_scalars(const Diagram& d, Gate gate) {
    std::vector<NodeId> scalars;
    double product = 1.0;
    for (const auto& n : d.nodes())
        if (n.kind == NodeKind::scalar) {
            scalars.push_back(n.id);
            product *= n.weight;
        }
    if (scalars.size() < 2) throw RewriteError("SCALAR needs at least two scalar nodes");
    Patch patch = extract_patch(d, scalars);
    Diagram one;
    one.add_node(NodeKind::scalar, 0.0, product);
    return commit(d, patch, one, RuleId::SCALAR, gate);
}

Diagram apply_rule(const Diagram& d, const RuleInstance& rule, Gate gate) {
    auto need = [&](std::size_t count) {
        if (rule.site.size() < count) throw RewriteError(std::string(to_string(rule.rule)) + " site is incomplete");
    };
    switch (rule.rule) {
        case RuleId::F1:
            need(2);
            return fuse_green(d, rule.site[0], rule.site[1], gate);
        case RuleId::F2:
            need(2);
            return fuse_red(d, rule.site[0], rule.site[1], gate);
        case RuleId::M:
            need(1);
            return color_convert_state(d, rule.site[0], gate);
        case RuleId::L:
            need(1);
            return apply_rule_L(d, rule.site[0], gate);
        case RuleId::ID:
            need(1);
            return remove_identity(d, rule.site[0], gate);
        case RuleId::COPY:
            need(1);
            return copy_rule(d, rule.site[0], gate);
        case RuleId::BIALG:
            need(1);
            return bialgebra(d, rule.site[0], gate);
        case RuleId::SCALAR:
            return merge_scalars(d, gate);
        case RuleId::custom:
            break;
    }
    throw RewriteError("custom rules cannot be applied by id");
}

std::vector<RuleInstance> find_matches(const Diagram& d, RuleId rule) {
    std::vector<RuleInstance> out;
    switch (rule) {
        case RuleId::F1:
        case RuleId::F2: {
            const NodeKind kind = rule == RuleId::F1 ? NodeKind::green : NodeKind::red;
            std::set<std::pair<NodeId, NodeId>> seen;
            for (const auto& e : d.edges()) {
                if (!e.a.is_node() || !e.b.is_node() || e.a == e.b) continue;
                const auto a = static_cast<NodeId>(e.a.index);
                const auto b = static_cast<NodeId>(e.b.index);
                if (d.node(a).kind != kind || d.node(b).kind != kind) continue;
                if (!seen.insert({std::min(a, b), std::max(a, b)}).second) continue;
                out.push_back({rule, {a, b}, {d.node(a).param, d.node(b).param}});
            }
            break;
        }
        case RuleId::M:
            for (const auto& n : d.nodes()) {
                if (n.kind == NodeKind::scalar || d.degree(n.id) != 1) continue;
                if (n.kind == NodeKind::red && n.param >= 1.0) continue;
                out.push_back({rule, {n.id}, {n.param}});
            }
            break;
        case RuleId::ID:
            for (const auto& n : d.nodes()) {
                const bool phaseless =
                    (n.kind == NodeKind::green && n.param == 1.0) || (n.kind == NodeKind::red && n.param == 0.0);
                if (!phaseless) continue;
                const auto legs = legs_of(d, n.id);
                if (legs.size() == 2 && self_loops(legs, n.id) == 0) out.push_back({rule, {n.id}, {n.weight}});
            }
            break;
        case RuleId::COPY:
            for (const auto& n : d.nodes()) {
                if (n.kind != NodeKind::red || (n.param != 0.0 && n.param != 1.0)) continue;
                const auto legs = legs_of(d, n.id);
                if (legs.size() != 1 || !legs[0].other.is_node()) continue;
                if (d.node(static_cast<NodeId>(legs[0].other.index)).kind != NodeKind::green) continue;
                out.push_back({rule, {n.id}, {n.param}});
            }
            break;
        case RuleId::BIALG:
            for (const auto& n : d.nodes())
                if (n.kind == NodeKind::green && match_square(d, n.id)) out.push_back({rule, {n.id}, {}});
            break;
        case RuleId::L:
            for (const auto& n : d.nodes())
                if (n.kind == NodeKind::green && n.param > 0.0 && match_L(d, n.id)) out.push_back({rule, {n.id}, {n.param}});
            break;
        case RuleId::SCALAR: {
            RuleInstance inst{rule, {}, {}};
            for (const auto& n : d.nodes())
                if (n.kind == NodeKind::scalar) {
                    inst.site.push_back(n.id);
                    inst.params.push_back(n.weight);
                }
            if (inst.site.size() >= 2) out.push_back(std::move(inst));
            break;
        }
        case RuleId::custom:
            break;
    }
    return out;
}

Diagram simplify(const Diagram& d, std::vector<RuleInstance>* trace, SimplifyOptions options) {
    std::mt19937_64 rng(options.seed);
    Diagram cur = d;
    // Each step removes one non-scalar node, so the loop terminates.
    for (;;) {
        auto candidates = find_matches(cur, RuleId::F1);
        auto reds = find_matches(cur, RuleId::F2);
        candidates.insert(candidates.end(), reds.begin(), reds.end());
        if (candidates.empty() || options.seed != 0) {
            auto ids = find_matches(cur, RuleId::ID);
            candidates.insert(candidates.end(), ids.begin(), ids.end());
        }
        if (candidates.empty()) break;
        std::size_t pick = 0;
        if (options.seed != 0) pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng);
        cur = apply_rule(cur, candidates[pick]);
        if (trace) trace->push_back(candidates[pick]);
    }
    auto scalars = find_matches(cur, RuleId::SCALAR);
    if (!scalars.empty()) {
        cur = merge_scalars(cur);
        if (trace) trace->push_back(scalars.front());
    }
    return cur;
}

bool check_rule_soundness(const RuleInstance& rule, const Diagram& d) {
    return check_rule_soundness([&](const Diagram& x) { return apply_rule(x, rule, Gate::unchecked); }, d);
}

bool check_rule_soundness(const std::function<Diagram(const Diagram&)>& rewrite, const Diagram& d) {
    try {
        return same_semantics(d, rewrite(d));
    } catch (const RewriteError&) {
        return false;
    } catch (const DiagramError&) {
        return false;
    }
}

}  // namespace dzx
