#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dzx/f2.hpp"

namespace dzx {

/// Malformed diagrams and invalid constructor arguments.
class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using NodeId = std::uint32_t;

enum class NodeKind : std::uint8_t { green, red, scalar };

[[nodiscard]] const char* to_string(NodeKind kind) noexcept;

/**
 * A spider or scalar.
 *
 * Green spiders carry μ ≥ 0, red spiders carry a probability p ∈ [0,1],
 * scalars carry no parameter. `weight` is the explicit normalization factor
 * of the node's tensor: 2^{n-1} for a green n→m generator, 2^{1-m} for a red
 * one, s for a scalar. Keeping it on the node makes the interpretation
 * independent of how legs are split between inputs and outputs.
 */
struct Node {
    NodeId id = 0;
    NodeKind kind = NodeKind::green;
    double param = 1.0;
    double weight = 1.0;
};

/// One end of an edge: a node, an input port or an output port.
struct Endpoint {
    enum class Kind : std::uint8_t { node, input, output };

    Kind kind = Kind::node;
    std::size_t index = 0;  // node id or port index

    static Endpoint node(NodeId id) { return {Kind::node, id}; }
    static Endpoint input(std::size_t i) { return {Kind::input, i}; }
    static Endpoint output(std::size_t i) { return {Kind::output, i}; }

    [[nodiscard]] bool is_node() const noexcept { return kind == Kind::node; }
    [[nodiscard]] bool is_boundary() const noexcept { return kind != Kind::node; }

    friend bool operator==(const Endpoint&, const Endpoint&) = default;
    friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Edge {
    Endpoint a;
    Endpoint b;

    [[nodiscard]] bool touches(const Endpoint& e) const noexcept { return a == e || b == e; }
    [[nodiscard]] bool is_self_loop() const noexcept { return a == b; }
    /// The endpoint opposite to `e` (which must be one of the two ends).
    [[nodiscard]] const Endpoint& other(const Endpoint& e) const noexcept { return a == e ? b : a; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * An open multigraph of spiders with ordered input and output ports.
 *
 * Spider legs are unordered; each boundary port carries exactly one edge
 * end in a valid diagram. Self-loops and parallel edges are allowed, and an
 * edge joining two ports is a bare wire.
 */
class Diagram {
public:
    Diagram() = default;
    Diagram(std::size_t inputs, std::size_t outputs) : inputs_(inputs), outputs_(outputs) {}

    NodeId add_node(NodeKind kind, double param, double weight);
    /// Inserts a node keeping its id; the id must be unused.
    void insert_node(const Node& node);
    void add_edge(Endpoint a, Endpoint b);
    void remove_edge(std::size_t edge_index);
    /// Removes a node together with every incident edge.
    void remove_node(NodeId id);
    void set_node(const Node& node);

    [[nodiscard]] std::size_t num_inputs() const noexcept { return inputs_; }
    [[nodiscard]] std::size_t num_outputs() const noexcept { return outputs_; }
    [[nodiscard]] const std::vector<Node>& nodes() const noexcept { return nodes_; }
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
    [[nodiscard]] NodeId next_id() const noexcept { return next_id_; }

    [[nodiscard]] bool has_node(NodeId id) const;
    [[nodiscard]] const Node& node(NodeId id) const;
    /// Number of edge ends on a node; a self-loop counts twice.
    [[nodiscard]] std::size_t degree(NodeId id) const;
    /// Indices of the edges touching an endpoint, in edge order (self-loops once).
    [[nodiscard]] std::vector<std::size_t> incident_edges(const Endpoint& e) const;

    void set_arity(std::size_t inputs, std::size_t outputs) {
        inputs_ = inputs;
        outputs_ = outputs;
    }

private:
    std::size_t inputs_ = 0;
    std::size_t outputs_ = 0;
    NodeId next_id_ = 0;
    std::vector<Node> nodes_;  // sorted by id
    std::vector<Edge> edges_;
};

// Generators. Defaults follow the unwritten-parameter convention (μ = 1, p = 0).

/// Green spider n→m: 2^{n-1}(|0..0⟩⟨0..0| + μ|1..1⟩⟨1..1|).
[[nodiscard]] Diagram green(std::size_t n, std::size_t m, double mu = 1.0);
/// Red spider n→m: 2^{1-m} Σ (1-p on even parity of xy, p on odd).
[[nodiscard]] Diagram red(std::size_t n, std::size_t m, double p = 0.0);
[[nodiscard]] Diagram scalar(double s);
[[nodiscard]] Diagram identity(std::size_t n);
[[nodiscard]] Diagram swap();
/// ½(|00⟩+|11⟩), a phaseless green 0→2 spider.
[[nodiscard]] Diagram cup();
/// 2(⟨00|+⟨11|), a phaseless green 2→0 spider.
[[nodiscard]] Diagram cap();
/// Wire permutation n→n sending input i to output perm[i].
[[nodiscard]] Diagram permutation(std::span<const std::size_t> perm);

[[nodiscard]] Diagram compose_seq(const Diagram& first, const Diagram& second);
[[nodiscard]] Diagram compose_par(const Diagram& top, const Diagram& bottom);

/**
 * Map/state bending: D : n→m becomes ⌈D⌉ : 0→(m+n).
 *
 * Output wires of ⌈D⌉ are D's outputs followed by D's inputs, so the state
 * vector of ⌈D⌉ is 2^{-n} times the row-major vectorization of ⟦D⟧.
 */
[[nodiscard]] Diagram bend_name(const Diagram& d);
/// Inverse of bend_name: turns the last `n` outputs back into inputs with caps.
/// Cup/cap pairs created by the round trip are yanked straight.
[[nodiscard]] Diagram unbend(const Diagram& d, std::size_t n);

// Scalable constructions. Thick wires are plain wire lists: register r of
// width k occupies wires r*k .. r*k+k-1.

/// k parallel green spiders n→m; spider c connects wire c of every register.
[[nodiscard]] Diagram big_green(std::size_t k, std::size_t n, std::size_t m, std::span<const double> mus);
[[nodiscard]] Diagram big_red(std::size_t k, std::size_t n, std::size_t m, std::span<const double> ps);
/// Splitting a thick wire into k wires (and back) is the identity on flat wire lists.
[[nodiscard]] Diagram divide(std::size_t k);
[[nodiscard]] Diagram gather(std::size_t k);

/// Bipartite copy/parity network evaluating to Σ_y |Ay⟩⟨y| for A ∈ M_{m×n}(F_2).
[[nodiscard]] Diagram matrix_arrow(const F2Matrix& a);
/// State s·Σ_{y∈F_2^k} |Ay ⊕ x⟩ for A ∈ M_{n×k}(F_2).
[[nodiscard]] Diagram affine_state(const F2Matrix& a, const F2Vector& x, double s);
/// Fourier normal form Λ Σ_x Π_{y≠0} λ_y^{x·y} |x⟩, with lambda indexed by y = 1..2^n-1.
[[nodiscard]] Diagram fourier_gadget_state(std::span<const double> lambda, double big_lambda);

/// All well-formedness violations; an empty list means the diagram is valid.
[[nodiscard]] std::vector<std::string> validate(const Diagram& d);
/// Throws DiagramError listing every violation.
void require_valid(const Diagram& d);

/// Graph isomorphism fixing the boundary. Parameters and weights compare
/// within a relative tolerance.
[[nodiscard]] bool is_isomorphic(const Diagram& lhs, const Diagram& rhs, double tol = 1e-12);

}  // namespace dzx
