#include "dzx/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>

namespace dzx {

// ---------------------------------------------------------------------------
// NonNegMatrix

NonNegMatrix::NonNegMatrix(std::size_t in_qubits, std::size_t out_qubits)
    : in_(in_qubits), out_(out_qubits), entries_((std::size_t{1} << in_qubits) << out_qubits, 0.0) {}

NonNegMatrix::NonNegMatrix(std::size_t in_qubits, std::size_t out_qubits, std::vector<double> entries)
    : in_(in_qubits), out_(out_qubits), entries_(std::move(entries)) {
    if (entries_.size() != ((std::size_t{1} << in_) << out_))
        throw EvaluationError("matrix entry count does not match 2^(in+out)");
    for (double v : entries_)
        if (!(v >= 0.0) || !std::isfinite(v)) throw EvaluationError("matrix entries must be finite and nonnegative");
}

NonNegMatrix NonNegMatrix::state(std::vector<double> entries) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < entries.size()) ++n;
    return NonNegMatrix(0, n, std::move(entries));
}

NonNegMatrix NonNegMatrix::identity(std::size_t qubits) {
    NonNegMatrix m(qubits, qubits);
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = 1.0;
    return m;
}

double NonNegMatrix::max_entry() const noexcept {
    double mx = 0.0;
    for (double v : entries_) mx = std::max(mx, v);
    return mx;
}

NonNegMatrix NonNegMatrix::operator*(const NonNegMatrix& rhs) const {
    if (in_ != rhs.out_) throw EvaluationError("matrix product shape mismatch");
    NonNegMatrix out(rhs.in_, out_);
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t k = 0; k < cols(); ++k) {
            const double a = (*this)(r, k);
            if (a == 0.0) continue;
            for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, c) += a * rhs(k, c);
        }
    return out;
}

NonNegMatrix NonNegMatrix::tensor(const NonNegMatrix& rhs) const {
    NonNegMatrix out(in_ + rhs.in_, out_ + rhs.out_);
    for (std::size_t r1 = 0; r1 < rows(); ++r1)
        for (std::size_t c1 = 0; c1 < cols(); ++c1)
            for (std::size_t r2 = 0; r2 < rhs.rows(); ++r2)
                for (std::size_t c2 = 0; c2 < rhs.cols(); ++c2)
                    out(r1 * rhs.rows() + r2, c1 * rhs.cols() + c2) = (*this)(r1, c1) * rhs(r2, c2);
    return out;
}

NonNegMatrix NonNegMatrix::scaled(double factor) const {
    NonNegMatrix out = *this;
    for (auto& v : out.entries_) v *= factor;
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation by variable elimination.
//
// Every green spider is a copy tensor, so all of its legs carry one shared
// binary variable; a green node contributes the unary factor w·(1, μ). Red
// spiders contribute parity factors over the variables of their legs, split
// into chains of three-variable XOR constraints when wide. The network is
// then contracted by summing out every non-boundary variable.

namespace {

constexpr std::size_t kMaxScope = 26;

struct Factor {
    std::vector<std::size_t> vars;  // ascending
    std::vector<double> table;      // vars[0] is the most significant bit
};

std::size_t bit_at(std::size_t assignment, std::size_t pos, std::size_t width) {
    return (assignment >> (width - 1 - pos)) & 1U;
}

Factor multiply(const Factor& f, const Factor& g) {
    Factor out;
    std::set_union(f.vars.begin(), f.vars.end(), g.vars.begin(), g.vars.end(), std::back_inserter(out.vars));
    const std::size_t width = out.vars.size();
    if (width > kMaxScope) throw EvaluationError("diagram too large to evaluate: factor over " +
                                                 std::to_string(width) + " variables");
    auto positions = [&](const Factor& h) {
        std::vector<std::size_t> pos;
        pos.reserve(h.vars.size());
        for (auto v : h.vars)
            pos.push_back(static_cast<std::size_t>(std::lower_bound(out.vars.begin(), out.vars.end(), v) -
                                                   out.vars.begin()));
        return pos;
    };
    const auto fpos = positions(f);
    const auto gpos = positions(g);
    out.table.assign(std::size_t{1} << width, 0.0);
    for (std::size_t a = 0; a < out.table.size(); ++a) {
        std::size_t fi = 0;
        for (auto p : fpos) fi = (fi << 1U) | bit_at(a, p, width);
        std::size_t gi = 0;
        for (auto p : gpos) gi = (gi << 1U) | bit_at(a, p, width);
        out.table[a] = f.table[fi] * g.table[gi];
    }
    return out;
}

Factor sum_out(const Factor& f, std::size_t var) {
    const auto it = std::find(f.vars.begin(), f.vars.end(), var);
    const auto pos = static_cast<std::size_t>(it - f.vars.begin());
    const std::size_t width = f.vars.size();
    Factor out;
    out.vars = f.vars;
    out.vars.erase(out.vars.begin() + static_cast<std::ptrdiff_t>(pos));
    out.table.assign(std::size_t{1} << out.vars.size(), 0.0);
    const std::size_t shift = width - 1 - pos;
    for (std::size_t a = 0; a < f.table.size(); ++a) {
        const std::size_t high = a >> (shift + 1);
        const std::size_t low = a & ((std::size_t{1} << shift) - 1);
        out.table[(high << shift) | low] += f.table[a];
    }
    return out;
}

// Builds a factor from a function of the bits of `vars` given in caller order.
template <typename Fn>
Factor make_factor(std::vector<std::size_t> vars, Fn fn) {
    const std::size_t width = vars.size();
    std::vector<std::size_t> order(width);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vars[a] < vars[b]; });
    Factor f;
    for (auto i : order) f.vars.push_back(vars[i]);
    f.table.resize(std::size_t{1} << width);
    std::vector<std::size_t> bits(width);
    for (std::size_t a = 0; a < f.table.size(); ++a) {
        for (std::size_t p = 0; p < width; ++p) bits[order[p]] = bit_at(a, p, width);
        f.table[a] = fn(bits);
    }
    return f;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

class Network {
public:
    explicit Network(const Diagram& d) : d_(d) { build(); }

    NonNegMatrix contract(ContractionOrder order) {
        std::vector<std::size_t> pending;
        for (std::size_t v = 0; v < num_vars_; ++v)
            if (!is_open_[v]) pending.push_back(v);
        if (order == ContractionOrder::reversed) std::reverse(pending.begin(), pending.end());

        std::vector<std::size_t> cost(num_vars_, 0);
        if (order == ContractionOrder::greedy)
            for (auto v : pending) cost[v] = scope_after(v);
        while (!pending.empty()) {
            std::size_t pick = 0;
            if (order == ContractionOrder::greedy) {
                for (std::size_t i = 1; i < pending.size(); ++i)
                    if (cost[pending[i]] < cost[pending[pick]]) pick = i;
            }
            const std::size_t var = pending[pick];
            pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
            if (eliminate(var) && order == ContractionOrder::greedy) {
                for (auto v : factors_.back()->vars)
                    if (!is_open_[v]) cost[v] = scope_after(v);
            }
        }

        Factor total{{}, {constant_}};
        for (const auto& f : factors_)
            if (f) total = multiply(total, *f);
        return expand(total);
    }

private:
    void build() {
        const auto& edges = d_.edges();
        UnionFind uf(edges.size());
        std::map<NodeId, std::vector<std::size_t>> legs;  // edge index per leg, self-loops twice
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (edges[e].a.is_node()) legs[static_cast<NodeId>(edges[e].a.index)].push_back(e);
            if (edges[e].b.is_node()) legs[static_cast<NodeId>(edges[e].b.index)].push_back(e);
        }
        for (const auto& n : d_.nodes()) {
            if (n.kind != NodeKind::green) continue;
            const auto& l = legs[n.id];
            for (std::size_t i = 1; i < l.size(); ++i) uf.unite(l[0], l[i]);
        }
        std::map<std::size_t, std::size_t> var_of_root;
        edge_var_.resize(edges.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [it, fresh] = var_of_root.try_emplace(uf.find(e), var_of_root.size());
            edge_var_[e] = it->second;
        }
        num_vars_ = var_of_root.size();

        for (const auto& n : d_.nodes()) {
            const auto& l = legs[n.id];
            switch (n.kind) {
                case NodeKind::scalar:
                    constant_ *= n.weight;
                    break;
                case NodeKind::green:
                    if (l.empty()) {
                        constant_ *= n.weight * (1.0 + n.param);
                    } else {
                        add_factor(Factor{{edge_var_[l[0]]}, {n.weight, n.weight * n.param}});
                    }
                    break;
                case NodeKind::red:
                    add_red(n, l);
                    break;
            }
        }

        ports_.reserve(d_.num_outputs() + d_.num_inputs());
        for (std::size_t j = 0; j < d_.num_outputs(); ++j) ports_.push_back(port_var(Endpoint::output(j)));
        for (std::size_t i = 0; i < d_.num_inputs(); ++i) ports_.push_back(port_var(Endpoint::input(i)));
        is_open_.assign(num_vars_, false);
        for (auto v : ports_) is_open_[v] = true;
    }

    std::size_t port_var(const Endpoint& port) const {
        const auto& edges = d_.edges();
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].touches(port)) return edge_var_[e];
        throw DiagramError("dangling boundary");
    }

    void add_red(const Node& n, const std::vector<std::size_t>& leg_edges) {
        // Variables met an even number of times drop out of the parity.
        std::map<std::size_t, std::size_t> count;
        for (auto e : leg_edges) ++count[edge_var_[e]];
        std::vector<std::size_t> vars;
        for (auto [v, c] : count)
            if (c % 2 == 1) vars.push_back(v);
        const double w = n.weight;
        const double p = n.param;
        auto tail = [w, p](std::size_t parity) { return w * (parity ? p : 1.0 - p); };
        if (vars.empty()) {
            constant_ *= tail(0);
            return;
        }
        if (vars.size() <= 3) {
            add_factor(make_factor(vars, [&](const std::vector<std::size_t>& bits) {
                return tail(std::accumulate(bits.begin(), bits.end(), std::size_t{0}) & 1U);
            }));
            return;
        }
        auto xor3 = [](const std::vector<std::size_t>& bits) { return ((bits[0] ^ bits[1] ^ bits[2]) == 0) ? 1.0 : 0.0; };
        std::size_t carry = fresh_var();
        add_factor(make_factor({vars[0], vars[1], carry}, xor3));
        for (std::size_t i = 2; i + 1 < vars.size(); ++i) {
            const std::size_t next = fresh_var();
            add_factor(make_factor({carry, vars[i], next}, xor3));
            carry = next;
        }
        add_factor(make_factor({carry, vars.back()},
                               [&](const std::vector<std::size_t>& bits) { return tail(bits[0] ^ bits[1]); }));
    }

    std::size_t fresh_var() {
        // Auxiliary variables are created before ports are registered.
        return num_vars_++;
    }

    void add_factor(Factor f) {
        const std::size_t id = factors_.size();
        for (auto v : f.vars) {
            if (v >= touching_.size()) touching_.resize(v + 1);
            touching_[v].push_back(id);
        }
        factors_.emplace_back(std::move(f));
    }

    std::size_t scope_after(std::size_t var) const {
        if (var >= touching_.size()) return 0;
        std::vector<std::size_t> scope;
        for (auto id : touching_[var])
            if (factors_[id]) scope.insert(scope.end(), factors_[id]->vars.begin(), factors_[id]->vars.end());
        std::sort(scope.begin(), scope.end());
        scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
        return scope.size();
    }

    // Returns true when a new factor was appended.
    bool eliminate(std::size_t var) {
        std::vector<std::size_t> ids;
        if (var < touching_.size())
            for (auto id : touching_[var])
                if (factors_[id]) ids.push_back(id);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        if (ids.empty()) {
            // Unconstrained wire, e.g. a red self-loop: summing gives dimension 2.
            constant_ *= 2.0;
            return false;
        }
        Factor prod = std::move(*factors_[ids[0]]);
        factors_[ids[0]].reset();
        for (std::size_t i = 1; i < ids.size(); ++i) {
            prod = multiply(prod, *factors_[ids[i]]);
            factors_[ids[i]].reset();
        }
        add_factor(sum_out(prod, var));
        return true;
    }

    NonNegMatrix expand(const Factor& total) const {
        const std::size_t m = d_.num_outputs();
        const std::size_t n = d_.num_inputs();
        const std::size_t width = m + n;
        if (width > kMaxScope) throw EvaluationError("too many boundary wires to expand densely");
        std::vector<double> entries(std::size_t{1} << width, 0.0);
        std::vector<int> value(num_vars_, -1);
        for (std::size_t idx = 0; idx < entries.size(); ++idx) {
            bool consistent = true;
            for (std::size_t p = 0; p < width; ++p) {
                const int b = static_cast<int>(bit_at(idx, p, width));
                int& slot = value[ports_[p]];
                if (slot >= 0 && slot != b) consistent = false;
                slot = b;
            }
            if (consistent) {
                std::size_t ti = 0;
                for (auto v : total.vars) ti = (ti << 1U) | static_cast<std::size_t>(value[v]);
                entries[idx] = total.table[ti];
            }
            for (auto v : ports_) value[v] = -1;
        }
        for (auto& e : entries)
            if (e < 0.0) e = 0.0;
        return NonNegMatrix(n, m, std::move(entries));
    }

    const Diagram& d_;
    std::vector<std::size_t> edge_var_;
    std::size_t num_vars_ = 0;
    std::vector<std::size_t> ports_;  // outputs then inputs
    std::vector<bool> is_open_;
    std::vector<std::optional<Factor>> factors_;
    std::vector<std::vector<std::size_t>> touching_;
    double constant_ = 1.0;
};

}  // namespace

NonNegMatrix evaluate(const Diagram& d, ContractionOrder order) {
    require_valid(d);
    if (d.num_inputs() + d.num_outputs() > kMaxScope) throw EvaluationError("too many boundary wires");
    return Network(d).contract(order);
}

std::vector<F2Vector> support(const NonNegMatrix& m) {
    const double cutoff = support_tolerance * m.max_entry();
    const std::size_t width = m.in_qubits() + m.out_qubits();
    std::vector<F2Vector> out;
    const auto& e = m.entries();
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > cutoff) out.push_back(F2Vector::from_index(i, width));
    return out;
}

std::vector<F2Vector> support(const Diagram& d) { return support(evaluate(d)); }

NonNegMatrix decohere_pure(const ComplexMatrix& m) {
    std::vector<double> entries;
    entries.reserve(m.entries.size());
    for (const auto& z : m.entries) entries.push_back(std::norm(z));
    return NonNegMatrix(m.in_qubits, m.out_qubits, std::move(entries));
}

bool approx_equal(const NonNegMatrix& lhs, const NonNegMatrix& rhs, double tol) {
    if (lhs.in_qubits() != rhs.in_qubits() || lhs.out_qubits() != rhs.out_qubits())
        throw EvaluationError("approx_equal: shape mismatch");
    double diff = 0.0;
    double mag = 0.0;
    for (std::size_t i = 0; i < lhs.entries().size(); ++i) {
        diff = std::max(diff, std::abs(lhs.entries()[i] - rhs.entries()[i]));
        mag = std::max({mag, std::abs(lhs.entries()[i]), std::abs(rhs.entries()[i])});
    }
    return diff <= tol * (1.0 + mag);
}

}  // namespace dzx
