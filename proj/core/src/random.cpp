#include "dzx/random.hpp"

#include <cmath>

namespace dzx {

namespace {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Diagram random_diagram(Rng& rng, const RandomDiagramOptions& options) {
    Diagram d(options.inputs, options.outputs);
    const std::size_t spiders = std::max<std::size_t>(options.spiders, 1);
    std::vector<NodeId> ids;
    for (std::size_t i = 0; i < spiders; ++i) {
        const bool is_green = coin(rng, 0.5);
        double param = 0.0;
        if (is_green) {
            param = coin(rng, options.special_param_rate) ? static_cast<double>(pick(rng, 2)) : std::exp(uniform(rng, -1.5, 1.5));
        } else {
            param = coin(rng, options.special_param_rate) ? 0.5 * static_cast<double>(pick(rng, 3)) : uniform(rng, 0.05, 0.95);
        }
        const double weights[] = {0.5, 1.0, 2.0};
        ids.push_back(d.add_node(is_green ? NodeKind::green : NodeKind::red, param, weights[pick(rng, 3)]));
    }
    for (std::size_t i = 0; i < options.inputs; ++i) d.add_edge(Endpoint::input(i), Endpoint::node(ids[pick(rng, spiders)]));
    for (std::size_t i = 0; i < options.outputs; ++i) d.add_edge(Endpoint::node(ids[pick(rng, spiders)]), Endpoint::output(i));
    // A spanning path keeps most instances connected.
    for (std::size_t i = 1; i < spiders; ++i) d.add_edge(Endpoint::node(ids[i - 1]), Endpoint::node(ids[i]));
    for (std::size_t e = 0; e < options.extra_edges; ++e)
        d.add_edge(Endpoint::node(ids[pick(rng, spiders)]), Endpoint::node(ids[pick(rng, spiders)]));
    return d;
}

F2Matrix random_f2_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    std::vector<F2Vector> columns;
    for (std::size_t c = 0; c < cols; ++c) columns.push_back(random_f2_vector(rng, rows));
    return F2Matrix::from_columns(columns, rows);
}

F2Matrix random_invertible(Rng& rng, std::size_t n) {
    for (;;) {
        F2Matrix a = random_f2_matrix(rng, n, n);
        if (a.is_invertible()) return a;
    }
}

F2Vector random_f2_vector(Rng& rng, std::size_t n) {
    F2Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, pick(rng, 2) == 1);
    return v;
}

std::vector<double> random_affine_vector(Rng& rng, std::size_t n) {
    const std::size_t k = pick(rng, n + 1);
    const F2Matrix a = random_f2_matrix(rng, n, k);
    const F2Vector x = random_f2_vector(rng, n);
    std::vector<double> v(std::size_t{1} << n, 0.0);
    for (std::size_t y = 0; y < (std::size_t{1} << k); ++y)
        v[(a * F2Vector::from_index(y, k) ^ x).to_index()] = std::exp(uniform(rng, -2.0, 2.0));
    return v;
}

std::vector<double> random_positive_vector(Rng& rng, std::size_t n) {
    std::vector<double> v(std::size_t{1} << n);
    for (auto& e : v) e = std::exp(uniform(rng, -3.0, 3.0));
    return v;
}

}  // namespace dzx
