#include <cmath>

#include "dzx/diagram.hpp"

namespace dzx {

namespace {

// Reorders register-major wires (r*k + c) into spider-major wires (c*regs + r).
std::vector<std::size_t> register_to_spider(std::size_t k, std::size_t regs) {
    std::vector<std::size_t> perm(k * regs);
    for (std::size_t r = 0; r < regs; ++r)
        for (std::size_t c = 0; c < k; ++c) perm[r * k + c] = c * regs + r;
    return perm;
}

std::vector<std::size_t> inverse(const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    return inv;
}

template <typename Make>
Diagram big_spider(std::size_t k, std::size_t n, std::size_t m, std::span<const double> params, Make make) {
    if (params.size() != k) throw DiagramError("big spider needs one parameter per component");
    Diagram layer;
    for (std::size_t c = 0; c < k; ++c) layer = compose_par(layer, make(n, m, params[c]));
    const auto in_perm = register_to_spider(k, n);
    const auto out_perm = inverse(register_to_spider(k, m));
    return compose_seq(compose_seq(permutation(in_perm), layer), permutation(out_perm));
}

}  // namespace

Diagram big_green(std::size_t k, std::size_t n, std::size_t m, std::span<const double> mus) {
    return big_spider(k, n, m, mus, [](std::size_t a, std::size_t b, double mu) { return green(a, b, mu); });
}

Diagram big_red(std::size_t k, std::size_t n, std::size_t m, std::span<const double> ps) {
    return big_spider(k, n, m, ps, [](std::size_t a, std::size_t b, double p) { return red(a, b, p); });
}

Diagram divide(std::size_t k) { return identity(k); }

Diagram gather(std::size_t k) { return identity(k); }

Diagram matrix_arrow(const F2Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Diagram d(n, m);
    std::vector<NodeId> copies(n);
    std::vector<NodeId> parities(m);
    for (std::size_t i = 0; i < n; ++i) copies[i] = d.add_node(NodeKind::green, 1.0, 1.0);
    for (std::size_t j = 0; j < m; ++j) parities[j] = d.add_node(NodeKind::red, 0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) d.add_edge(Endpoint::input(i), Endpoint::node(copies[i]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (a(j, i)) d.add_edge(Endpoint::node(copies[i]), Endpoint::node(parities[j]));
    for (std::size_t j = 0; j < m; ++j) d.add_edge(Endpoint::node(parities[j]), Endpoint::output(j));
    return d;
}

Diagram affine_state(const F2Matrix& a, const F2Vector& x, double s) {
    if (x.size() != a.rows()) throw DiagramError("affine offset length must match matrix rows");
    if (!(s > 0.0) || !std::isfinite(s)) throw DiagramError("affine state scale must be positive");
    const std::size_t k = a.cols();
    Diagram sources;
    for (std::size_t i = 0; i < k; ++i) sources = compose_par(sources, green(0, 1, 1.0));
    Diagram flips;
    for (std::size_t j = 0; j < x.size(); ++j) flips = compose_par(flips, x[j] ? red(1, 1, 1.0) : identity(1));
    // Each green(0,1) source contributes ½(|0⟩+|1⟩).
    Diagram body = compose_seq(compose_seq(sources, matrix_arrow(a)), flips);
    return compose_par(scalar(s * std::ldexp(1.0, static_cast<int>(k))), body);
}

Diagram fourier_gadget_state(std::span<const double> lambda, double big_lambda) {
    std::size_t n = 0;
    while (((std::size_t{1} << n) - 1) < lambda.size()) ++n;
    if (((std::size_t{1} << n) - 1) != lambda.size())
        throw DiagramError("Fourier gadget needs 2^n - 1 parameters");
    if (!(big_lambda > 0.0) || !std::isfinite(big_lambda))
        throw DiagramError("Fourier normal form requires a positive global scalar");
    for (double l : lambda)
        if (!(l > 0.0) || !std::isfinite(l)) throw DiagramError("Fourier normal form requires full support (λ > 0)");

    Diagram d(0, n);
    d.add_node(NodeKind::scalar, 0.0, big_lambda);
    std::vector<NodeId> copies(n);
    for (std::size_t i = 0; i < n; ++i) {
        copies[i] = d.add_node(NodeKind::green, 1.0, 1.0);
        d.add_edge(Endpoint::node(copies[i]), Endpoint::output(i));
    }
    for (std::size_t y = 1; y <= lambda.size(); ++y) {
        const auto bits = F2Vector::from_index(y, n);
        const NodeId parity = d.add_node(NodeKind::red, 0.0, 1.0);
        const NodeId phase = d.add_node(NodeKind::green, lambda[y - 1], 1.0);
        for (std::size_t i = 0; i < n; ++i)
            if (bits[i]) d.add_edge(Endpoint::node(copies[i]), Endpoint::node(parity));
        d.add_edge(Endpoint::node(parity), Endpoint::node(phase));
    }
    return d;
}

}  // namespace dzx
