#include "dzx/normal_form.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace dzx {

NonAffineSupport::NonAffineSupport(F2Vector a_, F2Vector b_, F2Vector c_)
    : std::runtime_error("support is not affine: " + a_.to_string() + " ^ " + b_.to_string() + " ^ " +
                         c_.to_string() + " is missing"),
      a(std::move(a_)),
      b(std::move(b_)),
      c(std::move(c_)) {}

std::size_t wires(const NormalFormData& nf) noexcept {
    return std::visit([](const auto& f) { return f.n; }, nf);
}

namespace {

// With p0 fixed, a set S is affine iff a ⊕ b ⊕ p0 ∈ S for all a, b ∈ S.
NonAffineSupport find_witness(const std::vector<std::uint64_t>& points, std::size_t n) {
    const std::unordered_set<std::uint64_t> members(points.begin(), points.end());
    const std::uint64_t p0 = points.front();
    for (auto a : points)
        for (auto b : points)
            if (!members.contains(a ^ b ^ p0))
                return {F2Vector::from_index(a, n), F2Vector::from_index(b, n), F2Vector::from_index(p0, n)};
    throw std::logic_error("no affine violation found for a non-affine support");
}

bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

NormalFormData normalize_state(std::span<const double> v) {
    if (v.empty() || !std::has_single_bit(v.size())) throw FourierError("state length must be a power of two");
    const auto n = static_cast<std::size_t>(std::countr_zero(v.size()));
    double vmax = 0.0;
    for (double e : v) {
        if (!(e >= 0.0) || !std::isfinite(e)) throw FourierError("state entries must be finite and nonnegative");
        vmax = std::max(vmax, e);
    }
    if (vmax == 0.0) return ZeroForm{n};

    const double cutoff = support_tolerance * vmax;
    std::vector<std::uint64_t> indices;
    std::vector<F2Vector> points;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > cutoff) {
            indices.push_back(i);
            points.push_back(F2Vector::from_index(i, n));
        }
    }
    auto affine = is_affine(points);
    if (!affine) throw find_witness(indices, n);

    AffineForm form;
    form.n = n;
    form.a = std::move(affine->basis);
    form.x = std::move(affine->offset);
    const std::size_t k = form.a.cols();
    std::vector<double> u(std::size_t{1} << k);
    for (std::size_t y = 0; y < u.size(); ++y)
        u[y] = v[(form.a * F2Vector::from_index(y, k) ^ form.x).to_index()];
    form.fd = fourier_synthesize(u);
    return form;
}

NormalFormData normalize_diagram(const Diagram& d) {
    const NonNegMatrix name = evaluate(bend_name(d));
    try {
        return normalize_state(name.entries());
    } catch (const NonAffineSupport& e) {
        throw std::logic_error(std::string("internal error: diagram interpretation without affine support: ") +
                               e.what());
    }
}

Diagram nf_to_diagram(const NormalFormData& nf) {
    if (const auto* zero = std::get_if<ZeroForm>(&nf)) {
        Diagram d = scalar(0.0);
        for (std::size_t i = 0; i < zero->n; ++i) d = compose_par(d, red(0, 1, 0.0));
        return d;
    }
    const auto& form = std::get<AffineForm>(nf);
    Diagram flips;
    for (std::size_t j = 0; j < form.n; ++j) flips = compose_par(flips, form.x[j] ? red(1, 1, 1.0) : identity(1));
    const Diagram fourier = fourier_gadget_state(form.fd.lambda, form.fd.big_lambda);
    return compose_seq(compose_seq(fourier, matrix_arrow(form.a)), flips);
}

bool nf_equal(const NormalFormData& lhs, const NormalFormData& rhs, double tol) {
    if (lhs.index() != rhs.index()) return false;
    if (const auto* z = std::get_if<ZeroForm>(&lhs)) return z->n == std::get<ZeroForm>(rhs).n;
    const auto& a = std::get<AffineForm>(lhs);
    const auto& b = std::get<AffineForm>(rhs);
    if (a.n != b.n || !(a.a == b.a) || !(a.x == b.x)) return false;
    if (!rel_close(a.fd.big_lambda, b.fd.big_lambda, tol)) return false;
    for (std::size_t i = 0; i < a.fd.lambda.size(); ++i)
        if (!rel_close(a.fd.lambda[i], b.fd.lambda[i], tol)) return false;
    return true;
}

bool diagrams_equal(const Diagram& lhs, const Diagram& rhs, double tol) {
    if (lhs.num_inputs() != rhs.num_inputs() || lhs.num_outputs() != rhs.num_outputs())
        throw DiagramError("diagrams_equal: arity mismatch");
    return nf_equal(normalize_diagram(lhs), normalize_diagram(rhs), tol);
}

Diagram synthesize(const NonNegMatrix& m) {
    const std::size_t n = m.in_qubits();
    // The name of M carries one ½ per bent input.
    std::vector<double> name = m.scaled(std::ldexp(1.0, -static_cast<int>(n))).entries();
    return unbend(nf_to_diagram(normalize_state(name)), n);
}

}  // namespace dzx
