// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Expected values come from the reference formulas in tests/support, never
// from the library routine under test.

#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dzx/diagram.hpp"
#include "dzx/fourier.hpp"
#include "dzx/io.hpp"
#include "dzx/normal_form.hpp"
#include "dzx/random.hpp"
#include "dzx/rewrite.hpp"
#include "dzx/semantics.hpp"
#include "dzx_tools/cli.hpp"
#include "instances.hpp"
#include "oracle.hpp"

using namespace dzx;
using cplx = std::complex<double>;

namespace {

/// Thrown by `require` to abort a criterion with a message.
struct Violation {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Violation{what};
}

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<std::string()> body;  // returns a short summary on success
};

// ---------------------------------------------------------------- helpers

std::vector<double> values(const Diagram& d) { return evaluate(d).entries(); }

// Values k/2^j with small j are exactly representable, so those cases must match bit for bit.
bool dyadic(double x) { return std::ldexp(x, 8) == std::floor(std::ldexp(x, 8)); }

/// Row-major complex matrix with rows = output bits.
struct CMat {
    std::size_t in = 0, out = 0;
    std::vector<cplx> a;
    CMat(std::size_t i, std::size_t o) : in(i), out(o), a(std::size_t{1} << (i + o)) {}
    [[nodiscard]] std::size_t rows() const { return std::size_t{1} << out; }
    [[nodiscard]] std::size_t cols() const { return std::size_t{1} << in; }
    cplx& at(std::size_t r, std::size_t c) { return a[r * cols() + c]; }
    [[nodiscard]] cplx at(std::size_t r, std::size_t c) const { return a[r * cols() + c]; }
};

/// second ∘ first.
CMat then(const CMat& first, const CMat& second) {
    CMat d(first.in, second.out);
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
            for (std::size_t k = 0; k < first.rows(); ++k) d.at(r, c) += second.at(r, k) * first.at(k, c);
    return d;
}

CMat kron(const CMat& top, const CMat& bottom) {
    CMat d(top.in + bottom.in, top.out + bottom.out);
    for (std::size_t r1 = 0; r1 < top.rows(); ++r1)
        for (std::size_t c1 = 0; c1 < top.cols(); ++c1)
            for (std::size_t r2 = 0; r2 < bottom.rows(); ++r2)
                for (std::size_t c2 = 0; c2 < bottom.cols(); ++c2)
                    d.at(r1 * bottom.rows() + r2, c1 * bottom.cols() + c2) = top.at(r1, c1) * bottom.at(r2, c2);
    return d;
}

CMat cidentity(std::size_t n) {
    CMat d(n, n);
    for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, i) = 1.0;
    return d;
}

/// Pure green spider with phase α and no normalisation: |0..0⟩⟨0..0| + e^{iα}|1..1⟩⟨1..1|.
CMat pure_green(std::size_t n, std::size_t m, double alpha) {
    CMat d(n, m);
    d.at(0, 0) += 1.0;
    d.at(d.rows() - 1, d.cols() - 1) += std::polar(1.0, alpha);
    return d;
}

/// Pure red spider c·(1 + (−1)^{|xy|} e^{iα})/2 with |c|² = 2^{1−m}.
CMat pure_red(std::size_t n, std::size_t m, double alpha) {
    CMat d(n, m);
    const double c = std::sqrt(std::ldexp(1.0, 1 - static_cast<int>(m)));
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t col = 0; col < d.cols(); ++col) {
            const double sign = (oracle::popcount(r) + oracle::popcount(col)) % 2 == 0 ? 1.0 : -1.0;
            d.at(r, col) = c * (1.0 + sign * std::polar(1.0, alpha)) / 2.0;
        }
    return d;
}

ComplexMatrix to_library(const CMat& m) { return ComplexMatrix{m.in, m.out, m.a}; }

std::vector<double> squared_modulus(const CMat& m) {
    std::vector<double> v(m.a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::norm(m.a[i]);
    return v;
}

F2Matrix matrix_from_bits(std::uint64_t bits, std::size_t rows, std::size_t cols) {
    F2Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) m.set(i / cols, i % cols, ((bits >> i) & 1U) != 0);
    return m;
}

/// Applies `a` to the big-endian integer `v`.
std::uint64_t apply(const F2Matrix& a, std::uint64_t v) {
    std::uint64_t out = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        unsigned bit = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) bit ^= static_cast<unsigned>(a(r, c)) & ((v >> (a.cols() - 1 - c)) & 1U);
        out = (out << 1) | bit;
    }
    return out;
}

bool invertible(const F2Matrix& a) {
    std::set<std::uint64_t> images;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << a.cols()); ++v) images.insert(apply(a, v));
    return a.rows() == a.cols() && images.size() == (std::size_t{1} << a.cols());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Violation{"cannot open " + path};
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string golden(const std::string& rel) { return std::string(DZX_GOLDEN_DIR) + "/" + rel; }

// ---------------------------------------------------------------- criteria

std::string generator_semantics() {
    std::size_t checks = 0;
    auto compare = [&](const Diagram& d, const oracle::Dense& expected, bool exact, const std::string& what) {
        const auto got = values(d);
        if (exact)
            require(got == expected.a, what + " differs from the printed interpretation");
        else
            require(oracle::rel_equal(got, expected.a, 1e-12), what + " differs beyond 1e-12");
        ++checks;
    };
    for (std::size_t n = 0; n <= 3; ++n)
        for (std::size_t m = 0; m <= 3; ++m) {
            for (double mu : {1.0, 2.0, 0.5, 0.0, 0.37, 3.1, 1e-3})
                compare(green(n, m, mu), oracle::green(n, m, mu), dyadic(mu),
                        "green(" + std::to_string(n) + "," + std::to_string(m) + ")");
            for (double p : {0.0, 0.25, 0.5, 1.0, 0.3, 0.77, 1.0 / 3.0})
                compare(red(n, m, p), oracle::red(n, m, p), dyadic(p),
                        "red(" + std::to_string(n) + "," + std::to_string(m) + ")");
        }
    require(values(red(0, 1, 0.25)) == std::vector<double>{0.75, 0.25}, "biased coin");
    for (double p : {0.0, 0.125, 0.5, 0.75, 1.0})
        require(values(red(1, 1, p)) == std::vector<double>{1 - p, p, p, 1 - p}, "flip matrix");
    require(values(cup()) == std::vector<double>{0.5, 0, 0, 0.5}, "cup");
    require(values(cap()) == std::vector<double>{2, 0, 0, 2}, "cap");
    require(values(swap()) == std::vector<double>{1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1}, "swap");
    for (double s : {0.0, 1.0, 0.5, 3.0, 2.718281828})
        require(values(scalar(s)) == std::vector<double>{s}, "scalar");
    for (std::size_t n = 0; n <= 3; ++n) compare(identity(n), oracle::identity(n), true, "identity");
    checks += 16;
    return std::to_string(checks) + " generator instances";
}

std::string decoherence_bridge() {
    Rng rng(2002);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        CMat m(static_cast<std::size_t>(rng() % 4), static_cast<std::size_t>(rng() % 4));
        for (auto& z : m.a) z = {g(rng), g(rng)};
        require(oracle::rel_equal(decohere_pure(to_library(m)).entries(), squared_modulus(m), 1e-12),
                "decohere_pure is not the entrywise squared modulus");
    }
    std::size_t generator_checks = 0;
    for (int k = 0; k < 100; ++k) {
        // α ∈ [0, π); the green parametrisation needs 1 − p > 0.
        const double alpha = std::numbers::pi * k / 100.0;
        const double p = (1.0 - std::cos(alpha)) / 2.0;
        const double mu = p / (1.0 - p);
        for (std::size_t n = 0; n <= 2; ++n)
            for (std::size_t m = 0; m <= 2; ++m) {
                require(oracle::rel_equal(values(red(n, m, p)), squared_modulus(pure_red(n, m, alpha)), 1e-10),
                        "red spider vs decohered pure red at alpha index " + std::to_string(k));
                // A green spider with parameter μ is a phase-free green spider fed one extra leg by a red state.
                const CMat pure = then(kron(cidentity(n), pure_red(0, 1, alpha)), pure_green(n + 1, m, 0.0));
                auto bridged = squared_modulus(pure);
                for (auto& e : bridged) e *= std::ldexp(1.0, static_cast<int>(n) - 1) / (1.0 - p);
                require(oracle::rel_equal(values(green(n, m, mu)), bridged, 1e-10),
                        "green spider vs decohered pure construction at alpha index " + std::to_string(k));
                generator_checks += 2;
            }
    }
    // Phase-free pure generators decohere to the same diagrams.
    CMat h(1, 1);
    const double s = 1.0 / std::sqrt(2.0);
    h.a = {s, s, s, -s};
    require(oracle::rel_equal(decohere_pure(to_library(h)).entries(), values(red(1, 1, 0.5)), 1e-15), "Hadamard");
    return "500 matrices, " + std::to_string(generator_checks) + " generator/alpha checks";
}

std::string fourier_round_trip() {
    Rng rng(3003);
    std::uniform_real_distribution<double> lg(-2, 2);
    std::size_t trials = 0;
    for (std::size_t n = 1; n <= 8; ++n)
        for (int t = 0; t < 40; ++t, ++trials) {
            const auto v = random_positive_vector(rng, n);
            const FourierData fd = fourier_synthesize(v);
            require(oracle::rel_equal(fourier_evaluate(fd), v, 1e-9), "evaluate(synthesize(v)) != v");
            require(oracle::rel_equal(oracle::fourier_product(fd.big_lambda, fd.lambda, n), v, 1e-9),
                    "synthesized parameters do not reproduce v by the product formula");
            const auto lambda = oracle::fourier_lambda(v);
            require(oracle::rel_equal(fd.lambda, lambda, 1e-9), "λ differs from the closed form");
            if (n <= 6)
                require(oracle::rel_equal(values(fourier_gadget_state(fd.lambda, fd.big_lambda)), v, 1e-9),
                        "the Fourier gadget diagram does not evaluate to v");

            // Keep log v inside the full-support threshold: each entry multiplies about 2^{n-1} λ's.
            const double spread = 1.0 / std::sqrt(std::ldexp(1.0, static_cast<int>(n) - 1));
            FourierData random_fd{n, std::exp(lg(rng)), std::vector<double>((std::size_t{1} << n) - 1)};
            for (auto& l : random_fd.lambda) l = std::exp(spread * lg(rng));
            const FourierData back = fourier_synthesize(oracle::fourier_product(random_fd.big_lambda, random_fd.lambda, n));
            require(std::abs(back.big_lambda - random_fd.big_lambda) <= 1e-9 * random_fd.big_lambda, "Λ round trip");
            require(oracle::rel_equal(back.lambda, random_fd.lambda, 1e-9), "λ round trip");
        }
    std::size_t identity_checks = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t size = std::size_t{1} << n;
        for (std::size_t y = 0; y < size; ++y)
            for (std::size_t z = 0; z < size; ++z, ++identity_checks) {
                double sum = 0;
                for (std::size_t x = 0; x < size; ++x)
                    sum += static_cast<double>(oracle::popcount(x & y) % 2) * (oracle::popcount(x & z) % 2 ? -1.0 : 1.0);
                const double lhs = -2.0 / static_cast<double>(size) * sum;
                const double rhs = (y == z ? 1.0 : 0.0) - (z == 0 ? 1.0 : 0.0);
                require(lhs == rhs, "exponent identity fails");
            }
    }
    return std::to_string(trials) + " vectors, " + std::to_string(identity_checks) + " exponent identities";
}

std::string normal_form_round_trip() {
    Rng rng(4004);
    std::uniform_real_distribution<double> lg(-2, 2);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        // Random affine subspace: columns of a random injective matrix, random offset.
        std::size_t k = 0;
        F2Matrix a;
        std::set<std::uint64_t> span;
        for (;;) {
            k = rng() % (n + 1);
            a = random_f2_matrix(rng, n, k);
            span.clear();
            for (std::uint64_t y = 0; y < (std::uint64_t{1} << k); ++y) span.insert(apply(a, y));
            if (span.size() == (std::size_t{1} << k)) break;
        }
        const std::uint64_t x = rng() % (std::uint64_t{1} << n);
        std::vector<double> v(std::size_t{1} << n, 0.0);
        std::set<std::uint64_t> support;
        for (auto s : span) {
            v[s ^ x] = std::exp(lg(rng));
            support.insert(s ^ x);
        }

        const auto nf = normalize_state(v);
        require(std::holds_alternative<AffineForm>(nf), "nonzero vector normalised to zero");
        const AffineForm f = std::get<AffineForm>(nf);
        require(f.k() == k, "wrong dimension");
        // The datum describes exactly the support.
        std::set<std::uint64_t> described;
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << k); ++y) described.insert(apply(f.a, y) ^ f.x.to_index());
        require(described == support, "datum does not describe the support");
        // Canonical shape: strictly increasing pivots, each pivot row a unit row, offset zero at pivots.
        std::size_t previous = 0;
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t pivot = n;
            for (std::size_t r = 0; r < n && pivot == n; ++r)
                if (f.a(r, c)) pivot = r;
            require(pivot < n && (c == 0 || pivot > previous), "columns not in echelon order");
            for (std::size_t other = 0; other < k; ++other)
                require(other == c || !f.a(pivot, other), "pivot row is not a unit row");
            require(!f.x[pivot], "offset is nonzero at a pivot");
            previous = pivot;
        }

        const auto round = evaluate(nf_to_diagram(nf)).entries();
        require(oracle::rel_equal(round, v, 1e-9), "nf_to_diagram does not evaluate back to v");
        const auto again = normalize_state(round);
        const auto j1 = io::normal_form_to_json(nf);
        const auto j2 = io::normal_form_to_json(again);
        require(io::dump(j1["A"]) == io::dump(j2["A"]) && io::dump(j1["x"]) == io::dump(j2["x"]) &&
                    io::dump(j1["k"]) == io::dump(j2["k"]),
                "re-normalising changed the discrete datum");
    }
    return "1000 vectors";
}

std::string completeness_surrogate() {
    Rng rng(5005);
    const RuleId rules[] = {RuleId::F1, RuleId::F2, RuleId::M, RuleId::ID};
    int equal_pairs = 0, perturbed_pairs = 0, rewrites = 0;
    while (equal_pairs < 500) {
        RandomDiagramOptions o;
        const std::size_t wires = 1 + rng() % 6;
        o.inputs = rng() % (wires + 1);
        o.outputs = wires - o.inputs;
        o.spiders = 3 + rng() % 5;
        o.extra_edges = rng() % 3;
        o.special_param_rate = 0.0;
        const Diagram seed = random_diagram(rng, o);
        Diagram rewritten = seed;
        int applied = 0;
        for (int step = 0, steps = 1 + static_cast<int>(rng() % 4); step < steps; ++step) {
            std::vector<RuleInstance> options;
            for (auto r : rules)
                for (auto& m : find_matches(rewritten, r)) options.push_back(m);
            if (options.empty()) break;
            rewritten = apply_rule(rewritten, options[rng() % options.size()], Gate::checked);
            ++applied;
        }
        if (applied == 0) continue;
        rewrites += applied;
        require(diagrams_equal(seed, rewritten), "rewritten pair judged different");
        ++equal_pairs;

        std::vector<Node> spiders;
        for (const auto& node : rewritten.nodes())
            if (node.kind != NodeKind::scalar) spiders.push_back(node);
        if (spiders.empty()) continue;
        Node nudged = spiders[rng() % spiders.size()];
        nudged.param += (nudged.kind == NodeKind::red && nudged.param + 1e-3 > 1.0) ? -1e-3 : 1e-3;
        Diagram perturbed = rewritten;
        perturbed.set_node(nudged);
        require(!diagrams_equal(seed, perturbed), "perturbed pair judged equal");
        ++perturbed_pairs;
    }
    require(perturbed_pairs >= 500, "only " + std::to_string(perturbed_pairs) + " perturbed pairs");
    return std::to_string(equal_pairs) + " equal pairs (" + std::to_string(rewrites) + " rewrites), " +
           std::to_string(perturbed_pairs) + " perturbed pairs";
}

std::string rule_soundness() {
    Rng rng(6006);
    for (RuleId rule : {RuleId::F1, RuleId::F2, RuleId::M, RuleId::L, RuleId::ID}) {
        for (int i = 0; i < 1000; ++i) {
            auto [d, site] = instances::random_site(rng, rule, 6);
            // Unchecked so the built-in gate cannot mask a wrong rewrite.
            const Diagram after = apply_rule(d, site, Gate::unchecked);
            require(oracle::rel_equal(values(after), values(d), 1e-9),
                    std::string("rule ") + to_string(rule) + " changed the interpretation");
        }
    }
    std::uniform_real_distribution<double> u(0, 1);
    constexpr double ulps = 1e-15;
    for (int i = 0; i < 100000; ++i) {
        const double p = u(rng), q = u(rng), r = u(rng);
        require(std::abs(prob_xor(p, prob_xor(q, r)) - prob_xor(prob_xor(p, q), r)) <= ulps, "⊕ associativity");
        require(prob_xor(p, q) == prob_xor(q, p), "⊕ commutativity");
        require(prob_xor(p, 0.0) == p, "0 is the ⊕ unit");
        require(std::abs(prob_xor(p, 0.5) - 0.5) <= ulps, "½ absorbs");
        require(std::abs(prob_xor(p, 1.0) - (1.0 - p)) <= ulps, "1 complements");
    }
    return "5 rules x 1000 instances, 10^5 triples";
}

std::string gf2_identities() {
    std::size_t perms = 0;
    auto check_sigma = [&](const F2Matrix& a) {
        const std::size_t n = a.rows();
        const std::size_t count = (std::size_t{1} << n) - 1;
        const F2Matrix sigma = induced_permutation(a);
        require(sigma.rows() == count && sigma.cols() == count, "σ has the wrong shape");
        F2Matrix subsets(n, count);
        for (std::size_t x = 1; x <= count; ++x)
            for (std::size_t r = 0; r < n; ++r) subsets.set(r, x - 1, ((x >> (n - 1 - r)) & 1U) != 0);
        for (std::size_t s = 1; s <= count; ++s)
            for (std::size_t t = 1; t <= count; ++t)
                require(sigma(s - 1, t - 1) == (apply(a, t) == s), "σ entry is not [A t = s]");
        require(a * subsets == subsets * sigma, "A·𝔰 != 𝔰·σ_A");
        ++perms;
    };
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
            const F2Matrix a = matrix_from_bits(bits, n, n);
            if (invertible(a)) check_sigma(a);
        }
    Rng rng(7007);
    for (int found = 0; found < 100;) {
        const F2Matrix a = random_f2_matrix(rng, 4, 4);
        if (!invertible(a)) continue;
        check_sigma(a);
        ++found;
    }

    std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, std::vector<double>> arrow_cache;
    auto bits_of = [](const F2Matrix& m) {
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < m.rows() * m.cols(); ++i)
            if (m(i / m.cols(), i % m.cols())) bits |= std::uint64_t{1} << i;
        return bits;
    };
    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t m = 1; m <= 3; ++m) {
                std::vector<Diagram> arrows_a, arrows_b;
                for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (k * n)); ++bits)
                    arrows_a.push_back(matrix_arrow(matrix_from_bits(bits, k, n)));
                for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (m * k)); ++bits)
                    arrows_b.push_back(matrix_arrow(matrix_from_bits(bits, m, k)));
                for (std::uint64_t ab = 0; ab < arrows_a.size(); ++ab)
                    for (std::uint64_t bb = 0; bb < arrows_b.size(); ++bb, ++pairs) {
                        const F2Matrix product = matrix_from_bits(bb, m, k) * matrix_from_bits(ab, k, n);
                        auto [it, fresh] = arrow_cache.try_emplace({m, n, bits_of(product)});
                        if (fresh) it->second = values(matrix_arrow(product));
                        require(values(compose_seq(arrows_a[ab], arrows_b[bb])) == it->second,
                                "arrow(B)∘arrow(A) != arrow(BA)");
                    }
            }
    return std::to_string(perms) + " permutations, " + std::to_string(pairs) + " arrow pairs";
}

std::string negative_control() {
    std::ostringstream out, err;
    std::istringstream in;
    const int code = cli::run({"synthesize", golden("matrices/and.json")}, in, out, err);
    require(code == cli::non_affine, "exit code " + std::to_string(code) + ", expected 3");
    require(err.str().find("support is not affine") != std::string::npos, "missing non-affine message");
    require(out.str().empty(), "unexpected output on stdout");
    return "exit 3: " + err.str().substr(0, err.str().find('\n'));
}

std::string cli_determinism() {
    std::ifstream manifest(golden("cases.txt"));
    require(static_cast<bool>(manifest), "cases.txt missing");
    std::size_t cases = 0, diagrams = 0;
    for (std::string line; std::getline(manifest, line);) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream s(line);
        std::string name, cmd;
        int code = 0;
        s >> name >> code >> cmd;
        std::vector<std::string> args{cmd};
        for (std::string a; s >> a;) args.push_back(a.find('/') != std::string::npos ? golden(a) : a);
        const std::string expected = slurp(golden("expected/" + name + ".out"));
        std::string first;
        for (int run = 0; run < 2; ++run) {
            std::ostringstream out, err;
            std::istringstream in;
            const int got = cli::run(args, in, out, err);
            require(got == code, name + ": exit " + std::to_string(got) + ", expected " + std::to_string(code));
            require(out.str() == expected, name + ": output differs from the golden file");
            if (run == 0) first = out.str();
            require(out.str() == first, name + ": output differs between runs");
        }
        ++cases;
        if (cmd == "eval" && code == 0) ++diagrams;
    }
    require(diagrams >= 20, "corpus has only " + std::to_string(diagrams) + " diagrams");
    return std::to_string(cases) + " cases over " + std::to_string(diagrams) + " diagrams";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "generator semantics", 1, generator_semantics},
        {2, "decoherence bridge", 5, decoherence_bridge},
        {3, "Fourier round trip", 10, fourier_round_trip},
        {4, "normal-form round trip", 60, normal_form_round_trip},
        {5, "completeness surrogate", 60, completeness_surrogate},
        {6, "rule soundness", 30, rule_soundness},
        {7, "GF(2) identities", 30, gf2_identities},
        {8, "non-affine negative control", 1, negative_control},
        {9, "CLI golden determinism", 60, cli_determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = true;
        try {
            detail = c.body();
        } catch (const Violation& v) {
            pass = false;
            detail = v.what;
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (pass && seconds > c.budget_seconds) {
            pass = false;
            detail += " (over time budget)";
        }
        if (!pass) ++failed;
        std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  ["
                  << std::fixed << std::setprecision(2) << seconds << "s / " << c.budget_seconds << "s]  " << detail
                  << '\n'
                  << std::flush;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
