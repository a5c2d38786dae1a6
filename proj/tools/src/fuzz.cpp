#include "dzx_tools/fuzz.hpp"

#include <functional>
#include <optional>

#include "dzx/normal_form.hpp"
#include "dzx/random.hpp"
#include "dzx/rewrite.hpp"
#include "dzx/semantics.hpp"

namespace dzx::cli {

namespace {

constexpr double kTol = 1e-9;

using Check = std::function<std::optional<std::string>(const Diagram&, Rng&)>;

bool state_close(const std::vector<double>& a, const std::vector<double>& b) {
    double diff = 0.0;
    double mag = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff = std::max(diff, std::abs(a[i] - b[i]));
        mag = std::max({mag, a[i], b[i]});
    }
    return diff <= kTol * mag;
}

std::optional<std::string> check_round_trip(const Diagram& d, Rng&) {
    const NonNegMatrix name = evaluate(bend_name(d));
    const NormalFormData nf = normalize_state(name.entries());
    const Diagram nfd = nf_to_diagram(nf);
    if (!state_close(evaluate(nfd).entries(), name.entries())) return "normal-form diagram does not evaluate to the input";
    if (!nf_equal(normalize_state(evaluate(nfd).entries()), nf, kTol)) return "re-normalizing changed the canonical datum";
    return std::nullopt;
}

Diagram corrupted_green_fusion(const Diagram& d, const RuleInstance& site) {
    Diagram out = fuse_green(d, site.site[0], site.site[1], Gate::unchecked);
    Node merged = out.nodes().back();
    merged.param = site.params[0] + site.params[1];
    out.set_node(merged);
    return out;
}

std::optional<std::string> check_rules(const Diagram& d, Rng& rng, bool inject_fault) {
    for (RuleId rule : {RuleId::F1, RuleId::F2, RuleId::M, RuleId::ID, RuleId::COPY, RuleId::BIALG, RuleId::L}) {
        const auto matches = find_matches(d, rule);
        if (matches.empty()) continue;
        const RuleInstance& site = matches[std::uniform_int_distribution<std::size_t>(0, matches.size() - 1)(rng)];
        bool sound = false;
        if (inject_fault && rule == RuleId::F1) {
            sound = check_rule_soundness([&](const Diagram& x) { return corrupted_green_fusion(x, site); }, d);
        } else {
            sound = check_rule_soundness(site, d);
        }
        // BIALG and COPY shapes are allowed to fail the gate; they are only reported when they change semantics.
        if (!sound && (rule == RuleId::BIALG || rule == RuleId::COPY)) {
            try {
                (void)apply_rule(d, site);
            } catch (const RewriteError&) {
                continue;
            }
        }
        if (!sound) return std::string("rule ") + to_string(rule) + " changed the interpretation";
    }
    return std::nullopt;
}

std::optional<std::string> check_equality(const Diagram& d, Rng&) {
    if (!diagrams_equal(d, d, kTol)) return "diagram is not equal to itself";
    if (!diagrams_equal(d, simplify(d), kTol)) return "simplify changed the interpretation";
    return std::nullopt;
}

std::optional<std::string> guarded(const Check& check, const Diagram& d, Rng rng) {
    try {
        return check(d, rng);
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

// Greedy deletion of internal edges, then of nodes without boundary legs,
// keeping each deletion that still fails the same check.
Diagram shrink(Diagram d, const Check& check, const Rng& rng) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t e = 0; e < d.edges().size(); ++e) {
            const Edge& edge = d.edges()[e];
            if (!edge.a.is_node() || !edge.b.is_node()) continue;
            Diagram smaller = d;
            smaller.remove_edge(e);
            if (validate(smaller).empty() && guarded(check, smaller, rng)) {
                d = std::move(smaller);
                progress = true;
                break;
            }
        }
        if (progress) continue;
        for (const auto& n : d.nodes()) {
            bool on_boundary = false;
            for (std::size_t e : d.incident_edges(Endpoint::node(n.id)))
                on_boundary |= d.edges()[e].a.is_boundary() || d.edges()[e].b.is_boundary();
            if (on_boundary) continue;
            Diagram smaller = d;
            smaller.remove_node(n.id);
            if (validate(smaller).empty() && guarded(check, smaller, rng)) {
                d = std::move(smaller);
                progress = true;
                break;
            }
        }
    }
    return d;
}

}  // namespace

FuzzReport run_fuzz(const FuzzOptions& options) {
    FuzzReport report;
    report.iters = options.iters;
    const std::vector<std::pair<std::string, Check>> checks = {
        {"normal-form round trip", check_round_trip},
        {"rule soundness",
         [fault = options.inject_fault](const Diagram& d, Rng& rng) { return check_rules(d, rng, fault); }},
        {"equality reflexivity", check_equality},
    };
    for (std::size_t i = 0; i < options.iters; ++i) {
        Rng rng(options.seed * 0x9E3779B97F4A7C15ULL + i);
        RandomDiagramOptions shape;
        shape.inputs = std::uniform_int_distribution<std::size_t>(0, options.wires)(rng);
        shape.outputs = options.wires - shape.inputs;
        shape.spiders = std::uniform_int_distribution<std::size_t>(1, options.wires + 2)(rng);
        shape.extra_edges = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
        const Diagram d = random_diagram(rng, shape);

        bool passed = true;
        for (const auto& [name, check] : checks) {
            if (auto problem = guarded(check, d, rng)) {
                report.failures.push_back({i, name, *problem, shrink(d, check, rng)});
                passed = false;
                break;
            }
        }
        report.passed += passed ? 1 : 0;
    }
    return report;
}

}  // namespace dzx::cli
