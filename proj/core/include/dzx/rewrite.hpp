#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dzx/diagram.hpp"

namespace dzx {

/// Match failures, parameter poles and rejected soundness checks.
class RewriteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class RuleId : std::uint8_t {
    F1,      ///< green fusion, parameters multiply
    F2,      ///< red fusion, parameters combine by p ⊕ q
    M,       ///< colour change of a state
    L,       ///< copied-bit gadget to Fourier normal form
    ID,      ///< phaseless degree-2 spider to wire
    COPY,    ///< basis state copied through a green spider
    BIALG,   ///< green/red square to red-green pair
    SCALAR,  ///< merge scalar nodes
    custom,
};

[[nodiscard]] const char* to_string(RuleId rule) noexcept;
[[nodiscard]] std::optional<RuleId> parse_rule_id(std::string_view name) noexcept;

/// A rule together with the node ids it acts on and the parameters it read.
struct RuleInstance {
    RuleId rule = RuleId::custom;
    std::vector<NodeId> site;
    std::vector<double> params;
};

/// Probabilistic XOR p ⊕ q = p + q − 2pq.
[[nodiscard]] constexpr double prob_xor(double p, double q) noexcept { return p + q - 2.0 * p * q; }

/**
 * The subdiagram induced by a node set, opened along its cut edges.
 *
 * `local` is a 0→r diagram whose output j replaces the j-th cut edge
 * (in the host's edge order); `outside[j]` and `inside[j]` are that edge's
 * far and near ends in the host.
 */
struct Patch {
    std::vector<NodeId> nodes;
    Diagram local;
    std::vector<Endpoint> outside;
    std::vector<NodeId> inside;
};

[[nodiscard]] Patch extract_patch(const Diagram& d, std::span<const NodeId> nodes);
/// Swaps the patch nodes for `replacement` (a 0→r diagram) wired to the same cut edges.
[[nodiscard]] Diagram replace_patch(const Diagram& d, const Patch& patch, const Diagram& replacement);

/// Soundness gate: evaluations of the patch and its replacement agree within rel 1e-9.
/// Falls back to whole-diagram evaluation when the patch boundary is too wide.
[[nodiscard]] bool patch_is_sound(const Diagram& d, const Patch& patch, const Diagram& replacement);

enum class Gate : std::uint8_t { checked, unchecked };

[[nodiscard]] Diagram fuse_green(const Diagram& d, NodeId a, NodeId b, Gate gate = Gate::checked);
[[nodiscard]] Diagram fuse_red(const Diagram& d, NodeId a, NodeId b, Gate gate = Gate::checked);
/// red state p ↦ (1−p)·green(μ = p/(1−p)); green state μ ↦ (1+μ)·red(p = μ/(1+μ)).
[[nodiscard]] Diagram color_convert_state(const Diagram& d, NodeId state, Gate gate = Gate::checked);
/**
 * Rewrites the gadget centred on green node `center` (parameter λ), whose
 * legs each enter a phaseless red XOR node carrying a green leaf μ_i and one
 * free leg, into Fourier normal form. The gadget evaluates to
 * v_y = Π μ_i^{y_i} + λ Π μ_i^{1−y_i}; the replacement uses Λ = v_0 and the
 * Fourier parameters of v.
 */
[[nodiscard]] Diagram apply_rule_L(const Diagram& d, NodeId center, Gate gate = Gate::checked);
[[nodiscard]] Diagram remove_identity(const Diagram& d, NodeId node, Gate gate = Gate::checked);
/// A red state copied through the adjacent green spider.
[[nodiscard]] Diagram copy_rule(const Diagram& d, NodeId state, Gate gate = Gate::checked);
/// K_{2,2} square of phaseless spiders (two green, two red) containing green node `g`.
[[nodiscard]] Diagram bialgebra(const Diagram& d, NodeId g, Gate gate = Gate::checked);
[[nodiscard]] Diagram merge_scalars(const Diagram& d, Gate gate = Gate::checked);

/// Dispatches on rule.rule. Throws RewriteError for `custom`.
[[nodiscard]] Diagram apply_rule(const Diagram& d, const RuleInstance& rule, Gate gate = Gate::checked);

/// Every site in `d` where `rule` structurally matches, in a deterministic order.
[[nodiscard]] std::vector<RuleInstance> find_matches(const Diagram& d, RuleId rule);

struct SimplifyOptions {
    /// 0 takes the first match each round; otherwise matches are picked pseudo-randomly.
    std::uint64_t seed = 0;
};

/// F1/F2 fusion and identity removal to a fixpoint, then scalar merging.
[[nodiscard]] Diagram simplify(const Diagram& d, std::vector<RuleInstance>* trace = nullptr,
                               SimplifyOptions options = {});

/// Applies the rule to a copy without the gate and compares whole-diagram evaluations.
[[nodiscard]] bool check_rule_soundness(const RuleInstance& rule, const Diagram& d);
[[nodiscard]] bool check_rule_soundness(const std::function<Diagram(const Diagram&)>& rewrite, const Diagram& d);

}  // namespace dzx
