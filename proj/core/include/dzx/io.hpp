#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dzx/diagram.hpp"
#include "dzx/normal_form.hpp"
#include "dzx/rewrite.hpp"
#include "dzx/semantics.hpp"

namespace dzx::io {

using Json = nlohmann::ordered_json;

/// Syntactically or structurally malformed JSON input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Diagram files.
 *
 * `inputs` and `outputs` list port ids; an endpoint {"in": id} names the
 * input whose id is `id`, and the position of that id in the list is the
 * wire index. Node ids are arbitrary distinct integers. A spider without a
 * `weight` gets the generator weight for its leg split, where a leg counts
 * as an input when the node is the second endpoint of its edge. A scalar
 * carries its value in `param`; `weight` (default 1) multiplies it.
 */
[[nodiscard]] Diagram diagram_from_json(const Json& j);
[[nodiscard]] Diagram parse_diagram(std::string_view text);
[[nodiscard]] Json diagram_to_json(const Diagram& d);

[[nodiscard]] NonNegMatrix matrix_from_json(const Json& j);
[[nodiscard]] NonNegMatrix parse_matrix(std::string_view text);
/// Entries are rounded to `canonical_digits` significant digits.
[[nodiscard]] Json matrix_to_json(const NonNegMatrix& m);

/// {"n","k","A","x","Lambda","lambda"}, or {"zero": n}.
[[nodiscard]] Json normal_form_to_json(const NormalFormData& nf);
[[nodiscard]] Json trace_to_json(const std::vector<RuleInstance>& trace);

/// Significant digits kept in canonical output so that last-bit noise does not reach golden files.
inline constexpr int canonical_digits = 12;
[[nodiscard]] double round_significant(double x, int digits = canonical_digits);

/// Compact single-line dump.
[[nodiscard]] std::string dump(const Json& j);

}  // namespace dzx::io
