#include "dzx_tools/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dzx/io.hpp"
#include "dzx/normal_form.hpp"
#include "dzx/rewrite.hpp"
#include "dzx/semantics.hpp"
#include "dzx_tools/fuzz.hpp"

namespace dzx::cli {

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open " + path);
    buf << file.rdbuf();
    return buf.str();
}

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

int cmd_eval(const Context& ctx, const std::string& path) {
    ctx.out << io::dump(io::matrix_to_json(evaluate(io::parse_diagram(slurp(path, ctx.in))))) << '\n';
    return ok;
}

int cmd_normalize(const Context& ctx, const std::string& path) {
    ctx.out << io::dump(io::normal_form_to_json(normalize_diagram(io::parse_diagram(slurp(path, ctx.in))))) << '\n';
    return ok;
}

int cmd_equal(const Context& ctx, const std::string& lhs, const std::string& rhs, double tol) {
    const Diagram a = io::parse_diagram(slurp(lhs, ctx.in));
    const Diagram b = io::parse_diagram(slurp(rhs, ctx.in));
    const bool same = diagrams_equal(a, b, tol);
    io::Json j;
    j["equal"] = same;
    ctx.out << io::dump(j) << '\n';
    return same ? ok : not_equal;
}

int cmd_synthesize(const Context& ctx, const std::string& path) {
    ctx.out << io::dump(io::diagram_to_json(synthesize(io::parse_matrix(slurp(path, ctx.in))))) << '\n';
    return ok;
}

int cmd_simplify(const Context& ctx, const std::string& path, bool with_trace, std::uint64_t seed) {
    std::vector<RuleInstance> trace;
    const Diagram d = simplify(io::parse_diagram(slurp(path, ctx.in)), with_trace ? &trace : nullptr, {seed});
    if (with_trace) {
        io::Json j;
        j["diagram"] = io::diagram_to_json(d);
        j["trace"] = io::trace_to_json(trace);
        ctx.out << io::dump(j) << '\n';
    } else {
        ctx.out << io::dump(io::diagram_to_json(d)) << '\n';
    }
    return ok;
}

int cmd_fuzz(const Context& ctx, const FuzzOptions& options) {
    if (options.wires > 10) throw InputError("fuzz supports at most 10 wires");
    const FuzzReport report = run_fuzz(options);
    for (const auto& f : report.failures) {
        io::Json j;
        j["failure"] = f.check;
        j["iteration"] = f.iteration;
        j["detail"] = f.detail;
        j["reproducer"] = io::diagram_to_json(f.reproducer);
        ctx.out << io::dump(j) << '\n';
    }
    io::Json summary;
    summary["seed"] = options.seed;
    summary["wires"] = options.wires;
    summary["iters"] = report.iters;
    summary["passed"] = report.passed;
    summary["failed"] = report.failures.size();
    ctx.out << io::dump(summary) << '\n';
    return report.failures.empty() ? ok : not_equal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decohered ZX-calculus diagrams: evaluation, normal forms, equality and synthesis", "dzx"};
    app.require_subcommand(1);

    std::string path;
    std::string path2;
    double tol = 1e-9;
    bool with_trace = false;
    std::uint64_t simplify_seed = 0;
    FuzzOptions fuzz;

    auto* eval = app.add_subcommand("eval", "Evaluate a diagram to its matrix");
    eval->add_option("diagram", path, "Diagram file, or - for stdin")->required();
    auto* normalize = app.add_subcommand("normalize", "Print the canonical normal-form datum");
    normalize->add_option("diagram", path, "Diagram file, or - for stdin")->required();
    auto* equal = app.add_subcommand("equal", "Decide semantic equality (exit 0 equal, 1 different)");
    equal->add_option("lhs", path, "First diagram file")->required();
    equal->add_option("rhs", path2, "Second diagram file")->required();
    equal->add_option("--tol", tol, "Relative tolerance on the continuous parameters")->capture_default_str();
    auto* synth = app.add_subcommand("synthesize", "Build a diagram from a matrix file");
    synth->add_option("matrix", path, "Matrix file, or - for stdin")->required();
    auto* simp = app.add_subcommand("simplify", "Fuse spiders and drop identities");
    simp->add_option("diagram", path, "Diagram file, or - for stdin")->required();
    simp->add_flag("--trace", with_trace, "Also print the applied rule sequence");
    simp->add_option("--seed", simplify_seed, "Pick rewrite sites pseudo-randomly (0 = first match)");
    auto* fz = app.add_subcommand("fuzz", "Randomized self-check");
    fz->add_option("--seed", fuzz.seed)->capture_default_str();
    fz->add_option("--wires", fuzz.wires)->capture_default_str();
    fz->add_option("--iters", fuzz.iters)->capture_default_str();
    fz->add_flag("--inject-fault", fuzz.inject_fault)->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    const Context ctx{in, out, err};
    try {
        if (*eval) return cmd_eval(ctx, path);
        if (*normalize) return cmd_normalize(ctx, path);
        if (*equal) return cmd_equal(ctx, path, path2, tol);
        if (*synth) return cmd_synthesize(ctx, path);
        if (*simp) return cmd_simplify(ctx, path, with_trace, simplify_seed);
        if (*fz) return cmd_fuzz(ctx, fuzz);
    } catch (const NonAffineSupport& e) {
        err << "error: " << e.what() << '\n';
        return non_affine;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const io::FormatError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const DiagramError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const EvaluationError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }
    return input_error;
}

}  // namespace dzx::cli
