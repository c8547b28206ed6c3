// wirt: differentiate, check, classify and minimise expressions in z and z*.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wirtinger/cli.hpp"
#include "wirtinger/expr.hpp"

namespace {

using namespace wirtinger;
using namespace wirtinger::cli;

// WIRT_LOG=1 logs each command to stderr, WIRT_LOG=2 also streams descent iterations.
int log_level() {
    const char* env = std::getenv("WIRT_LOG");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    const std::string v(env);
    if (v == "debug") return 2;
    if (v == "info") return 1;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        return 1;
    }
}

void print(const json& body, bool as_json) {
    if (as_json) {
        std::cout << body.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : body.items()) {
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

// Complex-valued flag: stored as text, parsed with the expression literal grammar.
struct ComplexFlag {
    std::string text;
    std::optional<Complex> value() const {
        if (text.empty()) {
            return std::nullopt;
        }
        return parse_complex(text);
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wirtinger-calculus toolkit: derivatives in z and z*, CR checks and steepest descent"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = true;
    app.add_flag("--json,!--no-json", as_json, "JSON output (default) or key: value lines");

    std::string expr_text;
    ComplexFlag at;
    int order = 1;
    double step = kDefaultFdStep;
    double tol = 0.0;
    std::uint64_t seed = 0;

    auto* diff = app.add_subcommand("diff", "value, dz and dzc at a point (with --order 2, the Hessian block)");
    diff->add_option("expr", expr_text, "expression in z, zc, i")->required();
    diff->add_option("--at", at.text, "point, e.g. 1+2i")->required();
    diff->add_option("--order", order, "1 or 2")->capture_default_str();

    auto* hessian = app.add_subcommand("hessian", "same as diff --order 2");
    hessian->add_option("expr", expr_text)->required();
    hessian->add_option("--at", at.text)->required();

    auto* check = app.add_subcommand("check", "compare AD derivatives with central differences");
    check->add_option("expr", expr_text)->required();
    check->add_option("--at", at.text, "point (default: drawn from --seed)");
    check->add_option("--step", step, "difference step")->capture_default_str();
    check->add_option("--tol", tol, "largest accepted relative residual (default 1e-6)");
    check->add_option("--seed", seed, "seed for the sample point")->capture_default_str();

    auto* classify = app.add_subcommand("classify", "Cauchy-Riemann verdict from finite differences");
    classify->add_option("expr", expr_text)->required();
    classify->add_option("--at", at.text, "point (default: drawn from --seed)");
    classify->add_option("--step", step)->capture_default_str();
    classify->add_option("--tol", tol, "residual threshold (default 1e-4)");
    classify->add_option("--seed", seed)->capture_default_str();

    MinimizeOptions mopts;
    std::string data_path;
    std::string trace_path;
    double mu = 0.0;
    auto* minimize = app.add_subcommand("minimize", "steepest descent along -dcost/dz*");
    minimize->add_option("expr", expr_text, "real-valued cost in z (omit with --data)");
    minimize->add_option("--from,--at", at.text, "starting point; with --data a JSON array of [re, im] pairs");
    minimize->add_option("--mu", mu, "step size (default 0.1; with --data 1/sum|x_k|^2)");
    minimize->add_option("--tol", mopts.tol, "stop when |dcost/dz*| < tol")->capture_default_str();
    minimize->add_option("--max-iter", mopts.max_iter)->capture_default_str();
    minimize->add_flag("--backtrack", mopts.backtrack, "Armijo backtracking from mu");
    minimize->add_option("--data", data_path, "least-squares data file {\"X\": ..., \"d\": ...}");
    minimize->add_flag("--widely-linear", mopts.widely_linear, "fit <x, a> + <x*, b>");
    minimize->add_option("--trace", trace_path, "write the iterates as JSON lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitSyntax;
    }

    const int level = log_level();
    const CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    const auto started = std::chrono::steady_clock::now();

    CliReport report;
    try {
        if (chosen == diff || chosen == hessian) {
            report = cmd_diff({expr_text, *at.value(), chosen == hessian ? 2 : order});
        } else if (chosen == check) {
            CheckOptions opts{expr_text, at.value(), step, 1e-6, seed};
            if (check->count("--tol") > 0) {
                opts.tol = tol;
            }
            report = cmd_check(opts);
        } else if (chosen == classify) {
            ClassifyOptions opts{expr_text, at.value(), step, kDefaultClassifyTol, seed};
            if (classify->count("--tol") > 0) {
                opts.tol = tol;
            }
            report = cmd_classify(opts);
        } else {
            if (!expr_text.empty()) {
                mopts.expr = expr_text;
            }
            if (!data_path.empty()) {
                mopts.data_path = data_path;
                if (!at.text.empty()) {
                    mopts.from_vector = at.text;
                }
            } else {
                mopts.from = at.value();
            }
            if (minimize->count("--mu") > 0) {
                mopts.mu = mu;
            }
            if (!trace_path.empty()) {
                mopts.trace_path = trace_path;
            }
            if (level >= 2) {
                mopts.trace_stream = &std::cerr;
            }
            report = cmd_minimize(mopts);
        }
    } catch (const std::exception& e) {
        report = error_report(command, e);
    }

    print(report.body, as_json);
    if (level >= 1) {
        const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
        std::cerr << "wirt: " << command << " exit=" << report.exit_code << " elapsed_ms=" << elapsed.count();
        if (report.body.contains("error")) {
            std::cerr << " error=" << report.body["error"]["message"].get<std::string>();
        }
        std::cerr << '\n';
    }
    return report.exit_code;
}
