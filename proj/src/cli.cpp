#include "wirtinger/cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wirtinger/errors.hpp"
#include "wirtinger/eval.hpp"
#include "wirtinger/expr.hpp"
#include "wirtinger/fd_oracle.hpp"
#include "wirtinger/second_order.hpp"
#include "wirtinger/serialize.hpp"

namespace wirtinger::cli {

namespace {

json header(const std::string& command, const std::string& input, const Expr& e) {
    return {{"schema", kSchemaVersion}, {"command", command}, {"input", input}, {"expr", format(e)}};
}

real relative_residual(Complex ad, Complex fd) {
    return std::abs(ad - fd) / (1.0 + std::abs(ad));
}

int exit_code_for(Termination t) {
    switch (t) {
    case Termination::converged:
        return kExitOk;
    case Termination::max_iter:
        return kExitFailed;
    case Termination::diverged:
        return kExitDiverged;
    }
    return kExitFailed;
}

json descent_config_json(const DescentConfig& cfg) {
    return {{"mu", cfg.mu},
            {"tol", cfg.tol},
            {"max_iter", cfg.max_iter},
            {"step_mode", cfg.step_mode == StepMode::backtracking ? "backtracking" : "fixed"}};
}

template <class Point>
void summarize(json& body, const DescentTrace<Point>& trace) {
    body["termination"] = std::string(to_string(trace.termination));
    body["iterations"] = trace.iterations();
    body["initial_cost"] = trace.costs.front();
    body["final_cost"] = trace.costs.back();
    body["final_grad_norm"] = trace.grad_norms.back();
}

template <class Trace>
void emit_trace(const MinimizeOptions& opts, const Trace& trace) {
    if (opts.trace_path) {
        std::ofstream out(*opts.trace_path);
        if (!out) {
            throw FormatError("cannot write trace file " + *opts.trace_path);
        }
        write_trace_jsonl(out, trace);
    }
    if (opts.trace_stream != nullptr) {
        write_trace_jsonl(*opts.trace_stream, trace);
    }
}

DescentConfig make_config(const MinimizeOptions& opts, real default_mu) {
    DescentConfig cfg;
    cfg.mu = opts.mu.value_or(default_mu);
    cfg.tol = opts.tol;
    cfg.max_iter = opts.max_iter;
    cfg.step_mode = opts.backtrack ? StepMode::backtracking : StepMode::fixed;
    cfg.validate();
    return cfg;
}

CliReport minimize_scalar(const MinimizeOptions& opts) {
    const Expr e = parse(*opts.expr);
    const Complex z0 = opts.from.value_or(Complex{});
    const DescentConfig cfg = make_config(opts, 0.1);
    json body = header("minimize", *opts.expr, e);
    body["from"] = complex_to_json(z0);
    body["config"] = descent_config_json(cfg);
    const ScalarTrace trace = steepest_descent_scalar(e, z0, cfg);
    emit_trace(opts, trace);
    summarize(body, trace);
    body["final"] = complex_to_json(trace.final_point());
    return {std::move(body), exit_code_for(trace.termination)};
}

CliReport minimize_data(const MinimizeOptions& opts) {
    std::ifstream in(*opts.data_path);
    if (!in) {
        throw FormatError("cannot read data file " + *opts.data_path);
    }
    LeastSquaresData data = least_squares_from_json(json::parse(in));
    const LeastSquaresProblem problem(std::move(data.x), std::move(data.d), opts.widely_linear);
    const HVec f0 = opts.from_vector ? hvec_from_json(json::parse(*opts.from_vector))
                                     : HVec::zeros(problem.parameter_dim());
    if (f0.size() != problem.parameter_dim()) {
        throw DimensionMismatch("starting vector has dimension " + std::to_string(f0.size()) + ", expected " +
                                std::to_string(problem.parameter_dim()));
    }
    const DescentConfig cfg = make_config(opts, problem.default_step());

    json body = {{"schema", kSchemaVersion},
                 {"command", "minimize"},
                 {"data", *opts.data_path},
                 {"samples", problem.sample_count()},
                 {"input_dim", problem.input_dim()},
                 {"widely_linear", problem.widely_linear()},
                 {"config", descent_config_json(cfg)}};
    const HilbertTrace trace = steepest_descent_hilbert(problem.program(), f0, cfg);
    emit_trace(opts, trace);
    summarize(body, trace);
    body["final"] = hvec_to_json(trace.final_point());
    if (problem.widely_linear()) {
        const auto [a, b] = split_widely_linear(trace.final_point());
        body["a"] = hvec_to_json(a);
        body["b"] = hvec_to_json(b);
    }
    return {std::move(body), exit_code_for(trace.termination)};
}

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const UnknownIdentifier*>(&e)) return "UnknownIdentifier";
    if (dynamic_cast<const ArityError*>(&e)) return "ArityError";
    if (dynamic_cast<const SyntaxError*>(&e)) return "SyntaxError";
    if (dynamic_cast<const NonFiniteError*>(&e)) return "NonFiniteError";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
    if (dynamic_cast<const UnsupportedPrimitive*>(&e)) return "UnsupportedPrimitive";
    if (dynamic_cast<const NonRealCost*>(&e)) return "NonRealCost";
    if (dynamic_cast<const SingularHessian*>(&e)) return "SingularHessian";
    if (dynamic_cast<const StepTooSmall*>(&e)) return "StepTooSmall";
    if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
    if (dynamic_cast<const EmptyData*>(&e)) return "EmptyData";
    if (dynamic_cast<const FormatError*>(&e)) return "FormatError";
    if (dynamic_cast<const nlohmann::json::exception*>(&e)) return "FormatError";
    if (dynamic_cast<const std::invalid_argument*>(&e)) return "InvalidArgument";
    return "Error";
}

int error_exit_code(const std::exception& e) {
    if (dynamic_cast<const NonRealCost*>(&e)) return kExitDiverged;
    if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const PoleError*>(&e) ||
        dynamic_cast<const UnsupportedPrimitive*>(&e) || dynamic_cast<const SingularHessian*>(&e)) {
        return kExitDomain;
    }
    if (dynamic_cast<const SyntaxError*>(&e) || dynamic_cast<const FormatError*>(&e) ||
        dynamic_cast<const nlohmann::json::exception*>(&e) || dynamic_cast<const StepTooSmall*>(&e) ||
        dynamic_cast<const DimensionMismatch*>(&e) || dynamic_cast<const EmptyData*>(&e) ||
        dynamic_cast<const std::invalid_argument*>(&e)) {
        return kExitSyntax;
    }
    return kExitFailed;
}

} // namespace

Complex sample_point(std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<real> u(-1.0, 1.0);
    const real x = u(engine);
    const real y = u(engine);
    return {x, y};
}

CliReport cmd_diff(const DiffOptions& opts) {
    if (opts.order != 1 && opts.order != 2) {
        throw std::invalid_argument("--order must be 1 or 2");
    }
    const Expr e = parse(opts.expr);
    json body = header("diff", opts.expr, e);
    body["at"] = complex_to_json(opts.at);
    body["order"] = opts.order;
    if (opts.order == 1) {
        const WirtingerJet j = eval_first(e, opts.at);
        body["value"] = complex_to_json(j.value);
        body["dz"] = complex_to_json(j.dz);
        body["dzc"] = complex_to_json(j.dzc);
    } else {
        const SecondOrderJet j = propagate_second_order(e, opts.at);
        body["value"] = complex_to_json(j.value);
        body["dz"] = complex_to_json(j.dz);
        body["dzc"] = complex_to_json(j.dzc);
        body["hessian"] = {{"dzz", complex_to_json(j.dzz)},
                           {"dzzc", complex_to_json(j.dzzc)},
                           {"dzcz", complex_to_json(j.dzcz)},
                           {"dzczc", complex_to_json(j.dzczc)}};
        body["mixed_partial_asymmetry"] = mixed_partial_asymmetry(j);
    }
    return {std::move(body), kExitOk};
}

CliReport cmd_check(const CheckOptions& opts) {
    const Expr e = parse(opts.expr);
    const Complex c = opts.at.value_or(sample_point(opts.seed));
    const WirtingerJet ad = eval_first(e, c);
    const HolomorphyClass cls = classify(e, c, opts.step);
    const real res_dz = relative_residual(ad.dz, cls.derivatives.w);
    const real res_dzc = relative_residual(ad.dzc, cls.derivatives.cw);
    const real worst = std::max(res_dz, res_dzc);
    const bool passed = worst < opts.tol;

    json body = header("check", opts.expr, e);
    body["at"] = complex_to_json(c);
    body["step"] = opts.step;
    body["tol"] = opts.tol;
    body["value"] = complex_to_json(ad.value);
    body["ad"] = {{"dz", complex_to_json(ad.dz)}, {"dzc", complex_to_json(ad.dzc)}};
    body["fd"] = {{"dz", complex_to_json(cls.derivatives.w)}, {"dzc", complex_to_json(cls.derivatives.cw)}};
    body["residuals"] = {{"dz", res_dz}, {"dzc", res_dzc}, {"max", worst}};
    body["classification"] = {{"verdict", std::string(to_string(cls.verdict))},
                              {"cr_residual", cls.cr_residual},
                              {"conj_cr_residual", cls.conj_cr_residual}};
    body["passed"] = passed;
    return {std::move(body), passed ? kExitOk : kExitFailed};
}

CliReport cmd_classify(const ClassifyOptions& opts) {
    const Expr e = parse(opts.expr);
    const Complex c = opts.at.value_or(sample_point(opts.seed));
    const HolomorphyClass cls = classify(e, c, opts.step, opts.tol);
    json body = header("classify", opts.expr, e);
    body["at"] = complex_to_json(c);
    body["step"] = opts.step;
    body["tol"] = opts.tol;
    body["verdict"] = std::string(to_string(cls.verdict));
    body["cr_residual"] = cls.cr_residual;
    body["conj_cr_residual"] = cls.conj_cr_residual;
    body["fd"] = {{"dz", complex_to_json(cls.derivatives.w)}, {"dzc", complex_to_json(cls.derivatives.cw)}};
    return {std::move(body), kExitOk};
}

CliReport cmd_minimize(const MinimizeOptions& opts) {
    if (opts.expr.has_value() == opts.data_path.has_value()) {
        throw std::invalid_argument("minimize takes either an expression or --data, not both");
    }
    if (opts.widely_linear && !opts.data_path) {
        throw std::invalid_argument("--widely-linear requires --data");
    }
    return opts.expr ? minimize_scalar(opts) : minimize_data(opts);
}

CliReport error_report(const std::string& command, const std::exception& e) {
    json err = {{"kind", error_kind(e)}, {"message", e.what()}};
    if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
        err["offset"] = s->offset();
    }
    return {{{"schema", kSchemaVersion}, {"command", command}, {"error", err}}, error_exit_code(e)};
}

} // namespace wirtinger::cli
