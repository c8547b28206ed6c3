#include <doctest.h>

#include <Eigen/Dense>

#include "support.hpp"
#include "wirtinger/errors.hpp"
#include "wirtinger/optimize.hpp"

using namespace wirtinger;
using wirtinger::testing::close;
using wirtinger::testing::Rng;

namespace {

DescentConfig config(double mu, double tol = 1e-8, int max_iter = 1000) {
    DescentConfig cfg;
    cfg.mu = mu;
    cfg.tol = tol;
    cfg.max_iter = max_iter;
    return cfg;
}

// Normal-equation solution of min sum |d_k - <x_k, f>|^2, i.e. conj(f) = (X^H X)^-1 X^H d
// where the rows of X are x_k^T.
HVec normal_equations(const std::vector<HVec>& x, const std::vector<Complex>& d) {
    const auto m = static_cast<Eigen::Index>(x.size());
    const auto n = static_cast<Eigen::Index>(x.front().size());
    Eigen::MatrixXcd X(m, n);
    Eigen::VectorXcd D(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        for (Eigen::Index j = 0; j < n; ++j) {
            X(k, j) = x[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        }
        D(k) = d[static_cast<std::size_t>(k)];
    }
    const Eigen::VectorXcd g = (X.adjoint() * X).ldlt().solve(X.adjoint() * D);
    std::vector<Complex> f(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
        f[static_cast<std::size_t>(j)] = std::conj(g(j));
    }
    return HVec(std::move(f));
}

} // namespace

TEST_CASE("descent on a squared distance halves the error each step") {
    const Complex a{2.0, 1.0};
    const ScalarTrace t = steepest_descent_scalar(parse("abs2(z - (2+1i))"), a + 3.0, config(0.5));
    CHECK(t.termination == Termination::converged);
    CHECK(t.iterations() <= 30);
    CHECK(std::abs(t.final_point() - a) < 1e-8);
    for (std::size_t n = 1; n < t.iterates.size(); ++n) {
        CHECK(std::abs(t.iterates[n] - a) / std::abs(t.iterates[n - 1] - a) == doctest::Approx(0.5).epsilon(1e-10));
    }
    CHECK(t.costs.size() == t.iterates.size());
    CHECK(t.grad_norms.back() < 1e-8);
}

TEST_CASE("a fixed step of one lands on the minimiser of |z-a|^2") {
    const ScalarTrace t = steepest_descent_scalar(parse("(z-2)*conj(z-2)"), 0.0, config(1.0));
    CHECK(t.iterations() == 1);
    CHECK(t.final_point() == Complex{2.0, 0.0});
}

TEST_CASE("too large a step diverges") {
    const ScalarTrace t = steepest_descent_scalar(parse("(z-2)*conj(z-2)"), 0.0, config(2.5));
    CHECK(t.termination == Termination::diverged);
    CHECK(t.costs.back() > 10.0 * t.costs.front());
    CHECK(t.iterations() == 3);
}

TEST_CASE("iteration cap") {
    const ScalarTrace t = steepest_descent_scalar(parse("abs2(z)"), 1.0, config(0.01, 1e-12, 5));
    CHECK(t.termination == Termination::max_iter);
    CHECK(t.iterations() == 5);
}

TEST_CASE("backtracking reaches the minimum from an overlong initial step") {
    DescentConfig cfg = config(10.0);
    cfg.step_mode = StepMode::backtracking;
    const ScalarTrace t = steepest_descent_scalar(parse("abs2(z - 1) + abs2(z*z)"), {1.5, 1.5}, cfg);
    CHECK(t.termination == Termination::converged);
    for (std::size_t n = 1; n < t.costs.size(); ++n) {
        CHECK(t.costs[n] <= t.costs[n - 1]);
    }
}

TEST_CASE("complex-valued costs are rejected") {
    CHECK_THROWS_AS(steepest_descent_scalar(parse("z^2"), {1.0, 1.0}, config(0.1)), NonRealCost);
    // rounding-level imaginary parts are tolerated
    CHECK_NOTHROW(steepest_descent_scalar(parse("abs2(z) + (1e-14i)"), 1.0, config(0.1)));
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(config(0.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(config(0.1, -1.0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(config(0.1, 1e-8, -1).validate(), std::invalid_argument);
    DescentConfig bad = config(0.1);
    bad.shrink = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK(to_string(Termination::max_iter) == "MaxIter");
}

TEST_CASE("Hilbert descent on a squared distance") {
    const HVec w{{2.0, 1.0}, {-1.0, 0.5}, {0.25, -3.0}};
    const HVec f0 = w + HVec{{3.0, 0.0}, {0.0, -2.0}, {1.0, 1.0}};
    const FunctionalProgram cost = [&](const HVec& f) {
        const FunctionalJet d = norm_squared_functional(f) - ip_functional(InnerProductForm::fw, w, f) -
                                ip_functional(InnerProductForm::wf, w, f) + constant_functional(inner(w, w), 3);
        return d;
    };
    const HilbertTrace t = steepest_descent_hilbert(cost, f0, config(0.5));
    CHECK(t.termination == Termination::converged);
    CHECK(max_abs_diff(t.final_point(), w) < 1e-8);
    for (std::size_t n = 1; n < t.iterates.size(); ++n) {
        CHECK(norm(t.iterates[n] - w) / norm(t.iterates[n - 1] - w) == doctest::Approx(0.5).epsilon(1e-10));
    }
}

TEST_CASE("Newton lands on the minimiser of a squared distance") {
    Rng rng(61);
    const Complex a{0.75, -1.25};
    const Expr cost = parse("abs2(z - (0.75-1.25i))");
    for (int trial = 0; trial < 50; ++trial) {
        const Complex z = rng.point(10.0);
        CHECK(std::abs(z + newton_step_scalar(cost, z) - a) <= 1e-12);
    }
    const ScalarTrace t = newton_minimize_scalar(cost, 5.0, config(0.1));
    CHECK(t.termination == Termination::converged);
    CHECK(t.iterations() == 1);
}

TEST_CASE("Newton refuses a degenerate block") {
    CHECK_THROWS_AS(newton_step_scalar(parse("re(z)^2"), 1.0), SingularHessian);
    // fallback keeps the iteration going
    const ScalarTrace t = newton_minimize_scalar(parse("re(z)^2"), 1.0, config(0.5));
    CHECK(t.termination == Termination::converged);
}

TEST_CASE("strict least squares matches the normal equations") {
    Rng rng(62);
    const std::size_t n = 3;
    std::vector<HVec> x;
    std::vector<Complex> d;
    for (int k = 0; k < 30; ++k) {
        x.push_back(rng.vector(n));
        d.push_back(rng.gaussian());
    }
    const LeastSquaresProblem problem(x, d, false);
    CHECK(problem.parameter_dim() == n);
    const HVec oracle = normal_equations(x, d);

    double trace = 0.0;
    for (const HVec& xk : x) {
        trace += norm(xk) * norm(xk);
    }
    const HilbertTrace t = steepest_descent_hilbert(problem.program(), HVec::zeros(n), config(1.0 / trace, 1e-10, 100000));
    CHECK(t.termination == Termination::converged);
    CHECK(max_abs_diff(t.final_point(), oracle) < 1e-8);

    // the jet value agrees with direct summation
    const HVec p = rng.vector(n);
    CHECK(close(problem.jet(p).value, problem.cost(p), 1e-12));
}

TEST_CASE("least-squares gradient matches finite differences") {
    Rng rng(63);
    std::vector<HVec> x;
    std::vector<Complex> d;
    for (int k = 0; k < 10; ++k) {
        x.push_back(rng.vector(2));
        d.push_back(rng.gaussian());
    }
    for (const bool wl : {false, true}) {
        const LeastSquaresProblem problem(x, d, wl);
        const HVec p = rng.vector(problem.parameter_dim());
        const FunctionalJet j = problem.jet(p);
        const FdWirtingerGradients fd =
            fd_wirtinger_gradients([&](const HVec& q) { return Complex{problem.cost(q), 0.0}; }, p);
        CHECK(close(j.grad_fc, fd.grad_fc, 1e-7));
        CHECK(close(j.grad_f, fd.grad_f, 1e-7));
        CHECK(close(j.grad_f, conj(j.grad_fc), 1e-14));
    }
}

TEST_CASE("least-squares input validation") {
    CHECK_THROWS_AS(LeastSquaresProblem({}, {}, false), EmptyData);
    CHECK_THROWS_AS(LeastSquaresProblem({HVec{1.0}}, {1.0, 2.0}, false), DimensionMismatch);
    CHECK_THROWS_AS(LeastSquaresProblem({HVec{1.0}, HVec{1.0, 2.0}}, {1.0, 2.0}, false), DimensionMismatch);
    const LeastSquaresProblem p({HVec{1.0, 2.0}}, {1.0}, true);
    CHECK(p.parameter_dim() == 4);
    CHECK_THROWS_AS(p.jet(HVec::zeros(2)), DimensionMismatch);
    CHECK_THROWS_AS(split_widely_linear(HVec::zeros(3)), DimensionMismatch);
    const auto [a, b] = split_widely_linear(HVec{1.0, 2.0, 3.0, 4.0});
    CHECK(a == HVec{1.0, 2.0});
    CHECK(b == HVec{3.0, 4.0});
}
