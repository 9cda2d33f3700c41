// Acceptance suite: one test case per criterion, each printing a single
// PASS/FAIL line. Symbolic checks are exact (zero tolerance); the numeric
// oracle tolerances are pinned in code.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <sys/wait.h>

#include "support/generators.hpp"
#include "thick/dsl/eval.hpp"
#include "thick/dsl/parser.hpp"
#include "thick/dsl/tree.hpp"
#include "thick/paper_formulas.hpp"
#include "thick/probe_suite.hpp"

using namespace thick;
using thick::testing::Rng;

namespace {

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << " — " << detail << std::endl;
}

SphericalSymbol nvar(int dim, int axis) { return SphericalSymbol::coordinate(dim, axis); }

int run_cli(const std::string& args) {
    const std::string cmd = std::string(THICKCALC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("criterion 1: point-source delta coefficient") {
    bool ok = true;
    int cases = 0;
    for (int j1 = 1; j1 <= 3; ++j1)
        for (int j2 = 1; j2 <= 3; ++j2)
            for (int j3 = 1; j3 <= 3; ++j3)
                for (int i = 1; i <= 3; ++i) {
                    std::array<int, 3> pattern{0, 0, 0};
                    for (int v : {i, j1, j2, j3}) ++pattern[static_cast<size_t>(v - 1)];
                    std::sort(pattern.begin(), pattern.end());
                    ScalarCoeff expected;  // zero when any exponent is odd
                    if (pattern == std::array<int, 3>{0, 0, 4}) expected = ScalarCoeff::c_power(1, Rational(1, 5));
                    if (pattern == std::array<int, 3>{0, 2, 2})
                        expected = ScalarCoeff::c_power(1, Rational(1, 15));
                    const ScalarCoeff actual = bowen_derivative({j1, j2, j3}, i).dirac_coefficient();
                    ok = ok && (actual == expected);
                    ++cases;
                }
    report(1, ok, "delta coefficient of the k=3 point-source derivative: (1/15)C for pattern (2,2,0), "
                  "(1/5)C for (4,0,0), 0 for odd exponents (" + std::to_string(cases) + " index choices, exact)");
    CHECK(ok);
}

TEST_CASE("criterion 2: wrong-route witness") {
    const StandardDistribution naive = bowen_naive(1, 1, 2, 2);
    const StandardDistribution correct = bowen_derivative({1, 1, 2}, 2);
    bool ok = naive.dirac_coefficient() == ScalarCoeff::c_power(1, Rational(1, 27)) &&
              correct.dirac_coefficient() == ScalarCoeff::c_power(1, Rational(1, 15)) &&
              naive.function_parts() == correct.function_parts();
    // identical function ("Normal") parts over every index choice
    for (int j1 = 1; j1 <= 3 && ok; ++j1)
        for (int j2 = 1; j2 <= 3 && ok; ++j2)
            for (int j3 = 1; j3 <= 3 && ok; ++j3)
                for (int i = 1; i <= 3 && ok; ++i)
                    ok = bowen_naive(j1, j2, j3, i).function_parts() ==
                         bowen_derivative({j1, j2, j3}, i).function_parts();
    report(2, ok, "projected product rule yields (1/27)C against the correct (1/15)C with identical "
                  "principal-value parts (exact)");
    CHECK(ok);
}

TEST_CASE("criterion 3: second derivative of 1/r and its trace") {
    bool ok = true;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            StandardDistribution expected = StandardDistribution::function_term(
                -3, (nvar(3, i) * nvar(3, j)).scaled(ScalarCoeff(3)) - kronecker(3, i, j));
            if (i == j) expected += StandardDistribution::dirac(3, ScalarCoeff::c_power(1, Rational(-1, 3)));
            ok = ok && (frahm(i, j) == expected);
            if (i == j) ok = ok && expected.classify(-3) == FunctionTermKind::PrincipalValue;
        }
    ok = ok && (laplacian_inverse_r() == StandardDistribution::dirac(3, ScalarCoeff::c_power(1, Rational(-1))));
    report(3, ok, "p.v.((3x_ix_j - r^2 d_ij)/r^5) - (1/3)C d_ij delta, trace -C delta with vanishing "
                  "p.v. profile (exact)");
    CHECK(ok);
}

TEST_CASE("criterion 4: thick second derivatives") {
    bool pinned = true;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            ThickDistribution expected = ThickDistribution::pf(
                -3, (nvar(3, i) * nvar(3, j)).scaled(ScalarCoeff(3)) - kronecker(3, i, j));
            expected.add_delta(0, (kronecker(3, i, j) - (nvar(3, i) * nvar(3, j)).scaled(ScalarCoeff(4)))
                                      .scaled(ScalarCoeff::c_power(1)));
            pinned = pinned && (inverse_r_second_thick(i, j) == expected);
        }

    bool closed_form = true;
    int cases = 0;
    Rng rng(40409);
    for (int dim = 2; dim <= 4; ++dim)
        for (int k = -6; k <= 3; ++k)
            for (int rep = 0; rep < 3; ++rep) {
                const SphericalSymbol psi0 = rng.nonzero_symbol(dim, 4);
                const int i = rng.pick(1, dim);
                const int j = rng.pick(1, dim);
                closed_form =
                    closed_form && (second_partial_closed_form(i, j, k, psi0) ==
                                    thick_partial(i, thick_partial(j, ThickDistribution::pf(k, psi0))));
                ++cases;
            }
    const bool ok = pinned && closed_form;
    report(4, ok, "thick second derivative of Pf(1/r) matches the pinned value; closed form equals composed "
                  "first derivatives for k in [-6,3], dims 2-4 (" + std::to_string(cases) + " cases, exact)");
    CHECK(ok);
}

TEST_CASE("criterion 5: order-0 anomaly") {
    bool ok = true;
    // dim 2: composing order-0 derivatives of Pf(1) kills everything the full
    // calculus retains
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            ok = ok && order_zero_partial(i, order_zero_partial(j, ThickDistribution::pf_one(2))).is_zero();
            SphericalSymbol density = kronecker(2, i, j) - (nvar(2, i) * nvar(2, j)).scaled(ScalarCoeff(2));
            ok = ok && (project_order_zero(thick_partial(i, thick_partial(j, ThickDistribution::pf_one(2)))) ==
                        ThickDistribution::thick_delta(0, density.scaled(ScalarCoeff::c_power(1))));
        }
    // dim 3: the two order-0 second derivatives of 1/r differ as thick values
    // yet project identically
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const ThickDistribution full = inverse_r_order0_projected(i, j);
            const ThickDistribution composed = inverse_r_order0_composed(i, j);
            ok = ok && !(full == composed);
            const ScalarCoeff expected_coeff =
                i == j ? ScalarCoeff::c_power(1, Rational(-1, 3)) : ScalarCoeff();
            ok = ok && (project(full) == project(composed));
            ok = ok && (project(full).dirac_coefficient() == expected_coeff);
        }
    report(5, ok, "order-0 second derivative of Pf(1) vanishes in dim 2 while the restriction of the full "
                  "one is C(d_ij - 2 n_i n_j)delta*; in dim 3 the two routes differ yet both project to "
                  "-(1/3)C d_ij delta (exact)");
    CHECK(ok);
}

TEST_CASE("criterion 6: two-route homogeneous derivative theorem") {
    Rng rng(600600);
    bool ok = true;
    int regular = 0, principal = 0, finite = 0;
    for (int iter = 0; iter < 500; ++iter) {
        const int dim = rng.pick(2, 4);
        const int i = rng.pick(1, dim);
        const int k = rng.pick(-6, 3);
        const SphericalSymbol psi0 = rng.nonzero_symbol(dim, 4);
        if (k > 1 - dim) ++regular;
        else if (k == 1 - dim) ++principal;
        else ++finite;
        ok = ok &&
             (standard_partial_homogeneous(i, k, psi0) == project(thick_partial(i, ThickDistribution::pf(k, psi0))));
    }
    ok = ok && regular > 0 && principal > 0 && finite > 0;
    report(6, ok, "direct classification formula equals project(thick_partial(Pf)) on 500 randomized cases "
                  "(branches hit: regular " + std::to_string(regular) + ", p.v. " + std::to_string(principal) +
                  ", finite-part-with-multi-index-sum " + std::to_string(finite) + "; exact)");
    CHECK(ok);
}

TEST_CASE("criterion 7: numerical duality oracle") {
    const ProbeReport radial = radial_table_check(10, 1e-12);
    bool moments_ok = true;
    double moments_err = 0.0;
    for (int dim = 2; dim <= 4; ++dim) {
        const ProbeReport r = sphere_moment_check(dim, 8, 1e-9);
        moments_ok = moments_ok && r.ok();
        moments_err = std::max(moments_err, r.max_error);
    }
    int probes = 0;
    double max_residual = 0.0;
    bool duality_ok = true;
    for (int dim = 2; dim <= 4; ++dim) {
        const int count = dim == 4 ? 200 - 2 * 66 : 66;
        const ProbeReport r = duality_probe_sweep(7 + static_cast<std::uint64_t>(dim), dim, count, 1e-8);
        duality_ok = duality_ok && r.ok();
        probes += r.total;
        max_residual = std::max(max_residual, r.max_error);
    }
    const bool ok = radial.ok() && moments_ok && duality_ok && probes == 200;
    char detail[240];
    std::snprintf(detail, sizeof(detail),
                  "200/200 duality probes within 1e-8 (max residual %.2e); radial table vs Gamma within 1e-12 "
                  "(max %.2e); sphere quadrature vs exact moments within 1e-9 (max %.2e)",
                  max_residual, radial.max_error, moments_err);
    report(7, ok, detail);
    CHECK(ok);
}

TEST_CASE("criterion 8: algebraic property sweep") {
    Rng rng(801801);
    bool commute = true, product_rule = true, grading = true, ideal = true, parts = true;
    for (int iter = 0; iter < 120; ++iter) {
        const int dim = rng.pick(2, 4);
        const int i = rng.pick(1, dim);
        const int j = rng.pick(1, dim);

        const ThickDistribution t = rng.thick(dim);
        commute = commute && (thick_partial(i, thick_partial(j, t)) == thick_partial(j, thick_partial(i, t)));

        const Multiplier psi = rng.multiplier(dim, -3, 3);
        product_rule = product_rule && (thick_partial(i, multiply(psi, t)) ==
                                        multiply(psi.partial(i), t) + multiply(psi, thick_partial(i, t)));

        const int k = rng.pick(-5, 2);
        const int q = rng.pick(-2, 3);
        const ThickDistribution single = rng.pick(0, 1) == 0
                                             ? ThickDistribution::pf(k, rng.nonzero_symbol(dim, 3))
                                             : ThickDistribution::thick_delta(q, rng.nonzero_symbol(dim, 3));
        const int grade = single.pf_parts().empty() ? -dim - single.delta_parts().begin()->first
                                                    : single.pf_parts().begin()->first;
        const ThickDistribution derived = thick_partial(i, single);
        for (const auto& [kk, psi0] : derived.pf_parts()) grading = grading && (kk == grade - 1);
        for (const auto& [qq, g] : derived.delta_parts()) grading = grading && (-dim - qq == grade - 1);

        SphericalSymbol relation = -SphericalSymbol::one(dim);
        for (int axis = 1; axis <= dim; ++axis)
            relation += SphericalSymbol::coordinate(dim, axis) * SphericalSymbol::coordinate(dim, axis);
        ideal = ideal && delta_derivative(relation * rng.symbol(dim, 3), j).is_zero();

        const SphericalSymbol f = rng.symbol(dim, 4);
        parts = parts && (sphere_moment(delta_derivative(f, j)) ==
                          sphere_moment(SphericalSymbol::coordinate(dim, j) * f) * ScalarCoeff(Rational(dim - 1)));
    }
    const bool ok = commute && product_rule && grading && ideal && parts;
    report(8, ok, std::string("120 instances each, exact: mixed partials commute (") +
                      (commute ? "ok" : "FAIL") + "), product rule (" + (product_rule ? "ok" : "FAIL") +
                      "), grade drops by 1 (" + (grading ? "ok" : "FAIL") + "), sphere ideal killed (" +
                      (ideal ? "ok" : "FAIL") + "), integration by parts (" + (parts ? "ok" : "FAIL") + ")");
    CHECK(ok);
}

TEST_CASE("criterion 9: DSL round trip and exit codes") {
    Rng rng(900900);
    bool round_trip = true;
    for (int iter = 0; iter < 100; ++iter) {
        const int dim = rng.pick(2, 4);
        const ThickDistribution t = rng.thick(dim, -5, 3, -3, 3, 4);
        const std::string text = dsl::render(dsl::Value(t), dsl::Format::Plain);
        const dsl::Value back = dsl::evaluate(dsl::parse(text, dim));
        round_trip = round_trip && std::holds_alternative<ThickDistribution>(back) &&
                     std::get<ThickDistribution>(back) == t &&
                     dsl::render(back, dsl::Format::Plain) == text;
    }
    const bool exit_ok = run_cli("--dim 3 eval \"moment(n1^2)\"") == 0;
    const bool exit_parse = run_cli("eval \"Pf(n1\"") == 2;
    const bool exit_eval = run_cli("eval \"project(moment(n1))\"") == 3;
    const bool exit_name = run_cli("paper nosuch") == 4;
    const bool ok = round_trip && exit_ok && exit_parse && exit_eval && exit_name;
    report(9, ok, std::string("parse(render(plain)) identity with byte-stable output on 100 random canonical "
                              "values (") + (round_trip ? "ok" : "FAIL") + "); CLI exit codes 0/2/3/4 (" +
                      (exit_ok && exit_parse && exit_eval && exit_name ? "ok" : "FAIL") + ")");
    CHECK(ok);
}
