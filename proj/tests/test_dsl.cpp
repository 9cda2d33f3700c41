#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "thick/dsl/eval.hpp"
#include "thick/dsl/parser.hpp"
#include "thick/dsl/tree.hpp"
#include "thick/paper_formulas.hpp"

using namespace thick;
using namespace thick::dsl;
using thick::testing::Rng;

namespace {

Value run(const std::string& text, int dim) { return evaluate(parse(text, dim)); }

ThickDistribution run_thick(const std::string& text, int dim) {
    return std::get<ThickDistribution>(run(text, dim));
}

}  // namespace

TEST_CASE("parsing the core grammar") {
    SECTION("dstar over Pf") {
        ThickDistribution t = run_thick("dstar(1, Pf(n2/r^2))", 3);
        CHECK(t == thick_partial(1, ThickDistribution::pf(-2, SphericalSymbol::coordinate(3, 2))));
    }
    SECTION("nested project") {
        Value v = run("project(dstar(1, dstar(2, Pf(1/r))))", 3);
        CHECK(std::get<StandardDistribution>(v) == frahm(1, 2));
    }
    SECTION("axis out of range is a positioned parse error") {
        try {
            parse("Pf(n4/r)", 3);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.pos.line == 1);
            CHECK(e.pos.column == 4);
            CHECK_THAT(e.bare_message, Catch::Matchers::ContainsSubstring("out of range"));
        }
    }
    SECTION("unterminated input reports the position") {
        CHECK_THROWS_AS(parse("Pf(n1", 3), ParseError);
        CHECK_THROWS_AS(parse("dstar(1, Pf(1)) +", 3), ParseError);
        CHECK_THROWS_AS(parse("Pf(1))", 3), ParseError);
    }
    SECTION("homogeneous splitting collects r-degrees") {
        ThickDistribution t = run_thick("Pf(1 + n1/r^2)", 3);
        CHECK(t.pf_parts().size() == 2);
        CHECK(t.pf_profile(0) == SphericalSymbol::one(3));
        CHECK(t.pf_profile(-2) == SphericalSymbol::coordinate(3, 1));
    }
    SECTION("non-homogeneous division is a parse error") {
        CHECK_THROWS_AS(parse("Pf(1/(1+r))", 3), ParseError);
    }
    SECTION("rational literals and powers") {
        CHECK(std::get<ScalarCoeff>(run("4/15", 3)) == ScalarCoeff(Rational(4, 15)));
        CHECK(std::get<ScalarCoeff>(run("C^2", 3)) == ScalarCoeff::c_power(2));
        CHECK(std::get<ScalarCoeff>(run("2*C - C", 3)) == ScalarCoeff::c_power(1));
    }
}

TEST_CASE("evaluation of spec'd examples") {
    SECTION("dstar(1, Pf(1)) in R^3 is C n1 delta*[-2]") {
        ThickDistribution expected =
            ThickDistribution::thick_delta(-2, SphericalSymbol::coordinate(3, 1).scaled(ScalarCoeff::c_power(1)));
        CHECK(run_thick("dstar(1, Pf(1))", 3) == expected);
    }
    SECTION("project(delta[0](n1*n2)) vanishes by parity") {
        CHECK(std::get<StandardDistribution>(run("project(delta[0](n1*n2))", 3)).is_zero());
    }
    SECTION("moment(n1^2*n2^2) = (1/15) C") {
        CHECK(std::get<ScalarCoeff>(run("moment(n1^2*n2^2)", 3)) == ScalarCoeff::c_power(1, Rational(1, 15)));
    }
    SECTION("multiplier action on thick values") {
        ThickDistribution lhs = run_thick("n1*n2*delta*[-2]", 3);
        CHECK(lhs == ThickDistribution::thick_delta(
                         -2, SphericalSymbol::coordinate(3, 1) * SphericalSymbol::coordinate(3, 2)));
        ThickDistribution shifted = run_thick("r^2*delta*", 3);
        CHECK(shifted == ThickDistribution::thick_delta(-2, SphericalSymbol::one(3)));
    }
    SECTION("pair agrees with the oracle") {
        const double v = std::get<double>(run("pair(delta*, gauss)", 3));
        CHECK_THAT(v, Catch::Matchers::WithinAbs(1.0, 1e-12));
        const double w = std::get<double>(run("pair(Pf(1), gauss)", 3));
        CHECK_THAT(w, Catch::Matchers::WithinAbs(std::pow(std::numbers::pi, 1.5), 1e-11));
        const double u = std::get<double>(run("pair(C*n1*delta*[-2], n1*r^-2*gauss)", 3));
        CHECK_THAT(u, Catch::Matchers::WithinAbs(4 * std::numbers::pi / 3, 1e-11));
    }
    SECTION("order-0 derivative of Pf(1) twice vanishes in R^2") {
        CHECK(run_thick("dzero(1, dzero(2, Pf(1)))", 2).is_zero());
    }
    SECTION("pv accepts zero-mean degree -n profiles and rejects divergent ones") {
        CHECK(std::holds_alternative<StandardDistribution>(run("pv((1 - 3*n1^2)/r^3)", 3)));
        CHECK_THROWS_AS(run("pv(1/r^3)", 3), EvalError);
        CHECK_THROWS_AS(run("pv(1/r^5)", 3), EvalError);
    }
    SECTION("type errors are evaluation errors") {
        CHECK_THROWS_AS(run("project(moment(n1))", 3), EvalError);
        CHECK_THROWS_AS(run("Pf(1)*Pf(1)", 3), EvalError);
        CHECK_THROWS_AS(run("moment(n1) + Pf(1)", 3), EvalError);
        CHECK_THROWS_AS(run("dzero(1, C*n1*delta*[-2])", 3), EvalError);
    }
}

TEST_CASE("plain rendering: pinned forms") {
    SECTION("thick delta with density") {
        Value v = run("dstar(1, Pf(1))", 3);
        CHECK(render(v, Format::Plain) == "C*n1*delta*[-2]");
    }
    SECTION("derivative of a point-source field") {
        Value v = run("project(dstar(1, Pf(n1/r^2)))", 3);
        const std::string out = render(v, Format::Plain);
        CHECK_THAT(out, Catch::Matchers::ContainsSubstring("pv("));
        CHECK_THAT(out, Catch::Matchers::ContainsSubstring("(1/3)*C*delta"));
    }
    SECTION("zero renders as 0") {
        CHECK(render(run("Pf(1) - Pf(1)", 3), Format::Plain) == "0");
        CHECK(render(run("dzero(1, dzero(2, Pf(1)))", 2), Format::Plain) == "0");
    }
    SECTION("multi-index delta derivatives") {
        Value v = Value(standard_partial_homogeneous(1, -3, SphericalSymbol::coordinate(2, 1)));
        const std::string out = render(v, Format::Plain);
        CHECK_THAT(out, Catch::Matchers::ContainsSubstring("(3/16)*C*D[2,0]delta"));
        CHECK_THAT(out, Catch::Matchers::ContainsSubstring("(1/16)*C*D[0,2]delta"));
        CHECK_THAT(out, Catch::Matchers::ContainsSubstring("Pf((1 - 4*n1^2)/r^4)"));
    }
}

TEST_CASE("latex rendering") {
    Value fr = Value(frahm(1, 1));
    const std::string out = render(fr, Format::Latex);
    CHECK_THAT(out, Catch::Matchers::ContainsSubstring("\\mathrm{p.v.}"));
    CHECK_THAT(out, Catch::Matchers::ContainsSubstring("\\delta(\\mathbf{x})"));
    CHECK_THAT(out, Catch::Matchers::ContainsSubstring("\\frac{"));
    Value th = run("dstar(1, Pf(1))", 3);
    CHECK(render(th, Format::Latex) == "C n_1 \\delta_\\ast^{[-2]}");
}

TEST_CASE("round trip: parse(render(plain)) is the identity on canonical thick values") {
    Rng rng(987654);
    for (int iter = 0; iter < 100; ++iter) {
        const int dim = rng.pick(2, 4);
        ThickDistribution t = rng.thick(dim, -5, 3, -3, 3, 4);
        const std::string text = render(Value(t), Format::Plain);
        INFO("rendered: " << text);
        ThickDistribution back = run_thick(text, dim);
        CHECK(back == t);
        // byte-stable: rendering the reparsed value reproduces the text
        CHECK(render(Value(back), Format::Plain) == text);
    }
}

TEST_CASE("round trip through the tree format") {
    Rng rng(13579);
    for (int iter = 0; iter < 50; ++iter) {
        const int dim = rng.pick(2, 4);
        Value v = iter % 2 == 0 ? Value(rng.thick(dim)) : Value(project(rng.thick(dim, -5, 2, 0, 3)));
        const std::string text = render(v, Format::Tree);
        const Value back = from_tree(nlohmann::json::parse(text));
        CHECK(render(back, Format::Tree) == text);
        CHECK(render(back, Format::Plain) == render(v, Format::Plain));
    }
    // scalars and reals too
    Value c = Value(ScalarCoeff::c_power(1, Rational(-7, 3)));
    CHECK(from_tree(nlohmann::json::parse(render(c, Format::Tree))) == c);
}

TEST_CASE("parser edge cases") {
    SECTION("empty and whitespace-only input") {
        CHECK_THROWS_AS(parse("", 3), ParseError);
        CHECK_THROWS_AS(parse("   \n  ", 3), ParseError);
    }
    SECTION("positions count lines") {
        try {
            parse("Pf(1) +\n  moment(nope)", 3);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.pos.line == 2);
            CHECK(e.pos.column >= 10);
        }
    }
    SECTION("stray characters") {
        CHECK_THROWS_AS(parse("Pf(1) $ 2", 3), ParseError);
        CHECK_THROWS_AS(parse("Pf(1)½", 3), ParseError);
    }
    SECTION("test-function literal variants") {
        CHECK_NOTHROW(run("pair(delta*, gauss)", 3));
        CHECK_NOTHROW(run("pair(delta*, r^2*gauss)", 3));
        CHECK_NOTHROW(run("pair(delta*, (n1+n2)*r^0*gauss)", 3));
        CHECK_NOTHROW(run("pair(delta*, n1*n2*r^-1*gauss)", 3));
        CHECK_THROWS_AS(parse("pair(delta*, n1)", 3), ParseError);
        CHECK_THROWS_AS(parse("pair(delta*, C*gauss)", 3), ParseError);
    }
    SECTION("deep nesting evaluates") {
        CHECK(std::get<StandardDistribution>(
                  run("project(dstar(1, dstar(2, dstar(3, Pf(n1*n2*n3/r^2)))))", 3))
                  .dim() == 3);
    }
    SECTION("division semantics at expression level") {
        CHECK(std::get<ScalarCoeff>(run("C/2", 3)) == ScalarCoeff::c_power(1, Rational(1, 2)));
        CHECK(std::get<ScalarCoeff>(run("(1/3)/C", 3)) == ScalarCoeff::c_power(-1, Rational(1, 3)));
        CHECK_THROWS_AS(run("Pf(1)/Pf(1)", 3), EvalError);
        CHECK_THROWS_AS(run("1/(1 + C)", 3), EvalError);
    }
}

TEST_CASE("round trip with C-bearing coefficients") {
    Rng rng(246810);
    for (int iter = 0; iter < 30; ++iter) {
        const int dim = rng.pick(2, 4);
        ThickDistribution t(dim);
        t.add_pf(rng.pick(-4, 2), rng.symbol(dim, 3, 3, true));
        t.add_delta(rng.pick(-2, 2), rng.symbol(dim, 3, 3, true));
        const std::string text = render(Value(t), Format::Plain);
        INFO("rendered: " << text);
        CHECK(run_thick(text, dim) == t);
    }
}

TEST_CASE("mutated inputs never escape the error types") {
    // truncations and single-character edits of valid renders must either
    // parse or fail with ParseError/EvalError, nothing else
    Rng rng(1357);
    const std::string alphabet = "nr+-*/^()[], 0123456789Cdelta";
    int parsed = 0, rejected = 0;
    for (int iter = 0; iter < 400; ++iter) {
        const int dim = rng.pick(2, 4);
        std::string text = render(Value(rng.thick(dim)), Format::Plain);
        const int mode = rng.pick(0, 2);
        if (mode == 0 && text.size() > 1) {
            text.resize(rng.below(text.size()) + 1);
        } else if (mode == 1) {
            text[rng.below(text.size())] = alphabet[rng.below(alphabet.size())];
        } else {
            text.insert(rng.below(text.size() + 1), 1, alphabet[rng.below(alphabet.size())]);
        }
        try {
            (void)evaluate(parse(text, dim));
            ++parsed;
        } catch (const ParseError&) {
            ++rejected;
        } catch (const EvalError&) {
            ++rejected;
        } catch (const std::invalid_argument&) {
            ++rejected;
        }
    }
    CHECK(parsed + rejected == 400);
}

TEST_CASE("rendering is construction-order independent") {
    const int dim = 3;
    ThickDistribution a = ThickDistribution::pf(-2, SphericalSymbol::coordinate(dim, 1));
    a.add_delta(1, SphericalSymbol::coordinate(dim, 2).scaled(ScalarCoeff::c_power(1, Rational(5, 3))));
    a.add_pf(0, SphericalSymbol::one(dim) - SphericalSymbol::coordinate(dim, 3));

    ThickDistribution b(dim);
    b.add_pf(0, -SphericalSymbol::coordinate(dim, 3));
    b.add_delta(1, SphericalSymbol::coordinate(dim, 2).scaled(ScalarCoeff::c_power(1, Rational(2, 3))));
    b.add_pf(0, SphericalSymbol::one(dim));
    b.add_delta(1, SphericalSymbol::coordinate(dim, 2).scaled(ScalarCoeff::c_power(1)));
    b.add_pf(-2, SphericalSymbol::coordinate(dim, 1));

    REQUIRE(a == b);
    CHECK(render(Value(a), Format::Plain) == render(Value(b), Format::Plain));
    CHECK(render(Value(a), Format::Tree) == render(Value(b), Format::Tree));
}

TEST_CASE("rendering C-bearing densities round trips") {
    // density with a multi-term coefficient
    SphericalSymbol d(3);
    d.add_monomial(MultiIndex::unit(3, 1), ScalarCoeff(1) + ScalarCoeff::c_power(1));
    d.add_monomial(MultiIndex::zero(3), ScalarCoeff(Rational(-2, 3)));
    ThickDistribution t = ThickDistribution::thick_delta(1, d);
    t.add_pf(-4, SphericalSymbol::coordinate(3, 2).scaled(ScalarCoeff(Rational(5, 2))));
    const std::string text = render(Value(t), Format::Plain);
    INFO(text);
    CHECK(run_thick(text, 3) == t);
}
