#include <gtest/gtest.h>

#include "quadric/errors.hpp"
#include "quadric/expr.hpp"
#include "quadric/go_even.hpp"
#include "support.hpp"

using namespace quadric;
using quadric::testing::kCases;
using quadric::testing::Random;

TEST(Expr, ParsesGrammar) {
    RingPtr go = make_ring(Family::BGO_even, 4);
    const ExprAST ast = parse_expr("a1*d{1,2} + b4^2", go);
    EXPECT_EQ(ast.root.kind, ExprNode::Kind::Sum);
    EXPECT_EQ(eval_expr(ast).str(), "b4^2 + a1*d{1,2}");
    EXPECT_EQ(parse_polynomial("lambda^3 + lambda*b4", go).str(), "lambda^3 + lambda*b4");
    EXPECT_TRUE(normal_form(parse_polynomial("d{1,2}^2 + a1^2*b8 + a3^2*b4", go)).is_zero());
    EXPECT_EQ(parse_polynomial(" ( a1 + 1 ) ^ 2 ", go).str(), "a1^2 + 1");
    EXPECT_EQ(parse_polynomial("a1 - a1", go).str(), "0");
    EXPECT_EQ(parse_polynomial("d{1, 2}", go).str(), "d{1,2}");
    EXPECT_THROW(parse_polynomial("d{2,1}", go), UnknownGenerator);
}

TEST(Expr, EvaluatesInOtherRings) {
    RingPtr bo = make_ring(Family::BO, 2);
    EXPECT_EQ(parse_polynomial("(w1+w2)^2", bo).str(), "w2^2 + w1^2");
    RingPtr go3 = make_ring(Family::BGO_odd, 3);
    EXPECT_EQ(parse_polynomial("wh2^3", go3).str(), "wh2^3");
}

TEST(Expr, ErrorsCarryPositions) {
    RingPtr bo = make_ring(Family::BO, 6);
    try {
        parse_polynomial("w1 + w9", bo);
        FAIL();
    } catch (const UnknownGenerator& e) {
        EXPECT_EQ(e.name(), "w9");
        EXPECT_EQ(e.position(), 5u);
    }
    try {
        parse_polynomial("w1 + * w2", bo);
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.position(), 5u);
    }
    EXPECT_THROW(parse_polynomial("", bo), SyntaxError);
    EXPECT_THROW(parse_polynomial("2", bo), SyntaxError);
    EXPECT_THROW(parse_polynomial("(w1", bo), SyntaxError);
    EXPECT_THROW(parse_polynomial("w1^", bo), SyntaxError);
    EXPECT_THROW(parse_polynomial("w1 w2", bo), SyntaxError);
    EXPECT_THROW(parse_polynomial("w2^40", bo), DegreeCapExceeded);
}

TEST(Expr, LabelsResolveThroughCallback) {
    RingPtr go = make_ring(Family::BGO_even, 4);
    const Polynomial g = parse_polynomial("a1*a3 + b4", go);
    LabelResolver labels = [&](std::string_view name) -> const Polynomial* {
        return name == "beta'_4" ? &g : nullptr;
    };
    EXPECT_EQ(parse_polynomial("beta'_4^2 + a1", go, labels), g.square() + parse_polynomial("a1", go));
    EXPECT_THROW(parse_polynomial("beta'_8", go, labels), UnknownGenerator);
}

TEST(ExprProperty, PrintParseRoundTrip) {
    Random rnd(71);
    const std::vector<RingPtr> rings = {
        make_ring(Family::BO, 5),       make_ring(Family::BOHat, 5), make_ring(Family::BGO_odd, 5),
        make_ring(Family::BGO_even, 6), make_ring(Family::BGL, 4),   make_ring(Family::TodaA, 6),
    };
    for (int k = 0; k < kCases; ++k) {
        for (const RingPtr& ring : rings) {
            const Polynomial p = rnd.any(ring, 12, 6);
            EXPECT_EQ(parse_polynomial(p.str(), ring), p) << p.str();
        }
    }
}
