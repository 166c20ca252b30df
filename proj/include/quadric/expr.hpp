#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "quadric/polynomial.hpp"

namespace quadric {

//   expr   := term { "+" term }
//   term   := factor { "*" factor }
//   factor := atom [ "^" nat ]
//   atom   := generator | "0" | "1" | "(" expr ")"
//   generator := name [ "{" nat { "," nat } "}" ]
// "-" is accepted as a synonym of "+". Whitespace is ignored.
struct ExprNode {
    enum class Kind { Sum, Product, Power, Generator, Label, Literal };

    Kind kind = Kind::Literal;
    std::size_t position = 0;
    std::vector<ExprNode> children;
    std::string name;        // Generator / Label
    std::size_t var = 0;     // Generator: index in the ring
    Polynomial label_value;  // Label
    unsigned exponent = 1;   // Power
    int literal = 0;         // Literal: 0 or 1
};

struct ExprAST {
    RingPtr ring;
    ExprNode root;
};

// Looks up names that are not ring variables (e.g. "alpha'_3"); nullptr if unknown.
using LabelResolver = std::function<const Polynomial*(std::string_view)>;

// Throws SyntaxError or UnknownGenerator.
ExprAST parse_expr(std::string_view src, const RingPtr& ring, const LabelResolver& labels = {});
// Throws DegreeCapExceeded.
Polynomial eval_expr(const ExprAST& ast);
Polynomial parse_polynomial(std::string_view src, const RingPtr& ring,
                            const LabelResolver& labels = {});

}  // namespace quadric
