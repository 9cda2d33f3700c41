#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "thick/multiplier.hpp"
#include "thick/oracle.hpp"
#include "thick/standard_distribution.hpp"
#include "thick/thick_distribution.hpp"

namespace thick::dsl {

struct SourcePos {
    int line = 1;
    int column = 1;
};

/// Syntax error with a position in the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos position, const std::string& message)
        : std::runtime_error(std::to_string(position.line) + ":" + std::to_string(position.column) + ": " + message),
          pos(position),
          bare_message(message) {}

    SourcePos pos;
    std::string bare_message;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Result of evaluating an expression.
using Value = std::variant<ScalarCoeff, Multiplier, ThickDistribution, StandardDistribution, double>;

struct Expression;
using Expr = std::shared_ptr<const Expression>;

struct ScalarNode { ScalarCoeff value; };
struct PolyNode { Multiplier value; };
struct PfNode { Multiplier arg; };
struct PvNode { Multiplier arg; };
struct DeltaNode { int order = 0; SphericalSymbol density; };  // delta[q](poly)
struct ThickDeltaStarNode { int order = 0; };                  // postfix delta*[q], density 1
struct DiracNode {};                                           // the classical delta
struct DeltaDerivNode { MultiIndex alpha; };                   // D[a1,...,an]delta
struct SumNode {
    std::vector<Expr> terms;
    std::vector<int> signs;  // +1 / -1 per term
};
struct ProductNode {
    std::vector<Expr> factors;
    std::vector<bool> invert;  // true when the factor divides
};
struct DStarNode { int axis = 0; Expr child; };
struct DZeroNode { int axis = 0; Expr child; };
struct ProjectNode { Expr child; };
struct MomentNode { SphericalSymbol poly; };
struct PairNode { Expr child; TestFunction probe; };

using Node = std::variant<ScalarNode, PolyNode, PfNode, PvNode, DeltaNode, ThickDeltaStarNode, DiracNode,
                          DeltaDerivNode, SumNode, ProductNode, DStarNode, DZeroNode, ProjectNode, MomentNode,
                          PairNode>;

struct Expression {
    int dim;
    SourcePos pos;
    Node node;
};

inline Expr make_expr(int dim, SourcePos pos, Node node) {
    return std::make_shared<Expression>(Expression{dim, pos, std::move(node)});
}

}  // namespace thick::dsl
