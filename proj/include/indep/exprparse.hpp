#ifndef INDEP_EXPRPARSE_HPP
#define INDEP_EXPRPARSE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "indep/field.hpp"

namespace indep::expr {

// Positioned parse failure: byte offset into the source (0-based, at
// most length), plus what was expected and what was found there.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::string expected, std::string found)
        : Error("parse error at offset " + std::to_string(offset) + ": expected " + expected +
                ", found " + found),
          offset(offset),
          expected(std::move(expected)),
          found(std::move(found)) {}
    std::size_t offset;
    std::string expected;
    std::string found;
};

enum class NodeKind { IntLiteral, RatioLiteral, Variable, Negate, Add, Sub, Mul, Div, Pow, Call };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind;
    BigInt int_value;              // IntLiteral
    BigInt ratio_num, ratio_den;   // RatioLiteral, as written (not reduced)
    bool from_decimal = false;     // RatioLiteral produced from a decimal literal
    std::string name;              // Variable, Call
    NodePtr lhs, rhs;              // binaries; lhs doubles as the only child of Negate/Call
    std::uint64_t exponent = 0;    // Pow
};

// Grammar: + - (left) < * / (left) < unary - < ^ (right, exponents are
// nonnegative integer literals). No implicit multiplication. Identifiers
// must be declared variables or one of sin/cos/exp/log/abs.
NodePtr parse(const std::string& src, const std::vector<std::string>& vars);

// Minimal-parenthesis printer; parse(print(ast)) == ast structurally.
std::string print(const NodePtr& ast);

// Structural equality; provenance flags are ignored.
bool ast_equal(const NodePtr& a, const NodePtr& b);

// Field-faithful evaluation. Throws UnboundVariable, DivisionByZero,
// TranscendentalInExactField, NonFiniteValue.
Scalar evaluate(const NodePtr& ast, const std::map<std::string, Scalar>& binding,
                const FieldDescriptor& fd);

bool uses_call(const NodePtr& ast);    // transcendental call anywhere in the tree
bool uses_decimal(const NodePtr& ast); // decimal-origin literal anywhere in the tree

} // namespace indep::expr

#endif // INDEP_EXPRPARSE_HPP
