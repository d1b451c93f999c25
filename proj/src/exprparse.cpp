#include "indep/exprparse.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace indep::expr {

namespace {

const char* const kCallNames[] = {"sin", "cos", "exp", "log", "abs"};

bool is_call_name(const std::string& s) {
    return std::find(std::begin(kCallNames), std::end(kCallNames), s) != std::end(kCallNames);
}

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;      // Number / Ident lexeme
    bool is_decimal = false;

    std::string describe() const {
        switch (kind) {
        case Tok::Number: return "number '" + text + "'";
        case Tok::Ident: return "identifier '" + text + "'";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::Caret: return "'^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::End: return "end of input";
        }
        return "?";
    }
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Tok::End, start, "", false};
        const char c = src_[pos_];
        switch (c) {
        case '+': ++pos_; return {Tok::Plus, start, "+", false};
        case '-': ++pos_; return {Tok::Minus, start, "-", false};
        case '*': ++pos_; return {Tok::Star, start, "*", false};
        case '/': ++pos_; return {Tok::Slash, start, "/", false};
        case '^': ++pos_; return {Tok::Caret, start, "^", false};
        case '(': ++pos_; return {Tok::LParen, start, "(", false};
        case ')': ++pos_; return {Tok::RParen, start, ")", false};
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(start);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return {Tok::Ident, start, src_.substr(start, pos_ - start), false};
        }
        throw ParseError(start, "a token", "character '" + std::string(1, c) + "'");
    }

private:
    Token lex_number(std::size_t start) {
        bool decimal = false;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            decimal = true;
            ++pos_;
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw ParseError(pos_, "digits after decimal point",
                                 pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'"
                                                    : "end of input");
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            decimal = true;
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw ParseError(pos_, "exponent digits",
                                 pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'"
                                                    : "end of input");
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
        }
        return {Tok::Number, start, src_.substr(start, pos_ - start), decimal};
    }

    const std::string& src_;
    std::size_t pos_ = 0;
};

constexpr std::size_t kMaxDepth = 256;
constexpr std::uint64_t kMaxExponent = 9'999'999;

class Parser {
public:
    Parser(const std::string& src, const std::vector<std::string>& vars)
        : lexer_(src), vars_(vars) {
        advance();
    }

    NodePtr run() {
        NodePtr ast = parse_sum(0);
        if (tok_.kind != Tok::End)
            throw ParseError(tok_.offset, "end of input", tok_.describe());
        return ast;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    void check_depth(std::size_t depth) {
        if (depth > kMaxDepth)
            throw ParseError(tok_.offset, "a shallower expression",
                             "nesting deeper than " + std::to_string(kMaxDepth));
    }

    NodePtr parse_sum(std::size_t depth) {
        check_depth(depth);
        NodePtr lhs = parse_product(depth + 1);
        for (;;) {
            if (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
                NodeKind op = tok_.kind == Tok::Plus ? NodeKind::Add : NodeKind::Sub;
                advance();
                NodePtr rhs = parse_product(depth + 1);
                lhs = binary(op, lhs, rhs);
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_product(std::size_t depth) {
        check_depth(depth);
        NodePtr lhs = parse_unary(depth + 1);
        for (;;) {
            if (tok_.kind == Tok::Star || tok_.kind == Tok::Slash) {
                bool is_div = tok_.kind == Tok::Slash;
                advance();
                NodePtr rhs = parse_unary(depth + 1);
                if (is_div && lhs->kind == NodeKind::IntLiteral &&
                    rhs->kind == NodeKind::IntLiteral) {
                    // integer / integer reads as a ratio literal
                    auto node = std::make_shared<Node>();
                    node->kind = NodeKind::RatioLiteral;
                    node->ratio_num = lhs->int_value;
                    node->ratio_den = rhs->int_value;
                    lhs = node;
                } else {
                    lhs = binary(is_div ? NodeKind::Div : NodeKind::Mul, lhs, rhs);
                }
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_unary(std::size_t depth) {
        check_depth(depth);
        if (tok_.kind == Tok::Minus) {
            advance();
            NodePtr child = parse_unary(depth + 1);
            auto node = std::make_shared<Node>();
            node->kind = NodeKind::Negate;
            node->lhs = child;
            return node;
        }
        return parse_power(depth + 1);
    }

    NodePtr parse_power(std::size_t depth) {
        check_depth(depth);
        NodePtr base = parse_primary(depth + 1);
        if (tok_.kind != Tok::Caret) return base;
        advance();
        auto node = std::make_shared<Node>();
        node->kind = NodeKind::Pow;
        node->lhs = base;
        node->exponent = parse_exponent();
        return node;
    }

    // A nonnegative integer literal; literal^literal chains associate to
    // the right and fold into a single exponent value.
    std::uint64_t parse_exponent() {
        if (tok_.kind != Tok::Number || tok_.is_decimal)
            throw ParseError(tok_.offset, "a nonnegative integer exponent", tok_.describe());
        BigInt value(tok_.text);
        advance();
        if (tok_.kind == Tok::Caret) {
            advance();
            std::uint64_t upper = parse_exponent();
            BigInt folded = 1;
            for (std::uint64_t i = 0; i < upper; ++i) {
                folded *= value;
                if (folded > kMaxExponent) break;
            }
            value = folded;
        }
        if (value > kMaxExponent)
            throw ParseError(tok_.offset, "an exponent at most " + std::to_string(kMaxExponent),
                             "a larger value");
        return value.convert_to<std::uint64_t>();
    }

    NodePtr parse_primary(std::size_t depth) {
        check_depth(depth);
        switch (tok_.kind) {
        case Tok::Number: {
            Token t = tok_;
            advance();
            return number_node(t);
        }
        case Tok::Ident: {
            Token t = tok_;
            advance();
            if (tok_.kind == Tok::LParen) {
                if (!is_call_name(t.text))
                    throw ParseError(t.offset, "one of sin/cos/exp/log/abs",
                                     "identifier '" + t.text + "'");
                advance();
                NodePtr arg = parse_sum(depth + 1);
                expect(Tok::RParen, "')'");
                auto node = std::make_shared<Node>();
                node->kind = NodeKind::Call;
                node->name = t.text;
                node->lhs = arg;
                return node;
            }
            if (std::find(vars_.begin(), vars_.end(), t.text) == vars_.end())
                throw ParseError(t.offset, "a declared variable", "identifier '" + t.text + "'");
            auto node = std::make_shared<Node>();
            node->kind = NodeKind::Variable;
            node->name = t.text;
            return node;
        }
        case Tok::LParen: {
            advance();
            NodePtr inner = parse_sum(depth + 1);
            expect(Tok::RParen, "')'");
            return inner;
        }
        default:
            throw ParseError(tok_.offset, "an operand", tok_.describe());
        }
    }

    NodePtr number_node(const Token& t) {
        auto node = std::make_shared<Node>();
        if (!t.is_decimal) {
            node->kind = NodeKind::IntLiteral;
            node->int_value = BigInt(t.text);
            return node;
        }
        // Decimal literal -> exact ratio, flagged as decimal-origin.
        std::string digits;
        std::int64_t exp10 = 0;
        std::size_t i = 0;
        for (; i < t.text.size() && std::isdigit(static_cast<unsigned char>(t.text[i])); ++i)
            digits += t.text[i];
        if (i < t.text.size() && t.text[i] == '.') {
            ++i;
            for (; i < t.text.size() && std::isdigit(static_cast<unsigned char>(t.text[i])); ++i) {
                digits += t.text[i];
                --exp10;
            }
        }
        if (i < t.text.size() && (t.text[i] == 'e' || t.text[i] == 'E')) {
            ++i;
            bool negexp = false;
            if (t.text[i] == '+' || t.text[i] == '-') negexp = t.text[i++] == '-';
            std::int64_t e = 0;
            for (; i < t.text.size(); ++i) e = e * 10 + (t.text[i] - '0');
            exp10 += negexp ? -e : e;
        }
        BigInt num(digits);
        BigInt den = 1;
        for (std::int64_t k = 0; k < std::max<std::int64_t>(0, -exp10); ++k) den *= 10;
        for (std::int64_t k = 0; k < std::max<std::int64_t>(0, exp10); ++k) num *= 10;
        node->kind = NodeKind::RatioLiteral;
        node->ratio_num = num;
        node->ratio_den = den;
        node->from_decimal = true;
        return node;
    }

    static NodePtr binary(NodeKind op, NodePtr lhs, NodePtr rhs) {
        auto node = std::make_shared<Node>();
        node->kind = op;
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        return node;
    }

    void expect(Tok kind, const std::string& what) {
        if (tok_.kind != kind) throw ParseError(tok_.offset, what, tok_.describe());
        advance();
    }

    Lexer lexer_;
    Token tok_{Tok::End, 0, "", false};
    std::vector<std::string> vars_;
};

int precedence(NodeKind k) {
    switch (k) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div:
    case NodeKind::RatioLiteral: return 2; // prints as num/den
    case NodeKind::Negate: return 3;
    case NodeKind::Pow: return 4;
    default: return 5;
    }
}

void print_node(const NodePtr& n, std::string& out);

void print_child(const NodePtr& child, int parent_prec, bool strict, std::string& out) {
    bool parens = strict ? precedence(child->kind) <= parent_prec
                         : precedence(child->kind) < parent_prec;
    if (parens) out += "(";
    print_node(child, out);
    if (parens) out += ")";
}

void print_node(const NodePtr& n, std::string& out) {
    switch (n->kind) {
    case NodeKind::IntLiteral:
        out += n->int_value.str();
        return;
    case NodeKind::RatioLiteral:
        out += n->ratio_num.str();
        out += "/";
        out += n->ratio_den.str();
        return;
    case NodeKind::Variable:
        out += n->name;
        return;
    case NodeKind::Negate:
        out += "-";
        print_child(n->lhs, precedence(n->kind), false, out);
        return;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div: {
        const char* op = n->kind == NodeKind::Add   ? "+"
                         : n->kind == NodeKind::Sub ? "-"
                         : n->kind == NodeKind::Mul ? "*"
                                                    : "/";
        int prec = precedence(n->kind);
        print_child(n->lhs, prec, false, out);
        out += op;
        print_child(n->rhs, prec, true, out);
        return;
    }
    case NodeKind::Pow:
        print_child(n->lhs, precedence(n->kind), true, out);
        out += "^";
        out += std::to_string(n->exponent);
        return;
    case NodeKind::Call:
        out += n->name;
        out += "(";
        print_node(n->lhs, out);
        out += ")";
        return;
    }
}

} // namespace

NodePtr parse(const std::string& src, const std::vector<std::string>& vars) {
    return Parser(src, vars).run();
}

std::string print(const NodePtr& ast) {
    std::string out;
    print_node(ast, out);
    return out;
}

bool ast_equal(const NodePtr& a, const NodePtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case NodeKind::IntLiteral: return a->int_value == b->int_value;
    case NodeKind::RatioLiteral:
        return a->ratio_num == b->ratio_num && a->ratio_den == b->ratio_den;
    case NodeKind::Variable: return a->name == b->name;
    case NodeKind::Negate: return ast_equal(a->lhs, b->lhs);
    case NodeKind::Pow: return a->exponent == b->exponent && ast_equal(a->lhs, b->lhs);
    case NodeKind::Call: return a->name == b->name && ast_equal(a->lhs, b->lhs);
    default: return ast_equal(a->lhs, b->lhs) && ast_equal(a->rhs, b->rhs);
    }
}

Scalar evaluate(const NodePtr& ast, const std::map<std::string, Scalar>& binding,
                const FieldDescriptor& fd) {
    switch (ast->kind) {
    case NodeKind::IntLiteral:
        return from_big_rational(BigRational(ast->int_value), fd);
    case NodeKind::RatioLiteral: {
        if (ast->ratio_den == 0) throw DivisionByZero();
        return from_big_rational(BigRational(ast->ratio_num, ast->ratio_den), fd);
    }
    case NodeKind::Variable: {
        auto it = binding.find(ast->name);
        if (it == binding.end()) throw UnboundVariable(ast->name);
        return it->second;
    }
    case NodeKind::Negate: return neg(evaluate(ast->lhs, binding, fd), fd);
    case NodeKind::Add:
        return add(evaluate(ast->lhs, binding, fd), evaluate(ast->rhs, binding, fd), fd);
    case NodeKind::Sub:
        return sub(evaluate(ast->lhs, binding, fd), evaluate(ast->rhs, binding, fd), fd);
    case NodeKind::Mul:
        return mul(evaluate(ast->lhs, binding, fd), evaluate(ast->rhs, binding, fd), fd);
    case NodeKind::Div:
        return div(evaluate(ast->lhs, binding, fd), evaluate(ast->rhs, binding, fd), fd);
    case NodeKind::Pow:
        return pow_nonneg(evaluate(ast->lhs, binding, fd), ast->exponent, fd);
    case NodeKind::Call: {
        if (fd.is_exact()) throw TranscendentalInExactField(ast->name);
        double x = evaluate(ast->lhs, binding, fd).dbl();
        double y = 0.0;
        if (ast->name == "sin") y = std::sin(x);
        else if (ast->name == "cos") y = std::cos(x);
        else if (ast->name == "exp") y = std::exp(x);
        else if (ast->name == "log") y = std::log(x);
        else if (ast->name == "abs") y = std::fabs(x);
        else throw Error("unknown call '" + ast->name + "'");
        if (!std::isfinite(y)) throw NonFiniteValue(ast->name + "(" + std::to_string(x) + ")");
        return Scalar::real(y);
    }
    }
    throw Error("unreachable node kind");
}

bool uses_call(const NodePtr& ast) {
    if (!ast) return false;
    if (ast->kind == NodeKind::Call) return true;
    return uses_call(ast->lhs) || uses_call(ast->rhs);
}

bool uses_decimal(const NodePtr& ast) {
    if (!ast) return false;
    if (ast->kind == NodeKind::RatioLiteral && ast->from_decimal) return true;
    return uses_decimal(ast->lhs) || uses_decimal(ast->rhs);
}

} // namespace indep::expr
