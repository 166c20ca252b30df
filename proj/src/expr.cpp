#include "quadric/expr.hpp"

#include <cctype>

#include "quadric/errors.hpp"

namespace quadric {

namespace {

constexpr unsigned kMaxExponent = 1u << 20;

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

class Parser {
public:
    Parser(std::string_view src, const RingPtr& ring, const LabelResolver& labels)
        : src_(src), ring_(ring), labels_(labels) {}

    ExprNode parse() {
        ExprNode root = expr();
        skip();
        if (pos_ != src_.size())
            fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    unsigned nat() {
        skip();
        const std::size_t start = pos_;
        unsigned long long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(src_[pos_] - '0');
            if (v > kMaxExponent)
                fail("number too large");
            ++pos_;
        }
        if (pos_ == start)
            fail("expected a number");
        return static_cast<unsigned>(v);
    }

    ExprNode expr() {
        ExprNode first = term();
        skip();
        if (pos_ >= src_.size() || (src_[pos_] != '+' && src_[pos_] != '-'))
            return first;
        ExprNode sum;
        sum.kind = ExprNode::Kind::Sum;
        sum.position = first.position;
        sum.children.push_back(std::move(first));
        while (accept('+') || accept('-'))
            sum.children.push_back(term());
        return sum;
    }

    ExprNode term() {
        ExprNode first = factor();
        skip();
        if (pos_ >= src_.size() || src_[pos_] != '*')
            return first;
        ExprNode prod;
        prod.kind = ExprNode::Kind::Product;
        prod.position = first.position;
        prod.children.push_back(std::move(first));
        while (accept('*'))
            prod.children.push_back(factor());
        return prod;
    }

    ExprNode factor() {
        ExprNode base = atom();
        if (!accept('^'))
            return base;
        ExprNode power;
        power.kind = ExprNode::Kind::Power;
        power.position = base.position;
        power.exponent = nat();
        power.children.push_back(std::move(base));
        return power;
    }

    ExprNode atom() {
        skip();
        ExprNode node;
        node.position = pos_;
        if (pos_ >= src_.size())
            fail("unexpected end of expression");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            node = expr();
            if (!accept(')'))
                fail("expected ')'");
            return node;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const unsigned v = nat();
            if (v > 1) {
                pos_ = node.position;
                fail("only the literals 0 and 1 are allowed");
            }
            node.kind = ExprNode::Kind::Literal;
            node.literal = static_cast<int>(v);
            return node;
        }
        if (!name_start(c))
            fail("unexpected '" + std::string(1, c) + "'");
        std::string name;
        while (pos_ < src_.size() && name_char(src_[pos_]))
            name += src_[pos_++];
        if (pos_ < src_.size() && src_[pos_] == '{') {
            ++pos_;
            name += '{';
            name += std::to_string(nat());
            while (accept(','))
                name += ',' + std::to_string(nat());
            if (!accept('}'))
                fail("expected '}'");
            name += '}';
        }
        node.name = name;
        if (auto idx = ring_->find(name)) {
            node.kind = ExprNode::Kind::Generator;
            node.var = *idx;
            return node;
        }
        if (labels_) {
            if (const Polynomial* p = labels_(name)) {
                if (p->ring() != ring_)
                    throw ContextMismatch("label '" + name + "' belongs to " +
                                          p->ring()->describe());
                node.kind = ExprNode::Kind::Label;
                node.label_value = *p;
                return node;
            }
        }
        throw UnknownGenerator(name, node.position);
    }

    std::string_view src_;
    const RingPtr& ring_;
    const LabelResolver& labels_;
    std::size_t pos_ = 0;
};

Polynomial eval(const ExprNode& node, const RingPtr& ring) {
    switch (node.kind) {
    case ExprNode::Kind::Literal:
        return node.literal ? Polynomial::one(ring) : Polynomial::zero(ring);
    case ExprNode::Kind::Generator:
        return Polynomial::variable(ring, node.var);
    case ExprNode::Kind::Label:
        return node.label_value;
    case ExprNode::Kind::Power:
        return eval(node.children.at(0), ring).pow(node.exponent);
    case ExprNode::Kind::Sum: {
        Polynomial out = Polynomial::zero(ring);
        for (const auto& c : node.children)
            out += eval(c, ring);
        return out;
    }
    case ExprNode::Kind::Product: {
        Polynomial out = Polynomial::one(ring);
        for (const auto& c : node.children)
            out = out * eval(c, ring);
        return out;
    }
    }
    return Polynomial::zero(ring);
}

}  // namespace

ExprAST parse_expr(std::string_view src, const RingPtr& ring, const LabelResolver& labels) {
    if (!ring)
        throw ContextMismatch("parse_expr needs a ring");
    ExprNode root = Parser(src, ring, labels).parse();
    return {ring, std::move(root)};
}

Polynomial eval_expr(const ExprAST& ast) { return eval(ast.root, ast.ring); }

Polynomial parse_polynomial(std::string_view src, const RingPtr& ring, const LabelResolver& labels) {
    return eval_expr(parse_expr(src, ring, labels));
}

}  // namespace quadric
