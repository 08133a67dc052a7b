#include "msym/expr.hpp"

#include <cctype>
#include <stdexcept>

#include "msym/symfun.hpp"

namespace msym {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprNode run() {
        ExprNode node = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return node;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("syntax error at position " +
                                    std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    ExprNode parse_expr() {
        ExprNode first = parse_term();
        if (peek() != '+' && peek() != '-') return first;
        ExprNode sum;
        sum.kind = ExprNode::Kind::Sum;
        sum.children.push_back(std::move(first));
        while (true) {
            if (eat('+')) {
                sum.children.push_back(parse_term());
            } else if (eat('-')) {
                ExprNode neg;
                neg.kind = ExprNode::Kind::Negate;
                neg.children.push_back(parse_term());
                sum.children.push_back(std::move(neg));
            } else {
                break;
            }
        }
        return sum;
    }

    ExprNode parse_term() {
        ExprNode first = parse_factor();
        if (peek() != '*') return first;
        ExprNode product;
        product.kind = ExprNode::Kind::Product;
        product.children.push_back(std::move(first));
        while (eat('*')) product.children.push_back(parse_factor());
        return product;
    }

    ExprNode parse_factor() {
        if (eat('-')) {
            ExprNode neg;
            neg.kind = ExprNode::Kind::Negate;
            neg.children.push_back(parse_primary());
            return neg;
        }
        return parse_primary();
    }

    ExprNode parse_primary() {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (c == '(') {
            ++pos_;
            ExprNode inner = parse_expr();
            expect(')');
            return inner;
        }
        if (c == 'e' || c == 'p' || c == 'g' || c == 'm') {
            ++pos_;
            return parse_atom(c);
        }
        fail("expected number, atom, or parenthesized expression");
    }

    ExprNode parse_number() {
        ExprNode node;
        node.kind = ExprNode::Kind::Number;
        const mpz_class num = parse_int();
        if (eat('/')) {
            const mpz_class den = parse_int();
            if (den == 0) fail("zero denominator");
            node.number = mpq_class(num, den);
            node.number.canonicalize();
        } else {
            node.number = num;
        }
        return node;
    }

    mpz_class parse_int() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return mpz_class(text_.substr(start, pos_ - start));
    }

    int parse_small_int() {
        const mpz_class value = parse_int();
        if (!value.fits_sint_p()) fail("integer out of range");
        return static_cast<int>(value.get_si());
    }

    ExpVec parse_int_list(char closer) {
        ExpVec out;
        out.push_back(parse_small_int());
        while (eat(',')) out.push_back(parse_small_int());
        expect(closer);
        return out;
    }

    ExprNode parse_atom(char letter) {
        ExprNode node;
        switch (letter) {
            case 'e':
                node.kind = ExprNode::Kind::ElementaryAtom;
                expect('[');
                node.ints = parse_int_list(']');
                return node;
            case 'p':
                node.kind = ExprNode::Kind::PowerSumAtom;
                expect('[');
                node.ints = parse_int_list(']');
                return node;
            case 'g':
                node.kind = ExprNode::Kind::GeneratorAtom;
                expect('[');
                node.k = parse_small_int();
                expect(';');
                node.ints = parse_int_list(']');
                return node;
            case 'm': {
                node.kind = ExprNode::Kind::BasisAtom;
                expect('{');
                if (eat('}')) return node;
                while (true) {
                    expect('(');
                    const ExpVec mono = parse_int_list(')');
                    int mult = 1;
                    if (eat('^')) mult = parse_small_int();
                    if (is_zero_vec(mono)) fail("unit monomial in index");
                    if (mult < 1) fail("multiplicity must be positive");
                    node.index.insert(mono, mult);
                    if (eat('}')) return node;
                    expect(',');
                }
            }
            default:
                fail("unknown atom");
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprNode parse_expression(const std::string& text) {
    return Parser(text).run();
}

GammaElement evaluate(const ExprNode& node, int d, int r, RingSpec ring) {
    switch (node.kind) {
        case ExprNode::Kind::Sum: {
            GammaElement acc(r, d, ring);
            for (const ExprNode& child : node.children) {
                acc = add(acc, evaluate(child, d, r, ring));
            }
            return acc;
        }
        case ExprNode::Kind::Product: {
            GammaElement acc = unit_element(d, r, ring);
            for (const ExprNode& child : node.children) {
                acc = mul(acc, evaluate(child, d, r, ring));
            }
            return acc;
        }
        case ExprNode::Kind::Negate:
            return scale(-1, evaluate(node.children.front(), d, r, ring));
        case ExprNode::Kind::Number:
            return scale(node.number, unit_element(d, r, ring));
        case ExprNode::Kind::ElementaryAtom:
        case ExprNode::Kind::PowerSumAtom:
        case ExprNode::Kind::GeneratorAtom:
            if (node.ints.size() != static_cast<std::size_t>(r)) {
                throw std::invalid_argument(
                    "arity mismatch: exponent list length differs from r");
            }
            if (node.kind == ExprNode::Kind::ElementaryAtom) {
                return elementary(node.ints, d, ring);
            }
            if (node.kind == ExprNode::Kind::PowerSumAtom) {
                return power_sum(node.ints, d, ring);
            }
            return generator_element({node.k, node.ints}, d, ring);
        case ExprNode::Kind::BasisAtom:
            if (!node.index.empty() &&
                node.index.entries().front().first.size() !=
                    static_cast<std::size_t>(r)) {
                throw std::invalid_argument(
                    "arity mismatch: monomial length differs from r");
            }
            return basis_element(node.index, d, r, ring);
    }
    throw std::logic_error("unreachable expression kind");
}

namespace {

void collect_arity(const ExprNode& node, std::optional<int>& arity) {
    std::optional<int> own;
    switch (node.kind) {
        case ExprNode::Kind::ElementaryAtom:
        case ExprNode::Kind::PowerSumAtom:
        case ExprNode::Kind::GeneratorAtom:
            own = static_cast<int>(node.ints.size());
            break;
        case ExprNode::Kind::BasisAtom:
            if (!node.index.empty()) {
                own = static_cast<int>(node.index.entries().front().first.size());
            }
            break;
        default:
            break;
    }
    if (own) {
        if (arity && *arity != *own) {
            throw std::invalid_argument(
                "arity mismatch: atoms use different variable counts");
        }
        arity = own;
    }
    for (const ExprNode& child : node.children) collect_arity(child, arity);
}

}  // namespace

std::optional<int> infer_arity(const ExprNode& node) {
    std::optional<int> arity;
    collect_arity(node, arity);
    return arity;
}

}  // namespace msym
