#include "twistkit/parse.hpp"

#include <cctype>

namespace twistkit {

namespace {

enum class TokenKind { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokenKind kind;
    std::string text;
    size_t position;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            tokens.push_back({TokenKind::Number, text.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            while (i < text.size() && text[i] == '\'') ++i;
            tokens.push_back({TokenKind::Name, text.substr(start, i - start), start});
            continue;
        }
        TokenKind kind;
        switch (c) {
            case '+': kind = TokenKind::Plus; break;
            case '-': kind = TokenKind::Minus; break;
            case '*': kind = TokenKind::Star; break;
            case '/': kind = TokenKind::Slash; break;
            case '^': kind = TokenKind::Caret; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        tokens.push_back({kind, text.substr(start, 1), start});
        ++i;
    }
    tokens.push_back({TokenKind::End, "", text.size()});
    return tokens;
}

class Parser {
public:
    Parser(const std::string& text, const GenSet& gens, unsigned scalar_order)
        : gens_(gens), order_(scalar_order), tokens_(tokenize(text)) {}

    NcPoly parse() {
        if (peek().kind == TokenKind::End) throw ParseError("empty expression", 0);
        NcPoly p = parse_expression();
        if (peek().kind != TokenKind::End)
            throw ParseError("unexpected token '" + peek().text + "'", peek().position);
        return p;
    }

private:
    const GenSet& gens_;
    unsigned order_;
    std::vector<Token> tokens_;
    size_t pos_ = 0;

    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool accept(TokenKind kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    NcPoly parse_expression() {
        NcPoly p = parse_term();
        for (;;) {
            if (accept(TokenKind::Plus)) {
                p += parse_term();
            } else if (accept(TokenKind::Minus)) {
                p -= parse_term();
            } else {
                return p;
            }
        }
    }

    NcPoly parse_term() {
        NcPoly p = parse_factor();
        while (accept(TokenKind::Star)) p *= parse_factor();
        return p;
    }

    NcPoly parse_factor() {
        if (accept(TokenKind::Minus)) return -parse_factor();
        NcPoly base = parse_base();
        if (!accept(TokenKind::Caret)) return base;
        const Token& exp_tok = peek();
        long exponent = parse_exponent();
        if (exponent >= 0) {
            if (exponent > 1000) throw ParseError("exponent too large", exp_tok.position);
            return base.pow(static_cast<unsigned>(exponent));
        }
        // Negative powers exist only for unit scalars.
        if (base.term_count() == 1 && base.leading_word().empty() &&
            base.terms().begin()->second.is_unit()) {
            return NcPoly::constant(base.terms().begin()->second.pow(exponent));
        }
        throw ParseError("negative exponent on a non-unit", exp_tok.position);
    }

    long parse_exponent() {
        bool negative = accept(TokenKind::Minus);
        const Token& tok = peek();
        if (tok.kind != TokenKind::Number)
            throw ParseError("expected an integer exponent", tok.position);
        advance();
        try {
            long value = std::stol(tok.text);
            return negative ? -value : value;
        } catch (const std::out_of_range&) {
            throw ParseError("exponent out of range", tok.position);
        }
    }

    NcPoly parse_base() {
        const Token& tok = peek();
        switch (tok.kind) {
            case TokenKind::Number: {
                advance();
                mpq_class value(tok.text);
                if (accept(TokenKind::Slash)) {
                    const Token& den = peek();
                    if (den.kind != TokenKind::Number)
                        throw ParseError("expected a denominator", den.position);
                    advance();
                    if (mpz_class(den.text) == 0)
                        throw ParseError("zero denominator", den.position);
                    value = mpq_class(tok.text + "/" + den.text);
                    value.canonicalize();
                }
                return NcPoly::constant(Scalar::rational(value, order_));
            }
            case TokenKind::Name: {
                advance();
                if (auto idx = gens_.find(tok.text)) return NcPoly::generator(*idx);
                if (tok.text == "q") return NcPoly::constant(Scalar::q_power(1, order_));
                if (tok.text == "zeta") return NcPoly::constant(Scalar::zeta(order_));
                if (tok.text == "i") {
                    if (order_ != 4)
                        throw ParseError("'i' denotes a root of unity only at order 4",
                                         tok.position);
                    return NcPoly::constant(Scalar::zeta(4));
                }
                throw ParseError("unknown name '" + tok.text + "'", tok.position);
            }
            case TokenKind::LParen: {
                advance();
                NcPoly inner = parse_expression();
                if (!accept(TokenKind::RParen))
                    throw ParseError("expected ')'", peek().position);
                return inner;
            }
            default:
                throw ParseError("unexpected token '" + tok.text + "'", tok.position);
        }
    }
};

}  // namespace

NcPoly parse_poly(const std::string& text, const GenSet& gens, unsigned scalar_order) {
    return Parser(text, gens, scalar_order).parse();
}

Scalar parse_scalar(const std::string& text, unsigned scalar_order) {
    NcPoly p = parse_poly(text, GenSet(), scalar_order);
    if (p.is_zero()) return Scalar::zero(scalar_order);
    return p.terms().begin()->second;
}

}  // namespace twistkit
