// Text format for exact polynomials.  Grammar:
//
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := base ('^' natural)?
//   base     := integer | symbol | '(' expr ')'
//
// '/' is accepted only where the coefficient domain can invert the divisor:
// a nonzero constant in any field, which over a rational-function field
// includes arbitrary parenthesized parameter expressions.  Unary minus is
// legal at the head of an expression and directly after '('.  format_poly
// emits graded-lex descending order and round-trips through parse_poly.

#ifndef QUINTIC_FORMPARSE_HPP
#define QUINTIC_FORMPARSE_HPP

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/multipoly.hpp"
#include "quintic/ratfunc.hpp"

namespace quintic {

// symbols resolved by the ring itself (the function-field parameter)
template <class R>
std::optional<typename R::Elem> ring_symbol(const R&, const std::string&) {
    return std::nullopt;
}
template <class B>
std::optional<typename FuncField<B>::Elem> ring_symbol(const FuncField<B>& K, const std::string& s) {
    if (s == K.param) return K.parameter_elem();
    return std::nullopt;
}

namespace detail {

template <class R>
class PolyParser {
public:
    PolyParser(const std::string& text, const R& ring, const std::vector<std::string>& vars)
        : text_(text), ring_(ring), vars_(vars) {}

    MultiPoly<R> run() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("empty input", 0);
        auto p = parse_expr();
        skip_ws();
        if (pos_ < text_.size()) throw parse_error("unexpected trailing input", pos_);
        return p;
    }

private:
    const std::string& text_;
    const R& ring_;
    const std::vector<std::string>& vars_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly<R> parse_expr() {
        bool negate = accept('-');
        auto p = parse_term();
        if (negate) p = -p;
        for (;;) {
            if (accept('+')) {
                p = p + parse_term();
            } else if (accept('-')) {
                p = p - parse_term();
            } else {
                return p;
            }
        }
    }

    MultiPoly<R> parse_term() {
        auto p = parse_factor();
        for (;;) {
            if (accept('*')) {
                p = p * parse_factor();
            } else if (peek() == '/') {
                size_t at = pos_;
                ++pos_;
                auto q = parse_factor();
                p = divide(p, q, at);
            } else {
                return p;
            }
        }
    }

    MultiPoly<R> divide(const MultiPoly<R>& p, const MultiPoly<R>& q, size_t at) {
        if constexpr (!R::is_field) {
            (void)q;
            throw parse_error("division not supported in this ring", at);
        } else {
            if (!q.is_constant()) throw parse_error("division by a non-constant", at);
            auto c = q.constant_value();
            if (ring_.is_zero(c)) throw parse_error("division by zero", at);
            return mul_scalar(p, ring_.inv(c));
        }
    }

    MultiPoly<R> parse_factor() {
        auto b = parse_base();
        if (accept('^')) {
            skip_ws();
            size_t at = pos_;
            mpz_class n = read_integer();
            if (n < 0 || !n.fits_ulong_p()) throw parse_error("exponent out of range", at);
            return pow_poly(b, n.get_ui());
        }
        return b;
    }

    MultiPoly<R> parse_base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            auto p = parse_expr();
            if (!accept(')')) throw parse_error("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class v = read_integer();
            return MultiPoly<R>::constant(ring_, vars_, ring_.from_mpz(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = read_symbol();
            for (const auto& v : vars_)
                if (v == name) return MultiPoly<R>::variable(ring_, vars_, name);
            if (auto e = ring_symbol(ring_, name))
                return MultiPoly<R>::constant(ring_, vars_, *e);
            throw unknown_symbol(name);
        }
        throw parse_error("expected a number, symbol or '('", pos_);
    }

    mpz_class read_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw parse_error("expected an integer", pos_);
        return mpz_class(text_.substr(start, pos_ - start), 10);
    }

    std::string read_symbol() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }
};

}  // namespace detail

template <class R>
MultiPoly<R> parse_poly(const std::string& text, const R& ring, const std::vector<std::string>& vars) {
    detail::PolyParser<R> p(text, ring, vars);
    return p.run();
}

template <class R>
std::string format_poly(const MultiPoly<R>& p) {
    if (p.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        auto c = it->second;
        if (p.ring.is_negative(c)) {
            out += "-";
            c = p.ring.abs_val(c);
        } else if (!first) {
            out += "+";
        }
        std::string mono;
        for (size_t i = 0; i < p.vars.size(); ++i) {
            uint32_t e = it->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += p.vars[i];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += p.ring.to_factor_string(c);
        } else {
            if (!p.ring.is_one(c)) {
                out += p.ring.to_factor_string(c);
                out += "*";
            }
            out += mono;
        }
        first = false;
    }
    return out;
}

}  // namespace quintic

#endif
