#include "lgapery/parser.hpp"

#include "lgapery/errors.hpp"

#include <cctype>
#include <limits>

namespace lgapery {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

    LaurentPolynomial run() {
        skip_space();
        if (at_end()) fail("empty input");
        LaurentPolynomial p = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    std::size_t dimension() const { return names_.size(); }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    LaurentPolynomial expr() {
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        LaurentPolynomial acc = term();
        if (negate) acc = scale(acc, -1);
        for (;;) {
            if (accept('+')) {
                acc = add(acc, term());
            } else if (accept('-')) {
                acc = sub(acc, term());
            } else {
                return acc;
            }
        }
    }

    LaurentPolynomial term() {
        LaurentPolynomial acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = mul(acc, factor());
            } else if (accept('/')) {
                const std::size_t at = pos_;
                LaurentPolynomial divisor = factor();
                acc = mul(acc, monomial_inverse(divisor, at, "division by a non-monomial divisor"));
            } else {
                skip_space();
                if (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
                    fail("implicit multiplication is not supported; use '*'");
                }
                return acc;
            }
        }
    }

    LaurentPolynomial factor() {
        const std::size_t base_at = pos_;
        LaurentPolynomial base = atom();
        if (!accept('^')) return base;
        bool negative = accept('-');
        skip_space();
        const std::size_t exp_at = pos_;
        Integer e = integer_literal();
        if (e > 1'000'000) {
            pos_ = exp_at;
            fail("exponent too large");
        }
        const unsigned n = static_cast<unsigned>(e.get_ui());
        if (negative) {
            base = monomial_inverse(base, base_at, "negative power of a non-monomial base");
        }
        return pow(base, n);
    }

    LaurentPolynomial atom() {
        skip_space();
        if (at_end()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPolynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return LaurentPolynomial::constant(dimension(), Rational(integer_literal()));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < names_.size(); ++i) {
                if (names_[i] == name) {
                    ExponentVector e(dimension());
                    e[i] = 1;
                    return LaurentPolynomial::monomial(e);
                }
            }
            // x1..xd are always accepted.
            if (name.size() > 1 && name[0] == 'x') {
                std::size_t index = 0;
                bool digits = true;
                for (char d : name.substr(1)) {
                    if (!std::isdigit(static_cast<unsigned char>(d))) digits = false;
                    else index = index * 10 + static_cast<std::size_t>(d - '0');
                }
                if (digits && index >= 1 && index <= dimension()) {
                    ExponentVector e(dimension());
                    e[index - 1] = 1;
                    return LaurentPolynomial::monomial(e);
                }
            }
            pos_ = start;
            fail("unknown variable '" + std::string(name) + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    Integer integer_literal() {
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    LaurentPolynomial monomial_inverse(const LaurentPolynomial& m, std::size_t at, const char* what) {
        if (m.size() != 1) {
            pos_ = at;
            fail(m.is_zero() ? std::string("division by zero") : std::string(what));
        }
        const auto& [e, c] = *m.terms().begin();
        return LaurentPolynomial::monomial(-e, 1 / c);
    }

    std::string_view text_;
    std::span<const std::string> names_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse(std::string_view text, std::size_t dimension) {
    auto names = default_variable_names(dimension);
    return Parser(text, names).run();
}

LaurentPolynomial parse(std::string_view text, std::span<const std::string> variable_names) {
    if (variable_names.empty()) throw std::invalid_argument("at least one variable name is required");
    return Parser(text, variable_names).run();
}

}  // namespace lgapery
