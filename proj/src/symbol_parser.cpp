#include "hsball/symbol_parser.hpp"

#include <cctype>
#include <charconv>

namespace hsball {

namespace {

constexpr int kParseCap = 512;

class Parser {
public:
    Parser(std::string_view text, int n) : text_(text), n_(n) {}

    TruncSeries run() {
        TruncSeries value = parse_expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value.with_truncation(std::max(value.max_term_degree(), 0));
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    TruncSeries parse_expr() {
        TruncSeries acc = parse_term();
        while (true) {
            if (eat('+'))
                acc = add(pad(acc), pad(parse_term()));
            else if (eat('-'))
                acc = subtract(pad(acc), pad(parse_term()));
            else
                return acc;
        }
    }

    TruncSeries parse_term() {
        TruncSeries acc = parse_factor();
        while (true) {
            if (eat('*')) {
                const TruncSeries rhs = parse_factor();
                check_degree(acc.max_term_degree() + rhs.max_term_degree());
                acc = multiply(acc, rhs, kParseCap);
            } else if (eat('/')) {
                const std::size_t at = pos_;
                const TruncSeries rhs = parse_factor();
                if (rhs.max_term_degree() != 0)
                    throw ParseError("division is only supported by constants", at);
                const Complex c = rhs.coefficient(MultiIndex::zero(n_));
                if (c == Complex(0.0)) throw ParseError("division by zero", at);
                acc = scale(acc, 1.0 / c);
            } else {
                return acc;
            }
        }
    }

    TruncSeries parse_factor() {
        bool negate = false;
        while (true) {
            if (eat('-'))
                negate = !negate;
            else if (eat('+'))
                ;
            else
                break;
        }
        TruncSeries base = parse_primary();
        if (eat('^')) {
            skip_space();
            const std::size_t at = pos_;
            long exponent = 0;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected a nonnegative integer exponent");
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                exponent = exponent * 10 + (text_[pos_] - '0');
                if (exponent > kParseCap) throw ParseError("exponent too large", at);
                ++pos_;
            }
            check_degree(base.max_term_degree() * static_cast<int>(exponent));
            base = power(base, static_cast<int>(exponent), kParseCap);
        }
        return negate ? scale(base, Complex(-1.0)) : base;
    }

    TruncSeries parse_primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            TruncSeries inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (c == 'i') {
            ++pos_;
            return TruncSeries::constant(n_, 0, Complex(0.0, 1.0));
        }
        if (c == 'z') return parse_variable();
        fail("expected a number, 'i', a variable, or '('");
    }

    TruncSeries parse_number() {
        const std::size_t begin = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        if (pos_ == begin) fail("expected a number");
        double value = 0.0;
        const auto res =
            std::from_chars(text_.data() + begin, text_.data() + pos_, value);
        if (res.ec != std::errc()) throw ParseError("malformed number", begin);
        if (pos_ < text_.size() && text_[pos_] == 'i') {
            ++pos_;
            return TruncSeries::constant(n_, 0, Complex(0.0, value));
        }
        return TruncSeries::constant(n_, 0, Complex(value, 0.0));
    }

    TruncSeries parse_variable() {
        const std::size_t at = pos_;
        ++pos_;  // 'z'
        long index = 1;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            index = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                index = index * 10 + (text_[pos_] - '0');
                if (index > n_) break;
                ++pos_;
            }
        }
        if (index < 1 || index > n_)
            throw ParseError("variable index out of range for dimension " + std::to_string(n_),
                             at);
        return TruncSeries::coordinate(n_, 1, static_cast<int>(index) - 1);
    }

    // Binary series ops truncate to the smaller cap; lift both to the parse cap.
    TruncSeries pad(const TruncSeries& s) const { return s.with_truncation(kParseCap); }

    void check_degree(int degree) const {
        if (degree > kParseCap)
            throw ParseError("polynomial degree exceeds the supported maximum", pos_);
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

TruncSeries parse_symbol(std::string_view text, int n) {
    if (n < 1) throw std::invalid_argument("parse_symbol: n must be >= 1");
    return Parser(text, n).run();
}

Complex parse_complex(std::string_view text) {
    const TruncSeries s = parse_symbol(text, 1);
    if (s.max_term_degree() != 0)
        throw ParseError("expected a constant expression", 0);
    return s.coefficient(MultiIndex::zero(1));
}

}  // namespace hsball
