#include "wco/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <string>

namespace wco {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t degree) : text_(text), degree_(degree) {}

    TruncatedSeries run() {
        TruncatedSeries s = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return s;
    }

private:
    TruncatedSeries expression() {
        TruncatedSeries acc = term();
        while (true) {
            skip_ws();
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    TruncatedSeries term() {
        TruncatedSeries acc = factor();
        while (true) {
            skip_ws();
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                const TruncatedSeries divisor = factor();
                if (divisor.coeff(0) == Complex{0.0}) fail("division by a series vanishing at 0");
                acc = acc * reciprocal(divisor);
            } else if (pos_ < text_.size() &&
                       (text_[pos_] == 'z' || text_[pos_] == 'i' || text_[pos_] == '(' ||
                        std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
                acc = acc * factor();  // juxtaposition: "2z", "z(1-z)"
            } else {
                return acc;
            }
        }
    }

    TruncatedSeries factor() {
        TruncatedSeries base = unary();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent after '^'");
            unsigned k = 0;
            std::from_chars(text_.data() + start, text_.data() + pos_, k);
            return pow_int(base, k);
        }
        return base;
    }

    TruncatedSeries unary() {
        skip_ws();
        bool negate = false;
        while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            if (text_[pos_] == '-') negate = !negate;
            ++pos_;
            skip_ws();
        }
        TruncatedSeries s = primary();
        return negate ? -s : s;
    }

    TruncatedSeries primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            TruncatedSeries s = expression();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return s;
        }
        if (c == 'z') {
            if (degree_ == 0) fail("'z' not allowed in a scalar context");
            ++pos_;
            return TruncatedSeries::identity(degree_);
        }
        if (c == 'i') {
            ++pos_;
            return TruncatedSeries::constant(Complex{0.0, 1.0}, degree_);
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
            if (ec != std::errc{}) fail("malformed number");
            pos_ = static_cast<std::size_t>(ptr - text_.data());
            if (pos_ < text_.size() && text_[pos_] == 'i') {
                ++pos_;
                return TruncatedSeries::constant(Complex{0.0, v}, degree_);
            }
            return TruncatedSeries::constant(Complex{v, 0.0}, degree_);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw Error(Errc::ParseError, why + " at position " + std::to_string(pos_) + " in \"" +
                                          std::string(text_) + "\"");
    }

    std::string_view text_;
    std::size_t degree_;
    std::size_t pos_ = 0;
};

}  // namespace

TruncatedSeries parse_series(std::string_view text, std::size_t trunc_degree) {
    return Parser(text, trunc_degree).run();
}

Complex parse_complex(std::string_view text) {
    const TruncatedSeries s = parse_series(text, 0);
    return s.coeff(0);
}

std::string format_complex(Complex value) {
    char buf[96];
    if (value.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", value.real());
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", value.real(), value.imag());
    return buf;
}

}  // namespace wco
