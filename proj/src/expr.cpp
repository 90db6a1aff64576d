#include "paramrls/expr.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace paramrls {

namespace {

class Parser {
public:
    Parser(std::string_view src, double n) : src_(src), n_(n) {}

    double parse() {
        const double v = expression();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression \"" + std::string(src_) + "\": " + what +
                                    " at offset " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    double expression() {
        double v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }

    double term() {
        double v = factor();
        for (;;) {
            if (eat('*')) v *= factor();
            else if (eat('/')) {
                const double d = factor();
                if (d == 0.0) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    double factor() {
        skip_ws();
        if (eat('-')) return -factor();
        if (eat('(')) {
            const double v = expression();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        fail("unexpected character");
    }

    double number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
            ++pos_;
        try {
            std::size_t used = 0;
            const double v = std::stod(std::string(src_.substr(start, pos_ - start)), &used);
            if (used != pos_ - start) fail("malformed number");
            return v;
        } catch (const std::invalid_argument&) {
            fail("malformed number");
        } catch (const std::out_of_range&) {
            fail("number out of range");
        }
    }

    double identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::string_view name = src_.substr(start, pos_ - start);
        if (name == "n") return n_;
        if (name == "floor" || name == "ln" || name == "sqrt") {
            if (!eat('(')) fail("expected '(' after function name");
            const double arg = expression();
            if (!eat(')')) fail("expected ')'");
            if (name == "floor") return std::floor(arg);
            if (name == "ln") {
                if (arg <= 0.0) fail("ln of non-positive value");
                return std::log(arg);
            }
            if (arg < 0.0) fail("sqrt of negative value");
            return std::sqrt(arg);
        }
        fail("unknown identifier '" + std::string(name) + "'");
    }

    std::string_view src_;
    double n_;
    std::size_t pos_ = 0;
};

} // namespace

double eval_expr(std::string_view expr, double n) { return Parser(expr, n).parse(); }

std::uint64_t eval_size_expr(std::string_view expr, std::uint64_t n) {
    const double v = eval_expr(expr, static_cast<double>(n));
    if (!std::isfinite(v) || v < 0.0)
        throw std::invalid_argument("expression \"" + std::string(expr) +
                                    "\": must evaluate to a non-negative finite value");
    if (v > 9.007199254740992e15)
        throw std::invalid_argument("expression \"" + std::string(expr) + "\": value too large");
    return static_cast<std::uint64_t>(std::floor(v));
}

} // namespace paramrls
