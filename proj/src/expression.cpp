#include "fracfem/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "fracfem/error.hpp"

namespace fracfem {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Expression parse() {
        ScalarFn fn = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return {std::move(fn), std::move(breakpoints_)};
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ArgumentError("expression '" + text_ + "' at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    ScalarFn expr() {
        ScalarFn lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = [a = lhs, b = term()](double x) { return a(x) + b(x); };
            } else if (accept('-')) {
                lhs = [a = lhs, b = term()](double x) { return a(x) - b(x); };
            } else {
                return lhs;
            }
        }
    }

    ScalarFn term() {
        ScalarFn lhs = unary();
        for (;;) {
            if (accept('*')) {
                lhs = [a = lhs, b = unary()](double x) { return a(x) * b(x); };
            } else if (accept('/')) {
                lhs = [a = lhs, b = unary()](double x) { return a(x) / b(x); };
            } else {
                return lhs;
            }
        }
    }

    ScalarFn unary() {
        if (accept('-')) return [a = unary()](double x) { return -a(x); };
        return power();
    }

    ScalarFn power() {
        ScalarFn base = atom();
        if (accept('^')) return [a = base, b = unary()](double x) { return std::pow(a(x), b(x)); };
        return base;
    }

    double number() {
        skip_space();
        const char* begin = text_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("expected a number");
        pos_ += static_cast<std::size_t>(end - begin);
        return v;
    }

    double signed_number() {
        const bool neg = accept('-');
        const double v = number();
        return neg ? -v : v;
    }

    std::string identifier() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    ScalarFn atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (accept('(')) {
            ScalarFn inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const double v = number();
            return [v](double) { return v; };
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::string name = identifier();
            if (name == "x") return [](double x) { return x; };
            if (name == "pi") return [](double) { return std::numbers::pi; };
            if (name == "e") return [](double) { return std::numbers::e; };
            if (name == "chi") {
                expect('(');
                const double a = signed_number();
                expect(',');
                const double b = signed_number();
                expect(')');
                if (!(a < b)) fail("chi(a, b) needs a < b");
                breakpoints_.push_back(a);
                breakpoints_.push_back(b);
                return [a, b](double x) { return x >= a && x < b ? 1.0 : 0.0; };
            }
            fail("unknown identifier '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::vector<double> breakpoints_;
};

}  // namespace

Expression parse_expression(const std::string& text) { return Parser(text).parse(); }

Field field_from_expression(const std::string& text, const std::string& hint) {
    Expression e = parse_expression(text);
    if (hint.empty()) throw ArgumentError("a singularity hint is required for '" + text + "'");
    if (hint == "smooth") return Field::smooth(std::move(e.fn), std::move(e.breakpoints));
    char* end = nullptr;
    const double p = std::strtod(hint.c_str(), &end);
    if (end == hint.c_str() || *end != '\0')
        throw ArgumentError("singularity hint must be 'smooth' or a number, got '" + hint + "'");
    return Field::hinted(std::move(e.fn), p, std::move(e.breakpoints));
}

}  // namespace fracfem
