#include "bolab/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "bolab/errors.hpp"

namespace bolab {

namespace {

using Fn = std::function<double(double, double)>;

// Recursive-descent compiler: the parse builds nested closures once, so
// repeated evaluation (per grid point per stage) pays no parsing cost.
class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Fn parse() {
        Fn e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    Fn expr() {
        Fn lhs = term();
        for (;;) {
            skip_ws();
            if (consume('+')) {
                Fn rhs = term();
                lhs = [lhs, rhs](double x, double t) { return lhs(x, t) + rhs(x, t); };
            } else if (consume('-')) {
                Fn rhs = term();
                lhs = [lhs, rhs](double x, double t) { return lhs(x, t) - rhs(x, t); };
            } else {
                return lhs;
            }
        }
    }

    Fn term() {
        Fn lhs = factor();
        for (;;) {
            skip_ws();
            if (consume('*')) {
                Fn rhs = factor();
                lhs = [lhs, rhs](double x, double t) { return lhs(x, t) * rhs(x, t); };
            } else if (consume('/')) {
                Fn rhs = factor();
                lhs = [lhs, rhs](double x, double t) { return lhs(x, t) / rhs(x, t); };
            } else {
                return lhs;
            }
        }
    }

    Fn factor() {
        skip_ws();
        if (consume('-')) {
            Fn inner = factor();
            return [inner](double x, double t) { return -inner(x, t); };
        }
        if (consume('+')) return factor();
        return primary();
    }

    Fn primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];

        if (consume('(')) {
            Fn inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return word();
        fail("expected a number, name, or parenthesized expression");
    }

    Fn number() {
        const char* begin = s_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - begin);
        return [v](double, double) { return v; };
    }

    Fn word() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        const std::string name = s_.substr(start, pos_ - start);

        if (name == "x") return [](double x, double) { return x; };
        if (name == "t") return [](double, double t) { return t; };
        if (name == "pi") return [](double, double) { return M_PI; };
        if (name == "sin" || name == "cos" || name == "exp") {
            skip_ws();
            expect('(');
            Fn arg = expr();
            expect(')');
            if (name == "sin")
                return [arg](double x, double t) { return std::sin(arg(x, t)); };
            if (name == "cos")
                return [arg](double x, double t) { return std::cos(arg(x, t)); };
            return [arg](double x, double t) { return std::exp(arg(x, t)); };
        }
        pos_ = start;
        fail("unknown name '" + name + "' (expected x, t, pi, sin, cos, or exp)");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& why) const {
        std::ostringstream os;
        os << "expression error at position " << pos_ + 1 << ": " << why;
        throw ValidationError(os.str());
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

std::function<double(double, double)> compile_expression(const std::string& text) {
    return Parser(text).parse();
}

} // namespace bolab
