#include "gl2/scalar_parse.hpp"

#include <cctype>
#include <stdexcept>

namespace gl2 {
namespace {

class Parser {
public:
    Parser(const std::string& text, const std::optional<std::set<std::string>>& allowed)
        : s_(text), allowed_(allowed) {}

    RatFunc run() {
        RatFunc v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("scalar parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RatFunc expr() {
        RatFunc v = term();
        while (true) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    RatFunc term() {
        RatFunc v = factor();
        while (true) {
            if (eat('*'))
                v *= factor();
            else if (eat('/'))
                v /= factor();
            else
                return v;
        }
    }

    RatFunc factor() {
        bool neg = false;
        while (true) {
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        RatFunc v = base();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("exponent must be a nonnegative integer");
            v = v.pow(static_cast<long>(read_uint()));
        }
        return neg ? -v : v;
    }

    unsigned long read_uint() {
        unsigned long n = 0;
        bool any = false;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            n = n * 10 + static_cast<unsigned long>(s_[pos_] - '0');
            ++pos_;
            any = true;
        }
        if (!any) fail("expected digits");
        return n;
    }

    RatFunc base() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            // Arbitrary precision integers.
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RatFunc(Rational::parse(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            if (name == "i") {
                RatFunc v{GaussRational::i()};
                if (pos_ < s_.size() && s_[pos_] == '(') {
                    ++pos_;
                    v *= expr();
                    if (!eat(')')) fail("expected ')'");
                }
                return v;
            }
            if (allowed_ && !allowed_->count(name)) fail("unknown variable '" + name + "'");
            return RatFunc::variable(name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    const std::optional<std::set<std::string>>& allowed_;
    size_t pos_ = 0;
};

}  // namespace

RatFunc parse_scalar(const std::string& text, const std::optional<std::set<std::string>>& allowed_vars) {
    return Parser(text, allowed_vars).run();
}

GaussRational parse_gauss(const std::string& text) {
    static const std::optional<std::set<std::string>> no_vars{std::set<std::string>{}};
    const RatFunc v = parse_scalar(text, no_vars);
    return v.constant_value();
}

}  // namespace gl2
