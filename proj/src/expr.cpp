#include "xc/expr.hpp"

#include <cctype>
#include <string>

namespace xc {

namespace {

class Parser {
public:
    Parser(std::string_view text, const ThreefoldModel& model)
        : text_(text), model_(model) {}

    ChowElement run() {
        ChowElement e = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view text_;
    const ThreefoldModel& model_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg + " at offset " + std::to_string(pos_ + 1), pos_ + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char ch) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ChowElement expr() {
        ChowElement acc = term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    ChowElement term() {
        ChowElement acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    ChowElement factor() {
        bool neg = eat('-');
        ChowElement base = atom();
        if (eat('^')) {
            unsigned long long e = parse_uint("exponent");
            ChowElement p = model_.one();
            ChowElement sq = base;
            while (e) {
                if (e & 1) p = p * sq;
                e >>= 1;
                if (e) sq = sq * sq;
            }
            base = p;
        }
        return neg ? -base : base;
    }

    ChowElement atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            ChowElement e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) return rational_literal();
        if (text_.compare(pos_, 2, "xi") == 0) {
            pos_ += 2;
            return model_.xi();
        }
        if (ch == 'f') {
            ++pos_;
            return model_.f();
        }
        if (ch == 'h') {
            ++pos_;
            return model_.polarization();
        }
        if (ch == 'K') {
            ++pos_;
            return model_.canonical_divisor();
        }
        fail("expected 'xi', 'f', 'h', 'K', a rational, or '('");
    }

    unsigned long long parse_uint(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(std::string("expected ") + what);
        unsigned long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > 100000ull) fail(std::string(what) + " too large");
            v = v * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    ChowElement rational_literal() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        BigInt num = BigInt::from_string(text_.substr(start, pos_ - start));
        BigInt den(1);
        // '/' occurs only inside rational literals, so looking past
        // whitespace for it is unambiguous.
        size_t mark = pos_;
        if (eat('/')) {
            skip_ws();
            size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (dstart == pos_) fail("expected denominator");
            den = BigInt::from_string(text_.substr(dstart, pos_ - dstart));
            if (den.is_zero()) {
                pos_ = dstart;
                fail("zero denominator in rational literal");
            }
        } else {
            pos_ = mark;
        }
        return Rational(std::move(num), std::move(den)) * model_.one();
    }
};

} // namespace

ChowElement parse_expression(std::string_view text, const ThreefoldModel& model) {
    return Parser(text, model).run();
}

} // namespace xc
