#include "chentype/symexpr/parse.hpp"

#include "chentype/errors.hpp"

#include <cctype>
#include <string>

namespace chentype {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse()
    {
        Expr e = sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("expression parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool accept_word(std::string_view w)
    {
        skip_space();
        if (text_.substr(pos_, w.size()) != w) return false;
        const std::size_t end = pos_ + w.size();
        if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) return false;
        pos_ = end;
        return true;
    }

    Expr sum()
    {
        Expr e = product();
        for (;;) {
            if (accept('+'))
                e = e + product();
            else if (accept('-'))
                e = e - product();
            else
                return e;
        }
    }

    Expr product()
    {
        Expr e = unary();
        for (;;) {
            if (accept('*'))
                e = e * unary();
            else if (accept('/'))
                e = e / unary();
            else
                return e;
        }
    }

    Expr unary()
    {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Expr power()
    {
        Expr base = primary();
        if (!accept('^')) return base;
        int sign = 1;
        bool paren = accept('(');
        if (accept('-')) sign = -1;
        int n = integer();
        if (paren) expect(')');
        return pow(base, sign * n);
    }

    int integer()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        const auto digits = text_.substr(start, pos_ - start);
        if (digits.size() > 6) fail("exponent too large");
        return std::stoi(std::string(digits));
    }

    Expr number()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                pos_ = look;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        return Expr(parse_rational(text_.substr(start, pos_ - start)));
    }

    int derivative_marks()
    {
        int order = 0;
        while (pos_ < text_.size() && text_[pos_] == '\'') {
            ++pos_;
            ++order;
        }
        if (order == 0 && pos_ < text_.size() && text_[pos_] == '_') {
            ++pos_;
            order = integer();
        }
        if (order > kMaxDerivativeOrder) fail("derivative order above " + std::to_string(kMaxDerivativeOrder));
        return order;
    }

    Expr primary()
    {
        skip_space();
        if (pos_ == text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (accept('(')) {
            Expr e = sum();
            expect(')');
            return e;
        }
        for (auto [word, is_cos] : {std::pair{"cos", true}, {"sin", false}}) {
            if (accept_word(word)) {
                expect('(');
                if (!accept_word("phi")) fail("cos and sin take the argument phi");
                expect(')');
                return is_cos ? cos_phi() : sin_phi();
            }
        }
        if (accept_word("delta")) return delta();
        if (accept_word("beta")) return beta();
        if (accept_word("r")) return radius();
        for (auto [word, is_kappa] : {std::pair{"kappa", true}, {"tau", false}}) {
            skip_space();
            if (text_.substr(pos_, std::string_view(word).size()) == word) {
                pos_ += std::string_view(word).size();
                const int order = derivative_marks();
                if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])))) fail("unknown name");
                return is_kappa ? kappa(order) : tau(order);
            }
        }
        fail("unknown name");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

} // namespace chentype
