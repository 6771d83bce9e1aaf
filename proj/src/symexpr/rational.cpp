#include "chentype/symexpr/rational.hpp"

#include "chentype/errors.hpp"

#include <cctype>
#include <string>

namespace chentype {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

Rational pow10(long e)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty number");

    bool negative = false;
    std::string_view body = s;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed fraction '" + s + "'");
        Integer d(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        value = Rational(Integer(std::string(num), 10), d);
        value.canonicalize();
    } else {
        long exponent = 0;
        if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
            auto exp_text = body.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            if (!all_digits(exp_text) || exp_text.size() > 6) throw ParseError("malformed exponent in '" + s + "'");
            exponent = std::stol(std::string(exp_text)) * (exp_negative ? -1 : 1);
            body = body.substr(0, e);
        }
        std::string digits;
        long scale = 0;
        if (auto dot = body.find('.'); dot != std::string_view::npos) {
            auto whole = body.substr(0, dot);
            auto frac = body.substr(dot + 1);
            if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
                (whole.empty() && frac.empty()))
                throw ParseError("malformed decimal '" + s + "'");
            digits = std::string(whole) + std::string(frac);
            scale = static_cast<long>(frac.size());
        } else {
            if (!all_digits(body)) throw ParseError("malformed number '" + s + "'");
            digits = std::string(body);
        }
        value = Rational(Integer(digits, 10)) * pow10(exponent - scale);
        value.canonicalize();
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace chentype
