#include "ergocap/rational.hpp"

#include "ergocap/errors.hpp"

#include <cctype>

namespace ergocap {

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text, true))
            throw InputError("malformed rational: '" + text + "'");
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num, true) || !is_integer_token(den, false))
        throw InputError("malformed rational: '" + text + "'");
    Integer d(den);
    if (d == 0) throw InputError("zero denominator in rational: '" + text + "'");
    return Rational(Integer(num), d);
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace ergocap
