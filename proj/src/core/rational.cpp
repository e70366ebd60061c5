#include "core/rational.hpp"

#include <cctype>
#include <ostream>

#include "core/error.hpp"

namespace wfa {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw Error(ErrorCode::Singular, "rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) {
    value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    // Validate the shape ourselves; mpq_set_str is more permissive than the
    // documented format (it accepts signed or zero denominators).
    size_t pos = 0;
    auto fail = [&](const std::string& why) -> Rational {
        throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "': " + why);
    };
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
        pos++;
    size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        pos++;
    if (pos == digits_start)
        return fail("expected digits");
    if (pos < text.size()) {
        if (text[pos] != '/')
            return fail("unexpected character");
        pos++;
        size_t den_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            pos++;
        if (pos == den_start || pos != text.size())
            return fail("expected positive denominator");
        bool all_zero = true;
        for (size_t i = den_start; i < text.size(); i++)
            if (text[i] != '0') { all_zero = false; break; }
        if (all_zero)
            return fail("zero denominator");
    }
    std::string s(text);
    if (s[0] == '+')
        s.erase(0, 1);
    mpq_class q(s, 10);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::to_string() const {
    return value_.get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error(ErrorCode::Singular, "division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace wfa
