#include "singan/rational.hpp"

#include <sstream>

namespace singan {

Rational parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    }
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string to_string(const Integer& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

}  // namespace singan
