#include "coeff/rational.hpp"

#include <cctype>
#include <ostream>

namespace coeff {

Rational Rational::from_string(std::string_view s) {
    auto bad = [&] {
        throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
    };
    if (s.empty()) bad();
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) bad();
    mpz_class num(std::string(s.substr(0, i)));
    mpz_class den(1);
    if (i < s.size()) {
        if (s[i] != '/') bad();
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size()) bad();
        den = mpz_class(std::string(s.substr(den_begin)));
        if (den == 0) bad();
    }
    return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
    std::string out = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        out += '/';
        out += v_.get_den().get_str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace coeff
