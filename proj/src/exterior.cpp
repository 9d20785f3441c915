#include "coeff/exterior.hpp"

#include <cctype>
#include <stdexcept>

namespace coeff {

std::vector<int> Blade::indices() const {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
        if ((mask >> i) & 1) out.push_back(i);
    return out;
}

Blade Blade::from_indices(std::span<const int> idx) {
    Blade b;
    for (int i : idx) {
        if (i < 0 || i >= 64) throw std::out_of_range("blade index out of range");
        b.mask |= BladeMask{1} << i;
    }
    return b;
}

std::vector<Blade> blades_of_degree(int m, int p) {
    std::vector<Blade> out;
    if (p < 0 || p > m) return out;
    if (p == 0) {
        out.push_back(Blade{0});
        return out;
    }
    // Gosper's hack walks fixed-popcount masks in increasing numeric order,
    // which is exactly the canonical blade order within one degree.
    BladeMask v = (BladeMask{1} << p) - 1;
    const BladeMask limit = BladeMask{1} << m;
    while (v < limit) {
        out.push_back(Blade{v});
        const BladeMask t = v | (v - 1);
        v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

BladeProduct wedge_blades(Blade a, Blade b) {
    if (a.mask & b.mask) return {Blade{0}, 0};
    int inversions = 0;
    for (BladeMask rest = a.mask; rest != 0; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        inversions += std::popcount(b.mask & ((BladeMask{1} << i) - 1));
    }
    return {Blade{a.mask | b.mask}, (inversions % 2 == 0) ? 1 : -1};
}

Multivector Multivector::scalar(int ambient, const Rational& c) {
    Multivector v(ambient);
    v.add_term(Blade{0}, c);
    return v;
}

Multivector Multivector::from_blade(int ambient, Blade b, const Rational& c) {
    Multivector v(ambient);
    if (b.mask >= (BladeMask{1} << ambient))
        throw std::invalid_argument("blade outside ambient generator set");
    v.add_term(b, c);
    return v;
}

std::optional<int> Multivector::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree();
    for (const auto& [b, c] : terms_)
        if (b.degree() != d) return std::nullopt;
    return d;
}

Rational Multivector::coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(Blade b, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Multivector Multivector::operator-() const {
    Multivector out(ambient_);
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
    return out;
}

Multivector& Multivector::operator+=(const Multivector& o) {
    if (ambient_ != o.ambient_)
        throw std::invalid_argument("multivector ambient mismatch");
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
    if (ambient_ != o.ambient_)
        throw std::invalid_argument("multivector ambient mismatch");
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
}

Multivector& Multivector::operator*=(const Rational& c) {
    if (c.is_zero()) {
        *this = Multivector(ambient_);
        return *this;
    }
    for (auto& [b, v] : terms_) v *= c;
    return *this;
}

Multivector wedge(const Multivector& u, const Multivector& v) {
    if (u.ambient() != v.ambient())
        throw std::invalid_argument("wedge: multivector ambient mismatch");
    Multivector out(u.ambient());
    for (const auto& [bu, cu] : u.terms()) {
        for (const auto& [bv, cv] : v.terms()) {
            const BladeProduct p = wedge_blades(bu, bv);
            if (p.sign == 0) continue;
            out.add_term(p.blade, Rational(p.sign) * cu * cv);
        }
    }
    return out;
}

namespace {

struct Token {
    enum Kind { Integer, Name, Plus, Minus, Caret, Slash, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Integer, std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_'))
                ++j;
            out.push_back({Token::Name, std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        switch (ch) {
            case '+': out.push_back({Token::Plus, "+", i}); break;
            case '-': out.push_back({Token::Minus, "-", i}); break;
            case '^': out.push_back({Token::Caret, "^", i}); break;
            case '/': out.push_back({Token::Slash, "/", i}); break;
            default:
                throw std::invalid_argument("unexpected character '" + std::string(1, ch) +
                                            "' at position " + std::to_string(i));
        }
        ++i;
    }
    out.push_back({Token::End, "", text.size()});
    return out;
}

class FormParser {
public:
    FormParser(std::string_view text, std::span<const std::string> generators)
        : tokens_(tokenize(text)), generators_(generators) {}

    Multivector parse() {
        const int m = static_cast<int>(generators_.size());
        Multivector result(m);
        int sign = 1;
        if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            sign = (next().kind == Token::Minus) ? -1 : 1;
        }
        result += parse_term(sign);
        while (peek().kind != Token::End) {
            const Token& t = next();
            if (t.kind == Token::Plus)
                result += parse_term(1);
            else if (t.kind == Token::Minus)
                result += parse_term(-1);
            else
                fail(t, "expected '+' or '-' between terms");
        }
        return result;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const Token& t, const std::string& what) const {
        throw std::invalid_argument(what + " at position " + std::to_string(t.pos));
    }

    Rational parse_rational() {
        const Token& num = next();  // caller checked it is an Integer
        if (peek().kind == Token::Slash) {
            next();
            const Token& den = peek();
            if (den.kind != Token::Integer) fail(den, "malformed rational: expected denominator");
            next();
            const Rational r = Rational::from_string(num.text + "/" + den.text);
            return r;
        }
        return Rational::from_string(num.text);
    }

    Multivector parse_monomial(const Rational& coef) {
        const int m = static_cast<int>(generators_.size());
        Multivector acc = Multivector::scalar(m, coef);
        std::vector<bool> seen(m, false);
        bool first = true;
        while (true) {
            const Token& t = peek();
            if (t.kind != Token::Name) {
                if (first) fail(t, "expected generator name");
                break;
            }
            next();
            int index = -1;
            for (int i = 0; i < m; ++i)
                if (generators_[i] == t.text) {
                    index = i;
                    break;
                }
            if (index < 0) fail(t, "unknown generator '" + t.text + "'");
            if (seen[index]) fail(t, "repeated generator '" + t.text + "' in monomial");
            seen[index] = true;
            acc = wedge(acc, Multivector::from_blade(m, Blade{BladeMask{1} << index}));
            first = false;
            if (peek().kind == Token::Caret)
                next();
            else
                break;
        }
        return acc;
    }

    Multivector parse_term(int sign) {
        const Token& t = peek();
        Rational coef(sign);
        if (t.kind == Token::Integer) {
            coef = Rational(sign) * parse_rational();
            if (peek().kind != Token::Name)
                return Multivector::scalar(static_cast<int>(generators_.size()), coef);
            return parse_monomial(coef);
        }
        if (t.kind == Token::Name) return parse_monomial(coef);
        fail(t, "expected term");
    }

    std::vector<Token> tokens_;
    std::span<const std::string> generators_;
    std::size_t pos_ = 0;
};

}  // namespace

Multivector parse_form(std::string_view text, std::span<const std::string> generators) {
    return FormParser(text, generators).parse();
}

std::string format_blade(Blade b, std::span<const std::string> generators) {
    if (b.degree() == 0) return "1";
    std::string out;
    for (int i : b.indices()) {
        if (!out.empty()) out += '^';
        if (i >= static_cast<int>(generators.size()))
            throw std::out_of_range("blade index outside generator list");
        out += generators[i];
    }
    return out;
}

std::string format_form(const Multivector& v, std::span<const std::string> generators) {
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [blade, c] : v.terms()) {
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = (mag == Rational(1));
        if (blade.degree() == 0) {
            out += mag.to_string();
        } else {
            if (!unit) {
                out += mag.to_string();
                out += ' ';
            }
            out += format_blade(blade, generators);
        }
    }
    return out;
}

}  // namespace coeff
