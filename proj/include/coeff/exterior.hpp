#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coeff/linalg.hpp"
#include "coeff/rational.hpp"

namespace coeff {

/// Default ceiling on the ambient generator count (2^20 basis blades).
inline constexpr int kDefaultGeneratorCap = 20;
/// Hard ceiling imposed by the 64-bit blade mask.
inline constexpr int kHardGeneratorCap = 30;

using BladeMask = std::uint64_t;

/// Basis monomial of the exterior algebra: a set of generator positions,
/// canonically read in ascending index order.
struct Blade {
    BladeMask mask = 0;

    int degree() const { return std::popcount(mask); }
    bool contains(int index) const { return (mask >> index) & 1; }
    std::vector<int> indices() const;
    static Blade from_indices(std::span<const int> idx);

    friend bool operator==(const Blade&, const Blade&) = default;
};

/// Canonical blade order: by degree, then by the index set read as a binary
/// number. Fixes every matrix row/column order in the project.
struct BladeOrder {
    bool operator()(const Blade& a, const Blade& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.mask < b.mask;
    }
};

/// All degree-p blades on m generators, in canonical order.
std::vector<Blade> blades_of_degree(int m, int p);

/// Product of two basis blades: sign 0 when the index sets intersect,
/// otherwise +-1 from the inversion count of the concatenated sequences.
struct BladeProduct {
    Blade blade;
    int sign;  // 0, +1 or -1
};
BladeProduct wedge_blades(Blade a, Blade b);

/// Sparse rational combination of blades over a fixed ambient generator set.
class Multivector {
public:
    Multivector() = default;
    explicit Multivector(int ambient) : ambient_(ambient) {}

    static Multivector scalar(int ambient, const Rational& c);
    static Multivector from_blade(int ambient, Blade b, const Rational& c = Rational(1));

    int ambient() const { return ambient_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Blade, Rational, BladeOrder>& terms() const { return terms_; }

    /// Common degree of all stored blades; nullopt for 0 and mixed elements.
    std::optional<int> homogeneous_degree() const;

    Rational coefficient(Blade b) const;
    void add_term(Blade b, const Rational& c);

    Multivector operator-() const;
    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    Multivector& operator*=(const Rational& c);

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(const Rational& c, Multivector v) { return v *= c; }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.ambient_ == b.ambient_ &&
               std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
    }

private:
    int ambient_ = 0;
    std::map<Blade, Rational, BladeOrder> terms_;
};

Multivector wedge(const Multivector& u, const Multivector& v);

/// Parses the shared form grammar:
///   form     := ['+'|'-'] term (('+'|'-') term)*
///   term     := [rational] monomial | rational
///   rational := integer ['/' positive-integer]
///   monomial := name ('^' name)*
/// Whitespace is ignored; an omitted coefficient means 1. A repeated
/// generator inside one monomial is rejected as a user error.
Multivector parse_form(std::string_view text, std::span<const std::string> generators);

/// Canonical rendering; parse_form(format_form(v)) == v.
std::string format_form(const Multivector& v, std::span<const std::string> generators);

std::string format_blade(Blade b, std::span<const std::string> generators);

}  // namespace coeff
