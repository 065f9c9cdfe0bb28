#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace qpart {

// The fixed marker set. Markers track combinatorial statistics inside
// series coefficients: x and y count red and green parts, z counts the
// auxiliary statistic j, a counts parts of strict partitions, t is the
// expansion variable of the q-binomial theorem.
inline constexpr int kMarkerCount = 5;

enum class Marker : int { x = 0, y = 1, z = 2, a = 3, t = 4 };

const char* marker_name(Marker m);

// Exponent vector over (x, y, z, a, t).
using Monomial = std::array<int, kMarkerCount>;

inline constexpr Monomial kUnitMonomial{0, 0, 0, 0, 0};

Monomial monomial_of(Marker m, int exponent = 1);

// Optional per-marker exponent caps (-1 = uncapped). Multiplication in a
// capped ring simply drops monomials beyond a cap, which makes capped
// markers nilpotent and finite geometric inversion legal.
using MarkerCaps = std::array<int, kMarkerCount>;

inline constexpr MarkerCaps kNoCaps{-1, -1, -1, -1, -1};

// Sparse polynomial with exact 64-bit integer coefficients over the five
// markers. Zero coefficients are never stored. All arithmetic is checked:
// coefficient overflow throws std::overflow_error rather than wrapping.
class MarkerPoly {
public:
    MarkerPoly() = default;

    static MarkerPoly constant(long long c);
    static MarkerPoly term(const Monomial& mono, long long c = 1);
    static MarkerPoly marker(Marker m);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const noexcept { return terms_.size(); }

    long long coefficient(const Monomial& mono) const;
    long long constant_coefficient() const { return coefficient(kUnitMonomial); }

    const std::map<Monomial, long long>& terms() const noexcept { return terms_; }

    void add_term(const Monomial& mono, long long c);

    MarkerPoly& operator+=(const MarkerPoly& o);
    MarkerPoly& operator-=(const MarkerPoly& o);
    friend MarkerPoly operator+(MarkerPoly lhs, const MarkerPoly& rhs);
    friend MarkerPoly operator-(MarkerPoly lhs, const MarkerPoly& rhs);
    friend MarkerPoly operator*(const MarkerPoly& lhs, const MarkerPoly& rhs);
    MarkerPoly operator-() const;

    // Substitute an integer value for a marker (collapsing its exponent).
    MarkerPoly substitute(Marker m, long long value) const;

    // Drop every term whose exponent exceeds a cap.
    void truncate(const MarkerCaps& caps);

    // True when every term has a positive exponent in some capped marker,
    // i.e. the polynomial is nilpotent in the capped ring.
    bool nilpotent_under(const MarkerCaps& caps) const;

    // Canonical rendering: terms in ascending exponent-vector order, e.g.
    // "1 + 4*x*y - 2*y^2". The zero polynomial renders as "0".
    std::string to_string() const;

    friend bool operator==(const MarkerPoly&, const MarkerPoly&) = default;

private:
    std::map<Monomial, long long> terms_;
};

// Checked integer helpers shared by the series engine.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

} // namespace qpart
