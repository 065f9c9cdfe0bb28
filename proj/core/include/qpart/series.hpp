#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpart/marker_poly.hpp"

namespace qpart {

// Formal power series in q truncated at a fixed order N, with MarkerPoly
// coefficients. Ring operations require both operands to share the order
// and the marker caps; terms beyond the truncation are discarded
// deterministically.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order, const MarkerCaps& caps = kNoCaps);

    static TruncatedSeries unit(int order, const MarkerCaps& caps = kNoCaps);

    int order() const noexcept { return order_; }
    const MarkerCaps& caps() const noexcept { return caps_; }

    const MarkerPoly& at(int q_exp) const;
    void set(int q_exp, MarkerPoly p);
    void add_term(int q_exp, const Monomial& mono, long long c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs);
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs);

    // Cauchy product, truncated at the common order.
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

    // Multiply in place by the polynomial factor (1 - c * mono * q^shift).
    // This is the building block of Pochhammer products and cheaper than a
    // full Cauchy product.
    void mul_one_minus(const Monomial& mono, long long c, int shift);

    // Multiply by a single term c * mono * q^shift.
    void mul_term(const Monomial& mono, long long c, int shift);

    // Multiplicative inverse to order N. The constant coefficient must be
    // 1 plus (at most) terms that are nilpotent under the caps; otherwise
    // std::domain_error.
    TruncatedSeries inverse() const;

    TruncatedSeries substitute(Marker m, long long value) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    int order_ = 0;
    MarkerCaps caps_ = kNoCaps;
    std::vector<MarkerPoly> coeffs_;

    void check_compatible(const TruncatedSeries& o) const;
};

// The base of a q-Pochhammer symbol (b; q^modulus)_length with
// b = scalar * mono * q^q_offset. An unset length means the infinite
// product, which auto-truncates at the first factor whose minimum
// q-exponent exceeds the series order.
struct PochhammerSpec {
    long long scalar = 1;
    Monomial monomial = kUnitMonomial;
    int q_offset = 1;
    int modulus = 1;
    std::optional<long long> length; // nullopt = infinite
};

TruncatedSeries pochhammer(const PochhammerSpec& spec, int order,
                           const MarkerCaps& caps = kNoCaps);

// Exact coefficient of mono * q^q_exp; 0 when absent. Throws
// std::out_of_range when q_exp exceeds the truncation order.
long long coeff(const TruncatedSeries& s, int q_exp, const Monomial& mono);

struct SeriesMismatch {
    int q_exp = 0;
    Monomial monomial = kUnitMonomial;
    long long lhs = 0;
    long long rhs = 0;
};

// First differing (q-exponent, monomial) pair, scanning q ascending, or
// empty when the series agree.
std::optional<SeriesMismatch> first_difference(const TruncatedSeries& a,
                                               const TruncatedSeries& b);

// One line per q-exponent: "q^n: <poly>".
std::string dump(const TruncatedSeries& s);

} // namespace qpart
