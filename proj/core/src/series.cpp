#include "qpart/series.hpp"

#include <stdexcept>
#include <string>

namespace qpart {

TruncatedSeries::TruncatedSeries(int order, const MarkerCaps& caps)
    : order_(order), caps_(caps), coeffs_(static_cast<std::size_t>(order) + 1)
{
    if (order < 0)
        throw std::invalid_argument("series order must be non-negative");
}

TruncatedSeries TruncatedSeries::unit(int order, const MarkerCaps& caps)
{
    TruncatedSeries s(order, caps);
    s.coeffs_[0] = MarkerPoly::constant(1);
    return s;
}

const MarkerPoly& TruncatedSeries::at(int q_exp) const
{
    if (q_exp < 0 || q_exp > order_)
        throw std::out_of_range("q exponent " + std::to_string(q_exp)
                                + " beyond truncation order " + std::to_string(order_));
    return coeffs_[static_cast<std::size_t>(q_exp)];
}

void TruncatedSeries::set(int q_exp, MarkerPoly p)
{
    if (q_exp < 0 || q_exp > order_)
        throw std::out_of_range("q exponent beyond truncation order");
    p.truncate(caps_);
    coeffs_[static_cast<std::size_t>(q_exp)] = std::move(p);
}

void TruncatedSeries::add_term(int q_exp, const Monomial& mono, long long c)
{
    if (q_exp < 0 || q_exp > order_)
        throw std::out_of_range("q exponent beyond truncation order");
    for (std::size_t i = 0; i < static_cast<std::size_t>(kMarkerCount); ++i)
        if (caps_[i] >= 0 && mono[i] > caps_[i])
            return;
    coeffs_[static_cast<std::size_t>(q_exp)].add_term(mono, c);
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const
{
    if (order_ != o.order_)
        throw std::invalid_argument("series order mismatch: " + std::to_string(order_)
                                    + " vs " + std::to_string(o.order_));
    if (caps_ != o.caps_)
        throw std::invalid_argument("series marker-cap mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    check_compatible(o);
    for (int n = 0; n <= order_; ++n)
        coeffs_[static_cast<std::size_t>(n)] += o.coeffs_[static_cast<std::size_t>(n)];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o)
{
    check_compatible(o);
    for (int n = 0; n <= order_; ++n)
        coeffs_[static_cast<std::size_t>(n)] -= o.coeffs_[static_cast<std::size_t>(n)];
    return *this;
}

TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs)
{
    lhs += rhs;
    return lhs;
}

TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs)
{
    lhs -= rhs;
    return lhs;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs)
{
    lhs.check_compatible(rhs);
    TruncatedSeries prod(lhs.order_, lhs.caps_);
    for (int i = 0; i <= lhs.order_; ++i) {
        if (lhs.coeffs_[static_cast<std::size_t>(i)].is_zero())
            continue;
        for (int j = 0; i + j <= lhs.order_; ++j) {
            if (rhs.coeffs_[static_cast<std::size_t>(j)].is_zero())
                continue;
            MarkerPoly term = lhs.coeffs_[static_cast<std::size_t>(i)]
                            * rhs.coeffs_[static_cast<std::size_t>(j)];
            term.truncate(prod.caps_);
            prod.coeffs_[static_cast<std::size_t>(i + j)] += term;
        }
    }
    return prod;
}

void TruncatedSeries::mul_one_minus(const Monomial& mono, long long c, int shift)
{
    if (shift < 0)
        throw std::invalid_argument("mul_one_minus: negative q shift");
    if (shift > order_)
        return; // factor is 1 up to the truncation order
    // In-place multiply by (1 - c*mono*q^shift), descending so untouched
    // lower coefficients feed the update.
    for (int n = order_; n >= shift; --n) {
        MarkerPoly moved = coeffs_[static_cast<std::size_t>(n - shift)]
                         * MarkerPoly::term(mono, c);
        moved.truncate(caps_);
        coeffs_[static_cast<std::size_t>(n)] -= moved;
    }
}

void TruncatedSeries::mul_term(const Monomial& mono, long long c, int shift)
{
    if (shift < 0)
        throw std::invalid_argument("mul_term: negative q shift");
    for (int n = order_; n >= 0; --n) {
        if (n >= shift) {
            MarkerPoly moved = coeffs_[static_cast<std::size_t>(n - shift)]
                             * MarkerPoly::term(mono, c);
            moved.truncate(caps_);
            coeffs_[static_cast<std::size_t>(n)] = std::move(moved);
        } else {
            coeffs_[static_cast<std::size_t>(n)] = MarkerPoly{};
        }
    }
}

TruncatedSeries TruncatedSeries::inverse() const
{
    // The constant coefficient must be 1 + nu with nu nilpotent under the
    // caps; then 1/(1 + nu) is the finite geometric series in -nu.
    MarkerPoly nu = coeffs_[0];
    nu.add_term(kUnitMonomial, -1);
    if (!nu.nilpotent_under(caps_))
        throw std::domain_error("series inverse requires constant term 1 "
                                "(up to capped markers); got "
                                + coeffs_[0].to_string());

    MarkerPoly c0_inv = MarkerPoly::constant(1);
    MarkerPoly power = MarkerPoly::constant(1);
    while (true) {
        power = power * (-nu);
        power.truncate(caps_);
        if (power.is_zero())
            break;
        c0_inv += power;
    }

    TruncatedSeries inv(order_, caps_);
    inv.coeffs_[0] = c0_inv;
    for (int n = 1; n <= order_; ++n) {
        // b_n = -c0_inv * sum_{i=1..n} a_i b_{n-i}
        MarkerPoly acc;
        for (int i = 1; i <= n; ++i) {
            if (coeffs_[static_cast<std::size_t>(i)].is_zero())
                continue;
            acc += coeffs_[static_cast<std::size_t>(i)]
                 * inv.coeffs_[static_cast<std::size_t>(n - i)];
        }
        MarkerPoly bn = -(c0_inv * acc);
        bn.truncate(caps_);
        inv.coeffs_[static_cast<std::size_t>(n)] = std::move(bn);
    }
    return inv;
}

TruncatedSeries TruncatedSeries::substitute(Marker m, long long value) const
{
    TruncatedSeries out(order_, caps_);
    for (int n = 0; n <= order_; ++n)
        out.coeffs_[static_cast<std::size_t>(n)] =
            coeffs_[static_cast<std::size_t>(n)].substitute(m, value);
    return out;
}

TruncatedSeries pochhammer(const PochhammerSpec& spec, int order, const MarkerCaps& caps)
{
    if (spec.modulus < 1)
        throw std::invalid_argument("pochhammer: modulus must be >= 1");
    if (spec.q_offset < 0)
        throw std::invalid_argument("pochhammer: negative q offset");
    if (spec.length && *spec.length < 0)
        throw std::invalid_argument("pochhammer: negative length");

    TruncatedSeries prod = TruncatedSeries::unit(order, caps);
    for (long long i = 0;; ++i) {
        if (spec.length && i >= *spec.length)
            break;
        const long long shift = spec.q_offset + i * spec.modulus;
        if (shift > order)
            break; // this and every later factor is 1 modulo q^{order+1}
        prod.mul_one_minus(spec.monomial, spec.scalar, static_cast<int>(shift));
    }
    return prod;
}

long long coeff(const TruncatedSeries& s, int q_exp, const Monomial& mono)
{
    return s.at(q_exp).coefficient(mono);
}

std::optional<SeriesMismatch> first_difference(const TruncatedSeries& a,
                                               const TruncatedSeries& b)
{
    const int order = std::min(a.order(), b.order());
    for (int n = 0; n <= order; ++n) {
        const auto& pa = a.at(n);
        const auto& pb = b.at(n);
        if (pa == pb)
            continue;
        // Walk both term maps to find the smallest differing monomial.
        auto ia = pa.terms().begin();
        auto ib = pb.terms().begin();
        while (ia != pa.terms().end() || ib != pb.terms().end()) {
            if (ib == pb.terms().end() || (ia != pa.terms().end() && ia->first < ib->first)) {
                return SeriesMismatch{n, ia->first, ia->second, 0};
            }
            if (ia == pa.terms().end() || ib->first < ia->first) {
                return SeriesMismatch{n, ib->first, 0, ib->second};
            }
            if (ia->second != ib->second)
                return SeriesMismatch{n, ia->first, ia->second, ib->second};
            ++ia;
            ++ib;
        }
    }
    return std::nullopt;
}

std::string dump(const TruncatedSeries& s)
{
    std::string out;
    for (int n = 0; n <= s.order(); ++n) {
        out += "q^" + std::to_string(n) + ": " + s.at(n).to_string() + "\n";
    }
    return out;
}

} // namespace qpart
