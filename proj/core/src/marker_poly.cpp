#include "qpart/marker_poly.hpp"

#include <stdexcept>

namespace qpart {

const char* marker_name(Marker m)
{
    switch (m) {
    case Marker::x: return "x";
    case Marker::y: return "y";
    case Marker::z: return "z";
    case Marker::a: return "a";
    case Marker::t: return "t";
    }
    return "?";
}

Monomial monomial_of(Marker m, int exponent)
{
    Monomial mono = kUnitMonomial;
    mono[static_cast<std::size_t>(m)] = exponent;
    return mono;
}

long long checked_add(long long a, long long b)
{
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("series coefficient overflows 64 bits");
    return r;
}

long long checked_mul(long long a, long long b)
{
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("series coefficient overflows 64 bits");
    return r;
}

MarkerPoly MarkerPoly::constant(long long c)
{
    MarkerPoly p;
    p.add_term(kUnitMonomial, c);
    return p;
}

MarkerPoly MarkerPoly::term(const Monomial& mono, long long c)
{
    MarkerPoly p;
    p.add_term(mono, c);
    return p;
}

MarkerPoly MarkerPoly::marker(Marker m)
{
    return term(monomial_of(m));
}

bool MarkerPoly::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first == kUnitMonomial
        && terms_.begin()->second == 1;
}

long long MarkerPoly::coefficient(const Monomial& mono) const
{
    auto it = terms_.find(mono);
    return it == terms_.end() ? 0 : it->second;
}

void MarkerPoly::add_term(const Monomial& mono, long long c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

MarkerPoly& MarkerPoly::operator+=(const MarkerPoly& o)
{
    for (const auto& [mono, c] : o.terms_)
        add_term(mono, c);
    return *this;
}

MarkerPoly& MarkerPoly::operator-=(const MarkerPoly& o)
{
    for (const auto& [mono, c] : o.terms_)
        add_term(mono, -c);
    return *this;
}

MarkerPoly operator+(MarkerPoly lhs, const MarkerPoly& rhs)
{
    lhs += rhs;
    return lhs;
}

MarkerPoly operator-(MarkerPoly lhs, const MarkerPoly& rhs)
{
    lhs -= rhs;
    return lhs;
}

MarkerPoly operator*(const MarkerPoly& lhs, const MarkerPoly& rhs)
{
    MarkerPoly prod;
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial mono;
            for (int i = 0; i < kMarkerCount; ++i)
                mono[static_cast<std::size_t>(i)] = ma[static_cast<std::size_t>(i)]
                                                  + mb[static_cast<std::size_t>(i)];
            prod.add_term(mono, checked_mul(ca, cb));
        }
    return prod;
}

MarkerPoly MarkerPoly::operator-() const
{
    MarkerPoly neg;
    for (const auto& [mono, c] : terms_)
        neg.terms_.emplace(mono, -c);
    return neg;
}

MarkerPoly MarkerPoly::substitute(Marker m, long long value) const
{
    const auto idx = static_cast<std::size_t>(m);
    MarkerPoly out;
    for (const auto& [mono, c] : terms_) {
        long long scaled = c;
        for (int e = 0; e < mono[idx]; ++e)
            scaled = checked_mul(scaled, value);
        Monomial collapsed = mono;
        collapsed[idx] = 0;
        out.add_term(collapsed, scaled);
    }
    return out;
}

void MarkerPoly::truncate(const MarkerCaps& caps)
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        bool drop = false;
        for (std::size_t i = 0; i < static_cast<std::size_t>(kMarkerCount); ++i)
            if (caps[i] >= 0 && it->first[i] > caps[i]) {
                drop = true;
                break;
            }
        it = drop ? terms_.erase(it) : std::next(it);
    }
}

bool MarkerPoly::nilpotent_under(const MarkerCaps& caps) const
{
    for (const auto& [mono, c] : terms_) {
        bool has_capped = false;
        for (std::size_t i = 0; i < static_cast<std::size_t>(kMarkerCount); ++i)
            if (caps[i] >= 0 && mono[i] > 0) {
                has_capped = true;
                break;
            }
        if (!has_capped)
            return false;
    }
    return true;
}

std::string MarkerPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        const long long mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0)
                out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string factors;
        for (std::size_t i = 0; i < static_cast<std::size_t>(kMarkerCount); ++i) {
            if (mono[i] == 0)
                continue;
            if (!factors.empty())
                factors += "*";
            factors += marker_name(static_cast<Marker>(i));
            if (mono[i] > 1)
                factors += "^" + std::to_string(mono[i]);
        }
        if (factors.empty())
            out += std::to_string(mag);
        else if (mag == 1)
            out += factors;
        else
            out += std::to_string(mag) + "*" + factors;
    }
    return out;
}

} // namespace qpart
