#include "qpart/gf.hpp"

#include <vector>

namespace qpart {

namespace {

// 1 / (q^start; q^step)_count, truncated at order.
TruncatedSeries inv_pochhammer(int start, int step, long long count, int order,
                               const MarkerCaps& caps = kNoCaps)
{
    PochhammerSpec spec;
    spec.q_offset = start;
    spec.modulus = step;
    spec.length = count;
    return pochhammer(spec, order, caps).inverse();
}

// In-place multiply by prod_{i=1..m} (x + y q^i): the color choice for
// each of m parts, red contributing x and green contributing y q^i. This
// is the polynomial realization of (-yq/x)_m x^m.
void mul_color_factors(TruncatedSeries& s, int m)
{
    const Monomial mx = monomial_of(Marker::x);
    const Monomial my = monomial_of(Marker::y);
    for (int i = 1; i <= m; ++i) {
        TruncatedSeries shifted = s;
        shifted.mul_term(my, 1, i);
        s.mul_term(mx, 1, 0);
        s += shifted;
    }
}

} // namespace

TruncatedSeries gf_L1_rhs(int order)
{
    TruncatedSeries sum(order);
    for (int m = 0;; ++m) {
        const long long tri = static_cast<long long>(m) * (m + 1) / 2;
        if (tri > order)
            break;
        TruncatedSeries term = inv_pochhammer(1, 1, m, order);
        mul_color_factors(term, m);
        term.mul_term(kUnitMonomial, 1, static_cast<int>(tri));
        sum += term;
    }
    return sum;
}

TruncatedSeries gf_L2_rhs(int order)
{
    TruncatedSeries sum(order);
    for (int m = 0;; ++m) {
        const long long sq = static_cast<long long>(m) * m;
        if (sq > order)
            break;
        TruncatedSeries term = inv_pochhammer(1, 1, m, order);
        mul_color_factors(term, m);
        term.mul_term(kUnitMonomial, 1, static_cast<int>(sq));
        sum += term;
    }
    return sum;
}

namespace {

long long a_exponent(int k, int l)
{
    // C(k+l+1, 2) + C(l+1, 2)
    const long long kl = k + l;
    return kl * (kl + 1) / 2 + static_cast<long long>(l) * (l + 1) / 2;
}

} // namespace

TruncatedSeries gf_A_rhs(int order)
{
    TruncatedSeries sum(order);
    for (int k = 0; a_exponent(k, 0) <= order; ++k) {
        const TruncatedSeries inv_k = inv_pochhammer(1, 1, k, order);
        for (int l = 0; a_exponent(k, l) <= order; ++l) {
            TruncatedSeries term = inv_k * inv_pochhammer(1, 1, l, order);
            Monomial mono = kUnitMonomial;
            mono[static_cast<std::size_t>(Marker::x)] = k;
            mono[static_cast<std::size_t>(Marker::y)] = l;
            term.mul_term(mono, 1, static_cast<int>(a_exponent(k, l)));
            sum += term;
        }
    }
    return sum;
}

TruncatedSeries gf_A_refined_rhs(int order)
{
    TruncatedSeries sum(order);
    for (int k = 0; a_exponent(k, 0) <= order; ++k) {
        const TruncatedSeries inv_k = inv_pochhammer(1, 1, k, order);
        for (int l = 0; a_exponent(k, l) <= order; ++l) {
            // (-zq;q)_l marks with z each red part at most l.
            PochhammerSpec zq;
            zq.scalar = -1;
            zq.monomial = monomial_of(Marker::z);
            zq.q_offset = 1;
            zq.length = l;
            TruncatedSeries term = pochhammer(zq, order);
            term = term * inv_k;
            term = term * inv_pochhammer(2, 2, l, order);
            Monomial mono = kUnitMonomial;
            mono[static_cast<std::size_t>(Marker::x)] = k;
            mono[static_cast<std::size_t>(Marker::y)] = l;
            term.mul_term(mono, 1, static_cast<int>(a_exponent(k, l)));
            sum += term;
        }
    }
    return sum;
}

std::pair<TruncatedSeries, TruncatedSeries> lebesgue_sides(int order)
{
    TruncatedSeries lhs(order);
    for (int n = 0;; ++n) {
        const long long tri = static_cast<long long>(n) * (n + 1) / 2;
        if (tri > order)
            break;
        PochhammerSpec zq;
        zq.scalar = -1;
        zq.monomial = monomial_of(Marker::z);
        zq.q_offset = 1;
        zq.length = n;
        TruncatedSeries term = pochhammer(zq, order);
        term = term * inv_pochhammer(1, 1, n, order);
        term.mul_term(kUnitMonomial, 1, static_cast<int>(tri));
        lhs += term;
    }

    PochhammerSpec q_inf;
    q_inf.scalar = -1;
    q_inf.q_offset = 1;
    TruncatedSeries rhs = pochhammer(q_inf, order);
    PochhammerSpec zq2_inf;
    zq2_inf.scalar = -1;
    zq2_inf.monomial = monomial_of(Marker::z);
    zq2_inf.q_offset = 2;
    zq2_inf.modulus = 2;
    rhs = rhs * pochhammer(zq2_inf, order);

    return {lhs, rhs};
}

std::pair<TruncatedSeries, TruncatedSeries> sylvester_sides(int order)
{
    PochhammerSpec aq_inf;
    aq_inf.scalar = -1;
    aq_inf.monomial = monomial_of(Marker::a);
    aq_inf.q_offset = 1;
    TruncatedSeries lhs = pochhammer(aq_inf, order);

    TruncatedSeries rhs = TruncatedSeries::unit(order);
    for (int k = 1;; ++k) {
        const long long penta = (3LL * k * k - k) / 2;
        if (penta > order)
            break;
        PochhammerSpec aq_k;
        aq_k.scalar = -1;
        aq_k.monomial = monomial_of(Marker::a);
        aq_k.q_offset = 1;
        aq_k.length = k - 1;
        TruncatedSeries term = pochhammer(aq_k, order);
        term = term * inv_pochhammer(1, 1, k, order);
        // times (1 + a q^{2k})
        TruncatedSeries tail = term;
        tail.mul_term(monomial_of(Marker::a), 1, 2 * k);
        term += tail;
        term.mul_term(monomial_of(Marker::a, k), 1, static_cast<int>(penta));
        rhs += term;
    }
    return {lhs, rhs};
}

std::pair<TruncatedSeries, TruncatedSeries> qbinomial_sides(int order, int t_order)
{
    MarkerCaps caps = kNoCaps;
    caps[static_cast<std::size_t>(Marker::t)] = t_order;

    TruncatedSeries lhs(order, caps);
    for (int n = 0; n <= t_order; ++n) {
        PochhammerSpec a_n;
        a_n.monomial = monomial_of(Marker::a);
        a_n.q_offset = 0;
        a_n.length = n;
        TruncatedSeries term = pochhammer(a_n, order, caps);
        term = term * inv_pochhammer(1, 1, n, order, caps);
        term.mul_term(monomial_of(Marker::t, n), 1, 0);
        lhs += term;
    }

    PochhammerSpec at_inf;
    at_inf.monomial = kUnitMonomial;
    at_inf.monomial[static_cast<std::size_t>(Marker::a)] = 1;
    at_inf.monomial[static_cast<std::size_t>(Marker::t)] = 1;
    at_inf.q_offset = 0;
    TruncatedSeries rhs = pochhammer(at_inf, order, caps);

    PochhammerSpec t_inf;
    t_inf.monomial = monomial_of(Marker::t);
    t_inf.q_offset = 0;
    rhs = rhs * pochhammer(t_inf, order, caps).inverse();

    return {lhs, rhs};
}

} // namespace qpart
