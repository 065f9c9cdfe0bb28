#include <doctest.h>

#include <map>

#include <qpart/families.hpp>
#include <qpart/gf.hpp>
#include <qpart/text.hpp>

#include "oracles.hpp"

using namespace qpart;

namespace {

Monomial xy_mono(int k, int l, int j = 0)
{
    Monomial m = kUnitMonomial;
    m[static_cast<std::size_t>(Marker::x)] = k;
    m[static_cast<std::size_t>(Marker::y)] = l;
    m[static_cast<std::size_t>(Marker::z)] = j;
    return m;
}

} // namespace

TEST_CASE("gf_L1_rhs against enumeration")
{
    const int order = 14;
    const auto s = gf_L1_rhs(order);
    CHECK(coeff(s, 7, xy_mono(1, 1)) == 4);
    CHECK(s.at(0).is_one());
    for (int n = 1; n <= order; ++n)
        CHECK(coeff(s, n, kUnitMonomial) == 0); // no parts, positive weight

    for (int n = 0; n <= order; ++n) {
        std::map<Monomial, long long> want;
        for (const auto& p : enumerate_L(1, n))
            ++want[xy_mono(p.red_count(), p.green_count())];
        CHECK(want == s.at(n).terms());
    }
}

TEST_CASE("gf_A_rhs and the refined series")
{
    const int order = 14;
    const auto plain = gf_A_rhs(order);
    CHECK(coeff(plain, 7, xy_mono(1, 1)) == 4);

    const auto refined = gf_A_refined_rhs(order);
    CHECK(coeff(refined, 7, xy_mono(1, 1, 1))
          == static_cast<long long>(enumerate_A(7, 1, 1, 1).size()));
    CHECK(coeff(refined, 7, xy_mono(1, 1, 1)) == 2);

    for (int n = 0; n <= order; ++n) {
        std::map<Monomial, long long> want;
        for (const auto& p : enumerate_A(n)) {
            const auto st = *a_stats(p);
            ++want[xy_mono(st.k, st.l, st.j)];
        }
        CHECK(want == refined.at(n).terms());
    }

    // z = 1 collapses the refinement to the plain series, termwise
    CHECK_FALSE(first_difference(refined.substitute(Marker::z, 1), plain).has_value());

    // analytic route: both L_1 generating functions agree
    CHECK_FALSE(first_difference(gf_L1_rhs(20), gf_A_rhs(20)).has_value());
}

TEST_CASE("gf_L2_rhs")
{
    const int order = 16;
    const auto s = gf_L2_rhs(order);
    CHECK(coeff(gf_L2_rhs(18), 15, xy_mono(1, 2)) == 6);
    CHECK(s.at(0).is_one());

    for (int n = 0; n <= order; ++n) {
        std::map<Monomial, long long> want;
        for (const auto& p : enumerate_L(2, n))
            ++want[xy_mono(p.red_count(), p.green_count())];
        CHECK(want == s.at(n).terms());

        for (const auto& [mono, c] : s.at(n).terms()) {
            const int k = mono[0], l = mono[1];
            CHECK(c == static_cast<long long>(enumerate_B(n, k, l).size()));
        }
    }

    // x = y = 1 gives total basis-partition counts
    const auto totals = s.substitute(Marker::x, 1).substitute(Marker::y, 1);
    for (int n = 0; n <= order; ++n) {
        long long basis = 0;
        for (const auto& parts : oracle::partitions(n))
            if (is_basis(to_triple(Partition(parts))))
                ++basis;
        CHECK(coeff(totals, n, kUnitMonomial) == basis);
    }
}

TEST_CASE("Lebesgue identity")
{
    const auto [lhs, rhs] = lebesgue_sides(40);
    CHECK_FALSE(first_difference(lhs, rhs).has_value());
    CHECK(lhs.at(0).is_one());
    CHECK(rhs.at(0).is_one());

    // z = 0 degenerates to Euler: sum q^{n(n+1)/2}/(q)_n = (-q)_inf
    const auto euler = lhs.substitute(Marker::z, 0);
    for (int n = 0; n <= 40; ++n)
        CHECK(coeff(euler, n, kUnitMonomial) == oracle::distinct_count(n));
}

TEST_CASE("Sylvester identity")
{
    const auto [lhs, rhs] = sylvester_sides(40);
    CHECK_FALSE(first_difference(lhs, rhs).has_value());

    // a^m q^n on the left counts strict partitions of n into m parts
    for (int n = 0; n <= 30; ++n)
        for (int m = 0; m * (m + 1) / 2 <= n + 1 && m <= 8; ++m)
            CHECK(coeff(lhs, n, monomial_of(Marker::a, m))
                  == oracle::distinct_count_exact_parts(n, m));

    const auto at_zero_l = lhs.substitute(Marker::a, 0);
    const auto at_zero_r = rhs.substitute(Marker::a, 0);
    CHECK(at_zero_l == TruncatedSeries::unit(40));
    CHECK(at_zero_r == TruncatedSeries::unit(40));
}

TEST_CASE("q-binomial theorem")
{
    const auto [lhs, rhs] = qbinomial_sides(24, 8);
    CHECK_FALSE(first_difference(lhs, rhs).has_value());

    // a = 1 collapses both sides to 1
    MarkerCaps caps = kNoCaps;
    caps[static_cast<std::size_t>(Marker::t)] = 8;
    CHECK(lhs.substitute(Marker::a, 1) == TruncatedSeries::unit(24, caps));
    CHECK(rhs.substitute(Marker::a, 1) == TruncatedSeries::unit(24, caps));

    // the t^1 slice is (1-a)/(1-q): coefficient of t q^n is 1 - a
    for (int n = 0; n <= 24; ++n) {
        Monomial t1 = monomial_of(Marker::t);
        Monomial at1 = t1;
        at1[static_cast<std::size_t>(Marker::a)] = 1;
        CHECK(coeff(lhs, n, t1) == 1);
        CHECK(coeff(lhs, n, at1) == -1);
    }
}
