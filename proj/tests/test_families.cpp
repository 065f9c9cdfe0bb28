#include <doctest.h>

#include <stdexcept>

#include <map>
#include <set>

#include <qpart/families.hpp>
#include <qpart/text.hpp>

#include "oracles.hpp"

using namespace qpart;

namespace {

std::set<std::string> text_set(const std::vector<TwoColorPartition>& v)
{
    std::set<std::string> out;
    for (const auto& p : v)
        out.insert(to_text(p));
    return out;
}

TwoColorPartition oracle_to_two_color(const oracle::TwoColored& tc)
{
    std::vector<ColoredPart> parts;
    for (std::size_t i = 0; i < tc.values.size(); ++i)
        parts.push_back({tc.values[i], tc.colors[i] == 'r' ? Color::red : Color::green});
    return TwoColorPartition(std::move(parts));
}

} // namespace

TEST_CASE("two-color construction: canonical tie order")
{
    const TwoColorPartition p({{3, Color::green}, {3, Color::red}, {1, Color::red}});
    CHECK(to_text(p) == "3r+3g+1r");
    CHECK(p.red_count() == 2);
    CHECK(p.green_count() == 1);
    CHECK_THROWS_AS(TwoColorPartition({{1, Color::red}, {2, Color::red}}),
                    std::invalid_argument);
}

TEST_CASE("L_d membership")
{
    CHECK(is_in_L(2, parse_two_color("10g+4g+1r")));
    CHECK_FALSE(is_in_L(1, parse_two_color("1g")));
    CHECK_FALSE(is_in_L(1, parse_two_color("2g+1r")));
    CHECK(l_violation(1, parse_two_color("2g+1r")).value() == "green gap < 2 at part 1");
    CHECK(l_violation(3, parse_two_color("2g")).value()
          == "forbidden green part 2 at part 1");
    CHECK(l_violation(2, parse_two_color("5r+4r")).value() == "red gap < 2 at part 1");
    CHECK_THROWS_AS(is_in_L(0, TwoColorPartition{}), std::invalid_argument);

    // members from the worked sets
    CHECK(is_in_L(3, parse_two_color("9r+6r+3g")));
    CHECK(is_in_L(2, parse_two_color("8r+5g+2g")));
}

TEST_CASE("enumerate_L matches the worked sets")
{
    CHECK(text_set(enumerate_L(1, 7, 1, 1))
          == std::set<std::string>{"6g+1r", "5g+2r", "5r+2g", "4r+3g"});
    CHECK(text_set(enumerate_L(2, 15, 1, 2))
          == std::set<std::string>{"10g+4g+1r", "9g+5g+1r", "8g+5g+2r",
                                   "9g+4r+2g", "8g+5r+2g", "8r+5g+2g"});
    CHECK(text_set(enumerate_L(3, 18, 2, 1))
          == std::set<std::string>{"13g+4r+1r", "12g+5r+1r", "12r+5g+1r",
                                   "11g+6r+1r", "11r+6g+1r", "10r+7g+1r",
                                   "11g+5r+2r", "10g+6r+2r", "10r+6g+2r",
                                   "9r+6r+3g"});
    CHECK(text_set(enumerate_L(1, 3))
          == std::set<std::string>{"3r", "3g", "2r+1r"});
    const auto empty_weight = enumerate_L(2, 0);
    REQUIRE(empty_weight.size() == 1);
    CHECK(empty_weight[0].empty());

    // filter agreement: enumerate_L vs predicate over all two-color partitions
    for (int n = 0; n <= 10; ++n)
        for (int d = 1; d <= 3; ++d) {
            std::set<std::string> brute;
            for (const auto& tc : oracle::two_color_partitions(n)) {
                const auto p = oracle_to_two_color(tc);
                if (is_in_L(d, p))
                    brute.insert(to_text(p));
            }
            CHECK(brute == text_set(enumerate_L(d, n)));
        }

    // L_3(n) is a subset of L_2(n)
    for (int n = 0; n <= 32; ++n) {
        bool ok = true;
        for (const auto& p : enumerate_L(3, n))
            ok = ok && is_in_L(2, p);
        CHECK(ok);
    }
}

TEST_CASE("family A stats and enumeration")
{
    const auto st = a_stats(parse_two_color("4g+2r+1r"));
    REQUIRE(st.has_value());
    CHECK(*st == FamilyStats{7, 1, 1, 1});
    CHECK(a_stats(TwoColorPartition{}) == FamilyStats{0, 0, 0, 0});
    CHECK(a_stats(parse_two_color("5r+2g")) == FamilyStats{7, 1, 1, 0});
    CHECK_FALSE(a_stats(parse_two_color("3g")).has_value());       // odd green
    CHECK_FALSE(a_stats(parse_two_color("2r+2r")).has_value());    // repeated red

    CHECK(text_set(enumerate_A(7, 1, 1))
          == std::set<std::string>{"4g+2r+1r", "4r+2g+1r", "4g+3r", "5r+2g"});
    CHECK(enumerate_A(7, 1, 1, 1).size() == 2);
    CHECK(enumerate_A(7, 1, 1, 0).size() == 2);
    CHECK(text_set(enumerate_A(3)) == std::set<std::string>{"3r", "2r+1r", "2g+1r"});
    const auto a0 = enumerate_A(0, 0, 0, 0);
    REQUIRE(a0.size() == 1);
    CHECK(a0[0].empty());

    // independent filter route over all two-color partitions, n <= 12
    for (int n = 0; n <= 12; ++n) {
        std::set<std::string> brute;
        for (const auto& tc : oracle::two_color_partitions(n))
            if (a_stats(oracle_to_two_color(tc)))
                brute.insert(to_text(oracle_to_two_color(tc)));
        CHECK(brute == text_set(enumerate_A(n)));
    }

    // j-splits partition each (k, l) cell
    for (int n = 0; n <= 14; ++n) {
        std::map<std::pair<int, int>, long long> by_kl, by_klj;
        for (const auto& p : enumerate_A(n)) {
            const auto s = *a_stats(p);
            ++by_kl[{s.k, s.l}];
        }
        for (const auto& [kl, count] : by_kl) {
            long long total = 0;
            for (int jv = 0; jv <= kl.second; ++jv)
                total += static_cast<long long>(
                    enumerate_A(n, kl.first, kl.second, jv).size());
            by_klj[kl] = total;
        }
        CHECK(by_kl == by_klj);
    }
}

TEST_CASE("basis predicate and enumerate_B")
{
    CHECK(is_basis({5, parse_partition("5+3+2+2"), parse_partition("4")}));
    CHECK(is_basis({3, parse_partition("3+2"), parse_partition("1")}));
    CHECK_FALSE(is_basis({2, parse_partition("1+1"), parse_partition("1")}));

    const auto b = enumerate_B(15, 1, 2);
    std::set<std::string> got;
    for (const auto& t : b)
        got.insert(to_text(t));
    CHECK(got == std::set<std::string>{"(3; 3+1+1+1; )", "(3; 2+2+1+1; )",
                                       "(3; 2+1+1+1+1; )", "(3; 3+2; 1)",
                                       "(3; 3+1; 2)", "(3; 2+1; 3)"});
    CHECK(b.size() == enumerate_L(2, 15, 1, 2).size());

    const auto b0 = enumerate_B(0, 0, 0);
    REQUIRE(b0.size() == 1);
    CHECK(to_text(b0[0]) == "(0; ; )");
}

TEST_CASE("enumerate_D")
{
    std::set<std::string> got;
    for (const auto& p : enumerate_D(18, 2, 1))
        got.insert(to_text(p));
    CHECK(got == std::set<std::string>{"10+4+3+1", "9+5+3+1", "8+6+3+1",
                                       "8+5+4+1", "7+6+4+1", "9+4+3+2",
                                       "8+5+3+2", "7+6+3+2", "7+5+4+2",
                                       "6+5+4+3"});

    const auto d0 = enumerate_D(0, 0, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].empty());

    // summing |D(n,k,l)| over all cells recovers the strict-partition count
    for (int n = 0; n <= 32; ++n) {
        long long total = 0;
        for (int k = 0; k * k <= n || k == 0; ++k)
            for (int l = 0; (k + l) * (k + l) <= n; ++l)
                total += static_cast<long long>(enumerate_D(n, k, l).size());
        CHECK(total == oracle::distinct_count(n));
    }
}

TEST_CASE("enumerate_W")
{
    const auto w0 = enumerate_W(0);
    REQUIRE(w0.size() == 1);
    CHECK(w0[0].empty());

    // W(4) spelled out
    std::set<std::string> got;
    for (const auto& w : enumerate_W(4))
        got.insert(to_text(w));
    CHECK(got == std::set<std::string>{"yyyx", "yyz", "xyx", "xz"});

    // every yielded word is in W with its own stats; filters select
    for (int n = 0; n <= 16; ++n)
        for (const auto& w : enumerate_W(n)) {
            const auto st = word_stats(w);
            REQUIRE(st.has_value());
            CHECK(st->n == n);
            CHECK(is_in_W(w, n, st->k, st->l, st->j));
        }
    CHECK(enumerate_W(34, 3, 3, 1).size() > 0);
    CHECK(enumerate_W(5) == enumerate_W(5));
}
