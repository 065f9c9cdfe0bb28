#include <doctest.h>

#include <stdexcept>

#include <qpart/partition.hpp>
#include <qpart/text.hpp>

#include "oracles.hpp"

using namespace qpart;

TEST_CASE("partition construction validates")
{
    CHECK(Partition{}.weight() == 0);
    CHECK(Partition({4, 3, 3, 1}).weight() == 11);
    CHECK_THROWS_AS(Partition({3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(parse_partition("2+1+1")) == parse_partition("3+1"));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(parse_partition("5+5+3+2+1")) == parse_partition("5+4+3+2+2"));

    // grid oracle agreement, n <= 18
    for (int n = 0; n <= 18; ++n)
        for (const auto& parts : oracle::partitions(n))
            CHECK(conjugate(Partition(parts)).parts() == oracle::conjugate_grid(parts));

    // weight-preserving involution on everything enumerated, n <= 40
    for (int n = 0; n <= 40; ++n) {
        bool ok = true;
        for (const auto& p : enumerate_partitions(n)) {
            const Partition c = conjugate(p);
            ok = ok && conjugate(c) == p && c.weight() == p.weight();
        }
        CHECK(ok);
    }
}

TEST_CASE("durfee side")
{
    CHECK(durfee_side(parse_partition("12+8+6+4+3+1")) == 4);
    CHECK(durfee_side(Partition{}) == 0);
    CHECK(durfee_side(parse_partition("10+4+3+1")) == 3);

    for (int n = 0; n <= 16; ++n)
        for (const auto& parts : oracle::partitions(n))
            CHECK(durfee_side(Partition(parts)) == oracle::durfee_grid(parts));

    // conjugation invariant, n <= 40
    for (int n = 0; n <= 40; ++n) {
        bool ok = true;
        for (const auto& p : enumerate_partitions(n))
            ok = ok && durfee_side(p) == durfee_side(conjugate(p));
        CHECK(ok);
    }
}

TEST_CASE("triple decomposition round trips")
{
    const Partition running = parse_partition("12+8+6+4+3+1");
    const TripleDecomposition t = to_triple(running);
    CHECK(t.d == 4);
    CHECK(t.pi == parse_partition("3+1"));
    CHECK(t.sigma == parse_partition("3+3+2+2+1+1+1+1"));
    CHECK(from_triple(t) == running);

    CHECK(to_triple(Partition{}) == TripleDecomposition{});
    CHECK(from_triple(TripleDecomposition{}) == Partition{});

    const TripleDecomposition wide{5, parse_partition("5+3+2+2"), parse_partition("4")};
    CHECK(from_triple(wide) == parse_partition("6+6+6+6+5+5+3+2+2"));
    CHECK(to_triple(parse_partition("6+6+6+6+5+5+3+2+2")) == wide);

    CHECK_THROWS_AS(from_triple(TripleDecomposition{2, parse_partition("3"), {}}),
                    std::domain_error);
    CHECK_THROWS_AS(from_triple(TripleDecomposition{0, parse_partition("1"), {}}),
                    std::domain_error);

    for (int n = 0; n <= 40; ++n) {
        bool ok = true;
        for (const auto& p : enumerate_partitions(n)) {
            const auto triple = to_triple(p);
            ok = ok
              && triple.d * triple.d + triple.pi.weight() + triple.sigma.weight()
                     == p.weight()
              && from_triple(triple) == p;
        }
        CHECK(ok);
    }

    // valid triples round-trip the other way: d <= 6, |pi|, |sigma| <= 20
    for (int d = 1; d <= 6; ++d) {
        std::vector<Partition> pool;
        for (int w = 0; w <= 20; ++w)
            for (const auto& parts : oracle::partitions(w, d))
                pool.emplace_back(parts);
        bool ok = true;
        for (const auto& pi : pool)
            for (const auto& sigma : pool) {
                const TripleDecomposition triple{d, pi, sigma};
                ok = ok && to_triple(from_triple(triple)) == triple;
            }
        CHECK(ok);
    }
    CHECK(to_triple(from_triple(TripleDecomposition{})) == TripleDecomposition{});
}

TEST_CASE("enumerate_partitions: counts, order, constraints")
{
    // P(4), in lexicographically decreasing order
    const auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(to_text(p4[0]) == "4");
    CHECK(to_text(p4[1]) == "3+1");
    CHECK(to_text(p4[2]) == "2+2");
    CHECK(to_text(p4[3]) == "2+1+1");
    CHECK(to_text(p4[4]) == "1+1+1+1");

    const auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    // classical values p(0..40), anchored at p(4) = 5
    const long long first[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n)
        CHECK(oracle::partition_count(n) == first[n]);
    for (int n = 0; n <= 40; ++n)
        CHECK(static_cast<long long>(enumerate_partitions(n).size())
              == oracle::partition_count(n));

    // determinism: repeat runs yield identical streams
    CHECK(enumerate_partitions(12) == enumerate_partitions(12));

    ConstraintSet strict4;
    strict4.distinct = true;
    strict4.num_parts = 4;
    strict4.durfee_side = 3;
    CHECK(enumerate_partitions(18, strict4).size() == 10);

    ConstraintSet window;
    window.min_part = 2;
    window.max_part = 3;
    const auto w7 = enumerate_partitions(7, window);
    REQUIRE(w7.size() == 1);
    CHECK(to_text(w7[0]) == "3+2+2");

    ConstraintSet impossible;
    impossible.min_part = 5;
    impossible.num_parts = 3;
    CHECK(enumerate_partitions(7, impossible).empty());
}
