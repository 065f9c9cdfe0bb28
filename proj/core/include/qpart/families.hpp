#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpart/partition.hpp"
#include "qpart/profile_word.hpp"
#include "qpart/two_color.hpp"

namespace qpart {

// The two difference rules and the two forbidden-part rules of the gap
// family L_d, exposed as data so tests can seed single-rule mutations and
// confirm the verification sweeps notice. Defaults are the canonical
// rules: red gap >= d, green gap >= d+1, and neither 1 nor d-1 may occur
// as a green part.
struct LdRules {
    int red_gap_delta = 0;    // red part exceeds the next by >= d + red_gap_delta
    int green_gap_delta = 1;  // green part exceeds the next by >= d + green_gap_delta
    bool forbid_green_one = true;
    bool forbid_green_d_minus_1 = true;
};

// First violated L_d rule for p, or empty when p is a member. Membership
// requires numerically distinct part values, the gap rules between each
// consecutive pair (the smallest part is unconstrained below), and the
// forbidden green parts. Only d in {1,2,3} is exercised by the named
// theorems; larger d applies the same rules literally.
std::optional<std::string> l_violation(int d, const TwoColorPartition& p,
                                       const LdRules& rules = {});

bool is_in_L(int d, const TwoColorPartition& p, const LdRules& rules = {});

// All of L_d(n), optionally filtered to k red and l green parts. Streams
// are exhaustive, duplicate-free, and sorted by canonical serialization.
std::vector<TwoColorPartition> enumerate_L(int d, long long n,
                                           std::optional<int> k = std::nullopt,
                                           std::optional<int> l = std::nullopt,
                                           const LdRules& rules = {});

// Family A: pairwise-distinct red values together with pairwise-distinct
// all-even green values. Returns the stats (n, k, l, j) with l = #green,
// k = #{red > l}, j = #{red <= l}; empty when p is not in the family.
std::optional<FamilyStats> a_stats(const TwoColorPartition& p);

// All of A(n), filtered to the given k, l, and (when present) j. Red and
// green components are generated independently and merged, which is
// exponentially smaller than filtering all two-color partitions.
std::vector<TwoColorPartition> enumerate_A(long long n,
                                           std::optional<int> k = std::nullopt,
                                           std::optional<int> l = std::nullopt,
                                           std::optional<int> j = std::nullopt);

// Basis test: pi and sigma share no part value.
bool is_basis(const TripleDecomposition& t);

// Basis triples of weight n with d = k + l and exactly l distinct part
// values in pi.
std::vector<TripleDecomposition> enumerate_B(long long n, int k, int l);

// Strict partitions of n with exactly k + 2l parts and Durfee side k + l.
std::vector<Partition> enumerate_D(long long n, int k, int l);

// Words of W with weight n, filtered to #x = k, #z = l, #odd z = j when
// given. Enumerated directly over the alphabet (independent of any map
// from partitions), sorted by letter string.
std::vector<ProfileWord> enumerate_W(long long n,
                                     std::optional<int> k = std::nullopt,
                                     std::optional<int> l = std::nullopt,
                                     std::optional<int> j = std::nullopt);

} // namespace qpart
