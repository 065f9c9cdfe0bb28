#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qpart/two_color.hpp"

namespace qpart {

enum class Letter : char { x = 'x', y = 'y', z = 'z' };

// A word over {x, y, z}. Words encode Ferrers-graph profiles: x stands for
// the EN corner of a red part, z for the EEN tail of a green part, y for a
// remaining east step. Membership in the profile-word family W further
// requires the word to be empty or to end with x or z.
using ProfileWord = std::vector<Letter>;

enum class ZParity { even, odd };

// Weight of a word: each non-y letter at (1-based) position i contributes
// i plus the number of z's at positions <= i (the letter itself included).
long long word_weight(const ProfileWord& w);

// Parity classification of every z. Scanning left to right, a z is odd
// when the number of preceding letters that are y or an odd z is odd, and
// even otherwise. Returns (position, parity) pairs in word order.
std::vector<std::pair<int, ZParity>> classify_z(const ProfileWord& w);

// Stats of a word in W: n = weight, k = #x, l = #z, j = #odd z. Empty when
// the word is not in W (ends with y).
std::optional<FamilyStats> word_stats(const ProfileWord& w);

// Membership test for W(n, k, l) and, when j is given, W(n, k, l, j).
bool is_in_W(const ProfileWord& w, long long n, int k, int l,
             std::optional<int> j = std::nullopt);

} // namespace qpart
