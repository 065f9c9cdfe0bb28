#pragma once

#include <vector>

#include "qpart/partition.hpp"
#include "qpart/profile_word.hpp"
#include "qpart/two_color.hpp"

namespace qpart {

// The 2-indented peel of a member of L_2 (or L_3) with m parts:
// lambda_tilde row i = lambda_i - 2m + 2i - 1, i.e. the partition left
// after removing the odd staircase (2m-1) + (2m-3) + ... + 1, with a
// trailing zero row dropped (m is kept as metadata). green_columns holds
// the column index lambda_tilde_i for every green source row i: the
// column of lambda_tilde containing the last cell of that row.
struct IndentedPeel {
    int m = 0;
    Partition lambda_tilde;
    std::vector<int> green_columns; // descending, pairwise distinct
};

// Throws std::domain_error when some indented row would be negative or
// the rows fail to be non-increasing (both signal p outside L_2).
IndentedPeel two_indent(const TwoColorPartition& p);

// A pair (pi, sigma) with pi strict and sigma strict with all parts even;
// equivalently a member of family A with pi red and sigma green.
struct PartitionPair {
    Partition pi;
    Partition sigma;

    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

// The member of A obtained by coloring pi red and sigma green.
TwoColorPartition pair_to_two_color(const PartitionPair& pr);

// phi: member of L_1 -> its profile word in W, preserving weight and the
// (red, green) -> (x, z) letter counts. phi_inverse is its two-sided
// inverse; it rejects words outside W.
ProfileWord phi(const TwoColorPartition& p);
TwoColorPartition phi_inverse(const ProfileWord& w);

// psi: word in W(n,k,l,j) -> pair in A(n,k,l,j). psi_inverse reconstructs
// the word by replaying the construction right to left; it throws
// std::runtime_error with a diagnostic if the reconstruction is ever
// ambiguous (never observed; asserted rather than assumed).
PartitionPair psi(const ProfileWord& w);
ProfileWord psi_inverse(const PartitionPair& pr);

// eta: member of L_2(n,k,l) -> basis triple in B(n,k,l).
TripleDecomposition eta(const TwoColorPartition& p);
TwoColorPartition eta_inverse(const TripleDecomposition& t);

// theta: member of L_3(n,k,l) -> strict partition in D(n,k,l), returned
// assembled (use to_triple to recover the (m, pi, sigma) form).
Partition theta(const TwoColorPartition& p);
TwoColorPartition theta_inverse(const Partition& p);

} // namespace qpart
