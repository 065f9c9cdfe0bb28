#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace qpart {

// A partition: a non-increasing list of positive integer parts. The empty
// partition (weight 0) is a first-class value. Construction validates the
// invariant and rejects violations instead of sorting silently; the weight
// is computed once and cached.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    long long weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t size() const noexcept { return parts_.size(); }

    // 1-based row access; 0 when the row is absent. Matches the usual
    // convention that rows beyond the last have length zero.
    int row(std::size_t i) const noexcept
    {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    long long weight_ = 0;
};

// Column counts of the Ferrers graph: result row c = #{i : parts[i] >= c}.
// A weight-preserving involution.
Partition conjugate(const Partition& p);

// Side of the largest square fitting in the Ferrers graph: the largest i
// with row(i) >= i, and 0 for the empty partition.
int durfee_side(const Partition& p);

// True when parts are strictly decreasing (a "strict" partition).
bool is_strict(const Partition& p);

// The Durfee-square codec: a partition is equivalent to its Durfee side d
// together with the subpartition pi below the square and the subpartition
// sigma below the square of the conjugate. Both pi and sigma have parts
// no greater than d, and the weight splits as d^2 + |pi| + |sigma|.
struct TripleDecomposition {
    int d = 0;
    Partition pi;
    Partition sigma;

    friend bool operator==(const TripleDecomposition&, const TripleDecomposition&) = default;
};

TripleDecomposition to_triple(const Partition& p);

// Inverse of to_triple. Throws std::domain_error when a part of pi or
// sigma exceeds d (no partition has such a decomposition).
Partition from_triple(const TripleDecomposition& t);

// Constraints for enumerate_partitions. Omitted fields impose nothing;
// unsatisfiable combinations yield an empty result, not an error.
struct ConstraintSet {
    std::optional<int> min_part;
    std::optional<int> max_part;
    std::optional<int> num_parts;
    bool distinct = false;
    std::optional<int> durfee_side;
};

// All partitions of n satisfying c, each exactly once, ordered by
// lexicographically decreasing part sequences (so for n=4:
// 4, 3+1, 2+2, 2+1+1, 1+1+1+1). The durfee_side constraint is applied as
// a post-filter on the generated stream.
std::vector<Partition> enumerate_partitions(long long n, const ConstraintSet& c = {});

} // namespace qpart
