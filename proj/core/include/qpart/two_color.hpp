#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "qpart/partition.hpp"

namespace qpart {

enum class Color : char { red = 'r', green = 'g' };

struct ColoredPart {
    int value = 0;
    Color color = Color::red;

    friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
    friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

// A partition whose parts each carry a red/green tag. Values must be
// non-increasing; within a run of equal values the constructor reorders
// parts so red precedes green (the canonical tie order). Equal-value
// parts of equal color are allowed in general two-color partitions.
class TwoColorPartition {
public:
    TwoColorPartition() = default;
    explicit TwoColorPartition(std::vector<ColoredPart> parts);

    const std::vector<ColoredPart>& parts() const noexcept { return parts_; }
    long long weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t size() const noexcept { return parts_.size(); }

    int red_count() const noexcept;
    int green_count() const noexcept;

    // The underlying uncolored partition.
    Partition values() const;

    friend bool operator==(const TwoColorPartition&, const TwoColorPartition&) = default;
    friend auto operator<=>(const TwoColorPartition&, const TwoColorPartition&) = default;

private:
    std::vector<ColoredPart> parts_;
    long long weight_ = 0;
};

// Statistics carried by the restricted families: weight n, red-part count
// k (or, for family A, the count of red parts exceeding l), green-part
// count l, and the auxiliary count j where defined.
struct FamilyStats {
    long long n = 0;
    int k = 0;
    int l = 0;
    int j = 0;

    friend bool operator==(const FamilyStats&, const FamilyStats&) = default;
};

} // namespace qpart
