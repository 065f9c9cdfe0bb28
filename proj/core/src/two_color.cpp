#include "qpart/two_color.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace qpart {

TwoColorPartition::TwoColorPartition(std::vector<ColoredPart> parts)
    : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].value < 1)
            throw std::invalid_argument("two-color part must be positive, got "
                                        + std::to_string(parts_[i].value));
        if (i > 0 && parts_[i].value > parts_[i - 1].value)
            throw std::invalid_argument("two-color part values must be non-increasing");
        if (weight_ > std::numeric_limits<long long>::max() - parts_[i].value)
            throw std::overflow_error("two-color weight overflows 64 bits");
        weight_ += parts_[i].value;
    }
    // Canonical tie order: within a run of equal values, red before green.
    auto run = parts_.begin();
    while (run != parts_.end()) {
        auto end = run;
        while (end != parts_.end() && end->value == run->value)
            ++end;
        std::stable_partition(run, end,
                              [](const ColoredPart& p) { return p.color == Color::red; });
        run = end;
    }
}

int TwoColorPartition::red_count() const noexcept
{
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
        [](const ColoredPart& p) { return p.color == Color::red; }));
}

int TwoColorPartition::green_count() const noexcept
{
    return static_cast<int>(parts_.size()) - red_count();
}

Partition TwoColorPartition::values() const
{
    std::vector<int> vals;
    vals.reserve(parts_.size());
    for (const auto& p : parts_)
        vals.push_back(p.value);
    return Partition(std::move(vals));
}

} // namespace qpart
