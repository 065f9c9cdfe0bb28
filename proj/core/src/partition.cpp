#include "qpart/partition.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace qpart {

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition part must be positive, got "
                                        + std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be non-increasing");
        if (weight_ > std::numeric_limits<long long>::max() - parts_[i])
            throw std::overflow_error("partition weight overflows 64 bits");
        weight_ += parts_[i];
    }
}

Partition conjugate(const Partition& p)
{
    if (p.empty())
        return {};
    std::vector<int> cols(static_cast<std::size_t>(p.parts().front()));
    // Column c of the Ferrers graph has one cell per row of length >= c.
    for (int v : p.parts())
        for (int c = 0; c < v; ++c)
            ++cols[static_cast<std::size_t>(c)];
    return Partition(std::move(cols));
}

int durfee_side(const Partition& p)
{
    int d = 0;
    while (p.row(static_cast<std::size_t>(d + 1)) >= d + 1)
        ++d;
    return d;
}

bool is_strict(const Partition& p)
{
    const auto& parts = p.parts();
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] >= parts[i - 1])
            return false;
    return true;
}

TripleDecomposition to_triple(const Partition& p)
{
    const int d = durfee_side(p);
    std::vector<int> below(p.parts().begin() + d, p.parts().end());
    const Partition conj = conjugate(p);
    std::vector<int> below_conj(conj.parts().begin() + d, conj.parts().end());
    return TripleDecomposition{d, Partition(std::move(below)),
                               Partition(std::move(below_conj))};
}

Partition from_triple(const TripleDecomposition& t)
{
    if (t.d < 0)
        throw std::domain_error("triple: d must be non-negative");
    if (!t.pi.empty() && t.pi.parts().front() > t.d)
        throw std::domain_error("triple: pi has a part exceeding d");
    if (!t.sigma.empty() && t.sigma.parts().front() > t.d)
        throw std::domain_error("triple: sigma has a part exceeding d");
    if (t.d == 0 && !(t.pi.empty() && t.sigma.empty()))
        throw std::domain_error("triple: d = 0 forces empty pi and sigma");

    // Rows 1..d are the Durfee square plus, to its right, the conjugate of
    // sigma; rows below d are pi verbatim.
    const Partition sigma_conj = conjugate(t.sigma);
    std::vector<int> rows;
    rows.reserve(static_cast<std::size_t>(t.d) + t.pi.size());
    for (int i = 1; i <= t.d; ++i)
        rows.push_back(t.d + sigma_conj.row(static_cast<std::size_t>(i)));
    rows.insert(rows.end(), t.pi.parts().begin(), t.pi.parts().end());
    return Partition(std::move(rows));
}

namespace {

void enumerate_rec(long long remaining, int max_allowed, const ConstraintSet& c,
                   std::vector<int>& acc, std::vector<Partition>& out)
{
    if (remaining == 0) {
        if (c.num_parts && static_cast<int>(acc.size()) != *c.num_parts)
            return;
        Partition p(acc);
        if (c.durfee_side && durfee_side(p) != *c.durfee_side)
            return;
        out.push_back(std::move(p));
        return;
    }
    if (c.num_parts && static_cast<int>(acc.size()) >= *c.num_parts)
        return;
    const int lo = c.min_part.value_or(1);
    int hi = static_cast<int>(std::min<long long>(remaining, max_allowed));
    for (int v = hi; v >= lo; --v) {
        acc.push_back(v);
        enumerate_rec(remaining - v, c.distinct ? v - 1 : v, c, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(long long n, const ConstraintSet& c)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> acc;
    const long long start_max =
        c.max_part ? static_cast<long long>(*c.max_part) : n;
    enumerate_rec(n, static_cast<int>(std::min<long long>(n, start_max)), c, acc, out);
    return out;
}

} // namespace qpart
