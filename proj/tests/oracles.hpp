// Test-side oracles, deliberately independent of the library code paths
// they check: plain dynamic-programming counters, a cell-grid conjugate,
// and a from-scratch recursive partition generator.

#pragma once

#include <algorithm>
#include <vector>

namespace oracle {

// p(n): number of partitions of n, by the classic parts-bounded DP.
inline long long partition_count(int n)
{
    std::vector<long long> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int w = part; w <= n; ++w)
            dp[static_cast<std::size_t>(w)] += dp[static_cast<std::size_t>(w - part)];
    return dp[static_cast<std::size_t>(n)];
}

// q(n): number of partitions of n into distinct parts.
inline long long distinct_count(int n)
{
    std::vector<long long> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int w = n; w >= part; --w)
            dp[static_cast<std::size_t>(w)] += dp[static_cast<std::size_t>(w - part)];
    return dp[static_cast<std::size_t>(n)];
}

// Number of partitions of n into exactly m parts.
inline long long count_exact_parts(int n, int m)
{
    if (n < 0 || m < 0)
        return 0;
    std::vector<std::vector<long long>> dp(
        static_cast<std::size_t>(n) + 1,
        std::vector<long long>(static_cast<std::size_t>(m) + 1, 0));
    dp[0][0] = 1;
    for (int w = 1; w <= n; ++w)
        for (int parts = 1; parts <= m; ++parts) {
            dp[w][parts] = dp[w - 1][parts - 1]; // smallest part is 1
            if (w >= parts)
                dp[w][parts] += dp[w - parts][parts]; // subtract 1 everywhere
        }
    return dp[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

// Number of strict partitions of n into exactly m parts: remove the
// staircase (m-1, m-2, ..., 0) to land on exact-m-part partitions.
inline long long distinct_count_exact_parts(int n, int m)
{
    const long long staircase = static_cast<long long>(m) * (m - 1) / 2;
    return count_exact_parts(n - static_cast<int>(staircase), m);
}

// Two-color partitions with same-color parts distinct and all green parts
// even: choose a strict red partition of r and a strict green partition of
// (n - r)/2 doubled.
inline long long red_distinct_green_even_count(int n)
{
    long long total = 0;
    for (int g = 0; g <= n; g += 2)
        total += distinct_count(n - g) * distinct_count(g / 2);
    return total;
}

// Conjugate by filling and re-reading the cell grid.
inline std::vector<int> conjugate_grid(const std::vector<int>& parts)
{
    if (parts.empty())
        return {};
    std::vector<std::vector<bool>> grid(parts.size(),
                                        std::vector<bool>(static_cast<std::size_t>(parts[0]), false));
    for (std::size_t r = 0; r < parts.size(); ++r)
        for (int c = 0; c < parts[r]; ++c)
            grid[r][static_cast<std::size_t>(c)] = true;
    std::vector<int> cols;
    for (std::size_t c = 0; c < grid[0].size(); ++c) {
        int height = 0;
        for (std::size_t r = 0; r < grid.size(); ++r)
            if (grid[r][c])
                ++height;
        cols.push_back(height);
    }
    return cols;
}

// Largest d such that the d x d cell square fits in the Ferrers graph.
inline int durfee_grid(const std::vector<int>& parts)
{
    int best = 0;
    for (int d = 1; d <= static_cast<int>(parts.size()); ++d) {
        bool fits = true;
        for (int r = 0; r < d && fits; ++r)
            if (parts[static_cast<std::size_t>(r)] < d)
                fits = false;
        if (fits)
            best = d;
    }
    return best;
}

// All partitions of n with parts at most max_part, largest part first.
inline void partitions_rec(int n, int max_part, std::vector<int>& acc,
                           std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(acc);
        return;
    }
    for (int v = std::min(n, max_part); v >= 1; --v) {
        acc.push_back(v);
        partitions_rec(n - v, v, acc, out);
        acc.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions(int n, int max_part = -1)
{
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    partitions_rec(n, max_part < 0 ? n : max_part, acc, out);
    return out;
}

// All two-color partitions of n as (values, color mask) with colors
// canonical within equal values: for each run of equal values choose how
// many are red; reds come first.
struct TwoColored {
    std::vector<int> values;
    std::vector<char> colors; // 'r' or 'g'
};

inline std::vector<TwoColored> two_color_partitions(int n)
{
    std::vector<TwoColored> out;
    for (const auto& parts : partitions(n)) {
        // runs of equal values
        std::vector<std::pair<int, int>> runs; // (value, multiplicity)
        for (int v : parts) {
            if (!runs.empty() && runs.back().first == v)
                ++runs.back().second;
            else
                runs.emplace_back(v, 1);
        }
        std::vector<int> reds(runs.size(), 0);
        // odometer over red counts per run
        while (true) {
            TwoColored tc;
            for (std::size_t i = 0; i < runs.size(); ++i)
                for (int c = 0; c < runs[i].second; ++c) {
                    tc.values.push_back(runs[i].first);
                    tc.colors.push_back(c < reds[i] ? 'r' : 'g');
                }
            out.push_back(std::move(tc));
            std::size_t i = 0;
            while (i < runs.size() && reds[i] == runs[i].second)
                reds[i++] = 0;
            if (i == runs.size())
                break;
            ++reds[i];
        }
    }
    return out;
}

// Number of subsets of {1..m} summing to each w <= n: the coefficients of
// prod_{i=1..m} (1 + q^i).
inline std::vector<long long> subset_sum_counts(int m, int n)
{
    std::vector<long long> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (int i = 1; i <= m; ++i)
        for (int w = n; w >= i; --w)
            dp[static_cast<std::size_t>(w)] += dp[static_cast<std::size_t>(w - i)];
    return dp;
}

} // namespace oracle
