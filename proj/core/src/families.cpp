#include "qpart/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "qpart/text.hpp"

namespace qpart {

namespace {

// Gap required below a part of the given color.
int required_gap(int d, Color c, const LdRules& rules)
{
    return c == Color::red ? d + rules.red_gap_delta : d + rules.green_gap_delta;
}

template <typename T>
void sort_canonical(std::vector<T>& v)
{
    std::sort(v.begin(), v.end(), [](const T& a, const T& b) {
        return to_text(a) < to_text(b);
    });
}

} // namespace

std::optional<std::string> l_violation(int d, const TwoColorPartition& p,
                                       const LdRules& rules)
{
    if (d < 1)
        throw std::invalid_argument("L_d requires d >= 1");
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& part = parts[i];
        if (part.color == Color::green) {
            if (rules.forbid_green_one && part.value == 1)
                return "forbidden green part 1 at part " + std::to_string(i + 1);
            if (rules.forbid_green_d_minus_1 && part.value == d - 1)
                return "forbidden green part " + std::to_string(d - 1)
                     + " at part " + std::to_string(i + 1);
        }
        if (i + 1 < parts.size()) {
            const int next = parts[i + 1].value;
            if (part.value == next)
                return "parts not numerically distinct at part " + std::to_string(i + 1);
            const int gap = required_gap(d, part.color, rules);
            if (part.value - next < gap) {
                const char* color = part.color == Color::red ? "red" : "green";
                return std::string(color) + " gap < " + std::to_string(gap)
                     + " at part " + std::to_string(i + 1);
            }
        }
    }
    return std::nullopt;
}

bool is_in_L(int d, const TwoColorPartition& p, const LdRules& rules)
{
    return !l_violation(d, p, rules).has_value();
}

namespace {

struct LEnumState {
    int d;
    std::optional<int> k, l;
    const LdRules* rules;
    std::vector<ColoredPart> acc;
    int reds = 0, greens = 0;
    std::vector<TwoColorPartition>* out;
};

void enumerate_l_rec(LEnumState& st, long long remaining, long long upper)
{
    if (remaining == 0) {
        if (st.k && st.reds != *st.k)
            return;
        if (st.l && st.greens != *st.l)
            return;
        st.out->emplace_back(st.acc);
        return;
    }
    if (upper < 1)
        return;
    for (long long v = std::min(remaining, upper); v >= 1; --v) {
        const int value = static_cast<int>(v);
        if (!st.k || st.reds < *st.k) {
            st.acc.push_back({value, Color::red});
            ++st.reds;
            enumerate_l_rec(st, remaining - v,
                            std::min<long long>(v - 1,
                                v - required_gap(st.d, Color::red, *st.rules)));
            --st.reds;
            st.acc.pop_back();
        }
        const bool green_ok =
            !(st.rules->forbid_green_one && value == 1) &&
            !(st.rules->forbid_green_d_minus_1 && value == st.d - 1);
        if (green_ok && (!st.l || st.greens < *st.l)) {
            st.acc.push_back({value, Color::green});
            ++st.greens;
            enumerate_l_rec(st, remaining - v,
                            std::min<long long>(v - 1,
                                v - required_gap(st.d, Color::green, *st.rules)));
            --st.greens;
            st.acc.pop_back();
        }
    }
}

} // namespace

std::vector<TwoColorPartition> enumerate_L(int d, long long n,
                                           std::optional<int> k,
                                           std::optional<int> l,
                                           const LdRules& rules)
{
    if (d < 1)
        throw std::invalid_argument("L_d requires d >= 1");
    if (n < 0)
        throw std::invalid_argument("enumerate_L: n must be non-negative");
    std::vector<TwoColorPartition> out;
    LEnumState st{d, k, l, &rules, {}, 0, 0, &out};
    enumerate_l_rec(st, n, n);
    sort_canonical(out);
    return out;
}

std::optional<FamilyStats> a_stats(const TwoColorPartition& p)
{
    std::vector<int> reds, greens;
    for (const auto& part : p.parts()) {
        if (part.color == Color::red)
            reds.push_back(part.value);
        else
            greens.push_back(part.value);
    }
    // Color classes keep the global descending order, so distinctness is a
    // strict-decrease check.
    for (std::size_t i = 1; i < reds.size(); ++i)
        if (reds[i] >= reds[i - 1])
            return std::nullopt;
    for (std::size_t i = 1; i < greens.size(); ++i)
        if (greens[i] >= greens[i - 1])
            return std::nullopt;
    for (int g : greens)
        if (g % 2 != 0)
            return std::nullopt;

    FamilyStats st;
    st.n = p.weight();
    st.l = static_cast<int>(greens.size());
    for (int r : reds)
        (r > st.l ? st.k : st.j) += 1;
    return st;
}

std::vector<TwoColorPartition> enumerate_A(long long n,
                                           std::optional<int> k,
                                           std::optional<int> l,
                                           std::optional<int> j)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_A: n must be non-negative");
    std::vector<TwoColorPartition> out;

    const auto emit = [&](const std::vector<Partition>& pieces) {
        std::vector<ColoredPart> parts;
        for (int v : pieces[0].parts()) // low reds
            parts.push_back({v, Color::red});
        for (int v : pieces[1].parts()) // high reds
            parts.push_back({v, Color::red});
        for (int v : pieces[2].parts()) // greens (already doubled)
            parts.push_back({v, Color::green});
        std::sort(parts.begin(), parts.end(), [](const ColoredPart& a, const ColoredPart& b) {
            if (a.value != b.value)
                return a.value > b.value;
            return a.color == Color::red && b.color == Color::green;
        });
        out.emplace_back(std::move(parts));
    };

    for (int lv = l.value_or(0);; ++lv) {
        if (l && lv != *l)
            break;
        const long long green_min = static_cast<long long>(lv) * (lv + 1);
        if (green_min > n)
            break;
        for (int jv = j.value_or(0); jv <= lv; ++jv) {
            if (j && jv != *j)
                break;
            const long long low_min = static_cast<long long>(jv) * (jv + 1) / 2;
            const long long low_max =
                static_cast<long long>(jv) * lv - static_cast<long long>(jv) * (jv - 1) / 2;
            for (int kv = k.value_or(0);; ++kv) {
                if (k && kv != *k)
                    break;
                const long long high_min =
                    static_cast<long long>(kv) * lv + static_cast<long long>(kv) * (kv + 1) / 2;
                if (green_min + low_min + high_min > n)
                    break;
                for (long long w_lo = low_min;
                     w_lo <= std::min(low_max, n - green_min - high_min); ++w_lo) {
                    ConstraintSet lo_c;
                    lo_c.distinct = true;
                    lo_c.num_parts = jv;
                    lo_c.max_part = lv;
                    const auto lows = enumerate_partitions(w_lo, lo_c);
                    if (lows.empty())
                        continue;
                    for (long long w_hi = high_min;; ++w_hi) {
                        const long long g = n - w_lo - w_hi;
                        if (g < green_min)
                            break;
                        ConstraintSet hi_c;
                        hi_c.distinct = true;
                        hi_c.num_parts = kv;
                        hi_c.min_part = lv + 1;
                        const auto highs = enumerate_partitions(w_hi, hi_c);
                        if (highs.empty())
                            continue;
                        if (g % 2 != 0)
                            continue;
                        ConstraintSet gr_c;
                        gr_c.distinct = true;
                        gr_c.num_parts = lv;
                        const auto halves = enumerate_partitions(g / 2, gr_c);
                        for (const auto& lo_p : lows)
                            for (const auto& hi_p : highs)
                                for (const auto& half : halves) {
                                    std::vector<int> doubled;
                                    for (int v : half.parts())
                                        doubled.push_back(2 * v);
                                    emit({lo_p, hi_p, Partition(doubled)});
                                }
                        if (kv == 0)
                            break; // only w_hi == 0 is possible
                    }
                }
                if (k)
                    break;
            }
            if (j)
                break;
        }
        if (l)
            break;
    }
    sort_canonical(out);
    return out;
}

bool is_basis(const TripleDecomposition& t)
{
    std::set<int> pi_vals(t.pi.parts().begin(), t.pi.parts().end());
    for (int v : t.sigma.parts())
        if (pi_vals.count(v))
            return false;
    return true;
}

namespace {

int distinct_value_count(const Partition& p)
{
    int count = 0;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (i == 0 || parts[i] != parts[i - 1])
            ++count;
    return count;
}

} // namespace

std::vector<TripleDecomposition> enumerate_B(long long n, int k, int l)
{
    std::vector<TripleDecomposition> out;
    if (k < 0 || l < 0 || n < 0)
        return out;
    const int d = k + l;
    const long long rest = n - static_cast<long long>(d) * d;
    if (rest < 0)
        return out;
    for (long long w_pi = 0; w_pi <= rest; ++w_pi) {
        ConstraintSet pc;
        pc.max_part = d;
        for (const auto& pi : enumerate_partitions(w_pi, pc)) {
            if (distinct_value_count(pi) != l)
                continue;
            std::set<int> pi_vals(pi.parts().begin(), pi.parts().end());
            for (const auto& sigma : enumerate_partitions(rest - w_pi, pc)) {
                bool disjoint = true;
                for (int v : sigma.parts())
                    if (pi_vals.count(v)) {
                        disjoint = false;
                        break;
                    }
                if (disjoint)
                    out.push_back({d, pi, sigma});
            }
        }
    }
    sort_canonical(out);
    return out;
}

std::vector<Partition> enumerate_D(long long n, int k, int l)
{
    if (k < 0 || l < 0 || n < 0)
        return {};
    ConstraintSet c;
    c.distinct = true;
    c.num_parts = k + 2 * l;
    c.durfee_side = k + l;
    auto out = enumerate_partitions(n, c);
    sort_canonical(out);
    return out;
}

namespace {

struct WEnumState {
    long long n;
    std::optional<int> k, l, j;
    ProfileWord acc;
    int xs = 0, zs = 0;
    std::vector<ProfileWord>* out;

    void maybe_emit()
    {
        if (k && xs != *k)
            return;
        if (l && zs != *l)
            return;
        if (j) {
            int odd = 0;
            for (const auto& [pos, par] : classify_z(acc))
                if (par == ZParity::odd)
                    ++odd;
            if (odd != *j)
                return;
        }
        out->push_back(acc);
    }
};

// Depth-first generation over the alphabet. A non-y letter at position
// pos with zc earlier z's weighs pos + zc (x) or pos + zc + 1 (z), so any
// continuation costs at least pos + 1 + zc; branches whose cheapest close
// overshoots n are cut.
void enumerate_w_rec(WEnumState& st, int pos, int zc, long long w)
{
    const long long wx = w + pos + zc;
    if (wx <= st.n && (!st.k || st.xs < *st.k)) {
        st.acc.push_back(Letter::x);
        ++st.xs;
        if (wx == st.n)
            st.maybe_emit();
        else
            enumerate_w_rec(st, pos + 1, zc, wx);
        --st.xs;
        st.acc.pop_back();
    }
    const long long wz = w + pos + zc + 1;
    if (wz <= st.n && (!st.l || st.zs < *st.l)) {
        st.acc.push_back(Letter::z);
        ++st.zs;
        if (wz == st.n)
            st.maybe_emit();
        else
            enumerate_w_rec(st, pos + 1, zc + 1, wz);
        --st.zs;
        st.acc.pop_back();
    }
    if (w + pos + 1 + zc <= st.n) {
        st.acc.push_back(Letter::y);
        enumerate_w_rec(st, pos + 1, zc, w);
        st.acc.pop_back();
    }
}

} // namespace

std::vector<ProfileWord> enumerate_W(long long n,
                                     std::optional<int> k,
                                     std::optional<int> l,
                                     std::optional<int> j)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_W: n must be non-negative");
    std::vector<ProfileWord> out;
    WEnumState st{n, k, l, j, {}, 0, 0, &out};
    if (n == 0)
        st.maybe_emit(); // the empty word
    else
        enumerate_w_rec(st, 1, 0, 0);
    sort_canonical(out);
    return out;
}

} // namespace qpart
