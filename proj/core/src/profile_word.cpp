#include "qpart/profile_word.hpp"

namespace qpart {

long long word_weight(const ProfileWord& w)
{
    long long total = 0;
    long long z_seen = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Letter::z)
            ++z_seen;
        if (w[i] != Letter::y)
            total += static_cast<long long>(i + 1) + z_seen;
    }
    return total;
}

std::vector<std::pair<int, ZParity>> classify_z(const ProfileWord& w)
{
    // A single left-to-right pass carrying the parity of the count of y's
    // and odd z's seen so far; this is the unique consistent reading of
    // the self-referential definition.
    std::vector<std::pair<int, ZParity>> out;
    bool odd_count = false; // parity of #{y or odd z} among earlier letters
    for (std::size_t i = 0; i < w.size(); ++i) {
        switch (w[i]) {
        case Letter::y:
            odd_count = !odd_count;
            break;
        case Letter::z: {
            const ZParity par = odd_count ? ZParity::odd : ZParity::even;
            out.emplace_back(static_cast<int>(i + 1), par);
            if (par == ZParity::odd)
                odd_count = !odd_count;
            break;
        }
        case Letter::x:
            break;
        }
    }
    return out;
}

std::optional<FamilyStats> word_stats(const ProfileWord& w)
{
    if (!w.empty() && w.back() == Letter::y)
        return std::nullopt;
    FamilyStats st;
    st.n = word_weight(w);
    for (Letter l : w) {
        if (l == Letter::x)
            ++st.k;
        else if (l == Letter::z)
            ++st.l;
    }
    for (const auto& [pos, par] : classify_z(w))
        if (par == ZParity::odd)
            ++st.j;
    return st;
}

bool is_in_W(const ProfileWord& w, long long n, int k, int l, std::optional<int> j)
{
    const auto st = word_stats(w);
    if (!st)
        return false;
    return st->n == n && st->k == k && st->l == l && (!j || st->j == *j);
}

} // namespace qpart
