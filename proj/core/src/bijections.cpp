#include "qpart/bijections.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "qpart/families.hpp"

namespace qpart {

namespace {

[[noreturn]] void domain_fail(const char* map, const std::string& why)
{
    throw std::domain_error(std::string(map) + ": " + why);
}

Partition merge_descending(const Partition& a, const Partition& b)
{
    std::vector<int> merged;
    merged.reserve(a.size() + b.size());
    std::merge(a.parts().begin(), a.parts().end(),
               b.parts().begin(), b.parts().end(),
               std::back_inserter(merged), std::greater<int>());
    return Partition(std::move(merged));
}

} // namespace

IndentedPeel two_indent(const TwoColorPartition& p)
{
    const int m = static_cast<int>(p.size());
    std::vector<int> rows;
    std::vector<int> green_columns;
    rows.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        // Remove the odd staircase: row i loses 2(m - i) + 1 cells.
        const long long tilde =
            p.parts()[static_cast<std::size_t>(i - 1)].value - 2LL * m + 2 * i - 1;
        if (tilde < 0)
            domain_fail("two_indent", "row " + std::to_string(i)
                        + " has no room for the staircase (input not in L_2)");
        if (!rows.empty() && tilde > rows.back())
            domain_fail("two_indent", "indented rows increase at row "
                        + std::to_string(i) + " (input not in L_2)");
        rows.push_back(static_cast<int>(tilde));
        if (p.parts()[static_cast<std::size_t>(i - 1)].color == Color::green) {
            if (tilde < 1)
                domain_fail("two_indent", "green row " + std::to_string(i)
                            + " vanishes under the staircase (input not in L_2)");
            green_columns.push_back(static_cast<int>(tilde));
        }
    }
    while (!rows.empty() && rows.back() == 0)
        rows.pop_back();
    return IndentedPeel{m, Partition(std::move(rows)), std::move(green_columns)};
}

ProfileWord phi(const TwoColorPartition& p)
{
    if (auto why = l_violation(1, p))
        domain_fail("phi", *why);
    ProfileWord w;
    const auto& parts = p.parts();
    const int m = static_cast<int>(parts.size());
    // Trace the profile bottom row to top row. A row with gap g below it
    // contributes g east steps and one north step: a red row emits g-1
    // y's and the corner x, a green row emits g-2 y's and the tail z.
    for (int i = m; i >= 1; --i) {
        const int below = i < m ? parts[static_cast<std::size_t>(i)].value : 0;
        const int gap = parts[static_cast<std::size_t>(i - 1)].value - below;
        const int tail = parts[static_cast<std::size_t>(i - 1)].color == Color::red ? 1 : 2;
        for (int e = 0; e < gap - tail; ++e)
            w.push_back(Letter::y);
        w.push_back(tail == 1 ? Letter::x : Letter::z);
    }
    assert(word_weight(w) == p.weight());
    return w;
}

TwoColorPartition phi_inverse(const ProfileWord& w)
{
    if (!w.empty() && w.back() == Letter::y)
        domain_fail("phi_inverse", "word not in W (ends with y)");
    // The non-y letter at position i closes a part of size i + #{z <= i}:
    // y and x consume one east step each, z consumes two.
    std::vector<ColoredPart> parts;
    int z_seen = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Letter::z) {
            ++z_seen;
            parts.push_back({static_cast<int>(i + 1) + z_seen, Color::green});
        } else if (w[i] == Letter::x) {
            parts.push_back({static_cast<int>(i + 1) + z_seen, Color::red});
        }
    }
    std::reverse(parts.begin(), parts.end());
    TwoColorPartition result(std::move(parts));
    assert(is_in_L(1, result));
    return result;
}

TwoColorPartition pair_to_two_color(const PartitionPair& pr)
{
    std::vector<ColoredPart> parts;
    for (int v : pr.pi.parts())
        parts.push_back({v, Color::red});
    for (int v : pr.sigma.parts())
        parts.push_back({v, Color::green});
    std::sort(parts.begin(), parts.end(), [](const ColoredPart& a, const ColoredPart& b) {
        if (a.value != b.value)
            return a.value > b.value;
        return a.color == Color::red && b.color == Color::green;
    });
    return TwoColorPartition(std::move(parts));
}

PartitionPair psi(const ProfileWord& w)
{
    const auto stats = word_stats(w);
    if (!stats)
        domain_fail("psi", "word not in W (ends with y)");

    const auto zs = classify_z(w); // ascending positions
    const int l = static_cast<int>(zs.size());

    // Prefix counts of x's and even z's.
    const int len = static_cast<int>(w.size());
    std::vector<int> x_upto(static_cast<std::size_t>(len) + 1, 0);
    std::vector<int> evenz_upto(static_cast<std::size_t>(len) + 1, 0);
    std::size_t zi = 0;
    for (int i = 1; i <= len; ++i) {
        x_upto[i] = x_upto[i - 1] + (w[static_cast<std::size_t>(i - 1)] == Letter::x);
        int even_here = 0;
        if (zi < zs.size() && zs[zi].first == i) {
            even_here = zs[zi].second == ZParity::even;
            ++zi;
        }
        evenz_upto[i] = evenz_upto[i - 1] + even_here;
    }

    // Screen right to left: sigma_i and the prefix letter v_i come from
    // the i-th z from the right.
    std::vector<int> sigma_parts;
    ProfileWord u_hat;
    for (int i = 0; i < l; ++i) {
        const auto& [pos, parity] = zs[static_cast<std::size_t>(l - 1 - i)];
        sigma_parts.push_back(pos - x_upto[pos] + evenz_upto[pos]);
        u_hat.push_back(parity == ZParity::odd ? Letter::x : Letter::y);
    }
    for (Letter c : w)
        u_hat.push_back(c == Letter::z ? Letter::y : c);
    while (!u_hat.empty() && u_hat.back() == Letter::y)
        u_hat.pop_back(); // weight-neutral
    const Partition pi = phi_inverse(u_hat).values();
    const Partition sigma{sigma_parts};

    assert(word_weight(w) == pi.weight() + sigma.weight());
    return PartitionPair{pi, sigma};
}

ProfileWord psi_inverse(const PartitionPair& pr)
{
    if (!is_strict(pr.pi))
        domain_fail("psi_inverse", "pi must have distinct parts");
    if (!is_strict(pr.sigma))
        domain_fail("psi_inverse", "sigma must have distinct parts");
    for (int v : pr.sigma.parts())
        if (v % 2 != 0)
            domain_fail("psi_inverse", "sigma part " + std::to_string(v) + " is odd");

    const int l = static_cast<int>(pr.sigma.size());
    const std::set<int> pi_set(pr.pi.parts().begin(), pr.pi.parts().end());

    // x positions of the reconstructed word: pi parts beyond the l-letter
    // prefix, shifted back.
    std::set<int> x_pos;
    for (int v : pr.pi.parts())
        if (v > l)
            x_pos.insert(v - l);

    // Reinsert z's left to right (i = l down to 1). All letters below the
    // scan point are final, so the parity class and the sigma equation of
    // a candidate slot are exact; exactly one slot must satisfy both.
    std::vector<int> z_pos; // ascending
    int placed_even = 0, placed_odd = 0;
    for (int i = l; i >= 1; --i) {
        const int target = pr.sigma.parts()[static_cast<std::size_t>(i - 1)];
        const bool want_odd = pi_set.count(i) > 0; // v_i = x iff position i of u_hat is an x
        int found = 0, found_s = 0;
        bool found_odd = false;
        for (int s = (z_pos.empty() ? 1 : z_pos.back() + 1);; ++s) {
            if (x_pos.count(s))
                continue;
            const int x_below = static_cast<int>(
                std::distance(x_pos.begin(), x_pos.upper_bound(s)));
            const int base = s - x_below + placed_even;
            if (base > target)
                break;
            // Parity class: y's below s plus odd placed z's.
            const int y_below = (s - 1) - x_below
                              - static_cast<int>(z_pos.size());
            const bool odd_class = ((y_below + placed_odd) % 2) != 0;
            const int value = base + (odd_class ? 0 : 1);
            if (value == target && odd_class == want_odd) {
                ++found;
                found_s = s;
                found_odd = odd_class;
            }
        }
        if (found != 1)
            throw std::runtime_error(
                "psi_inverse: sigma part " + std::to_string(target)
                + " admits " + std::to_string(found)
                + " placements; input is not the image of a word in W");
        z_pos.push_back(found_s);
        (found_odd ? placed_odd : placed_even) += 1;
    }

    int length = 0;
    if (!x_pos.empty())
        length = *x_pos.rbegin();
    if (!z_pos.empty())
        length = std::max(length, z_pos.back());
    ProfileWord w(static_cast<std::size_t>(length), Letter::y);
    for (int s : x_pos)
        w[static_cast<std::size_t>(s - 1)] = Letter::x;
    for (int s : z_pos)
        w[static_cast<std::size_t>(s - 1)] = Letter::z;

    if (psi(w) != pr)
        throw std::runtime_error("psi_inverse: reconstruction failed round-trip check");
    return w;
}

TripleDecomposition eta(const TwoColorPartition& p)
{
    if (auto why = l_violation(2, p))
        domain_fail("eta", *why);
    if (p.empty())
        return TripleDecomposition{};

    const IndentedPeel peel = two_indent(p);
    const Partition tilde_conj = conjugate(peel.lambda_tilde);

    // Column lengths marked green; pi collects every part of the
    // conjugate sharing a length with a green-marked column, which is
    // exactly what keeps pi and sigma disjoint.
    std::set<int> green_lengths;
    for (int c : peel.green_columns)
        green_lengths.insert(tilde_conj.row(static_cast<std::size_t>(c)));

    std::vector<int> pi_parts, sigma_parts;
    for (int v : tilde_conj.parts())
        (green_lengths.count(v) ? pi_parts : sigma_parts).push_back(v);

    TripleDecomposition t{peel.m, Partition(std::move(pi_parts)),
                          Partition(std::move(sigma_parts))};
    assert(is_basis(t));
    assert(static_cast<long long>(peel.m) * peel.m + t.pi.weight() + t.sigma.weight()
           == p.weight());
    return t;
}

TwoColorPartition eta_inverse(const TripleDecomposition& t)
{
    if (t.d < 0)
        domain_fail("eta_inverse", "d must be non-negative");
    if (!t.pi.empty() && t.pi.parts().front() > t.d)
        domain_fail("eta_inverse", "pi has a part exceeding d");
    if (!t.sigma.empty() && t.sigma.parts().front() > t.d)
        domain_fail("eta_inverse", "sigma has a part exceeding d");
    if (!is_basis(t))
        domain_fail("eta_inverse", "pi and sigma share a part (not a basis partition)");
    if (t.d == 0)
        return TwoColorPartition{};

    const int m = t.d;
    const Partition tilde = conjugate(merge_descending(t.pi, t.sigma));

    // Green rows are the distinct part values of pi: a green row i ends in
    // a column of length exactly i.
    std::set<int> green_rows(t.pi.parts().begin(), t.pi.parts().end());

    std::vector<ColoredPart> parts;
    for (int i = 1; i <= m; ++i) {
        const int value = tilde.row(static_cast<std::size_t>(i)) + 2 * (m - i) + 1;
        const Color color = green_rows.count(i) ? Color::green : Color::red;
        parts.push_back({value, color});
    }
    TwoColorPartition result(std::move(parts));
    if (auto why = l_violation(2, result))
        domain_fail("eta_inverse", "image leaves L_2 (" + *why + ")");
    assert(eta(result) == t);
    return result;
}

Partition theta(const TwoColorPartition& p)
{
    if (auto why = l_violation(3, p))
        domain_fail("theta", *why);
    if (p.empty())
        return Partition{};

    const IndentedPeel peel = two_indent(p);
    const Partition tilde_conj = conjugate(peel.lambda_tilde);

    // One conjugate part per green row: the column holding that row's last
    // cell. The rest of the conjugate is sigma.
    std::map<int, int> remaining; // value -> multiplicity
    for (int v : tilde_conj.parts())
        ++remaining[v];
    std::vector<int> pi_parts;
    for (int c : peel.green_columns) {
        const int length = tilde_conj.row(static_cast<std::size_t>(c));
        auto it = remaining.find(length);
        if (it == remaining.end() || it->second <= 0)
            throw std::logic_error("theta: green column lost its conjugate part");
        pi_parts.push_back(length);
        if (--it->second == 0)
            remaining.erase(it);
    }
    std::sort(pi_parts.begin(), pi_parts.end(), std::greater<int>());
    std::vector<int> sigma_parts;
    for (auto it = remaining.rbegin(); it != remaining.rend(); ++it)
        sigma_parts.insert(sigma_parts.end(), static_cast<std::size_t>(it->second),
                           it->first);

    const TripleDecomposition t{peel.m, Partition(std::move(pi_parts)),
                                Partition(std::move(sigma_parts))};
    const Partition result = from_triple(t);
    assert(is_strict(result));
    assert(durfee_side(result) == peel.m);
    assert(result.weight() == p.weight());
    return result;
}

TwoColorPartition theta_inverse(const Partition& p)
{
    if (!is_strict(p))
        domain_fail("theta_inverse", "parts must be distinct");
    if (p.empty())
        return TwoColorPartition{};

    const TripleDecomposition t = to_triple(p);
    const int m = t.d;
    const Partition tilde = conjugate(merge_descending(t.pi, t.sigma));
    std::set<int> green_rows(t.pi.parts().begin(), t.pi.parts().end());

    std::vector<ColoredPart> parts;
    for (int i = 1; i <= m; ++i) {
        const int value = tilde.row(static_cast<std::size_t>(i)) + 2 * (m - i) + 1;
        const Color color = green_rows.count(i) ? Color::green : Color::red;
        parts.push_back({value, color});
    }
    TwoColorPartition result(std::move(parts));
    if (auto why = l_violation(3, result))
        domain_fail("theta_inverse", "image leaves L_3 (" + *why + ")");
    assert(theta(result) == p);
    return result;
}

} // namespace qpart
