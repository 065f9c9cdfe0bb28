// Batch front end for the partition-family engine: exhaustive family
// enumeration, bijection application, theorem verification sweeps, and
// truncated q-series expansion. Output is line-oriented text by default
// (--json for structured output); exit codes are 0 = pass, 1 = mismatch
// or domain violation, 2 = usage error.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qpart/bijections.hpp>
#include <qpart/families.hpp>
#include <qpart/gf.hpp>
#include <qpart/series.hpp>
#include <qpart/text.hpp>

using namespace qpart;

namespace {

struct Cell {
    std::string params;
    long long expected = 0;
    long long actual = 0;
};

struct Report {
    bool pass = true;
    std::vector<Cell> cells;
    std::string first_mismatch;
    bool json = false;

    void add(std::string params, long long expected, long long actual)
    {
        if (!json)
            std::cout << "cell " << params << ": expected " << expected
                      << ", actual " << actual
                      << (expected == actual ? "" : "  << MISMATCH") << "\n";
        if (expected != actual && pass) {
            pass = false;
            first_mismatch = params + ": expected " + std::to_string(expected)
                           + ", actual " + std::to_string(actual);
        }
        cells.push_back({std::move(params), expected, actual});
    }

    void fail(std::string what)
    {
        if (!json)
            std::cout << what << "  << MISMATCH\n";
        if (pass) {
            pass = false;
            first_mismatch = what;
        }
        cells.push_back({std::move(what), 1, 0});
    }

    int finish() const
    {
        if (json) {
            std::string out = "{\"status\":\"";
            out += pass ? "pass" : "fail";
            out += "\",\"cells\":[";
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i)
                    out += ",";
                out += "{\"params\":\"" + cells[i].params + "\",\"expected\":"
                     + std::to_string(cells[i].expected) + ",\"actual\":"
                     + std::to_string(cells[i].actual) + "}";
            }
            out += "],\"first_mismatch\":";
            out += first_mismatch.empty() ? "null" : "\"" + first_mismatch + "\"";
            out += "}";
            std::cout << out << "\n";
        } else {
            std::cout << (pass ? "PASS" : "FAIL: " + first_mismatch) << "\n";
        }
        return pass ? 0 : 1;
    }
};

void progress(long long n)
{
    std::cerr << "n=" << n << "\n";
}

std::string cell_params(long long n, int k, int l)
{
    return "(" + std::to_string(n) + "," + std::to_string(k) + ","
         + std::to_string(l) + ")";
}

std::string cell_params(long long n, int k, int l, int j)
{
    return "(" + std::to_string(n) + "," + std::to_string(k) + ","
         + std::to_string(l) + "," + std::to_string(j) + ")";
}

// ---- verify sweeps ------------------------------------------------------

void verify_aggregate(Report& rep, int which, long long max_n, const LdRules& rules)
{
    for (long long n = 0; n <= max_n; ++n) {
        progress(n);
        long long lhs = 0, rhs = 0;
        if (which == 1) {
            lhs = static_cast<long long>(enumerate_L(1, n, {}, {}, rules).size());
            rhs = static_cast<long long>(enumerate_A(n).size());
        } else if (which == 2) {
            lhs = static_cast<long long>(enumerate_L(2, n, {}, {}, rules).size());
            for (const auto& p : enumerate_partitions(n))
                if (is_basis(to_triple(p)))
                    ++rhs;
        } else {
            lhs = static_cast<long long>(enumerate_L(3, n, {}, {}, rules).size());
            ConstraintSet c;
            c.distinct = true;
            rhs = static_cast<long long>(enumerate_partitions(n, c).size());
        }
        rep.add("(" + std::to_string(n) + ")", rhs, lhs);
    }
}

std::map<std::pair<int, int>, std::vector<TwoColorPartition>>
group_by_kl(const std::vector<TwoColorPartition>& v)
{
    std::map<std::pair<int, int>, std::vector<TwoColorPartition>> out;
    for (const auto& p : v)
        out[{p.red_count(), p.green_count()}].push_back(p);
    return out;
}

void verify_refinement(Report& rep, int theorem, long long max_n, const LdRules& rules)
{
    const int d = theorem == 5 ? 1 : theorem == 6 ? 2 : 3;
    for (long long n = 0; n <= max_n; ++n) {
        progress(n);
        auto lcells = group_by_kl(enumerate_L(d, n, {}, {}, rules));
        // Visit every cell that could be populated on either side.
        std::set<std::pair<int, int>> keys;
        for (const auto& [kl, v] : lcells)
            keys.insert(kl);
        for (int k = 0; static_cast<long long>(k) * (k + 1) / 2 <= n; ++k)
            for (int l = 0; static_cast<long long>(k + l) * (k + l) <= n; ++l)
                keys.insert({k, l});
        for (const auto& [k, l] : keys) {
            const long long actual =
                lcells.count({k, l}) ? static_cast<long long>(lcells[{k, l}].size()) : 0;
            long long expected = 0;
            if (theorem == 5)
                expected = static_cast<long long>(enumerate_A(n, k, l).size());
            else if (theorem == 6)
                expected = static_cast<long long>(enumerate_B(n, k, l).size());
            else
                expected = static_cast<long long>(enumerate_D(n, k, l).size());
            if (expected == 0 && actual == 0)
                continue;
            rep.add(cell_params(n, k, l), expected, actual);
        }
    }
}

void verify_phi(Report& rep, long long max_n)
{
    for (long long n = 0; n <= max_n; ++n) {
        progress(n);
        auto members = enumerate_L(1, n);
        std::set<std::string> images;
        for (const auto& p : members) {
            const ProfileWord w = phi(p);
            if (word_weight(w) != p.weight() || phi_inverse(w) != p) {
                rep.fail("phi round trip at " + to_text(p));
                continue;
            }
            images.insert(to_text(w));
        }
        std::set<std::string> words;
        for (const auto& w : enumerate_W(n))
            words.insert(to_text(w));
        rep.add("(" + std::to_string(n) + ") |phi(L_1)| vs |W|",
                static_cast<long long>(words.size()),
                static_cast<long long>(images.size()));
        if (images != words)
            rep.fail("phi image differs from W at n=" + std::to_string(n));
    }
}

void verify_psi(Report& rep, long long max_n)
{
    for (long long n = 0; n <= max_n; ++n) {
        progress(n);
        std::map<std::tuple<int, int, int>, std::set<std::string>> images;
        for (const auto& w : enumerate_W(n)) {
            const auto st = *word_stats(w);
            const PartitionPair pr = psi(w);
            if (psi_inverse(pr) != w) {
                rep.fail("psi round trip at word " + to_text(w));
                continue;
            }
            const TwoColorPartition img = pair_to_two_color(pr);
            const auto ast = a_stats(img);
            if (!ast || ast->n != n || ast->k != st.k || ast->l != st.l || ast->j != st.j) {
                rep.fail("psi image stats at word " + to_text(w));
                continue;
            }
            images[{st.k, st.l, st.j}].insert(to_text(img));
        }
        for (auto& [klj, set_imgs] : images) {
            const auto [k, l, j] = klj;
            const auto want = enumerate_A(n, k, l, j);
            std::set<std::string> wset;
            for (const auto& p : want)
                wset.insert(to_text(p));
            rep.add(cell_params(n, k, l, j), static_cast<long long>(wset.size()),
                    static_cast<long long>(set_imgs.size()));
            if (set_imgs != wset)
                rep.fail("psi image set differs at " + cell_params(n, k, l, j));
        }
    }
}

void verify_eta(Report& rep, long long max_n)
{
    for (long long n = 0; n <= max_n; ++n) {
        progress(n);
        auto cells = group_by_kl(enumerate_L(2, n));
        std::set<std::pair<int, int>> keys;
        for (const auto& [kl, v] : cells)
            keys.insert(kl);
        for (int k = 0; static_cast<long long>(k) * k <= n || k == 0; ++k)
            for (int l = 0; static_cast<long long>(k + l) * (k + l) <= n; ++l)
                keys.insert({k, l});
        for (const auto& [k, l] : keys) {
            std::set<std::string> images;
            if (cells.count({k, l}))
                for (const auto& p : cells[{k, l}]) {
                    const TripleDecomposition t = eta(p);
                    if (!is_basis(t) || eta_inverse(t) != p) {
                        rep.fail("eta round trip at " + to_text(p));
                        continue;
                    }
                    images.insert(to_text(t));
                }
            const auto want = enumerate_B(n, k, l);
            if (want.empty() && images.empty())
                continue;
            std::set<std::string> wset;
            for (const auto& t : want)
                wset.insert(to_text(t));
            rep.add(cell_params(n, k, l), static_cast<long long>(wset.size()),
                    static_cast<long long>(images.size()));
            if (images != wset)
                rep.fail("eta image set differs at " + cell_params(n, k, l));
        }
    }
}

void verify_theta(Report& rep, long long max_n)
{
    for (long long n = 0; n <= max_n; ++n) {
        progress(n);
        auto cells = group_by_kl(enumerate_L(3, n));
        std::set<std::pair<int, int>> keys;
        for (const auto& [kl, v] : cells)
            keys.insert(kl);
        for (int k = 0; static_cast<long long>(k) * k <= n || k == 0; ++k)
            for (int l = 0; static_cast<long long>(k + l) * (k + l) <= n; ++l)
                keys.insert({k, l});
        for (const auto& [k, l] : keys) {
            std::set<std::string> images;
            if (cells.count({k, l}))
                for (const auto& p : cells[{k, l}]) {
                    const Partition img = theta(p);
                    if (theta_inverse(img) != p) {
                        rep.fail("theta round trip at " + to_text(p));
                        continue;
                    }
                    images.insert(to_text(img));
                }
            const auto want = enumerate_D(n, k, l);
            if (want.empty() && images.empty())
                continue;
            std::set<std::string> wset;
            for (const auto& p : want)
                wset.insert(to_text(p));
            rep.add(cell_params(n, k, l), static_cast<long long>(wset.size()),
                    static_cast<long long>(images.size()));
            if (images != wset)
                rep.fail("theta image set differs at " + cell_params(n, k, l));
        }
    }
}

void verify_identity(Report& rep, const std::string& name, int order, int t_order)
{
    std::pair<TruncatedSeries, TruncatedSeries> sides = [&] {
        if (name == "lebesgue")
            return lebesgue_sides(order);
        if (name == "sylvester")
            return sylvester_sides(order);
        return qbinomial_sides(order, t_order);
    }();
    const auto diff = first_difference(sides.first, sides.second);
    rep.add("(" + name + " order=" + std::to_string(order) + ")", 0,
            diff ? 1 : 0);
    if (diff) {
        MarkerPoly mono = MarkerPoly::term(diff->monomial);
        rep.fail("first mismatch at q^" + std::to_string(diff->q_exp) + " "
                 + mono.to_string() + ": " + std::to_string(diff->lhs) + " vs "
                 + std::to_string(diff->rhs));
    }
}

// Compare a series whose coefficients live on markers x,y (and optionally
// z) against per-cell enumeration counts.
void verify_gf_counts(Report& rep, const TruncatedSeries& s, int order,
                      const std::string& which)
{
    for (int n = 0; n <= order; ++n) {
        progress(n);
        // counts from enumeration
        std::map<Monomial, long long> want;
        if (which == "gf2" || which == "gf8") {
            const int d = which == "gf2" ? 1 : 2;
            for (const auto& p : enumerate_L(d, n)) {
                Monomial mono = kUnitMonomial;
                mono[0] = p.red_count();
                mono[1] = p.green_count();
                ++want[mono];
            }
        } else if (which == "gf3") {
            for (const auto& p : enumerate_A(n)) {
                const auto st = *a_stats(p);
                Monomial mono = kUnitMonomial;
                mono[0] = st.k;
                mono[1] = st.l;
                ++want[mono];
            }
        } else { // gfAref
            for (const auto& p : enumerate_A(n)) {
                const auto st = *a_stats(p);
                Monomial mono = kUnitMonomial;
                mono[0] = st.k;
                mono[1] = st.l;
                mono[2] = st.j;
                ++want[mono];
            }
        }
        const auto& got = s.at(n).terms();
        std::set<Monomial> monos;
        for (const auto& [m, c] : want)
            monos.insert(m);
        for (const auto& [m, c] : got)
            monos.insert(m);
        for (const auto& m : monos) {
            const long long expected = want.count(m) ? want.at(m) : 0;
            const long long actual = s.at(n).coefficient(m);
            rep.add("(q^" + std::to_string(n) + " " + MarkerPoly::term(m).to_string() + ")",
                    expected, actual);
        }
    }
}

// ---- subcommand payloads -------------------------------------------------

int run_enum(const std::string& family, std::optional<int> d, long long n,
             std::optional<int> k, std::optional<int> l, std::optional<int> j,
             bool json)
{
    std::vector<std::string> lines;
    if (family == "L") {
        if (!d)
            throw CLI::ValidationError("--d is required for family L");
        for (const auto& p : enumerate_L(*d, n, k, l))
            lines.push_back(json ? to_json(p) : to_text(p));
    } else if (family == "A") {
        for (const auto& p : enumerate_A(n, k, l, j))
            lines.push_back(json ? to_json(p) : to_text(p));
    } else if (family == "B") {
        if (!k || !l)
            throw CLI::ValidationError("--k and --l are required for family B");
        for (const auto& t : enumerate_B(n, *k, *l))
            lines.push_back(json ? to_json(t) : to_text(t));
    } else if (family == "D") {
        if (!k || !l)
            throw CLI::ValidationError("--k and --l are required for family D");
        for (const auto& p : enumerate_D(n, *k, *l))
            lines.push_back(json ? to_json(p) : to_text(p));
    } else { // W
        for (const auto& w : enumerate_W(n, k, l, j))
            lines.push_back(json ? to_json(w) : to_text(w));
    }
    for (const auto& line : lines)
        std::cout << line << "\n";
    std::cout << "count=" << lines.size() << "\n";
    return 0;
}

int run_apply(const std::string& map, const std::string& input, bool json)
{
    std::string out;
    if (map == "phi") {
        const auto w = phi(parse_two_color(input));
        out = json ? to_json(w) : to_text(w);
    } else if (map == "phi-inv") {
        const auto p = phi_inverse(parse_word(input));
        out = json ? to_json(p) : to_text(p);
    } else if (map == "psi") {
        const auto pr = psi(parse_word(input));
        out = json ? to_json(pr) : to_text(pr);
    } else if (map == "psi-inv") {
        const auto w = psi_inverse(parse_pair(input));
        out = json ? to_json(w) : to_text(w);
    } else if (map == "eta") {
        const auto t = eta(parse_two_color(input));
        out = json ? to_json(t) : to_text(t);
    } else if (map == "eta-inv") {
        const auto p = eta_inverse(parse_triple(input));
        out = json ? to_json(p) : to_text(p);
    } else if (map == "theta") {
        const auto p = theta(parse_two_color(input));
        out = json ? to_json(p) : to_text(p);
    } else { // theta-inv
        const auto p = theta_inverse(parse_partition(input));
        out = json ? to_json(p) : to_text(p);
    }
    std::cout << out << "\n";
    return 0;
}

int run_table(const std::string& family, std::optional<int> d, long long max_n,
              bool json)
{
    struct Row {
        long long n;
        int k, l, j;
        long long count;
        bool has_j;
    };
    std::vector<Row> rows;
    for (long long n = 0; n <= max_n; ++n) {
        progress(n);
        std::map<std::tuple<int, int, int>, long long> cell;
        if (family == "L") {
            if (!d)
                throw CLI::ValidationError("--d is required for family L");
            for (const auto& p : enumerate_L(*d, n))
                ++cell[{p.red_count(), p.green_count(), -1}];
        } else if (family == "A") {
            for (const auto& p : enumerate_A(n)) {
                const auto st = *a_stats(p);
                ++cell[{st.k, st.l, -1}];
            }
        } else if (family == "B") {
            for (int k = 0; static_cast<long long>(k) * k <= n || k == 0; ++k)
                for (int l = 0; static_cast<long long>(k + l) * (k + l) <= n; ++l) {
                    const auto count = enumerate_B(n, k, l).size();
                    if (count)
                        cell[{k, l, -1}] = static_cast<long long>(count);
                }
        } else if (family == "D") {
            for (int k = 0; static_cast<long long>(k) * k <= n || k == 0; ++k)
                for (int l = 0; static_cast<long long>(k + l) * (k + l) <= n; ++l) {
                    const auto count = enumerate_D(n, k, l).size();
                    if (count)
                        cell[{k, l, -1}] = static_cast<long long>(count);
                }
        } else { // W
            for (const auto& w : enumerate_W(n)) {
                const auto st = *word_stats(w);
                ++cell[{st.k, st.l, st.j}];
            }
        }
        for (const auto& [key, count] : cell) {
            const auto [k, l, j] = key;
            rows.push_back({n, k, l, j, count, j >= 0});
        }
    }
    if (json) {
        std::string out = "[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i)
                out += ",";
            out += "{\"n\":" + std::to_string(rows[i].n)
                 + ",\"k\":" + std::to_string(rows[i].k)
                 + ",\"l\":" + std::to_string(rows[i].l);
            if (rows[i].has_j)
                out += ",\"j\":" + std::to_string(rows[i].j);
            out += ",\"count\":" + std::to_string(rows[i].count) + "}";
        }
        std::cout << out << "]\n";
    } else {
        for (const auto& r : rows) {
            std::cout << r.n << "\t" << r.k << "\t" << r.l;
            if (r.has_j)
                std::cout << "\t" << r.j;
            std::cout << "\t" << r.count << "\n";
        }
    }
    return 0;
}

int run_qseries(const std::string& builder, int order, std::optional<int> t_order)
{
    TruncatedSeries s(0);
    if (builder == "gf2")
        s = gf_L1_rhs(order);
    else if (builder == "gf3")
        s = gf_A_rhs(order);
    else if (builder == "gfAref")
        s = gf_A_refined_rhs(order);
    else if (builder == "gf8")
        s = gf_L2_rhs(order);
    else if (builder == "lebesgue-lhs")
        s = lebesgue_sides(order).first;
    else if (builder == "lebesgue-rhs")
        s = lebesgue_sides(order).second;
    else if (builder == "sylvester-lhs")
        s = sylvester_sides(order).first;
    else if (builder == "sylvester-rhs")
        s = sylvester_sides(order).second;
    else {
        if (!t_order)
            throw CLI::ValidationError("--t-order is required for qbinomial builders");
        if (builder == "qbinomial-lhs")
            s = qbinomial_sides(order, *t_order).first;
        else
            s = qbinomial_sides(order, *t_order).second;
    }
    std::cout << dump(s);
    return 0;
}

int run_verify(const std::string& theorem, std::optional<long long> max_n,
               std::optional<int> order, std::optional<int> t_order,
               const std::string& mutate, bool json)
{
    Report rep;
    rep.json = json;
    const auto need_max_n = [&]() -> long long {
        if (!max_n)
            throw CLI::ValidationError("--max-n is required for theorem " + theorem);
        return *max_n;
    };
    const auto need_order = [&]() -> int {
        if (!order)
            throw CLI::ValidationError("--order is required for " + theorem);
        return *order;
    };

    LdRules rules;
    if (!mutate.empty()) {
        if (theorem != "1.1" && theorem != "1.2" && theorem != "1.3"
            && theorem != "1.5" && theorem != "1.6" && theorem != "1.7")
            throw CLI::ValidationError("--mutate applies only to the theorem sweeps");
        if (mutate == "green-gap")
            rules.green_gap_delta = 0;
        else if (mutate == "red-gap")
            rules.red_gap_delta = -1;
        else if (mutate == "allow-1g")
            rules.forbid_green_one = false;
        else
            rules.forbid_green_d_minus_1 = false; // allow-d1g
    }

    if (theorem == "1.1")
        verify_aggregate(rep, 1, need_max_n(), rules);
    else if (theorem == "1.2")
        verify_aggregate(rep, 2, need_max_n(), rules);
    else if (theorem == "1.3")
        verify_aggregate(rep, 3, need_max_n(), rules);
    else if (theorem == "1.5")
        verify_refinement(rep, 5, need_max_n(), rules);
    else if (theorem == "1.6")
        verify_refinement(rep, 6, need_max_n(), rules);
    else if (theorem == "1.7")
        verify_refinement(rep, 7, need_max_n(), rules);
    else if (theorem == "phi")
        verify_phi(rep, need_max_n());
    else if (theorem == "psi")
        verify_psi(rep, need_max_n());
    else if (theorem == "eta")
        verify_eta(rep, need_max_n());
    else if (theorem == "theta")
        verify_theta(rep, need_max_n());
    else if (theorem == "lebesgue" || theorem == "sylvester")
        verify_identity(rep, theorem, need_order(), 0);
    else if (theorem == "qbinomial") {
        if (!t_order)
            throw CLI::ValidationError("--t-order is required for qbinomial");
        verify_identity(rep, theorem, need_order(), *t_order);
    } else if (theorem == "gf2")
        verify_gf_counts(rep, gf_L1_rhs(need_order()), *order, "gf2");
    else if (theorem == "gf3")
        verify_gf_counts(rep, gf_A_rhs(need_order()), *order, "gf3");
    else if (theorem == "gf8") {
        const auto s = gf_L2_rhs(need_order());
        verify_gf_counts(rep, s, *order, "gf8");
        // the same series also generates the basis cells
        for (int n = 0; n <= *order; ++n)
            for (const auto& [mono, c] : s.at(n).terms()) {
                const int k = mono[0], l = mono[1];
                rep.add("(B " + cell_params(n, k, l) + ")",
                        static_cast<long long>(enumerate_B(n, k, l).size()), c);
            }
    } else if (theorem == "gfAref") {
        verify_gf_counts(rep, gf_A_refined_rhs(need_order()), *order, "gfAref");
        // z = 1 collapses the refinement to Eq. (3), termwise.
        const auto collapsed = gf_A_refined_rhs(*order).substitute(Marker::z, 1);
        const auto diff = first_difference(collapsed, gf_A_rhs(*order));
        rep.add("(z=1 collapse)", 0, diff ? 1 : 0);
    } else {
        throw CLI::ValidationError("unknown theorem selector: " + theorem);
    }
    return rep.finish();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"qpart: two-color partition families, bijections, and q-series"};
    app.require_subcommand(1);

    // enum
    auto* cmd_enum = app.add_subcommand("enum", "Enumerate a family");
    std::string enum_family;
    int enum_d = 0, enum_k = 0, enum_l = 0, enum_j = 0;
    long long enum_n = 0;
    bool enum_json = false;
    cmd_enum->add_option("--family", enum_family, "Family: L, A, B, D, or W")
        ->required()
        ->check(CLI::IsMember({"L", "A", "B", "D", "W"}));
    cmd_enum->add_option("--d", enum_d, "Gap parameter d (family L)");
    cmd_enum->add_option("--n", enum_n, "Weight")->required();
    cmd_enum->add_option("--k", enum_k, "Red-part count filter");
    cmd_enum->add_option("--l", enum_l, "Green-part count filter");
    cmd_enum->add_option("--j", enum_j, "Auxiliary count filter");
    cmd_enum->add_flag("--json", enum_json, "JSON output");

    // apply
    auto* cmd_apply = app.add_subcommand("apply", "Apply a bijection");
    std::string apply_map, apply_input;
    bool apply_json = false;
    cmd_apply->add_option("--map", apply_map, "Map name")
        ->required()
        ->check(CLI::IsMember({"phi", "phi-inv", "psi", "psi-inv",
                               "eta", "eta-inv", "theta", "theta-inv"}));
    cmd_apply->add_option("input", apply_input, "Serialized input object")->required();
    cmd_apply->add_flag("--json", apply_json, "JSON output");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Verify a theorem or identity");
    std::string verify_theorem;
    long long verify_max_n = 0;
    int verify_order = 0, verify_t_order = 0;
    bool verify_json = false;
    cmd_verify->add_option("--theorem", verify_theorem, "Selector")
        ->required()
        ->check(CLI::IsMember({"1.1", "1.2", "1.3", "1.5", "1.6", "1.7",
                               "phi", "psi", "eta", "theta",
                               "lebesgue", "sylvester", "qbinomial",
                               "gf2", "gf3", "gf8", "gfAref"}));
    cmd_verify->add_option("--max-n", verify_max_n, "Sweep bound for enumerative checks");
    cmd_verify->add_option("--order", verify_order, "q-order for series checks");
    cmd_verify->add_option("--t-order", verify_t_order, "t-degree for the q-binomial check");
    std::string verify_mutate;
    cmd_verify->add_option("--mutate", verify_mutate,
                           "Seed a single-rule mutation of the membership predicate "
                           "(testing aid; the sweep must then fail)")
        ->check(CLI::IsMember({"green-gap", "red-gap", "allow-1g", "allow-d1g"}));
    cmd_verify->add_flag("--json", verify_json, "JSON report");

    // qseries
    auto* cmd_qseries = app.add_subcommand("qseries", "Expand a series builder");
    std::string qs_builder;
    int qs_order = 0, qs_t_order = 0;
    cmd_qseries->add_option("--builder", qs_builder, "Builder name")
        ->required()
        ->check(CLI::IsMember({"gf2", "gf3", "gfAref", "gf8",
                               "lebesgue-lhs", "lebesgue-rhs",
                               "sylvester-lhs", "sylvester-rhs",
                               "qbinomial-lhs", "qbinomial-rhs"}));
    cmd_qseries->add_option("--order", qs_order, "q-order")->required();
    cmd_qseries->add_option("--t-order", qs_t_order, "t-degree (qbinomial)");

    // table
    auto* cmd_table = app.add_subcommand("table", "Tabulate family counts");
    std::string table_family;
    int table_d = 0;
    long long table_max_n = 0;
    bool table_json = false;
    cmd_table->add_option("--family", table_family, "Family: L, A, B, D, or W")
        ->required()
        ->check(CLI::IsMember({"L", "A", "B", "D", "W"}));
    cmd_table->add_option("--d", table_d, "Gap parameter d (family L)");
    cmd_table->add_option("--max-n", table_max_n, "Largest weight")->required();
    cmd_table->add_flag("--json", table_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto opt_int = [](CLI::App* cmd, const char* name, int value) {
        return cmd->count(name) ? std::optional<int>(value) : std::nullopt;
    };

    try {
        if (cmd_enum->parsed())
            return run_enum(enum_family, opt_int(cmd_enum, "--d", enum_d), enum_n,
                            opt_int(cmd_enum, "--k", enum_k),
                            opt_int(cmd_enum, "--l", enum_l),
                            opt_int(cmd_enum, "--j", enum_j), enum_json);
        if (cmd_apply->parsed())
            return run_apply(apply_map, apply_input, apply_json);
        if (cmd_verify->parsed())
            return run_verify(verify_theorem,
                              cmd_verify->count("--max-n")
                                  ? std::optional<long long>(verify_max_n)
                                  : std::nullopt,
                              opt_int(cmd_verify, "--order", verify_order),
                              opt_int(cmd_verify, "--t-order", verify_t_order),
                              verify_mutate, verify_json);
        if (cmd_qseries->parsed())
            return run_qseries(qs_builder, qs_order,
                               opt_int(cmd_qseries, "--t-order", qs_t_order));
        if (cmd_table->parsed())
            return run_table(table_family, opt_int(cmd_table, "--d", table_d),
                             table_max_n, table_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
