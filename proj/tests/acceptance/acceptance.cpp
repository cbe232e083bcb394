// One line per acceptance criterion:
//   ACCEPT <id> PASS|FAIL <detail> (<seconds>s, budget <seconds>s)
// A criterion that overruns its time budget fails.

#include "cpsurgery/errors.hpp"
#include "cpsurgery/forgetful.hpp"
#include "cpsurgery/kerj.hpp"
#include "cpsurgery/obstruction.hpp"
#include "cpsurgery/reproduce.hpp"

#include "brute.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace cpsurgery;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    std::string id;
    double budget;  // seconds
    std::function<Verdict()> run;
};

const std::filesystem::path golden_dir = CPSURGERY_TEST_GOLDEN_DIR;

Verdict tables_pass(const std::vector<int>& tables)
{
    Verdict v;
    std::ostringstream os;
    for (int t : tables) {
        TableReport r = reproduce_table(t, golden_dir);
        os << "T" << t << " " << r.cells << " cells/" << r.diffs.size() << " diffs; ";
        if (!r.pass()) {
            v.pass = false;
            const auto& d = r.diffs.front();
            os << "first diff [" << d.row << "] " << d.cell << " expected " << d.expected << " got " << d.actual
               << "; ";
        }
    }
    v.detail = os.str();
    return v;
}

IntColumns columns_from_json(const json& rows)
{
    IntColumns out;
    for (const auto& r : rows) {
        IntVector v;
        for (const auto& x : r)
            v.push_back(integer_from_json(x));
        out.push_back(std::move(v));
    }
    return out;
}

Verdict generator_tables()
{
    Verdict v;
    int rows = 0;
    for (int t : {3, 4}) {
        json g = load_golden(t, golden_dir);
        for (const auto& row : g["rows"]) {
            const int n = row["n"], l = row["l"];
            if (l < 1)
                continue;
            ++rows;
            IntColumns printed = columns_from_json(row["generators"]);
            GeneratorSet gs = canonical_generators(n, l);
            const int r = t_prime(n, 2 * l);
            bool ok = static_cast<int>(printed.size()) == r && same_span(printed, gs.columns(), r);
            for (int j = 0; ok && j < r; ++j)
                ok = printed[static_cast<size_t>(j)][static_cast<size_t>(j)] ==
                     gs.generators[static_cast<size_t>(j)].coords[static_cast<size_t>(j)];
            if (!ok) {
                v.pass = false;
                v.detail += "mismatch at n=" + std::to_string(n) + " l=" + std::to_string(l) + "; ";
            }
        }
    }
    // leading coefficient pattern of the Sigma^2 CP^17 row
    const std::vector<long> pattern{24, 240, 504, 480, 264, 65520, 24, 16320, 28728};
    GeneratorSet g171 = canonical_generators(17, 1);
    for (size_t j = 0; j < pattern.size(); ++j)
        if (g171.generators[j].coords[j] != pattern[j]) {
            v.pass = false;
            v.detail += "leading coefficient " + std::to_string(j + 1) + " of (17,1); ";
        }
    v.detail = std::to_string(rows) + " rows compared; " + v.detail;
    return v;
}

Verdict cp18_membership()
{
    Verdict v;
    json g = load_golden(3, golden_dir);
    int members = 0, total = 0;
    for (const auto& row : g["rows"]) {
        if (row["l"] != 0)
            continue;
        const int n = row["n"];
        for (const auto& c : columns_from_json(row["generators"])) {
            KOElement xi = KOElement::zero(n, 0);
            xi.coords = c;
            ++total;
            members += membership_l0(xi, n).member ? 1 : 0;
        }
    }
    const bool mu0 = membership_l0(KOElement::unit(18, 0, 0), 18).member;
    v.pass = total == 9 && members == total && !mu0;
    v.detail = std::to_string(members) + "/" + std::to_string(total) + " printed generators are members; mu_0 " +
               (mu0 ? "is a member" : "is not a member");
    return v;
}

Verdict obstruction_tables()
{
    Verdict v = tables_pass({5, 6, 7});
    json t6 = load_golden(6, golden_dir);
    int plus2 = 0, rows = 0;
    for (const auto& row : t6["rows"]) {
        ++rows;
        const int n = row["n"];
        auto f = obstruction_form(n, 2);
        plus2 += (f.sphere_coeff && *f.sphere_coeff == 2 && row["form"].value("sphere", 0) == 2) ? 1 : 0;
    }
    if (plus2 != rows)
        v.pass = false;
    v.detail += "+2y in " + std::to_string(plus2) + "/" + std::to_string(rows) + " rows of table 6";
    return v;
}

Verdict congruence_table()
{
    Verdict v = tables_pass({2});
    bool carries = congruences(6, 1).rows[2].coeffs[1] == Rational(158, 7) &&
                   congruences(6, 2).all_rows().at(3).coeffs[0] == Rational(6443, 217) &&
                   congruences(6, 3).rows[2].coeffs[0] == Rational(-23418, 217);
    v.pass = v.pass && carries;
    v.detail += carries ? "carries 158/7, 6443/217, 23418/217 present" : "carry mismatch";
    return v;
}

Verdict rank_formulas()
{
    Verdict v;
    int bad = 0, cells = 0;
    for (int n = 0; n <= 20; ++n)
        for (int k = 0; k <= 16; ++k) {
            ++cells;
            RankBundle r = ranks(n, k);
            const int eps = k % 4 == 0 ? 1 : 0;
            bool ok = r.t_prime == oracle::t_prime(n, k) && r.t == oracle::t_structure(n, k) && r.eps == eps;
            if (k % 2 == 0)
                ok = ok && r.t == r.t_prime + eps - ((2 * n + k) % 4 == 0 ? 1 : 0);
            if (2 * n + k >= 5)
                ok = ok && structure_rank(n, k) == oracle::t_structure(n, k);
            if (!ok) {
                ++bad;
                if (bad <= 3)
                    v.detail += "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ") ";
            }
        }
    v.pass = bad == 0;
    v.detail = std::to_string(cells - bad) + "/" + std::to_string(cells) + " cells agree " + v.detail;
    return v;
}

Verdict integrality()
{
    Verdict v;
    long coeffs = 0, classes = 0, bad = 0;
    for (int l = 1; l <= 3; ++l)
        for (int n = 1; n <= 18; ++n) {
            GeneratorSet gs = canonical_generators(n, l);
            std::vector<KOElement> elems(gs.generators.begin(), gs.generators.end());
            if ((n + l) % 2 == 0) {
                for (const auto& e : elems) {
                    ++coeffs;
                    bad += obstruction_value(e).get_den() == 1 ? 0 : 1;
                }
                if (l % 2 == 0) {
                    ++coeffs;
                    bad += obstruction_value(KOElement::unit(n, l, 0, true)).get_den() == 1 ? 0 : 1;
                }
            }
            if (l % 2 == 0)
                elems.push_back(KOElement::unit(n, l, 0, true));
            for (const auto& e : elems)
                for (const auto& [j, p] : pontryagin_classes(e)) {
                    ++classes;
                    bad += p.get_den() == 1 ? 0 : 1;
                }
        }
    v.pass = bad == 0;
    v.detail = std::to_string(coeffs) + " obstruction coefficients, " + std::to_string(classes) +
               " Pontryagin classes, " + std::to_string(bad) + " non-integral";
    return v;
}

Verdict hnf_and_oracles()
{
    Verdict v;
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> d(-30, 30), pick(0, 3);
    long det_trials = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int r = 1 + trial % 4;
        IntColumns gens(static_cast<size_t>(r + 1), IntVector(static_cast<size_t>(r)));
        for (auto& c : gens)
            for (auto& x : c)
                x = d(rng);
        IntColumns mixed = gens;
        for (int s = 0; s < 10; ++s) {
            size_t a = static_cast<size_t>(pick(rng)) % mixed.size(), b = static_cast<size_t>(pick(rng)) % mixed.size();
            if (a == b)
                continue;
            for (size_t k = 0; k < mixed[a].size(); ++k)
                mixed[a][k] += (s % 2 ? -1 : 2) * mixed[b][k];
            std::swap(mixed[a], mixed[b]);
        }
        ++det_trials;
        if (hnf_columns(gens, r) != hnf_columns(gens, r) || hnf_columns(gens, r) != hnf_columns(mixed, r)) {
            v.pass = false;
            v.detail += "HNF not canonical at trial " + std::to_string(trial) + "; ";
        }
    }
    long systems = 0, vectors = 0;
    for (int trial = 0; trial < 60; ++trial) {
        RationalMatrix m = brute::random_system(rng, 1 + trial % 2);
        auto c = brute::check_system(m, m.rows, 400);
        if (c.checked == 0)
            continue;
        ++systems;
        vectors += c.checked;
        if (!c.ok) {
            v.pass = false;
            v.detail += c.detail + "; ";
        }
    }
    for (int l = 1; l <= 15; ++l)
        for (int n = 1; n <= 5; ++n) {
            auto sys = build_system(n, l);
            if (sys.r == 0 || sys.r > 2)
                continue;
            auto c = brute::check_system(sys.matrix, sys.r, sys.r == 1 ? 200000 : 400);
            if (c.checked == 0)
                continue;
            ++systems;
            vectors += c.checked;
            if (!c.ok) {
                v.pass = false;
                v.detail += "(n,l)=(" + std::to_string(n) + "," + std::to_string(l) + ") " + c.detail + "; ";
            }
            auto L = integer_kernel_projected(sys.matrix, sys.r);
            auto t = solve_right_block(sys.matrix, sys.r);
            for (const auto& x : L.basis)
                if (!brute::y_integral(t, x)) {
                    v.pass = false;
                    v.detail += "unsound basis; ";
                }
        }
    if (systems < 40)
        v.pass = false;
    v.detail = std::to_string(det_trials) + " HNF trials, " + std::to_string(systems) + " systems, " +
               std::to_string(vectors) + " vectors enumerated; " + v.detail;
    return v;
}

// Literal reading: drop the trailing coordinates of the generators of (n, l)
// and compare with the generators of (m, l).
Verdict truncation()
{
    Verdict v;
    int pairs = 0, bad = 0;
    std::string first;
    for (int l = 1; l <= 3; ++l)
        for (int n = 2; n <= 17; ++n) {
            GeneratorSet big = canonical_generators(n, l);
            for (int m = 1; m < n; ++m) {
                const int t = t_prime(m, 2 * l);
                if (t == 0)
                    continue;
                ++pairs;
                IntColumns cut;
                for (const auto& g : big.generators)
                    cut.emplace_back(g.coords.begin(), g.coords.begin() + t);
                if (!same_span(cut, canonical_generators(m, l).columns(), t)) {
                    if (++bad == 1)
                        first = "(m,n,l)=(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(l) + ")";
                }
            }
        }
    v.pass = bad == 0;
    v.detail = std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " pairs span equal";
    if (bad)
        v.detail += ", first failure " + first + "; failures are the sigma/tau targets";
    return v;
}

Verdict linearity()
{
    Verdict v;
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> d(-100000, 100000);
    long trials = 0, bad = 0;
    for (int l = 1; l <= 3; ++l)
        for (int n = 1; n <= 18; ++n) {
            if ((n + l) % 2 != 0)
                continue;
            const bool sphere = l % 2 == 0;
            for (int i = 0; i < 20; ++i) {
                KOElement a = KOElement::zero(n, l, sphere), b = a;
                for (auto& c : a.coords)
                    c = d(rng);
                for (auto& c : b.coords)
                    c = d(rng);
                ++trials;
                if (obstruction_value(a + b) != obstruction_value(a) + obstruction_value(b))
                    ++bad;
            }
        }
    v.pass = bad == 0;
    v.detail = std::to_string(trials - bad) + "/" + std::to_string(trials) + " additive";
    return v;
}

Verdict congruence_span()
{
    Verdict v;
    long vectors = 0, bad = 0;
    for (const auto& [n, l] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {2, 3}}) {
        ForgetfulMatrix fm = matrix_bundle(n, l);
        CongruenceSystem cs = congruences(n, l);
        const int t = static_cast<int>(fm.a_prime.size());
        auto L = IntegerLattice::from_generators(columns_of(fm.a_prime), t);
        Integer mx = 0;
        for (int i = 0; i < t; ++i)
            mx = std::max(mx, Integer(abs(fm.a_prime[static_cast<size_t>(i)][static_cast<size_t>(i)])));
        const long box = 2 * mx.get_si();
        IntVector x(static_cast<size_t>(t), -box);
        for (;;) {
            ++vectors;
            bad += cs.holds(x) == L.contains(x) ? 0 : 1;
            int i = 0;
            while (i < t && x[static_cast<size_t>(i)] == box)
                x[static_cast<size_t>(i++)] = -box;
            if (i == t)
                break;
            ++x[static_cast<size_t>(i)];
        }
    }
    v.pass = bad == 0;
    v.detail = std::to_string(vectors) + " vectors, " + std::to_string(bad) + " disagreements";
    return v;
}

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all{
        {"1", 60, generator_tables},
        {"2", 10, cp18_membership},
        {"3", 60, obstruction_tables},
        {"4", 10, [] { return tables_pass({1}); }},
        {"5", 5, congruence_table},
        {"6", 1, rank_formulas},
        {"7a", 120, integrality},
        {"7b", 120, hnf_and_oracles},
        {"7c", 120, truncation},
        {"7d", 120, linearity},
        {"7e", 120, congruence_span},
    };
    return all;
}

bool run_one(const Criterion& c)
{
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = c.run();
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget) {
        v.pass = false;
        v.detail += " [over budget]";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "(%.2fs, budget %.0fs)", secs, c.budget);
    std::cout << "ACCEPT " << c.id << " " << (v.pass ? "PASS" : "FAIL") << " " << v.detail << " " << timing
              << std::endl;
    return v.pass;
}

}  // namespace

int main(int argc, char** argv)
{
    std::vector<std::string> wanted;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc)
            wanted.push_back(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--criterion ID]...\n";
            return 1;
        }
    }
    bool ok = true;
    double total_seven = 0;
    for (const auto& c : criteria()) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end())
            continue;
        const auto start = std::chrono::steady_clock::now();
        ok = run_one(c) && ok;
        if (c.id[0] == '7')
            total_seven += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    if (wanted.empty()) {
        const bool in_budget = total_seven <= 120;
        std::printf("ACCEPT 7 %s property suite total (%.2fs, budget 120s)\n", in_budget ? "PASS" : "FAIL",
                    total_seven);
        ok = ok && in_budget;
    }
    return ok ? 0 : 1;
}
