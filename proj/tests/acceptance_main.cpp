/* Acceptance gate: every numbered criterion prints one PASS or FAIL line.
 * Run with no arguments for the full gate, or with a criterion number to run
 * a single one (the ctest entries do the latter so failures stay isolated). */

#include <pqsym/cqsym.hpp>
#include <pqsym/errors.hpp>
#include <pqsym/io.hpp>
#include <pqsym/lincomb.hpp>
#include <pqsym/oracle.hpp>
#include <pqsym/pqsym.hpp>
#include <pqsym/verify.hpp>
#include <pqsym/words.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace pqsym;

std::string fmt(const Word& w) { return word_to_string(w); }

/* -------- criterion 1: worked examples -------- */

std::string worked_examples() {
    const ParkizationTrace t = parkize({3, 5, 1, 1, 11, 8, 8, 2});
    if (t.result != Word{3, 5, 1, 1, 8, 6, 6, 2})
        return "parkization result " + fmt(t.result);
    const std::vector<std::pair<std::int32_t, Word>> rounds = {
        {6, {3, 5, 1, 1, 10, 7, 7, 2}},
        {6, {3, 5, 1, 1, 9, 6, 6, 2}},
        {8, {3, 5, 1, 1, 8, 6, 6, 2}}};
    if (t.rounds != rounds) return "parkization rounds differ";

    LinComb pf = product_F(Word{1, 2}, Word{1, 1});
    LinComb pf_want = LinComb::zero(Basis::F, 4);
    for (const Word& w : {Word{1, 2, 3, 3}, Word{1, 3, 2, 3}, Word{1, 3, 3, 2},
                          Word{3, 1, 2, 3}, Word{3, 1, 3, 2}, Word{3, 3, 1, 2}})
        pf_want.add_term(w, 1);
    if (!(pf == pf_want)) return "F product: " + lincomb_to_string(pf);

    Tensor cf = coproduct_F(Word{3, 1, 3, 2});
    Tensor cf_want = Tensor::zero({Basis::F, Basis::F}, 4);
    cf_want.add_term({{}, {3, 1, 3, 2}}, 1);
    cf_want.add_term({{1}, {1, 3, 2}}, 1);
    cf_want.add_term({{2, 1}, {2, 1}}, 1);
    cf_want.add_term({{2, 1, 2}, {1}}, 1);
    cf_want.add_term({{3, 1, 3, 2}, {}}, 1);
    if (!(cf == cf_want)) return "F coproduct: " + tensor_to_string(cf);

    LinComb pg = product_G(Word{1, 2}, Word{1, 1});
    LinComb pg_want = LinComb::zero(Basis::G, 4);
    for (const Word& w :
         {Word{1, 2, 1, 1}, Word{1, 2, 2, 2}, Word{1, 2, 3, 3}, Word{1, 3, 1, 1},
          Word{1, 3, 2, 2}, Word{1, 4, 1, 1}, Word{1, 4, 2, 2}, Word{2, 3, 1, 1},
          Word{2, 4, 1, 1}, Word{3, 4, 1, 1}})
        pg_want.add_term(w, 1);
    if (!(pg == pg_want)) return "G product: " + lincomb_to_string(pg);

    Tensor cg = coproduct_G(Word{4, 1, 2, 5, 2});
    Tensor cg_want = Tensor::zero({Basis::G, Basis::G}, 5);
    cg_want.add_term({{}, {4, 1, 2, 5, 2}}, 1);
    cg_want.add_term({{1}, {3, 1, 4, 1}}, 1);
    cg_want.add_term({{1, 2, 2}, {1, 2}}, 1);
    cg_want.add_term({{4, 1, 2, 2}, {1}}, 1);
    cg_want.add_term({{4, 1, 2, 5, 2}, {}}, 1);
    if (!(cg == cg_want)) return "G coproduct: " + tensor_to_string(cg);

    const Evaluation e = evaluation({3, 1, 1, 7, 2, 9, 1, 7, 8, 1, 3, 2, 9});
    if (e.full != Word{4, 2, 2, 0, 0, 0, 2, 1, 2}) return "full evaluation " + fmt(e.full);
    if (e.packed != Word{4, 2, 2, 2, 1, 2}) return "packed evaluation " + fmt(e.packed);
    if (e.unpacked != Word{4, 0, 0, 0, 2, 0, 2, 0, 2, 0, 1, 2})
        return "unpacked evaluation " + fmt(e.unpacked);

    const std::vector<Word> succ = successors({1, 1, 3, 3, 4, 6});
    const std::vector<Word> succ_want = {
        {1, 1, 1, 1, 4, 6}, {1, 1, 3, 3, 3, 6}, {1, 1, 3, 3, 4, 4}};
    if (succ != succ_want) return "successor set differs";
    return "";
}

/* -------- criterion 2: internal product tables -------- */

std::string internal_tables() {
    const std::vector<std::array<Word, 3>> word_cases = {
        {Word{2, 1, 1}, Word{2, 1, 1}, Word{3, 1, 1}},
        {Word{2, 1, 1}, Word{1, 1, 2}, Word{3, 1, 2}},
        {Word{2, 1, 1}, Word{1, 2, 1}, Word{3, 2, 1}},
        {Word{1, 1, 2}, Word{3, 1, 2}, Word{2, 1, 3}},
        {Word{3, 1, 1, 4, 3, 2, 3, 1}, Word{2, 3, 5, 7, 1, 7, 1, 3},
         Word{6, 1, 3, 8, 5, 4, 5, 1}}};
    for (const auto& [a, b, want] : word_cases) {
        const Word got = internal_product_F(a, b);
        if (got != want)
            return fmt(a) + " * " + fmt(b) + " = " + fmt(got) + ", expected " + fmt(want);
    }

    const auto P = [](const Word& w, Int c = 1) { return LinComb::monomial(Basis::P, w, c); };
    struct PCase {
        Word a, b;
        LinComb want;
    };
    const std::vector<PCase> p_cases = {
        {{1, 1, 2, 3}, {1, 1, 1, 1}, P({1, 1, 3, 4})},
        {{1, 1, 1, 1}, {1, 1, 2, 3}, P({1, 1, 2, 3})},
        {{1, 1, 2, 3}, {1, 1, 1, 2}, add(P({1, 1, 3, 4}, 2), P({1, 2, 3, 4}))},
        {{1, 1, 2, 2}, {1, 2, 2, 4},
         add(add(P({1, 1, 3, 4}), P({1, 2, 3, 3})), P({1, 2, 3, 4}, 2))},
        {{1, 1, 2, 3}, {1, 2, 2, 4}, add(P({1, 1, 3, 4}, 2), P({1, 2, 3, 4}, 5))}};
    for (const auto& c : p_cases) {
        const LinComb got = internal_product_P(c.a, c.b);
        if (!(got == c.want))
            return "P" + fmt(c.a) + " * P" + fmt(c.b) + " = " + lincomb_to_string(got);
    }
    return "";
}

/* -------- criterion 3: internal associativity -------- */

std::string internal_associativity() {
    for (int n = 1; n <= 3; ++n) {
        const auto pfs = enumerate_parking(n);
        for (const Word& a : pfs)
            for (const Word& b : pfs)
                for (const Word& c : pfs)
                    if (internal_product_F(internal_product_F(a, b), c) !=
                        internal_product_F(a, internal_product_F(b, c)))
                        return "n=" + std::to_string(n) + ": " + fmt(a) + ", " + fmt(b) +
                               ", " + fmt(c);
    }

    // degree 4 exhaustively, through an index table over the 125 elements
    {
        const auto pfs = enumerate_parking(4);
        const int m = static_cast<int>(pfs.size());
        std::map<Word, int> index;
        for (int i = 0; i < m; ++i) index[pfs[i]] = i;
        std::vector<std::vector<int>> table(m, std::vector<int>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                table[i][j] = index.at(internal_product_F(pfs[i], pfs[j]));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    if (table[table[i][j]][k] != table[i][table[j][k]])
                        return "n=4: " + fmt(pfs[i]) + ", " + fmt(pfs[j]) + ", " + fmt(pfs[k]);
    }

    // degree 5 on a fixed pseudorandom sample
    {
        const auto pfs = enumerate_parking(5);
        std::mt19937 rng(424242);
        std::uniform_int_distribution<std::size_t> pick(0, pfs.size() - 1);
        for (int t = 0; t < 100000; ++t) {
            const Word &a = pfs[pick(rng)], &b = pfs[pick(rng)], &c = pfs[pick(rng)];
            if (internal_product_F(internal_product_F(a, b), c) !=
                internal_product_F(a, internal_product_F(b, c)))
                return "n=5: " + fmt(a) + ", " + fmt(b) + ", " + fmt(c);
        }
    }
    return "";
}

/* -------- criterion 4: flattening cap robustness -------- */

std::string cap_robustness() {
    for (int n = 1; n <= 4; ++n) {
        const auto pfs = enumerate_parking(n);
        const std::int32_t caps[] = {static_cast<std::int32_t>(n),
                                     static_cast<std::int32_t>(n + 1),
                                     static_cast<std::int32_t>(2 * n),
                                     static_cast<std::int32_t>(5 * n)};
        for (const Word& a : pfs)
            for (const Word& b : pfs) {
                const Word base = internal_product_F_capped(a, b, caps[0]);
                for (int c = 1; c < 4; ++c)
                    if (internal_product_F_capped(a, b, caps[c]) != base)
                        return fmt(a) + " * " + fmt(b) + " changes at cap " +
                               std::to_string(caps[c]);
            }
    }
    return "";
}

/* -------- criteria driven by the property suites -------- */

std::string all_pass(const std::vector<CheckResult>& rs) {
    for (const CheckResult& r : rs)
        if (!r.pass) return r.name + ": " + r.counterexample;
    return "";
}

std::string named_pass(const std::vector<CheckResult>& rs, const std::set<std::string>& names) {
    std::set<std::string> seen;
    for (const CheckResult& r : rs) {
        if (!names.count(r.name)) continue;
        seen.insert(r.name);
        if (!r.pass) return r.name + ": " + r.counterexample;
    }
    for (const std::string& n : names)
        if (!seen.count(n)) return "check " + n + " did not run";
    return "";
}

/* -------- criterion 6: subalgebra closure -------- */

std::string subalgebra_closure() {
    for (int n = 1; n <= 5; ++n) {
        const auto ndpfs = enumerate_ndpf(n);
        for (const Word& pi : ndpfs)
            for (const Word& tau : ndpfs) {
                try {
                    const LinComb out = internal_product_P(pi, tau);
                    if (out.basis != Basis::P || out.degree != n)
                        return "P" + fmt(pi) + " * P" + fmt(tau) + ": wrong shape";
                } catch (const Error& e) {
                    return "P" + fmt(pi) + " * P" + fmt(tau) + ": " + e.what();
                }
            }
    }
    return "";
}

/* -------- criterion 7: unit laws -------- */

std::string unit_laws() {
    for (int n = 0; n <= 4; ++n) {
        const Word ones(static_cast<std::size_t>(n), 1);
        for (const Word& a : enumerate_parking(n))
            if (internal_product_F(ones, a) != a)
                return "1-block * " + fmt(a) + " = " + fmt(internal_product_F(ones, a));
        for (const Word& pi : enumerate_ndpf(n))
            if (!(internal_product_P(J(n), LinComb::monomial(Basis::P, pi)) ==
                  LinComb::monomial(Basis::P, pi)))
                return "J * P" + fmt(pi) + " differs";
    }
    // and the mirror image genuinely fails
    if (internal_product_F({1, 1, 2}, {1, 1, 1}) != Word{1, 1, 3})
        return "expected right-multiplication witness (1,1,3)";
    const LinComb w = internal_product_P({1, 1, 2, 3}, {1, 1, 1, 1});
    if (!(w == LinComb::monomial(Basis::P, {1, 1, 3, 4})))
        return "P[1,1,2,3] * J = " + lincomb_to_string(w);
    return "";
}

/* -------- criterion 8: splitting identity -------- */

std::string splitting_identity() {
    const auto P = [](const Word& w) { return LinComb::monomial(Basis::P, w); };
    for (int d = 1; d <= 4; ++d) {
        for (int k = 0; k <= d; ++k) {
            for (const Word& alpha : enumerate_ndpf(k))
                for (const Word& beta : enumerate_ndpf(d - k))
                    for (const Word& g : enumerate_ndpf(d)) {
                        const SplitCheck c = splitting_check({P(alpha), P(beta)}, P(g));
                        if (!c.equal)
                            return "r=2, f=(" + fmt(alpha) + "," + fmt(beta) + "), g=" +
                                   fmt(g) + ": " + lincomb_to_string(c.lhs) + " vs " +
                                   lincomb_to_string(c.rhs);
                    }
        }
    }

    const int degree = 4;
    const std::vector<std::array<int, 3>> shapes = {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
    std::vector<std::vector<Word>> pool(degree + 1);
    for (int d = 0; d <= degree; ++d) pool[d] = enumerate_ndpf(d);
    std::mt19937 rng(24680 + degree);
    for (int t = 0; t < 1000; ++t) {
        const auto& shape = shapes[rng() % shapes.size()];
        std::vector<LinComb> fs;
        for (int part : shape) fs.push_back(P(pool[part][rng() % pool[part].size()]));
        const Word& g = pool[degree][rng() % pool[degree].size()];
        const SplitCheck c = splitting_check(fs, P(g));
        if (!c.equal) return "r=3 sample " + std::to_string(t) + ", g=" + fmt(g);
    }
    return "";
}

/* -------- criterion 10: ribbon basis transitions -------- */

std::string ribbon_transitions() {
    for (int n = 1; n <= 5; ++n) {
        for (const Word& pi : enumerate_ndpf(n)) {
            const LinComb p = LinComb::monomial(Basis::P, pi);
            if (!(ribbon_to_p(p_to_ribbon(p)) == p)) return "P round trip at " + fmt(pi);
            const LinComb r = LinComb::monomial(Basis::R, pi);
            if (!(p_to_ribbon(ribbon_to_p(r)) == r)) return "R round trip at " + fmt(pi);
        }
        if (!(ribbon_to_p(LinComb::monomial(Basis::R, Word(static_cast<std::size_t>(n), 1))) ==
              J(n)))
            return "bottom ribbon at degree " + std::to_string(n);
    }
    return "";
}

/* -------- criterion 12: enumeration counts -------- */

long long ipow(long long b, int e) {
    long long out = 1;
    for (int i = 0; i < e; ++i) out *= b;
    return out;
}

std::string enumeration_counts() {
    for (int n = 1; n <= 6; ++n) {
        const long long pf = static_cast<long long>(enumerate_parking(n).size());
        if (pf != ipow(n + 1, n - 1))
            return "parking count at n=" + std::to_string(n) + " is " + std::to_string(pf);
        long long catalan = 1;
        for (int i = 0; i < n; ++i) catalan = catalan * 2 * (2 * i + 1) / (i + 2);
        const long long nd = static_cast<long long>(enumerate_ndpf(n).size());
        if (nd != catalan)
            return "nondecreasing count at n=" + std::to_string(n) + " is " + std::to_string(nd);
        const long long pr = static_cast<long long>(enumerate_prime(n).size());
        if (pr != ipow(n - 1, n - 1))
            return "prime count at n=" + std::to_string(n) + " is " + std::to_string(pr);
    }

    // independent recount by scanning every word in [n]^n
    for (int n = 1; n <= 4; ++n) {
        long long pf = 0, nd = 0, pr = 0;
        Word w(static_cast<std::size_t>(n), 1);
        for (;;) {
            if (is_parking(w)) {
                ++pf;
                if (is_ndpf(w)) ++nd;
                if (is_prime(w)) ++pr;
            }
            std::size_t i = 0;
            while (i < w.size() && ++w[i] > n) w[i++] = 1;
            if (i == w.size()) break;
        }
        if (pf != static_cast<long long>(enumerate_parking(n).size()))
            return "brute parking recount differs at n=" + std::to_string(n);
        if (nd != static_cast<long long>(enumerate_ndpf(n).size()))
            return "brute nondecreasing recount differs at n=" + std::to_string(n);
        if (pr != static_cast<long long>(enumerate_prime(n).size()))
            return "brute prime recount differs at n=" + std::to_string(n);
    }
    return "";
}

struct Criterion {
    int id;
    const char* label;
    double budget_seconds; // 0 = no explicit budget
    std::function<std::string()> body;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "worked examples", 1.0, worked_examples},
        {2, "internal product tables", 1.0, internal_tables},
        {3, "internal associativity", 60.0, internal_associativity},
        {4, "flattening cap robustness", 0.0, cap_robustness},
        {5, "bialgebra properties", 0.0, [] { return all_pass(verify_hopf(4)); }},
        {6, "subalgebra closure", 120.0, subalgebra_closure},
        {7, "unit laws", 0.0, unit_laws},
        {8, "splitting identity", 0.0, splitting_identity},
        {9, "embedded symmetric functions", 0.0,
         [] {
             return named_pass(verify_sym(5),
                               {"nsym_product_closure", "sym_projector_idempotent",
                                "sym_projector_formula", "ribbon_projector"});
         }},
        {10, "ribbon basis transitions", 0.0, ribbon_transitions},
        {11, "realization oracles", 120.0, [] { return all_pass(verify_oracle(4)); }},
        {12, "enumeration counts", 0.0, enumeration_counts},
    };

    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > static_cast<int>(criteria.size())) {
            std::cerr << "usage: " << argv[0] << " [criterion 1.." << criteria.size() << "]\n";
            return 2;
        }
    }

    bool ok = true;
    for (const Criterion& c : criteria) {
        if (only && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (detail.empty() && c.budget_seconds > 0.0 && secs > c.budget_seconds)
            detail = "exceeded the " + std::to_string(c.budget_seconds) + "s budget";
        char timing[32];
        std::snprintf(timing, sizeof timing, " [%.1fs]", secs);
        if (detail.empty()) {
            std::cout << "PASS: criterion " << c.id << " (" << c.label << ")" << timing << "\n";
        } else {
            std::cout << "FAIL: criterion " << c.id << " (" << c.label << "): " << detail
                      << timing << "\n";
            ok = false;
        }
    }
    return ok ? 0 : 1;
}
