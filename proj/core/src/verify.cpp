#include "pqsym/verify.hpp"

#include "pqsym/cqsym.hpp"
#include "pqsym/errors.hpp"
#include "pqsym/io.hpp"
#include "pqsym/pqsym.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace pqsym {

namespace {

// a check body returns the first counterexample, or nothing on success
using Body = std::function<std::optional<std::string>()>;

CheckResult run_check(const std::string& name, const std::string& range, const Body& body) {
    CheckResult r;
    r.name = name;
    r.range = range;
    const auto start = std::chrono::steady_clock::now();
    try {
        auto bad = body();
        r.pass = !bad.has_value();
        if (bad) r.counterexample = *bad;
    } catch (const std::exception& e) {
        r.pass = false;
        r.counterexample = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string upto(int n) { return "n<=" + std::to_string(n); }

std::vector<Word> permutations_of(int n) {
    Word base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    std::vector<Word> out;
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (int head = 1; head <= n; ++head)
        for (const auto& tail : compositions_of(n - head)) {
            Composition c{static_cast<std::int32_t>(head)};
            c.insert(c.end(), tail.begin(), tail.end());
            out.push_back(c);
        }
    return out;
}

Word ones(int n) { return Word(static_cast<std::size_t>(n), 1); }

LinComb mono(Basis b, const Word& w) { return LinComb::monomial(b, w); }

/* ---------------- hopf ---------------- */

std::optional<std::string> product_F_associative(int cap) {
    for (int da = 0; da <= cap; ++da)
        for (int db = 0; da + db <= cap; ++db)
            for (int dc = 0; da + db + dc <= cap; ++dc)
                for (const Word& a : enumerate_parking(da))
                    for (const Word& b : enumerate_parking(db))
                        for (const Word& c : enumerate_parking(dc)) {
                            const LinComb lhs = product_F(product_F(a, b), mono(Basis::F, c));
                            const LinComb rhs = product_F(mono(Basis::F, a), product_F(b, c));
                            if (lhs != rhs)
                                return "a=" + word_to_string(a) + " b=" + word_to_string(b) +
                                       " c=" + word_to_string(c);
                        }
    return std::nullopt;
}

std::optional<std::string> coproduct_F_coassociative(int cap) {
    for (int n = 0; n <= cap; ++n)
        for (const Word& a : enumerate_parking(n)) {
            std::map<std::vector<Word>, Int> left, right;
            for (const auto& [uv, m] : coproduct_F(a).terms) {
                for (const auto& [xy, mm] : coproduct_F(uv[0]).terms)
                    left[{xy[0], xy[1], uv[1]}] += m * mm;
                for (const auto& [xy, mm] : coproduct_F(uv[1]).terms)
                    right[{uv[0], xy[0], xy[1]}] += m * mm;
            }
            if (left != right) return "a=" + word_to_string(a);
        }
    return std::nullopt;
}

std::optional<std::string> coproduct_F_counit(int cap) {
    for (int n = 0; n <= cap; ++n)
        for (const Word& a : enumerate_parking(n)) {
            LinComb left = LinComb::zero(Basis::F, n), right = LinComb::zero(Basis::F, n);
            for (const auto& [uv, m] : coproduct_F(a).terms) {
                if (uv[0].empty()) left.add_term(uv[1], m);
                if (uv[1].empty()) right.add_term(uv[0], m);
            }
            if (left != mono(Basis::F, a) || right != mono(Basis::F, a))
                return "a=" + word_to_string(a);
        }
    return std::nullopt;
}

std::optional<std::string> coproduct_F_multiplicative(int cap) {
    const auto word_product = [](const Word& u, const Word& v) { return product_F(u, v); };
    for (int da = 0; da <= cap; ++da)
        for (int db = 1; da + db <= cap; ++db)
            for (const Word& a : enumerate_parking(da))
                for (const Word& b : enumerate_parking(db)) {
                    const Tensor lhs = coproduct_F(product_F(a, b));
                    const Tensor rhs = tensor_multiply(coproduct_F(a), coproduct_F(b), word_product);
                    if (lhs != rhs)
                        return "a=" + word_to_string(a) + " b=" + word_to_string(b);
                }
    return std::nullopt;
}

std::optional<std::string> product_G_transposes_coproduct_F(int cap) {
    for (int n = 1; n <= cap; ++n) {
        std::vector<std::pair<Word, Tensor>> cops;
        for (const Word& c : enumerate_parking(n)) cops.emplace_back(c, coproduct_F(c));
        for (int d = 0; d <= n; ++d)
            for (const Word& a : enumerate_parking(d))
                for (const Word& b : enumerate_parking(n - d)) {
                    const LinComb pg = product_G(a, b);
                    for (const auto& [c, cop] : cops)
                        if (pg.coeff(c) != cop.coeff({a, b}))
                            return "a=" + word_to_string(a) + " b=" + word_to_string(b) +
                                   " c=" + word_to_string(c);
                }
    }
    return std::nullopt;
}

std::optional<std::string> coproduct_G_transposes_product_F(int cap) {
    for (int n = 1; n <= cap; ++n) {
        for (const Word& a : enumerate_parking(n)) {
            const Tensor cop = coproduct_G(a);
            for (int d = 0; d <= n; ++d)
                for (const Word& b : enumerate_parking(d))
                    for (const Word& c : enumerate_parking(n - d))
                        if (product_F(b, c).coeff(a) != cop.coeff({b, c}))
                            return "a=" + word_to_string(a) + " b=" + word_to_string(b) +
                                   " c=" + word_to_string(c);
        }
    }
    return std::nullopt;
}

/* ---------------- internal ---------------- */

std::optional<std::string> internal_assoc_exhaustive(int cap) {
    for (int n = 1; n <= cap; ++n) {
        const auto pfs = enumerate_parking(n);
        for (const Word& a : pfs)
            for (const Word& b : pfs)
                for (const Word& c : pfs)
                    if (internal_product_F(internal_product_F(a, b), c) !=
                        internal_product_F(a, internal_product_F(b, c)))
                        return "a=" + word_to_string(a) + " b=" + word_to_string(b) +
                               " c=" + word_to_string(c);
    }
    return std::nullopt;
}

std::optional<std::string> internal_assoc_random(int lo, int hi, int samples) {
    for (int n = lo; n <= hi; ++n) {
        const auto pfs = enumerate_parking(n);
        std::mt19937 rng(987654321u + static_cast<unsigned>(n));
        std::uniform_int_distribution<std::size_t> pick(0, pfs.size() - 1);
        for (int s = 0; s < samples; ++s) {
            const Word &a = pfs[pick(rng)], &b = pfs[pick(rng)], &c = pfs[pick(rng)];
            if (internal_product_F(internal_product_F(a, b), c) !=
                internal_product_F(a, internal_product_F(b, c)))
                return "a=" + word_to_string(a) + " b=" + word_to_string(b) +
                       " c=" + word_to_string(c);
        }
    }
    return std::nullopt;
}

std::optional<std::string> internal_cap_insensitive(int cap) {
    for (int n = 1; n <= cap; ++n) {
        const auto pfs = enumerate_parking(n);
        const std::int32_t caps[] = {static_cast<std::int32_t>(n), static_cast<std::int32_t>(n + 1),
                                     static_cast<std::int32_t>(2 * n), static_cast<std::int32_t>(5 * n)};
        for (const Word& a : pfs)
            for (const Word& b : pfs) {
                const Word base = internal_product_F(a, b);
                for (std::int32_t c : caps)
                    if (internal_product_F_capped(a, b, c) != base)
                        return "a=" + word_to_string(a) + " b=" + word_to_string(b) +
                               " cap=" + std::to_string(c);
            }
    }
    return std::nullopt;
}

std::optional<std::string> internal_left_unit(int cap) {
    for (int n = 1; n <= cap; ++n)
        for (const Word& a : enumerate_parking(n))
            if (internal_product_F(ones(n), a) != a) return "a=" + word_to_string(a);
    return std::nullopt;
}

std::optional<std::string> internal_right_unit_witness(int cap) {
    for (int n = 1; n <= cap; ++n)
        for (const Word& a : enumerate_parking(n))
            if (internal_product_F(a, ones(n)) != a) return std::nullopt; // witness found
    return "no witness: F[1..1] acted as a right unit everywhere";
}

std::optional<std::string> internal_permutation_projection(int cap) {
    for (int n = 1; n <= cap; ++n) {
        const auto perms = permutations_of(n);
        for (const Word& s : perms)
            for (const Word& t : perms)
                if (internal_product_F(s, t) != s)
                    return "sigma=" + word_to_string(s) + " tau=" + word_to_string(t);
    }
    return std::nullopt;
}

/* ---------------- catalan ---------------- */

std::optional<std::string> catalan_internal_closure(int cap) {
    for (int n = 1; n <= cap; ++n) {
        const auto nds = enumerate_ndpf(n);
        for (const Word& p : nds)
            for (const Word& t : nds) {
                try {
                    internal_product_P(p, t);
                } catch (const Error&) {
                    return "pi=" + word_to_string(p) + " tau=" + word_to_string(t);
                }
            }
    }
    return std::nullopt;
}

std::optional<std::string> product_P_single_term(int cap) {
    for (int da = 0; da <= cap; ++da)
        for (int db = 0; da + db <= cap; ++db)
            for (const Word& p : enumerate_ndpf(da))
                for (const Word& t : enumerate_ndpf(db))
                    if (product_P(p, t) != mono(Basis::P, shifted_concat(p, t)))
                        return "pi=" + word_to_string(p) + " tau=" + word_to_string(t);
    return std::nullopt;
}

std::optional<std::string> coproduct_P_cocommutative(int cap) {
    for (int n = 0; n <= cap; ++n)
        for (const Word& p : enumerate_ndpf(n)) {
            const Tensor t = coproduct_P(p);
            if (tensor_reverse(t) != t) return "pi=" + word_to_string(p);
        }
    return std::nullopt;
}

std::optional<std::string> ribbon_round_trip(int cap) {
    for (int n = 0; n <= cap; ++n)
        for (const Word& p : enumerate_ndpf(n)) {
            if (p_to_ribbon(ribbon_to_p(mono(Basis::R, p))) != mono(Basis::R, p))
                return "R at pi=" + word_to_string(p);
            if (ribbon_to_p(p_to_ribbon(mono(Basis::P, p))) != mono(Basis::P, p))
                return "P at pi=" + word_to_string(p);
        }
    return std::nullopt;
}

std::optional<std::string> bottom_ribbon_is_J(int cap) {
    for (int n = 1; n <= cap; ++n)
        if (ribbon_to_p(mono(Basis::R, ones(n))) != J(n)) return upto(n);
    return std::nullopt;
}

std::optional<std::string> poset_maximum(int cap) {
    for (int n = 1; n <= cap; ++n) {
        if (!successors(ones(n)).empty()) return "successors of the all-ones word at n=" + std::to_string(n);
        for (const Word& p : enumerate_ndpf(n))
            if (!upset(p).count(ones(n))) return "pi=" + word_to_string(p);
    }
    return std::nullopt;
}

std::optional<std::string> enumeration_counts(int cap, int brute_cap) {
    for (int n = 1; n <= cap; ++n) {
        const long long pf_count = static_cast<long long>(enumerate_parking(n).size());
        const long long nd_count = static_cast<long long>(enumerate_ndpf(n).size());
        const long long pr_count = static_cast<long long>(enumerate_prime(n).size());

        long long pf_want = 1;
        for (int i = 0; i < n - 1; ++i) pf_want *= n + 1;
        long long catalan = 1;
        for (int i = 0; i < n; ++i) catalan = catalan * 2 * (2 * i + 1) / (i + 2);
        long long pr_want = 1;
        for (int i = 0; i < n - 1; ++i) pr_want *= n - 1;

        if (pf_count != pf_want) return "parking count at n=" + std::to_string(n);
        if (nd_count != catalan) return "nondecreasing count at n=" + std::to_string(n);
        if (pr_count != pr_want) return "prime count at n=" + std::to_string(n);

        if (n <= brute_cap) {
            long long pf_brute = 0, nd_brute = 0, pr_brute = 0;
            Word w(static_cast<std::size_t>(n), 1);
            for (;;) {
                if (is_parking(w)) {
                    ++pf_brute;
                    if (is_ndpf(w)) ++nd_brute;
                    if (is_prime(w)) ++pr_brute;
                }
                int pos = n;
                while (pos > 0) {
                    --pos;
                    if (++w[static_cast<std::size_t>(pos)] <= n) break;
                    w[static_cast<std::size_t>(pos)] = 1;
                    if (pos == 0) { pos = -1; break; }
                }
                if (pos < 0) break;
                if (n == 0) break;
            }
            if (pf_brute != pf_count || nd_brute != nd_count || pr_brute != pr_count)
                return "brute-force recount differs at n=" + std::to_string(n);
        }
    }
    return std::nullopt;
}

/* ---------------- sym ---------------- */

std::optional<std::string> nsym_product_closure(int cap) {
    for (int w1 = 1; w1 < cap; ++w1)
        for (int w2 = 1; w1 + w2 <= cap; ++w2)
            for (const Composition& I : compositions_of(w1))
                for (const Composition& K : compositions_of(w2)) {
                    const LinComb prod = product_P(j_embed_S(I).p, j_embed_S(K).p);
                    NSymElement e;
                    try {
                        e = nsym_from_p(prod);
                    } catch (const NotInSymSpanError&) {
                        return "I=" + word_to_string(I) + " K=" + word_to_string(K);
                    }
                    Composition ik = I;
                    ik.insert(ik.end(), K.begin(), K.end());
                    if (e.s_terms.size() != 1 || e.s_terms[0].first != ik || e.s_terms[0].second != 1)
                        return "I=" + word_to_string(I) + " K=" + word_to_string(K) +
                               " is not the concatenation";
                }
    return std::nullopt;
}

std::optional<std::string> sym_projector_idempotent(int cap) {
    for (int n = 1; n <= cap; ++n)
        for (const Word& p : enumerate_ndpf(n)) {
            const LinComb once = internal_product_P(mono(Basis::P, p), J(n));
            if (internal_product_P(once, J(n)) != once) return "pi=" + word_to_string(p);
        }
    return std::nullopt;
}

std::optional<std::string> sym_projector_formula(int cap) {
    for (int n = 1; n <= cap; ++n)
        for (const Word& p : enumerate_ndpf(n))
            if (internal_product_P(p, ones(n)) != j_embed_S(composition_of(p)).p)
                return "pi=" + word_to_string(p);
    return std::nullopt;
}

std::optional<std::string> ribbon_projector(int cap) {
    for (int n = 1; n <= cap; ++n)
        for (const Word& p : enumerate_ndpf(n)) {
            const LinComb lhs = internal_product_P(ribbon_to_p(mono(Basis::R, p)), J(n));
            const LinComb rhs = ribbon_to_p(mono(Basis::R, nu_index(composition_of(p))));
            if (lhs != rhs) return "pi=" + word_to_string(p);
        }
    return std::nullopt;
}

std::optional<std::string> splitting_r2(int cap) {
    for (int d1 = 1; d1 < cap; ++d1)
        for (int d2 = 1; d1 + d2 <= cap; ++d2)
            for (const Word& f1 : enumerate_ndpf(d1))
                for (const Word& f2 : enumerate_ndpf(d2))
                    for (const Word& g : enumerate_ndpf(d1 + d2))
                        if (!splitting_check({mono(Basis::P, f1), mono(Basis::P, f2)},
                                             mono(Basis::P, g))
                                 .equal)
                            return "f1=" + word_to_string(f1) + " f2=" + word_to_string(f2) +
                                   " g=" + word_to_string(g);
    return std::nullopt;
}

std::optional<std::string> splitting_r3_random(int degree, int samples) {
    std::vector<std::array<int, 3>> shapes;
    for (int d1 = 1; d1 <= degree - 2; ++d1)
        for (int d2 = 1; d1 + d2 <= degree - 1; ++d2) shapes.push_back({d1, d2, degree - d1 - d2});
    std::mt19937 rng(24680u + static_cast<unsigned>(degree));
    const auto gs = enumerate_ndpf(degree);
    std::uniform_int_distribution<std::size_t> pick_shape(0, shapes.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_g(0, gs.size() - 1);
    for (int s = 0; s < samples; ++s) {
        const auto shape = shapes[pick_shape(rng)];
        std::vector<LinComb> fs;
        std::string label;
        for (int d : shape) {
            const auto nds = enumerate_ndpf(d);
            std::uniform_int_distribution<std::size_t> pick(0, nds.size() - 1);
            const Word& f = nds[pick(rng)];
            fs.push_back(mono(Basis::P, f));
            label += word_to_string(f) + " ";
        }
        const Word& g = gs[pick_g(rng)];
        if (!splitting_check(fs, mono(Basis::P, g)).equal)
            return "fs=" + label + "g=" + word_to_string(g);
    }
    return std::nullopt;
}

// descent algebra of S_n: D_I = sum of permutations with descent set inside
// the partial sums of I.  The S-basis internal product matches the reversed
// group-algebra product D_K . D_I under (p.q)(i) = p[q(i)]
std::optional<std::string> descent_algebra_reversed(int cap) {
    for (int n = 1; n <= cap; ++n) {
        const auto perms = permutations_of(n);
        const auto d_elt = [&](const Composition& I) {
            std::set<int> allowed;
            int acc = 0;
            for (std::size_t i = 0; i + 1 < I.size(); ++i) {
                acc += I[i];
                allowed.insert(acc);
            }
            std::map<Word, Int> out;
            for (const Word& s : perms) {
                bool ok = true;
                for (int i = 1; i < n && ok; ++i)
                    if (s[static_cast<std::size_t>(i - 1)] > s[static_cast<std::size_t>(i)] &&
                        !allowed.count(i))
                        ok = false;
                if (ok) out[s] = 1;
            }
            return out;
        };
        const auto convolve = [&](const std::map<Word, Int>& x, const std::map<Word, Int>& y) {
            std::map<Word, Int> out;
            for (const auto& [p, cp] : x)
                for (const auto& [q, cq] : y) {
                    Word comp(static_cast<std::size_t>(n));
                    for (int i = 0; i < n; ++i)
                        comp[static_cast<std::size_t>(i)] =
                            p[static_cast<std::size_t>(q[static_cast<std::size_t>(i)] - 1)];
                    out[comp] += cp * cq;
                }
            for (auto it = out.begin(); it != out.end();)
                it = it->second == 0 ? out.erase(it) : std::next(it);
            return out;
        };

        for (const Composition& I : compositions_of(n))
            for (const Composition& K : compositions_of(n)) {
                const NSymElement e = nsym_from_p(
                    internal_product_P(j_embed_S(I).p, j_embed_S(K).p));
                std::map<Word, Int> lhs;
                for (const auto& [L, c] : e.s_terms)
                    for (const auto& [s, cs] : d_elt(L)) lhs[s] += c * cs;
                for (auto it = lhs.begin(); it != lhs.end();)
                    it = it->second == 0 ? lhs.erase(it) : std::next(it);
                if (lhs != convolve(d_elt(K), d_elt(I)))
                    return "I=" + word_to_string(I) + " K=" + word_to_string(K);
            }
    }
    return std::nullopt;
}

/* ---------------- oracle ---------------- */

std::optional<std::string> sweep_product_G(int cap, int k) {
    for (int da = 1; da < cap; ++da)
        for (int db = 1; da + db <= cap; ++db)
            for (const Word& a : enumerate_parking(da))
                for (const Word& b : enumerate_parking(db)) {
                    const CheckResult r = check_product_G(a, b, k);
                    if (!r.pass) return r.range + ": " + r.counterexample;
                }
    return std::nullopt;
}

std::optional<std::string> sweep_coproduct_G(int cap, int k) {
    for (int n = 1; n <= cap; ++n)
        for (const Word& a : enumerate_parking(n)) {
            const CheckResult r = check_coproduct_G(a, k, k);
            if (!r.pass) return r.range + ": " + r.counterexample;
        }
    return std::nullopt;
}

std::optional<std::string> sweep_internal_coproduct(int cap) {
    for (int n = 1; n <= cap; ++n) {
        Int total = 0;
        for (const Word& a : enumerate_parking(n)) {
            const CheckResult r = check_internal_coproduct(a);
            if (!r.pass) return r.range + ": " + r.counterexample;
            for (const auto& [uv, m] : internal_coproduct_G(a).terms) total += m;
        }
        const Int square = Int(enumerate_parking(n).size()) * Int(enumerate_parking(n).size());
        if (total != square) return "fiber total at n=" + std::to_string(n);
    }
    return std::nullopt;
}

std::optional<std::string> sweep_commutative(int cap, int k) {
    for (int n = 1; n <= cap; ++n)
        for (const Word& p : enumerate_ndpf(n)) {
            const CheckResult r = check_commutative_wellposed(p, k);
            if (!r.pass) return r.range + ": " + r.counterexample;
        }
    return std::nullopt;
}

std::optional<std::string> sweep_qsym_delta(int cap, int k) {
    for (int n = 1; n <= cap; ++n)
        for (const Composition& I : compositions_of(n)) {
            const CheckResult r = check_qsym_delta(I, k);
            if (!r.pass) return r.range + ": " + r.counterexample;
        }
    return std::nullopt;
}

std::optional<std::string> quasi_shuffle_product(int cap) {
    for (int w1 = 1; w1 < cap; ++w1)
        for (int w2 = 1; w1 + w2 <= cap; ++w2)
            for (const Composition& I : compositions_of(w1))
                for (const Composition& K : compositions_of(w2)) {
                    const LinComb lhs = product_M(qsym_embed(I), qsym_embed(K));
                    LinComb rhs = LinComb::zero(Basis::M, w1 + w2);
                    for (const auto& [L, c] : quasi_shuffle(I, K))
                        rhs = add(rhs, scale(c, qsym_embed(L)));
                    if (lhs != rhs) return "I=" + word_to_string(I) + " K=" + word_to_string(K);
                }
    return std::nullopt;
}

} // namespace

std::vector<CheckResult> verify_hopf(int max_n) {
    const int cap = std::min(max_n, 4);
    std::vector<CheckResult> out;
    out.push_back(run_check("product_F_associative", "degree sum <= " + std::to_string(cap),
                            [&] { return product_F_associative(cap); }));
    out.push_back(run_check("coproduct_F_coassociative", upto(cap),
                            [&] { return coproduct_F_coassociative(cap); }));
    out.push_back(run_check("coproduct_F_counit", upto(cap), [&] { return coproduct_F_counit(cap); }));
    out.push_back(run_check("coproduct_F_multiplicative", "degree sum <= " + std::to_string(cap),
                            [&] { return coproduct_F_multiplicative(cap); }));
    out.push_back(run_check("product_G_transposes_coproduct_F", upto(cap),
                            [&] { return product_G_transposes_coproduct_F(cap); }));
    out.push_back(run_check("coproduct_G_transposes_product_F", upto(cap),
                            [&] { return coproduct_G_transposes_product_F(cap); }));
    return out;
}

std::vector<CheckResult> verify_internal(int max_n) {
    std::vector<CheckResult> out;
    const int exh = std::min(max_n, 3);
    out.push_back(run_check("internal_associative_exhaustive", upto(exh),
                            [&] { return internal_assoc_exhaustive(exh); }));
    if (max_n >= 4) {
        const int hi = std::min(max_n, 5);
        out.push_back(run_check("internal_associative_random",
                                "n=4.." + std::to_string(hi) + ", 20000 triples each",
                                [&] { return internal_assoc_random(4, hi, 20000); }));
    }
    const int cap = std::min(max_n, 4);
    out.push_back(run_check("internal_cap_insensitive", upto(cap) + ", caps n,n+1,2n,5n",
                            [&] { return internal_cap_insensitive(cap); }));
    out.push_back(run_check("internal_left_unit", upto(cap), [&] { return internal_left_unit(cap); }));
    out.push_back(run_check("internal_right_unit_witness", upto(cap),
                            [&] { return internal_right_unit_witness(cap); }));
    out.push_back(run_check("internal_permutation_projection", upto(cap),
                            [&] { return internal_permutation_projection(cap); }));
    return out;
}

std::vector<CheckResult> verify_catalan(int max_n) {
    std::vector<CheckResult> out;
    const int big = std::min(max_n, 5);
    const int mid = std::min(max_n, 4);
    out.push_back(run_check("catalan_internal_closure", upto(big),
                            [&] { return catalan_internal_closure(big); }));
    out.push_back(run_check("product_P_single_term", "degree sum <= " + std::to_string(mid),
                            [&] { return product_P_single_term(mid); }));
    out.push_back(run_check("coproduct_P_cocommutative", upto(big),
                            [&] { return coproduct_P_cocommutative(big); }));
    out.push_back(run_check("ribbon_round_trip", upto(big), [&] { return ribbon_round_trip(big); }));
    out.push_back(run_check("bottom_ribbon_is_J", upto(big), [&] { return bottom_ribbon_is_J(big); }));
    out.push_back(run_check("poset_maximum", upto(big), [&] { return poset_maximum(big); }));
    const int cnt = std::min(max_n, 6);
    out.push_back(run_check("enumeration_counts", upto(cnt) + ", brute recount n<=" + std::to_string(mid),
                            [&] { return enumeration_counts(cnt, mid); }));
    return out;
}

std::vector<CheckResult> verify_sym(int max_n) {
    std::vector<CheckResult> out;
    const int big = std::min(max_n, 5);
    const int mid = std::min(max_n, 4);
    out.push_back(run_check("nsym_product_closure", "weight sum <= " + std::to_string(big),
                            [&] { return nsym_product_closure(big); }));
    out.push_back(run_check("sym_projector_idempotent", upto(mid),
                            [&] { return sym_projector_idempotent(mid); }));
    out.push_back(run_check("sym_projector_formula", upto(big),
                            [&] { return sym_projector_formula(big); }));
    out.push_back(run_check("ribbon_projector", upto(big), [&] { return ribbon_projector(big); }));
    out.push_back(run_check("splitting_two_factors", "deg g <= " + std::to_string(mid),
                            [&] { return splitting_r2(mid); }));
    if (mid >= 3)
        out.push_back(run_check("splitting_three_factors_random",
                                "deg g = " + std::to_string(mid) + ", 1000 samples",
                                [&] { return splitting_r3_random(mid, 1000); }));
    out.push_back(run_check("descent_algebra_reversed", upto(mid),
                            [&] { return descent_algebra_reversed(mid); }));
    return out;
}

std::vector<CheckResult> verify_oracle(int max_n) {
    std::vector<CheckResult> out;
    const int mid = std::min(max_n, 4);
    const int low = std::min(max_n, 3);
    out.push_back(run_check("product_G_realization", "degree sum <= " + std::to_string(mid) + ", k=5",
                            [&] { return sweep_product_G(mid, 5); }));
    out.push_back(run_check("coproduct_G_ordered_sum", upto(mid) + ", k=4",
                            [&] { return sweep_coproduct_G(mid, 4); }));
    if (max_n >= 5)
        out.push_back(run_check("coproduct_G_ordered_sum_degree5", "a=[4,1,2,5,2], k=5",
                                [&]() -> std::optional<std::string> {
                                    const CheckResult r = check_coproduct_G({4, 1, 2, 5, 2}, 5, 5);
                                    if (r.pass) return std::nullopt;
                                    return r.counterexample;
                                }));
    out.push_back(run_check("internal_coproduct_fiber", upto(low),
                            [&] { return sweep_internal_coproduct(low); }));
    out.push_back(run_check("commutative_realization_wellposed", upto(low) + ", k=4",
                            [&] { return sweep_commutative(low, 4); }));
    out.push_back(run_check("qsym_internal_coproduct", "weight <= " + std::to_string(low) + ", k=3",
                            [&] { return sweep_qsym_delta(low, 3); }));
    out.push_back(run_check("quasi_shuffle_product", "weight sum <= " + std::to_string(mid),
                            [&] { return quasi_shuffle_product(mid); }));
    return out;
}

std::vector<CheckResult> verify_suite(const std::string& name, int max_n) {
    if (name == "hopf") return verify_hopf(max_n);
    if (name == "internal") return verify_internal(max_n);
    if (name == "catalan") return verify_catalan(max_n);
    if (name == "sym") return verify_sym(max_n);
    if (name == "oracle") return verify_oracle(max_n);
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const char* suite : {"hopf", "internal", "catalan", "sym", "oracle"}) {
            auto part = verify_suite(suite, max_n);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw Error("unknown verification suite: " + name);
}

} // namespace pqsym
