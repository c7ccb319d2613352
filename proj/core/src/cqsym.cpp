#include "pqsym/cqsym.hpp"
#include "pqsym/errors.hpp"
#include "pqsym/pqsym.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace pqsym {

namespace {

void require_ndpf(const Word& pi, const char* who) {
    if (!is_ndpf(pi))
        throw InvalidIndexError(std::string(who) +
                                ": index is not a nondecreasing parking function");
}

void require_basis(const LinComb& x, Basis b, const char* who) {
    if (x.basis != b)
        throw Error(std::string(who) + ": expects the " +
                    std::string(1, basis_letter(b)) + " basis");
}

// regroups an F combination into P, raising InternalError on failure: callers
// sit inside subalgebra operations whose results are guaranteed to regroup
LinComb regroup(const LinComb& f, const char* who) {
    try {
        return change_basis(f, Basis::P);
    } catch (const NotInCatalanSpanError&) {
        throw InternalError(std::string(who) + ": result failed to regroup into P");
    }
}

} // namespace

LinComb J(int n) {
    if (n < 0) throw InvalidIndexError("J: negative degree");
    return LinComb::monomial(Basis::P, Word(static_cast<std::size_t>(n), 1));
}

LinComb product_P(const Word& pi, const Word& tau) {
    require_ndpf(pi, "product_P");
    require_ndpf(tau, "product_P");
    LinComb f = product_F(change_basis(LinComb::monomial(Basis::P, pi), Basis::F),
                          change_basis(LinComb::monomial(Basis::P, tau), Basis::F));
    return regroup(f, "product_P");
}

LinComb product_P(const LinComb& x, const LinComb& y) {
    require_basis(x, Basis::P, "product_P");
    require_basis(y, Basis::P, "product_P");
    LinComb out = bilinear_extend(
        [](const Word& a, const Word& b) { return product_P(a, b); }, x, y);
    if (out.is_zero()) return LinComb::zero(Basis::P, x.degree + y.degree);
    return out;
}

namespace {

// converts both legs of an F (x) F tensor to P, verifying coefficient
// constancy on rearrangement classes leg by leg
Tensor regroup_tensor(const Tensor& t, const char* who) {
    Tensor out = Tensor::zero(std::vector<Basis>(t.factors(), Basis::P), t.degree);
    std::map<std::vector<Word>, Int> expected;
    for (const auto& [idx, c] : t.terms) {
        std::vector<Word> key(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            key[i] = idx[i];
            std::sort(key[i].begin(), key[i].end());
        }
        expected.emplace(key, c);
    }
    for (const auto& [key, c] : expected) {
        // every member of the product orbit must carry the same coefficient
        std::vector<std::vector<Word>> orbits(key.size());
        for (std::size_t i = 0; i < key.size(); ++i) orbits[i] = rearrangements(key[i]);
        std::vector<std::size_t> pick(key.size(), 0);
        for (;;) {
            std::vector<Word> member(key.size());
            for (std::size_t i = 0; i < key.size(); ++i) member[i] = orbits[i][pick[i]];
            if (t.coeff(member) != c)
                throw InternalError(std::string(who) + ": tensor failed to regroup into P");
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == orbits[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
        out.add_term(key, c);
    }
    return out;
}

} // namespace

Tensor coproduct_P(const Word& pi) {
    require_ndpf(pi, "coproduct_P");
    Tensor f = coproduct_F(change_basis(LinComb::monomial(Basis::P, pi), Basis::F));
    return regroup_tensor(f, "coproduct_P");
}

Tensor coproduct_P(const LinComb& x) {
    require_basis(x, Basis::P, "coproduct_P");
    Tensor out = Tensor::zero({Basis::P, Basis::P}, x.degree);
    for (const auto& [pi, c] : x.terms) {
        Tensor t = coproduct_P(pi);
        for (const auto& [idx, k] : t.terms) out.add_term(idx, c * k);
    }
    return out;
}

LinComb internal_product_P(const Word& pi, const Word& tau) {
    require_ndpf(pi, "internal_product_P");
    require_ndpf(tau, "internal_product_P");
    if (pi.size() != tau.size())
        throw DegreeMismatchError("internal_product_P: degree mismatch");
    LinComb f = LinComb::zero(Basis::F, static_cast<int>(pi.size()));
    for (const auto& a : rearrangements(pi))
        for (const auto& b : rearrangements(tau)) f.add_term(internal_product_F(a, b), 1);
    return regroup(f, "internal_product_P");
}

LinComb internal_product_P(const LinComb& x, const LinComb& y) {
    require_basis(x, Basis::P, "internal_product_P");
    require_basis(y, Basis::P, "internal_product_P");
    if (x.degree != y.degree)
        throw DegreeMismatchError("internal_product_P: degree mismatch");
    LinComb out = bilinear_extend(
        [](const Word& a, const Word& b) { return internal_product_P(a, b); }, x, y);
    if (out.is_zero()) return LinComb::zero(Basis::P, x.degree);
    return out;
}

Tensor iterated_coproduct_P(const LinComb& x, int r) {
    require_basis(x, Basis::P, "iterated_coproduct_P");
    if (r < 1) throw Error("iterated_coproduct_P: needs r >= 1");
    Tensor cur = Tensor::zero({Basis::P}, x.degree);
    for (const auto& [idx, c] : x.terms) cur.add_term({idx}, c);
    for (int step = 1; step < r; ++step) {
        // split the last leg once more
        Tensor next = Tensor::zero(std::vector<Basis>(step + 1, Basis::P), x.degree);
        for (const auto& [idx, c] : cur.terms) {
            Tensor t = coproduct_P(idx.back());
            for (const auto& [uv, k] : t.terms) {
                std::vector<Word> key(idx.begin(), idx.end() - 1);
                key.push_back(uv[0]);
                key.push_back(uv[1]);
                next.add_term(key, c * k);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<Word> successors(const Word& pi) {
    require_ndpf(pi, "successors");
    const auto n = static_cast<std::int32_t>(pi.size());
    Word ev(n, 0);
    for (auto x : pi) ++ev[x - 1];
    std::vector<std::int32_t> nz;
    for (std::int32_t i = 0; i < n; ++i)
        if (ev[i] > 0) nz.push_back(i);
    std::vector<Word> out;
    for (std::size_t t = 0; t + 1 < nz.size(); ++t) {
        Word merged = ev;
        merged[nz[t]] += merged[nz[t + 1]];
        merged[nz[t + 1]] = 0;
        Word w;
        for (std::int32_t i = 0; i < n; ++i) w.insert(w.end(), merged[i], i + 1);
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<Word> upset(const Word& pi) {
    std::set<Word> seen{pi};
    std::vector<Word> frontier{pi};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& x : frontier)
            for (const auto& s : successors(x))
                if (seen.insert(s).second) next.push_back(s);
        frontier = std::move(next);
    }
    return seen;
}

const std::vector<std::pair<Word, Word>>& poset_covers(int n) {
    static std::map<int, std::unique_ptr<std::vector<std::pair<Word, Word>>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto covers = std::make_unique<std::vector<std::pair<Word, Word>>>();
        for (const auto& pi : enumerate_ndpf(n))
            for (const auto& s : successors(pi)) covers->emplace_back(pi, s);
        it = cache.emplace(n, std::move(covers)).first;
    }
    return *it->second;
}

namespace {

// R expressed in P per index, resolved by recursion from the poset top down;
// memoized per degree
const std::map<Word, std::map<Word, Int>>& ribbon_table(int n) {
    static std::map<int, std::unique_ptr<std::map<Word, std::map<Word, Int>>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto table = std::make_unique<std::map<Word, std::map<Word, Int>>>();
        auto elements = enumerate_ndpf(n);
        // fewer distinct letters = higher in the poset; resolve top first
        std::stable_sort(elements.begin(), elements.end(), [](const Word& a, const Word& b) {
            auto da = std::set<std::int32_t>(a.begin(), a.end()).size();
            auto db = std::set<std::int32_t>(b.begin(), b.end()).size();
            return da < db;
        });
        for (const auto& pi : elements) {
            std::map<Word, Int> expn{{pi, 1}};
            for (const auto& above : upset(pi)) {
                if (above == pi) continue;
                for (const auto& [idx, c] : table->at(above)) {
                    auto& slot = expn[idx];
                    slot -= c;
                    if (slot == 0) expn.erase(idx);
                }
            }
            table->emplace(pi, std::move(expn));
        }
        it = cache.emplace(n, std::move(table)).first;
    }
    return *it->second;
}

} // namespace

LinComb ribbon_to_p(const LinComb& x) {
    require_basis(x, Basis::R, "ribbon_to_p");
    const auto& table = ribbon_table(x.degree);
    LinComb out = LinComb::zero(Basis::P, x.degree);
    for (const auto& [pi, c] : x.terms)
        for (const auto& [idx, k] : table.at(pi)) out.add_term(idx, c * k);
    return out;
}

LinComb p_to_ribbon(const LinComb& x) {
    require_basis(x, Basis::P, "p_to_ribbon");
    // P^pi = sum of R over the up-set, so the R expansion collects up-sets
    LinComb out = LinComb::zero(Basis::R, x.degree);
    for (const auto& [pi, c] : x.terms)
        for (const auto& above : upset(pi)) out.add_term(above, c);
    return out;
}

Word nu_index(const Composition& I) {
    Word out;
    for (auto part : I) {
        if (part < 1) throw InvalidIndexError("composition parts must be >= 1");
        out = shifted_concat(out, Word(static_cast<std::size_t>(part), 1));
    }
    return out;
}

bool is_nu_index(const Word& pi) {
    if (!is_ndpf(pi)) return false;
    if (pi.empty()) return true;
    // distinct letters must satisfy v_1 = 1, v_{t+1} = v_t + multiplicity(v_t)
    std::map<std::int32_t, std::int32_t> mult;
    for (auto x : pi) ++mult[x];
    std::int32_t expect = 1;
    for (const auto& [letter, count] : mult) {
        if (letter != expect) return false;
        expect = letter + count;
    }
    return true;
}

Composition nu_to_composition(const Word& pi) {
    if (!is_nu_index(pi))
        throw InvalidIndexError("nu_to_composition: not a nu-shaped index");
    return composition_of(pi);
}

namespace {

std::vector<std::pair<Composition, Int>> canonical_s_terms(std::map<Composition, Int> m) {
    std::vector<std::pair<Composition, Int>> out;
    for (auto& [I, c] : m)
        if (c != 0) out.emplace_back(I, c);
    return out;
}

} // namespace

NSymElement j_embed_S(const Composition& I) {
    LinComb p = LinComb::unit(Basis::P);
    for (auto part : I) {
        if (part < 1) throw InvalidIndexError("composition parts must be >= 1");
        p = product_P(p, J(part));
    }
    NSymElement out;
    out.s_terms = canonical_s_terms({{I, 1}});
    out.p = std::move(p);
    return out;
}

LinComb j_embed_ribbon(const Composition& I) {
    return LinComb::monomial(Basis::R, nu_index(I));
}

NSymElement nsym_from_p(const LinComb& x) {
    require_basis(x, Basis::P, "nsym_from_p");
    std::map<Composition, Int> s;
    for (const auto& [pi, c] : x.terms) {
        if (!is_nu_index(pi))
            throw NotInSymSpanError("nsym_from_p: support contains a non-nu index");
        s.emplace(nu_to_composition(pi), c);
    }
    // certify constructively: rebuild through products of J's and compare
    LinComb rebuilt = LinComb::zero(Basis::P, x.degree);
    for (const auto& [I, c] : s) rebuilt = add(rebuilt, scale(c, j_embed_S(I).p));
    if (!(rebuilt == x))
        throw NotInSymSpanError("nsym_from_p: S-expansion read-off failed certification");
    NSymElement out;
    out.s_terms = canonical_s_terms(std::move(s));
    out.p = x;
    return out;
}

NSymElement project_to_sym(const LinComb& x) {
    LinComb p = x.basis == Basis::R ? ribbon_to_p(x) : x;
    require_basis(p, Basis::P, "project_to_sym");
    return nsym_from_p(internal_product_P(p, J(p.degree)));
}

SplitCheck splitting_check(const std::vector<LinComb>& fs, const LinComb& g) {
    if (fs.empty()) throw Error("splitting_check: needs at least one factor");
    require_basis(g, Basis::P, "splitting_check");
    int total = 0;
    for (const auto& f : fs) {
        require_basis(f, Basis::P, "splitting_check");
        total += f.degree;
    }
    if (total != g.degree)
        throw DegreeMismatchError("splitting_check: factor degrees must sum to deg g");
    const int r = static_cast<int>(fs.size());

    LinComb external = LinComb::unit(Basis::P);
    for (const auto& f : fs) external = product_P(external, f);
    SplitCheck out;
    out.lhs = internal_product_P(external, g);

    LinComb rhs = LinComb::zero(Basis::P, g.degree);
    Tensor split = iterated_coproduct_P(g, r);
    for (const auto& [legs, c] : split.terms) {
        bool degrees_match = true;
        for (int i = 0; i < r; ++i)
            if (static_cast<int>(legs[i].size()) != fs[i].degree) {
                degrees_match = false; // mixed-degree pairs act as zero
                break;
            }
        if (!degrees_match) continue;
        LinComb piece = LinComb::unit(Basis::P);
        for (int i = 0; i < r; ++i)
            piece = product_P(piece, internal_product_P(
                                         fs[i], LinComb::monomial(Basis::P, legs[i])));
        rhs = add(rhs, scale(c, piece));
    }
    out.rhs = std::move(rhs);
    out.equal = out.lhs == out.rhs;
    return out;
}

LinComb product_M(const Word& pi, const Word& tau) {
    require_ndpf(pi, "product_M");
    require_ndpf(tau, "product_M");
    const int n = static_cast<int>(pi.size() + tau.size());
    LinComb out = LinComb::zero(Basis::M, n);
    for (const auto& sigma : enumerate_ndpf(n)) {
        Int c = coproduct_P(sigma).coeff({pi, tau});
        if (c != 0) out.add_term(sigma, c);
    }
    return out;
}

LinComb product_M(const LinComb& x, const LinComb& y) {
    require_basis(x, Basis::M, "product_M");
    require_basis(y, Basis::M, "product_M");
    LinComb out = bilinear_extend(
        [](const Word& a, const Word& b) { return product_M(a, b); }, x, y);
    if (out.is_zero()) return LinComb::zero(Basis::M, x.degree + y.degree);
    return out;
}

Tensor internal_coproduct_M(const Word& pi) {
    require_ndpf(pi, "internal_coproduct_M");
    const int n = static_cast<int>(pi.size());
    if (n > max_degree())
        throw ResourceLimitError("internal_coproduct_M: degree exceeds limit");
    double fibers = 1.0;
    for (int i = 0; i < n - 1; ++i) fibers *= (n + 1);
    if (fibers * fibers > 1e7)
        throw ResourceLimitError("internal_coproduct_M: fiber enumeration too large");
    Tensor out = Tensor::zero({Basis::M, Basis::M}, 2 * n);
    const auto all = enumerate_ndpf(n);
    for (const auto& a : all)
        for (const auto& b : all) {
            Int c = internal_product_P(a, b).coeff(pi);
            if (c != 0) out.add_term({a, b}, c);
        }
    return out;
}

LinComb qsym_embed(const Composition& I) {
    int n = 0;
    for (auto part : I) {
        if (part < 1) throw InvalidIndexError("composition parts must be >= 1");
        n += part;
    }
    LinComb out = LinComb::zero(Basis::M, n);
    for (const auto& pi : enumerate_ndpf(n))
        if (composition_of(pi) == I) out.add_term(pi, 1);
    return out;
}

} // namespace pqsym
