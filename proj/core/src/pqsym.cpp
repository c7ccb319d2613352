#include "pqsym/pqsym.hpp"
#include "pqsym/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace pqsym {

namespace {

void require_parking_index(const Word& a, const char* who) {
    if (!is_parking(a))
        throw InvalidIndexError(std::string(who) + ": index is not a parking function");
}

} // namespace

LinComb product_F(const Word& a, const Word& b) {
    require_parking_index(a, "product_F");
    require_parking_index(b, "product_F");
    LinComb out = LinComb::zero(Basis::F, static_cast<int>(a.size() + b.size()));
    for (const auto& c : shifted_shuffle(a, b)) out.add_term(c, 1);
    return out;
}

LinComb product_F(const LinComb& x, const LinComb& y) {
    if (x.basis != Basis::F || y.basis != Basis::F)
        throw Error("product_F: expects F-basis operands");
    LinComb out = bilinear_extend(
        [](const Word& a, const Word& b) { return product_F(a, b); }, x, y);
    if (out.is_zero()) return LinComb::zero(Basis::F, x.degree + y.degree);
    return out;
}

Tensor coproduct_F(const Word& a) {
    require_parking_index(a, "coproduct_F");
    const auto n = a.size();
    Tensor out = Tensor::zero({Basis::F, Basis::F}, static_cast<int>(n));
    for (std::size_t k = 0; k <= n; ++k) {
        Word u(a.begin(), a.begin() + k);
        Word v(a.begin() + k, a.end());
        out.add_term({park(u), park(v)}, 1);
    }
    return out;
}

Tensor coproduct_F(const LinComb& x) {
    if (x.basis != Basis::F) throw Error("coproduct_F: expects an F-basis operand");
    Tensor out = Tensor::zero({Basis::F, Basis::F}, x.degree);
    for (const auto& [a, c] : x.terms) {
        Tensor t = coproduct_F(a);
        for (const auto& [idx, k] : t.terms) out.add_term(idx, c * k);
    }
    return out;
}

namespace {

// order-preserving relabelings of the distinct letters of a into [n] whose
// parkization restores a; these are exactly the candidate realization prefixes
void relabel_candidates(const Word& a, std::int32_t n, std::vector<Word>& out) {
    Word distinct = a;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const auto m = static_cast<std::int32_t>(distinct.size());
    std::vector<std::int32_t> img(m);
    std::function<void(std::int32_t, std::int32_t)> rec = [&](std::int32_t i, std::int32_t low) {
        if (i == m) {
            Word u(a.size());
            for (std::size_t j = 0; j < a.size(); ++j) {
                auto pos = std::lower_bound(distinct.begin(), distinct.end(), a[j]) -
                           distinct.begin();
                u[j] = img[pos];
            }
            if (park(u) == a) out.push_back(u);
            return;
        }
        for (std::int32_t v = low; v <= n - (m - 1 - i); ++v) {
            img[i] = v;
            rec(i + 1, v + 1);
        }
    };
    if (m == 0) {
        out.push_back({});
        return;
    }
    rec(0, 1);
}

} // namespace

LinComb product_G(const Word& a, const Word& b) {
    require_parking_index(a, "product_G");
    require_parking_index(b, "product_G");
    const auto n = static_cast<std::int32_t>(a.size() + b.size());
    LinComb out = LinComb::zero(Basis::G, n);
    std::vector<Word> us, vs;
    relabel_candidates(a, n, us);
    relabel_candidates(b, n, vs);
    for (const auto& u : us) {
        for (const auto& v : vs) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            if (is_parking(w)) out.add_term(w, 1);
        }
    }
    return out;
}

LinComb product_G(const LinComb& x, const LinComb& y) {
    if (x.basis != Basis::G || y.basis != Basis::G)
        throw Error("product_G: expects G-basis operands");
    LinComb out = bilinear_extend(
        [](const Word& a, const Word& b) { return product_G(a, b); }, x, y);
    if (out.is_zero()) return LinComb::zero(Basis::G, x.degree + y.degree);
    return out;
}

Tensor coproduct_G(const Word& a) {
    require_parking_index(a, "coproduct_G");
    Tensor out = Tensor::zero({Basis::G, Basis::G}, static_cast<int>(a.size()));
    std::set<std::int32_t> cuts;
    cuts.insert(0);
    if (!a.empty())
        for (auto b : breakpoints(a)) cuts.insert(b);
    for (auto k : cuts) {
        Word u, v;
        for (auto x : a) {
            if (x <= k)
                u.push_back(x);
            else
                v.push_back(x - k);
        }
        // u is itself a parking function when k is a breakpoint; v parkizes
        out.add_term({u, park(v)}, 1);
    }
    return out;
}

Word flatten_pairs(const PairWord& p, std::int32_t cap) {
    if (cap < 1) throw Error("flatten_pairs: cap must be >= 1");
    PairWord distinct = p;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> value;
    std::int32_t v = 0;
    for (std::size_t j = 0; j < distinct.size(); ++j) {
        std::int64_t gap;
        if (j == 0) {
            // distance below the first pair: finite only in column 1
            gap = distinct[0].first == 1 ? distinct[0].second - 1 : cap;
        } else {
            const auto& prev = distinct[j - 1];
            const auto& cur = distinct[j];
            gap = cur.first == prev.first ? cur.second - prev.second - 1 : cap;
        }
        v += 1 + static_cast<std::int32_t>(std::min<std::int64_t>(gap, cap));
        value[distinct[j]] = v;
    }
    Word out;
    out.reserve(p.size());
    for (const auto& q : p) out.push_back(value[q]);
    return out;
}

Word internal_product_F_capped(const Word& a, const Word& b, std::int32_t cap) {
    if (a.size() != b.size())
        throw DegreeMismatchError("internal_product_F: operands of degrees " +
                                  std::to_string(a.size()) + " and " + std::to_string(b.size()));
    require_parking_index(a, "internal_product_F");
    require_parking_index(b, "internal_product_F");
    if (a.empty()) return {};
    PairWord p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = {a[i], b[i]};
    return park(flatten_pairs(p, cap));
}

Word internal_product_F(const Word& a, const Word& b) {
    return internal_product_F_capped(a, b, std::max<std::int32_t>(1, static_cast<std::int32_t>(a.size())));
}

LinComb internal_product_F(const LinComb& x, const LinComb& y) {
    if (x.basis != Basis::F || y.basis != Basis::F)
        throw Error("internal_product_F: expects F-basis operands");
    if (x.degree != y.degree)
        throw DegreeMismatchError("internal_product_F: degree mismatch");
    LinComb out = LinComb::zero(Basis::F, x.degree);
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms) out.add_term(internal_product_F(a, b), ca * cb);
    return out;
}

Tensor internal_coproduct_G(const Word& a) {
    require_parking_index(a, "internal_coproduct_G");
    const int n = static_cast<int>(a.size());
    if (n > max_degree())
        throw ResourceLimitError("internal_coproduct_G: degree exceeds limit");
    // |PF_n|^2 flattenings; keep the scan tractable
    double fibers = 1.0;
    for (int i = 0; i < n - 1; ++i) fibers *= (n + 1);
    if (fibers * fibers > 1e7)
        throw ResourceLimitError("internal_coproduct_G: fiber enumeration too large");
    Tensor out = Tensor::zero({Basis::G, Basis::G}, 2 * n);
    const auto pfs = enumerate_parking(n);
    for (const auto& u : pfs)
        for (const auto& v : pfs)
            if (internal_product_F(u, v) == a) out.add_term({u, v}, 1);
    return out;
}

} // namespace pqsym
