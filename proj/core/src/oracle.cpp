#include "pqsym/oracle.hpp"

#include "pqsym/cqsym.hpp"
#include "pqsym/errors.hpp"
#include "pqsym/pqsym.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <set>
#include <sstream>
#include <utility>

namespace pqsym {

namespace {

constexpr long long kScanLimit = 1000000; // alphabet^length guard

void guard_scan(std::size_t alphabet, std::size_t length) {
    long long total = 1;
    for (std::size_t i = 0; i < length; ++i) {
        total *= static_cast<long long>(alphabet);
        if (total > kScanLimit)
            throw ResourceLimitError("realization scan exceeds k^n <= 10^6");
    }
}

std::string fmt_word(const Word& w) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    os << ']';
    return os.str();
}

std::string fmt_pair(const Word& u, const Word& v) {
    return fmt_word(u) + "(x)" + fmt_word(v);
}

// calls fn on every word of the given length over the alphabet
template <typename Fn>
void for_each_word(const std::vector<std::int32_t>& alphabet, std::size_t length, Fn&& fn) {
    Word w(length, 0);
    std::vector<std::size_t> idx(length, 0);
    for (;;) {
        for (std::size_t i = 0; i < length; ++i) w[i] = alphabet[idx[i]];
        fn(w);
        std::size_t pos = length;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < alphabet.size()) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
        if (length == 0) return;
    }
}

std::vector<std::int32_t> range_alphabet(int k) {
    std::vector<std::int32_t> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int x = 1; x <= k; ++x) out.push_back(static_cast<std::int32_t>(x));
    return out;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// fiber of the internal product over PF_n x PF_n, via integer-encoded pairs.
// the encoding (x,y) -> (x-1)*K + y with K = 2n+1 preserves the pair order
// with enough headroom that parkizing the encoded word computes the product
std::map<std::pair<Word, Word>, long long> encoded_fiber(const Word& a) {
    const std::size_t n = a.size();
    const std::int32_t K = static_cast<std::int32_t>(2 * n + 1);
    std::map<std::pair<Word, Word>, long long> fiber;
    const auto pfs = enumerate_parking(static_cast<int>(n));
    Word enc(n, 0);
    for (const Word& u : pfs) {
        for (const Word& v : pfs) {
            for (std::size_t i = 0; i < n; ++i) enc[i] = (u[i] - 1) * K + v[i];
            if (park(enc) == a) ++fiber[{u, v}];
        }
    }
    return fiber;
}

} // namespace

std::map<Word, long long> realize_G(const Word& a, int k) {
    if (!is_parking(a)) throw InvalidIndexError("realize_G: index must be a parking function");
    if (k < 1) throw InvalidIndexError("realize_G: alphabet size must be positive");
    guard_scan(static_cast<std::size_t>(k), a.size());
    std::map<Word, long long> out;
    for_each_word(range_alphabet(k), a.size(), [&](const Word& w) {
        if (park(w) == a) ++out[w];
    });
    return out;
}

std::map<Word, long long> commutative_realize(const Word& pi, int k) {
    std::map<Word, long long> out;
    for (const auto& [w, m] : realize_G(pi, k)) {
        Word e(static_cast<std::size_t>(k), 0);
        for (std::int32_t x : w) ++e[static_cast<std::size_t>(x - 1)];
        out[e] += m;
    }
    return out;
}

CheckResult check_product_G(const Word& a, const Word& b, int k) {
    Timer t;
    CheckResult r;
    r.name = "product_G_realization";
    r.range = "a=" + fmt_word(a) + " b=" + fmt_word(b) + " k=" + std::to_string(k);
    guard_scan(static_cast<std::size_t>(k), a.size() + b.size());

    std::map<Word, long long> lhs;
    const auto ra = realize_G(a, k);
    const auto rb = realize_G(b, k);
    for (const auto& [u, mu] : ra) {
        for (const auto& [v, mv] : rb) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            lhs[w] += mu * mv;
        }
    }

    std::map<Word, long long> rhs;
    for (const auto& [c, m] : product_G(a, b).terms) {
        const long long mm = static_cast<long long>(m);
        for (const auto& [w, mw] : realize_G(c, k)) rhs[w] += mm * mw;
    }

    r.pass = lhs == rhs;
    if (!r.pass) {
        for (const auto& [w, m] : lhs) {
            auto it = rhs.find(w);
            if (it == rhs.end() || it->second != m) {
                r.counterexample = "word " + fmt_word(w);
                break;
            }
        }
        if (r.counterexample.empty()) r.counterexample = "extra words on the product side";
    }
    r.seconds = t.seconds();
    return r;
}

CheckResult check_coproduct_G(const Word& a, int k1, int k2) {
    Timer t;
    CheckResult r;
    r.name = "coproduct_G_ordered_sum";
    r.range = "a=" + fmt_word(a) + " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2);
    const std::size_t n = a.size();
    guard_scan(static_cast<std::size_t>(k1 + k2), n);
    if (!is_parking(a)) throw InvalidIndexError("check_coproduct_G: index must be a parking function");

    const std::int32_t offset = static_cast<std::int32_t>(k1) * static_cast<std::int32_t>(n + 1);
    std::vector<std::int32_t> alphabet = range_alphabet(k1);
    for (int j = 1; j <= k2; ++j) alphabet.push_back(offset + j);

    std::set<std::int32_t> cuts{0};
    if (n) for (std::int32_t b : breakpoints(a)) cuts.insert(b);

    std::map<std::pair<Word, Word>, long long> got;
    bool cut_ok = true;
    Word bad;
    for_each_word(alphabet, n, [&](const Word& w) {
        if (!cut_ok || park(w) != a) return;
        Word u, v;
        for (std::int32_t x : w) {
            if (x <= k1) u.push_back(x);
            else v.push_back(x - offset);
        }
        if (!cuts.count(static_cast<std::int32_t>(u.size()))) {
            cut_ok = false;
            bad = w;
            return;
        }
        ++got[{u, v}];
    });
    if (!cut_ok) {
        r.pass = false;
        r.counterexample = "word " + fmt_word(bad) + " splits at a non-breakpoint";
        r.seconds = t.seconds();
        return r;
    }

    std::map<std::pair<Word, Word>, long long> want;
    for (const auto& [bc, m] : coproduct_G(a).terms) {
        const long long mm = static_cast<long long>(m);
        for (const auto& [u, mu] : realize_G(bc[0], k1))
            for (const auto& [v, mv] : realize_G(bc[1], k2))
                want[{u, v}] += mm * mu * mv;
    }

    r.pass = got == want;
    if (!r.pass) {
        for (const auto& [uv, m] : got) {
            auto it = want.find(uv);
            if (it == want.end() || it->second != m) {
                r.counterexample = "pair " + fmt_pair(uv.first, uv.second);
                break;
            }
        }
        if (r.counterexample.empty()) r.counterexample = "extra pairs on the coproduct side";
    }
    r.seconds = t.seconds();
    return r;
}

CheckResult check_internal_coproduct(const Word& a) {
    Timer t;
    CheckResult r;
    r.name = "internal_coproduct_fiber";
    r.range = "a=" + fmt_word(a);
    if (!is_parking(a)) throw InvalidIndexError("check_internal_coproduct: index must be a parking function");

    const auto fiber = encoded_fiber(a);

    std::map<std::pair<Word, Word>, long long> fast;
    for (const auto& [uv, m] : internal_coproduct_G(a).terms)
        fast[{uv[0], uv[1]}] += static_cast<long long>(m);

    if (fiber != fast) {
        r.pass = false;
        for (const auto& [uv, m] : fiber) {
            auto it = fast.find(uv);
            if (it == fast.end() || it->second != m) {
                r.counterexample = "pair " + fmt_pair(uv.first, uv.second);
                break;
            }
        }
        if (r.counterexample.empty()) r.counterexample = "extra pairs in internal_coproduct_G";
        r.seconds = t.seconds();
        return r;
    }

    // coassociativity by double expansion of the oracle fibers
    std::map<Word, std::map<std::pair<Word, Word>, long long>> cache;
    auto fiber_of = [&](const Word& x) -> const std::map<std::pair<Word, Word>, long long>& {
        auto it = cache.find(x);
        if (it == cache.end()) it = cache.emplace(x, encoded_fiber(x)).first;
        return it->second;
    };

    std::map<std::vector<Word>, long long> left, right;
    for (const auto& [uv, m] : fiber) {
        for (const auto& [xy, mm] : fiber_of(uv.first))
            left[{xy.first, xy.second, uv.second}] += m * mm;
        for (const auto& [xy, mm] : fiber_of(uv.second))
            right[{uv.first, xy.first, xy.second}] += m * mm;
    }
    r.pass = left == right;
    if (!r.pass) r.counterexample = "double expansion differs at " + fmt_word(a);
    r.seconds = t.seconds();
    return r;
}

CheckResult check_commutative_wellposed(const Word& pi, int k) {
    Timer t;
    CheckResult r;
    r.name = "commutative_realization_wellposed";
    r.range = "pi=" + fmt_word(pi) + " k=" + std::to_string(k);
    if (!is_ndpf(pi)) throw InvalidIndexError("check_commutative_wellposed: index must be nondecreasing");

    const auto base = commutative_realize(pi, k);
    r.pass = true;
    for (const Word& a : rearrangements(pi)) {
        if (commutative_realize(a, k) != base) {
            r.pass = false;
            r.counterexample = "rearrangement " + fmt_word(a);
            break;
        }
    }
    r.seconds = t.seconds();
    return r;
}

std::map<Composition, Int> quasi_shuffle(const Composition& I, const Composition& K) {
    std::map<Composition, Int> out;
    if (I.empty()) {
        out[K] = 1;
        return out;
    }
    if (K.empty()) {
        out[I] = 1;
        return out;
    }
    const Composition It(I.begin() + 1, I.end());
    const Composition Kt(K.begin() + 1, K.end());
    auto prepend = [&](std::int32_t head, const std::map<Composition, Int>& sub) {
        for (const auto& [L, c] : sub) {
            Composition full;
            full.reserve(L.size() + 1);
            full.push_back(head);
            full.insert(full.end(), L.begin(), L.end());
            out[full] += c;
        }
    };
    prepend(I[0], quasi_shuffle(It, K));
    prepend(K[0], quasi_shuffle(I, Kt));
    prepend(I[0] + K[0], quasi_shuffle(It, Kt));
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

CheckResult check_qsym_delta(const Composition& I, int k) {
    Timer t;
    CheckResult r;
    r.name = "qsym_internal_coproduct";
    r.range = "I=" + fmt_word(I) + " k=" + std::to_string(k);
    std::int32_t n = 0;
    for (std::int32_t part : I) {
        if (part < 1) throw InvalidIndexError("check_qsym_delta: composition parts must be positive");
        n += part;
    }

    // M_I evaluated on the lex-ordered alphabet [k] x [k]: choose a strictly
    // increasing sequence of pairs, one per part, and record the exponent
    // vectors of both coordinates
    const std::size_t p = I.size();
    std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
    for (std::int32_t x = 1; x <= k; ++x)
        for (std::int32_t y = 1; y <= k; ++y) pairs.emplace_back(x, y);

    std::map<std::pair<Word, Word>, long long> lhs;
    std::vector<std::size_t> idx(p);
    for (std::size_t i = 0; i < p; ++i) idx[i] = i;
    if (p <= pairs.size()) {
        for (;;) {
            Word ex(static_cast<std::size_t>(k), 0), ey(static_cast<std::size_t>(k), 0);
            for (std::size_t i = 0; i < p; ++i) {
                ex[static_cast<std::size_t>(pairs[idx[i]].first - 1)] += I[i];
                ey[static_cast<std::size_t>(pairs[idx[i]].second - 1)] += I[i];
            }
            ++lhs[{ex, ey}];
            std::size_t pos = p;
            while (pos > 0 && idx[pos - 1] == pairs.size() - (p - pos) - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < p; ++i) idx[i] = idx[i - 1] + 1;
        }
    }

    // transpose-defined coproduct realized through the commutative images
    std::map<std::pair<Word, Word>, long long> rhs;
    for (const Word& pi : enumerate_ndpf(n)) {
        if (composition_of(pi) != I) continue;
        for (const auto& [ab, c] : internal_coproduct_M(pi).terms) {
            const long long cc = static_cast<long long>(c);
            for (const auto& [mx, nx] : commutative_realize(ab[0], k))
                for (const auto& [my, ny] : commutative_realize(ab[1], k))
                    rhs[{mx, my}] += cc * nx * ny;
        }
    }

    r.pass = lhs == rhs;
    if (!r.pass) {
        for (const auto& [em, m] : lhs) {
            auto it = rhs.find(em);
            if (it == rhs.end() || it->second != m) {
                r.counterexample = "exponents " + fmt_pair(em.first, em.second);
                break;
            }
        }
        if (r.counterexample.empty()) r.counterexample = "extra exponent pairs on the transpose side";
    }
    r.seconds = t.seconds();
    return r;
}

} // namespace pqsym
