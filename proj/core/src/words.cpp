#include "pqsym/words.hpp"
#include "pqsym/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace pqsym {

int max_degree() {
    static const int limit = [] {
        if (const char* env = std::getenv("PQSYM_MAX_DEGREE")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v >= 0 && v <= 12) return static_cast<int>(v);
        }
        return 7;
    }();
    return limit;
}

namespace {

void require_letters(const Word& w) {
    for (auto x : w)
        if (x < 1) throw InvalidIndexError("letters must be >= 1");
}

void require_parking(const Word& w, const char* who) {
    if (!is_parking(w))
        throw InvalidIndexError(std::string(who) + ": not a parking function");
}

void check_degree_guard(int n, const char* who) {
    if (n < 0) throw InvalidIndexError(std::string(who) + ": negative degree");
    if (n > max_degree())
        throw ResourceLimitError(std::string(who) + ": degree " + std::to_string(n) +
                                 " exceeds limit " + std::to_string(max_degree()) +
                                 " (override with PQSYM_MAX_DEGREE)");
}

} // namespace

bool is_parking(const Word& w) {
    for (auto x : w)
        if (x < 1) return false;
    Word s = w;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] > static_cast<std::int32_t>(i + 1)) return false;
    return true;
}

bool is_ndpf(const Word& w) {
    return std::is_sorted(w.begin(), w.end()) && is_parking(w);
}

std::set<std::int32_t> breakpoints(const Word& a) {
    require_parking(a, "breakpoints");
    std::set<std::int32_t> out;
    const auto n = static_cast<std::int32_t>(a.size());
    for (std::int32_t b = 1; b <= n; ++b) {
        std::int32_t cnt = 0;
        for (auto x : a)
            if (x <= b) ++cnt;
        if (cnt == b) out.insert(b);
    }
    return out;
}

bool is_prime(const Word& a) {
    if (a.empty()) throw InvalidIndexError("is_prime: empty word");
    return breakpoints(a).size() == 1;
}

Word shift(const Word& w, std::int32_t k) {
    Word out = w;
    for (auto& x : out) x += k;
    return out;
}

Word shifted_concat(const Word& u, const Word& v) {
    Word out = u;
    const auto k = static_cast<std::int32_t>(u.size());
    for (auto x : v) out.push_back(x + k);
    return out;
}

namespace {

void shuffle_rec(const Word& u, std::size_t i, const Word& v, std::size_t j,
                 Word& cur, std::vector<Word>& out) {
    if (i == u.size() && j == v.size()) {
        out.push_back(cur);
        return;
    }
    if (i < u.size()) {
        cur.push_back(u[i]);
        shuffle_rec(u, i + 1, v, j, cur, out);
        cur.pop_back();
    }
    if (j < v.size()) {
        cur.push_back(v[j]);
        shuffle_rec(u, i, v, j + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Word> shifted_shuffle(const Word& u, const Word& v) {
    Word vs = shift(v, static_cast<std::int32_t>(u.size()));
    std::vector<Word> out;
    Word cur;
    cur.reserve(u.size() + v.size());
    shuffle_rec(u, 0, vs, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

Word standardize(const Word& w) {
    require_letters(w);
    const auto n = w.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    // stable sort by letter keeps ties in left-to-right order
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
    Word out(n);
    for (std::size_t r = 0; r < n; ++r)
        out[idx[r]] = static_cast<std::int32_t>(r + 1);
    return out;
}

ParkizationTrace parkize(const Word& w) {
    require_letters(w);
    ParkizationTrace trace;
    Word cur = w;
    const auto n = static_cast<std::int32_t>(cur.size());
    for (;;) {
        // d = min{ i : #{letters <= i} < i }; d = n+1 means parking
        std::int32_t d = n + 1;
        for (std::int32_t i = 1; i <= n; ++i) {
            std::int32_t cnt = 0;
            for (auto x : cur)
                if (x <= i) ++cnt;
            if (cnt < i) {
                d = i;
                break;
            }
        }
        if (d == n + 1) break;
        for (auto& x : cur)
            if (x > d) --x;
        trace.rounds.emplace_back(d, cur);
    }
    trace.result = std::move(cur);
    return trace;
}

Word park(const Word& w) { return parkize(w).result; }

Evaluation evaluation(const Word& w) {
    require_letters(w);
    Evaluation ev;
    std::int32_t mx = 0;
    for (auto x : w) mx = std::max(mx, x);
    ev.full.assign(mx, 0);
    for (auto x : w) ++ev.full[x - 1];
    for (auto c : ev.full)
        if (c > 0) ev.packed.push_back(c);
    for (std::size_t i = 0; i < ev.packed.size(); ++i) {
        ev.unpacked.push_back(ev.packed[i]);
        if (i + 1 < ev.packed.size())
            ev.unpacked.insert(ev.unpacked.end(), ev.packed[i] - 1, 0);
    }
    return ev;
}

Composition composition_of(const Word& w) { return evaluation(w).packed; }

namespace {

void ndpf_rec(int n, std::int32_t pos, std::int32_t low, Word& cur, std::vector<Word>& out) {
    if (pos > n) {
        out.push_back(cur);
        return;
    }
    // weakly increasing with cur[i] <= i+1 is exactly the sorted parking condition
    for (std::int32_t x = low; x <= pos; ++x) {
        cur.push_back(x);
        ndpf_rec(n, pos + 1, x, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Word> enumerate_ndpf(int n) {
    check_degree_guard(n, "enumerate_ndpf");
    std::vector<Word> out;
    Word cur;
    ndpf_rec(n, 1, 1, cur, out);
    return out;
}

std::vector<Word> rearrangements(const Word& w) {
    Word s = w;
    std::sort(s.begin(), s.end());
    std::vector<Word> out;
    do {
        out.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

std::vector<Word> enumerate_parking(int n) {
    check_degree_guard(n, "enumerate_parking");
    std::vector<Word> out;
    for (const auto& pi : enumerate_ndpf(n)) {
        auto orb = rearrangements(pi);
        out.insert(out.end(), orb.begin(), orb.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> enumerate_prime(int n) {
    check_degree_guard(n, "enumerate_prime");
    std::vector<Word> out;
    for (const auto& a : enumerate_parking(n))
        if (!a.empty() && is_prime(a)) out.push_back(a);
    if (n == 0) out.push_back({});
    return out;
}

} // namespace pqsym
