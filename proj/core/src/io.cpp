#include "pqsym/io.hpp"

#include "pqsym/errors.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <sstream>

namespace pqsym {

namespace {

using nlohmann::json;

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::int32_t parse_letter(const std::string& tok, std::size_t pos) {
    const std::string t = trim(tok);
    if (!all_digits(t)) throw ParseError("expected a positive integer, got '" + tok + "'", pos);
    long v = 0;
    for (char c : t) {
        v = v * 10 + (c - '0');
        if (v > 1000000) throw ParseError("letter out of range", pos);
    }
    if (v < 1) throw ParseError("letters must be positive", pos);
    return static_cast<std::int32_t>(v);
}

json word_json(const Word& w) {
    json a = json::array();
    for (std::int32_t x : w) a.push_back(x);
    return a;
}

Word word_from_json(const json& a) {
    if (!a.is_array()) throw ParseError("expected an array of letters", 0);
    Word w;
    for (const auto& x : a) {
        if (!x.is_number_integer()) throw ParseError("expected integer letters", 0);
        w.push_back(x.get<std::int32_t>());
    }
    return w;
}

json lincomb_json(const LinComb& x) {
    json out;
    out["basis"] = std::string(1, basis_letter(x.basis));
    out["degree"] = x.degree;
    json terms = json::array();
    for (const auto& [idx, c] : x.terms) terms.push_back({{"index", word_json(idx)}, {"coeff", c.str()}});
    out["terms"] = std::move(terms);
    return out;
}

json nsym_json(const NSymElement& e) {
    json terms = json::array();
    for (const auto& [I, c] : e.s_terms)
        terms.push_back({{"composition", word_json(I)}, {"coeff", c.str()}});
    return json{{"s_terms", std::move(terms)}, {"p", lincomb_json(e.p)}};
}

std::string coeff_prefix(const Int& c, bool first) {
    // sign and magnitude as the term joiner: "2*", " + ", " - 3*"
    const bool neg = c < 0;
    const Int mag = neg ? Int(-c) : c;
    std::string out;
    if (first) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (mag != 1) out += mag.str() + "*";
    return out;
}

std::string scalar_term(const Int& c, bool first) {
    // a term with no basis factor: sign joiner plus the bare magnitude
    const bool neg = c < 0;
    const Int mag = neg ? Int(-c) : c;
    std::string out;
    if (first) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    return out + mag.str();
}

} // namespace

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    os << ']';
    return os.str();
}

Word parse_word(const std::string& s) {
    std::string t = trim(s);
    if (!t.empty() && t.front() == '[') {
        if (t.back() != ']') throw ParseError("unbalanced brackets in word", t.size());
        t = trim(t.substr(1, t.size() - 2));
    }
    if (t.empty()) return {};
    Word w;
    if (t.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = t.find(',', start);
            const std::string tok = t.substr(start, comma == std::string::npos ? std::string::npos
                                                                               : comma - start);
            w.push_back(parse_letter(tok, start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return w;
    }
    if (!all_digits(t)) throw ParseError("expected digits or a comma-separated word", 0);
    // multi-digit token: compact per-digit word when every digit is nonzero,
    // otherwise a single letter (e.g. "10")
    if (t.size() > 1 && t.find('0') == std::string::npos) {
        for (char c : t) w.push_back(c - '0');
        return w;
    }
    w.push_back(parse_letter(t, 0));
    return w;
}

std::string lincomb_to_string(const LinComb& x) {
    if (x.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : x.terms) {
        if (x.degree == 0) {
            out += scalar_term(c, first);
        } else {
            out += coeff_prefix(c, first) + basis_letter(x.basis) + word_to_string(idx);
        }
        first = false;
    }
    return out;
}

LinComb parse_lincomb(const std::string& s) {
    struct Term {
        Int coeff;
        bool has_index = false;
        Word index;
        char basis = 'F';
        std::size_t pos = 0;
    };
    std::vector<Term> parsed;

    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i == s.size()) throw ParseError("empty linear combination", i);

    bool first = true;
    while (true) {
        skip_ws();
        if (i == s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", i);
        }
        first = false;

        Term t;
        t.pos = i;
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        if (!digits.empty()) {
            t.coeff = Int(digits);
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        } else {
            t.coeff = 1;
        }
        t.coeff *= sign;

        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            t.basis = s[i++];
            if (i >= s.size() || s[i] != '[') throw ParseError("expected '[' after basis letter", i);
            const std::size_t close = s.find(']', i);
            if (close == std::string::npos) throw ParseError("unbalanced brackets in index", i);
            t.index = parse_word(s.substr(i, close - i + 1));
            t.has_index = true;
            i = close + 1;
        } else if (digits.empty()) {
            throw ParseError("expected a coefficient or a basis term", i);
        }
        parsed.push_back(std::move(t));
    }
    if (parsed.empty()) throw ParseError("empty linear combination", 0);

    char basis_c = 0;
    int degree = -1;
    for (const Term& t : parsed) {
        if (!t.has_index) {
            if (degree == -1) degree = 0;
            else if (degree != 0) throw ParseError("terms of unequal degree", t.pos);
            continue;
        }
        if (basis_c == 0) basis_c = t.basis;
        else if (basis_c != t.basis) throw ParseError("mixed basis letters in one combination", t.pos);
        if (degree == -1) degree = static_cast<int>(t.index.size());
        else if (degree != static_cast<int>(t.index.size()))
            throw ParseError("terms of unequal degree", t.pos);
    }
    Basis basis = Basis::F;
    if (basis_c) {
        try {
            basis = basis_from_letter(basis_c);
        } catch (const InvalidIndexError&) {
            throw ParseError(std::string("unknown basis letter '") + basis_c + "'", 0);
        }
    }

    LinComb acc = LinComb::zero(basis, degree == -1 ? 0 : degree);
    for (const Term& t : parsed)
        acc = add(acc, LinComb::monomial(basis, t.index, t.coeff));
    return acc;
}

std::string tensor_to_string(const Tensor& t) {
    if (t.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idxs, c] : t.terms) {
        out += coeff_prefix(c, first);
        for (std::size_t f = 0; f < idxs.size(); ++f) {
            if (f) out += "(x)";
            if (idxs[f].empty()) out += "1";
            else out += std::string(1, basis_letter(t.bases[f])) + word_to_string(idxs[f]);
        }
        first = false;
    }
    return out;
}

std::string nsym_to_string(const NSymElement& e) {
    if (e.s_terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [I, c] : e.s_terms) {
        if (I.empty()) {
            out += scalar_term(c, first);
        } else {
            std::string factors;
            for (std::size_t i = 0; i < I.size(); ++i) {
                if (i) factors += "*";
                factors += "J(" + std::to_string(I[i]) + ")";
            }
            out += coeff_prefix(c, first) + factors;
        }
        first = false;
    }
    return out;
}

std::string lincomb_to_json(const LinComb& x) { return lincomb_json(x).dump(); }

LinComb lincomb_from_json(const std::string& s) {
    json j;
    try {
        j = json::parse(s);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    try {
        const std::string b = j.at("basis").get<std::string>();
        if (b.size() != 1) throw ParseError("basis must be a single letter", 0);
        const Basis basis = basis_from_letter(b[0]);
        const int degree = j.at("degree").get<int>();
        LinComb acc = LinComb::zero(basis, degree);
        for (const auto& term : j.at("terms")) {
            const Word idx = word_from_json(term.at("index"));
            if (static_cast<int>(idx.size()) != degree)
                throw ParseError("term degree differs from the stated degree", 0);
            Int c;
            try {
                c = Int(term.at("coeff").get<std::string>());
            } catch (const std::runtime_error&) {
                throw ParseError("coefficients must be decimal strings", 0);
            }
            acc = add(acc, LinComb::monomial(basis, idx, c));
        }
        return acc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed combination object: ") + e.what(), 0);
    }
}

std::string tensor_to_json(const Tensor& t) {
    json out;
    json bases = json::array();
    for (Basis b : t.bases) bases.push_back(std::string(1, basis_letter(b)));
    out["bases"] = std::move(bases);
    out["degree"] = t.degree;
    json terms = json::array();
    for (const auto& [idxs, c] : t.terms) {
        json factors = json::array();
        for (const Word& w : idxs) factors.push_back(word_json(w));
        terms.push_back({{"indices", std::move(factors)}, {"coeff", c.str()}});
    }
    out["terms"] = std::move(terms);
    return out.dump();
}

std::string trace_to_json(const Word& input, const ParkizationTrace& t) {
    json rounds = json::array();
    for (const auto& [pivot, word] : t.rounds)
        rounds.push_back({{"pivot", pivot}, {"word", word_json(word)}});
    return json{{"input", word_json(input)},
                {"rounds", std::move(rounds)},
                {"result", word_json(t.result)}}
        .dump();
}

std::string words_to_json(const std::vector<Word>& ws) {
    json out = json::array();
    for (const Word& w : ws) out.push_back(word_json(w));
    return out.dump();
}

std::string covers_to_json(const std::vector<std::pair<Word, Word>>& covers) {
    json out = json::array();
    for (const auto& [from, to] : covers)
        out.push_back({{"from", word_json(from)}, {"to", word_json(to)}});
    return out.dump();
}

std::string check_results_to_json(const std::vector<CheckResult>& rs) {
    json out = json::array();
    for (const CheckResult& r : rs)
        out.push_back({{"name", r.name},
                       {"range", r.range},
                       {"pass", r.pass},
                       {"counterexample", r.counterexample},
                       {"seconds", r.seconds}});
    return out.dump();
}

std::string nsym_to_json(const NSymElement& e) { return nsym_json(e).dump(); }

} // namespace pqsym
