#include "pqsym/expr.hpp"

#include "pqsym/errors.hpp"
#include "pqsym/io.hpp"
#include "pqsym/pqsym.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <functional>

namespace pqsym {

namespace {

using nlohmann::json;

/* ---------------- value algebra ---------------- */

NSymElement nsym_from_map(std::map<Composition, Int> m, LinComb p) {
    NSymElement e;
    for (auto& [I, c] : m)
        if (c != 0) e.s_terms.emplace_back(I, c);
    e.p = std::move(p);
    return e;
}

NSymElement nsym_add(const NSymElement& a, const NSymElement& b) {
    std::map<Composition, Int> m;
    for (const auto& [I, c] : a.s_terms) m[I] += c;
    for (const auto& [I, c] : b.s_terms) m[I] += c;
    return nsym_from_map(std::move(m), add(a.p, b.p));
}

NSymElement nsym_scale(const Int& c, const NSymElement& a) {
    std::map<Composition, Int> m;
    for (const auto& [I, k] : a.s_terms) m[I] = c * k;
    return nsym_from_map(std::move(m), scale(c, a.p));
}

// j is an algebra morphism, so the S-side product is concatenation
NSymElement nsym_concat_product(const NSymElement& a, const NSymElement& b) {
    std::map<Composition, Int> m;
    for (const auto& [I, ci] : a.s_terms)
        for (const auto& [K, ck] : b.s_terms) {
            Composition ik = I;
            ik.insert(ik.end(), K.begin(), K.end());
            m[ik] += ci * ck;
        }
    return nsym_from_map(std::move(m), product_P(a.p, b.p));
}

const char* kind_name(const Value& v) {
    switch (v.v.index()) {
        case 0: return "integer";
        case 1: return "word";
        case 2: return "combination";
        case 3: return "tensor";
        default: return "nsym";
    }
}

[[noreturn]] void type_error(const std::string& op, const Value& a, const Value& b) {
    throw ExprTypeError(op + " cannot combine " + kind_name(a) + " and " + kind_name(b));
}

// P-basis view of a value, for internal products and the projector
LinComb as_p(const Value& v, const char* where) {
    if (const auto* x = std::get_if<LinComb>(&v.v)) {
        if (x->basis == Basis::P) return *x;
        if (x->basis == Basis::R) return change_basis(*x, Basis::P);
        throw ExprTypeError(std::string(where) + ": expected a P or R basis operand");
    }
    if (const auto* e = std::get_if<NSymElement>(&v.v)) return e->p;
    throw ExprTypeError(std::string(where) + ": expected a combination operand");
}

Value negate(const Value& v) {
    if (const auto* n = std::get_if<Int>(&v.v)) return {Int(-*n)};
    if (const auto* x = std::get_if<LinComb>(&v.v)) return {scale(-1, *x)};
    if (const auto* t = std::get_if<Tensor>(&v.v)) return {tensor_scale(-1, *t)};
    if (const auto* e = std::get_if<NSymElement>(&v.v)) return {nsym_scale(-1, *e)};
    throw ExprTypeError("cannot negate a word");
}

Value value_add(const Value& a, const Value& b) {
    if (a.v.index() != b.v.index()) {
        // an NSym leg degrades to its P expansion next to a plain combination
        if (std::holds_alternative<NSymElement>(a.v) && std::holds_alternative<LinComb>(b.v))
            return {add(as_p(a, "+"), std::get<LinComb>(b.v))};
        if (std::holds_alternative<LinComb>(a.v) && std::holds_alternative<NSymElement>(b.v))
            return {add(std::get<LinComb>(a.v), as_p(b, "+"))};
        type_error("'+'", a, b);
    }
    if (const auto* n = std::get_if<Int>(&a.v)) return {Int(*n + std::get<Int>(b.v))};
    if (const auto* x = std::get_if<LinComb>(&a.v)) return {add(*x, std::get<LinComb>(b.v))};
    if (const auto* t = std::get_if<Tensor>(&a.v)) return {tensor_add(*t, std::get<Tensor>(b.v))};
    if (const auto* e = std::get_if<NSymElement>(&a.v)) return {nsym_add(*e, std::get<NSymElement>(b.v))};
    type_error("'+'", a, b);
}

LinComb external_lincomb_product(const LinComb& x, const LinComb& y) {
    if (x.basis != y.basis)
        throw ExprTypeError("external products require matching bases");
    switch (x.basis) {
        case Basis::F: return product_F(x, y);
        case Basis::G: return product_G(x, y);
        case Basis::P: return product_P(x, y);
        case Basis::M: return product_M(x, y);
        case Basis::R:
            return change_basis(product_P(change_basis(x, Basis::P), change_basis(y, Basis::P)),
                                Basis::R);
    }
    throw InternalError("unhandled basis");
}

Value value_mul(const Value& a, const Value& b) {
    if (const auto* n = std::get_if<Int>(&a.v)) {
        if (const auto* m = std::get_if<Int>(&b.v)) return {Int(*n * *m)};
        if (const auto* x = std::get_if<LinComb>(&b.v)) return {scale(*n, *x)};
        if (const auto* t = std::get_if<Tensor>(&b.v)) return {tensor_scale(*n, *t)};
        if (const auto* e = std::get_if<NSymElement>(&b.v)) return {nsym_scale(*n, *e)};
    }
    if (std::holds_alternative<Int>(b.v)) return value_mul(b, a);

    if (const auto* x = std::get_if<LinComb>(&a.v)) {
        if (const auto* y = std::get_if<LinComb>(&b.v)) return {external_lincomb_product(*x, *y)};
        if (std::holds_alternative<NSymElement>(b.v) && x->basis == Basis::P)
            return {product_P(*x, as_p(b, "'*'"))};
    }
    if (const auto* e = std::get_if<NSymElement>(&a.v)) {
        if (const auto* f = std::get_if<NSymElement>(&b.v)) return {nsym_concat_product(*e, *f)};
        if (const auto* y = std::get_if<LinComb>(&b.v); y && y->basis == Basis::P)
            return {product_P(e->p, *y)};
    }
    if (const auto* t = std::get_if<Tensor>(&a.v)) {
        if (const auto* u = std::get_if<Tensor>(&b.v)) {
            if (t->bases != u->bases)
                throw ExprTypeError("'*' on tensors requires identical factor bases");
            for (std::size_t i = 1; i < t->bases.size(); ++i)
                if (t->bases[i] != t->bases[0])
                    throw ExprTypeError("'*' on tensors requires a uniform basis");
            const Basis basis = t->bases.empty() ? Basis::F : t->bases[0];
            const auto factor = [basis](const Word& p, const Word& q) {
                switch (basis) {
                    case Basis::F: return product_F(p, q);
                    case Basis::G: return product_G(p, q);
                    case Basis::P: return product_P(p, q);
                    default:
                        throw ExprTypeError("'*' on tensors supports F, G and P factors");
                }
            };
            return {tensor_multiply(*t, *u, factor)};
        }
    }
    type_error("'*'", a, b);
}

Value value_internal(const Value& a, const Value& b) {
    if (const auto* x = std::get_if<LinComb>(&a.v)) {
        if (const auto* y = std::get_if<LinComb>(&b.v)) {
            if (x->basis == Basis::F && y->basis == Basis::F) return {internal_product_F(*x, *y)};
            if ((x->basis == Basis::P || x->basis == Basis::R) &&
                (y->basis == Basis::P || y->basis == Basis::R)) {
                const LinComb out = internal_product_P(as_p(a, "internal product"),
                                                       as_p(b, "internal product"));
                if (x->basis == Basis::R && y->basis == Basis::R)
                    return {change_basis(out, Basis::R)};
                return {out};
            }
            throw ExprTypeError("the internal product acts in the F, P and R bases");
        }
        if (std::holds_alternative<NSymElement>(b.v))
            return {internal_product_P(as_p(a, "internal product"), as_p(b, "internal product"))};
    }
    if (const auto* e = std::get_if<NSymElement>(&a.v)) {
        if (std::holds_alternative<NSymElement>(b.v))
            return {nsym_from_p(internal_product_P(e->p, as_p(b, "internal product")))};
        if (std::holds_alternative<LinComb>(b.v))
            return {internal_product_P(e->p, as_p(b, "internal product"))};
    }
    type_error("the internal product", a, b);
}

// promotes a value to a tensor factor list next to a known basis
Tensor as_tensor(const Value& v, Basis neighbor) {
    if (const auto* t = std::get_if<Tensor>(&v.v)) return *t;
    if (const auto* x = std::get_if<LinComb>(&v.v)) {
        Tensor t = Tensor::zero({x->basis}, x->degree);
        for (const auto& [idx, c] : x->terms) t.add_term({idx}, c);
        return t;
    }
    if (const auto* n = std::get_if<Int>(&v.v)) {
        Tensor t = Tensor::zero({neighbor}, 0);
        if (*n != 0) t.add_term({Word{}}, *n);
        return t;
    }
    throw ExprTypeError("'(x)' expects combinations or tensors");
}

Value value_tensor(const Value& a, const Value& b) {
    Basis hint = Basis::F;
    if (const auto* x = std::get_if<LinComb>(&a.v)) hint = x->basis;
    if (const auto* t = std::get_if<Tensor>(&a.v); t && !t->bases.empty()) hint = t->bases.back();
    if (const auto* x = std::get_if<LinComb>(&b.v)) hint = x->basis;
    if (const auto* t = std::get_if<Tensor>(&b.v); t && !t->bases.empty()) hint = t->bases.front();

    const Tensor left = as_tensor(a, hint), right = as_tensor(b, hint);
    std::vector<Basis> bases = left.bases;
    bases.insert(bases.end(), right.bases.begin(), right.bases.end());
    Tensor out = Tensor::zero(bases, left.degree + right.degree);
    for (const auto& [li, lc] : left.terms)
        for (const auto& [ri, rc] : right.terms) {
            std::vector<Word> idx = li;
            idx.insert(idx.end(), ri.begin(), ri.end());
            out.add_term(idx, lc * rc);
        }
    return {out};
}

Value value_delta(const Value& v) {
    if (const auto* x = std::get_if<LinComb>(&v.v)) {
        switch (x->basis) {
            case Basis::F: return {coproduct_F(*x)};
            case Basis::G: {
                Tensor acc = Tensor::zero({Basis::G, Basis::G}, x->degree);
                for (const auto& [a, c] : x->terms)
                    acc = tensor_add(acc, tensor_scale(c, coproduct_G(a)));
                return {acc};
            }
            case Basis::P: return {coproduct_P(*x)};
            case Basis::R: return {coproduct_P(change_basis(*x, Basis::P))};
            case Basis::M: throw ExprTypeError("Delta is not defined on the M basis here");
        }
    }
    if (std::holds_alternative<NSymElement>(v.v)) return {coproduct_P(as_p(v, "Delta"))};
    throw ExprTypeError("Delta expects a combination");
}

Value value_idelta(const Value& v) {
    if (const auto* x = std::get_if<LinComb>(&v.v)) {
        if (x->basis == Basis::G) {
            Tensor acc = Tensor::zero({Basis::G, Basis::G}, 2 * x->degree);
            for (const auto& [a, c] : x->terms)
                acc = tensor_add(acc, tensor_scale(c, internal_coproduct_G(a)));
            return {acc};
        }
        if (x->basis == Basis::M) {
            Tensor acc = Tensor::zero({Basis::M, Basis::M}, 2 * x->degree);
            for (const auto& [a, c] : x->terms)
                acc = tensor_add(acc, tensor_scale(c, internal_coproduct_M(a)));
            return {acc};
        }
    }
    throw ExprTypeError("iDelta acts on the G and M bases");
}

/* ---------------- parser ---------------- */

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool lookahead(const char* tok) const {
        return s.compare(i, std::char_traits<char>::length(tok), tok) == 0;
    }
    bool eat(const char* tok) {
        if (!lookahead(tok)) return false;
        i += std::char_traits<char>::length(tok);
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i); }

    // true when "istar" sits at the cursor as a whole word
    bool at_istar_keyword() const {
        if (!lookahead("istar")) return false;
        const std::size_t after = i + 5;
        return after >= s.size() || !std::isalnum(static_cast<unsigned char>(s[after]));
    }

    std::string slice_until(char close) {
        const std::size_t end = s.find(close, i);
        if (end == std::string::npos) fail(std::string("missing '") + close + "'");
        std::string out = s.substr(i, end - i);
        i = end + 1;
        return out;
    }

    Value parse_sum() {
        Value acc = parse_product();
        for (;;) {
            skip_ws();
            if (eat("+")) acc = value_add(acc, parse_product());
            else if (i < s.size() && s[i] == '-' ) {
                ++i;
                acc = value_add(acc, negate(parse_product()));
            } else
                return acc;
        }
    }

    Value parse_product() {
        Value acc = parse_tensor();
        for (;;) {
            skip_ws();
            if (eat("\xC2\xB7") || eat("*")) acc = value_mul(acc, parse_tensor());
            else return acc;
        }
    }

    Value parse_tensor() {
        Value acc = parse_internal();
        for (;;) {
            skip_ws();
            if (eat("(x)")) acc = value_tensor(acc, parse_internal());
            else return acc;
        }
    }

    Value parse_internal() {
        Value acc = parse_unary();
        for (;;) {
            skip_ws();
            if (eat("\xE2\x8A\x9B") || eat(".i.")) {
                acc = value_internal(acc, parse_unary());
            } else if (at_istar_keyword()) {
                i += 5;
                acc = value_internal(acc, parse_unary());
            } else
                return acc;
        }
    }

    Value parse_unary() {
        skip_ws();
        if (i < s.size() && s[i] == '-') {
            ++i;
            return negate(parse_unary());
        }
        return parse_atom();
    }

    Int parse_int() {
        skip_ws();
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        if (digits.empty()) fail("expected an integer");
        return Int(digits);
    }

    Word bracket_word() {
        skip_ws();
        if (i >= s.size() || s[i] != '[') fail("expected '['");
        ++i;
        return parse_word(slice_until(']'));
    }

    Value parse_atom() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of expression");

        if (std::isdigit(static_cast<unsigned char>(s[i]))) return {parse_int()};

        if (s[i] == '(') {
            ++i;
            Value v = parse_sum();
            skip_ws();
            if (!eat(")")) fail("expected ')'");
            return v;
        }
        if (s[i] == '[') {
            ++i;
            return {parse_word(slice_until(']'))};
        }

        std::string ident;
        while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ident += s[i++];
        if (ident.empty()) fail("unexpected character");

        if (ident.size() == 1 && std::string("FGPRM").find(ident[0]) != std::string::npos) {
            const Word w = bracket_word();
            return {LinComb::monomial(basis_from_letter(ident[0]), w)};
        }
        if (ident == "J") {
            skip_ws();
            if (!eat("(")) fail("expected '(' after J");
            const Int n = parse_int();
            skip_ws();
            if (!eat(")")) fail("expected ')'");
            if (n < 1 || n > 1000) throw InvalidIndexError("J expects a positive degree");
            return {j_embed_S({static_cast<std::int32_t>(n)})};
        }
        if (ident == "S") {
            const Word I = bracket_word();
            return {j_embed_S(I)};
        }
        if (ident == "Rib") {
            const Word I = bracket_word();
            return {j_embed_ribbon(I)};
        }
        if (ident == "Delta" || ident == "iDelta" || ident == "project") {
            skip_ws();
            if (!eat("(")) fail("expected '(' after " + ident);
            Value arg = parse_sum();
            skip_ws();
            if (!eat(")")) fail("expected ')'");
            if (ident == "Delta") return value_delta(arg);
            if (ident == "iDelta") return value_idelta(arg);
            if (std::holds_alternative<LinComb>(arg.v) || std::holds_alternative<NSymElement>(arg.v))
                return {project_to_sym(as_p(arg, "project"))};
            throw ExprTypeError("project expects a P or R combination");
        }
        if (ident == "park" || ident == "std") {
            skip_ws();
            if (!eat("(")) fail("expected '(' after " + ident);
            const Word w = parse_word(slice_until(')'));
            for (std::int32_t x : w)
                if (x < 1) throw InvalidIndexError(ident + " expects positive letters");
            return {ident == "park" ? park(w) : standardize(w)};
        }
        if (ident == "toBasis") {
            skip_ws();
            if (!eat("(")) fail("expected '(' after toBasis");
            Value arg = parse_sum();
            skip_ws();
            if (!eat(",")) fail("expected ',' in toBasis");
            skip_ws();
            if (i >= s.size() || std::string("FGPRM").find(s[i]) == std::string::npos)
                fail("expected a basis letter F, G, P, R or M");
            const Basis target = basis_from_letter(s[i++]);
            skip_ws();
            if (!eat(")")) fail("expected ')'");
            if (std::holds_alternative<NSymElement>(arg.v))
                return {change_basis(std::get<NSymElement>(arg.v).p, target)};
            if (const auto* x = std::get_if<LinComb>(&arg.v)) return {change_basis(*x, target)};
            throw ExprTypeError("toBasis expects a combination");
        }
        fail("unknown name '" + ident + "'");
    }
};

} // namespace

Value eval_expression(const std::string& text) {
    Parser p(text);
    Value v = p.parse_sum();
    p.skip_ws();
    if (p.i != text.size()) p.fail("trailing input");
    return v;
}

std::string value_to_string(const Value& v) {
    if (const auto* n = std::get_if<Int>(&v.v)) return n->str();
    if (const auto* w = std::get_if<Word>(&v.v)) return word_to_string(*w);
    if (const auto* x = std::get_if<LinComb>(&v.v)) return lincomb_to_string(*x);
    if (const auto* t = std::get_if<Tensor>(&v.v)) return tensor_to_string(*t);
    return nsym_to_string(std::get<NSymElement>(v.v));
}

std::string value_to_json(const Value& v) {
    json out;
    if (const auto* n = std::get_if<Int>(&v.v)) {
        out = {{"type", "integer"}, {"value", n->str()}};
    } else if (const auto* w = std::get_if<Word>(&v.v)) {
        out = {{"type", "word"}, {"value", json::parse(words_to_json({*w}))[0]}};
    } else if (const auto* x = std::get_if<LinComb>(&v.v)) {
        out = json::parse(lincomb_to_json(*x));
        out["type"] = "lincomb";
    } else if (const auto* t = std::get_if<Tensor>(&v.v)) {
        out = json::parse(tensor_to_json(*t));
        out["type"] = "tensor";
    } else {
        out = json::parse(nsym_to_json(std::get<NSymElement>(v.v)));
        out["type"] = "nsym";
    }
    return out.dump();
}

} // namespace pqsym
