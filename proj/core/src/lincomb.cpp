#include "pqsym/lincomb.hpp"
#include "pqsym/cqsym.hpp"
#include "pqsym/errors.hpp"

#include <algorithm>

namespace pqsym {

char basis_letter(Basis b) {
    switch (b) {
        case Basis::F: return 'F';
        case Basis::G: return 'G';
        case Basis::P: return 'P';
        case Basis::R: return 'R';
        case Basis::M: return 'M';
    }
    return '?';
}

Basis basis_from_letter(char c) {
    switch (c) {
        case 'F': return Basis::F;
        case 'G': return Basis::G;
        case 'P': return Basis::P;
        case 'R': return Basis::R;
        case 'M': return Basis::M;
    }
    throw InvalidIndexError(std::string("unknown basis tag '") + c + "'");
}

namespace {

bool permutation_indexed(Basis b) { return b == Basis::F || b == Basis::G; }

void validate_index(Basis b, const Word& index) {
    if (permutation_indexed(b)) {
        if (!is_parking(index))
            throw InvalidIndexError(std::string(1, basis_letter(b)) +
                                    " index must be a parking function");
    } else if (!is_ndpf(index)) {
        throw InvalidIndexError(std::string(1, basis_letter(b)) +
                                " index must be a nondecreasing parking function");
    }
}

void require_same_shape(const LinComb& x, const LinComb& y, const char* who) {
    if (x.basis != y.basis)
        throw Error(std::string(who) + ": basis mismatch");
    if (x.degree != y.degree)
        throw DegreeMismatchError(std::string(who) + ": degree " + std::to_string(x.degree) +
                                  " vs " + std::to_string(y.degree));
}

} // namespace

LinComb LinComb::zero(Basis b, int degree) {
    LinComb out;
    out.basis = b;
    out.degree = degree;
    return out;
}

LinComb LinComb::monomial(Basis b, const Word& index, Int coeff) {
    validate_index(b, index);
    LinComb out = zero(b, static_cast<int>(index.size()));
    out.add_term(index, coeff);
    return out;
}

LinComb LinComb::unit(Basis b) { return monomial(b, {}, 1); }

void LinComb::add_term(const Word& index, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms.find(index);
    if (it == terms.end()) {
        terms.emplace(index, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

Int LinComb::coeff(const Word& index) const {
    auto it = terms.find(index);
    return it == terms.end() ? Int(0) : it->second;
}

LinComb add(const LinComb& x, const LinComb& y) {
    require_same_shape(x, y, "add");
    LinComb out = x;
    for (const auto& [idx, c] : y.terms) out.add_term(idx, c);
    return out;
}

LinComb sub(const LinComb& x, const LinComb& y) {
    require_same_shape(x, y, "sub");
    LinComb out = x;
    for (const auto& [idx, c] : y.terms) out.add_term(idx, -c);
    return out;
}

LinComb scale(const Int& c, const LinComb& x) {
    LinComb out = LinComb::zero(x.basis, x.degree);
    if (c == 0) return out;
    for (const auto& [idx, k] : x.terms) out.terms.emplace(idx, c * k);
    return out;
}

LinComb linear_extend(const std::function<LinComb(const Word&)>& f, const LinComb& x) {
    bool first = true;
    LinComb out;
    for (const auto& [idx, c] : x.terms) {
        LinComb img = f(idx);
        if (first) {
            out = LinComb::zero(img.basis, img.degree);
            first = false;
        }
        for (const auto& [j, k] : img.terms) out.add_term(j, c * k);
    }
    if (first) out = LinComb::zero(x.basis, x.degree); // zero maps to zero
    return out;
}

LinComb bilinear_extend(const std::function<LinComb(const Word&, const Word&)>& f,
                        const LinComb& x, const LinComb& y) {
    bool first = true;
    LinComb out;
    for (const auto& [a, ca] : x.terms) {
        for (const auto& [b, cb] : y.terms) {
            LinComb img = f(a, b);
            if (first) {
                out = LinComb::zero(img.basis, img.degree);
                first = false;
            }
            for (const auto& [j, k] : img.terms) out.add_term(j, ca * cb * k);
        }
    }
    if (first) out = LinComb::zero(x.basis, x.degree);
    return out;
}

Int pairing(const LinComb& x, const LinComb& y) {
    const bool dual = (x.basis == Basis::F && y.basis == Basis::G) ||
                      (x.basis == Basis::G && y.basis == Basis::F) ||
                      (x.basis == Basis::P && y.basis == Basis::M) ||
                      (x.basis == Basis::M && y.basis == Basis::P);
    if (!dual) throw Error("pairing: not a dual basis pair");
    if (x.degree != y.degree) throw DegreeMismatchError("pairing: degree mismatch");
    Int out = 0;
    const LinComb& small = x.terms.size() <= y.terms.size() ? x : y;
    const LinComb& big = x.terms.size() <= y.terms.size() ? y : x;
    for (const auto& [idx, c] : small.terms) out += c * big.coeff(idx);
    return out;
}

namespace {

LinComb p_to_f(const LinComb& x) {
    LinComb out = LinComb::zero(Basis::F, x.degree);
    for (const auto& [pi, c] : x.terms)
        for (const auto& a : rearrangements(pi)) out.add_term(a, c);
    return out;
}

LinComb f_to_p(const LinComb& x) {
    LinComb out = LinComb::zero(Basis::P, x.degree);
    std::map<Word, Int> grouped;
    for (const auto& [a, c] : x.terms) {
        Word pi = a;
        std::sort(pi.begin(), pi.end());
        grouped.emplace(pi, c); // keep first-seen coefficient per orbit
    }
    for (const auto& [pi, c] : grouped) {
        for (const auto& a : rearrangements(pi))
            if (x.coeff(a) != c)
                throw NotInCatalanSpanError(
                    "change_basis: coefficients not constant on the rearrangement class");
        out.add_term(pi, c);
    }
    return out;
}

} // namespace

LinComb change_basis(const LinComb& x, Basis target) {
    if (x.basis == target) return x;
    auto path_error = [&]() -> Error {
        return Error(std::string("change_basis: no conversion path ") +
                     basis_letter(x.basis) + " -> " + basis_letter(target));
    };
    switch (x.basis) {
        case Basis::P:
            if (target == Basis::F) return p_to_f(x);
            if (target == Basis::R) return p_to_ribbon(x);
            throw path_error();
        case Basis::F:
            if (target == Basis::P) return f_to_p(x);
            if (target == Basis::R) return p_to_ribbon(f_to_p(x));
            throw path_error();
        case Basis::R:
            if (target == Basis::P) return ribbon_to_p(x);
            if (target == Basis::F) return p_to_f(ribbon_to_p(x));
            throw path_error();
        default:
            throw path_error();
    }
}

Tensor Tensor::zero(std::vector<Basis> bases, int total_degree) {
    if (bases.empty()) throw Error("Tensor: needs at least one factor");
    Tensor out;
    out.bases = std::move(bases);
    out.degree = total_degree;
    return out;
}

void Tensor::add_term(const std::vector<Word>& indices, const Int& coeff) {
    if (coeff == 0) return;
    if (indices.size() != bases.size())
        throw Error("Tensor: wrong number of factors in term");
    std::size_t total = 0;
    for (const auto& idx : indices) total += idx.size();
    if (static_cast<int>(total) != degree)
        throw DegreeMismatchError("Tensor: term total degree mismatch");
    auto it = terms.find(indices);
    if (it == terms.end()) {
        terms.emplace(indices, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

Int Tensor::coeff(const std::vector<Word>& indices) const {
    auto it = terms.find(indices);
    return it == terms.end() ? Int(0) : it->second;
}

Tensor tensor_add(const Tensor& x, const Tensor& y) {
    if (x.bases != y.bases || x.degree != y.degree)
        throw Error("tensor_add: shape mismatch");
    Tensor out = x;
    for (const auto& [idx, c] : y.terms) out.add_term(idx, c);
    return out;
}

Tensor tensor_scale(const Int& c, const Tensor& x) {
    Tensor out = Tensor::zero(x.bases, x.degree);
    if (c == 0) return out;
    for (const auto& [idx, k] : x.terms) out.terms.emplace(idx, c * k);
    return out;
}

Tensor tensor_reverse(const Tensor& x) {
    std::vector<Basis> rb(x.bases.rbegin(), x.bases.rend());
    Tensor out = Tensor::zero(rb, x.degree);
    for (const auto& [idx, c] : x.terms) {
        std::vector<Word> r(idx.rbegin(), idx.rend());
        out.add_term(r, c);
    }
    return out;
}

Tensor tensor_multiply(const Tensor& x, const Tensor& y,
                       const std::function<LinComb(const Word&, const Word&)>& factor_product) {
    if (x.bases != y.bases || x.factors() != y.factors())
        throw Error("tensor_multiply: shape mismatch");
    const std::size_t r = x.factors();
    Tensor out = Tensor::zero(x.bases, x.degree + y.degree);
    for (const auto& [tx, cx] : x.terms) {
        for (const auto& [ty, cy] : y.terms) {
            std::vector<LinComb> per_factor;
            per_factor.reserve(r);
            for (std::size_t i = 0; i < r; ++i)
                per_factor.push_back(factor_product(tx[i], ty[i]));
            // cartesian expansion of the per-factor combinations
            std::vector<Word> pick(r);
            std::function<void(std::size_t, Int)> emit = [&](std::size_t i, Int acc) {
                if (i == r) {
                    out.add_term(pick, acc);
                    return;
                }
                for (const auto& [idx, c] : per_factor[i].terms) {
                    pick[i] = idx;
                    emit(i + 1, acc * c);
                }
            };
            emit(0, cx * cy);
        }
    }
    return out;
}

} // namespace pqsym
