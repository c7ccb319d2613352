#pragma once

#include "pqsym/words.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace pqsym {

using Int = boost::multiprecision::cpp_int;

// F, G index parking functions; P, R, M index nondecreasing parking functions
enum class Basis { F, G, P, R, M };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

/* Exact linear combination over one basis in one degree.  Terms are kept in
 * lexicographic index order with no zero coefficients; equality of the struct
 * is structural equality of the combination. */
struct LinComb {
    Basis basis = Basis::F;
    int degree = 0;
    std::map<Word, Int> terms;

    static LinComb zero(Basis b, int degree);
    // validates the index against the basis (parking / nondecreasing parking)
    static LinComb monomial(Basis b, const Word& index, Int coeff = 1);
    // the unit of the graded algebra: the empty-index term in degree 0
    static LinComb unit(Basis b);

    void add_term(const Word& index, const Int& coeff); // no index validation
    bool is_zero() const { return terms.empty(); }
    Int coeff(const Word& index) const;

    bool operator==(const LinComb&) const = default;
};

LinComb add(const LinComb& x, const LinComb& y);
LinComb sub(const LinComb& x, const LinComb& y);
LinComb scale(const Int& c, const LinComb& x);

// applies an index-level map linearly and collects; f fixes the result basis/degree
LinComb linear_extend(const std::function<LinComb(const Word&)>& f, const LinComb& x);
LinComb bilinear_extend(const std::function<LinComb(const Word&, const Word&)>& f,
                        const LinComb& x, const LinComb& y);

// duality bracket for the dual pairs (F,G) and (P,M): sum of coefficient products
Int pairing(const LinComb& x, const LinComb& y);

// conversion paths: identity, P<->F (F->P needs orbit-constant coefficients,
// else NotInCatalanSpan), R<->P, and their compositions R<->F
LinComb change_basis(const LinComb& x, Basis target);

/* Element of a tensor power with one basis tag per factor.  Homogeneous as a
 * whole: the total degree (sum of factor lengths) is the same in every term,
 * though individual factors may vary, as in coproduct images.  Degree-0
 * factors carry the empty index. */
struct Tensor {
    std::vector<Basis> bases;
    int degree = 0; // total over the factors
    std::map<std::vector<Word>, Int> terms;

    static Tensor zero(std::vector<Basis> bases, int total_degree);

    void add_term(const std::vector<Word>& indices, const Int& coeff);
    bool is_zero() const { return terms.empty(); }
    Int coeff(const std::vector<Word>& indices) const;
    std::size_t factors() const { return bases.size(); }

    bool operator==(const Tensor&) const = default;
};

Tensor tensor_add(const Tensor& x, const Tensor& y);
Tensor tensor_scale(const Int& c, const Tensor& x);

// reverses the factor order of every term (cocommutativity checks)
Tensor tensor_reverse(const Tensor& x);

// multiplies factorwise with the supplied per-factor product
Tensor tensor_multiply(const Tensor& x, const Tensor& y,
                       const std::function<LinComb(const Word&, const Word&)>& factor_product);

} // namespace pqsym
