#pragma once

#include "pqsym/lincomb.hpp"
#include "pqsym/words.hpp"

#include <set>
#include <utility>
#include <vector>

namespace pqsym {

// J_n = P^{1^n}, the left unit of the internal product in degree n
LinComb J(int n);

/* P-basis Hopf operations go through the F expansion: multiply or split
 * there, then regroup by rearrangement class.  The regroup must succeed;
 * failure would contradict the subalgebra structure and raises InternalError. */
LinComb product_P(const Word& pi, const Word& tau);
LinComb product_P(const LinComb& x, const LinComb& y);
Tensor coproduct_P(const Word& pi);
Tensor coproduct_P(const LinComb& x);
LinComb internal_product_P(const Word& pi, const Word& tau);
LinComb internal_product_P(const LinComb& x, const LinComb& y);

// r-fold coproduct of P^pi (r >= 1 tensor legs)
Tensor iterated_coproduct_P(const LinComb& x, int r);

// single merge steps on the full evaluation vector, as nondecreasing words
std::vector<Word> successors(const Word& pi);

// transitive closure {pi' >= pi}, including pi itself
std::set<Word> upset(const Word& pi);

/* Cover relations of one degree, memoized per degree after first use;
 * read-only afterwards. */
const std::vector<std::pair<Word, Word>>& poset_covers(int n);

// P^pi = sum of R over upset(pi); inverse by unitriangular recursion
LinComb ribbon_to_p(const LinComb& x);
LinComb p_to_ribbon(const LinComb& x);

// nu_I = 1^{i_1} . 1^{i_2} . ... (shifted concatenation), the unique
// nondecreasing word whose full evaluation is the unpacked composition
Word nu_index(const Composition& I);
bool is_nu_index(const Word& pi);
Composition nu_to_composition(const Word& pi);

/* Element of the embedded algebra of noncommutative symmetric functions:
 * an S-expansion over compositions together with its P-basis expansion.
 * Instances are certified by construction through products of J's. */
struct NSymElement {
    std::vector<std::pair<Composition, Int>> s_terms; // canonical order
    LinComb p; // the same element expanded in the P basis

    bool operator==(const NSymElement&) const = default;
};

// S^I -> J_{i_1} ... J_{i_p} via iterated product_P
NSymElement j_embed_S(const Composition& I);

// ribbon image: the single Catalan ribbon at the index nu_I
LinComb j_embed_ribbon(const Composition& I);

/* Recognizes a P-basis element as an embedded Sym element: the support must
 * consist of nu-indices; the candidate S-expansion read off coefficientwise
 * is then rebuilt through j_embed_S and compared, so membership is certified
 * constructively.  Throws NotInSymSpanError otherwise. */
NSymElement nsym_from_p(const LinComb& x);

// x * J_n with its certified Sym expression; accepts P or R input
NSymElement project_to_sym(const LinComb& x);

struct SplitCheck {
    bool equal = false;
    LinComb lhs; // (f_1 ... f_r) * g
    LinComb rhs; // mu_r [ (f_1 (x) ... (x) f_r) *_r Delta^r(g) ]
};

/* Splitting identity: *_r acts factorwise and annihilates mixed-degree tensor
 * pairs; requires sum of deg(f_i) = deg(g). */
SplitCheck splitting_check(const std::vector<LinComb>& fs, const LinComb& g);

// transpose of coproduct_P
LinComb product_M(const Word& pi, const Word& tau);
LinComb product_M(const LinComb& x, const LinComb& y);

// transpose of internal_product_P; fiber scan guarded like internal_coproduct_G
Tensor internal_coproduct_M(const Word& pi);

// M_I = sum of M_pi over nondecreasing parking functions with packed evaluation I
LinComb qsym_embed(const Composition& I);

} // namespace pqsym
