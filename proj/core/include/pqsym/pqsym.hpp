#pragma once

#include "pqsym/lincomb.hpp"
#include "pqsym/words.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace pqsym {

// sequence over the Cartesian pair alphabet, ordered lexicographically
using PairWord = std::vector<std::pair<std::int32_t, std::int32_t>>;

// F_a F_b: sum over the shifted shuffle with multiplicities
LinComb product_F(const Word& a, const Word& b);
LinComb product_F(const LinComb& x, const LinComb& y);

// deconcatenations, both halves parkized
Tensor coproduct_F(const Word& a);
Tensor coproduct_F(const LinComb& x);

// G_a G_b: parking functions whose prefix parkizes to a and suffix to b
LinComb product_G(const Word& a, const Word& b);
LinComb product_G(const LinComb& x, const LinComb& y);

// splits at k = 0 and each breakpoint: letters <= k, then Park of the rest - k
Tensor coproduct_G(const Word& a);

/* Replaces each pair by an integer so that the order pattern and the
 * within-column letter gaps survive while cross-column gaps (infinite in the
 * Cartesian alphabet) are truncated at cap.  cap >= word length reproduces
 * parkization over the true pair alphabet. */
Word flatten_pairs(const PairWord& p, std::int32_t cap);

// F_a * F_b = F_{Park(a (x) b)}: single parking function, cap = n
Word internal_product_F(const Word& a, const Word& b);
LinComb internal_product_F(const LinComb& x, const LinComb& y);

// as above with an explicit cap (cap-robustness checks)
Word internal_product_F_capped(const Word& a, const Word& b, std::int32_t cap);

// fiber enumeration over PF_n x PF_n (the transpose of internal_product_F)
Tensor internal_coproduct_G(const Word& a);

} // namespace pqsym
