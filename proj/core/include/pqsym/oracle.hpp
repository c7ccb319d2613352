#pragma once

#include "pqsym/lincomb.hpp"
#include "pqsym/words.hpp"

#include <map>
#include <string>

namespace pqsym {

struct CheckResult {
    std::string name;
    std::string range;          // human-readable parameter summary
    bool pass = false;
    std::string counterexample; // empty when pass
    double seconds = 0.0;
};

/* Brute-force realizations over explicit finite alphabets.  These never call
 * the algebraic fast paths they are used to verify; only parkization and raw
 * enumeration.  Scans are guarded by k^n <= 10^6. */

// all words w over [k] with Park(w) = a, each once
std::map<Word, long long> realize_G(const Word& a, int k);

// commutative image of the realization: exponent vectors of length k.
// well-definedness (independence of the rearrangement of pi) is checked by
// check_commutative_wellposed
std::map<Word, long long> commutative_realize(const Word& pi, int k);

// concatenation of realizations of a and b matches the realization of a*b
CheckResult check_product_G(const Word& a, const Word& b, int k);

/* Ordered-sum realization of the coproduct.  The second alphabet is placed at
 * offset k1*(n+1) so parkization cannot consume the inter-alphabet gap, which
 * in the true ordered sum is infinite; with the gap the identity holds word
 * for word. */
CheckResult check_coproduct_G(const Word& a, int k1, int k2);

/* Fiber of the internal product over PF_n x PF_n, computed independently by
 * parkizing integer-encoded letter pairs, compared against the fiber
 * enumeration of internal_coproduct_G; also re-derives coassociativity of the
 * internal coproduct on this index by double expansion. */
CheckResult check_internal_coproduct(const Word& a);

// commutative image identical across every rearrangement of pi
CheckResult check_commutative_wellposed(const Word& pi, int k);

// Cartesian-product realization of the internal coproduct on the
// quasi-symmetric span: M_I(XY) against the transpose-defined coproduct
CheckResult check_qsym_delta(const Composition& I, int k);

// recursive quasi-shuffle of compositions (independent of the M-basis code)
std::map<Composition, Int> quasi_shuffle(const Composition& I, const Composition& K);

} // namespace pqsym
