#pragma once

#include "pqsym/cqsym.hpp"
#include "pqsym/lincomb.hpp"
#include "pqsym/oracle.hpp"
#include "pqsym/words.hpp"

#include <string>
#include <vector>

namespace pqsym {

/* Text forms.  Words and compositions print as "[3,1,3,2]"; a parse accepts
 * comma-separated entries or, when every character is a digit 1..9, compact
 * digit strings like "3132". */

std::string word_to_string(const Word& w);
Word parse_word(const std::string& s);

// linear combinations print as "2*F[3,1,3,2] + F[1,1,2,3]" with terms in
// index order, unit coefficients omitted, and degree 0 as a bare coefficient
std::string lincomb_to_string(const LinComb& x);
LinComb parse_lincomb(const std::string& s);

// tensor terms join factors with "(x)"; degree-0 factors print as "1"
std::string tensor_to_string(const Tensor& t);

// as a product expression over the generators, e.g. "J(2)*J(1) + 3*J(3)"
std::string nsym_to_string(const NSymElement& e);

/* JSON forms.  Coefficients are decimal strings; term order is the canonical
 * index order.  The JSON layer round-trips exactly with the in-memory maps. */

std::string lincomb_to_json(const LinComb& x);
LinComb lincomb_from_json(const std::string& s);

std::string tensor_to_json(const Tensor& t);

std::string trace_to_json(const Word& input, const ParkizationTrace& t);
std::string words_to_json(const std::vector<Word>& ws);
std::string covers_to_json(const std::vector<std::pair<Word, Word>>& covers);
std::string check_results_to_json(const std::vector<CheckResult>& rs);
std::string nsym_to_json(const NSymElement& e);

} // namespace pqsym
