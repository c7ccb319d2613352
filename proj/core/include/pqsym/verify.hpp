#pragma once

#include "pqsym/oracle.hpp"

#include <string>
#include <vector>

namespace pqsym {

/* Property sweeps, one CheckResult per named invariant.  max_n bounds the
 * degrees scanned; individual checks clamp further where a larger range would
 * not finish interactively. */

std::vector<CheckResult> verify_hopf(int max_n);
std::vector<CheckResult> verify_internal(int max_n);
std::vector<CheckResult> verify_catalan(int max_n);
std::vector<CheckResult> verify_sym(int max_n);
std::vector<CheckResult> verify_oracle(int max_n);

// name is one of all, hopf, internal, catalan, sym, oracle
std::vector<CheckResult> verify_suite(const std::string& name, int max_n);

} // namespace pqsym
