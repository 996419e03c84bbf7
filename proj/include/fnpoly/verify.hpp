#pragma once

#include <optional>

#include "fnpoly/partitions.hpp"

namespace fnpoly {

/// Shift and recurrence identities for one p (or every p <= 3 when unset) up to k_max.
VerificationReport verify_lemmas_suite(std::optional<int> p, int k_max, const EnumerationBudget& budget);

/// brute_force_Pk = closed_form_Pk = [x^k] g / d_0 for every p <= 3 (or
/// the given p) with 2pk within the budget, plus adapted-partition counts
/// against the Fuss-Catalan numbers for every shift.
VerificationReport verify_oracle_suite(std::optional<int> p, const EnumerationBudget& budget);

/// psi-series moments against F_k, S-transform identities and, for a
/// single factor, quadrature against the Narayana values.
VerificationReport verify_freeprob_suite(int k_max);

}  // namespace fnpoly
