#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freeprob/dist.hpp"

namespace freeprob {

/// Outcome of one named identity check over a batch of random trials.
/// On failure, `witness` describes the first discrepancy (trial, word).
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int trials = 50;
    int k = 2;
    int order = 4;
    int depth = 0;  // Fock base depth; 0 means order + 1
};

/// Transform and subordination identities on seeded random distributions:
/// boxplus-linearity of |> in the left argument, the bb / bb_t evolution
/// laws, eta-splitting, the convolution-power formulas, the semicircular
/// and Phi identities, and the delta absorption rules.
std::vector<CheckResult> verify_identities(const VerifyOptions& opt);

/// Fock-space oracle: vacuum moments of the operator model (A_i, B_i, C_i)
/// against the series engine (mu, nu, mu |> nu), plus depth stability and
/// the vacuum-projection axioms. k and order are taken from opt with the
/// word length capped at opt.order + 1 at depth opt.order + 1 and + 2.
std::vector<CheckResult> verify_fock(const VerifyOptions& opt);

/// One-variable Cauchy-transform oracle (k = 1): reversion-based R against
/// the recursion-based R, the reciprocal/eta route to F, subordination of
/// G_{mu boxplus nu}, power subordination, and the point-mass example.
std::vector<CheckResult> verify_onevar(const VerifyOptions& opt);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace freeprob
