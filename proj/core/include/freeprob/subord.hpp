#pragma once

#include "freeprob/dist.hpp"

namespace freeprob {

/// The subordination distribution mu |> nu, production path:
///   R_{mu |> nu} = R_mu(z_1(1+M_nu), ..., z_k(1+M_nu)) (1+M_nu)^{-1}.
Distribution boxright(const Distribution& mu, const Distribution& nu);

// Partition-sum verification paths for the same distribution. These have
// Catalan cost and are capped at word length 8.

/// Free cumulant of mu |> nu at `word` via the subset/gap formula: sum over
/// S containing 1 and n of alpha_{w|S} times the nu-moments of the gaps
/// (empty gaps contribute a factor 1).
Rat boxright_r_subsets(const Distribution& mu, const Distribution& nu, const Word& word);

/// Same cumulant via the coloured partition sum over pi << 1_n with the
/// inner/outer colouring reading (R_mu, R_nu).
Rat boxright_r_partitions(const Distribution& mu, const Distribution& nu, const Word& word);

/// Generalized coefficient Cf_{word;rho} of R_{mu |> nu} via the sum over
/// pi << rho with the rho-special colouring.
Rat boxright_r_generalized(const Distribution& mu, const Distribution& nu, const Word& word,
                           const NcPartition& rho);

/// Boolean cumulant of mu |> nu via the sum over pi << 1_n reading
/// (R_mu, R_mu + R_nu).
Rat boxright_eta(const Distribution& mu, const Distribution& nu, const Word& word);

/// Moment of mu |> nu via the sum over all of NC(n) reading
/// (R_mu, R_mu + R_nu) with the inner/outer colouring.
Rat boxright_moments(const Distribution& mu, const Distribution& nu, const Word& word);

/// Subordination distribution of nu^{boxplus p} with respect to nu,
/// p rational >= 1; p = 1 gives delta.
Distribution subordination_of_power(const Distribution& nu, const Rat& p);

/// gamma |> nu built directly from R = sum_i z_i (1 + M_nu) z_i.
Distribution gamma_boxright(const Distribution& nu);

}  // namespace freeprob
