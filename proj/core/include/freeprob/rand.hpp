#pragma once

#include <cstdint>
#include <random>

#include "freeprob/dist.hpp"

namespace freeprob {

/// Deterministic generator of random test distributions. Free cumulants are
/// drawn sparsely: each word of length 1..order gets, with probability 1/2,
/// a coefficient n/d with n uniform in {-2..2} and d uniform in {1,2,3}.
class RandomDistributions {
  public:
    explicit RandomDistributions(std::uint64_t seed) : rng_(seed) {}

    NcSeries random_cumulants(int k, int order);
    Distribution random_distribution(int k, int order);

  private:
    std::mt19937_64 rng_;
};

}  // namespace freeprob
