#include "freeprob/rand.hpp"

namespace freeprob {

NcSeries RandomDistributions::random_cumulants(int k, int order) {
    NcSeries r(k, order);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> den(1, 3);
    // words in length-then-lex order via an odometer, so the stream of draws
    // is reproducible across platforms for a fixed seed
    for (int n = 1; n <= order; ++n) {
        Word w(static_cast<std::size_t>(n), 1);
        while (true) {
            if (coin(rng_)) {
                Rat v(num(rng_), den(rng_));
                v.canonicalize();
                r.set(w, std::move(v));
            }
            int pos = n - 1;
            while (pos >= 0 && w[static_cast<std::size_t>(pos)] == k) {
                w[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++w[static_cast<std::size_t>(pos)];
        }
    }
    return r;
}

Distribution RandomDistributions::random_distribution(int k, int order) {
    return Distribution::from_free_cumulants(random_cumulants(k, order));
}

}  // namespace freeprob
