#include "freeprob/subord.hpp"

#include <stdexcept>

namespace freeprob {

namespace {

constexpr int kPartitionSumCap = 8;

void check_pair(const Distribution& a, const Distribution& b) {
    if (a.k() != b.k() || a.order() != b.order())
        throw std::domain_error("boxright: mismatched k or order");
}

void check_word_cap(const Distribution& mu, const Word& w) {
    if (w.empty() || static_cast<int>(w.size()) > mu.order())
        throw std::domain_error("boxright oracle: word length out of range");
    if (static_cast<int>(w.size()) > kPartitionSumCap)
        throw std::domain_error("boxright oracle: word length above partition-sum cap");
    for (int letter : w)
        if (letter < 1 || letter > mu.k()) throw std::domain_error("boxright oracle: bad letter");
}

bool has_single_outer(const NcPartition& pi) {
    // pi << 1_n iff 1 and n lie in the same block
    for (const auto& b : pi.blocks)
        if (b.front() == 1) return b.back() == pi.n;
    return false;
}

}  // namespace

Distribution boxright(const Distribution& mu, const Distribution& nu) {
    check_pair(mu, nu);
    const NcSeries& mnu = nu.moments();
    NcSeries dil = dilate_substitute(mu.rseries(), mnu);
    NcSeries inv = inv_one_plus(mnu);   // (1+M)^{-1} = 1 + inv
    NcSeries r = dil + mul(dil, inv);
    return Distribution::from_free_cumulants(r);
}

Rat boxright_r_subsets(const Distribution& mu, const Distribution& nu, const Word& word) {
    check_pair(mu, nu);
    check_word_cap(mu, word);
    const int n = static_cast<int>(word.size());
    const NcSeries& rmu = mu.rseries();
    const NcSeries& mnu = nu.moments();
    if (n == 1) return rmu.cf(word);

    Rat total(0);
    // subsets of {2..n-1}; 1 and n are always members
    const int mid = n - 2;
    for (unsigned long mask = 0; mask < (1ul << mid); ++mask) {
        std::vector<int> s{1};
        for (int e = 2; e <= n - 1; ++e)
            if (mask & (1ul << (e - 2))) s.push_back(e);
        s.push_back(n);

        Rat alpha = rmu.cf(restrict_word(word, s));
        if (alpha == 0) continue;
        Rat gaps(1);
        for (std::size_t j = 0; j + 1 < s.size() && gaps != 0; ++j) {
            int p = s[j] + 1, q = s[j + 1] - 1;
            if (p > q) continue;  // empty gap contributes 1
            Word g(word.begin() + (p - 1), word.begin() + q);
            gaps *= mnu.cf(g);
        }
        total += alpha * gaps;
    }
    return total;
}

Rat boxright_r_partitions(const Distribution& mu, const Distribution& nu, const Word& word) {
    check_pair(mu, nu);
    check_word_cap(mu, word);
    Rat total(0);
    for (const auto& pi : enumerate_nc(static_cast<int>(word.size()))) {
        if (!has_single_outer(pi)) continue;
        total += cf_mixed(word, pi, inner_outer_colouring(pi), mu.rseries(), nu.rseries());
    }
    return total;
}

Rat boxright_r_generalized(const Distribution& mu, const Distribution& nu, const Word& word,
                           const NcPartition& rho) {
    check_pair(mu, nu);
    check_word_cap(mu, word);
    if (rho.n != static_cast<int>(word.size()))
        throw std::domain_error("boxright_r_generalized: rho size mismatch");
    Rat total(0);
    for (const auto& pi : enumerate_nc(rho.n)) {
        if (!ll_leq(pi, rho)) continue;
        total += cf_mixed(word, pi, special_colouring(pi, rho), mu.rseries(), nu.rseries());
    }
    return total;
}

Rat boxright_eta(const Distribution& mu, const Distribution& nu, const Word& word) {
    check_pair(mu, nu);
    check_word_cap(mu, word);
    NcSeries sum = mu.rseries() + nu.rseries();
    Rat total(0);
    for (const auto& pi : enumerate_nc(static_cast<int>(word.size()))) {
        if (!has_single_outer(pi)) continue;
        total += cf_mixed(word, pi, inner_outer_colouring(pi), mu.rseries(), sum);
    }
    return total;
}

Rat boxright_moments(const Distribution& mu, const Distribution& nu, const Word& word) {
    check_pair(mu, nu);
    check_word_cap(mu, word);
    NcSeries sum = mu.rseries() + nu.rseries();
    Rat total(0);
    for (const auto& pi : enumerate_nc(static_cast<int>(word.size()))) {
        total += cf_mixed(word, pi, inner_outer_colouring(pi), mu.rseries(), sum);
    }
    return total;
}

Distribution subordination_of_power(const Distribution& nu, const Rat& p) {
    if (p < 1) throw std::domain_error("subordination_of_power: p >= 1 required");
    return boxright(boxplus_power(nu, p - 1), nu);
}

Distribution gamma_boxright(const Distribution& nu) {
    return Distribution::from_free_cumulants(sandwich_series(nu.moments()));
}

Distribution phi2(const Distribution& rho, const Distribution& psi) {
    return bb_inverse(boxright(rho, psi));
}

}  // namespace freeprob
