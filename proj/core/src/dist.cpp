#include "freeprob/dist.hpp"

#include <stdexcept>

namespace freeprob {

Distribution::Distribution(NcSeries m, NcSeries r, NcSeries e)
    : moments_(std::move(m)), rseries_(std::move(r)), eseries_(std::move(e)) {}

Distribution Distribution::from_moments(NcSeries moments) {
    NcSeries r = r_from_moments(moments);
    NcSeries e = eta_from_moments(moments);
    return Distribution(std::move(moments), std::move(r), std::move(e));
}

Distribution Distribution::from_free_cumulants(const NcSeries& r) {
    NcSeries m = moments_from_r(r);
    NcSeries e = eta_from_moments(m);
    return Distribution(std::move(m), r, std::move(e));
}

Distribution Distribution::from_boolean_cumulants(const NcSeries& eta) {
    NcSeries m = moments_from_eta(eta);
    NcSeries r = r_from_moments(m);
    return Distribution(std::move(m), std::move(r), eta);
}

NcSeries moments_from_r(const NcSeries& r) {
    // The degree-d part of R(z(1+M),...) depends only on M below degree d,
    // so iterating the substitution from 0 stabilizes within order steps.
    NcSeries m(r.k(), r.order());
    for (int i = 0; i < r.order(); ++i) m = dilate_substitute(r, m);
    return m;
}

NcSeries r_from_moments(const NcSeries& m) {
    NcSeries r(m.k(), m.order());
    for (int d = 1; d <= m.order(); ++d) {
        // with R complete below degree d, the substitution reproduces all
        // degree-d contributions except the bare degree-d coefficient itself
        NcSeries s = dilate_substitute(r, m);
        for (const auto& [w, v] : m.coeffs()) {
            if (static_cast<int>(w.size()) == d) r.set(w, v - s.cf(w));
        }
        for (const auto& [w, v] : s.coeffs()) {
            if (static_cast<int>(w.size()) == d && m.cf(w) == 0) r.set(w, -v);
        }
    }
    return r;
}

NcSeries eta_from_moments(const NcSeries& m) {
    // eta = M (1+M)^{-1} = M + M g with g = inv_one_plus(M)
    return m + mul(m, inv_one_plus(m));
}

NcSeries moments_from_eta(const NcSeries& eta) {
    // (1 - eta) M = eta, so M = (1 + h) eta with h = (1 - eta)^{-1} - 1
    NcSeries h = inv_one_plus(scale(eta, Rat(-1)));
    return eta + mul(h, eta);
}

NcSeries eta_from_r(const Distribution& d) {
    NcSeries eta(d.k(), d.order());
    const NcSeries& r = d.rseries();
    for (int n = 1; n <= d.order(); ++n) {
        auto partitions = enumerate_nc(n);
        // pi << 1_n iff 1 and n share a block of pi
        std::vector<const NcPartition*> admissible;
        for (const auto& pi : partitions) {
            for (const auto& b : pi.blocks)
                if (b.front() == 1 && b.back() == n) {
                    admissible.push_back(&pi);
                    break;
                }
        }
        // iterate words of length n
        Word w(static_cast<std::size_t>(n), 1);
        while (true) {
            Rat total(0);
            for (const NcPartition* pi : admissible) total += cf_partition(w, *pi, r);
            eta.set(w, total);
            int pos = n - 1;
            while (pos >= 0 && w[static_cast<std::size_t>(pos)] == d.k()) {
                w[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++w[static_cast<std::size_t>(pos)];
        }
    }
    return eta;
}

namespace {

void check_pair(const Distribution& a, const Distribution& b) {
    if (a.k() != b.k() || a.order() != b.order())
        throw std::domain_error("distribution pair: mismatched k or order");
}

void check_power(const Rat& t) {
    if (t < 0) throw std::domain_error("convolution power: t < 0 rejected");
}

}  // namespace

Distribution boxplus(const Distribution& mu, const Distribution& nu) {
    check_pair(mu, nu);
    return Distribution::from_free_cumulants(mu.rseries() + nu.rseries());
}

Distribution boxplus_power(const Distribution& mu, const Rat& t) {
    check_power(t);
    return Distribution::from_free_cumulants(scale(mu.rseries(), t));
}

Distribution uplus(const Distribution& mu, const Distribution& nu) {
    check_pair(mu, nu);
    return Distribution::from_boolean_cumulants(mu.eseries() + nu.eseries());
}

Distribution uplus_power(const Distribution& mu, const Rat& t) {
    check_power(t);
    return Distribution::from_boolean_cumulants(scale(mu.eseries(), t));
}

Distribution bb(const Distribution& mu) {
    return Distribution::from_free_cumulants(mu.eseries());
}

Distribution bb_inverse(const Distribution& mu) {
    return Distribution::from_boolean_cumulants(mu.rseries());
}

Distribution bb_t(const Distribution& mu, const Rat& t) {
    check_power(t);
    return uplus_power(boxplus_power(mu, Rat(1) + t), Rat(1) / (Rat(1) + t));
}

Distribution bb_t_inverse(const Distribution& mu, const Rat& t) {
    check_power(t);
    return boxplus_power(uplus_power(mu, Rat(1) + t), Rat(1) / (Rat(1) + t));
}

NcSeries sandwich_series(const NcSeries& m) {
    NcSeries s(m.k(), m.order());
    for (int i = 1; i <= m.k(); ++i) {
        if (m.order() >= 2) s.set(Word{i, i}, Rat(1));
        for (const auto& [w, v] : m.coeffs()) {
            if (static_cast<int>(w.size()) + 2 > m.order()) continue;
            Word ext;
            ext.reserve(w.size() + 2);
            ext.push_back(i);
            ext.insert(ext.end(), w.begin(), w.end());
            ext.push_back(i);
            s.set(ext, s.cf(ext) + v);
        }
    }
    return s;
}

Distribution phi(const Distribution& nu) {
    return Distribution::from_boolean_cumulants(sandwich_series(nu.moments()));
}

Distribution delta(int k, int order) {
    return Distribution::from_moments(NcSeries(k, order));
}

Distribution point_mass(int order, const Rat& c) {
    NcSeries r(1, order);
    r.set(Word{1}, c);
    return Distribution::from_free_cumulants(r);
}

Distribution semicircular(int k, int order, const Rat& t) {
    if (t <= 0) throw std::domain_error("semicircular: variance must be positive");
    NcSeries r(k, order);
    if (order >= 2)
        for (int i = 1; i <= k; ++i) r.set(Word{i, i}, t);
    return Distribution::from_free_cumulants(r);
}

}  // namespace freeprob
