#pragma once

#include "freeprob/dist.hpp"

namespace freeprob {

/// Truncated Cauchy transform at infinity, G(z) = sum_{j>=1} g_j z^{-j}
/// with coeffs[j-1] = g_j, kept to j = order+1. Cauchy transforms of
/// distributions have g_1 = 1, which reversion and reciprocal require.
struct LaurentTail {
    int order;
    std::vector<Rat> coeffs;  // size order+1

    bool operator==(const LaurentTail&) const = default;
};

/// Reciprocal Cauchy transform, F(z) = z + c_0 + sum_{j>=1} c_j z^{-j}
/// with c[j] the coefficient of z^{-j}, kept to j = order-1.
struct FSeries {
    int order;
    std::vector<Rat> c;  // size order

    bool operator==(const FSeries&) const = default;
};

/// Compositional inverse of G, K(z) = 1/z + sum_{j>=0} a_j z^j with
/// a[j] kept to j = order-1.
struct KSeries {
    int order;
    std::vector<Rat> a;  // size order

    bool operator==(const KSeries&) const = default;
};

/// G(z) = (1 + M(1/z))/z, i.e. g_{j+1} = m_j with m_0 = 1. Requires k = 1.
LaurentTail cauchy_from_moments(const Distribution& d);

/// F = 1/G, requires g_1 = 1.
FSeries reciprocal(const LaurentTail& g);

/// Independent route to F: F(z) = z(1 - eta(1/z)), so c_{n-1} = -eta_n.
/// Requires k = 1.
FSeries f_from_eta(const Distribution& d);

/// K = G^{<-1>}: solves G(K(z)) = z degree by degree. Requires g_1 = 1.
KSeries k_transform(const LaurentTail& g);

/// R(z) = z(K(z) - 1/z) as a one-variable series: word 1^n gets a_{n-1}.
NcSeries r_from_k(const KSeries& k);

/// G(F(z)) as a truncated Laurent tail, via F^{-j} = z^{-j}(1 + lower)^{-j}.
LaurentTail compose(const LaurentTail& g, const FSeries& f);

/// G_{mu boxplus nu} = G_nu o F_{mu |> nu}, coefficientwise to the
/// truncation order. Requires k = 1.
bool check_subordination(const Distribution& mu, const Distribution& nu);

/// For sigma the subordination distribution of nu^{boxplus p} with respect
/// to nu, verifies (a) F_sigma = z/p + (1 - 1/p) F_{nu^{boxplus p}},
/// (b) eta_sigma = ((p-1)/p) eta_{nu^{boxplus p}}, and
/// (c) G_{nu^{boxplus p}} = G_nu o F_sigma. Requires k = 1, p >= 1.
bool check_power_subordination(const Distribution& nu, const Rat& p);

/// F_{mu |> nu} + F_{nu |> mu} = z + F_{mu boxplus nu}. Requires k = 1.
bool check_f_sum(const Distribution& mu, const Distribution& nu);

}  // namespace freeprob
