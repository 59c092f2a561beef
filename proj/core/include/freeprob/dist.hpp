#pragma once

#include "freeprob/ncseries.hpp"

namespace freeprob {

/// A distribution in D_alg(k) truncated at order N. Moments are the stored
/// ground truth; the R-transform (free cumulants) and eta-series (Boolean
/// cumulants) are derived once at construction and kept consistent:
///   eta = M (1+M)^{-1}        and        R(z_1(1+M), ..., z_k(1+M)) = M.
class Distribution {
  public:
    static Distribution from_moments(NcSeries moments);
    static Distribution from_free_cumulants(const NcSeries& r);
    static Distribution from_boolean_cumulants(const NcSeries& eta);

    int k() const { return moments_.k(); }
    int order() const { return moments_.order(); }

    const NcSeries& moments() const { return moments_; }
    const NcSeries& rseries() const { return rseries_; }
    const NcSeries& eseries() const { return eseries_; }

    Rat moment(const Word& w) const { return moments_.cf(w); }

    bool operator==(const Distribution& o) const { return moments_ == o.moments_; }

  private:
    Distribution(NcSeries m, NcSeries r, NcSeries e);
    NcSeries moments_, rseries_, eseries_;
};

/// Moment series from an R-transform by solving R(z(1+M),...) = M
/// degreewise (fixed point of the dilation substitution).
NcSeries moments_from_r(const NcSeries& r);

/// R-transform from a moment series, solving the same functional equation
/// degree by degree in the other direction.
NcSeries r_from_moments(const NcSeries& m);

/// eta = M (1+M)^{-1}.
NcSeries eta_from_moments(const NcSeries& m);

/// M = (1 - eta)^{-1} eta.
NcSeries moments_from_eta(const NcSeries& eta);

/// Independent path for the Boolean cumulants: per word, the sum over
/// pi << 1_n of the generalized coefficients of the R-transform.
NcSeries eta_from_r(const Distribution& d);

// Convolutions and transform family. Powers take exact rationals t >= 0;
// t = 0 yields the Dirac distribution delta.
Distribution boxplus(const Distribution& mu, const Distribution& nu);
Distribution boxplus_power(const Distribution& mu, const Rat& t);
Distribution uplus(const Distribution& mu, const Distribution& nu);
Distribution uplus_power(const Distribution& mu, const Rat& t);

/// Boolean Bercovici-Pata bijection: R of the result is eta of the input.
Distribution bb(const Distribution& mu);
Distribution bb_inverse(const Distribution& mu);
/// bb_t = (.^{boxplus (1+t)})^{uplus 1/(1+t)}; bb_1 = bb.
Distribution bb_t(const Distribution& mu, const Rat& t);
Distribution bb_t_inverse(const Distribution& mu, const Rat& t);

/// sum_i z_i (1 + m) z_i truncated at the order of m.
NcSeries sandwich_series(const NcSeries& m);

/// Phi: eta of the result is sum_i z_i (1 + M_nu) z_i.
Distribution phi(const Distribution& nu);
/// Two-argument Phi[rho, psi] = bb_inverse(rho boxright psi).
Distribution phi2(const Distribution& rho, const Distribution& psi);

// Stock distributions.
Distribution delta(int k, int order);
Distribution point_mass(int order, const Rat& c);  // k = 1, R = c z
Distribution semicircular(int k, int order, const Rat& t);  // R = t(z_1^2+...+z_k^2)

}  // namespace freeprob
