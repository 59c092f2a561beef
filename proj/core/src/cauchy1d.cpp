#include "freeprob/cauchy1d.hpp"

#include "freeprob/subord.hpp"

#include <stdexcept>

namespace freeprob {

namespace {

// One-variable truncated power series as coefficient vectors indexed by
// exponent; every helper truncates at the length of its output.

using Poly = std::vector<Rat>;

Poly poly_mul(const Poly& a, const Poly& b, std::size_t len) {
    Poly out(len, Rat(0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// v with (1+u)(1+v) = 1, u and v having zero constant term.
Poly poly_inv_one_plus(const Poly& u, std::size_t len) {
    Poly v(len, Rat(0));
    for (std::size_t d = 1; d < len; ++d) {
        Rat acc = d < u.size() ? -u[d] : Rat(0);
        for (std::size_t j = 1; j < d; ++j)
            if (j < u.size()) acc -= u[j] * v[d - j];
        v[d] = acc;
    }
    return v;
}

// sum_{j>=1} g_j x^j (1+u)^{-j} truncated at degree len-1, the common
// expansion behind composition and reversion (x stands for 1/z or w).
Poly tail_compose(const std::vector<Rat>& g, const Poly& u, std::size_t len) {
    Poly inv(len, Rat(0));
    inv[0] = 1;
    Poly iv = poly_inv_one_plus(u, len);
    for (std::size_t j = 1; j < len; ++j) inv[j] = iv[j];

    Poly out(len, Rat(0));
    Poly powj(len, Rat(0));
    powj[0] = 1;  // inv^0
    for (std::size_t j = 1; j <= g.size() && j < len; ++j) {
        powj = poly_mul(powj, inv, len);
        const Rat& gj = g[j - 1];
        if (gj == 0) continue;
        for (std::size_t m = 0; m + j < len; ++m) out[m + j] += gj * powj[m];
    }
    return out;
}

Word ones(int n) { return Word(static_cast<std::size_t>(n), 1); }

void require_k1(const Distribution& d, const char* who) {
    if (d.k() != 1) throw std::domain_error(std::string(who) + ": k = 1 required");
}

}  // namespace

LaurentTail cauchy_from_moments(const Distribution& d) {
    require_k1(d, "cauchy_from_moments");
    const int n = d.order();
    LaurentTail g{n, std::vector<Rat>(static_cast<std::size_t>(n) + 1, Rat(0))};
    g.coeffs[0] = 1;
    for (int j = 1; j <= n; ++j) g.coeffs[static_cast<std::size_t>(j)] = d.moment(ones(j));
    return g;
}

FSeries reciprocal(const LaurentTail& g) {
    if (g.coeffs.empty() || g.coeffs[0] != 1)
        throw std::domain_error("reciprocal: g_1 = 1 required");
    const std::size_t n = static_cast<std::size_t>(g.order);
    // G = x (1 + u(x)), x = 1/z, so F = z (1 + u)^{-1}.
    Poly u(n + 1, Rat(0));
    for (std::size_t m = 1; m <= n && m < g.coeffs.size(); ++m) u[m] = g.coeffs[m];
    Poly v = poly_inv_one_plus(u, n + 1);
    FSeries f{g.order, std::vector<Rat>(n, Rat(0))};
    for (std::size_t j = 1; j <= n; ++j) f.c[j - 1] = v[j];
    return f;
}

FSeries f_from_eta(const Distribution& d) {
    require_k1(d, "f_from_eta");
    const int n = d.order();
    FSeries f{n, std::vector<Rat>(static_cast<std::size_t>(n), Rat(0))};
    for (int j = 1; j <= n; ++j) f.c[static_cast<std::size_t>(j - 1)] = -d.eseries().cf(ones(j));
    return f;
}

KSeries k_transform(const LaurentTail& g) {
    if (g.coeffs.empty() || g.coeffs[0] != 1)
        throw std::domain_error("k_transform: g_1 = 1 required");
    const std::size_t n = static_cast<std::size_t>(g.order);
    KSeries k{g.order, std::vector<Rat>(n, Rat(0))};
    // G(K(w)) = sum_j g_j w^j (1+s)^{-j} with s(w) = sum a_{m-1} w^m must
    // equal w; the degree-d residual is linear in a_{d-2} with factor -1.
    for (std::size_t d = 2; d <= n + 1; ++d) {
        Poly s(d + 1, Rat(0));
        for (std::size_t m = 1; m < d - 1 && m <= n; ++m) s[m] = k.a[m - 1];
        Poly t = tail_compose(g.coeffs, s, d + 1);
        k.a[d - 2] = t[d];
    }
    return k;
}

NcSeries r_from_k(const KSeries& k) {
    NcSeries r(1, k.order);
    for (int j = 0; j < k.order; ++j) r.set(ones(j + 1), k.a[static_cast<std::size_t>(j)]);
    return r;
}

LaurentTail compose(const LaurentTail& g, const FSeries& f) {
    if (g.order != f.order) throw std::domain_error("compose: order mismatch");
    const std::size_t n = static_cast<std::size_t>(g.order);
    // F = z (1 + u(x)) with u_m = c_{m-1}, x = 1/z.
    Poly u(n + 1, Rat(0));
    for (std::size_t m = 1; m <= n && m - 1 < f.c.size(); ++m) u[m] = f.c[m - 1];
    Poly t = tail_compose(g.coeffs, u, n + 2);
    LaurentTail out{g.order, std::vector<Rat>(n + 1, Rat(0))};
    for (std::size_t j = 1; j <= n + 1; ++j) out.coeffs[j - 1] = t[j];
    return out;
}

bool check_subordination(const Distribution& mu, const Distribution& nu) {
    require_k1(mu, "check_subordination");
    require_k1(nu, "check_subordination");
    Distribution sigma = boxright(mu, nu);
    LaurentTail lhs = cauchy_from_moments(boxplus(mu, nu));
    LaurentTail rhs = compose(cauchy_from_moments(nu), f_from_eta(sigma));
    return lhs == rhs;
}

bool check_power_subordination(const Distribution& nu, const Rat& p) {
    require_k1(nu, "check_power_subordination");
    if (p < 1) throw std::domain_error("check_power_subordination: p >= 1 required");
    Distribution sigma = subordination_of_power(nu, p);
    Distribution nup = boxplus_power(nu, p);

    FSeries fs = f_from_eta(sigma);
    FSeries fp = f_from_eta(nup);
    const Rat w = 1 - 1 / p;
    for (std::size_t j = 0; j < fs.c.size(); ++j)
        if (fs.c[j] != w * fp.c[j]) return false;

    if (sigma.eseries() != scale(nup.eseries(), (p - 1) / p)) return false;

    return cauchy_from_moments(nup) == compose(cauchy_from_moments(nu), fs);
}

bool check_f_sum(const Distribution& mu, const Distribution& nu) {
    require_k1(mu, "check_f_sum");
    require_k1(nu, "check_f_sum");
    FSeries f1 = f_from_eta(boxright(mu, nu));
    FSeries f2 = f_from_eta(boxright(nu, mu));
    FSeries fsum = f_from_eta(boxplus(mu, nu));
    for (std::size_t j = 0; j < fsum.c.size(); ++j)
        if (f1.c[j] + f2.c[j] != fsum.c[j]) return false;
    return true;
}

}  // namespace freeprob
