#include "freeprob/verify.hpp"

#include <stdexcept>

#include "freeprob/cauchy1d.hpp"
#include "freeprob/fock.hpp"
#include "freeprob/rand.hpp"
#include "freeprob/subord.hpp"

namespace freeprob {

namespace {

// All words over {1..k} of lengths 1..maxlen, in length-then-lex order.
std::vector<Word> all_words(int k, int maxlen) {
    std::vector<Word> out;
    for (int n = 1; n <= maxlen; ++n) {
        Word w(static_cast<std::size_t>(n), 1);
        while (true) {
            out.push_back(w);
            int pos = n - 1;
            while (pos >= 0 && w[static_cast<std::size_t>(pos)] == k) {
                w[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++w[static_cast<std::size_t>(pos)];
        }
    }
    return out;
}

std::string word_str(const Word& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

std::string series_diff(const NcSeries& a, const NcSeries& b) {
    for (const Word& w : all_words(a.k(), a.order()))
        if (a.cf(w) != b.cf(w))
            return "word " + word_str(w) + ": " + format_rat(a.cf(w)) + " vs " +
                   format_rat(b.cf(w));
    return "";
}

std::string dist_diff(const Distribution& a, const Distribution& b) {
    return series_diff(a.moments(), b.moments());
}

// Accumulates named checks across trials, keeping the first witness.
class Suite {
  public:
    void series_eq(const std::string& name, int trial, const NcSeries& a, const NcSeries& b) {
        record(name, trial, a == b, [&] { return series_diff(a, b); });
    }
    void dist_eq(const std::string& name, int trial, const Distribution& a,
                 const Distribution& b) {
        record(name, trial, a == b, [&] { return dist_diff(a, b); });
    }
    void expect(const std::string& name, int trial, bool ok, const std::string& detail = "") {
        record(name, trial, ok, [&] { return detail; });
    }

    std::vector<CheckResult> results() const { return results_; }

  private:
    template <typename WitnessFn>
    void record(const std::string& name, int trial, bool ok, WitnessFn witness) {
        CheckResult* r = nullptr;
        for (auto& c : results_)
            if (c.name == name) r = &c;
        if (!r) {
            results_.push_back({name, true, ""});
            r = &results_.back();
        }
        if (!ok && r->pass) {
            r->pass = false;
            std::string w = witness();
            r->witness = "trial " + std::to_string(trial) + (w.empty() ? "" : ": " + w);
        }
    }

    std::vector<CheckResult> results_;
};

NcSeries extend_order(const NcSeries& s, int order) {
    NcSeries out(s.k(), order);
    for (const auto& [w, v] : s.coeffs()) out.set(w, v);
    return out;
}

const std::vector<Rat>& t_probes() {
    static const std::vector<Rat> v{Rat(0), Rat(1, 2), Rat(1), Rat(2)};
    return v;
}

const std::vector<Rat>& p_probes() {
    static const std::vector<Rat> v{Rat(1), Rat(3, 2), Rat(2), Rat(3)};
    return v;
}

}  // namespace

std::vector<CheckResult> verify_identities(const VerifyOptions& opt) {
    Suite suite;
    RandomDistributions gen(opt.seed);
    const int k = opt.k, order = opt.order;
    const Distribution dd = delta(k, order);

    for (int trial = 0; trial < opt.trials; ++trial) {
        Distribution mu = gen.random_distribution(k, order);
        Distribution mu2 = gen.random_distribution(k, order);
        Distribution nu = gen.random_distribution(k, order);

        suite.dist_eq("boxplus-linearity", trial, boxright(boxplus(mu, mu2), nu),
                      boxplus(boxright(mu, nu), boxright(mu2, nu)));
        suite.dist_eq("mu-boxright-mu-is-bb", trial, boxright(mu, mu), bb(mu));
        suite.dist_eq("bb-shift", trial, bb(boxright(mu, nu)), boxright(mu, boxplus(mu, nu)));
        suite.series_eq("eta-equals-shifted-r", trial, boxright(mu, nu).eseries(),
                        boxright(mu, boxplus(mu, nu)).rseries());
        suite.series_eq("eta-splitting", trial,
                        boxright(mu, nu).eseries() + boxright(nu, mu).eseries(),
                        boxplus(mu, nu).eseries());
        suite.dist_eq("delta-right-absorption", trial, boxright(mu, dd), mu);
        suite.dist_eq("delta-left-absorption", trial, boxright(dd, mu), dd);

        for (const Rat& t : t_probes()) {
            suite.dist_eq("boxplus-power-linearity", trial,
                          boxright(boxplus_power(mu, t), nu),
                          boxplus_power(boxright(mu, nu), t));
            suite.dist_eq("bb-t-evolution", trial, bb_t(boxright(mu, nu), t),
                          boxright(mu, boxplus(boxplus_power(mu, t), nu)));
            for (const Rat& s : t_probes())
                suite.dist_eq("power-formula", trial,
                              boxright(boxplus_power(mu, s), boxplus_power(mu, t)),
                              boxplus_power(bb_t(mu, t), s));
            Distribution phi_shift =
                t == 0 ? phi(nu) : phi(boxplus(nu, semicircular(k, order, t)));
            suite.dist_eq("brownian-intertwining", trial, phi_shift, bb_t(phi(nu), t));
        }

        for (const Rat& p : p_probes()) {
            Distribution sig = subordination_of_power(nu, p);
            suite.dist_eq("power-subordination-bb", trial, sig,
                          boxplus_power(bb(nu), p - 1));
            suite.dist_eq("power-subordination-uplus", trial, sig,
                          uplus_power(boxplus_power(nu, p), (p - 1) / p));
        }

        Distribution gb = gamma_boxright(nu);
        suite.dist_eq("gamma-boxright-semicircular", trial, gb,
                      boxright(semicircular(k, order, Rat(1)), nu));
        suite.dist_eq("gamma-boxright-bb-phi", trial, gb, bb(phi(nu)));
    }
    return suite.results();
}

std::vector<CheckResult> verify_fock(const VerifyOptions& opt) {
    Suite suite;
    RandomDistributions gen(opt.seed);
    const int k = opt.k, order = opt.order;
    const int wordcap = order + 1;  // one past the cumulant truncation
    const int depth = opt.depth > 0 ? opt.depth : wordcap;
    if (depth < wordcap)
        throw std::domain_error("verify_fock: depth must be at least order + 1");

    for (int trial = 0; trial < opt.trials; ++trial) {
        // Cumulants live at the base order; the model then realizes the
        // distributions whose higher cumulants vanish, so the series side
        // is compared after zero-padding to the word cap.
        Distribution mu = Distribution::from_free_cumulants(
            extend_order(gen.random_cumulants(k, order), wordcap));
        Distribution nu = Distribution::from_free_cumulants(
            extend_order(gen.random_cumulants(k, order), wordcap));
        Distribution sig = boxright(mu, nu);

        FockModel m = build_model(mu, nu, depth);
        FockModel m2 = build_model(mu, nu, depth + 1);

        for (const Word& w : all_words(k, wordcap)) {
            suite.expect("fock-a-matches-mu", trial,
                         vacuum_moment(m.a, w) == mu.moment(w), "word " + word_str(w));
            suite.expect("fock-b-matches-nu", trial,
                         vacuum_moment(m.b, w) == nu.moment(w), "word " + word_str(w));
            suite.expect("fock-c-matches-boxright", trial,
                         vacuum_moment(m.c, w) == sig.moment(w), "word " + word_str(w));
            suite.expect("fock-depth-stability", trial,
                         vacuum_moment(m.c, w) == vacuum_moment(m2.c, w),
                         "word " + word_str(w));
        }

        std::vector<FockOperator> probes{m.a[0], m.b[0], m.c[0], m.t};
        auto bad = check_vacuum_projection(m.p_vacuum, probes);
        suite.expect("fock-vacuum-projection", trial, !bad.has_value(),
                     bad ? "probe " + std::to_string(*bad) : "");
    }
    return suite.results();
}

std::vector<CheckResult> verify_onevar(const VerifyOptions& opt) {
    Suite suite;
    RandomDistributions gen(opt.seed);
    const int order = opt.order;

    {
        // omega(z) = z - 1 for the point mass at 1 subordinated to itself
        Distribution pm = point_mass(order, Rat(1));
        FSeries f = f_from_eta(boxright(pm, pm));
        bool ok = f.c[0] == -1;
        for (std::size_t j = 1; j < f.c.size(); ++j) ok = ok && f.c[j] == 0;
        suite.expect("point-mass-omega", 0, ok);
    }

    for (int trial = 0; trial < opt.trials; ++trial) {
        Distribution mu = gen.random_distribution(1, order);
        Distribution nu = gen.random_distribution(1, order);

        suite.series_eq("reversion-r-agrees", trial,
                        r_from_k(k_transform(cauchy_from_moments(mu))), mu.rseries());
        suite.expect("f-reciprocal-vs-eta", trial,
                     reciprocal(cauchy_from_moments(mu)) == f_from_eta(mu));
        suite.expect("cauchy-subordination", trial, check_subordination(mu, nu));
        suite.expect("f-sum", trial, check_f_sum(mu, nu));
        for (const Rat& p : p_probes())
            suite.expect("power-subordination-1d", trial, check_power_subordination(nu, p),
                         "p = " + format_rat(p));
    }
    return suite.results();
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace freeprob
