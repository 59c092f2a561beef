#pragma once

#include <map>
#include <vector>

#include "freeprob/ncpart.hpp"
#include "freeprob/rational.hpp"

namespace freeprob {

/// Index of a monomial z_{i1}...z_{in}: a nonempty sequence of letters
/// in {1..k}.
using Word = std::vector<int>;

/// Words ordered by length first, then lexicographically. This is the
/// canonical ordering used for storage and serialization.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// A truncated formal power series in k noncommuting indeterminates with
/// vanishing constant term: a finitely supported map Word -> Rat over word
/// lengths 1..order. Zero coefficients are never stored.
class NcSeries {
  public:
    NcSeries(int k, int order);

    int k() const { return k_; }
    int order() const { return order_; }

    /// Coefficient of the given word; throws if the word is invalid or
    /// longer than the truncation order (beyond-truncation is not zero).
    Rat cf(const Word& w) const;

    /// Sets a coefficient (erasing it when zero).
    void set(const Word& w, Rat value);

    const std::map<Word, Rat, WordLess>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool operator==(const NcSeries&) const = default;

    NcSeries& operator+=(const NcSeries& g);
    friend NcSeries operator+(NcSeries f, const NcSeries& g) { return f += g; }
    friend NcSeries operator-(const NcSeries& f, const NcSeries& g);

  private:
    int k_;
    int order_;
    std::map<Word, Rat, WordLess> coeffs_;

    void check_word(const Word& w) const;
    void check_compatible(const NcSeries& g) const;
    friend NcSeries mul(const NcSeries&, const NcSeries&);
    friend NcSeries scale(const NcSeries&, const Rat&);
    friend NcSeries dilate_substitute(const NcSeries&, const NcSeries&);
};

NcSeries scale(const NcSeries& f, const Rat& t);

/// Noncommutative product truncated at the common order.
NcSeries mul(const NcSeries& f, const NcSeries& g);

/// The series g with (1+f)(1+g) = 1 up to the truncation order.
NcSeries inv_one_plus(const NcSeries& f);

/// f(z_1(1+g), ..., z_k(1+g)) truncated: every letter z_j of every
/// monomial of f is replaced by z_j(1+g).
NcSeries dilate_substitute(const NcSeries& f, const NcSeries& g);

/// w restricted to the positions in block (ascending), per-block index
/// extraction used by generalized coefficients.
Word restrict_word(const Word& w, const std::vector<int>& block);

/// Generalized coefficient: product over blocks V of pi of cf(w|V, f).
Rat cf_partition(const Word& w, const NcPartition& pi, const NcSeries& f);

/// Mixed generalized coefficient: product over blocks V of pi of
/// cf(w|V, f_{c(V)}).
Rat cf_mixed(const Word& w, const NcPartition& pi, const Colouring& c,
             const NcSeries& f1, const NcSeries& f2);

}  // namespace freeprob
