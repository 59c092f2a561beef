#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "freeprob/dist.hpp"

namespace freeprob {

/// Truncated full Fock space over C^{2k}: the basis consists of all tensor
/// words of length 0..depth over the 2k-letter alphabet
/// {e_1', ..., e_k', e_1'', ..., e_k''}, indexed by length then
/// lexicographically. Index 0 is the vacuum vector.
class FockBasis {
  public:
    FockBasis(int k, int depth);

    int k() const { return k_; }
    int depth() const { return depth_; }
    std::int64_t size() const { return size_; }

    /// Letter encoding: primed e_i' -> i-1, double-primed e_i'' -> k+i-1.
    int letter(int i, bool primed) const;

    /// Index of a basis tensor word (letters most-significant first).
    std::int64_t index(const std::vector<int>& letters) const;

  private:
    int k_;
    int depth_;
    std::int64_t size_;
    std::vector<std::int64_t> offsets_;  // offsets_[d] = index of first length-d word
};

/// A sparse exact-rational operator on a truncated Fock space. Adjoints are
/// plain transposes since every entry is a real rational.
class FockOperator {
  public:
    explicit FockOperator(const FockBasis& basis) : basis_(basis) {}

    static FockOperator identity(const FockBasis& basis);

    const FockBasis& basis() const { return basis_; }

    void set(std::int64_t row, std::int64_t col, Rat value);
    Rat at(std::int64_t row, std::int64_t col) const;

    FockOperator transpose() const;

    /// Matrix-vector product against a sparse column vector.
    std::map<std::int64_t, Rat> apply(const std::map<std::int64_t, Rat>& v) const;

    friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
    friend FockOperator operator-(const FockOperator& a, const FockOperator& b);
    FockOperator scaled(const Rat& t) const;

    bool operator==(const FockOperator& o) const { return rows_ == o.rows_; }

    /// The (vacuum, vacuum) entry, i.e. the vacuum-state of the operator.
    Rat vacuum_entry() const { return at(0, 0); }

  private:
    FockBasis basis_;
    std::map<std::int64_t, std::map<std::int64_t, Rat>> rows_;
};

/// Left creation with e_i' (primed) or e_i'' (double-primed): prepends the
/// letter; words already at full depth are mapped to 0 (truncation).
FockOperator creation(const FockBasis& basis, int i, bool primed);

/// Rank-one projection onto the vacuum.
FockOperator vacuum_projection(const FockBasis& basis);

/// The operator tuple of the subordination model built from the free
/// cumulants of mu (primed letters) and nu (double-primed letters):
///   T = 1 + sum alpha_w L'_{i_n}...L'_{i_1} + sum beta_w L''_{i_n}...L''_{i_1},
///   A_i = (L_i')* T,  B_i = (L_i'')* T,  C_i = A_i + (1-P) B_i (1-P).
struct FockModel {
    FockBasis basis;
    FockOperator t;
    std::vector<FockOperator> a, b, c;  // indexed 0..k-1 for variables 1..k
    FockOperator p_vacuum;
};

FockModel build_model(const Distribution& mu, const Distribution& nu, int depth);

/// <ops[i1] ... ops[in] Omega, Omega>, rightmost factor acting first.
Rat vacuum_moment(const std::vector<FockOperator>& ops, const Word& word);

/// Checks the vacuum-projection axioms against the probes: P^2 = P != 0,
/// P X P = phi(X) P, phi(PX) = phi(X) = phi(XP), and the factorization
/// phi(X1 P X2) = phi(X1) phi(X2) over probe pairs. Returns the index of
/// the first failing probe, or nullopt on success.
std::optional<std::size_t> check_vacuum_projection(const FockOperator& p,
                                                   const std::vector<FockOperator>& probes);

}  // namespace freeprob
