#include "freeprob/fock.hpp"

#include <stdexcept>

namespace freeprob {

FockBasis::FockBasis(int k, int depth) : k_(k), depth_(depth) {
    if (k < 1) throw std::domain_error("FockBasis: k < 1");
    if (depth < 1) throw std::domain_error("FockBasis: depth < 1");
    offsets_.resize(static_cast<std::size_t>(depth) + 2);
    std::int64_t total = 0, level = 1;
    for (int d = 0; d <= depth; ++d) {
        offsets_[static_cast<std::size_t>(d)] = total;
        total += level;
        level *= 2 * k;
    }
    offsets_[static_cast<std::size_t>(depth) + 1] = total;
    size_ = total;
}

int FockBasis::letter(int i, bool primed) const {
    if (i < 1 || i > k_) throw std::domain_error("FockBasis: variable index out of range");
    return primed ? i - 1 : k_ + i - 1;
}

std::int64_t FockBasis::index(const std::vector<int>& letters) const {
    const int d = static_cast<int>(letters.size());
    if (d > depth_) throw std::domain_error("FockBasis: word too long");
    std::int64_t idx = 0;
    for (int l : letters) {
        if (l < 0 || l >= 2 * k_) throw std::domain_error("FockBasis: bad letter");
        idx = idx * (2 * k_) + l;
    }
    return offsets_[static_cast<std::size_t>(d)] + idx;
}

FockOperator FockOperator::identity(const FockBasis& basis) {
    FockOperator id(basis);
    for (std::int64_t i = 0; i < basis.size(); ++i) id.rows_[i][i] = 1;
    return id;
}

void FockOperator::set(std::int64_t row, std::int64_t col, Rat value) {
    if (row < 0 || row >= basis_.size() || col < 0 || col >= basis_.size())
        throw std::domain_error("FockOperator: index out of range");
    if (value == 0) {
        auto it = rows_.find(row);
        if (it != rows_.end()) {
            it->second.erase(col);
            if (it->second.empty()) rows_.erase(it);
        }
    } else {
        rows_[row][col] = std::move(value);
    }
}

Rat FockOperator::at(std::int64_t row, std::int64_t col) const {
    auto it = rows_.find(row);
    if (it == rows_.end()) return Rat(0);
    auto jt = it->second.find(col);
    return jt == it->second.end() ? Rat(0) : jt->second;
}

FockOperator FockOperator::transpose() const {
    FockOperator out(basis_);
    for (const auto& [r, cols] : rows_)
        for (const auto& [c, v] : cols) out.rows_[c][r] = v;
    return out;
}

std::map<std::int64_t, Rat> FockOperator::apply(const std::map<std::int64_t, Rat>& v) const {
    std::map<std::int64_t, Rat> out;
    for (const auto& [r, cols] : rows_) {
        Rat acc(0);
        for (const auto& [c, val] : cols) {
            auto it = v.find(c);
            if (it != v.end()) acc += val * it->second;
        }
        if (acc != 0) out[r] = std::move(acc);
    }
    return out;
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    FockOperator out(a.basis_);
    for (const auto& [r, acols] : a.rows_) {
        std::map<std::int64_t, Rat> row;
        for (const auto& [m, av] : acols) {
            auto it = b.rows_.find(m);
            if (it == b.rows_.end()) continue;
            for (const auto& [c, bv] : it->second) row[c] += av * bv;
        }
        for (auto it = row.begin(); it != row.end();)
            it = (it->second == 0) ? row.erase(it) : std::next(it);
        if (!row.empty()) out.rows_[r] = std::move(row);
    }
    return out;
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
    FockOperator out = a;
    for (const auto& [r, cols] : b.rows_)
        for (const auto& [c, v] : cols) {
            Rat s = out.at(r, c) + v;
            out.set(r, c, std::move(s));
        }
    return out;
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
    return a + b.scaled(Rat(-1));
}

FockOperator FockOperator::scaled(const Rat& t) const {
    FockOperator out(basis_);
    if (t == 0) return out;
    for (const auto& [r, cols] : rows_)
        for (const auto& [c, v] : cols) out.rows_[r][c] = v * t;
    return out;
}

FockOperator creation(const FockBasis& basis, int i, bool primed) {
    const int l = basis.letter(i, primed);
    FockOperator op(basis);
    // enumerate all words of length < depth by walking indices per level
    std::vector<int> word;
    // iterative enumeration: words of each length d < depth
    for (int d = 0; d < basis.depth(); ++d) {
        std::vector<int> w(static_cast<std::size_t>(d), 0);
        while (true) {
            std::vector<int> target;
            target.reserve(w.size() + 1);
            target.push_back(l);
            target.insert(target.end(), w.begin(), w.end());
            op.set(basis.index(target), basis.index(w), Rat(1));
            // increment w in base 2k
            int pos = d - 1;
            while (pos >= 0 && w[static_cast<std::size_t>(pos)] == 2 * basis.k() - 1) {
                w[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++w[static_cast<std::size_t>(pos)];
        }
    }
    return op;
}

FockOperator vacuum_projection(const FockBasis& basis) {
    FockOperator p(basis);
    p.set(0, 0, Rat(1));
    return p;
}

FockModel build_model(const Distribution& mu, const Distribution& nu, int depth) {
    if (mu.k() != nu.k() || mu.order() != nu.order())
        throw std::domain_error("build_model: mismatched k or order");
    FockBasis basis(mu.k(), depth);
    const int k = mu.k();

    std::vector<FockOperator> cr_p, cr_pp;
    for (int i = 1; i <= k; ++i) {
        cr_p.push_back(creation(basis, i, true));
        cr_pp.push_back(creation(basis, i, false));
    }

    FockOperator t = FockOperator::identity(basis);
    auto add_terms = [&](const NcSeries& r, const std::vector<FockOperator>& cr) {
        for (const auto& [w, coeff] : r.coeffs()) {
            // L_{i_n} ... L_{i_1}, rightmost factor acting first
            FockOperator mono = cr[static_cast<std::size_t>(w.front() - 1)];
            for (std::size_t j = 1; j < w.size(); ++j)
                mono = cr[static_cast<std::size_t>(w[j] - 1)] * mono;
            t = t + mono.scaled(coeff);
        }
    };
    add_terms(mu.rseries(), cr_p);
    add_terms(nu.rseries(), cr_pp);

    FockOperator p = vacuum_projection(basis);
    FockOperator q = FockOperator::identity(basis) - p;  // 1 - P

    std::vector<FockOperator> a, b, c;
    for (int i = 0; i < k; ++i) {
        a.push_back(cr_p[static_cast<std::size_t>(i)].transpose() * t);
        b.push_back(cr_pp[static_cast<std::size_t>(i)].transpose() * t);
        c.push_back(a.back() + q * b.back() * q);
    }
    return FockModel{std::move(basis), std::move(t), std::move(a), std::move(b), std::move(c),
                     std::move(p)};
}

Rat vacuum_moment(const std::vector<FockOperator>& ops, const Word& word) {
    if (word.empty()) throw std::domain_error("vacuum_moment: empty word");
    std::map<std::int64_t, Rat> v{{0, Rat(1)}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = *it;
        if (i < 1 || i > static_cast<int>(ops.size()))
            throw std::domain_error("vacuum_moment: variable index out of range");
        v = ops[static_cast<std::size_t>(i - 1)].apply(v);
    }
    auto it = v.find(0);
    return it == v.end() ? Rat(0) : it->second;
}

std::optional<std::size_t> check_vacuum_projection(const FockOperator& p,
                                                   const std::vector<FockOperator>& probes) {
    if (!(p * p == p) || p == FockOperator(p.basis())) return 0;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const FockOperator& x = probes[i];
        Rat phi = x.vacuum_entry();
        if (!(p * x * p == p.scaled(phi))) return i;
        if ((p * x).vacuum_entry() != phi || (x * p).vacuum_entry() != phi) return i;
    }
    for (std::size_t i = 0; i < probes.size(); ++i)
        for (std::size_t j = 0; j < probes.size(); ++j) {
            Rat lhs = (probes[i] * p * probes[j]).vacuum_entry();
            if (lhs != probes[i].vacuum_entry() * probes[j].vacuum_entry()) return i;
        }
    return std::nullopt;
}

}  // namespace freeprob
