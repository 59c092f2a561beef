#include "freeprob/ncseries.hpp"

#include <stdexcept>

namespace freeprob {

NcSeries::NcSeries(int k, int order) : k_(k), order_(order) {
    if (k < 1) throw std::domain_error("NcSeries: k < 1");
    if (order < 1) throw std::domain_error("NcSeries: order < 1");
}

void NcSeries::check_word(const Word& w) const {
    if (w.empty()) throw std::domain_error("NcSeries: empty word");
    if (static_cast<int>(w.size()) > order_)
        throw std::domain_error("NcSeries: word beyond truncation order");
    for (int letter : w)
        if (letter < 1 || letter > k_) throw std::domain_error("NcSeries: letter out of range");
}

void NcSeries::check_compatible(const NcSeries& g) const {
    if (k_ != g.k_ || order_ != g.order_)
        throw std::domain_error("NcSeries: mismatched k or order");
}

Rat NcSeries::cf(const Word& w) const {
    check_word(w);
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void NcSeries::set(const Word& w, Rat value) {
    check_word(w);
    if (value == 0)
        coeffs_.erase(w);
    else
        coeffs_[w] = std::move(value);
}

NcSeries& NcSeries::operator+=(const NcSeries& g) {
    check_compatible(g);
    for (const auto& [w, v] : g.coeffs_) {
        auto it = coeffs_.find(w);
        if (it == coeffs_.end()) {
            coeffs_.emplace(w, v);
        } else {
            it->second += v;
            if (it->second == 0) coeffs_.erase(it);
        }
    }
    return *this;
}

NcSeries operator-(const NcSeries& f, const NcSeries& g) {
    NcSeries h = f;
    return h += scale(g, Rat(-1));
}

NcSeries scale(const NcSeries& f, const Rat& t) {
    NcSeries out(f.k_, f.order_);
    if (t == 0) return out;
    for (const auto& [w, v] : f.coeffs_) out.coeffs_.emplace(w, v * t);
    return out;
}

NcSeries mul(const NcSeries& f, const NcSeries& g) {
    f.check_compatible(g);
    NcSeries out(f.k_, f.order_);
    for (const auto& [u, a] : f.coeffs_) {
        for (const auto& [v, b] : g.coeffs_) {
            if (static_cast<int>(u.size() + v.size()) > f.order_) continue;
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            auto it = out.coeffs_.find(w);
            if (it == out.coeffs_.end()) {
                out.coeffs_.emplace(std::move(w), a * b);
            } else {
                it->second += a * b;
                if (it->second == 0) out.coeffs_.erase(it);
            }
        }
    }
    return out;
}

NcSeries inv_one_plus(const NcSeries& f) {
    // g = -f + f^2 - f^3 + ...; f has minimum degree 1, so the sum is finite
    NcSeries g(f.k(), f.order());
    NcSeries power = f;
    int sign = -1;
    for (int i = 1; i <= f.order() && !power.is_zero(); ++i) {
        g += scale(power, Rat(sign));
        power = mul(power, f);
        sign = -sign;
    }
    return g;
}

NcSeries dilate_substitute(const NcSeries& f, const NcSeries& g) {
    f.check_compatible(g);
    NcSeries out(f.k_, f.order_);
    for (const auto& [mono, coeff] : f.coeffs_) {
        // expand z_{j1}(1+g) ... z_{jm}(1+g) keeping words of length <= order
        std::map<Word, Rat, WordLess> partial;
        partial.emplace(Word{}, Rat(1));
        for (int letter : mono) {
            std::map<Word, Rat, WordLess> next;
            for (const auto& [w, c] : partial) {
                if (static_cast<int>(w.size()) + 1 > f.order_) continue;
                Word base = w;
                base.push_back(letter);
                next[base] += c;
                for (const auto& [u, d] : g.coeffs_) {
                    if (static_cast<int>(base.size() + u.size()) > f.order_) continue;
                    Word ext = base;
                    ext.insert(ext.end(), u.begin(), u.end());
                    next[ext] += c * d;
                }
            }
            partial = std::move(next);
        }
        for (const auto& [w, c] : partial) {
            auto it = out.coeffs_.find(w);
            if (it == out.coeffs_.end()) {
                if (!(coeff * c == 0)) out.coeffs_.emplace(w, coeff * c);
            } else {
                it->second += coeff * c;
                if (it->second == 0) out.coeffs_.erase(it);
            }
        }
    }
    return out;
}

Word restrict_word(const Word& w, const std::vector<int>& block) {
    Word out;
    out.reserve(block.size());
    for (int pos : block) out.push_back(w.at(static_cast<std::size_t>(pos - 1)));
    return out;
}

Rat cf_partition(const Word& w, const NcPartition& pi, const NcSeries& f) {
    if (pi.n != static_cast<int>(w.size()))
        throw std::domain_error("cf_partition: word/partition size mismatch");
    Rat prod(1);
    for (const auto& block : pi.blocks) {
        prod *= f.cf(restrict_word(w, block));
        if (prod == 0) return prod;
    }
    return prod;
}

Rat cf_mixed(const Word& w, const NcPartition& pi, const Colouring& c,
             const NcSeries& f1, const NcSeries& f2) {
    if (pi.n != static_cast<int>(w.size()))
        throw std::domain_error("cf_mixed: word/partition size mismatch");
    if (c.size() != pi.blocks.size()) throw std::domain_error("cf_mixed: colouring not total");
    Rat prod(1);
    for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
        const NcSeries& f = (c[b] == 1) ? f1 : f2;
        prod *= f.cf(restrict_word(w, pi.blocks[b]));
        if (prod == 0) return prod;
    }
    return prod;
}

}  // namespace freeprob
