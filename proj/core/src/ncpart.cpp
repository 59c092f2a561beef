#include "freeprob/ncpart.hpp"

#include <algorithm>
#include <stdexcept>

namespace freeprob {

std::string NcPartition::str() const {
    std::string out;
    for (const auto& block : blocks) {
        out += '{';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(block[i]);
        }
        out += '}';
    }
    return out;
}

namespace {

// block-of-element sequence, the canonical sort key for NC(n)
std::vector<int> block_sequence(const NcPartition& p) {
    std::vector<int> seq(static_cast<std::size_t>(p.n), -1);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (int e : p.blocks[b]) seq[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
    return seq;
}

// Recursive construction by the block containing the first element of a
// contiguous range [lo, hi]: choosing the block's elements splits the rest
// into independent gaps, so only non-crossing partitions are generated.
void enumerate_range(int lo, int hi, std::vector<std::vector<int>>& acc,
                     std::vector<NcPartition>& out, int n);

void choose_first_block(int lo, int hi, std::vector<int>& block, int next,
                        std::vector<std::vector<int>>& acc,
                        std::vector<NcPartition>& out, int n) {
    // block currently ends at block.back(); elements >= next may extend it
    if (next > hi) {
        acc.push_back(block);
        // internal gaps between consecutive chosen elements
        bool ok = true;
        (void)ok;
        // partition each gap independently
        std::vector<std::pair<int, int>> gaps;
        for (std::size_t i = 0; i + 1 < block.size(); ++i)
            if (block[i] + 1 <= block[i + 1] - 1) gaps.emplace_back(block[i] + 1, block[i + 1] - 1);
        if (block.back() + 1 <= hi) gaps.emplace_back(block.back() + 1, hi);

        // recurse over the gap list
        struct Rec {
            std::vector<std::pair<int, int>>& gaps;
            std::vector<std::vector<int>>& acc;
            std::vector<NcPartition>& out;
            int n;
            void go(std::size_t g) {
                if (g == gaps.size()) {
                    NcPartition p;
                    p.n = n;
                    p.blocks = acc;
                    std::sort(p.blocks.begin(), p.blocks.end(),
                              [](const auto& a, const auto& b) { return a.front() < b.front(); });
                    out.push_back(std::move(p));
                    return;
                }
                // enumerate partitions of this gap, then continue with the rest
                auto [lo, hi] = gaps[g];
                std::vector<NcPartition> sub;
                std::vector<std::vector<int>> subacc;
                enumerate_range(lo, hi, subacc, sub, hi - lo + 1);
                for (auto& s : sub) {
                    std::size_t mark = acc.size();
                    for (auto& b : s.blocks) acc.push_back(b);
                    go(g + 1);
                    acc.resize(mark);
                }
            }
        };
        Rec rec{gaps, acc, out, n};
        rec.go(0);
        acc.pop_back();
        return;
    }
    // skip next (it falls into a gap); only valid if block continues later,
    // which the recursion explores by trying every extension
    choose_first_block(lo, hi, block, next + 1, acc, out, n);
    block.push_back(next);
    choose_first_block(lo, hi, block, next + 1, acc, out, n);
    block.pop_back();
}

void enumerate_range(int lo, int hi, std::vector<std::vector<int>>& acc,
                     std::vector<NcPartition>& out, int n) {
    if (lo > hi) {
        NcPartition p;
        p.n = n;
        out.push_back(std::move(p));
        return;
    }
    std::vector<int> block{lo};
    // here partitions produced carry blocks with original labels; the caller
    // reassembles them, so n passed through is the ambient size
    choose_first_block(lo, hi, block, lo + 1, acc, out, n);
}

}  // namespace

std::vector<NcPartition> enumerate_nc(int n, int ceiling) {
    if (n < 1 || n > ceiling) throw std::domain_error("enumerate_nc: n out of range");
    std::vector<NcPartition> out;
    std::vector<std::vector<int>> acc;
    enumerate_range(1, n, acc, out, n);
    std::sort(out.begin(), out.end(), [](const NcPartition& a, const NcPartition& b) {
        return block_sequence(a) < block_sequence(b);
    });
    return out;
}

std::vector<bool> classify_blocks(const NcPartition& pi) {
    std::vector<bool> outer(pi.blocks.size(), true);
    for (std::size_t v = 0; v < pi.blocks.size(); ++v)
        for (std::size_t w = 0; w < pi.blocks.size(); ++w)
            if (w != v && pi.blocks[w].front() < pi.blocks[v].front() &&
                pi.blocks[w].back() > pi.blocks[v].back()) {
                outer[v] = false;
                break;
            }
    return outer;
}

Colouring inner_outer_colouring(const NcPartition& pi) {
    auto outer = classify_blocks(pi);
    Colouring c(outer.size());
    for (std::size_t i = 0; i < outer.size(); ++i) c[i] = outer[i] ? 1 : 2;
    return c;
}

bool leq_refinement(const NcPartition& pi, const NcPartition& rho) {
    if (pi.n != rho.n) throw std::domain_error("leq_refinement: mismatched ground sets");
    std::vector<int> rho_of(static_cast<std::size_t>(rho.n) + 1, -1);
    for (std::size_t b = 0; b < rho.blocks.size(); ++b)
        for (int e : rho.blocks[b]) rho_of[static_cast<std::size_t>(e)] = static_cast<int>(b);
    for (const auto& block : pi.blocks) {
        int target = rho_of[static_cast<std::size_t>(block.front())];
        for (int e : block)
            if (rho_of[static_cast<std::size_t>(e)] != target) return false;
    }
    return true;
}

bool ll_leq(const NcPartition& pi, const NcPartition& rho) {
    if (!leq_refinement(pi, rho)) return false;
    std::vector<int> pi_of(static_cast<std::size_t>(pi.n) + 1, -1);
    for (std::size_t b = 0; b < pi.blocks.size(); ++b)
        for (int e : pi.blocks[b]) pi_of[static_cast<std::size_t>(e)] = static_cast<int>(b);
    for (const auto& w : rho.blocks)
        if (pi_of[static_cast<std::size_t>(w.front())] != pi_of[static_cast<std::size_t>(w.back())])
            return false;
    return true;
}

std::vector<NcPartition> interval_partitions(int n, int ceiling) {
    if (n < 1 || n > ceiling) throw std::domain_error("interval_partitions: n out of range");
    std::vector<NcPartition> out;
    // compositions of n via bitmask over the n-1 possible cut points
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
        NcPartition p;
        p.n = n;
        std::vector<int> cur{1};
        for (int e = 2; e <= n; ++e) {
            if (mask & (1ul << (e - 2))) {
                p.blocks.push_back(cur);
                cur.clear();
            }
            cur.push_back(e);
        }
        p.blocks.push_back(cur);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const NcPartition& a, const NcPartition& b) {
        return block_sequence(a) < block_sequence(b);
    });
    return out;
}

NcPartition interval_hull(const NcPartition& pi) {
    auto outer = classify_blocks(pi);
    NcPartition rho;
    rho.n = pi.n;
    for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
        if (!outer[b]) continue;
        std::vector<int> hull;
        for (int e = pi.blocks[b].front(); e <= pi.blocks[b].back(); ++e) hull.push_back(e);
        rho.blocks.push_back(std::move(hull));
    }
    std::sort(rho.blocks.begin(), rho.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return rho;
}

std::vector<std::size_t> special_blocks(const NcPartition& pi, const NcPartition& rho) {
    if (!ll_leq(pi, rho)) throw std::domain_error("special_blocks: pi << rho required");
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < pi.blocks.size(); ++v)
        for (const auto& w : rho.blocks)
            if (pi.blocks[v].front() == w.front() && pi.blocks[v].back() == w.back()) {
                out.push_back(v);
                break;
            }
    return out;
}

Colouring special_colouring(const NcPartition& pi, const NcPartition& rho) {
    Colouring c(pi.blocks.size(), 2);
    for (std::size_t v : special_blocks(pi, rho)) c[v] = 1;
    return c;
}

NcPartition make_partition(int n, std::vector<std::vector<int>> blocks) {
    if (n < 1) throw std::domain_error("make_partition: n < 1");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (auto& b : blocks) {
        if (b.empty()) throw std::domain_error("make_partition: empty block");
        std::sort(b.begin(), b.end());
        for (int e : b) {
            if (e < 1 || e > n || seen[static_cast<std::size_t>(e)])
                throw std::domain_error("make_partition: bad or duplicated element");
            seen[static_cast<std::size_t>(e)] = true;
        }
    }
    for (int e = 1; e <= n; ++e)
        if (!seen[static_cast<std::size_t>(e)]) throw std::domain_error("make_partition: incomplete cover");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    NcPartition p;
    p.n = n;
    p.blocks = std::move(blocks);
    // crossing check: i<j<k<l with i,k in one block and j,l in another
    std::vector<int> of(static_cast<std::size_t>(n) + 1, -1);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (int e : p.blocks[b]) of[static_cast<std::size_t>(e)] = static_cast<int>(b);
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        const auto& blk = p.blocks[b];
        for (std::size_t i = 0; i + 1 < blk.size(); ++i)
            for (int e = blk[i] + 1; e < blk[i + 1]; ++e)
                if (of[static_cast<std::size_t>(e)] != static_cast<int>(b)) {
                    // e sits inside a gap of blk; its block must stay inside
                    const auto& other = p.blocks[static_cast<std::size_t>(of[static_cast<std::size_t>(e)])];
                    if (other.front() < blk[i] + 1 || other.back() > blk[i + 1] - 1)
                        throw std::domain_error("make_partition: crossing blocks");
                }
    }
    return p;
}

}  // namespace freeprob
