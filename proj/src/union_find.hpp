#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace symq::detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // The smaller root wins, so a group's root is its minimum element.
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (b < a)
            std::swap(a, b);
        parent_[b] = a;
    }

    std::size_t size() const { return parent_.size(); }

    std::size_t count_roots()
    {
        std::size_t roots = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i)
            if (find(i) == i)
                ++roots;
        return roots;
    }

private:
    std::vector<std::size_t> parent_;
};

/// Union-find carrying the parity of each element relative to its root.
class ParityUnionFind {
public:
    explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::pair<std::size_t, int> find(std::size_t x)
    {
        int p = 0;
        std::size_t r = x;
        while (parent_[r] != r) {
            p ^= parity_[r];
            r = parent_[r];
        }
        // compress
        int q = p;
        while (parent_[x] != r && parent_[x] != x) {
            std::size_t next = parent_[x];
            int next_q = q ^ parity_[x];
            parent_[x] = r;
            parity_[x] = q;
            x = next;
            q = next_q;
        }
        return {r, p};
    }

    /// Imposes value(a) xor value(b) == rel. Returns false on contradiction.
    bool relate(std::size_t a, std::size_t b, int rel)
    {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb)
            return (pa ^ pb) == rel;
        if (rb < ra) {
            std::swap(ra, rb);
            std::swap(pa, pb);
        }
        parent_[rb] = ra;
        parity_[rb] = pa ^ pb ^ rel;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<int> parity_;
};

}  // namespace symq::detail
