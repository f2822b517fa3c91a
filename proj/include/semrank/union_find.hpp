#ifndef SEMRANK_UNION_FIND_HPP
#define SEMRANK_UNION_FIND_HPP

#include <numeric>
#include <vector>

namespace semrank {

// Small union-by-size disjoint set over dense integer ids. Copyable by
// design: the forest enumerator carries a snapshot down each recursion
// branch instead of unwinding unions.
struct UnionFind {
    std::vector<int> parent;
    std::vector<int> size;

    explicit UnionFind(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // Returns false when x and y were already connected (a cycle).
    bool unite(int x, int y) {
        int rx = find(x);
        int ry = find(y);
        if (rx == ry) return false;
        if (size[rx] < size[ry]) std::swap(rx, ry);
        parent[ry] = rx;
        size[rx] += size[ry];
        return true;
    }

    bool connected(int x, int y) { return find(x) == find(y); }
};

}  // namespace semrank

#endif
