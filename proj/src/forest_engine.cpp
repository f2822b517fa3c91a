#include "semrank/forest_engine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "semrank/union_find.hpp"

namespace semrank {

namespace {

// Remaps the concepts touched by the candidate edges to dense 0..k-1.
struct DenseEdges {
    std::vector<std::pair<int, int>> endpoints;  // parallel to the sorted edge list
    int vertex_count = 0;
};

DenseEdges densify(const std::vector<const CandidateEdge*>& edges) {
    DenseEdges d;
    std::map<ConceptId, int> ids;
    for (const CandidateEdge* e : edges) {
        auto [ia, _a] = ids.try_emplace(e->pair.lo, static_cast<int>(ids.size()));
        auto [ib, _b] = ids.try_emplace(e->pair.hi, static_cast<int>(ids.size()));
        d.endpoints.emplace_back(ia->second, ib->second);
    }
    d.vertex_count = static_cast<int>(ids.size());
    return d;
}

std::vector<const CandidateEdge*> sorted_edges(const CandidateEdgeSet& candidates,
                                               bool positive_only) {
    std::vector<const CandidateEdge*> edges;
    edges.reserve(candidates.edges.size());
    for (const CandidateEdge& e : candidates.edges) {
        if (positive_only && !e.delta.is_positive()) continue;
        edges.push_back(&e);
    }
    std::sort(edges.begin(), edges.end(),
              [](const CandidateEdge* a, const CandidateEdge* b) { return a->pair < b->pair; });
    return edges;
}

// Visits every connected acyclic subset of exactly `length` edges, in
// lexicographic index order. The visitor returns false to stop early.
// Acyclicity is pruned during growth with a union-find snapshot per branch;
// an acyclic l-edge set is connected iff it touches exactly l+1 vertices.
void visit_trees(const std::vector<const CandidateEdge*>& edges, int length,
                 const std::function<bool(const std::vector<int>&)>& visitor) {
    const int edge_count = static_cast<int>(edges.size());
    if (length < 1 || length > edge_count) return;
    DenseEdges dense = densify(edges);

    std::vector<int> chosen;
    chosen.reserve(length);
    bool stop = false;

    std::function<void(int, const UnionFind&, int)> recurse = [&](int start, const UnionFind& uf,
                                                                  int touched) {
        if (stop) return;
        if (static_cast<int>(chosen.size()) == length) {
            if (touched == length + 1) {
                if (!visitor(chosen)) stop = true;
            }
            return;
        }
        int remaining = length - static_cast<int>(chosen.size());
        for (int i = start; i <= edge_count - remaining && !stop; ++i) {
            auto [a, b] = dense.endpoints[i];
            UnionFind next = uf;
            // a vertex is untouched iff it still sits alone in its component
            int next_touched = touched;
            if (next.size[next.find(a)] == 1) ++next_touched;
            if (next.size[next.find(b)] == 1) ++next_touched;
            if (!next.unite(a, b)) continue;  // would close a cycle
            chosen.push_back(i);
            recurse(i + 1, next, next_touched);
            chosen.pop_back();
        }
    };

    recurse(0, UnionFind(dense.vertex_count), 0);
}

void check_cap(const CandidateEdgeSet& candidates, int cap) {
    if (candidates.size() > cap) throw CapExceededError(candidates.size(), cap);
}

}  // namespace

std::vector<TreeSubset> enumerate_trees(const CandidateEdgeSet& candidates, int length) {
    check_cap(candidates, kEnumerationCap);
    auto edges = sorted_edges(candidates, false);
    std::vector<TreeSubset> out;
    visit_trees(edges, length, [&](const std::vector<int>& chosen) {
        TreeSubset t;
        t.edges.reserve(chosen.size());
        for (int idx : chosen) t.edges.push_back(edges[idx]->pair);
        out.push_back(std::move(t));
        return true;
    });
    return out;
}

LengthAggregate aggregate(const CandidateEdgeSet& candidates, int length) {
    check_cap(candidates, kEnumerationCap);
    auto edges = sorted_edges(candidates, false);
    LengthAggregate agg;
    agg.length = length;
    visit_trees(edges, length, [&](const std::vector<int>& chosen) {
        Rational product(1);
        for (int idx : chosen) product *= edges[idx]->probability();
        agg.weight_sum += product;
        agg.tree_count += 1;
        return true;
    });
    return agg;
}

int max_structural_length(const CandidateEdgeSet& candidates, bool positive_only) {
    check_cap(candidates, kEnumerationCap);
    auto edges = sorted_edges(candidates, positive_only);
    if (edges.empty()) return 0;
    DenseEdges dense = densify(edges);
    int upper = std::min(static_cast<int>(edges.size()), dense.vertex_count - 1);
    for (int l = upper; l >= 1; --l) {
        bool found = false;
        visit_trees(edges, l, [&](const std::vector<int>&) {
            found = true;
            return false;
        });
        if (found) return l;
    }
    return 0;
}

std::vector<TreeSubset> brute_force_trees(const CandidateEdgeSet& candidates, int length) {
    check_cap(candidates, kBruteForceCap);
    auto edges = sorted_edges(candidates, false);
    const int edge_count = static_cast<int>(edges.size());
    std::vector<TreeSubset> out;
    if (length < 1 || length > edge_count) return out;

    // index combination in lexicographic order
    std::vector<int> comb(length);
    for (int i = 0; i < length; ++i) comb[i] = i;

    auto is_tree = [&](const std::vector<int>& subset) {
        std::map<ConceptId, std::vector<ConceptId>> adj;
        for (int idx : subset) {
            adj[edges[idx]->pair.lo].push_back(edges[idx]->pair.hi);
            adj[edges[idx]->pair.hi].push_back(edges[idx]->pair.lo);
        }
        if (static_cast<int>(adj.size()) != length + 1) return false;
        // connected with V = E + 1 implies acyclic
        std::set<ConceptId> seen;
        std::vector<ConceptId> stack{adj.begin()->first};
        seen.insert(stack.back());
        while (!stack.empty()) {
            ConceptId v = stack.back();
            stack.pop_back();
            for (ConceptId w : adj[v]) {
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        return seen.size() == adj.size();
    };

    while (true) {
        if (is_tree(comb)) {
            TreeSubset t;
            for (int idx : comb) t.edges.push_back(edges[idx]->pair);
            out.push_back(std::move(t));
        }
        int i = length - 1;
        while (i >= 0 && comb[i] == edge_count - length + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < length; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

}  // namespace semrank
