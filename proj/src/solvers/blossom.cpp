#include "pdbkit/solvers/blossom.hpp"

#include <algorithm>
#include <queue>

namespace pdbkit {

namespace {

// Classic array-based blossom search: BFS from a free root, contracting odd
// cycles via lowest common ancestor of their tips. base[v] is the base
// vertex of the blossom currently containing v.
struct Blossom {
    int n;
    const std::vector<std::vector<int>>& adj;
    std::vector<int> match, parent, base;
    std::vector<char> blossom_mark, used;

    explicit Blossom(const std::vector<std::vector<int>>& a)
        : n(static_cast<int>(a.size())), adj(a), match(n, -1), parent(n, -1), base(n),
          blossom_mark(n, 0), used(n, 0) {}

    int lca(int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (match[a] < 0)
                break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b])
                return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int root, int child) {
        while (base[v] != root) {
            blossom_mark[base[v]] = 1;
            blossom_mark[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_augmenting(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i)
            base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (const int to : adj[v]) {
                if (base[v] == base[to] || match[v] == to)
                    continue;
                if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
                    // Odd cycle: contract the blossom.
                    const int cur_base = lca(v, to);
                    std::fill(blossom_mark.begin(), blossom_mark.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom_mark[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[to] < 0) {
                    parent[to] = v;
                    if (match[to] < 0)
                        return to; // augmenting path found
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v >= 0) {
            const int pv = parent[v];
            const int ppv = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = ppv;
        }
    }

    int run() {
        int size = 0;
        for (int v = 0; v < n; ++v) {
            if (match[v] >= 0)
                continue;
            const int leaf = find_augmenting(v);
            if (leaf >= 0) {
                augment(leaf);
                ++size;
            }
        }
        return size;
    }
};

} // namespace

int max_cardinality_matching(const std::vector<std::vector<int>>& adj) {
    if (adj.empty())
        return 0;
    Blossom b(adj);
    return b.run();
}

} // namespace pdbkit
