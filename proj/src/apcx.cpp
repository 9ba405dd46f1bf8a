#include "retcoh/apcx.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace retcoh {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

IntVec APGraph::boundary(const IntVec& z) const {
    IntVec b(num_vertices, 0);
    for (std::size_t e = 0; e < num_edges; ++e) {
        if (z[e] == 0) continue;
        b[static_cast<std::size_t>(dst[e])] += z[e];
        b[static_cast<std::size_t>(src[e])] -= z[e];
    }
    return b;
}

IntVec APGraph::path_vector(const Word& path) const {
    IntVec v(num_edges, 0);
    for (char e : path) v[static_cast<std::size_t>(e)] += 1;
    return v;
}

IntVec APGraph::cycle_coords(const IntVec& z) const {
    IntVec c;
    for (std::size_t e : fundamental_edges) c.push_back(z[e]);
    return c;
}

std::string APGraph::edge_list(const Substitution& collared) const {
    std::ostringstream os;
    for (std::size_t e = 0; e < num_edges; ++e)
        os << src[e] << ' ' << dst[e] << ' ' << collared.letters[e] << '\n';
    return os.str();
}

APGraph build_ap(const CollaredAlphabet& c) {
    APGraph g;
    std::size_t n = c.collared.size();
    g.num_edges = n;

    // Endpoint slots: left(e) = 2e, right(e) = 2e+1. Right of x is glued
    // to left of y for every legal collared pair xy.
    UnionFind uf(2 * n);
    for (const auto& [x, y] : c.legal_pairs)
        uf.unite(2 * x + 1, 2 * y);

    std::map<int, int> vid;
    auto vertex_of = [&](int slot) {
        int root = uf.find(slot);
        auto it = vid.find(root);
        if (it == vid.end())
            it = vid.emplace(root, static_cast<int>(vid.size())).first;
        return it->second;
    };
    for (std::size_t e = 0; e < n; ++e) {
        g.src.push_back(vertex_of(static_cast<int>(2 * e)));
        g.dst.push_back(vertex_of(static_cast<int>(2 * e + 1)));
    }
    g.num_vertices = vid.size();

    UnionFind comps(g.num_vertices);
    for (std::size_t e = 0; e < n; ++e) comps.unite(g.src[e], g.dst[e]);
    std::set<int> roots;
    for (std::size_t v = 0; v < g.num_vertices; ++v)
        roots.insert(comps.find(static_cast<int>(v)));
    g.num_components = roots.size();

    // Spanning forest by BFS; fundamental cycles from the remaining edges.
    std::vector<std::vector<std::pair<std::size_t, int>>> adj(g.num_vertices);
    for (std::size_t e = 0; e < n; ++e) {
        adj[static_cast<std::size_t>(g.src[e])].push_back({e, g.dst[e]});
        adj[static_cast<std::size_t>(g.dst[e])].push_back({e, g.src[e]});
    }
    std::vector<bool> seen(g.num_vertices, false);
    std::vector<bool> tree_edge(n, false);
    // to_root[v]: edge-vector of a path from v to its component root.
    std::vector<IntVec> to_root(g.num_vertices);
    for (std::size_t r = 0; r < g.num_vertices; ++r) {
        if (seen[r]) continue;
        seen[r] = true;
        to_root[r] = IntVec(n, 0);
        std::queue<std::size_t> q;
        q.push(r);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (auto [e, w] : adj[u]) {
                auto wv = static_cast<std::size_t>(w);
                if (seen[wv]) continue;
                seen[wv] = true;
                tree_edge[e] = true;
                // Traversing w -> u runs along e backwards iff e ends at w.
                int dir = g.dst[e] == w ? -1 : 1;
                to_root[wv] = to_root[u];
                to_root[wv][e] += dir;
                q.push(wv);
            }
        }
    }
    for (std::size_t e = 0; e < n; ++e) {
        if (tree_edge[e]) continue;
        IntVec z(n, 0);
        z[e] += 1;
        for (std::size_t k = 0; k < n; ++k) {
            z[k] += to_root[static_cast<std::size_t>(g.dst[e])][k];
            z[k] -= to_root[static_cast<std::size_t>(g.src[e])][k];
        }
        IntVec b = g.boundary(z);
        for (const Int& x : b)
            if (x != 0) throw std::logic_error("build_ap: basis cycle not closed");
        g.cycle_basis.push_back(std::move(z));
        g.fundamental_edges.push_back(e);
    }
    if (g.cycle_basis.size() != cycle_rank(g))
        throw std::logic_error("build_ap: cycle basis size mismatch");

    // Substitution on edges and the induced vertex map.
    g.edge_subst = c.collared.rule;
    g.vertex_image.assign(g.num_vertices, -1);
    auto set_image = [&](int v, int img) {
        auto vu = static_cast<std::size_t>(v);
        if (g.vertex_image[vu] == -1)
            g.vertex_image[vu] = img;
        else if (g.vertex_image[vu] != img)
            throw std::logic_error("build_ap: vertex image not well defined");
    };
    for (std::size_t e = 0; e < n; ++e) {
        const Word& path = g.edge_subst[e];
        set_image(g.src[e], g.src[static_cast<std::size_t>(path.front())]);
        set_image(g.dst[e], g.dst[static_cast<std::size_t>(path.back())]);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (g.dst[static_cast<std::size_t>(path[i])] !=
                g.src[static_cast<std::size_t>(path[i + 1])])
                throw std::logic_error("build_ap: edge image is not a path");
    }
    return g;
}

InducedMap induced_map(const APGraph& g) {
    std::size_t k = g.cycle_basis.size();
    RatMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const IntVec& z = g.cycle_basis[i];
        IntVec w(g.num_edges, 0);
        for (std::size_t e = 0; e < g.num_edges; ++e) {
            if (z[e] == 0) continue;
            for (char f : g.edge_subst[e])
                w[static_cast<std::size_t>(f)] += z[e];
        }
        IntVec b = g.boundary(w);
        for (const Int& x : b)
            if (x != 0)
                throw std::logic_error("induced_map: cycle image not a cycle");
        IntVec coords = g.cycle_coords(w);
        // The fundamental-cycle basis reads coordinates off directly;
        // verify the reconstruction to catch construction bugs.
        IntVec recon(g.num_edges, 0);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t e = 0; e < g.num_edges; ++e)
                recon[e] += coords[j] * g.cycle_basis[j][e];
        if (recon != w)
            throw std::logic_error("induced_map: image outside cycle lattice");
        for (std::size_t j = 0; j < k; ++j) m.at(j, i) = coords[j];
    }
    return InducedMap{std::move(m)};
}

std::size_t cech_h1_rank(const Substitution& s, std::size_t radius) {
    if (!check_primitive(s))
        throw std::invalid_argument("cech_h1_rank: substitution not primitive");
    CollaredAlphabet c = collar(s, radius);
    APGraph g = build_ap(c);
    if (cycle_rank(g) == 0) return 0;
    return eventual_rank(induced_map(g).matrix);
}

}  // namespace retcoh
