#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "inducibility/combinatorics.hpp"
#include "inducibility/errors.hpp"
#include "inducibility/profile.hpp"
#include "inducibility/rational.hpp"

namespace ind {

// Simple undirected graph on at most 64 labeled vertices.
// Adjacency is one 64-bit row per vertex; no self-loops, rows stay symmetric.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0) throw domain_error("graph: negative vertex count");
        if (n > kMaxVertices) throw capacity_error("graph: more than 64 vertices");
    }

    int n() const { return n_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw domain_error("graph: vertex index out of range");
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw domain_error("graph: self-loop rejected");
        adj_[static_cast<size_t>(u)] |= (std::uint64_t{1} << v);
        adj_[static_cast<size_t>(v)] |= (std::uint64_t{1} << u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[static_cast<size_t>(u)] &= ~(std::uint64_t{1} << v);
        adj_[static_cast<size_t>(v)] &= ~(std::uint64_t{1} << u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<size_t>(u)] >> v) & 1;
    }

    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    // Overwrites u's adjacency row with `mask` (u's bit ignored), fixing columns.
    void set_neighbors(int u, std::uint64_t mask) {
        check_vertex(u);
        mask &= all_mask() & ~(std::uint64_t{1} << u);
        adj_[static_cast<size_t>(u)] = mask;
        for (int w = 0; w < n_; ++w) {
            if (w == u) continue;
            if ((mask >> w) & 1)
                adj_[static_cast<size_t>(w)] |= (std::uint64_t{1} << u);
            else
                adj_[static_cast<size_t>(w)] &= ~(std::uint64_t{1} << u);
        }
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    std::uint64_t all_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    }

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[static_cast<size_t>(v)] != o.adj_[static_cast<size_t>(v)]) return false;
        return true;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    // Upper-triangle bit encoding over pairs (i<j) in lexicographic order;
    // total order used for deterministic witnesses.
    std::uint64_t encoding() const {
        std::uint64_t code = 0;
        int bit = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j, ++bit)
                if (has_edge(i, j)) code |= (std::uint64_t{1} << bit);
        return code;
    }

    static Graph from_encoding(int n, std::uint64_t code) {
        if (n > 11) throw capacity_error("from_encoding: encoding exceeds 64 bits");
        Graph g(n);
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if ((code >> bit) & 1) g.add_edge(i, j);
        return g;
    }

private:
    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

// ----- Construction -----

inline Graph complete_multipartite(const PartiteProfile& profile) {
    const int s = profile.s();
    if (s > Graph::kMaxVertices)
        throw capacity_error("complete_multipartite: more than 64 vertices");
    Graph g(s);
    std::vector<int> part;
    part.reserve(static_cast<size_t>(s));
    for (int p = 0; p < profile.r(); ++p)
        for (int i = 0; i < profile.size(p); ++i) part.push_back(p);
    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v)
            if (part[static_cast<size_t>(u)] != part[static_cast<size_t>(v)]) g.add_edge(u, v);
    return g;
}

// Balanced profile of the Turan graph T(s, r): part sizes differ by at most 1.
inline PartiteProfile turan_profile(int s, int r) {
    if (r < 1) throw domain_error("turan_profile: r must be >= 1");
    if (r > s) throw domain_error("turan_profile: r exceeds s");
    const int p = s / r, q = s % r;
    std::vector<int> sizes;
    sizes.reserve(static_cast<size_t>(r));
    for (int i = 0; i < q; ++i) sizes.push_back(p + 1);
    for (int i = q; i < r; ++i) sizes.push_back(p);
    return PartiteProfile(std::move(sizes));
}

inline Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

// Replaces vertex i with sizes[i] pairwise nonadjacent copies; copies of u
// and v are adjacent exactly when uv was an edge.
inline Graph blowup(const Graph& f, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != f.n())
        throw domain_error("blowup: one size per vertex required");
    long total = 0;
    for (int s : sizes) {
        if (s < 1) throw domain_error("blowup: sizes must be >= 1");
        total += s;
    }
    if (total > Graph::kMaxVertices) throw capacity_error("blowup: more than 64 vertices");
    Graph g(static_cast<int>(total));
    std::vector<int> owner;
    owner.reserve(static_cast<size_t>(total));
    for (int v = 0; v < f.n(); ++v)
        for (int c = 0; c < sizes[static_cast<size_t>(v)]; ++c) owner.push_back(v);
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (owner[static_cast<size_t>(u)] != owner[static_cast<size_t>(v)] &&
                f.has_edge(owner[static_cast<size_t>(u)], owner[static_cast<size_t>(v)]))
                g.add_edge(u, v);
    return g;
}

// Iterated lexicographic self-substitution: depth 1 is F itself; at depth d
// every vertex of F carries a copy of the depth d-1 graph, with complete
// joins along the edges of F. Vertex count r^depth.
inline Graph nested_blowup(const Graph& f, int depth) {
    if (depth < 1) throw domain_error("nested_blowup: depth must be >= 1");
    if (f.n() < 1) throw domain_error("nested_blowup: empty base graph");
    if (depth == 1) return f;
    Graph inner = nested_blowup(f, depth - 1);
    const long total = static_cast<long>(f.n()) * inner.n();
    if (total > Graph::kMaxVertices)
        throw capacity_error("nested_blowup: more than 64 vertices");
    Graph g(static_cast<int>(total));
    const int m = inner.n();
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            const int pu = u / m, pv = v / m;
            const bool edge = (pu == pv) ? inner.has_edge(u % m, v % m) : f.has_edge(pu, pv);
            if (edge) g.add_edge(u, v);
        }
    }
    return g;
}

// ----- Isomorphism and induced counting -----

namespace detail {

// Degree-pruned backtracking: is there a bijection [k] -> [k] carrying the
// `a` adjacency rows onto the `b` rows? Vertex `pos` of `a` is assigned last.
inline bool iso_extend(const std::vector<std::uint64_t>& pa, const std::vector<int>& da,
                       const std::vector<std::uint64_t>& pb, const std::vector<int>& db,
                       std::vector<int>& map, std::uint64_t used, int pos) {
    const int k = static_cast<int>(pa.size());
    if (pos == k) return true;
    for (int cand = 0; cand < k; ++cand) {
        if ((used >> cand) & 1) continue;
        if (da[static_cast<size_t>(pos)] != db[static_cast<size_t>(cand)]) continue;
        bool ok = true;
        for (int prev = 0; prev < pos; ++prev) {
            const bool ea = (pa[static_cast<size_t>(pos)] >> prev) & 1;
            const bool eb = (pb[static_cast<size_t>(cand)] >> map[static_cast<size_t>(prev)]) & 1;
            if (ea != eb) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[static_cast<size_t>(pos)] = cand;
        if (iso_extend(pa, da, pb, db, map, used | (std::uint64_t{1} << cand), pos + 1))
            return true;
    }
    return false;
}

inline bool isomorphic_small(const std::vector<std::uint64_t>& pa, const std::vector<int>& da,
                             const std::vector<std::uint64_t>& pb, const std::vector<int>& db) {
    std::vector<int> map(pa.size(), -1);
    return iso_extend(pa, da, pb, db, map, 0, 0);
}

struct IsoPattern {
    int k = 0;
    int edges = 0;
    std::vector<std::uint64_t> rows;      // adjacency among pattern vertices
    std::vector<int> degrees;             // degree within the pattern
    std::vector<int> degrees_sorted;

    explicit IsoPattern(const Graph& f) : k(f.n()) {
        rows.resize(static_cast<size_t>(k));
        degrees.resize(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            std::uint64_t row = 0;
            for (int j = 0; j < k; ++j)
                if (i != j && f.has_edge(i, j)) row |= (std::uint64_t{1} << j);
            rows[static_cast<size_t>(i)] = row;
            degrees[static_cast<size_t>(i)] = std::popcount(row);
        }
        degrees_sorted = degrees;
        std::sort(degrees_sorted.begin(), degrees_sorted.end());
        for (int d : degrees) edges += d;
        edges /= 2;
    }
};

}  // namespace detail

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n()) return false;
    detail::IsoPattern pa(a), pb(b);
    if (pa.edges != pb.edges || pa.degrees_sorted != pb.degrees_sorted) return false;
    return detail::isomorphic_small(pa.rows, pa.degrees, pb.rows, pb.degrees);
}

// Visits every k-subset of [0, n) as an index array in lexicographic order.
template <typename Fn>
inline void for_each_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

// Number of |V(F)|-subsets of V(G) inducing a copy of F. Exact; zero when F
// has more vertices than G.
inline BigInt count_induced(const Graph& f, const Graph& g) {
    const int k = f.n(), n = g.n();
    if (k < 1) throw domain_error("count_induced: empty pattern graph");
    if (k > n) return BigInt(0);
    detail::IsoPattern pf(f);
    long long hits = 0;
    std::vector<std::uint64_t> sub(static_cast<size_t>(k));
    std::vector<int> degs(static_cast<size_t>(k)), degs_sorted(static_cast<size_t>(k));
    for_each_subset(n, k, [&](const std::vector<int>& idx) {
        int edges = 0;
        for (int i = 0; i < k; ++i) {
            std::uint64_t row = 0;
            const std::uint64_t gi = g.neighbors(idx[static_cast<size_t>(i)]);
            for (int j = 0; j < k; ++j)
                if (j != i && ((gi >> idx[static_cast<size_t>(j)]) & 1))
                    row |= (std::uint64_t{1} << j);
            sub[static_cast<size_t>(i)] = row;
            degs[static_cast<size_t>(i)] = std::popcount(row);
            edges += degs[static_cast<size_t>(i)];
        }
        if (edges / 2 != pf.edges) return;
        degs_sorted = degs;
        std::sort(degs_sorted.begin(), degs_sorted.end());
        if (degs_sorted != pf.degrees_sorted) return;
        if (detail::isomorphic_small(pf.rows, pf.degrees, sub, degs)) ++hits;
    });
    return BigInt(hits);
}

// p(F, G) = count / C(|V(G)|, |V(F)|).
inline BigRational induced_density(const Graph& f, const Graph& g) {
    if (f.n() > g.n()) return BigRational(0);
    return BigRational(count_induced(f, g), binomial(g.n(), f.n()));
}

// ----- Clique number and chromatic number (exact, n <= 16) -----

struct ColoringStats {
    int omega = 0;
    int chi = 0;
};

namespace detail {

inline int max_clique_mask(const std::vector<std::uint64_t>& adj, std::uint64_t cand, int depth) {
    if (cand == 0) return depth;
    int best = depth;
    std::uint64_t rest = cand;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (depth + std::popcount(cand) <= best) break;  // bound: remaining candidates
        cand &= ~(std::uint64_t{1} << v);
        best = std::max(best,
                        max_clique_mask(adj, cand & adj[static_cast<size_t>(v)], depth + 1));
    }
    return best;
}

// Backtracking with first-use symmetry breaking: vertex at position pos may
// only open color index <= colors used so far.
inline bool color_rec(const std::vector<std::uint64_t>& adj, const std::vector<int>& order,
                      std::vector<int>& color, int pos, int used, int colors) {
    if (pos == static_cast<int>(order.size())) return true;
    const int v = order[static_cast<size_t>(pos)];
    const int limit = std::min(colors - 1, used);
    for (int c = 0; c <= limit; ++c) {
        bool clash = false;
        std::uint64_t nb = adj[static_cast<size_t>(v)];
        while (nb) {
            const int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (color[static_cast<size_t>(w)] == c) {
                clash = true;
                break;
            }
        }
        if (clash) continue;
        color[static_cast<size_t>(v)] = c;
        if (color_rec(adj, order, color, pos + 1, std::max(used, c + 1), colors)) return true;
        color[static_cast<size_t>(v)] = -1;
    }
    return false;
}

inline bool colorable(const std::vector<std::uint64_t>& adj, int n, int colors) {
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(adj[static_cast<size_t>(a)]) >
               std::popcount(adj[static_cast<size_t>(b)]);
    });
    return color_rec(adj, order, color, 0, 0, colors);
}

}  // namespace detail

inline ColoringStats coloring_stats(const Graph& g) {
    const int n = g.n();
    if (n < 1) throw domain_error("coloring_stats: empty graph");
    if (n > 16) throw capacity_error("coloring_stats: more than 16 vertices");
    std::vector<std::uint64_t> adj(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<size_t>(v)] = g.neighbors(v);
    ColoringStats st;
    st.omega = detail::max_clique_mask(adj, g.all_mask(), 0);
    for (int k = st.omega; k <= n; ++k) {
        if (detail::colorable(adj, n, k)) {
            st.chi = k;
            break;
        }
    }
    return st;
}

// True when G contains a clique on `k` vertices (early-abort search).
inline bool has_clique(const Graph& g, int k) {
    if (k <= 0) return true;
    if (k > g.n()) return false;
    std::vector<std::uint64_t> adj(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) adj[static_cast<size_t>(v)] = g.neighbors(v);
    // Depth-first with candidate sets; aborts as soon as depth k is reached.
    struct Rec {
        const std::vector<std::uint64_t>& adj;
        int k;
        bool run(std::uint64_t cand, int depth) {
            if (depth == k) return true;
            if (depth + std::popcount(cand) < k) return false;
            std::uint64_t rest = cand;
            while (rest) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                cand &= ~(std::uint64_t{1} << v);
                if (run(cand & adj[static_cast<size_t>(v)], depth + 1)) return true;
            }
            return false;
        }
    } rec{adj, k};
    return rec.run(g.all_mask(), 0);
}

// ----- Complete multipartite recognition -----

// Returns the part profile when G is complete multipartite (equal adjacency
// rows partition the vertices and all cross pairs are edges), else nullopt.
inline std::optional<PartiteProfile> is_complete_multipartite(const Graph& g) {
    const int n = g.n();
    if (n < 1) throw domain_error("is_complete_multipartite: empty graph");
    for (int v = 0; v < n; ++v) {
        const std::uint64_t klass = ~g.neighbors(v) & g.all_mask();  // v plus its non-neighbors
        // v's non-neighbors must share v's row exactly.
        std::uint64_t rest = klass & ~(std::uint64_t{1} << v);
        while (rest) {
            const int w = std::countr_zero(rest);
            rest &= rest - 1;
            if (g.neighbors(w) != g.neighbors(v)) return std::nullopt;
        }
    }
    std::vector<int> sizes;
    std::uint64_t seen = 0;
    for (int v = 0; v < n; ++v) {
        if ((seen >> v) & 1) continue;
        const std::uint64_t klass = ~g.neighbors(v) & g.all_mask();
        seen |= klass;
        sizes.push_back(std::popcount(klass));
    }
    return PartiteProfile(std::move(sizes));
}

// ----- Edge-list file format -----
// First line: vertex count n. Each further nonempty line: "u v" with
// 0 <= u, v < n, u != v. Duplicate and reversed edges are tolerated.

inline Graph parse_graph(std::istream& in) {
    int n = -1;
    if (!(in >> n)) throw domain_error("graph file: missing vertex count");
    if (n < 0) throw domain_error("graph file: negative vertex count");
    if (n > Graph::kMaxVertices) throw capacity_error("graph file: more than 64 vertices");
    Graph g(n);
    int u = 0, v = 0;
    while (in >> u >> v) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw domain_error("graph file: vertex index out of range");
        if (u == v) throw domain_error("graph file: self-loop rejected");
        g.add_edge(u, v);
    }
    if (!in.eof() && in.fail()) {
        in.clear();
        std::string junk;
        in >> junk;
        if (!junk.empty()) throw domain_error("graph file: malformed edge line");
    }
    return g;
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("graph file: cannot open '" + path + "'");
    return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << "\n";
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) out << u << " " << v << "\n";
}

inline std::string graph_to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

}  // namespace ind
