#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "inducibility/graph.hpp"

namespace ind {

// ----- Single cloning step -----

// Replaces u's adjacency with v's for a nonadjacent pair, making u and v
// twins. The rest of the graph is untouched.
inline Graph symmetrize_step(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw domain_error("symmetrize_step: identical vertices");
    if (g.has_edge(u, v)) throw domain_error("symmetrize_step: pair must be nonadjacent");
    Graph out = g;
    out.set_neighbors(u, g.neighbors(v));
    return out;
}

// ----- Per-vertex copy counts -----

// copy_counts[v] = number of induced copies of family members containing v.
inline std::vector<long long> per_vertex_copy_counts(const Graph& g,
                                                     const std::vector<Graph>& family) {
    std::vector<long long> counts(static_cast<size_t>(g.n()), 0);
    for (const Graph& f : family) {
        if (f.n() < 1) throw domain_error("per_vertex_copy_counts: empty family member");
        if (f.n() > g.n()) continue;
        detail::IsoPattern pf(f);
        const int k = f.n();
        std::vector<std::uint64_t> sub(static_cast<size_t>(k));
        std::vector<int> degs(static_cast<size_t>(k)), degs_sorted(static_cast<size_t>(k));
        for_each_subset(g.n(), k, [&](const std::vector<int>& idx) {
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
            if (detail::isomorphic_small(pf.rows, pf.degrees, sub, degs))
                for (int i : idx) ++counts[static_cast<size_t>(i)];
        });
    }
    return counts;
}

inline BigInt family_copy_count(const Graph& g, const std::vector<Graph>& family) {
    BigInt total(0);
    for (const Graph& f : family) total += count_induced(f, g);
    return total;
}

// ----- Full symmetrization to a complete multipartite endpoint -----

struct SymmetrizationStep {
    int target = 0;              // vertex whose row is overwritten
    int source = 0;              // vertex being cloned
    bool absorption = false;     // zero-gain twin-class merge step
    BigInt count_before;
    BigInt count_after;
};

struct SymmetrizationTrace {
    Graph initial;
    Graph result;
    std::vector<SymmetrizationStep> steps;
    std::optional<PartiteProfile> final_profile;
    BigInt initial_count;
    BigInt final_count;
};

namespace detail {

// Twin classes (identical adjacency rows), each listed by ascending vertex,
// classes ordered by their smallest vertex.
inline std::vector<std::vector<int>> twin_classes(const Graph& g) {
    std::vector<std::vector<int>> classes;
    std::uint64_t seen = 0;
    for (int v = 0; v < g.n(); ++v) {
        if ((seen >> v) & 1) continue;
        std::vector<int> cls{v};
        seen |= (std::uint64_t{1} << v);
        for (int w = v + 1; w < g.n(); ++w) {
            if ((seen >> w) & 1) continue;
            if (g.neighbors(w) == g.neighbors(v)) {
                cls.push_back(w);
                seen |= (std::uint64_t{1} << w);
            }
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace detail

// Repeated cloning toward larger per-vertex copy counts, then zero-gain twin
// class merges, until the graph is complete multipartite. Strict steps always
// clone the vertex with the strictly larger count onto the smaller one; the
// first qualifying nonadjacent pair in lexicographic order is taken. Twin
// class absorption runs only when no strict step exists, merging the first
// fully nonadjacent class pair in class-index order. Total step cap n^2.
inline SymmetrizationTrace symmetrize_to_multipartite(const Graph& g,
                                                      const std::vector<Graph>& family) {
    if (g.n() < 1) throw domain_error("symmetrize_to_multipartite: empty graph");
    if (g.n() > 14) throw capacity_error("symmetrize_to_multipartite: more than 14 vertices");
    if (family.empty()) throw domain_error("symmetrize_to_multipartite: empty family");
    SymmetrizationTrace trace;
    trace.initial = g;
    trace.initial_count = family_copy_count(g, family);
    Graph cur = g;
    BigInt cur_count = trace.initial_count;
    const int cap = g.n() * g.n();
    int steps_taken = 0;
    auto apply = [&](int target, int source, bool absorption) {
        if (steps_taken >= cap)
            throw std::logic_error("symmetrize_to_multipartite: step cap exceeded");
        Graph next = symmetrize_step(cur, target, source);
        BigInt next_count = family_copy_count(next, family);
        trace.steps.push_back({target, source, absorption, cur_count, next_count});
        cur = next;
        cur_count = next_count;
        ++steps_taken;
    };
    while (true) {
        // Strict improvement phase.
        bool moved = false;
        do {
            moved = false;
            const auto counts = per_vertex_copy_counts(cur, family);
            for (int u = 0; u < cur.n() && !moved; ++u) {
                for (int v = u + 1; v < cur.n() && !moved; ++v) {
                    if (cur.has_edge(u, v)) continue;
                    if (counts[static_cast<size_t>(u)] == counts[static_cast<size_t>(v)]) continue;
                    if (counts[static_cast<size_t>(u)] < counts[static_cast<size_t>(v)])
                        apply(u, v, false);
                    else
                        apply(v, u, false);
                    moved = true;
                }
            }
        } while (moved);
        if (is_complete_multipartite(cur)) break;
        // Absorption: merge the first fully nonadjacent twin-class pair.
        const auto classes = detail::twin_classes(cur);
        bool absorbed = false;
        for (size_t i = 0; i < classes.size() && !absorbed; ++i) {
            for (size_t j = i + 1; j < classes.size() && !absorbed; ++j) {
                if (cur.has_edge(classes[i][0], classes[j][0])) continue;
                for (int y : classes[j]) apply(y, classes[i][0], true);
                absorbed = true;
            }
        }
        if (!absorbed)
            throw std::logic_error("symmetrize_to_multipartite: no merge available");
    }
    trace.result = cur;
    trace.final_count = cur_count;
    trace.final_profile = is_complete_multipartite(cur);
    return trace;
}

// ----- Family and profile predicates -----

// Witness that symmetrization leaves the family: (member index, u, v) such
// that cloning v onto u in that member lands outside the family (up to
// isomorphism). nullopt when the family is closed under every cloning step.
inline std::optional<std::tuple<int, int, int>> symmetrizable_witness(
    const std::vector<Graph>& family) {
    if (family.empty()) throw domain_error("symmetrizable: empty family");
    const int n = family.front().n();
    if (n < 1) throw domain_error("symmetrizable: empty member");
    if (n > 10) throw capacity_error("symmetrizable: members with more than 10 vertices");
    for (const Graph& f : family)
        if (f.n() != n) throw domain_error("symmetrizable: members must share a vertex count");
    for (size_t m = 0; m < family.size(); ++m) {
        const Graph& f = family[m];
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v || f.has_edge(u, v)) continue;
                const Graph stepped = symmetrize_step(f, u, v);
                bool inside = false;
                for (const Graph& h : family) {
                    if (isomorphic(stepped, h)) {
                        inside = true;
                        break;
                    }
                }
                if (!inside) return std::make_tuple(static_cast<int>(m), u, v);
            }
        }
    }
    return std::nullopt;
}

inline bool is_symmetrizable_family(const std::vector<Graph>& family) {
    return !symmetrizable_witness(family).has_value();
}

// Part assignment exhibiting F as a blowup-with-arbitrary-insides of a graph
// on 2..n-1 vertices: every cross-part pair relation is uniformly complete or
// uniformly empty. nullopt when no such partition exists.
inline std::optional<std::vector<int>> fuzzy_blowup_partition(const Graph& f) {
    const int n = f.n();
    if (n < 1) throw domain_error("fuzzy_blowup_partition: empty graph");
    if (n > 10) throw capacity_error("fuzzy_blowup_partition: more than 10 vertices");
    std::vector<int> assign(static_cast<size_t>(n), 0);
    // Restricted growth strings enumerate set partitions once each.
    std::function<std::optional<std::vector<int>>(int, int)> rec =
        [&](int pos, int max_used) -> std::optional<std::vector<int>> {
        if (pos == n) {
            const int parts = max_used + 1;
            if (parts < 2 || parts >= n) return std::nullopt;
            for (int p = 0; p < parts; ++p) {
                for (int q = p + 1; q < parts; ++q) {
                    int state = -1;  // -1 unseen, 0 empty, 1 complete
                    for (int u = 0; u < n; ++u) {
                        if (assign[static_cast<size_t>(u)] != p) continue;
                        for (int v = 0; v < n; ++v) {
                            if (assign[static_cast<size_t>(v)] != q) continue;
                            const int e = f.has_edge(u, v) ? 1 : 0;
                            if (state == -1) state = e;
                            if (state != e) return std::nullopt;
                        }
                    }
                }
            }
            return assign;
        }
        for (int c = 0; c <= max_used + 1 && c < n; ++c) {
            assign[static_cast<size_t>(pos)] = c;
            if (auto hit = rec(pos + 1, std::max(max_used, c))) return hit;
        }
        return std::nullopt;
    };
    if (n < 3) return std::nullopt;  // needs 2 <= parts <= n-1
    // First vertex always opens part 0.
    return rec(1, 0);
}

inline bool is_robust(const Graph& f) { return !fuzzy_blowup_partition(f).has_value(); }

// (a_i - a_j)^2 > a_i + a_j for every pair of part sizes.
inline bool is_strongly_unbalanced(const PartiteProfile& profile) {
    const auto& a = profile.sizes();
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) {
            const long d = a[i] - a[j];
            if (d * d <= a[i] + a[j]) return false;
        }
    return true;
}

// The violating pair when not strongly unbalanced.
inline std::optional<std::pair<int, int>> strongly_unbalanced_witness(
    const PartiteProfile& profile) {
    const auto& a = profile.sizes();
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) {
            const long d = a[i] - a[j];
            if (d * d <= a[i] + a[j]) return std::make_pair(a[i], a[j]);
        }
    return std::nullopt;
}

}  // namespace ind
