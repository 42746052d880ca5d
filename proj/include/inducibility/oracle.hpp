#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "inducibility/combinatorics.hpp"
#include "inducibility/errors.hpp"
#include "inducibility/graph.hpp"
#include "inducibility/profile.hpp"
#include "inducibility/rational.hpp"

namespace ind {

struct OracleResult {
    BigRational density;      // max induced density of F among admissible hosts
    Graph witness;            // smallest-encoding maximizer
    long long graphs_examined = 0;
    std::string constraint;   // human-readable description of the host class
};

namespace detail {

// Induced copies of the complete multipartite graph with the given profile
// inside a complete multipartite host with the given part sizes: sum over
// placements of the profile into distinct host parts of the product of
// binomials.
inline BigInt multipartite_copy_count(const PartiteProfile& profile,
                                      const std::vector<int>& host_parts) {
    const auto& sizes = profile.sizes();
    const int r = profile.r();
    const int m = static_cast<int>(host_parts.size());
    if (m < r) return BigInt(0);
    BigInt total = 0;
    // Distinct placements: choose which host part receives each profile part.
    // Equal profile parts are interchangeable, so enumerate sorted placements
    // per multiset via permutations of the canonical pattern.
    std::vector<int> pattern(static_cast<size_t>(m), 0);
    for (int i = 0; i < r; ++i) pattern[static_cast<size_t>(i)] = sizes[static_cast<size_t>(i)];
    std::sort(pattern.begin(), pattern.end());
    do {
        BigInt prod = 1;
        for (int j = 0; j < m && prod != 0; ++j)
            if (pattern[static_cast<size_t>(j)] > 0)
                prod *= binomial(host_parts[static_cast<size_t>(j)],
                                 pattern[static_cast<size_t>(j)]);
        total += prod;
    } while (std::next_permutation(pattern.begin(), pattern.end()));
    return total;
}

// All partitions of n into at most max_parts positive parts, nonincreasing.
inline void for_each_partition(int n, int max_parts,
                               const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            fn(current);
            return;
        }
        if (static_cast<int>(current.size()) >= max_parts) return;
        for (int next = std::min(cap, remaining); next >= 1; --next) {
            current.push_back(next);
            rec(remaining - next, next);
            current.pop_back();
        }
    };
    rec(n, n);
}

}  // namespace detail

// Exhaustive maximum of the induced density of f over all labeled graphs on n
// vertices, optionally restricted to graphs with no clique of size forbid_k.
// The witness is the graph with the smallest encoding among maximizers.
inline OracleResult max_over_all_graphs(const Graph& f, int n,
                                        std::optional<int> forbid_k = std::nullopt,
                                        int threads = 1, int n_cap = 7) {
    if (n < f.n()) throw domain_error("oracle: host order below pattern order");
    if (n > n_cap) throw capacity_error("oracle: host order exceeds the exhaustive cap");
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t limit = 1ULL << pairs;
    const int nthreads = std::max(1, threads);

    struct Best {
        BigInt count = -1;
        std::uint64_t enc = 0;
        long long examined = 0;
    };
    std::vector<Best> partial(static_cast<size_t>(nthreads));
    auto worker = [&](int t) {
        Best& b = partial[static_cast<size_t>(t)];
        for (std::uint64_t enc = static_cast<std::uint64_t>(t); enc < limit;
             enc += static_cast<std::uint64_t>(nthreads)) {
            const Graph g = Graph::from_encoding(n, enc);
            if (forbid_k && has_clique(g, *forbid_k)) continue;
            ++b.examined;
            const BigInt c = count_induced(f, g);
            if (c > b.count || (c == b.count && enc < b.enc)) {
                b.count = c;
                b.enc = enc;
            }
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    Best best;
    for (const auto& b : partial) {
        best.examined += b.examined;
        if (b.count > best.count || (b.count == best.count && b.enc < best.enc)) {
            best.count = b.count;
            best.enc = b.enc;
        }
    }
    if (best.count < 0) throw domain_error("oracle: no admissible host graph");
    OracleResult out;
    out.density = BigRational(best.count, binomial(n, f.n()));
    out.witness = Graph::from_encoding(n, best.enc);
    out.graphs_examined = best.examined;
    out.constraint = forbid_k ? ("all graphs on " + std::to_string(n) +
                                 " vertices with no clique of size " + std::to_string(*forbid_k))
                              : ("all graphs on " + std::to_string(n) + " vertices");
    return out;
}

// Maximum induced density of the complete multipartite pattern over complete
// multipartite hosts on n vertices with at most max_parts parts, computed by
// exact placement counting (no graph materialized until the witness).
inline OracleResult max_over_multipartite(const PartiteProfile& profile, int n, int max_parts) {
    if (n < profile.s()) throw domain_error("oracle: host order below pattern order");
    if (n > 40) throw capacity_error("oracle: multipartite host order exceeds 40");
    if (max_parts < 1) throw domain_error("oracle: need at least one part");
    BigInt best_count = -1;
    std::vector<int> best_parts;
    long long examined = 0;
    detail::for_each_partition(n, max_parts, [&](const std::vector<int>& parts) {
        ++examined;
        const BigInt c = detail::multipartite_copy_count(profile, parts);
        // Partitions arrive in descending lexicographic order; strict
        // improvement keeps the first maximizer seen.
        if (c > best_count) {
            best_count = c;
            best_parts = parts;
        }
    });
    if (best_count < 0) throw domain_error("oracle: no admissible partition");
    OracleResult out;
    out.density = BigRational(best_count, binomial(n, profile.s()));
    std::vector<int> sizes = best_parts;
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    out.witness = complete_multipartite(PartiteProfile(sizes));
    out.graphs_examined = examined;
    out.constraint = "complete multipartite graphs on " + std::to_string(n) +
                     " vertices with at most " + std::to_string(max_parts) + " parts";
    return out;
}

}  // namespace ind
