#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "inducibility/combinatorics.hpp"
#include "inducibility/errors.hpp"
#include "inducibility/graph.hpp"
#include "inducibility/profile.hpp"
#include "inducibility/rational.hpp"

namespace ind {

// How a reported inducibility value is justified.
enum class Certificate {
    trivial_zero,                // k <= r: no copies survive the clique bound
    erdos_zykov,                 // complete target
    brown_sidorenko_bipartite,   // bipartite target, balanced optimum
    theorem_turan,               // balanced multipartite target, s <= 3r+1
    bs_condition,                // unbalanced-range condition forcing r parts
    conjectural                  // best known candidate, unproven
};

inline const char* certificate_name(Certificate c) {
    switch (c) {
        case Certificate::trivial_zero: return "trivial-zero";
        case Certificate::erdos_zykov: return "erdos-zykov";
        case Certificate::brown_sidorenko_bipartite: return "brown-sidorenko-bipartite";
        case Certificate::theorem_turan: return "theorem-turan";
        case Certificate::bs_condition: return "bs-condition";
        case Certificate::conjectural: return "conjectural";
    }
    return "unknown";
}

// Density of T(s,r) in the balanced complete multipartite limit object on
// ell parts:  ell! s! / ((ell-r)! (r-q)! q! (p!)^r (p+1)^q ell^s)
// with p = floor(s/r), q = s mod r.
inline BigRational g_value(int s, int r, long long ell) {
    if (r < 2 || r > s) throw domain_error("g_value: requires 2 <= r <= s");
    if (ell < r) throw domain_error("g_value: requires ell >= r");
    const int p = s / r, q = s % r;
    BigInt numerator = falling_factorial(ell, r) * factorial(s);
    BigInt denominator = factorial(r - q) * factorial(q);
    denominator *= int_pow(factorial(p), r);
    denominator *= int_pow(BigInt(p + 1), q);
    denominator *= int_pow(BigInt(ell), s);
    return BigRational(numerator, denominator);
}

// Successive ratio g(ell)/g(ell-1) = (ell/(ell-r)) (1 - 1/ell)^s.
inline BigRational f_ratio(int s, int r, long long ell) {
    if (r < 2 || r > s) throw domain_error("f_ratio: requires 2 <= r <= s");
    if (ell < r + 1) throw domain_error("f_ratio: requires ell >= r+1");
    BigRational ratio(BigInt(ell), BigInt(ell - r));
    return ratio * rational_pow(BigRational(BigInt(ell - 1), BigInt(ell)), s);
}

// Number of parts maximizing g: the largest ell with g(ell) > g(ell-1).
// Unbounded (supremum never attained) exactly when s == r.
struct ThresholdT {
    bool infinite = false;
    long long value = 0;
};

inline ThresholdT threshold_t(int s, int r) {
    if (r < 2 || r > s) throw domain_error("threshold_t: requires 2 <= r <= s");
    if (s == r) return {true, 0};
    constexpr long long kScanCap = 10'000'000;
    long long t = r;
    for (long long ell = r + 1;; ++ell) {
        if (ell > kScanCap) throw capacity_error("threshold_t: scan cap exceeded");
        if (f_ratio(s, r, ell) > 1)
            t = ell;
        else
            break;  // the ratio crosses 1 once and stays below
    }
    return {false, t};
}

// (1 + 1/r)^s (1 - s / (floor(s/r) (r+1))) > 1, evaluated exactly: when it
// holds, r parts stay optimal for every part budget.
inline bool bs_condition(int s, int r) {
    if (r < 2 || r >= s) throw domain_error("bs_condition: requires 2 <= r < s");
    const BigRational lhs = rational_pow(BigRational(BigInt(r + 1), BigInt(r)), s) *
                            (BigRational(1) - BigRational(BigInt(s), BigInt(s / r) * (r + 1)));
    return lhs > 1;
}

struct TuranResult {
    int s = 0;
    int r = 0;
    std::optional<int> k;
    bool t_infinite = false;
    long long t = 0;                  // meaningful when !t_infinite
    long long parts_used = 0;         // ell realizing the value; 0 when none
    bool attained = true;             // false only for the supremum-only cases
    BigRational value;
    std::vector<BigRational> graphon; // equipartition weights on parts_used parts
    Certificate certificate = Certificate::conjectural;

    bool proven() const { return certificate != Certificate::conjectural; }
};

namespace detail {

inline std::vector<BigRational> equipartition_weights(long long parts) {
    std::vector<BigRational> w;
    for (long long i = 0; i < parts; ++i) w.emplace_back(BigInt(1), BigInt(parts));
    return w;
}

}  // namespace detail

// i_k(T(s,r)) for the given k, or the part-unconstrained value i(T(s,r)).
inline TuranResult inducibility_turan(int s, int r, std::optional<int> k = std::nullopt) {
    if (r < 2 || r > s) throw domain_error("inducibility_turan: requires 2 <= r <= s");
    if (k && *k < 1) throw domain_error("inducibility_turan: k must be >= 1");
    TuranResult res;
    res.s = s;
    res.r = r;
    res.k = k;
    if (k && *k <= r) {
        res.certificate = Certificate::trivial_zero;
        res.t_infinite = (s == r);
        if (s > r) res.t = threshold_t(s, r).value;
        res.value = BigRational(0);
        return res;
    }
    if (s == r) {
        res.certificate = Certificate::erdos_zykov;
        res.t_infinite = true;
        if (k) {
            res.parts_used = *k - 1;
            res.value = g_value(s, r, res.parts_used);
            res.graphon = detail::equipartition_weights(res.parts_used);
        } else {
            res.value = BigRational(1);
            res.attained = false;
        }
        return res;
    }
    const ThresholdT tt = threshold_t(s, r);
    res.t = tt.value;
    if (r == 2)
        res.certificate = Certificate::brown_sidorenko_bipartite;
    else if (s <= 3 * r + 1)
        res.certificate = Certificate::theorem_turan;
    else if (bs_condition(s, r))
        res.certificate = Certificate::bs_condition;
    else
        res.certificate = Certificate::conjectural;
    res.parts_used = k ? std::min<long long>(*k - 1, res.t) : res.t;
    res.value = g_value(s, r, res.parts_used);
    res.graphon = detail::equipartition_weights(res.parts_used);
    return res;
}

// All rows 3 <= s <= 14, 2 <= r < s, ordered by (s, r).
inline std::vector<TuranResult> table14() {
    std::vector<TuranResult> rows;
    for (int s = 3; s <= 14; ++s)
        for (int r = 2; r < s; ++r) rows.push_back(inducibility_turan(s, r));
    return rows;
}

// CSV serialization of table14(); the golden file must match byte for byte.
inline std::string table14_csv() {
    std::ostringstream os;
    os << "s,r,t,numerator,denominator,certificate\n";
    for (const TuranResult& row : table14()) {
        os << row.s << "," << row.r << "," << row.t << "," << num(row.value).str() << ","
           << den(row.value).str() << "," << certificate_name(row.certificate) << "\n";
    }
    return os.str();
}

// Inducibility of a disjoint union of cliques, computed through the
// complement (complete multipartite with the clique sizes as parts).
inline TuranResult inducibility_clique_union(const std::vector<int>& clique_sizes) {
    const PartiteProfile profile(clique_sizes);
    const int s = profile.s(), r = profile.r();
    if (r == 1) {
        // Single clique: complement is an edgeless graph, density 1 in the
        // one-part limit object.
        TuranResult res;
        res.s = s;
        res.r = 1;
        res.certificate = Certificate::erdos_zykov;
        res.t = 1;
        res.parts_used = 1;
        res.value = BigRational(1);
        res.graphon = {BigRational(1)};
        return res;
    }
    const auto& sizes = profile.sizes();
    if (sizes.front() - sizes.back() <= 1) return inducibility_turan(s, r);
    // Unbalanced complement: report the best balanced candidate, unproven.
    TuranResult res;
    res.s = s;
    res.r = r;
    res.certificate = Certificate::conjectural;
    const ThresholdT tt = threshold_t(s, r);  // same ratio governs any profile
    res.t = tt.value;
    res.parts_used = tt.value;
    res.value = BigRational(multinomial(profile), pi_factor(profile)) *
                BigRational(falling_factorial(tt.value, r), int_pow(BigInt(tt.value), s));
    res.graphon = detail::equipartition_weights(res.parts_used);
    return res;
}

// ----- Bipartite targets: numeric Brown-Sidorenko optimum -----

struct BipartiteInducibility {
    int a = 0;
    int b = 0;
    double alpha = 0.0;  // optimal first-part weight, reported in (0, 1/2]
    double value = 0.0;  // C(a+b, a) / pi * h(alpha)
};

// Maximizes h(x) = x^a (1-x)^b + x^b (1-x)^a on [0, 1].
inline BipartiteInducibility bipartite_inducibility(int a, int b, double tol = 1e-12) {
    if (a < 1 || b < 1) throw domain_error("bipartite_inducibility: parts must be >= 1");
    if (static_cast<long>(a) * b <= 1)
        throw domain_error("bipartite_inducibility: single edge has no finite optimum");
    if (tol <= 0 || tol > 1e-2) throw domain_error("bipartite_inducibility: bad tolerance");
    auto h = [a, b](double x) {
        return std::pow(x, a) * std::pow(1.0 - x, b) + std::pow(x, b) * std::pow(1.0 - x, a);
    };
    BipartiteInducibility out;
    out.a = a;
    out.b = b;
    double alpha = 0.5;
    if (a != b) {
        // h is symmetric about 1/2; scan (0, 1/2], then golden-section refine.
        constexpr int kGrid = 4096;
        double best_x = 0.5, best_v = h(0.5);
        for (int i = 1; i <= kGrid; ++i) {
            const double x = 0.5 * i / kGrid;
            const double v = h(x);
            if (v > best_v) {
                best_v = v;
                best_x = x;
            }
        }
        double lo = std::max(0.0, best_x - 0.5 / kGrid);
        double hi = std::min(0.5, best_x + 0.5 / kGrid);
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
        double fc = h(c), fd = h(d);
        while (hi - lo > tol * 1e-2 && hi - lo > 1e-15) {
            if (fc < fd) {
                lo = c;
                c = d;
                fc = fd;
                d = lo + gr * (hi - lo);
                fd = h(d);
            } else {
                hi = d;
                d = c;
                fd = fc;
                c = hi - gr * (hi - lo);
                fc = h(c);
            }
        }
        alpha = 0.5 * (lo + hi);
    }
    const double pi = (a == b) ? 2.0 : 1.0;
    out.alpha = alpha;
    out.value = static_cast<double>(binomial(a + b, a)) / pi * h(alpha);
    return out;
}

}  // namespace ind
