#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "inducibility/combinatorics.hpp"
#include "inducibility/errors.hpp"
#include "inducibility/graph.hpp"
#include "inducibility/profile.hpp"
#include "inducibility/rational.hpp"

namespace ind {

// ----- Points on the probability simplex -----

// Either exact rational coordinates summing to exactly 1, or numeric
// coordinates summing to 1 within 1e-12 (entries >= -1e-15 clamped to 0).
class SimplexPoint {
public:
    static SimplexPoint from_exact(std::vector<BigRational> coords) {
        if (coords.empty()) throw domain_error("simplex point: no coordinates");
        BigRational sum(0);
        for (const auto& c : coords) {
            if (c < 0) throw domain_error("simplex point: negative coordinate");
            sum += c;
        }
        if (sum != 1) throw domain_error("simplex point: coordinates must sum to 1");
        SimplexPoint p;
        p.exact_ = std::move(coords);
        return p;
    }

    static SimplexPoint from_numeric(std::vector<double> coords) {
        if (coords.empty()) throw domain_error("simplex point: no coordinates");
        double sum = 0.0;
        for (double& c : coords) {
            if (!(c >= -1e-15))
                throw domain_error("simplex point: negative or non-finite coordinate");
            if (c < 0.0) c = 0.0;
            sum += c;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw domain_error("simplex point: coordinates must sum to 1 within 1e-12");
        SimplexPoint p;
        p.numeric_ = std::move(coords);
        return p;
    }

    // Exact (1/parts, ..., 1/parts), padded with zeros to dimension m.
    static SimplexPoint equipartition(int parts, int m = 0) {
        if (parts < 1) throw domain_error("simplex point: parts must be >= 1");
        if (m < parts) m = parts;
        std::vector<BigRational> coords(static_cast<size_t>(m), BigRational(0));
        for (int i = 0; i < parts; ++i) coords[static_cast<size_t>(i)] = BigRational(1, parts);
        return from_exact(std::move(coords));
    }

    bool is_exact() const { return !exact_.empty(); }
    int dim() const {
        return static_cast<int>(is_exact() ? exact_.size() : numeric_.size());
    }

    const std::vector<BigRational>& exact_coords() const {
        if (!is_exact()) throw domain_error("simplex point: not exact");
        return exact_;
    }
    const std::vector<double>& numeric_coords() const {
        if (is_exact()) throw domain_error("simplex point: not numeric");
        return numeric_;
    }

    // Coordinates as exact rationals; numeric doubles convert exactly.
    std::vector<BigRational> as_exact() const {
        if (is_exact()) return exact_;
        std::vector<BigRational> out;
        out.reserve(numeric_.size());
        for (double c : numeric_) out.push_back(rational_from_double(c));
        return out;
    }

    std::vector<double> as_numeric() const {
        if (!is_exact()) return numeric_;
        std::vector<double> out;
        out.reserve(exact_.size());
        for (const auto& c : exact_) out.push_back(to_double(c));
        return out;
    }

    // Same point with a zero coordinate appended.
    SimplexPoint with_zero_appended() const {
        SimplexPoint p = *this;
        if (p.is_exact())
            p.exact_.push_back(BigRational(0));
        else
            p.numeric_.push_back(0.0);
        return p;
    }

private:
    std::vector<BigRational> exact_;
    std::vector<double> numeric_;
};

// ----- Induced-density polynomial of a complete multipartite target -----

// Density of K_{a_1,...,a_r} in the complete multipartite limit object with
// part weights (x_1,...,x_m): the symmetric polynomial whose monomials place
// the part sizes on distinct coordinates, every coefficient the multinomial
// s!/(a_1!...a_r!). Stored canonically as one sorted exponent pattern per
// orbit; the symmetric closure is walked on demand.
class DensityPolynomial {
public:
    DensityPolynomial(PartiteProfile profile, int m, std::map<std::vector<int>, BigInt> canonical)
        : profile_(std::move(profile)), m_(m), canonical_(std::move(canonical)) {}

    int m() const { return m_; }
    const PartiteProfile& profile() const { return profile_; }
    bool is_zero() const { return canonical_.empty(); }
    int degree() const { return profile_.s(); }

    // Canonical orbit patterns (exponents sorted nonincreasing) -> coefficient.
    const std::map<std::vector<int>, BigInt>& canonical_monomials() const { return canonical_; }

    // Visits every distinct monomial of the symmetric closure once, in
    // ascending lexicographic exponent order within each orbit.
    template <typename Fn>
    void for_each_monomial(Fn&& fn) const {
        for (const auto& [pattern, coeff] : canonical_) {
            std::vector<int> e = pattern;
            std::sort(e.begin(), e.end());
            do {
                fn(e, coeff);
            } while (std::next_permutation(e.begin(), e.end()));
        }
    }

    // Full symmetric closure, ascending lexicographic order.
    std::vector<std::pair<std::vector<int>, BigInt>> expanded() const {
        std::vector<std::pair<std::vector<int>, BigInt>> out;
        for_each_monomial([&](const std::vector<int>& e, const BigInt& c) {
            out.emplace_back(e, c);
        });
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    size_t monomial_count() const {
        size_t n = 0;
        for_each_monomial([&](const std::vector<int>&, const BigInt&) { ++n; });
        return n;
    }

    BigRational evaluate_exact(const SimplexPoint& point) const {
        const auto x = point.as_exact();
        if (static_cast<int>(x.size()) != m_)
            throw domain_error("evaluate: point dimension mismatch");
        // Power table x_i^e for e <= degree.
        const int s = degree();
        std::vector<std::vector<BigRational>> pw(x.size());
        for (size_t i = 0; i < x.size(); ++i) {
            pw[i].resize(static_cast<size_t>(s) + 1);
            pw[i][0] = BigRational(1);
            for (int e = 1; e <= s; ++e) pw[i][static_cast<size_t>(e)] = pw[i][static_cast<size_t>(e - 1)] * x[i];
        }
        BigRational total(0);
        for_each_monomial([&](const std::vector<int>& e, const BigInt& c) {
            BigRational term(c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) term *= pw[i][static_cast<size_t>(e[i])];
            total += term;
        });
        return total;
    }

    double evaluate_numeric(const SimplexPoint& point) const {
        const auto x = point.as_numeric();
        if (static_cast<int>(x.size()) != m_)
            throw domain_error("evaluate: point dimension mismatch");
        double total = 0.0;
        for_each_monomial([&](const std::vector<int>& e, const BigInt& c) {
            double term = static_cast<double>(c);
            for (size_t i = 0; i < e.size(); ++i)
                for (int rep = 0; rep < e[i]; ++rep) term *= x[i];
            total += term;
        });
        return total;
    }

private:
    PartiteProfile profile_;
    int m_ = 0;
    std::map<std::vector<int>, BigInt> canonical_;
};

// P_{F,k} with m = k-1 part weights; identically zero when m < r.
inline DensityPolynomial density_polynomial(const PartiteProfile& profile, int m) {
    if (m < 1) throw domain_error("density_polynomial: m must be >= 1");
    std::map<std::vector<int>, BigInt> canonical;
    if (m >= profile.r()) {
        std::vector<int> pattern = profile.sizes();  // sorted nonincreasing
        pattern.resize(static_cast<size_t>(m), 0);
        canonical.emplace(std::move(pattern), multinomial(profile));
    }
    return DensityPolynomial(profile, m, std::move(canonical));
}

// Numeric gradient (partial derivatives) at a point.
inline std::vector<double> gradient(const DensityPolynomial& poly, const SimplexPoint& point) {
    const auto x = point.as_numeric();
    if (static_cast<int>(x.size()) != poly.m())
        throw domain_error("gradient: point dimension mismatch");
    std::vector<double> g(x.size(), 0.0);
    poly.for_each_monomial([&](const std::vector<int>& e, const BigInt& c) {
        for (size_t a = 0; a < e.size(); ++a) {
            if (e[a] == 0) continue;
            double term = static_cast<double>(c) * e[a];
            for (size_t b = 0; b < e.size(); ++b) {
                const int exp = (b == a) ? e[b] - 1 : e[b];
                for (int rep = 0; rep < exp; ++rep) term *= x[b];
            }
            g[a] += term;
        }
    });
    return g;
}

// Exact gradient at an exact point.
inline std::vector<BigRational> exact_gradient(const DensityPolynomial& poly,
                                               const SimplexPoint& point) {
    const auto x = point.as_exact();
    if (static_cast<int>(x.size()) != poly.m())
        throw domain_error("exact_gradient: point dimension mismatch");
    const int s = poly.degree();
    std::vector<std::vector<BigRational>> pw(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        pw[i].resize(static_cast<size_t>(s) + 1);
        pw[i][0] = BigRational(1);
        for (int e = 1; e <= s; ++e)
            pw[i][static_cast<size_t>(e)] = pw[i][static_cast<size_t>(e - 1)] * x[i];
    }
    std::vector<BigRational> g(x.size(), BigRational(0));
    poly.for_each_monomial([&](const std::vector<int>& e, const BigInt& c) {
        for (size_t a = 0; a < e.size(); ++a) {
            if (e[a] == 0) continue;
            BigRational term(BigInt(c) * e[a]);
            for (size_t b = 0; b < e.size(); ++b) {
                const int exp = (b == a) ? e[b] - 1 : e[b];
                if (exp > 0) term *= pw[b][static_cast<size_t>(exp)];
            }
            if (term == 0) continue;
            g[a] += term;
        }
    });
    return g;
}

// ----- Univariate restriction along a coordinate pair -----

// Q(a) = P(x with the i,j mass S = x_i + x_j split as (aS, (1-a)S)).
// Coefficients exact; Q(a) = Q(1-a) because P is symmetric.
struct UnivariateRestriction {
    std::vector<BigRational> coefficients;  // Q(a) = sum_d coefficients[d] a^d
    BigRational mass;
    int i = 0;
    int j = 0;

    BigRational evaluate_exact(const BigRational& a) const {
        BigRational acc(0);
        for (size_t d = coefficients.size(); d-- > 0;) acc = acc * a + coefficients[d];
        return acc;
    }

    double evaluate(double a) const {
        double acc = 0.0;
        for (size_t d = coefficients.size(); d-- > 0;) acc = acc * a + to_double(coefficients[d]);
        return acc;
    }

    std::vector<double> coefficients_numeric() const {
        std::vector<double> out;
        out.reserve(coefficients.size());
        for (const auto& c : coefficients) out.push_back(to_double(c));
        return out;
    }
};

inline UnivariateRestriction split_restriction(const DensityPolynomial& poly,
                                               const SimplexPoint& point, int i, int j) {
    const int m = poly.m();
    if (i < 0 || i >= m || j < 0 || j >= m || i == j)
        throw domain_error("split_restriction: bad coordinate pair");
    const auto x = point.as_exact();
    if (static_cast<int>(x.size()) != m)
        throw domain_error("split_restriction: point dimension mismatch");
    const int s = poly.degree();
    UnivariateRestriction out;
    out.i = i;
    out.j = j;
    out.mass = x[static_cast<size_t>(i)] + x[static_cast<size_t>(j)];
    out.coefficients.assign(static_cast<size_t>(s) + 1, BigRational(0));
    const BigRational& S = out.mass;
    poly.for_each_monomial([&](const std::vector<int>& e, const BigInt& c) {
        const int ei = e[static_cast<size_t>(i)], ej = e[static_cast<size_t>(j)];
        BigRational base(c);
        for (size_t w = 0; w < e.size(); ++w) {
            if (static_cast<int>(w) == i || static_cast<int>(w) == j) continue;
            for (int rep = 0; rep < e[w]; ++rep) base *= x[w];
        }
        if (base == 0) return;
        base *= rational_pow(S, ei + ej);
        if (base == 0) return;
        // a^ei (1-a)^ej = sum_t C(ej,t) (-1)^t a^(ei+t)
        for (int t = 0; t <= ej; ++t) {
            BigRational contrib = base * BigRational(binomial(ej, t));
            if (t % 2) contrib = -contrib;
            out.coefficients[static_cast<size_t>(ei + t)] += contrib;
        }
    });
    while (out.coefficients.size() > 1 && out.coefficients.back() == 0)
        out.coefficients.pop_back();
    return out;
}

// ----- Finite complete multipartite approximation -----

// Exact density of K_profile in the n-vertex complete multipartite graph with
// part sizes n*x_i (which must be integral).
inline BigRational finite_approximation(const PartiteProfile& profile, const SimplexPoint& point,
                                        int n) {
    if (n < 1) throw domain_error("finite_approximation: n must be >= 1");
    if (n > Graph::kMaxVertices)
        throw capacity_error("finite_approximation: more than 64 vertices");
    const auto x = point.as_exact();
    std::vector<int> sizes;
    for (const auto& c : x) {
        BigRational scaled = c * n;
        if (den(scaled) != 1)
            throw domain_error("finite_approximation: n*x_i must be integral");
        const BigInt v = num(scaled);
        if (v > 0) sizes.push_back(static_cast<int>(v));
    }
    if (sizes.empty()) throw domain_error("finite_approximation: all parts empty");
    const Graph g = complete_multipartite(PartiteProfile(std::move(sizes)));
    const Graph f = complete_multipartite(profile);
    return induced_density(f, g);
}

}  // namespace ind
