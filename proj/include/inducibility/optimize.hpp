#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "inducibility/density.hpp"
#include "inducibility/errors.hpp"
#include "inducibility/profile.hpp"
#include "inducibility/rational.hpp"
#include "inducibility/symmetrize.hpp"

namespace ind {

struct OptimizerConfig {
    int restarts = 64;                 // total starts, structured ones included
    int max_iterations = 5000;         // gradient iterations per start
    double gradient_tolerance = 1e-12; // projected-gradient norm target
    std::uint64_t seed = 0;
    double merge_threshold = 1e-9;     // coordinates below this are zeroed
    int threads = 1;
};

struct OptimizationReport {
    std::vector<double> point;  // sorted nonincreasing
    double value = 0.0;
    std::optional<BigRational> exact_value;              // certified candidate match
    std::optional<std::vector<BigRational>> exact_point; // its coordinates, sorted
    int restarts_used = 0;
    long long iterations = 0;  // gradient iterations summed over starts
    double projected_gradient_norm = 0.0;
    bool stationary = false;
};

struct nonconvergence_error : std::runtime_error {
    OptimizationReport report;  // best effort at the time of failure
    explicit nonconvergence_error(OptimizationReport rep)
        : std::runtime_error("optimizer: no start reached stationarity"),
          report(std::move(rep)) {}
};

namespace detail {

// Euclidean projection onto the probability simplex.
inline void project_to_simplex(std::vector<double>& v) {
    const int m = static_cast<int>(v.size());
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cum = 0.0, theta = 0.0;
    int rho = 0;
    for (int i = 0; i < m; ++i) {
        cum += u[static_cast<size_t>(i)];
        const double t = (cum - 1.0) / (i + 1);
        if (u[static_cast<size_t>(i)] - t > 0) {
            rho = i;
            theta = t;
        }
    }
    (void)rho;
    for (double& x : v) x = std::max(x - theta, 0.0);
    // Numerical touch-up: exact renormalization of the support.
    double s = 0.0;
    for (double x : v) s += x;
    if (s > 0) for (double& x : v) x /= s;
}

// Closure monomial in index/exponent pairs, coefficient as double.
struct CompactMonomial {
    std::vector<std::pair<int, int>> nz;
    double coeff = 0.0;
};

inline std::vector<CompactMonomial> compact_closure(const DensityPolynomial& poly) {
    std::vector<CompactMonomial> out;
    poly.for_each_monomial([&](const std::vector<int>& e, const BigInt& c) {
        CompactMonomial mono;
        mono.coeff = static_cast<double>(c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) mono.nz.emplace_back(static_cast<int>(i), e[i]);
        out.push_back(std::move(mono));
    });
    return out;
}

inline double eval_value(const std::vector<CompactMonomial>& monos, const std::vector<double>& x) {
    double total = 0.0;
    for (const auto& mono : monos) {
        double term = mono.coeff;
        for (const auto& [i, e] : mono.nz)
            for (int rep = 0; rep < e; ++rep) term *= x[static_cast<size_t>(i)];
        total += term;
    }
    return total;
}

inline double eval_value_grad(const std::vector<CompactMonomial>& monos,
                              const std::vector<double>& x, std::vector<double>& g) {
    std::fill(g.begin(), g.end(), 0.0);
    double total = 0.0;
    for (const auto& mono : monos) {
        double term = mono.coeff;
        for (const auto& [i, e] : mono.nz)
            for (int rep = 0; rep < e; ++rep) term *= x[static_cast<size_t>(i)];
        total += term;
        for (const auto& [a, ea] : mono.nz) {
            double part = mono.coeff * ea;
            for (const auto& [b, eb] : mono.nz) {
                const int exp = (b == a) ? eb - 1 : eb;
                for (int rep = 0; rep < exp; ++rep) part *= x[static_cast<size_t>(b)];
            }
            g[static_cast<size_t>(a)] += part;
        }
    }
    return total;
}

inline double pg_norm(const std::vector<double>& x, const std::vector<double>& g) {
    std::vector<double> y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] + g[i];
    project_to_simplex(y);
    double n2 = 0.0;
    for (size_t i = 0; i < x.size(); ++i) n2 += (y[i] - x[i]) * (y[i] - x[i]);
    return std::sqrt(n2);
}

// Numeric coefficients of Q(a) = P(x with the (i,j) mass split as (aS,(1-a)S)).
inline std::vector<double> numeric_split_coeffs(const std::vector<CompactMonomial>& monos,
                                                const std::vector<double>& x, int i, int j,
                                                int degree) {
    std::vector<double> c(static_cast<size_t>(degree) + 1, 0.0);
    const double S = x[static_cast<size_t>(i)] + x[static_cast<size_t>(j)];
    for (const auto& mono : monos) {
        int ei = 0, ej = 0;
        double base = mono.coeff;
        for (const auto& [w, e] : mono.nz) {
            if (w == i) {
                ei = e;
            } else if (w == j) {
                ej = e;
            } else {
                for (int rep = 0; rep < e; ++rep) base *= x[static_cast<size_t>(w)];
            }
        }
        if (base == 0.0) continue;
        for (int rep = 0; rep < ei + ej; ++rep) base *= S;
        if (base == 0.0) continue;
        // a^ei (1-a)^ej expanded binomially.
        double binom = 1.0;
        for (int t = 0; t <= ej; ++t) {
            const double contrib = (t % 2) ? -base * binom : base * binom;
            c[static_cast<size_t>(ei + t)] += contrib;
            binom = binom * (ej - t) / (t + 1);
        }
    }
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    return c;
}

inline double eval_poly1(const std::vector<double>& c, double a) {
    double acc = 0.0;
    for (size_t d = c.size(); d-- > 0;) acc = acc * a + c[d];
    return acc;
}

// Real roots of the derivative of Q inside (0,1), by sign-change bisection.
inline std::vector<double> critical_points(const std::vector<double>& c) {
    if (c.size() < 3) return {};
    std::vector<double> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
    auto dq = [&](double a) {
        double acc = 0.0;
        for (size_t i = d.size(); i-- > 0;) acc = acc * a + d[i];
        return acc;
    };
    std::vector<double> roots;
    constexpr int kGrid = 128;
    double prev_a = 0.0, prev_v = dq(0.0);
    for (int i = 1; i <= kGrid; ++i) {
        const double a = static_cast<double>(i) / kGrid;
        const double v = dq(a);
        if ((prev_v < 0) != (v < 0) || v == 0.0) {
            double lo = prev_a, hi = a, flo = prev_v;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = dq(mid);
                if ((flo < 0) == (fm < 0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            const double root = 0.5 * (lo + hi);
            if (root > 0.0 && root < 1.0) roots.push_back(root);
        }
        prev_a = a;
        prev_v = v;
    }
    return roots;
}

// Hessian of the polynomial restricted to the index set `idx`.
inline void eval_hessian(const std::vector<CompactMonomial>& monos, const std::vector<double>& x,
                         const std::vector<int>& idx, std::vector<double>& h) {
    const size_t d = idx.size();
    std::fill(h.begin(), h.end(), 0.0);
    for (const auto& mono : monos) {
        for (size_t ai = 0; ai < d; ++ai) {
            const int a = idx[ai];
            int ea = 0;
            for (const auto& [w, e] : mono.nz)
                if (w == a) ea = e;
            if (ea == 0) continue;
            for (size_t bi = ai; bi < d; ++bi) {
                const int b = idx[bi];
                int eb = 0;
                for (const auto& [w, e] : mono.nz)
                    if (w == b) eb = e;
                double coeff;
                if (a == b) {
                    if (ea < 2) continue;
                    coeff = mono.coeff * ea * (ea - 1);
                } else {
                    if (eb == 0) continue;
                    coeff = mono.coeff * ea * eb;
                }
                double term = coeff;
                for (const auto& [w, e] : mono.nz) {
                    int exp = e;
                    if (w == a) exp -= 1;
                    if (w == b) exp -= 1;
                    for (int rep = 0; rep < exp; ++rep) term *= x[static_cast<size_t>(w)];
                }
                h[ai * d + bi] += term;
                if (bi != ai) h[bi * d + ai] += term;
            }
        }
    }
}

// Dense linear solve with partial pivoting; false on (near-)singular systems.
inline bool solve_linear(std::vector<double>& a, std::vector<double>& b, int n) {
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row)
            if (std::abs(a[static_cast<size_t>(row) * n + col]) >
                std::abs(a[static_cast<size_t>(pivot) * n + col]))
                pivot = row;
        if (std::abs(a[static_cast<size_t>(pivot) * n + col]) < 1e-300) return false;
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(a[static_cast<size_t>(col) * n + c],
                          a[static_cast<size_t>(pivot) * n + c]);
            std::swap(b[static_cast<size_t>(col)], b[static_cast<size_t>(pivot)]);
        }
        const double inv = 1.0 / a[static_cast<size_t>(col) * n + col];
        for (int row = col + 1; row < n; ++row) {
            const double factor = a[static_cast<size_t>(row) * n + col] * inv;
            if (factor == 0.0) continue;
            for (int c = col; c < n; ++c)
                a[static_cast<size_t>(row) * n + c] -= factor * a[static_cast<size_t>(col) * n + c];
            b[static_cast<size_t>(row)] -= factor * b[static_cast<size_t>(col)];
        }
    }
    for (int row = n - 1; row >= 0; --row) {
        double acc = b[static_cast<size_t>(row)];
        for (int c = row + 1; c < n; ++c)
            acc -= a[static_cast<size_t>(row) * n + c] * b[static_cast<size_t>(c)];
        b[static_cast<size_t>(row)] = acc / a[static_cast<size_t>(row) * n + row];
    }
    return true;
}

// Newton refinement of the KKT system on the active support: drives
// "partials equal on the support, total mass 1" to machine precision, which
// plain projected-gradient ascent cannot reach near a flat optimum.
inline void newton_polish(const std::vector<CompactMonomial>& monos, std::vector<double>& x,
                          const OptimizerConfig& cfg) {
    const int m = static_cast<int>(x.size());
    std::vector<int> support;
    for (int i = 0; i < m; ++i)
        if (x[static_cast<size_t>(i)] > 0.0) support.push_back(i);
    const int d = static_cast<int>(support.size());
    if (d < 2) return;
    std::vector<double> g(static_cast<size_t>(m));
    std::vector<double> hess(static_cast<size_t>(d) * d);
    std::vector<double> a(static_cast<size_t>(d + 1) * (d + 1));
    std::vector<double> rhs(static_cast<size_t>(d) + 1);
    std::vector<double> best_x = x;
    eval_value_grad(monos, x, g);
    double lambda = 0.0;
    for (int i : support) lambda += g[static_cast<size_t>(i)];
    lambda /= d;
    double best_res = 0.0;
    for (int i : support) best_res = std::max(best_res, std::abs(g[static_cast<size_t>(i)] - lambda));
    for (int iter = 0; iter < 20; ++iter) {
        if (best_res <= cfg.gradient_tolerance * 1e-2) break;
        eval_hessian(monos, x, support, hess);
        // KKT system: [H 1; 1^T 0] [dx; -dlambda] = [lambda - g; 1 - sum x]
        std::fill(a.begin(), a.end(), 0.0);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j)
                a[static_cast<size_t>(i) * (d + 1) + j] = hess[static_cast<size_t>(i) * d + j];
            a[static_cast<size_t>(i) * (d + 1) + d] = 1.0;
            a[static_cast<size_t>(d) * (d + 1) + i] = 1.0;
            rhs[static_cast<size_t>(i)] = lambda - g[static_cast<size_t>(support[static_cast<size_t>(i)])];
        }
        double mass = 0.0;
        for (int i : support) mass += x[static_cast<size_t>(i)];
        rhs[static_cast<size_t>(d)] = 1.0 - mass;
        std::vector<double> mat = a, sol = rhs;
        if (!solve_linear(mat, sol, d + 1)) break;
        bool feasible = true;
        for (int i = 0; i < d; ++i) {
            const size_t xi = static_cast<size_t>(support[static_cast<size_t>(i)]);
            x[xi] += sol[static_cast<size_t>(i)];
            if (x[xi] < 0.0) feasible = false;
        }
        lambda -= sol[static_cast<size_t>(d)];
        if (!feasible) {
            x = best_x;
            break;
        }
        eval_value_grad(monos, x, g);
        double res = 0.0;
        for (int i : support) res = std::max(res, std::abs(g[static_cast<size_t>(i)] - lambda));
        if (res < best_res) {
            best_res = res;
            best_x = x;
        } else if (res > best_res * 10.0) {
            break;  // diverging; keep the best iterate
        }
    }
    x = best_x;
}

struct StartOutcome {
    std::vector<double> x;
    double value = 0.0;
    long long iterations = 0;
    double pg = 0.0;
    bool stationary = false;
};

// One local run: projected gradient ascent with backtracking, then exact
// pairwise split line searches, alternating until neither phase improves.
inline StartOutcome run_start(const DensityPolynomial& poly,
                              const std::vector<CompactMonomial>& monos, std::vector<double> x,
                              const OptimizerConfig& cfg) {
    const int m = static_cast<int>(x.size());
    project_to_simplex(x);
    std::vector<double> g(static_cast<size_t>(m)), y(static_cast<size_t>(m));
    StartOutcome out;
    double v = eval_value(monos, x);
    double step = 1.0;
    for (int outer = 0; outer < 8; ++outer) {
        bool outer_progress = false;
        // Gradient phase.
        while (out.iterations < cfg.max_iterations) {
            v = eval_value_grad(monos, x, g);
            const double pgn = pg_norm(x, g);
            if (pgn <= cfg.gradient_tolerance) break;
            bool accepted = false;
            for (double st = std::min(step * 4.0, 1e6); st >= 1e-18; st *= 0.5) {
                double lin = 0.0;
                for (int i = 0; i < m; ++i) y[static_cast<size_t>(i)] = x[static_cast<size_t>(i)] + st * g[static_cast<size_t>(i)];
                project_to_simplex(y);
                for (int i = 0; i < m; ++i)
                    lin += g[static_cast<size_t>(i)] * (y[static_cast<size_t>(i)] - x[static_cast<size_t>(i)]);
                const double vy = eval_value(monos, y);
                if (vy > v && vy >= v + 1e-4 * lin - 1e-18) {
                    x = y;
                    v = vy;
                    step = st;
                    accepted = true;
                    break;
                }
            }
            ++out.iterations;
            if (!accepted) break;  // numerical floor reached
            outer_progress = true;
        }
        // Pairwise phase: optimal split of each coordinate pair's mass via the
        // univariate restriction (balance or merge moves).
        bool polished = false;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                const double S = x[static_cast<size_t>(i)] + x[static_cast<size_t>(j)];
                if (S <= 0.0) continue;
                const auto qc = numeric_split_coeffs(monos, x, i, j, poly.degree());
                const double a_cur = x[static_cast<size_t>(i)] / S;
                const double q_cur = eval_poly1(qc, a_cur);
                std::vector<double> cands = {0.0, 0.5, 1.0};
                for (double root : critical_points(qc)) cands.push_back(root);
                double best_a = a_cur, best_q = q_cur;
                for (double a : cands) {
                    const double qa = eval_poly1(qc, a);
                    if (qa > best_q) {
                        best_q = qa;
                        best_a = a;
                    }
                }
                if (best_a != a_cur && best_q > q_cur + 1e-16) {
                    x[static_cast<size_t>(i)] = best_a * S;
                    x[static_cast<size_t>(j)] = (1.0 - best_a) * S;
                    polished = true;
                }
            }
        }
        // Merge move: drop negligible coordinates, renormalize.
        double dropped = 0.0;
        for (double& xi : x)
            if (xi != 0.0 && xi < cfg.merge_threshold) {
                dropped += xi;
                xi = 0.0;
            }
        if (dropped > 0.0) {
            double s = 0.0;
            for (double xi : x) s += xi;
            if (s > 0)
                for (double& xi : x) xi /= s;
            polished = true;
        }
        if (polished) {
            const double nv = eval_value(monos, x);
            if (nv > v) outer_progress = true;
            v = nv;
        }
        if (!outer_progress) break;
    }
    newton_polish(monos, x, cfg);
    v = eval_value_grad(monos, x, g);
    out.x = std::move(x);
    out.value = v;
    out.pg = pg_norm(out.x, g);
    out.stationary = out.pg <= cfg.gradient_tolerance;
    return out;
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 over the pair, for independent per-restart streams
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline bool lex_greater_sorted(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> sa = a, sb = b;
    std::sort(sa.begin(), sa.end(), std::greater<double>());
    std::sort(sb.begin(), sb.end(), std::greater<double>());
    return sa > sb;
}

inline std::pair<OptimizationReport, bool> maximize_impl(const DensityPolynomial& poly,
                                                         const OptimizerConfig& cfg) {
    const int m = poly.m();
    const int r = poly.profile().r();
    if (poly.is_zero()) {
        OptimizationReport rep;
        rep.point.assign(static_cast<size_t>(m), 0.0);
        rep.point[0] = 1.0;
        rep.value = 0.0;
        rep.exact_value = BigRational(0);
        std::vector<BigRational> ep(static_cast<size_t>(m), BigRational(0));
        ep[0] = BigRational(1);
        rep.exact_point = std::move(ep);
        rep.stationary = true;
        return {rep, true};
    }
    const auto monos = compact_closure(poly);
    // Structured starts: one equipartition per feasible part count.
    std::vector<std::vector<double>> starts;
    for (int parts = r; parts <= m; ++parts) {
        std::vector<double> x(static_cast<size_t>(m), 0.0);
        for (int i = 0; i < parts; ++i) x[static_cast<size_t>(i)] = 1.0 / parts;
        starts.push_back(std::move(x));
    }
    const int total = std::max(cfg.restarts, static_cast<int>(starts.size()));
    // Random starts: normalized exponential spacings, one stream per restart.
    for (int idx = static_cast<int>(starts.size()); idx < total; ++idx) {
        std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(idx)));
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        std::vector<double> x(static_cast<size_t>(m));
        double s = 0.0;
        for (double& xi : x) {
            xi = -std::log1p(-uni(rng));
            s += xi;
        }
        for (double& xi : x) xi /= s;
        starts.push_back(std::move(x));
    }
    std::vector<StartOutcome> outcomes(starts.size());
    const int threads = std::max(1, cfg.threads);
    if (threads == 1) {
        for (size_t i = 0; i < starts.size(); ++i)
            outcomes[i] = run_start(poly, monos, starts[i], cfg);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t]() {
                for (size_t i = static_cast<size_t>(t); i < starts.size();
                     i += static_cast<size_t>(threads))
                    outcomes[i] = run_start(poly, monos, starts[i], cfg);
            });
        }
        for (auto& th : pool) th.join();
    }
    // Deterministic reduce: larger value wins; exact ties prefer the
    // lexicographically larger sorted point.
    size_t best = 0;
    long long iters = 0;
    for (size_t i = 0; i < outcomes.size(); ++i) {
        iters += outcomes[i].iterations;
        if (i == 0) continue;
        if (outcomes[i].value > outcomes[best].value ||
            (outcomes[i].value == outcomes[best].value &&
             lex_greater_sorted(outcomes[i].x, outcomes[best].x)))
            best = i;
    }
    bool any_stationary = false;
    for (const auto& oc : outcomes) any_stationary |= oc.stationary;
    OptimizationReport rep;
    rep.point = outcomes[best].x;
    std::sort(rep.point.begin(), rep.point.end(), std::greater<double>());
    rep.value = outcomes[best].value;
    rep.restarts_used = static_cast<int>(outcomes.size());
    rep.iterations = iters;
    rep.projected_gradient_norm = outcomes[best].pg;
    rep.stationary = outcomes[best].stationary;
    return {rep, any_stationary};
}

// Exact KKT stationarity over the simplex: partial derivatives equal on the
// support and no larger off it. This certifies the candidate is a genuine
// stationary point, so rational fits near irrational optima never certify.
inline bool exact_kkt_stationary(const DensityPolynomial& poly,
                                 const std::vector<BigRational>& point) {
    const auto g = exact_gradient(poly, SimplexPoint::from_exact(point));
    std::optional<BigRational> lambda;
    for (size_t i = 0; i < point.size(); ++i)
        if (point[i] > 0) {
            if (!lambda)
                lambda = g[i];
            else if (g[i] != *lambda)
                return false;
        }
    if (!lambda) return false;
    for (size_t i = 0; i < point.size(); ++i)
        if (point[i] == 0 && g[i] > *lambda) return false;
    return true;
}

// Best rational p/q with q <= max_den within tol of x (continued fractions).
inline std::optional<BigRational> fit_rational(double x, long long max_den, double tol) {
    if (x < 0 || !(x == x)) return std::nullopt;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = x;
    for (int it = 0; it < 64; ++it) {
        const double fl = std::floor(frac);
        if (fl > 1e17) break;
        const long long a = static_cast<long long>(fl);
        const long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 <= 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - x) <= tol) return BigRational(BigInt(p1), BigInt(q1));
        const double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    return std::nullopt;
}

}  // namespace detail

// Global maximum of the density polynomial over the probability simplex.
inline OptimizationReport maximize_on_simplex(const DensityPolynomial& poly,
                                              const OptimizerConfig& cfg = {}) {
    if (poly.is_zero())
        throw domain_error("maximize_on_simplex: polynomial is identically zero (m < r)");
    auto [rep, ok] = detail::maximize_impl(poly, cfg);
    if (!ok) throw nonconvergence_error(std::move(rep));
    return rep;
}

// i_k(F) for complete multipartite F via the (k-1)-part density polynomial,
// with exact certification when a structured candidate matches the numeric
// optimum within 1e-9.
inline OptimizationReport inducibility_partite(const PartiteProfile& profile, int k,
                                               const OptimizerConfig& cfg = {}) {
    if (k < 3) throw domain_error("inducibility_partite: k must be >= 3");
    const int m = k - 1;
    const int r = profile.r();
    const DensityPolynomial poly = density_polynomial(profile, m);
    auto [rep, any_stationary] = detail::maximize_impl(poly, cfg);
    if (!poly.is_zero()) {
        // Structured candidates: equipartitions and the fitted
        // one-distinguished-coordinate pattern.
        std::vector<std::vector<BigRational>> candidates;
        for (int parts = r; parts <= m; ++parts)
            candidates.push_back(SimplexPoint::equipartition(parts, m).exact_coords());
        if (m >= 2 && !rep.point.empty()) {
            const double beta_hat = (1.0 - rep.point.front()) / (m - 1);
            if (auto beta = detail::fit_rational(beta_hat, 100000, 1e-6)) {
                const BigRational big = BigRational(1) - BigRational(m - 1) * (*beta);
                if (*beta >= 0 && big >= 0) {
                    std::vector<BigRational> pt(static_cast<size_t>(m), *beta);
                    pt[0] = big;
                    candidates.push_back(std::move(pt));
                }
            }
        }
        for (auto& cand : candidates) {
            const BigRational val = poly.evaluate_exact(SimplexPoint::from_exact(cand));
            const double vd = to_double(val);
            std::vector<BigRational> sorted_cand = cand;
            std::sort(sorted_cand.begin(), sorted_cand.end(),
                      [](const BigRational& a, const BigRational& b) { return a > b; });
            const bool close = std::abs(vd - rep.value) <= 1e-9;
            const bool better = vd > rep.value + 1e-12;
            if (better) {
                // The numeric search fell short of a structured point.
                rep.value = vd;
                rep.point.clear();
                for (const auto& c : sorted_cand) rep.point.push_back(to_double(c));
                rep.exact_value.reset();
                rep.exact_point.reset();
                std::vector<double> g(static_cast<size_t>(m));
                const auto monos = detail::compact_closure(poly);
                detail::eval_value_grad(monos, rep.point, g);
                rep.projected_gradient_norm = detail::pg_norm(rep.point, g);
                rep.stationary = rep.projected_gradient_norm <= cfg.gradient_tolerance;
                any_stationary = any_stationary || rep.stationary;
            }
            if ((better || close) && detail::exact_kkt_stationary(poly, sorted_cand)) {
                if (!rep.exact_value || val > *rep.exact_value) {
                    rep.exact_value = val;
                    rep.exact_point = sorted_cand;
                }
            }
        }
    }
    if (!any_stationary) throw nonconvergence_error(std::move(rep));
    return rep;
}

// ----- Part-count sweep toward the limit value -----

struct LimitEntry {
    int m = 0;
    double value = 0.0;
    std::optional<BigRational> exact;
};

struct LimitResult {
    std::vector<LimitEntry> entries;
    std::optional<int> stabilized_at;       // first m whose successor adds < 1e-10
    bool non_attainment_warning = false;    // two singleton parts: supremum only
};

inline LimitResult inducibility_limit(const PartiteProfile& profile, int m_max,
                                      const OptimizerConfig& cfg = {}) {
    const int r = profile.r();
    if (m_max < r) throw domain_error("inducibility_limit: m_max below the part count");
    LimitResult out;
    const auto& sizes = profile.sizes();
    out.non_attainment_warning =
        r >= 2 && sizes[static_cast<size_t>(r) - 1] == 1 && sizes[static_cast<size_t>(r) - 2] == 1;
    for (int m = r; m <= m_max; ++m) {
        const OptimizationReport rep = inducibility_partite(profile, m + 1, cfg);
        out.entries.push_back({m, rep.value, rep.exact_value});
    }
    for (size_t i = 0; i + 1 < out.entries.size(); ++i) {
        if (out.entries[i + 1].value - out.entries[i].value < 1e-10) {
            out.stabilized_at = out.entries[i].m;
            break;
        }
    }
    return out;
}

// ----- Distinct part sizes for strongly unbalanced targets -----

struct DistinctPartsResult {
    bool distinct = false;
    OptimizationReport report;
};

inline DistinctPartsResult check_distinct_parts(const PartiteProfile& profile, int k,
                                                double separation,
                                                const OptimizerConfig& cfg = {}) {
    if (!is_strongly_unbalanced(profile))
        throw domain_error("check_distinct_parts: profile is not strongly unbalanced");
    if (k <= profile.r())
        throw domain_error("check_distinct_parts: k must exceed the part count");
    if (separation <= 0) throw domain_error("check_distinct_parts: separation must be > 0");
    DistinctPartsResult out;
    out.report = inducibility_partite(profile, k, cfg);
    std::vector<double> support;
    for (double x : out.report.point)
        if (x > 0.0) support.push_back(x);
    out.distinct = true;
    for (size_t i = 0; i < support.size() && out.distinct; ++i)
        for (size_t j = i + 1; j < support.size() && out.distinct; ++j)
            if (std::abs(support[i] - support[j]) <= separation) out.distinct = false;
    return out;
}

}  // namespace ind
