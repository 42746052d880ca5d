// Tests for the simplex optimizer: frozen optima, exact certification,
// determinism, the growing-support limit scan, and the distinct-part check.
#include <catch2/catch_amalgamated.hpp>

#include <inducibility/inducibility.hpp>

#include <cmath>
#include <vector>

using namespace ind;

namespace {

OptimizerConfig quick_config(int restarts = 8) {
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    return cfg;
}

}  // namespace

TEST_CASE("balanced four-vertex target over four coordinates", "[optimize]") {
    OptimizationReport rep = inducibility_partite(PartiteProfile({2, 1, 1}), 5, quick_config());
    CHECK(rep.stationary);
    REQUIRE(rep.exact_value.has_value());
    CHECK(*rep.exact_value == BigRational(9, 16));
    CHECK(std::abs(rep.value - 0.5625) < 1e-9);
    REQUIRE(rep.exact_point.has_value());
    REQUIRE(rep.exact_point->size() == 4);
    for (const auto& c : *rep.exact_point) CHECK(c == BigRational(1, 4));
}

TEST_CASE("balanced four-vertex target over three coordinates", "[optimize]") {
    OptimizationReport rep = inducibility_partite(PartiteProfile({2, 1, 1}), 4, quick_config());
    REQUIRE(rep.exact_value.has_value());
    CHECK(*rep.exact_value == BigRational(4, 9));
    REQUIRE(rep.exact_point.has_value());
    for (const auto& c : *rep.exact_point) CHECK(c == BigRational(1, 3));
}

TEST_CASE("five-vertex target certifies on three parts", "[optimize]") {
    OptimizationReport rep = inducibility_partite(PartiteProfile({3, 1, 1}), 4, quick_config());
    REQUIRE(rep.exact_value.has_value());
    CHECK(*rep.exact_value == BigRational(20, 81));
}

TEST_CASE("five-vertex target has an irrational optimum on four parts", "[optimize]") {
    OptimizationReport rep = inducibility_partite(PartiteProfile({3, 1, 1}), 5, quick_config());
    CHECK(rep.stationary);
    // Optimal weights (1-3a, a, a, a) with a = (19 - sqrt(41)) / 80; the value
    // is irrational, so no exact certificate may be attached.
    const double a = (19.0 - std::sqrt(41.0)) / 80.0;
    const double expected = (329847.0 + 1107.0 * std::sqrt(41.0)) / 1280000.0;
    CHECK(std::abs(rep.value - expected) < 1e-9);
    CHECK(!rep.exact_value.has_value());
    CHECK(!rep.exact_point.has_value());
    REQUIRE(rep.point.size() == 4);
    CHECK(std::abs(rep.point[0] - (1.0 - 3.0 * a)) < 1e-6);
    for (int i = 1; i < 4; ++i) CHECK(std::abs(rep.point[static_cast<size_t>(i)] - a) < 1e-6);
}

TEST_CASE("seven-vertex balanced target on five parts", "[optimize]") {
    OptimizationReport rep = inducibility_partite(turan_profile(7, 4), 6, quick_config());
    REQUIRE(rep.exact_value.has_value());
    CHECK(*rep.exact_value == BigRational(504, 3125));
    REQUIRE(rep.exact_point.has_value());
    for (const auto& c : *rep.exact_point) CHECK(c == BigRational(1, 5));
}

TEST_CASE("same seed reproduces the report bit for bit", "[optimize][determinism]") {
    OptimizerConfig cfg = quick_config();
    cfg.seed = 1234;
    OptimizationReport a = inducibility_partite(PartiteProfile({3, 1, 1}), 5, cfg);
    OptimizationReport b = inducibility_partite(PartiteProfile({3, 1, 1}), 5, cfg);
    CHECK(a.value == b.value);
    CHECK(a.point == b.point);
    CHECK(a.iterations == b.iterations);
    CHECK(a.projected_gradient_norm == b.projected_gradient_norm);

    // A thread count must not change the selected optimum.
    OptimizerConfig threaded = cfg;
    threaded.threads = 2;
    OptimizationReport c = inducibility_partite(PartiteProfile({3, 1, 1}), 5, threaded);
    CHECK(c.value == a.value);
    CHECK(c.point == a.point);
}

TEST_CASE("clique bound at the part count leaves nothing", "[optimize]") {
    OptimizationReport rep = inducibility_partite(PartiteProfile({2, 1, 1}), 3, quick_config());
    CHECK(rep.value == 0.0);
    CHECK(rep.stationary);
    REQUIRE(rep.exact_value.has_value());
    CHECK(*rep.exact_value == BigRational(0));
}

TEST_CASE("optimizer argument validation", "[optimize]") {
    CHECK_THROWS_AS(inducibility_partite(PartiteProfile({2, 1, 1}), 2, quick_config()),
                    domain_error);
    DensityPolynomial zero = density_polynomial(PartiteProfile({2, 1, 1}), 2);
    CHECK_THROWS_AS(maximize_on_simplex(zero, quick_config()), domain_error);
}

TEST_CASE("raw maximizer matches the frozen three-part value", "[optimize]") {
    DensityPolynomial poly = density_polynomial(PartiteProfile({2, 1, 1}), 3);
    OptimizationReport rep = maximize_on_simplex(poly, quick_config());
    CHECK(rep.stationary);
    CHECK(std::abs(rep.value - 4.0 / 9.0) < 1e-9);
}

TEST_CASE("an impossible tolerance raises nonconvergence with a best effort",
          "[optimize]") {
    // The optimum here is irrational and asymmetric, so no start can reach a
    // projected gradient of exactly zero and no exact certificate exists.
    OptimizerConfig cfg = quick_config(4);
    cfg.gradient_tolerance = 1e-300;
    const double expected = (329847.0 + 1107.0 * std::sqrt(41.0)) / 1280000.0;
    try {
        inducibility_partite(PartiteProfile({3, 1, 1}), 5, cfg);
        FAIL("expected nonconvergence_error");
    } catch (const nonconvergence_error& e) {
        CHECK(!e.report.stationary);
        CHECK(std::abs(e.report.value - expected) < 1e-6);  // still found the optimum
    }
}

TEST_CASE("balanced targets optimize at equipartitions", "[optimize][property]") {
    // Sampled invariant: for balanced targets inside the proven range the
    // optimum uses min(k-1, t) equal parts.
    struct Case {
        int s, r, k;
    };
    for (const Case& c : {Case{4, 2, 3}, Case{5, 3, 4}, Case{5, 3, 6}, Case{6, 3, 4},
                          Case{7, 4, 5}, Case{6, 4, 6}}) {
        const TuranResult closed = inducibility_turan(c.s, c.r, c.k);
        OptimizationReport rep =
            inducibility_partite(turan_profile(c.s, c.r), c.k, quick_config());
        INFO("s=" << c.s << " r=" << c.r << " k=" << c.k);
        CHECK(std::abs(rep.value - to_double(closed.value)) < 1e-8);
        const long long parts = closed.parts_used;
        REQUIRE(static_cast<long long>(rep.point.size()) == c.k - 1);
        for (size_t i = 0; i < rep.point.size(); ++i) {
            const double want =
                (static_cast<long long>(i) < parts) ? 1.0 / static_cast<double>(parts) : 0.0;
            CHECK(std::abs(rep.point[i] - want) < 1e-5);
        }
    }
}

TEST_CASE("limit scan stabilizes for a balanced four-vertex target", "[optimize][limit]") {
    LimitResult res = inducibility_limit(PartiteProfile({2, 1, 1}), 7, quick_config());
    REQUIRE(res.entries.size() == 5);  // m = 3..7
    CHECK(res.entries[0].m == 3);
    CHECK(res.entries[4].m == 7);
    REQUIRE(res.entries[0].exact.has_value());
    CHECK(*res.entries[0].exact == BigRational(4, 9));
    REQUIRE(res.entries[1].exact.has_value());
    CHECK(*res.entries[1].exact == BigRational(9, 16));
    REQUIRE(res.entries[2].exact.has_value());
    CHECK(*res.entries[2].exact == BigRational(72, 125));
    for (size_t i = 1; i < res.entries.size(); ++i)
        CHECK(res.entries[i].value >= res.entries[i - 1].value - 1e-9);
    REQUIRE(res.stabilized_at.has_value());
    CHECK(*res.stabilized_at == 5);
    CHECK(res.non_attainment_warning);  // two singleton parts
}

TEST_CASE("limit scan keeps climbing for the skewed five-vertex target",
          "[optimize][limit]") {
    LimitResult res = inducibility_limit(PartiteProfile({3, 1, 1}), 6, quick_config());
    REQUIRE(res.entries.size() == 4);  // m = 3..6
    for (size_t i = 1; i < res.entries.size(); ++i)
        CHECK(res.entries[i].value > res.entries[i - 1].value);
    CHECK(!res.stabilized_at.has_value());
    CHECK(res.non_attainment_warning);
    // The supremum over all part counts is 216/625.
    for (const LimitEntry& e : res.entries) CHECK(e.value < 216.0 / 625.0 + 1e-9);
}

TEST_CASE("limit scan rejects too few parts", "[optimize][limit]") {
    CHECK_THROWS_AS(inducibility_limit(PartiteProfile({2, 1, 1}), 2, quick_config()),
                    domain_error);
}

TEST_CASE("no warning without two singleton parts", "[optimize][limit]") {
    LimitResult res = inducibility_limit(PartiteProfile({2, 2}), 4, quick_config());
    CHECK(!res.non_attainment_warning);
    for (size_t i = 1; i < res.entries.size(); ++i)
        CHECK(res.entries[i].value >= res.entries[i - 1].value - 1e-9);
}

TEST_CASE("strongly unbalanced targets separate their part weights",
          "[optimize][distinct]") {
    PartiteProfile p(std::vector<int>{8, 4, 1});
    DistinctPartsResult four = check_distinct_parts(p, 4, 1e-3, quick_config());
    CHECK(four.distinct);
    DistinctPartsResult five = check_distinct_parts(p, 5, 1e-3, quick_config());
    CHECK(five.distinct);

    CHECK_THROWS_AS(check_distinct_parts(PartiteProfile({3, 1, 1}), 4, 1e-3, quick_config()),
                    domain_error);
    CHECK_THROWS_AS(check_distinct_parts(p, 3, 1e-3, quick_config()), domain_error);
    CHECK_THROWS_AS(check_distinct_parts(p, 4, -1.0, quick_config()), domain_error);
}

TEST_CASE("optimum dominates every structured candidate", "[optimize][property]") {
    // The report value may not fall below the best equipartition evaluation.
    for (int k : {4, 5}) {
        PartiteProfile prof({2, 2, 1});
        DensityPolynomial poly = density_polynomial(prof, k - 1);
        OptimizationReport rep = inducibility_partite(prof, k, quick_config());
        for (int parts = prof.r(); parts <= k - 1; ++parts) {
            const double candidate =
                to_double(poly.evaluate_exact(SimplexPoint::equipartition(parts, k - 1)));
            CHECK(rep.value >= candidate - 1e-9);
        }
    }
}
