#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "greedylab/coefficient_vector.hpp"
#include "greedylab/index_set.hpp"
#include "greedylab/normed_space.hpp"
#include "greedylab/rng.hpp"

using namespace greedylab;

namespace {

CoefficientVector random_vector(Rng& rng, std::size_t dim) {
    std::vector<double> c(dim);
    for (double& v : c) v = rng.uniform(-2.0, 2.0);
    return CoefficientVector(std::move(c));
}

} // namespace

TEST_CASE("norms evaluate to hand-computed values") {
    CHECK(NormedSpace::lp(3, 2.0).norm(CoefficientVector{3.0, 4.0, 0.0}) ==
          Catch::Approx(5.0).margin(1e-12));
    CHECK(NormedSpace::lp(3, 1.0).norm(CoefficientVector{3.0, -4.0, 0.5}) ==
          Catch::Approx(7.5).margin(1e-12));
    CHECK(NormedSpace::sup(2).norm(CoefficientVector{3.0, -4.0}) == 4.0);

    // max(sup part, weighted l2 part): here the flat part wins.
    NormedSpace mx = NormedSpace::mixed(2, {1.0, 0.25});
    CHECK(mx.norm(CoefficientVector{0.5, 2.0}) == Catch::Approx(2.0));
    // ... and here the quadratic part wins.
    CHECK(mx.norm(CoefficientVector{1.0, 1.0}) == Catch::Approx(std::sqrt(1.25)));

    CHECK(NormedSpace::lp(4, 2.0).norm(CoefficientVector(4)) == 0.0);
}

TEST_CASE("space construction rejects bad parameters") {
    CHECK_THROWS_AS(NormedSpace::lp(4, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(NormedSpace::lp(0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(NormedSpace::mixed(2, {1.0, 1.5}), std::invalid_argument);
    CHECK_THROWS_AS(NormedSpace::mixed(2, {1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(NormedSpace::mixed(3, {1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(NormedSpace::combination(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(
        NormedSpace::combination(2, {CombinationComponent{0.5, {1.0, 1.0}}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        NormedSpace::combination(2, {CombinationComponent{2.0, {1.0, 0.0}}}),
        std::invalid_argument); // dead coordinate
}

TEST_CASE("norm argument guards") {
    NormedSpace s = NormedSpace::lp(3, 2.0);
    CHECK_THROWS_AS(s.norm(CoefficientVector(2)), std::invalid_argument);
    CoefficientVector bad(3);
    bad.set(1, std::numeric_limits<double>::quiet_NaN());
    CHECK_THROWS_AS(s.norm(bad), std::invalid_argument);
}

TEST_CASE("norm axioms hold on random samples") {
    std::vector<NormedSpace> spaces;
    spaces.push_back(NormedSpace::lp(6, 1.0));
    spaces.push_back(NormedSpace::lp(6, 1.5));
    spaces.push_back(NormedSpace::lp(6, 2.0));
    spaces.push_back(NormedSpace::lp(6, 4.0));
    spaces.push_back(NormedSpace::sup(6));
    spaces.push_back(NormedSpace::mixed(
        6, {1.0, 0.5, 1.0 / 3.0, 0.25, 0.2, 1.0 / 6.0}, "1/n"));
    spaces.push_back(NormedSpace::combination(
        6, {CombinationComponent{1.0, {1.0, 0.5, 0.0, 0.0, 0.25, 0.0}},
            CombinationComponent{2.0, {0.0, 1.0, 1.0, 0.5, 1.0, 1.0}}}));

    Rng rng(99, "test/norm-axioms");
    for (const auto& s : spaces) {
        INFO(s.name());
        for (int t = 0; t < 50; ++t) {
            CoefficientVector x = random_vector(rng, s.dim());
            CoefficientVector y = random_vector(rng, s.dim());
            double nx = s.norm(x), ny = s.norm(y);
            double lam = rng.uniform(-3.0, 3.0);

            CHECK(s.norm(x + y) <= nx + ny + 1e-12 * (nx + ny + 1.0));
            CHECK(s.norm(lam * x) ==
                  Catch::Approx(std::fabs(lam) * nx).margin(1e-12).epsilon(1e-12));

            // All shipped norms are lattice norms: sign flips never matter.
            CoefficientVector flipped = x;
            for (int i = 1; i <= static_cast<int>(s.dim()); ++i)
                if (rng.uniform01() < 0.5) flipped.set(i, -flipped.coeff(i));
            CHECK(s.norm(flipped) == Catch::Approx(nx).epsilon(1e-12));
        }
        // Unit basis vectors: normalization is part of the contract.
        for (int i = 1; i <= static_cast<int>(s.dim()); ++i) {
            CoefficientVector e(s.dim());
            e.set(i, 1.0);
            CHECK(s.norm(e) == Catch::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("mixed-norm indicators follow the closed form") {
    std::size_t dim = 6;
    std::vector<double> w(dim);
    for (std::size_t n = 0; n < dim; ++n) w[n] = 1.0 / static_cast<double>(n + 1);
    NormedSpace s = NormedSpace::mixed(dim, w, "1/n");

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
        IndexSet a = IndexSet::from_mask(mask);
        double wa = 0.0;
        for (int i : a) wa += 1.0 / static_cast<double>(i);
        double expected = a.empty() ? 0.0 : std::max(1.0, std::sqrt(wa));
        CHECK(s.norm_of_indicator(a) == Catch::Approx(expected).margin(1e-12));
    }
}

TEST_CASE("combination norms reduce to lp when given one plain component") {
    NormedSpace combo = NormedSpace::combination(
        5, {CombinationComponent{2.0, std::vector<double>(5, 1.0)}});
    NormedSpace plain = NormedSpace::lp(5, 2.0);

    Rng rng(7, "test/combo-vs-lp");
    for (int t = 0; t < 30; ++t) {
        CoefficientVector x = random_vector(rng, 5);
        CHECK(combo.norm(x) == Catch::Approx(plain.norm(x)).epsilon(1e-12));
    }
}

TEST_CASE("combination rescaling normalizes every basis vector") {
    NormedSpace combo = NormedSpace::combination(
        3, {CombinationComponent{1.0, {4.0, 1.0, 0.25}},
            CombinationComponent{2.0, {0.25, 9.0, 1.0}}});
    for (int i = 1; i <= 3; ++i) {
        CoefficientVector e(3);
        e.set(i, 1.0);
        CHECK(combo.norm(e) == Catch::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("basis constant is exactly one for lattice-flagged spaces") {
    auto est = basis_constant(NormedSpace::lp(4, 2.0), {});
    CHECK(est.value == 1.0);
    CHECK(est.exact);
    CHECK_FALSE(est.witness.has_value());
}

TEST_CASE("basis constant falls back to a sampled lower bound") {
    NormedSpace combo = NormedSpace::combination(
        4, {CombinationComponent{1.0, {1.0, 1.0, 0.0, 0.0}},
            CombinationComponent{2.0, {0.0, 0.5, 1.0, 1.0}}});
    REQUIRE_FALSE(combo.one_unconditional());
    CHECK_FALSE(combo.exact_quasi_greedy_constant().has_value());

    CHECK_THROWS_AS(basis_constant(combo, {}), std::invalid_argument);

    Rng rng(11, "test/basis-samples");
    std::vector<CoefficientVector> samples;
    for (int t = 0; t < 40; ++t) samples.push_back(random_vector(rng, 4));
    auto est = basis_constant(combo, samples);
    CHECK_FALSE(est.exact);
    CHECK(est.value >= 1.0);
    if (est.witness) {
        // A reported witness must reproduce the reported ratio.
        const auto& [x, m] = *est.witness;
        CoefficientVector px(combo.dim());
        for (int i = 1; i <= m; ++i) px.set(i, x.coeff(i));
        CHECK(combo.norm(px) / combo.norm(x) == Catch::Approx(est.value));
    }
}

TEST_CASE("space names are readable and stable") {
    CHECK(NormedSpace::lp(4, 1.5).name() == "lp(1.5,d=4)");
    CHECK(NormedSpace::lp(6, 2.0).name() == "lp(2,d=6)");
    CHECK(NormedSpace::sup(6).name() == "sup(d=6)");
    CHECK(NormedSpace::mixed(2, {1.0, 0.5}, "1/n").name() == "mixed(1/n,d=2)");
    CHECK(NormedSpace::mixed(2, {1.0, 0.5}).name() == "mixed(w,d=2)");
    CHECK(NormedSpace::combination(
              2, {CombinationComponent{1.0, {1.0, 1.0}}})
              .name() == "combination(1comp,d=2)");
}
