#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "milnor/milnor_fiber.hpp"

using namespace milnor;

namespace {

Config make_config(std::vector<Cx> pts, double tol = 1e-9) {
    Config c;
    c.points = std::move(pts);
    c.tolerance = tol;
    return c;
}

} // namespace

TEST_CASE("q_n") {
    REQUIRE(std::abs(q_n(make_config({{0.5, 0}, {-0.5, 0}})) - Cx(1, 0)) < 1e-15);
    REQUIRE(std::abs(q_n(make_config({{1, 0}, {0, 0}})) - Cx(1, 0)) < 1e-15);
    REQUIRE(std::abs(q_n(make_config({{2, 0}, {1, 0}, {0, 0}})) - Cx(2, 0)) < 1e-15);
    REQUIRE_THROWS_AS(q_n(make_config({{0, 0}, {1e-12, 0}})), DegenerateConfig);
}

TEST_CASE("defect") {
    REQUIRE(defect(make_config({{0.5, 0}, {-0.5, 0}})) < 1e-15);
    REQUIRE(defect(make_config({{2, 0}, {1, 0}, {0, 0}})) == Catch::Approx(1.0));
}

TEST_CASE("project_to_fiber") {
    SECTION("fixed points stay put") {
        Config c = make_config({{0.5, 0}, {-0.5, 0}});
        Config p = project_to_fiber(c);
        REQUIRE(std::abs(p.points[0] - c.points[0]) < 1e-12);
        REQUIRE(defect(p) < 1e-12);
    }
    SECTION("real configuration scales by the real root") {
        Config p = project_to_fiber(make_config({{2, 0}, {1, 0}, {0, 0}}));
        double scale = std::pow(2.0, 1.0 / 3.0);
        REQUIRE(std::abs(p.points[0] - Cx(2.0 / scale, 0)) < 1e-12);
        REQUIRE(defect(p) < 1e-12);
    }
    SECTION("rotation by a complex product") {
        Config p = project_to_fiber(make_config({{0, 1}, {0, -1}}));  // q = 2i
        REQUIRE(defect(p) < 1e-12);
    }
    SECTION("branch cut") {
        // q on the negative real axis: x1 - x2 = -1
        REQUIRE_THROWS_AS(project_to_fiber(make_config({{-0.5, 0}, {0.5, 0}})), BranchCut);
    }
    SECTION("random configurations across n <= 10") {
        std::mt19937_64 rng(12345);
        int done = 0;
        while (done < 1000) {
            int n = 2 + static_cast<int>(rng() % 9);
            Config c;
            c.tolerance = 1e-9;
            for (int i = 0; i < n; ++i) c.points.push_back(random_disk_point(rng, 1.0));
            try {
                REQUIRE(defect(project_to_fiber(c)) < 1e-9);
                ++done;
            } catch (const DegenerateConfig&) {
            } catch (const BranchCut&) {
            }
        }
    }
}

TEST_CASE("gadish_stabilize worked example at n = 2") {
    Config c = make_config({{0.5, 0}, {-0.5, 0}});
    Config out = gadish_stabilize(c);
    REQUIRE(out.points.size() == 3);
    // x_3 = 1, a = 0.75, scale = 0.75^{1/3}
    REQUIRE(out.points[0].real() == Catch::Approx(0.5503).margin(5e-5));
    REQUIRE(out.points[1].real() == Catch::Approx(-0.5503).margin(5e-5));
    REQUIRE(out.points[2].real() == Catch::Approx(1.1006).margin(5e-5));
    REQUIRE(defect(out) < 1e-12);

    Config tilted = gadish_stabilize(project_to_fiber(make_config({{0.5, 0.1}, {-0.5, 0.1}})));
    REQUIRE(defect(tilted) < 1e-10);
}

TEST_CASE("gadish auxiliary value is positive real for real n = 2 input") {
    // For real configurations on the fiber with n = 2 the product
    // (x_1 - x_3)(x_2 - x_3) has two negative factors.
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        double x = 0.1 + 2.0 * uniform_unit(rng);
        Config c = make_config({{x / 2, 0}, {-x / 2, 0}});
        Config fiber = project_to_fiber(c);
        REQUIRE_NOTHROW(gadish_stabilize(fiber));
    }
}

TEST_CASE("gadish_stabilize rejects off-fiber input") {
    REQUIRE_THROWS_AS(gadish_stabilize(make_config({{2, 0}, {0, 0}})), NotOnFiber);
}

TEST_CASE("stabilization defect stays below 1e-9 across n = 2..10") {
    for (int n = 2; n <= 10; ++n) {
        StabilizeStats stats = stabilize_trials(n, 200, 20240211);
        REQUIRE(stats.max_defect < 1e-9);
    }
}

TEST_CASE("shat_action") {
    SECTION("identity") {
        Config c = make_config({{0.5, 0}, {-0.5, 0}});
        Config out = shat_action(c, ShatElement::identity(2));
        REQUIRE(std::abs(out.points[0] - c.points[0]) < 1e-15);
    }
    SECTION("pinned example: ((12), 1) on n = 2") {
        Config c = make_config({{0.5, 0}, {-0.5, 0}});
        Config out = shat_action(c, ShatElement(2, Perm::transposition(2, 0, 1), 1));
        REQUIRE(std::abs(out.points[0] - Cx(0.5, 0)) < 1e-15);
        REQUIRE(std::abs(out.points[1] - Cx(-0.5, 0)) < 1e-15);
        REQUIRE(defect(out) < 1e-14);
    }
    SECTION("(e, 2) preserves the defect") {
        std::mt19937_64 rng(31337);
        for (int trial = 0; trial < 50; ++trial) {
            int n = 2 + static_cast<int>(rng() % 5);
            Config c;
            c.tolerance = 1e-9;
            for (int i = 0; i < n; ++i) c.points.push_back(random_disk_point(rng, 1.0));
            try {
                Config fiber = project_to_fiber(c);
                Config out = shat_action(fiber, ShatElement(n, Perm::identity(n), 2));
                REQUIRE(defect(out) < defect(fiber) + 1e-12);
            } catch (const DegenerateConfig&) {
            } catch (const BranchCut&) {
            }
        }
    }
    SECTION("group action composition law") {
        std::mt19937_64 rng(999);
        int n = 4;
        Config c;
        c.tolerance = 1e-9;
        for (int i = 0; i < n; ++i) c.points.push_back(random_disk_point(rng, 1.0));
        Config fiber = project_to_fiber(c);
        ShatElement g(4, Perm({1, 0, 3, 2}), 2);
        ShatElement h(4, Perm({1, 2, 3, 0}), 1);
        Config gh1 = shat_action(shat_action(fiber, g), h);
        Config gh2 = shat_action(fiber, shat_mul(g, h));
        for (int i = 0; i < n; ++i) REQUIRE(std::abs(gh1.points[i] - gh2.points[i]) < 1e-10);
    }
    SECTION("mu-invariance: scaling by the binom(n,2)-th root of unity") {
        std::mt19937_64 rng(555);
        for (int n : {3, 4, 5}) {
            Config c;
            c.tolerance = 1e-9;
            for (int i = 0; i < n; ++i) c.points.push_back(random_disk_point(rng, 1.0));
            Config fiber = project_to_fiber(c);
            int pairs = n * (n - 1) / 2;
            Cx zeta = std::polar(1.0, 2.0 * std::numbers::pi / pairs);
            Config scaled = fiber;
            for (Cx& x : scaled.points) x *= zeta;
            REQUIRE(std::abs(defect(scaled) - defect(fiber)) < 1e-12);
        }
    }
}
