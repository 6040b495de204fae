#include <catch2/catch_amalgamated.hpp>

#include "milnor/cs_homology.hpp"

using namespace milnor;

namespace {

bool homology_vanishes(const std::pair<int, std::vector<ZZ>>& h) {
    return h.first == 0 && h.second.empty();
}

} // namespace

TEST_CASE("degree above the support bound is rejected") {
    FIModuleData m = induced_module({{0, trivial_rep(0)}}, 3);
    REQUIRE_THROWS_AS(CSComplex(m, 4), std::domain_error);
}

TEST_CASE("chain ranks") {
    FIModuleData m0 = induced_module({{0, trivial_rep(0)}}, 6);

    CSComplex c3(m0, 3);
    REQUIRE(c3.dims() == std::vector<int>{1, 3, 6, 6});

    CSComplex c2(m0, 2);
    REQUIRE(c2.dims() == std::vector<int>{1, 2, 2});

    // top chain group has rank n! * r_0
    for (int n = 2; n <= 5; ++n) {
        CSComplex c(m0, n);
        REQUIRE(ZZ(c.dim(n - 1)) == factorial(n) * m0.ranks[0]);
    }
}

TEST_CASE("boundary squares to zero") {
    std::vector<FIModuleData> modules = {
        induced_module({{0, trivial_rep(0)}}, 6),
        induced_module({{1, trivial_rep(1)}}, 6),
        induced_module({{2, sign_rep(2)}}, 6),
        induced_module({{2, trivial_rep(2)}}, 6),
    };
    for (const auto& m : modules)
        for (int n = 1; n <= 6; ++n) {
            CSComplex c(m, n);
            REQUIRE(c.verify_d_squared());
        }
}

TEST_CASE("homology of I(Z_0)") {
    FIModuleData m0 = induced_module({{0, trivial_rep(0)}}, 6);

    auto h3 = cs_homology(m0, 3);
    REQUIRE(homology_vanishes(h3[0]));  // H_{-1}
    REQUIRE(homology_vanishes(h3[1]));  // H_0
    REQUIRE(homology_vanishes(h3[2]));  // H_1
    REQUIRE(h3[3].first == 2);          // H_2 free of rank 2
    REQUIRE(h3[3].second.empty());

    auto h2 = cs_homology(m0, 2);
    REQUIRE(homology_vanishes(h2[0]));
    REQUIRE(homology_vanishes(h2[1]));

    // Euler characteristic consistency
    for (int n = 2; n <= 5; ++n) {
        CSComplex c(m0, n);
        auto h = c.homology();
        long chi_dims = 0, chi_h = 0;
        for (int p = -1; p <= n - 1; ++p) {
            int sign = (p % 2 == 0) ? 1 : -1;  // (-1)^p with p = -1 negative
            chi_dims += sign * c.dim(p);
            chi_h += sign * h[p + 1].first;
        }
        REQUIRE(chi_dims == chi_h);
    }
}

TEST_CASE("zero module has zero homology") {
    auto h = cs_homology(FIModuleData::zero(4), 3);
    for (auto& hp : h) REQUIRE(homology_vanishes(hp));
}

TEST_CASE("vanishing ranges for induced modules") {
    // d = 0: H_i = 0 for i <= n-2
    FIModuleData m0 = induced_module({{0, trivial_rep(0)}}, 6);
    REQUIRE(check_vanishing(m0, 0, 4));
    {
        auto h = cs_homology(m0, 4);
        for (int p = -1; p <= 2; ++p) REQUIRE(homology_vanishes(h[p + 1]));
    }

    // d = 1: H_i = 0 for i <= n-3
    FIModuleData m1 = induced_module({{1, trivial_rep(1)}}, 6);
    REQUIRE(check_vanishing(m1, 1, 4));
    {
        auto h = cs_homology(m1, 4);
        for (int p = -1; p <= 1; ++p) REQUIRE(homology_vanishes(h[p + 1]));
    }

    // d = 2, sgn: H_i = 0 for i <= n-4
    FIModuleData m2 = induced_module({{2, sign_rep(2)}}, 6);
    REQUIRE(check_vanishing(m2, 2, 5));
    {
        auto h = cs_homology(m2, 5);
        for (int p = -1; p <= 1; ++p) REQUIRE(homology_vanishes(h[p + 1]));
    }

    for (int n = 2; n <= 6; ++n) {
        REQUIRE(check_vanishing(m0, 0, n));
        REQUIRE(check_vanishing(m1, 1, n));
        REQUIRE(check_vanishing(m2, 2, n));
        REQUIRE(check_vanishing(induced_module({{2, trivial_rep(2)}}, 6), 2, n));
    }
}

TEST_CASE("H_{-1} recovers the generators and H_0 vanishes") {
    // H_{-1}(I(V))_n = V_n and H_0(I(V))_n = 0, tested in the FI image.
    for (int vdeg = 0; vdeg <= 2; ++vdeg) {
        for (bool sgn : {false, true}) {
            if (vdeg == 0 && sgn) continue;
            SnRep rep = sgn ? sign_rep(vdeg) : trivial_rep(vdeg);
            FIModuleData m = induced_module({{vdeg, rep}}, 6);
            for (int n = std::max(1, vdeg); n <= 5; ++n) {
                auto h = cs_homology(m, n);
                int expected = (n == vdeg) ? rep.rank : 0;
                REQUIRE(h[0].first == expected);  // H_{-1}
                REQUIRE(h[0].second.empty());
                REQUIRE(homology_vanishes(h[1]));  // H_0
            }
        }
    }
}
