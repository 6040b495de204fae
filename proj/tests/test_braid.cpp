#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "milnor/braid.hpp"

using namespace milnor;

TEST_CASE("ShatElement invariants") {
    REQUIRE_NOTHROW(ShatElement(2, Perm::transposition(2, 0, 1), 1));
    REQUIRE_NOTHROW(ShatElement(2, Perm::identity(2), -4));
    REQUIRE_THROWS_AS(ShatElement(2, Perm::transposition(2, 0, 1), 2), std::invalid_argument);
    REQUIRE_THROWS_AS(ShatElement(2, Perm::identity(2), 3), std::invalid_argument);
    // trivial groups in ranks 0 and 1
    REQUIRE_NOTHROW(ShatElement(1, Perm::identity(1), 0));
    REQUIRE_THROWS_AS(ShatElement(1, Perm::identity(1), 2), std::invalid_argument);
}

TEST_CASE("shat_mul") {
    ShatElement e = ShatElement::identity(3);
    ShatElement x(3, Perm::transposition(3, 0, 1), 1);
    REQUIRE(shat_mul(e, x) == x);
    REQUIRE(shat_mul(x, e) == x);

    ShatElement sq = shat_mul(x, x);
    REQUIRE(sq.perm.is_identity());
    REQUIRE(sq.d == 2);

    ShatElement y(3, Perm::transposition(3, 1, 2), 1);
    ShatElement xy = shat_mul(x, y);
    REQUIRE(xy.d == 2);
    REQUIRE(!xy.perm.is_identity());
    REQUIRE(shat_mul(x, shat_inverse(x)) == e);
}

TEST_CASE("project_pn on pinned words") {
    BraidWord one(2);
    one.append(1, 1);
    ShatElement p = project_pn(one);
    REQUIRE(p.perm == Perm::transposition(2, 0, 1));
    REQUIRE(p.d == 1);

    REQUIRE(project_pn(BraidWord(4)) == ShatElement::identity(4));

    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                ShatElement a = project_pn(pure_gen(i, j, n));
                REQUIRE(a.perm.is_identity());
                REQUIRE(a.d == 2);
                REQUIRE(winding(pure_gen(i, j, n)) == 1);
            }
}

TEST_CASE("project_pn is a homomorphism on random word pairs") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);  // n <= 6
        auto random_word = [&](int len) {
            BraidWord w(n);
            for (int t = 0; t < len; ++t)
                w.append(1 + static_cast<int>(rng() % (n - 1)), rng() % 2 ? 1 : -1);
            return w;
        };
        BraidWord w1 = random_word(static_cast<int>(rng() % 21));
        BraidWord w2 = random_word(static_cast<int>(rng() % 21));
        REQUIRE(project_pn(w1 * w2) == shat_mul(project_pn(w1), project_pn(w2)));
    }
}

TEST_CASE("winding") {
    REQUIRE(winding(BraidWord(3)) == 0);
    BraidWord cancel = pure_gen(1, 2, 3) * pure_gen(1, 3, 3).inverse();
    REQUIRE(winding(cancel) == 0);
    BraidWord impure(3);
    impure.append(1, 1);
    REQUIRE_THROWS_AS(winding(impure), NotPure);
}

TEST_CASE("u_word") {
    REQUIRE(u_word(1, 4).letters.empty());

    BraidWord u2 = u_word(2, 2);
    REQUIRE(u2.letters == std::vector<std::pair<int, int>>{{1, -1}});

    for (int strands = 2; strands <= 6; ++strands)
        for (int i = 1; i <= strands; ++i) {
            ShatElement p = project_pn(u_word(i, strands));
            REQUIRE(p.d == -(i - 1));
            // the underlying permutation is the i-cycle rotating the first
            // i strands (one of the two directions, fixed by convention)
            std::vector<int> type = p.perm.cycle_type();
            if (i >= 2) {
                REQUIRE(type.front() == i);
                for (std::size_t t = 1; t < type.size(); ++t) REQUIRE(type[t] == 1);
                REQUIRE(p.perm(0) == i - 1);  // strand i returns to the front
            }
        }
}

TEST_CASE("sigma_block") {
    REQUIRE(sigma_block(0, 3).letters.empty());
    REQUIRE(sigma_block(3, 0).letters.empty());

    ShatElement s11 = project_pn(sigma_block(1, 1));
    REQUIRE(s11.perm == Perm::transposition(2, 0, 1));
    REQUIRE(s11.d == 1);

    ShatElement s21 = project_pn(sigma_block(2, 1));
    REQUIRE(s21.d == 2);
    REQUIRE(s21.perm.cycle_type() == std::vector<int>{3});
    REQUIRE(s21.perm(0) == 2);  // strand 3 moves to the front

    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            if (a + b == 0) continue;
            ShatElement s = project_pn(sigma_block(a, b));
            REQUIRE(s.d == a * b);
            // block swap: first a strands land after the last b
            for (int x = 0; x < b; ++x) REQUIRE(s.perm(x) == a + x);
            for (int x = 0; x < a; ++x) REQUIRE(s.perm(b + x) == x);
        }
}

TEST_CASE("braid word text syntax") {
    BraidWord w = BraidWord::parse(4, "s1 s2^-1 s1");
    REQUIRE(w.letters == std::vector<std::pair<int, int>>{{1, 1}, {2, -1}, {1, 1}});
    REQUIRE(w.to_string() == "s1 s2^-1 s1");
    REQUIRE_THROWS_AS(BraidWord::parse(2, "s5"), std::invalid_argument);
    REQUIRE_THROWS_AS(BraidWord::parse(3, "x1"), std::invalid_argument);
}
