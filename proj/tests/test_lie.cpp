#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "milnor/lie.hpp"
#include "milnor/symfunc.hpp"

using namespace milnor;

TEST_CASE("straighten pinned examples") {
    SECTION("one antisymmetry application") {
        LieElement e = straighten(Bracket::parse("[[2,1],3]"));
        REQUIRE(e.coeffs() == LieCombo{{{1, 2, 3}, ZZ(-1)}});
    }
    SECTION("Jacobi") {
        LieElement e = straighten(Bracket::parse("[1,[2,3]]"));
        REQUIRE(e.coeffs() == LieCombo{{{1, 2, 3}, ZZ(1)}, {{1, 3, 2}, ZZ(-1)}});
    }
    SECTION("two basis terms with unit coefficients") {
        LieElement e = straighten(Bracket::parse("[[1,2],[3,4]]"));
        REQUIRE(e.coeffs().size() == 2);
        for (auto& [w, c] : e.coeffs()) REQUIRE(abs(c) == 1);
        REQUIRE(e.coeff({1, 2, 3, 4}) == 1);
        REQUIRE(e.coeff({1, 2, 4, 3}) == -1);
    }
    SECTION("duplicate labels rejected") {
        REQUIRE_THROWS_AS(straighten(Bracket::parse("[[1,2],1]")), std::invalid_argument);
    }
}

TEST_CASE("straighten is idempotent on basis elements") {
    for (const LieWord& w : lie_basis_words({1, 2, 3, 4})) {
        Bracket b = Bracket::leaf(w[0]);
        for (std::size_t t = 1; t < w.size(); ++t) b = Bracket::pair(std::move(b), Bracket::leaf(w[t]));
        LieElement e = straighten(b);
        REQUIRE(e.coeffs() == LieCombo{{w, ZZ(1)}});
    }
}

TEST_CASE("straightening stays inside the left-normed basis: dim Lie(S) = (|S|-1)!") {
    // Verified by expanding random deep bracketings and checking every
    // output word is a basis word anchored at the minimum.
    for (int n = 2; n <= 7; ++n) {
        std::vector<int> labels;
        for (int i = 1; i <= n; ++i) labels.push_back(i);
        REQUIRE(lie_basis_words(labels).size() ==
                static_cast<std::size_t>(to_int64(factorial(n - 1))));

        // a right comb, the worst case for rewriting
        Bracket comb = Bracket::leaf(n);
        for (int i = n - 1; i >= 1; --i) comb = Bracket::pair(Bracket::leaf(i), std::move(comb));
        LieElement e = straighten(comb);
        for (auto& [w, c] : e.coeffs()) REQUIRE(w[0] == 1);
    }
}

TEST_CASE("merge_insertion") {
    LieElement u = straighten(Bracket::parse("1"));
    LieElement v = straighten(Bracket::parse("2"));
    REQUIRE(merge_insertion(u, v).coeffs() == LieCombo{{{1, 2}, ZZ(1)}});

    LieElement u12 = straighten(Bracket::parse("[1,2]"));
    LieElement v3 = straighten(Bracket::parse("3"));
    REQUIRE(merge_insertion(u12, v3).coeffs() == LieCombo{{{1, 2, 3}, ZZ(1)}});

    LieElement u3 = straighten(Bracket::parse("3"));
    LieElement v12 = straighten(Bracket::parse("[1,2]"));
    REQUIRE(merge_insertion(u3, v12).coeffs() == LieCombo{{{1, 2, 3}, ZZ(-1)}});

    REQUIRE_THROWS_AS(merge_insertion(u12, straighten(Bracket::parse("2"))),
                      std::invalid_argument);
}

TEST_CASE("sn_action basics") {
    REQUIRE(sn_action(3, Perm::identity(3)) == IntMatrix::identity(2));

    IntMatrix swap2 = sn_action(2, Perm::transposition(2, 0, 1));
    REQUIRE(swap2.rows() == 1);
    REQUIRE(swap2.at(0, 0) == -1);

    IntMatrix m = sn_action(3, Perm::transposition(3, 0, 1));
    REQUIRE(m.rows() == 2);
    ZZ trace = m.at(0, 0) + m.at(1, 1);
    REQUIRE(trace == 0);
}

TEST_CASE("sn_action is a group homomorphism on Coxeter generator pairs") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<Perm> gens;
        for (int i = 0; i + 1 < n; ++i) gens.push_back(Perm::coxeter(n, i));
        std::vector<IntMatrix> mats;
        for (const Perm& g : gens) mats.push_back(sn_action(n, g));
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = 0; b < gens.size(); ++b)
                REQUIRE(sn_action(n, compose(gens[a], gens[b])) == mats[a] * mats[b]);
    }
}

TEST_CASE("sn_action is multiplicative on random pairs") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<int> a(n), b(n);
        for (int i = 0; i < n; ++i) a[i] = b[i] = i;
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        Perm pa{a}, pb{b};
        REQUIRE(sn_action(n, compose(pa, pb)) == sn_action(n, pa) * sn_action(n, pb));
    }
}

TEST_CASE("lie_dual_action traces realize Stanley's formula") {
    REQUIRE(lie_dual_action(2, Perm::transposition(2, 0, 1)).at(0, 0) == 1);

    for (int n = 2; n <= 6; ++n) {
        auto chi = char_values(lie_dual_char(n));
        for (const IntPartition& mu : partitions_of(n)) {
            Perm rep = class_representative(n, mu.parts);
            IntMatrix m = lie_dual_action(n, rep);
            ZZ trace = 0;
            for (int i = 0; i < m.rows(); ++i) trace += m.at(i, i);
            REQUIRE(trace == chi.at(mu));
        }
    }
}

TEST_CASE("lie_dual_action at the identity") {
    REQUIRE(lie_dual_action(4, Perm::identity(4)) == IntMatrix::identity(6));
}

TEST_CASE("trace depends only on the cycle type") {
    // spot check: two conjugate transpositions in S_4
    auto trace = [](const IntMatrix& m) {
        ZZ t = 0;
        for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
        return t;
    };
    REQUIRE(trace(lie_dual_action(4, Perm::transposition(4, 0, 1))) ==
            trace(lie_dual_action(4, Perm::transposition(4, 2, 3))));
    REQUIRE(trace(lie_dual_action(4, Perm::transposition(4, 0, 3))) ==
            trace(lie_dual_action(4, Perm::transposition(4, 1, 2))));
}

TEST_CASE("bracket literals round-trip") {
    Bracket b = Bracket::parse("[[1,2],[3,[4,5]]]");
    REQUIRE(b.to_string() == "[[1,2],[3,[4,5]]]");
    REQUIRE(b.labels() == std::vector<int>{1, 2, 3, 4, 5});
    REQUIRE_THROWS_AS(Bracket::parse("[1,2"), std::invalid_argument);
}
