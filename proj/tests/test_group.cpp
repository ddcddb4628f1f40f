#include <doctest.h>

#include <algorithm>

#include "qembed/group.hpp"
#include "support/catalog.hpp"

using namespace qembed;
using namespace qembed::testcat;

namespace {

// independent oracle: compose one-line permutations without FiniteGroup
Perm oracle_compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
}

} // namespace

TEST_CASE("cayley construction: Z3") {
    auto g = group_from_cayley({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(g->order() == 3);
    CHECK(g->identity() == 0);
    CHECK(g->inv(1) == 2);
    CHECK(g->mul(2, 2) == 1);
}

TEST_CASE("cayley construction rejects a non-associative loop") {
    // order-5 loop with identity and two-sided inverses, (1*1)*2 != 1*(1*2)
    std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                          {1, 0, 3, 4, 2},
                                          {2, 4, 0, 1, 3},
                                          {3, 2, 4, 0, 1},
                                          {4, 3, 1, 2, 0}};
    CHECK_THROWS_WITH_AS(group_from_cayley(loop).get(), doctest::Contains("NotAssociative"),
                         Error);
}

TEST_CASE("cayley construction rejects a table without identity") {
    CHECK_THROWS_WITH_AS(group_from_cayley({{1, 1}, {1, 1}}).get(),
                         doctest::Contains("NoIdentity"), Error);
}

TEST_CASE("S3 from a hand-composed table matches the permutation closure") {
    // oracle: enumerate all 6 permutations of {0,1,2} and compose by hand
    std::vector<Perm> all;
    Perm p = {0, 1, 2};
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    REQUIRE(all.size() == 6);
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            Perm prod = oracle_compose(all[a], all[b]);
            table[a][b] =
                static_cast<int>(std::find(all.begin(), all.end(), prod) - all.begin());
        }
    auto g = group_from_cayley(table);
    CHECK(g->order() == 6);
    // nonabelian
    bool abelian = true;
    for (int a = 0; a < 6 && abelian; ++a)
        for (int b = 0; b < 6; ++b)
            if (g->mul(a, b) != g->mul(b, a)) {
                abelian = false;
                break;
            }
    CHECK_FALSE(abelian);

    auto s3 = symmetric(3);
    CHECK(s3->order() == 6);
}

TEST_CASE("permutation closure sizes") {
    CHECK(symmetric(5)->order() == 120); // 5!
    auto invol = FiniteGroup::from_permutations(4, {{1, 0, 3, 2}});
    CHECK(invol->order() == 2);
    CHECK_THROWS_WITH_AS(FiniteGroup::from_permutations(3, {{0, 0, 1}}).get(),
                         doctest::Contains("NotABijection"), Error);
    CHECK_THROWS_WITH_AS(FiniteGroup::from_permutations(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 100).get(),
                         doctest::Contains("ClosureTooLarge"), Error);
}

TEST_CASE("breadth-first element order is deterministic") {
    auto s3 = symmetric(3);
    CHECK(s3->label(0) == "[0 1 2]");
    CHECK(s3->label(1) == "[1 0 2]"); // (0 1)
    CHECK(s3->label(2) == "[1 2 0]"); // (0 1 2)
    CHECK(s3->label(3) == "[2 1 0]"); // (0 2)
    CHECK(s3->label(4) == "[0 2 1]"); // (1 2)
    CHECK(s3->label(5) == "[2 0 1]");
}

TEST_CASE("conjugation automorphism") {
    auto s3 = symmetric(3);
    int t01 = perm_index(s3, {1, 0, 2});
    int t02 = perm_index(s3, {2, 1, 0});
    int t12 = perm_index(s3, {0, 2, 1});
    auto sigma = automorphism_from_conjugation(s3, t01);
    sigma.validate();
    CHECK(sigma.image[t02] == t12); // hand conjugation of permutations

    auto id = automorphism_from_conjugation(s3, s3->identity());
    for (int x = 0; x < 6; ++x) CHECK(id.image[x] == x);

    auto z6 = cyclic(6);
    auto ad = automorphism_from_conjugation(z6, 4);
    for (int x = 0; x < 6; ++x) CHECK(ad.image[x] == x); // abelian
}

TEST_CASE("fix subgroup") {
    auto s3 = symmetric(3);
    auto whole = fix_subgroup(identity_automorphism(s3));
    CHECK(whole.order() == 6);

    auto z5 = cyclic(5);
    CHECK(fix_subgroup(negation(z5)).members == std::vector<int>{0});

    int t01 = perm_index(s3, {1, 0, 2});
    auto fix = fix_subgroup(automorphism_from_conjugation(s3, t01));
    CHECK(fix.members == std::vector<int>{s3->identity(), t01}); // centralizer of a transposition
}

TEST_CASE("inner witness") {
    auto s3 = symmetric(3);
    CHECK(inner_witness(identity_automorphism(s3)) == 0); // Ad(e) = id, least index

    auto z5 = cyclic(5);
    CHECK_FALSE(inner_witness(mult_by(z5, 2)).has_value());

    int t01 = perm_index(s3, {1, 0, 2});
    CHECK(inner_witness(automorphism_from_conjugation(s3, t01)) == t01);
}

TEST_CASE("automorphism order") {
    auto z5 = cyclic(5);
    CHECK(automorphism_order(identity_automorphism(z5)) == 1);
    CHECK(automorphism_order(negation(z5)) == 2);
    CHECK(automorphism_order(mult_by(z5, 2)) == 4); // powers of 2 mod 5
}

TEST_CASE("semidirect product with Z_m") {
    auto z3 = cyclic(3);
    SUBCASE("m = 1 with identity is an isomorphic copy") {
        auto g = semidirect_z(z3, identity_automorphism(z3), 1);
        CHECK(g->order() == 3);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) CHECK(g->mul(a, b) == (a + b) % 3);
    }
    SUBCASE("Z3 with negation, m = 2") {
        auto g = semidirect_z(z3, negation(z3), 2);
        CHECK(g->order() == 6);
        int x = semidirect_index(*z3, 1, 1);
        CHECK(g->mul(x, x) == semidirect_index(*z3, 0, 0)); // (-1+1, 0)
        CHECK(g->label(x) == "(1,1)");
    }
    SUBCASE("Z5 with doubling, m = 4") {
        auto z5 = cyclic(5);
        auto g = semidirect_z(z5, mult_by(z5, 2), 4);
        CHECK(g->order() == 20);
        CHECK(g->inv(semidirect_index(*z5, 0, 1)) == semidirect_index(*z5, 0, 3));
    }
    SUBCASE("modulus must be a multiple of ord(sigma)") {
        auto z5 = cyclic(5);
        CHECK_THROWS_WITH_AS(semidirect_z(z5, mult_by(z5, 2), 3).get(),
                             doctest::Contains("BadModulus"), Error);
    }
    SUBCASE("oversized products are refused") {
        auto z5 = cyclic(5);
        CHECK_THROWS_WITH_AS(semidirect_z(z5, negation(z5), 4042).get(),
                             doctest::Contains("TooLarge"), Error);
    }
    SUBCASE("g -> (g,0) is an injective homomorphism; (e,1) conjugates by sigma") {
        auto z5 = cyclic(5);
        auto sigma = mult_by(z5, 2);
        auto g = semidirect_z(z5, sigma, 4);
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                CHECK(g->mul(semidirect_index(*z5, a, 0), semidirect_index(*z5, b, 0)) ==
                      semidirect_index(*z5, (a + b) % 5, 0));
        int e1 = semidirect_index(*z5, 0, 1);
        for (int a = 0; a < 5; ++a)
            for (int t = 0; t < 4; ++t)
                CHECK(g->conj(semidirect_index(*z5, a, t), e1) ==
                      semidirect_index(*z5, sigma.image[a], t));
    }
}

TEST_CASE("bergman extension") {
    auto z2 = cyclic(2);
    auto ext = bergman_extension(z2);
    CHECK(ext->order() == 8);

    auto z3 = cyclic(3);
    auto e3 = bergman_extension(z3);
    const FiniteGroup& g = *e3;
    // both displayed product rules, exhaustively
    for (int g1 = 0; g1 < 3; ++g1)
        for (int h1 = 0; h1 < 3; ++h1)
            for (int g2 = 0; g2 < 3; ++g2)
                for (int h2 = 0; h2 < 3; ++h2)
                    for (int a : {1, -1}) {
                        CHECK(g.mul(bergman_index(*z3, g1, h1, a), bergman_index(*z3, g2, h2, 1)) ==
                              bergman_index(*z3, (g1 + g2) % 3, (h1 + h2) % 3, a));
                        CHECK(g.mul(bergman_index(*z3, g1, h1, a), bergman_index(*z3, g2, h2, -1)) ==
                              bergman_index(*z3, (h1 + g2) % 3, (g1 + h2) % 3, -a));
                    }
    int flip = bergman_index(*z3, 0, 0, -1);
    CHECK(g.mul(flip, flip) == g.identity()); // (e,e,-1) squares to the identity

    // extensions stay at desk scale
    CHECK_THROWS_WITH_AS(bergman_extension(symmetric(5)).get(), doctest::Contains("TooLarge"),
                         Error);
}

TEST_CASE("right cosets") {
    auto s3 = symmetric(3);
    SUBCASE("H = G gives one coset") {
        auto cs = right_cosets(s3, full_subgroup(s3));
        CHECK(cs.count() == 1);
    }
    SUBCASE("H = {e} gives one coset per element") {
        auto cs = right_cosets(s3, trivial_subgroup(s3));
        CHECK(cs.count() == 6);
        for (int x = 0; x < 6; ++x) CHECK(cs.coset_of[x] == x);
    }
    SUBCASE("index of a transposition subgroup is 3") {
        int t01 = perm_index(s3, {1, 0, 2});
        auto h = subgroup_generated(s3, {t01});
        CHECK(h.order() == 2);
        auto cs = right_cosets(s3, h);
        CHECK(cs.count() == 3);
        // Hg is constant on cosets
        for (int m : h.members)
            for (int x = 0; x < 6; ++x) CHECK(cs.coset_of[s3->mul(m, x)] == cs.coset_of[x]);
        // deterministic least-index representatives
        for (int c = 0; c < cs.count(); ++c)
            for (int x = 0; x < cs.reps[c]; ++x) CHECK(cs.coset_of[x] != c);
    }
    SUBCASE("rejects a non-subgroup") {
        Subgroup bad{s3, {0, 2}}; // a 3-cycle alone is not closed
        CHECK_THROWS_WITH_AS(right_cosets(s3, bad), doctest::Contains("NotASubgroup"), Error);
    }
}

TEST_CASE("group axioms hold exhaustively for the catalog") {
    for (const GroupPtr& g : {cyclic(2), cyclic(7), cyclic(12), klein4(), quaternion8(),
                              dihedral_group(4), symmetric(3), symmetric(4), alternating4()}) {
        REQUIRE(g->order() <= 200);
        for (int a = 0; a < g->order(); ++a) {
            CHECK(g->mul(a, g->inv(a)) == g->identity());
            for (int b = 0; b < g->order(); ++b) {
                int ab = g->mul(a, b);
                for (int c = 0; c < g->order(); ++c)
                    CHECK(g->mul(ab, c) == g->mul(a, g->mul(b, c)));
            }
        }
    }
}

TEST_CASE("large cayley validation uses the generator test") {
    const int n = 300;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    CHECK(group_from_cayley(table)->order() == n);

    table[5][7] = table[5][6]; // duplicate entry: no longer a group
    CHECK_THROWS_WITH_AS(group_from_cayley(table).get(), doctest::Contains("NotAssociative"),
                         Error);
}
