#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matcoh/combinatorics.hpp"
#include "matcoh/matroid.hpp"
#include "matcoh/randomgen.hpp"

using namespace matcoh;

TEST_CASE("uniform matroids") {
    Matroid e = from_uniform(0, 0);
    CHECK(e.n == 0);
    CHECK(e.rank() == 0);

    Matroid u12 = from_uniform(1, 2);
    CHECK(u12.rank(0b01) == 1);
    CHECK(u12.rank(0b10) == 1);
    CHECK(u12.rank(0b11) == 1);

    Matroid u23 = from_uniform(2, 3);
    for (uint32_t s = 0; s < 8; ++s)
        CHECK(u23.rank(s) == std::min(2, popcount(s)));
    CHECK_THROWS(from_uniform(4, 3));
}

TEST_CASE("graphic matroids") {
    SUBCASE("triangle is U_{2,3}") {
        CHECK(from_graph(complete_graph(3)).rank_tbl == from_uniform(2, 3).rank_tbl);
    }
    SUBCASE("a graph loop is a matroid loop") {
        Graph g(1, {{0, 0}});
        CHECK(from_graph(g).rank_tbl == from_uniform(0, 1).rank_tbl);
    }
    SUBCASE("two-edge path is free") {
        CHECK(from_graph(path_graph(3)).rank_tbl == from_uniform(2, 2).rank_tbl);
    }
}

TEST_CASE("column matroids") {
    CHECK(from_matrix(IntMatrix::identity(2)).rank_tbl == from_uniform(2, 2).rank_tbl);
    CHECK(from_matrix(IntMatrix::from_rows({{1, 0, 1}, {0, 1, 1}})).rank_tbl ==
          from_uniform(2, 3).rank_tbl);
    Matroid z = from_matrix(IntMatrix::from_rows({{1, 0}, {0, 0}}));
    CHECK(is_loop(z, 1));
}

TEST_CASE("axiom validation") {
    CHECK(validate_axioms(pappus_matroid()).ok);
    CHECK(validate_axioms(non_pappus_matroid()).ok);

    Matroid bad = from_uniform(1, 1);
    bad.rank_tbl[1] = 2;  // rank({1}) = 2 > |{1}|
    AxiomReport r = validate_axioms(bad);
    CHECK(!r.ok);
    CHECK(r.axiom == 1);
    CHECK(r.s1 == 1);

    Matroid mono = from_uniform(2, 2);
    mono.rank_tbl[0b11] = 0;  // not monotone
    AxiomReport r2 = validate_axioms(mono);
    CHECK(!r2.ok);
    CHECK(r2.axiom == 2);
}

TEST_CASE("minors") {
    CHECK(deletion(from_uniform(2, 3), 0).rank_tbl == from_uniform(2, 2).rank_tbl);
    CHECK(deletion(from_uniform(1, 2), 1).rank_tbl == from_uniform(1, 1).rank_tbl);
    CHECK(deletion(from_uniform(0, 1), 0).rank_tbl == from_uniform(0, 0).rank_tbl);

    CHECK(contraction(from_uniform(2, 3), 0).rank_tbl == from_uniform(1, 2).rank_tbl);
    Matroid loop_plus_coloop = direct_sum(from_uniform(0, 1), from_uniform(1, 1));
    CHECK(contraction(loop_plus_coloop, 0).rank_tbl == from_uniform(1, 1).rank_tbl);
    for (int n = 1; n <= 4; ++n)
        CHECK(contraction(from_uniform(n, n), 0).rank_tbl == from_uniform(n - 1, n - 1).rank_tbl);
}

TEST_CASE("direct sums") {
    CHECK(direct_sum(from_uniform(1, 1), from_uniform(1, 1)).rank_tbl ==
          from_uniform(2, 2).rank_tbl);
    Matroid m = from_uniform(2, 3);
    CHECK(direct_sum(m, from_uniform(0, 0)).rank_tbl == m.rank_tbl);
    Matroid s = direct_sum(from_uniform(0, 1), from_uniform(1, 1));
    CHECK(s.rank() == 1);
    CHECK(is_loop(s, 0));
}

TEST_CASE("circuit-hyperplanes and relaxation") {
    SUBCASE("pappus has exactly the nine lines") {
        auto chs = circuit_hyperplanes(pappus_matroid());
        CHECK(chs.size() == 9);
        // {4,5,6} is one of them (elements 4,5,6 are bits 3,4,5)
        CHECK(std::count(chs.begin(), chs.end(), 0b000111000u) == 1);
    }
    SUBCASE("K4 has its four triangles") {
        auto chs = circuit_hyperplanes(from_graph(complete_graph(4)));
        CHECK(chs.size() == 4);
        for (uint32_t s : chs) CHECK(popcount(s) == 3);
    }
    SUBCASE("U_{2,3} has none") {
        CHECK(circuit_hyperplanes(from_uniform(2, 3)).empty());
    }
    SUBCASE("relaxing pappus gives a valid matroid with eight lines left") {
        Matroid np = non_pappus_matroid();
        CHECK(validate_axioms(np).ok);
        CHECK(circuit_hyperplanes(np).size() == 8);  // distinguishes it from pappus
    }
    SUBCASE("relaxing a K4 triangle leaves three") {
        Matroid m = from_graph(complete_graph(4));
        Matroid r = relax(m, circuit_hyperplanes(m)[0]);
        CHECK(validate_axioms(r).ok);
        CHECK(r.rank() == 3);
        CHECK(circuit_hyperplanes(r).size() == 3);
    }
    SUBCASE("non circuit-hyperplane is rejected") {
        CHECK_THROWS(relax(from_uniform(2, 3), 0b011));
    }
}

TEST_CASE("element classification") {
    for (int n = 1; n <= 4; ++n)
        for (int e = 0; e < n; ++e)
            CHECK(classify_element(from_uniform(n, n), e) == ElementClass::Coloop);
    CHECK(classify_element(from_uniform(0, 1), 0) == ElementClass::Loop);
    auto pp = parallel_pairs(from_uniform(1, 2));
    REQUIRE(pp.size() == 1);
    CHECK(pp[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("closure") {
    Matroid u23 = from_uniform(2, 3);
    CHECK(closure(u23, 0b011) == 0b111);
    CHECK(closure(u23, 0) == 0);
    CHECK(closure(u23, 0b111) == 0b111);
    Matroid withloop = direct_sum(from_uniform(0, 1), from_uniform(1, 1));
    CHECK(closure(withloop, 0) == 0b01);  // loops close into the empty set
}

TEST_CASE("characteristic polynomial") {
    CHECK(char_poly(from_uniform(0, 0)) == std::vector<Int>{1});
    CHECK(char_poly(direct_sum(from_uniform(0, 1), from_uniform(2, 2))).empty());
    CHECK(char_poly(from_uniform(2, 3)) == std::vector<Int>{2, -3, 1});
}

TEST_CASE("characteristic polynomial identities on random matroids") {
    std::mt19937_64 rng(4242);
    int tested = 0;
    for (int t = 0; t < 120; ++t) {
        RandomInstance inst = random_matroid_instance(rng, 7);
        const Matroid& m = inst.m;
        if (m.n == 0) continue;
        ++tested;
        auto chi = char_poly(m);
        for (int e = 0; e < m.n; ++e) {
            Matroid del = deletion(m, e), con = contraction(m, e);
            if (is_coloop(m, e)) {
                // (lambda - 1) * chi(M/e)
                CHECK(chi == poly_sub(poly_mul({0, 1}, char_poly(con)), char_poly(con)));
            } else {
                CHECK(chi == poly_sub(char_poly(del), char_poly(con)));
            }
            if (is_loop(m, e)) CHECK(chi.empty());
        }
        for (auto [a, b] : parallel_pairs(m)) {
            CHECK(chi == char_poly(deletion(m, a)));
            CHECK(chi == char_poly(deletion(m, b)));
        }
        for (uint32_t s0 : circuit_hyperplanes(m)) {
            auto relaxed = char_poly(relax(m, s0));
            std::vector<Int> corr = {-1, 1};  // lambda - 1
            if ((m.rank() - 1) % 2 == 1)
                corr = {1, -1};
            CHECK(relaxed == poly_add(chi, corr));
            break;  // one relaxation per instance is plenty
        }
    }
    CHECK(tested > 80);
}

TEST_CASE("direct sum multiplies characteristic polynomials") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        RandomInstance a = random_matroid_instance(rng, 4);
        RandomInstance b = random_matroid_instance(rng, 4);
        CHECK(char_poly(direct_sum(a.m, b.m)) == poly_mul(char_poly(a.m), char_poly(b.m)));
    }
}

TEST_CASE("corank identities") {
    std::mt19937_64 rng(55);
    for (int t = 0; t < 40; ++t) {
        RandomInstance inst = random_matroid_instance(rng, 6);
        const Matroid& m = inst.m;
        if (m.n == 0) continue;
        int e = int(rng() % m.n);
        Matroid del = deletion(m, e), con = contraction(m, e);
        uint32_t low = (1u << e) - 1;
        for (uint32_t s = 0; s < (1u << (m.n - 1)); ++s) {
            uint32_t old_mask = (s & low) | ((s & ~low) << 1);
            CHECK(del.corank(s) == m.corank(old_mask) - m.corank(m.full_mask() & ~(1u << e)));
            CHECK(con.corank(s) == m.corank(old_mask | (1u << e)));
        }
        RandomInstance other = random_matroid_instance(rng, 4);
        Matroid ds = direct_sum(m, other.m);
        uint32_t s1 = uint32_t(rng()) & m.full_mask();
        uint32_t s2 = uint32_t(rng()) & other.m.full_mask();
        CHECK(ds.corank(s1 | (s2 << m.n)) == m.corank(s1) + other.m.corank(s2));
    }
}

TEST_CASE("chromatic polynomial link") {
    std::mt19937_64 rng(808);
    GraphOptions opt;
    opt.max_vertices = 5;
    opt.allow_loops = true;
    opt.allow_multi = true;
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(rng, opt);
        std::vector<Int> lhs = chromatic_polynomial(g);
        int k = g.component_count((1u << g.ne()) - 1);
        std::vector<Int> rhs(k);  // lambda^k factor
        rhs.push_back(1);
        rhs = poly_mul(rhs, char_poly(from_graph(g)));
        CHECK(lhs == rhs);
        for (int colors = 0; colors <= 6; ++colors)
            CHECK(poly_eval(lhs, colors) == count_proper_colorings(g, colors));
    }
}

TEST_CASE("isomorphism check") {
    CHECK(isomorphic(from_graph(complete_graph(3)), from_uniform(2, 3)));
    CHECK(!isomorphic(from_uniform(1, 2), from_uniform(2, 2)));
}
