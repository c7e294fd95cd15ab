#include "doctest.h"
#include "dcx/construction.hpp"
#include "dcx/spaces.hpp"

using namespace dcx;

TEST_CASE("graph stars") {
    auto space = make_graph_stars(2, 2);
    CHECK(space.generator_count() == 4);
    CHECK(space.generator(0).name == "R1");
    CHECK(space.generator(0).set.pretty() == "{(1,1),(1,2)}");
    CHECK(space.generator(3).name == "C2");
    CHECK(space.covers_ground());
}

TEST_CASE("boolean and monotone bases") {
    auto space = make_boolean_basis(2);
    CHECK(space.generator_count() == 4);
    CHECK(space.ground()->size() == 4);
    // B1 = strings with v1 = 1
    CHECK(space.generator(0).set.pretty() == "{10,11}");
    CHECK(space.generator(2).name == "~x1");
    CHECK(space.generator(2).set.pretty() == "{00,01}");

    auto mono = make_monotone_basis(2);
    CHECK(mono.generator_count() == 4);
    CHECK(mono.generator(2).name == "empty");
    CHECK(mono.generator(2).set.is_empty());
    CHECK(mono.generator(3).set.is_full());
}

TEST_CASE("rectangles and clique families") {
    auto rect = make_rectangles(2);
    CHECK(rect.generator_count() == 16);
    CHECK_THROWS_AS(make_rectangles(5), std::invalid_argument);

    auto clique = make_clique_family(2, 2);
    CHECK(clique.generator_count() == 8);
    CHECK_THROWS_AS(make_clique_family(13, 2), std::invalid_argument);
    // W{1,2} covers both rows
    CHECK(clique.generator(3).name == "W{1,2}");
    CHECK(clique.generator(3).set.is_full());
}

TEST_CASE("tensor stars") {
    auto t = make_tensor_stars(3, 3);
    CHECK(t.generator_count() == 9);
    CHECK(t.ground()->size() == 27);
    // dim 2 coincides with graph stars
    auto t2 = make_tensor_stars(2, 2);
    auto g2 = make_graph_stars(2, 2);
    for (int i = 0; i < 4; ++i)
        CHECK(t2.generator(i).set.bits() == g2.generator(i).set.bits());
}

TEST_CASE("space descriptor parsing") {
    CHECK(parse_space("stars:3x4").generator_count() == 7);
    CHECK(parse_space("bool:3").generator_count() == 6);
    CHECK(parse_space("mono:2").generator_count() == 4);
    CHECK(parse_space("rect:2").generator_count() == 16);
    CHECK(parse_space("tensor:2^3").generator_count() == 6);
    CHECK_THROWS_AS(parse_space("nope:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("stars"), std::invalid_argument);
}

TEST_CASE("phi bijection") {
    CHECK(phi_forward(2, 2, 3) == "0110");
    CHECK(phi_forward(1, 1, 2) == "01");
    CHECK(phi_backward(2, "0000") == std::pair{1, 1});
    // round trip is the identity
    for (int u = 1; u <= 4; ++u)
        for (int v = 1; v <= 4; ++v) CHECK(phi_backward(2, phi_forward(2, u, v)) == std::pair{u, v});
    CHECK_THROWS_AS(phi_forward(2, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(phi_backward(2, "010"), std::invalid_argument);
}

TEST_CASE("phi is the identity on canonical indices") {
    int n = 2, N = 4;
    auto grid = GroundSet::grid(N, N);
    auto cube = GroundSet::hypercube(2 * n);
    for (int u = 1; u <= N; ++u)
        for (int v = 1; v <= N; ++v)
            CHECK(grid->grid_index(u, v) == cube->cube_index(phi_forward(n, u, v)));
}

TEST_CASE("function from graph") {
    auto grid = GroundSet::grid(2, 2);
    Subset empty = Subset::empty(grid);
    CHECK(function_from_graph(empty).is_empty());

    Subset g = Subset::empty(grid);
    g.add(grid->grid_index(1, 2));
    CHECK(function_from_graph(g).pretty() == "{01}");

    Subset neq = make_neq(2);
    CHECK(function_from_graph(neq).pretty() == "{01,10}");
    CHECK(graph_from_function(function_from_graph(neq)) == neq);
    CHECK(function_from_graph(neq).count() == neq.count());

    auto bad = Subset::empty(GroundSet::grid(3, 3));
    CHECK_THROWS_AS(function_from_graph(bad), std::invalid_argument);
}

TEST_CASE("catalog sets") {
    Subset neq = make_neq(2);
    CHECK(neq.pretty() == "{(1,2),(2,1)}");

    Subset chess = make_chessboard(5, 5);
    CHECK(chess.count() == 13);
    auto g = chess.ground();
    CHECK(chess.contains(g->grid_index(1, 1)));  // corners present
    CHECK(chess.contains(g->grid_index(5, 5)));
    CHECK_FALSE(chess.contains(g->grid_index(1, 2)));

    auto space = make_graph_stars(5, 5);
    CHECK(parse_target(space.ground(), "chess:5x5") == Subset(space.ground(), chess.bits()));
    CHECK_THROWS_AS(parse_target(space.ground(), "neq:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_target(space.ground(), "what:3"), std::invalid_argument);
}

TEST_CASE("figure-1 chessboard construction evaluates to the pattern") {
    Construction c = chessboard_figure1_construction();
    auto r = evaluate(c);
    CHECK(r.value == Subset(c.space.ground(), make_chessboard(5, 5).bits()));
    CHECK(r.cost == CostTriple{9, 2, 7});
}

TEST_CASE("duality target") {
    // f = NEQ over {0,1}^2: f^{-1}(1) = {01,10}
    auto cube = GroundSet::hypercube(2);
    Subset f = Subset::empty(cube);
    f.add(cube->cube_index("01"));
    f.add(cube->cube_index("10"));
    Subset F = duality_target(f);
    CHECK(F.ground()->size() == 8);
    // F(1,z) = f(z), F(0,z) = 1 - f(z)
    auto big = F.ground();
    CHECK(F.contains(big->cube_index("101")));
    CHECK(F.contains(big->cube_index("110")));
    CHECK_FALSE(F.contains(big->cube_index("100")));
    CHECK(F.contains(big->cube_index("000")));
    CHECK(F.contains(big->cube_index("011")));
    CHECK_FALSE(F.contains(big->cube_index("001")));
    CHECK(F.count() == 4);
}

TEST_CASE("star vec weight is exactly 2") {
    auto space = make_graph_stars(3, 3);
    for (int w = 0; w < space.ground()->size(); ++w) {
        int weight = 0;
        for (const auto& gen : space.generators())
            if (gen.set.contains(w)) ++weight;
        CHECK(weight == 2);
    }
}

TEST_CASE("phi preimages of boolean generators are unions of stars") {
    for (int n = 1; n <= 3; ++n) {
        int N = 1 << n;
        auto bool_space = make_boolean_basis(2 * n);
        auto stars = make_graph_stars(N, N);
        for (const auto& gen : bool_space.generators()) {
            Subset pre = graph_from_function(gen.set);
            // pre must be exactly the union of the stars it contains
            Subset uni = Subset::empty(stars.ground());
            for (const auto& star : stars.generators())
                if (is_subset(star.set, Subset(stars.ground(), pre.bits()))) uni = set_union(uni, star.set);
            CHECK(uni.bits() == pre.bits());
        }
    }
}
