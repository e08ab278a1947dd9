#include "bipramsey/colouring.hpp"
#include "bipramsey/error.hpp"

#include <doctest.h>

#include <sstream>

using namespace bipramsey;

TEST_CASE("extremal three split") {
    const HostColouring c4 = extremal_three_split(4);
    CHECK(c4.left_size() == 3);
    CHECK(c4.right_size() == 3);
    CHECK(c4.colour_count() == 3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            CHECK(c4.colour(u, v) == v + 1);

    const HostColouring c6 = extremal_three_split(6);
    CHECK(c6.left_size() == 6);
    for (int s = 1; s <= 3; ++s)
        CHECK(colour_subgraph(c6, s).size() == 12);  // 6 left vertices times a part of 2

    // colour 1 of the n=4 split is a star at the single part-1 vertex
    const auto star = colour_subgraph(c4, 1);
    CHECK(star == BipartiteEdges{{0, 0}, {1, 0}, {2, 0}});
    CHECK_THROWS_AS(extremal_three_split(5), Error);
}

TEST_CASE("random colourings") {
    const HostColouring one = random_colouring(1, 1, 0);
    CHECK(one.colour(0, 0) == 1);
    CHECK(random_colouring(3, 3, 7) == random_colouring(3, 3, 7));
    CHECK_FALSE(random_colouring(8, 3, 7) == random_colouring(8, 3, 8));

    const HostColouring big = random_colouring(50, 3, 1);
    for (int s = 1; s <= 3; ++s) {
        const double density = static_cast<double>(colour_subgraph(big, s).size()) / 2500.0;
        CHECK(density > 0.28);
        CHECK(density < 0.38);
    }
}

TEST_CASE("colour subgraph range") {
    const HostColouring mono = HostColouring::uniform(2, 2, 2, 1);
    CHECK(colour_subgraph(mono, 2).empty());
    CHECK(colour_subgraph(mono, 1).size() == 4);
    CHECK_THROWS_AS(colour_subgraph(mono, 3), Error);
    CHECK_THROWS_AS(colour_subgraph(mono, 0), Error);
}

TEST_CASE("colouring text round trip and rejection") {
    const HostColouring c = random_colouring(4, 3, 2);
    std::stringstream ss;
    write_colouring(ss, c);
    CHECK(read_colouring(ss) == c);

    std::istringstream shuffled("bipcol 1 2 2\n1 2 2\n1 1 1\n");
    const HostColouring s = read_colouring(shuffled);
    CHECK(s.colour(0, 0) == 1);
    CHECK(s.colour(0, 1) == 2);

    std::istringstream missing("bipcol 1 2 2\n1 1 1\n");
    CHECK_THROWS_AS(read_colouring(missing), Error);
    std::istringstream dup("bipcol 1 2 2\n1 1 1\n1 1 2\n1 2 1\n");
    CHECK_THROWS_AS(read_colouring(dup), Error);
    std::istringstream range("bipcol 1 1 2\n1 1 3\n");
    CHECK_THROWS_AS(read_colouring(range), Error);
}
