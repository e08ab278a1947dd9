#include "bipramsey/error.hpp"
#include "bipramsey/random.hpp"
#include "bipramsey/reference.hpp"
#include "bipramsey/regularity.hpp"

#include <doctest.h>

using namespace bipramsey;

namespace {

VertexPair half_graph(int m) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            edges.emplace_back(i, j);
    return VertexPair(m, m, edges);
}

VertexPair complete(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.emplace_back(i, j);
    return VertexPair(a, b, edges);
}

VertexPair random_pair(Rng& rng, int a, int b, int percent) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (static_cast<int>(uniform_below(rng, 100)) < percent)
                edges.emplace_back(i, j);
    return VertexPair(a, b, edges);
}

HostClass left_range(int from, int to) {
    HostClass c{Side::Left, {}};
    for (int v = from; v < to; ++v)
        c.vertices.push_back(v);
    return c;
}

HostClass right_range(int from, int to) {
    HostClass c = left_range(from, to);
    c.side = Side::Right;
    return c;
}

}  // namespace

TEST_CASE("density") {
    CHECK(density(complete(2, 2)) == 1);
    CHECK(density(VertexPair(2, 2, {})) == 0);
    CHECK(density(VertexPair(2, 2, {{0, 1}})) == Rational(1, 4));
    CHECK_THROWS_AS(VertexPair(0, 2, {}), Error);
}

TEST_CASE("pair accessors") {
    const VertexPair p(3, 2, {{0, 0}, {2, 1}, {2, 0}});
    CHECK(p.edge_count() == 3);
    CHECK(p.degree_a(2) == 2);
    CHECK(p.degree_b(0) == 2);
    CHECK(p.edges_between({0, 2}, {0}) == 2);
    const VertexPair t = p.transposed();
    CHECK(t.a_size() == 2);
    CHECK(t.has(1, 2));
    CHECK_FALSE(t.has(1, 0));
    CHECK(p.a_ids == std::vector<int>{1, 2, 3});
    CHECK(p.b_ids == std::vector<int>{4, 5});
}

TEST_CASE("exhaustive certification") {
    CHECK(eps_regular_exhaustive(complete(5, 4), Rational(1, 100)).regular);
    CHECK(eps_regular_exhaustive(VertexPair(4, 4, {}), Rational(1, 2)).regular);

    const VertexPair h = half_graph(4);
    const RegularityCertificate cert = eps_regular_exhaustive(h, Rational(1, 4));
    CHECK_FALSE(cert.regular);
    CHECK(cert.method == CertificateMethod::Exhaustive);
    CHECK(is_violating_subpair(h, Rational(1, 4), cert.x, cert.y));
    CHECK_FALSE(reference::eps_regular_brute(h, Rational(1, 4)).regular);

    CHECK_THROWS_AS(eps_regular_exhaustive(complete(17, 3), Rational(1, 10)), Error);
}

TEST_CASE("exhaustive agrees with the serial brute-force reference") {
    Rng rng(2024);
    for (int it = 0; it < 400; ++it) {
        const int a = uniform_int(rng, 1, 6);
        const int b = uniform_int(rng, 1, 6);
        const VertexPair p = random_pair(rng, a, b, uniform_int(rng, 0, 100));
        const Rational eps(uniform_int(rng, 1, 10), uniform_int(rng, 2, 20));
        const RegularityCertificate fast = eps_regular_exhaustive(p, eps, 1);
        const RegularityCertificate brute = reference::eps_regular_brute(p, eps);
        CAPTURE(it);
        REQUIRE(fast.regular == brute.regular);
        if (!fast.regular) {
            CHECK(is_violating_subpair(p, eps, fast.x, fast.y));
            CHECK(fast.x == brute.x);  // both report the smallest X mask
        }
    }
}

TEST_CASE("parallel certification is worker-independent") {
    Rng rng(7);
    for (int it = 0; it < 40; ++it) {
        const VertexPair p = random_pair(rng, 12, 11, 50);
        const Rational eps(1, uniform_int(rng, 3, 8));
        const auto one = eps_regular_exhaustive(p, eps, 1);
        const auto many = eps_regular_exhaustive(p, eps, 4);
        CHECK(one.regular == many.regular);
        CHECK(one.x == many.x);
        CHECK(one.y == many.y);
    }
}

TEST_CASE("sampled certification") {
    CHECK(eps_regular_sampled(complete(50, 50), Rational(1, 10), 200, 1).regular);

    const VertexPair h = half_graph(50);
    const auto cert = eps_regular_sampled(h, Rational(1, 10), 10000, 3);
    REQUIRE_FALSE(cert.regular);
    CHECK(cert.method == CertificateMethod::Sampled);
    CHECK(is_violating_subpair(h, Rational(1, 10), cert.x, cert.y));

    const auto again = eps_regular_sampled(h, Rational(1, 10), 10000, 3);
    CHECK(again.x == cert.x);
    CHECK(again.y == cert.y);
    CHECK(method_name(cert) == "sampled:10000");
    CHECK(method_name(eps_regular_exhaustive(half_graph(4), Rational(1, 4))) == "exhaustive");
}

TEST_CASE("sampled irregular verdicts are sound") {
    Rng rng(31);
    for (int it = 0; it < 150; ++it) {
        const VertexPair p = random_pair(rng, uniform_int(rng, 2, 7), uniform_int(rng, 2, 7), uniform_int(rng, 10, 90));
        const Rational eps(1, uniform_int(rng, 2, 6));
        const auto sampled = eps_regular_sampled(p, eps, 50, static_cast<std::uint64_t>(it));
        const auto exact = eps_regular_exhaustive(p, eps);
        if (!sampled.regular)
            CHECK(is_violating_subpair(p, eps, sampled.x, sampled.y));
        if (exact.regular)
            CHECK(sampled.regular);
    }
}

TEST_CASE("super-regularity") {
    CHECK(is_super_regular(complete(4, 4), Rational(1, 10), Rational(1, 2)));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            edges.emplace_back(i, j);
    CHECK_FALSE(is_super_regular(VertexPair(4, 4, edges), Rational(1, 10), Rational(1, 10)));

    // every vertex misses exactly one partner
    std::vector<std::pair<int, int>> three;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j)
                three.emplace_back(i, j);
    CHECK(is_super_regular(VertexPair(4, 4, three), Rational(9, 10), Rational(1, 2)));
}

TEST_CASE("slice parameters") {
    CHECK(slice_parameters(Rational(1, 10), Rational(1, 2)).epsilon == Rational(1, 5));
    CHECK(slice_parameters(Rational(1, 10), Rational(1, 4)).epsilon == Rational(2, 5));
    CHECK(slice_parameters(Rational(1, 5), Rational(9, 10)).epsilon == Rational(2, 5));
    CHECK_THROWS_AS(slice_parameters(Rational(1, 2), Rational(1, 2)), Error);
    CHECK_THROWS_AS(slice_parameters(Rational(1, 2), Rational(1, 3)), Error);
}

TEST_CASE("super slice on a complete pair trims the highest ids") {
    const HostColouring c = HostColouring::uniform(100, 100, 1, 1);
    const std::vector<HostClass> classes{left_range(0, 100), right_range(0, 100)};
    const SuperSliceResult r = super_slice(c, 1, classes, {{0, 1}}, {{0, 1}}, Rational(1, 100), Rational(2, 5), 2);
    CHECK(r.target_size == 98);
    CHECK(r.epsilon == Rational(1, 98));
    CHECK(r.density == Rational(37, 100));
    CHECK(r.removed[0] == std::vector<int>{98, 99});
    CHECK(r.removed[1] == std::vector<int>{98, 99});
    CHECK(r.classes[0].vertices.size() == 98);
    REQUIRE(r.verified.size() == 1);
    CHECK_FALSE(r.verified[0].has_value());  // 98 is beyond the exhaustive cap
}

TEST_CASE("super slice removes exactly the low-degree vertices") {
    // m = 10, eps r m = 2: left 0,1 and right 0,1 carry no colour-1 edges
    std::vector<std::uint8_t> raw(100, 1);
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v)
            if (u < 2 || v < 2)
                raw[static_cast<std::size_t>(u * 10 + v)] = 2;
    const HostColouring c(10, 10, 2, raw);
    const std::vector<HostClass> classes{left_range(0, 10), right_range(0, 10)};
    const auto r = super_slice(c, 1, classes, {{0, 1}}, {{0, 1}}, Rational(1, 10), Rational(1, 2), 2);
    CHECK(r.removed[0] == std::vector<int>{0, 1});
    CHECK(r.removed[1] == std::vector<int>{0, 1});
    REQUIRE(r.verified[0].has_value());
    CHECK(*r.verified[0]);

    // a third low vertex on the left cannot be absorbed
    for (int v = 0; v < 10; ++v)
        raw[static_cast<std::size_t>(2 * 10 + v)] = 2;
    const HostColouring worse(10, 10, 2, raw);
    CHECK_THROWS_AS(super_slice(worse, 1, classes, {{0, 1}}, {{0, 1}}, Rational(1, 10), Rational(1, 2), 2), Error);
}

TEST_CASE("super slice leaves unmatched classes alone") {
    const HostColouring c = HostColouring::uniform(20, 10, 1, 1);
    const std::vector<HostClass> classes{left_range(0, 10), right_range(0, 10), left_range(10, 20)};
    const auto r = super_slice(c, 1, classes, {{0, 1}, {1, 2}}, {{0, 1}}, Rational(1, 10), Rational(1, 2), 2);
    CHECK(r.classes[2].vertices.size() == 10);
    CHECK(r.classes[0].vertices.size() == 8);
    CHECK_THROWS_AS(super_slice(c, 1, classes, {{0, 1}}, {{1, 2}}, Rational(1, 10), Rational(1, 2), 2), Error);
}

TEST_CASE("majority colour takes the largest index on ties") {
    const std::vector<std::int64_t> a{5, 5, 2};
    const std::vector<std::int64_t> b{6, 1, 1};
    const std::vector<std::int64_t> c{3, 3, 3};
    CHECK(majority_colour(a) == 2);
    CHECK(majority_colour(b) == 1);
    CHECK(majority_colour(c) == 3);
}

TEST_CASE("reduced graph of a monochromatic host") {
    const HostColouring c = HostColouring::uniform(6, 6, 3, 1);
    const auto partition = equal_partition(c, 3);
    REQUIRE(partition.size() == 6);
    CHECK(partition[0].side == Side::Left);
    CHECK(partition[3].side == Side::Right);
    CHECK(partition[4].vertices == std::vector<int>{2, 3});
    const ReducedColouredGraph r = build_reduced_graph(c, partition, Rational(1, 10));
    CHECK(r.edges().size() == 9);
    for (const auto& e : r.edges())
        CHECK(e.colour == 1);
    for (const auto& v : r.verdicts)
        CHECK(v.majority_bound_holds);
    CHECK(r.max_non_neighbours() == 0);
    CHECK(r.colour_of(0, 3) == 1);
    CHECK(r.colour_of(0, 1) == 0);
    CHECK(r.colour_adjacency(1)[0] == std::vector<int>{3, 4, 5});
    CHECK(r.colour_adjacency(2)[0].empty());
}

TEST_CASE("irregular pairs are not reduced edges") {
    // left class 0 against right class 1 follows a half graph in colour 1
    std::vector<std::uint8_t> raw(64, 2);
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v)
            if (u < 4 && v >= 4 && u <= v - 4)
                raw[static_cast<std::size_t>(u * 8 + v)] = 1;
    const HostColouring c(8, 8, 2, raw);
    const auto r = build_reduced_graph(c, equal_partition(c, 2), Rational(1, 4));
    CHECK(r.colour_of(0, 3) == 0);
    CHECK(r.colour_of(0, 2) == 2);
    bool seen = false;
    for (const auto& v : r.verdicts)
        if (v.i == 0 && v.j == 3) {
            seen = true;
            CHECK_FALSE(v.adjacent);
            CHECK_FALSE(v.certificates[0].regular);
        }
    CHECK(seen);
}

TEST_CASE("partition validation") {
    const HostColouring c = HostColouring::uniform(4, 4, 1, 1);
    CHECK_THROWS_AS(validate_partition(c, {left_range(0, 2), left_range(1, 3)}), Error);
    CHECK_THROWS_AS(validate_partition(c, {left_range(0, 2), right_range(0, 3)}), Error);
    CHECK_THROWS_AS(validate_partition(c, {left_range(0, 2), right_range(3, 5)}), Error);
    CHECK_THROWS_AS(validate_partition(c, {HostClass{Side::Left, {}}}), Error);
    CHECK_NOTHROW(validate_partition(c, {left_range(0, 2), right_range(2, 4)}));
}

TEST_CASE("certificate lines") {
    const VertexPair h = half_graph(4);
    const auto cert = eps_regular_exhaustive(h, Rational(1, 4));
    const std::string line = certificate_line(1, 2, cert, h.a_ids, h.b_ids);
    CHECK(line.rfind("pair 1 2 1/4 irregular exhaustive [", 0) == 0);
    CHECK(certificate_line(1, 2, eps_regular_exhaustive(complete(2, 2), Rational(1, 4)), {1, 2}, {3, 4}) ==
          "pair 1 2 1/4 regular exhaustive");
}
