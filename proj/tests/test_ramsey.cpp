#include "bipramsey/error.hpp"
#include "bipramsey/ramsey.hpp"
#include "bipramsey/reference.hpp"

#include <doctest.h>

#include <sstream>

using namespace bipramsey;

namespace {

int exact(const std::vector<TargetGraph>& targets, int n_max, int workers = 0) {
    RamseySearchOptions opts;
    opts.n_max = n_max;
    opts.workers = workers;
    const RamseyResult r = bipartite_ramsey_exact(targets, opts);
    REQUIRE(r.value.has_value());
    return *r.value;
}

}  // namespace

TEST_CASE("small path values") {
    CHECK(exact({make_path(2), make_path(2)}, 3) == 1);
    CHECK(exact({make_path(3), make_path(3)}, 5) == 3);
    CHECK(exact({make_path(4), make_path(4)}, 5) == 3);
}

TEST_CASE("results do not depend on the worker count") {
    const std::vector<TargetGraph> t{make_path(4), make_path(4)};
    RamseySearchOptions one;
    one.n_max = 4;
    one.workers = 1;
    RamseySearchOptions many = one;
    many.workers = 4;
    const RamseyResult a = bipartite_ramsey_exact(t, one);
    const RamseyResult b = bipartite_ramsey_exact(t, many);
    CHECK(a.value == b.value);
    CHECK(a.avoiding == b.avoiding);
    CHECK(a.avoiding_size == b.avoiding_size);
}

TEST_CASE("the avoiding certificate really avoids") {
    const std::vector<TargetGraph> t{make_path(3), make_even_cycle(4)};
    RamseySearchOptions opts;
    opts.n_max = 4;
    const RamseyResult r = bipartite_ramsey_exact(t, opts);
    REQUIRE(r.avoiding_size >= 1);
    for (int s = 1; s <= 2; ++s)
        CHECK_FALSE(find_monochromatic_copy(r.avoiding, t[static_cast<std::size_t>(s - 1)], s).has_value());
}

TEST_CASE("pruned search agrees with unpruned enumeration") {
    const std::vector<std::vector<TargetGraph>> cases{
        {make_path(3), make_path(3)},     {make_path(4), make_path(4)},       {make_path(3), make_even_cycle(4)},
        {make_even_cycle(4), make_even_cycle(4)}, {make_star(2), make_path(4)}, {make_path(3), make_path(3), make_path(2)},
    };
    for (const auto& targets : cases) {
        const int n_max = targets.size() == 3 ? 3 : 4;
        for (int n = 1; n <= n_max; ++n) {
            if (targets.size() == 3 && n == 3)
                continue;  // 3^9 is fine, but keep the run short
            std::uint64_t nodes = 0;
            bool exhausted = false;
            RamseySearchOptions opts;
            const bool pruned = find_avoiding_colouring(targets, n, opts, &nodes, &exhausted).has_value();
            CAPTURE(n);
            CHECK_FALSE(exhausted);
            CHECK(pruned == reference::avoiding_colouring_exists(targets, n));
        }
    }
}

TEST_CASE("budget exhaustion leaves the value unresolved") {
    RamseySearchOptions opts;
    opts.n_max = 5;
    opts.node_budget = 3;
    const RamseyResult r = bipartite_ramsey_exact({make_even_cycle(6), make_even_cycle(4)}, opts);
    CHECK_FALSE(r.value.has_value());
    CHECK(r.budget_exhausted);
}

TEST_CASE("lower bound construction") {
    const LowerBoundCheck c4 = verify_lower_bound_construction(make_even_cycle(4), 4);
    CHECK(c4.avoids);
    CHECK(c4.host_size == 3);
    CHECK(c4.certified_bound == 4);
    CHECK(verify_lower_bound_construction(make_even_cycle(6), 6).avoids);
    CHECK(verify_lower_bound_construction(make_path(6), 6).avoids);
    CHECK(verify_lower_bound_construction(make_grid(2, 2), 4).avoids);

    const LowerBoundCheck p2 = verify_lower_bound_construction(make_path(2), 2);
    CHECK(p2.avoids);
    CHECK(p2.host_size == 0);

    CHECK_THROWS_AS(verify_lower_bound_construction(make_star(3), 4), Error);  // classes 1 and 3

    std::ostringstream out;
    write_lower_certificate(out, c4.certified_bound, c4.colouring);
    CHECK(out.str().rfind("certificate ramsey-lower 4 3\nbipcol 3 3 3\n", 0) == 0);
}
