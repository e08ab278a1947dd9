#pragma once

#include "bipramsey/colouring.hpp"
#include "bipramsey/graph.hpp"
#include "bipramsey/subgraph_search.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace bipramsey {

struct EmbeddingWitness {
    int colour = 0;
    std::vector<HostVertex> map;  // target vertex -> host vertex
};

/// Independent re-check: injective, every target edge lands on a host pair
/// of the witness colour, adjacent target vertices on opposite sides.
bool validate_witness(const HostColouring& c, const TargetGraph& h, const EmbeddingWitness& w);

std::optional<EmbeddingWitness> find_monochromatic_copy(const HostColouring& c, const TargetGraph& h, int s);

bool avoids_all_colours(const HostColouring& c, const TargetGraph& h);

struct RamseySearchOptions {
    /// Largest host size tried. Defaults follow the desk-scale caps.
    int n_max = 0;
    /// Node budget per DFS root; 0 means unlimited.
    std::uint64_t node_budget = 0;
    /// OpenMP threads; 0 leaves the runtime default.
    int workers = 0;
};

struct RamseyResult {
    /// Least N with no avoiding colouring, if established within n_max.
    std::optional<int> value;
    bool budget_exhausted = false;
    /// Largest N for which an avoiding colouring was found.
    int avoiding_size = 0;
    /// Avoiding colouring of K_{avoiding_size, avoiding_size}; for a resolved
    /// value this is the N-1 certificate.
    HostColouring avoiding;
    std::uint64_t nodes = 0;
};

/// Exact bipartite Ramsey number by DFS over pair colours in lexicographic
/// (u, v) order with a monochromatic-copy cut after every assignment and
/// sorted-row symmetry pruning. Roots are the colourings of the first row and
/// are explored in parallel; the reported colouring comes from the smallest
/// root that has one, so answers do not depend on the worker count.
RamseyResult bipartite_ramsey_exact(const std::vector<TargetGraph>& targets, RamseySearchOptions options = {});

/// Searches K_{n,n} only: returns an avoiding colouring or nullopt; sets
/// `exhausted` when some root ran out of budget before deciding.
std::optional<HostColouring> find_avoiding_colouring(const std::vector<TargetGraph>& targets, int n,
                                                     const RamseySearchOptions& options, std::uint64_t* nodes,
                                                     bool* exhausted);

struct LowerBoundCheck {
    bool avoids = false;
    int host_size = 0;     // N = 3(n/2 - 1)
    int certified_bound;   // R >= N + 1 = 3n/2 - 2
    HostColouring colouring;
};

/// Builds the three-part extremal colouring for an n-vertex target with
/// classes of size n/2 and checks it has no monochromatic copy.
LowerBoundCheck verify_lower_bound_construction(const TargetGraph& h, int n);

/// "certificate ramsey-lower N r" followed by the bipcol dump.
void write_lower_certificate(std::ostream& out, int certified_bound, const HostColouring& c);

}  // namespace bipramsey
