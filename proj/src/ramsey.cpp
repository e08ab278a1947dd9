#include "bipramsey/ramsey.hpp"

#include "bipramsey/error.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <ostream>
#include <set>

namespace bipramsey {

bool validate_witness(const HostColouring& c, const TargetGraph& h, const EmbeddingWitness& w) {
    if (static_cast<int>(w.map.size()) != h.vertex_count())
        return false;
    std::set<std::pair<int, int>> images;
    for (const auto& x : w.map) {
        const int bound = x.side == Side::Left ? c.left_size() : c.right_size();
        if (x.index < 0 || x.index >= bound)
            return false;
        if (!images.emplace(x.side == Side::Left ? 0 : 1, x.index).second)
            return false;
    }
    for (const auto& [a, b] : h.edges()) {
        const HostVertex& xa = w.map[static_cast<std::size_t>(a)];
        const HostVertex& xb = w.map[static_cast<std::size_t>(b)];
        if (xa.side == xb.side)
            return false;
        const int u = xa.side == Side::Left ? xa.index : xb.index;
        const int v = xa.side == Side::Left ? xb.index : xa.index;
        if (c.colour(u, v) != w.colour)
            return false;
    }
    return true;
}

std::optional<EmbeddingWitness> find_monochromatic_copy(const HostColouring& c, const TargetGraph& h, int s) {
    CopyFinder finder(h);
    const ColourLayer layer = ColourLayer::from_colouring(c, s);
    auto map = finder.find(layer);
    if (!map)
        return std::nullopt;
    return EmbeddingWitness{s, std::move(*map)};
}

bool avoids_all_colours(const HostColouring& c, const TargetGraph& h) {
    CopyFinder finder(h);
    for (int s = 1; s <= c.colour_count(); ++s)
        if (finder.find(ColourLayer::from_colouring(c, s)))
            return false;
    return true;
}

namespace {

enum class RootOutcome { None, Found, Exhausted, Aborted };

class RootSearch {
public:
    RootSearch(const std::vector<CopyFinder>& finders, int n, std::uint64_t budget, const std::atomic<long>& best,
               long root_index)
        : finders_(finders), n_(n), colours_(static_cast<int>(finders.size())), budget_(budget), best_(best),
          root_index_(root_index), assignment_(static_cast<std::size_t>(n * n), 0) {
        for (int s = 0; s < colours_; ++s)
            layers_.emplace_back(n, n);
    }

    RootOutcome run(long root_code) {
        // Row 0 is fixed by the root: most significant digit is pair (0, 0).
        std::vector<int> digits(static_cast<std::size_t>(n_));
        for (int v = n_ - 1; v >= 0; --v) {
            digits[static_cast<std::size_t>(v)] = static_cast<int>(root_code % colours_) + 1;
            root_code /= colours_;
        }
        for (int v = 0; v < n_; ++v) {
            ++nodes_;
            if (!assign_and_check(0, v, digits[static_cast<std::size_t>(v)]))
                return RootOutcome::None;
        }
        return descend(n_);
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

    HostColouring colouring() const {
        std::vector<std::uint8_t> raw(assignment_.begin(), assignment_.end());
        return HostColouring(n_, n_, colours_, std::move(raw));
    }

private:
    bool assign_and_check(int u, int v, int c) {
        assignment_[static_cast<std::size_t>(u * n_ + v)] = static_cast<std::uint8_t>(c);
        auto& layer = layers_[static_cast<std::size_t>(c - 1)];
        layer.set(u, v);
        if (!finders_[static_cast<std::size_t>(c - 1)].find_through(layer, u, v))
            return true;
        layer.clear(u, v);
        assignment_[static_cast<std::size_t>(u * n_ + v)] = 0;
        return false;
    }

    void unassign(int u, int v) {
        const int c = assignment_[static_cast<std::size_t>(u * n_ + v)];
        layers_[static_cast<std::size_t>(c - 1)].clear(u, v);
        assignment_[static_cast<std::size_t>(u * n_ + v)] = 0;
    }

    bool rows_sorted_at(int u) const {
        const auto* prev = &assignment_[static_cast<std::size_t>((u - 1) * n_)];
        const auto* cur = &assignment_[static_cast<std::size_t>(u * n_)];
        return !std::lexicographical_compare(cur, cur + n_, prev, prev + n_);
    }

    bool leaf_accepts() const {
        // Targets without edges are never cut by find_through; check them whole.
        for (int s = 0; s < colours_; ++s) {
            const auto& f = finders_[static_cast<std::size_t>(s)];
            if (f.target().edge_count() == 0 && f.find(layers_[static_cast<std::size_t>(s)]))
                return false;
        }
        return true;
    }

    RootOutcome descend(int p) {
        if (p == n_ * n_)
            return leaf_accepts() ? RootOutcome::Found : RootOutcome::None;
        const int u = p / n_;
        const int v = p % n_;
        for (int c = 1; c <= colours_; ++c) {
            ++nodes_;
            if (budget_ != 0 && nodes_ > budget_)
                return RootOutcome::Exhausted;
            if ((nodes_ & 1023U) == 0 && best_.load(std::memory_order_relaxed) < root_index_)
                return RootOutcome::Aborted;
            if (!assign_and_check(u, v, c))
                continue;
            if (v == n_ - 1 && u > 0 && !rows_sorted_at(u)) {
                unassign(u, v);
                continue;
            }
            const RootOutcome sub = descend(p + 1);
            if (sub != RootOutcome::None)
                return sub;
            unassign(u, v);
        }
        return RootOutcome::None;
    }

    const std::vector<CopyFinder>& finders_;
    int n_;
    int colours_;
    std::uint64_t budget_;
    const std::atomic<long>& best_;
    long root_index_;
    std::vector<std::uint8_t> assignment_;
    std::vector<ColourLayer> layers_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<HostColouring> find_avoiding_colouring(const std::vector<TargetGraph>& targets, int n,
                                                     const RamseySearchOptions& options, std::uint64_t* nodes,
                                                     bool* exhausted) {
    require(!targets.empty(), ErrorCode::Precondition, "at least one target is required");
    require(n >= 0, ErrorCode::InvalidSize, "host size must be non-negative");
    const int colours = static_cast<int>(targets.size());
    std::vector<CopyFinder> finders;
    for (const auto& h : targets)
        finders.emplace_back(h);
    if (exhausted != nullptr)
        *exhausted = false;
    if (n == 0)
        return HostColouring(0, 0, colours, {});

    long roots = 1;
    for (int i = 0; i < n; ++i) {
        require(roots <= std::numeric_limits<long>::max() / colours, ErrorCode::SizeLimit, "too many DFS roots");
        roots *= colours;
    }

    std::atomic<long> best{std::numeric_limits<long>::max()};
    std::vector<RootOutcome> outcome(static_cast<std::size_t>(roots), RootOutcome::None);
    std::vector<std::uint64_t> root_nodes(static_cast<std::size_t>(roots), 0);
    std::vector<HostColouring> found(static_cast<std::size_t>(roots));
    const int threads = options.workers > 0 ? options.workers : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long root = 0; root < roots; ++root) {
        if (best.load() < root) {
            outcome[static_cast<std::size_t>(root)] = RootOutcome::Aborted;
            continue;
        }
        RootSearch search(finders, n, options.node_budget, best, root);
        const RootOutcome result = search.run(root);
        outcome[static_cast<std::size_t>(root)] = result;
        root_nodes[static_cast<std::size_t>(root)] = search.nodes();
        if (result == RootOutcome::Found) {
            found[static_cast<std::size_t>(root)] = search.colouring();
            long current = best.load();
            while (root < current && !best.compare_exchange_weak(current, root)) {
            }
        }
    }

    const long winner = best.load();
    std::uint64_t total = 0;
    bool ran_out = false;
    for (long root = 0; root < roots && root <= winner; ++root) {
        total += root_nodes[static_cast<std::size_t>(root)];
        ran_out = ran_out || outcome[static_cast<std::size_t>(root)] == RootOutcome::Exhausted;
    }
    if (nodes != nullptr)
        *nodes += total;
    if (winner != std::numeric_limits<long>::max())
        return std::move(found[static_cast<std::size_t>(winner)]);
    if (exhausted != nullptr)
        *exhausted = ran_out;
    return std::nullopt;
}

RamseyResult bipartite_ramsey_exact(const std::vector<TargetGraph>& targets, RamseySearchOptions options) {
    const int colours = static_cast<int>(targets.size());
    require(colours >= 1, ErrorCode::Precondition, "at least one target is required");
    if (options.n_max <= 0)
        options.n_max = colours <= 2 ? 6 : 4;
    RamseyResult result;
    result.avoiding = HostColouring(0, 0, colours, {});
    for (int n = 1; n <= options.n_max; ++n) {
        bool exhausted = false;
        auto avoiding = find_avoiding_colouring(targets, n, options, &result.nodes, &exhausted);
        if (avoiding) {
            result.avoiding_size = n;
            result.avoiding = std::move(*avoiding);
            continue;
        }
        if (exhausted) {
            result.budget_exhausted = true;
            return result;
        }
        result.value = n;
        return result;
    }
    return result;
}

namespace {
// Sizes of the two colour classes across components can be swapped per
// component; checks whether some choice splits V(H) evenly.
bool has_even_bipartition(const TargetGraph& h) {
    auto chi = proper_two_colouring(h);
    if (!chi)
        return false;
    const int n = h.vertex_count();
    std::vector<char> reachable(static_cast<std::size_t>(n + 1), 0);
    reachable[0] = 1;
    for (const auto& comp : connected_components(h)) {
        int ones = 0;
        for (int v : comp)
            ones += chi->colour[static_cast<std::size_t>(v)] == 1 ? 1 : 0;
        const int twos = static_cast<int>(comp.size()) - ones;
        std::vector<char> next(static_cast<std::size_t>(n + 1), 0);
        for (int s = 0; s <= n; ++s) {
            if (!reachable[static_cast<std::size_t>(s)])
                continue;
            if (s + ones <= n)
                next[static_cast<std::size_t>(s + ones)] = 1;
            if (s + twos <= n)
                next[static_cast<std::size_t>(s + twos)] = 1;
        }
        reachable = std::move(next);
    }
    return n % 2 == 0 && reachable[static_cast<std::size_t>(n / 2)];
}
}  // namespace

LowerBoundCheck verify_lower_bound_construction(const TargetGraph& h, int n) {
    require(h.vertex_count() == n, ErrorCode::Structural,
            "target has " + std::to_string(h.vertex_count()) + " vertices, expected " + std::to_string(n));
    require(n >= 2 && n % 2 == 0, ErrorCode::Structural, "n must be even and at least 2");
    require(has_even_bipartition(h), ErrorCode::Structural, "target has no proper 2-colouring with classes n/2");
    LowerBoundCheck check;
    check.host_size = 3 * (n / 2 - 1);
    check.certified_bound = check.host_size + 1;
    if (check.host_size == 0) {
        check.colouring = HostColouring(0, 0, 3, {});
        check.avoids = true;
        return check;
    }
    check.colouring = extremal_three_split(n);
    check.avoids = avoids_all_colours(check.colouring, h);
    return check;
}

void write_lower_certificate(std::ostream& out, int certified_bound, const HostColouring& c) {
    out << "certificate ramsey-lower " << certified_bound << ' ' << c.colour_count() << '\n';
    write_colouring(out, c);
}

}  // namespace bipramsey
