#include "bipramsey/regularity.hpp"

#include "bipramsey/error.hpp"
#include "bipramsey/random.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

namespace bipramsey {

namespace {

std::size_t words_for(int n) { return static_cast<std::size_t>(std::max(1, (n + 63) / 64)); }

inline void set_bit(std::uint64_t* bits, int i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline bool test_bit(const std::uint64_t* bits, int i) { return (bits[i >> 6] >> (i & 63)) & 1U; }

int popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    int total = 0;
    for (std::size_t i = 0; i < words; ++i)
        total += std::popcount(a[i] & b[i]);
    return total;
}

/// Integer form of the regularity test for a pair with |A||B| = area and
/// e(A, B) = edges, at eps = num / den.
struct ViolationTest {
    std::int64_t area;
    std::int64_t edges;
    std::int64_t num;
    std::int64_t den;

    /// |S/(x t) - e/area| >= num/den.
    bool violates(std::int64_t sum, std::int64_t x, std::int64_t t) const {
        const __int128 lhs = static_cast<__int128>(sum) * area - static_cast<__int128>(edges) * x * t;
        const __int128 abs_lhs = lhs < 0 ? -lhs : lhs;
        return abs_lhs * den >= static_cast<__int128>(num) * x * t * area;
    }
};

/// Smallest admissible size k with k >= eps * size (at least 1).
int min_size(const SmallFraction& eps, int size) {
    const std::int64_t k = (eps.num * size + eps.den - 1) / eps.den;
    return static_cast<int>(std::max<std::int64_t>(1, k));
}

struct ExtremeChoice {
    bool found = false;
    int size = 0;
    bool top = true;
};

/// Given degrees of the free side into a fixed set of size x, finds the
/// smallest admissible size whose top or bottom degree sum violates.
ExtremeChoice scan_extremes(std::vector<int> degrees, int x, int min_t, const ViolationTest& test) {
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    const int count = static_cast<int>(degrees.size());
    std::int64_t total = 0;
    for (int d : degrees)
        total += d;
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(count + 1), 0);
    for (int i = 0; i < count; ++i)
        prefix[static_cast<std::size_t>(i + 1)] = prefix[static_cast<std::size_t>(i)] + degrees[static_cast<std::size_t>(i)];
    for (int t = min_t; t <= count; ++t) {
        const std::int64_t top = prefix[static_cast<std::size_t>(t)];
        const std::int64_t bottom = total - prefix[static_cast<std::size_t>(count - t)];
        if (test.violates(top, x, t))
            return {true, t, true};
        if (test.violates(bottom, x, t))
            return {true, t, false};
    }
    return {};
}

std::vector<int> pick_extreme(const std::vector<int>& degrees, int size, bool top) {
    std::vector<int> order(degrees.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return top ? degrees[static_cast<std::size_t>(a)] > degrees[static_cast<std::size_t>(b)]
                   : degrees[static_cast<std::size_t>(a)] < degrees[static_cast<std::size_t>(b)];
    });
    order.resize(static_cast<std::size_t>(size));
    std::sort(order.begin(), order.end());
    return order;
}

}  // namespace

VertexPair::VertexPair(int a_size, int b_size, const std::vector<std::pair<int, int>>& edges)
    : a_size_(a_size), b_size_(b_size), a_words_(words_for(a_size)), b_words_(words_for(b_size)),
      a_rows_(static_cast<std::size_t>(a_size) * words_for(b_size), 0),
      b_rows_(static_cast<std::size_t>(b_size) * words_for(a_size), 0) {
    require(a_size > 0 && b_size > 0, ErrorCode::DegeneratePair, "pair sides must be non-empty");
    for (const auto& [i, j] : edges) {
        require(i >= 0 && i < a_size && j >= 0 && j < b_size, ErrorCode::Structural, "pair edge out of range");
        if (has(i, j))
            continue;
        set_bit(&a_rows_[static_cast<std::size_t>(i) * b_words_], j);
        set_bit(&b_rows_[static_cast<std::size_t>(j) * a_words_], i);
        ++edges_;
    }
    a_ids.resize(static_cast<std::size_t>(a_size));
    b_ids.resize(static_cast<std::size_t>(b_size));
    std::iota(a_ids.begin(), a_ids.end(), 1);
    std::iota(b_ids.begin(), b_ids.end(), a_size + 1);
}

VertexPair VertexPair::from_colouring(const HostColouring& c, int s, const HostClass& a, const HostClass& b) {
    require(a.side != b.side, ErrorCode::Partition, "pair classes must lie on opposite host sides");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
        for (std::size_t j = 0; j < b.vertices.size(); ++j) {
            const int u = a.side == Side::Left ? a.vertices[i] : b.vertices[j];
            const int v = a.side == Side::Left ? b.vertices[j] : a.vertices[i];
            if (c.colour(u, v) == s)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    VertexPair p(static_cast<int>(a.vertices.size()), static_cast<int>(b.vertices.size()), edges);
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
        p.a_ids[i] = c.global_id(a.side, a.vertices[i]);
    for (std::size_t j = 0; j < b.vertices.size(); ++j)
        p.b_ids[j] = c.global_id(b.side, b.vertices[j]);
    return p;
}

bool VertexPair::has(int i, int j) const { return test_bit(a_row(i), j); }

int VertexPair::degree_a(int i) const {
    int d = 0;
    for (std::size_t w = 0; w < b_words_; ++w)
        d += std::popcount(a_row(i)[w]);
    return d;
}

int VertexPair::degree_b(int j) const {
    int d = 0;
    for (std::size_t w = 0; w < a_words_; ++w)
        d += std::popcount(b_row(j)[w]);
    return d;
}

std::int64_t VertexPair::edges_between(const std::vector<int>& x, const std::vector<int>& y) const {
    std::int64_t e = 0;
    for (int i : x)
        for (int j : y)
            e += has(i, j) ? 1 : 0;
    return e;
}

VertexPair VertexPair::transposed() const {
    VertexPair t;
    t.a_size_ = b_size_;
    t.b_size_ = a_size_;
    t.a_words_ = b_words_;
    t.b_words_ = a_words_;
    t.edges_ = edges_;
    t.a_rows_ = b_rows_;
    t.b_rows_ = a_rows_;
    t.a_ids = b_ids;
    t.b_ids = a_ids;
    return t;
}

Rational density(const VertexPair& p) {
    return Rational(p.edge_count(), static_cast<std::int64_t>(p.a_size()) * p.b_size());
}

bool is_violating_subpair(const VertexPair& p, const Rational& eps, const std::vector<int>& x,
                          const std::vector<int>& y) {
    if (x.empty() || y.empty())
        return false;
    if (Rational(static_cast<std::int64_t>(x.size())) < eps * p.a_size() ||
        Rational(static_cast<std::int64_t>(y.size())) < eps * p.b_size())
        return false;
    for (int i : x)
        if (i < 0 || i >= p.a_size())
            return false;
    for (int j : y)
        if (j < 0 || j >= p.b_size())
            return false;
    const Rational sub(p.edges_between(x, y), static_cast<std::int64_t>(x.size() * y.size()));
    const Rational diff = sub - density(p);
    return (diff < 0 ? Rational(-diff) : diff) >= eps;
}

RegularityCertificate eps_regular_exhaustive(const VertexPair& p, const Rational& eps, int workers) {
    require(eps > 0, ErrorCode::Precondition, "eps must be positive");
    require(p.a_size() <= kExhaustiveRegularityCap && p.b_size() <= kExhaustiveRegularityCap, ErrorCode::SizeLimit,
            "exhaustive certification is capped at " + std::to_string(kExhaustiveRegularityCap) +
                " vertices per side; use the sampled variant");
    RegularityCertificate cert;
    cert.epsilon = eps;
    cert.method = CertificateMethod::Exhaustive;
    if (eps > 1)
        return cert;  // no sub-pair is large enough and no deviation reaches eps

    const SmallFraction e = small_fraction(eps);
    const int na = p.a_size();
    const int nb = p.b_size();
    const int min_x = min_size(e, na);
    const int min_t = min_size(e, nb);
    const ViolationTest test{static_cast<std::int64_t>(na) * nb, p.edge_count(), e.num, e.den};
    std::vector<std::uint32_t> column(static_cast<std::size_t>(nb), 0);
    for (int j = 0; j < nb; ++j)
        column[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(p.b_row(j)[0]);

    auto degrees_into = [&](std::uint32_t mask) {
        std::vector<int> degrees(static_cast<std::size_t>(nb));
        for (int j = 0; j < nb; ++j)
            degrees[static_cast<std::size_t>(j)] = std::popcount(column[static_cast<std::size_t>(j)] & mask);
        return degrees;
    };

    const long limit = 1L << na;
    long best = std::numeric_limits<long>::max();
    const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) reduction(min : best) num_threads(threads)
    for (long mask = 1; mask < limit; ++mask) {
        const int x = std::popcount(static_cast<unsigned long>(mask));
        if (x < min_x)
            continue;
        if (scan_extremes(degrees_into(static_cast<std::uint32_t>(mask)), x, min_t, test).found)
            best = std::min(best, mask);
    }

    if (best == std::numeric_limits<long>::max())
        return cert;
    const auto mask = static_cast<std::uint32_t>(best);
    const int x = std::popcount(mask);
    const auto degrees = degrees_into(mask);
    const ExtremeChoice choice = scan_extremes(degrees, x, min_t, test);
    cert.regular = false;
    for (int i = 0; i < na; ++i)
        if ((mask >> i) & 1U)
            cert.x.push_back(i);
    cert.y = pick_extreme(degrees, choice.size, choice.top);
    require(is_violating_subpair(p, eps, cert.x, cert.y), ErrorCode::Structural, "internal: witness failed re-check");
    return cert;
}

RegularityCertificate eps_regular_sampled(const VertexPair& p, const Rational& eps, std::int64_t samples,
                                          std::uint64_t seed) {
    require(eps > 0, ErrorCode::Precondition, "eps must be positive");
    require(samples >= 1, ErrorCode::Precondition, "at least one sample is required");
    RegularityCertificate cert;
    cert.epsilon = eps;
    cert.method = CertificateMethod::Sampled;
    cert.samples = samples;
    if (eps > 1)
        return cert;

    const SmallFraction e = small_fraction(eps);
    const ViolationTest test{static_cast<std::int64_t>(p.a_size()) * p.b_size(), p.edge_count(), e.num, e.den};
    Rng rng = make_rng(seed);
    for (std::int64_t k = 0; k < samples; ++k) {
        // Even draws fix a random X and optimise Y; odd draws the reverse.
        const bool fix_a = k % 2 == 0;
        const int fixed_n = fix_a ? p.a_size() : p.b_size();
        const int free_n = fix_a ? p.b_size() : p.a_size();
        const int size = uniform_int(rng, min_size(e, fixed_n), fixed_n);
        const std::vector<int> chosen = random_subset(rng, fixed_n, size);
        const std::size_t fixed_words = fix_a ? p.a_words() : p.b_words();
        std::vector<std::uint64_t> mask(fixed_words, 0);
        for (int v : chosen)
            set_bit(mask.data(), v);
        std::vector<int> degrees(static_cast<std::size_t>(free_n));
        for (int j = 0; j < free_n; ++j)
            degrees[static_cast<std::size_t>(j)] =
                popcount_and(fix_a ? p.b_row(j) : p.a_row(j), mask.data(), fixed_words);
        const ExtremeChoice choice = scan_extremes(degrees, size, min_size(e, free_n), test);
        if (!choice.found)
            continue;
        std::vector<int> other = pick_extreme(degrees, choice.size, choice.top);
        cert.regular = false;
        cert.x = fix_a ? chosen : other;
        cert.y = fix_a ? std::move(other) : chosen;
        require(is_violating_subpair(p, eps, cert.x, cert.y), ErrorCode::Structural,
                "internal: sampled witness failed re-check");
        return cert;
    }
    return cert;
}

RegularityCertificate eps_regular(const VertexPair& p, const Rational& eps, std::int64_t samples, std::uint64_t seed) {
    if (p.a_size() <= kExhaustiveRegularityCap && p.b_size() <= kExhaustiveRegularityCap)
        return eps_regular_exhaustive(p, eps);
    return eps_regular_sampled(p, eps, samples, seed);
}

bool is_super_regular(const VertexPair& p, const Rational& eps, const Rational& d, std::int64_t samples,
                      std::uint64_t seed) {
    for (int i = 0; i < p.a_size(); ++i)
        if (Rational(p.degree_a(i)) <= d * p.b_size())
            return false;
    for (int j = 0; j < p.b_size(); ++j)
        if (Rational(p.degree_b(j)) <= d * p.a_size())
            return false;
    return eps_regular(p, eps, samples, seed).regular;
}

SliceParameters slice_parameters(const Rational& eps, const Rational& alpha) {
    require(eps > 0 && alpha <= 1, ErrorCode::Precondition, "need 0 < eps and alpha <= 1");
    require(alpha > eps, ErrorCode::Precondition, "slicing needs alpha > eps");
    const Rational by_alpha = eps / alpha;
    const Rational doubled = 2 * eps;
    return {by_alpha > doubled ? by_alpha : doubled, eps};
}

SuperSliceResult super_slice(const HostColouring& c, int s, const std::vector<HostClass>& classes,
                             const std::vector<std::pair<int, int>>& tree_edges,
                             const std::vector<std::pair<int, int>>& matching, const Rational& eps,
                             const Rational& d, int r) {
    require(!classes.empty(), ErrorCode::Precondition, "no classes to slice");
    const int m = static_cast<int>(classes.front().vertices.size());
    for (const auto& cls : classes)
        require(static_cast<int>(cls.vertices.size()) == m, ErrorCode::Precondition, "classes must share one size m");
    require(r >= 0 && eps > 0 && eps * r < 1, ErrorCode::Precondition, "need eps * r < 1");
    const int k = static_cast<int>(classes.size());
    auto normalise = [](std::pair<int, int> e) { return e.first < e.second ? e : std::make_pair(e.second, e.first); };
    std::vector<std::pair<int, int>> tree;
    for (auto e : tree_edges) {
        require(e.first >= 0 && e.second >= 0 && e.first < k && e.second < k, ErrorCode::Structural,
                "tree edge outside class range");
        tree.push_back(normalise(e));
    }
    std::vector<int> matched(static_cast<std::size_t>(k), -1);
    for (auto e : matching) {
        require(std::find(tree.begin(), tree.end(), normalise(e)) != tree.end(), ErrorCode::Precondition,
                "matching edge outside the tree");
        require(matched[static_cast<std::size_t>(e.first)] < 0 && matched[static_cast<std::size_t>(e.second)] < 0,
                ErrorCode::Structural, "matching edges share a class");
        matched[static_cast<std::size_t>(e.first)] = e.second;
        matched[static_cast<std::size_t>(e.second)] = e.first;
    }

    SuperSliceResult result;
    result.target_size = static_cast<int>(ceil_to_int((1 - eps * r) * m));
    result.epsilon = eps / (1 - eps * r);
    result.density = d - (1 + r) * eps;
    result.classes = classes;
    result.removed.assign(static_cast<std::size_t>(k), {});
    const int removable = m - result.target_size;
    const Rational low_threshold = (d - eps) * m;

    for (int i = 0; i < k; ++i) {
        const int partner = matched[static_cast<std::size_t>(i)];
        if (partner < 0)
            continue;
        const HostClass& own = classes[static_cast<std::size_t>(i)];
        const HostClass& other = classes[static_cast<std::size_t>(partner)];
        require(own.side != other.side, ErrorCode::Partition, "matched classes must lie on opposite sides");
        std::vector<std::pair<int, int>> by_degree;  // (partner degree, vertex)
        int low = 0;
        for (int v : own.vertices) {
            int deg = 0;
            for (int w : other.vertices) {
                const int u = own.side == Side::Left ? v : w;
                const int x = own.side == Side::Left ? w : v;
                deg += c.colour(u, x) == s ? 1 : 0;
            }
            low += Rational(deg) <= low_threshold ? 1 : 0;
            by_degree.emplace_back(deg, v);
        }
        if (low > removable)
            fail(ErrorCode::SliceFailure, "class " + std::to_string(i + 1) + " has " + std::to_string(low) +
                                              " low-degree vertices but only " + std::to_string(removable) +
                                              " may be removed; the pair is not regular at this density");
        std::sort(by_degree.begin(), by_degree.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first < b.first : a.second > b.second;
        });
        std::vector<int> drop;
        for (int q = 0; q < removable; ++q)
            drop.push_back(by_degree[static_cast<std::size_t>(q)].second);
        std::sort(drop.begin(), drop.end());
        auto& kept = result.classes[static_cast<std::size_t>(i)].vertices;
        kept.erase(std::remove_if(kept.begin(), kept.end(),
                                  [&](int v) { return std::binary_search(drop.begin(), drop.end(), v); }),
                   kept.end());
        result.removed[static_cast<std::size_t>(i)] = std::move(drop);
    }

    for (auto [i, j] : matching) {
        const HostClass& a = result.classes[static_cast<std::size_t>(i)];
        const HostClass& b = result.classes[static_cast<std::size_t>(j)];
        if (static_cast<int>(a.vertices.size()) > kExhaustiveRegularityCap ||
            static_cast<int>(b.vertices.size()) > kExhaustiveRegularityCap || result.density <= 0) {
            result.verified.emplace_back(result.density <= 0 ? std::optional<bool>(false) : std::nullopt);
            continue;
        }
        const VertexPair pair = VertexPair::from_colouring(c, s, a, b);
        result.verified.emplace_back(is_super_regular(pair, result.epsilon, result.density));
    }
    return result;
}

int majority_colour(std::span<const std::int64_t> counts) {
    require(!counts.empty(), ErrorCode::Precondition, "no colour counts");
    int best = 0;
    for (std::size_t s = 1; s < counts.size(); ++s)
        if (counts[s] >= counts[static_cast<std::size_t>(best)])
            best = static_cast<int>(s);
    return best + 1;
}

ReducedColouredGraph::ReducedColouredGraph(std::vector<Side> sides, int colours, std::vector<ReducedEdge> edges)
    : sides_(std::move(sides)), colours_(colours), edges_(std::move(edges)),
      colour_matrix_(sides_.size() * sides_.size(), 0) {
    const int n = vertex_count();
    for (auto& e : edges_) {
        if (e.a > e.b)
            std::swap(e.a, e.b);
        require(e.a >= 0 && e.b < n, ErrorCode::Structural, "reduced edge outside vertex range");
        require(side(e.a) != side(e.b), ErrorCode::Structural, "reduced edge inside one side");
        require(e.colour >= 1 && e.colour <= colours, ErrorCode::InvalidColour, "reduced edge colour out of range");
        colour_matrix_[static_cast<std::size_t>(e.a * n + e.b)] = e.colour;
        colour_matrix_[static_cast<std::size_t>(e.b * n + e.a)] = e.colour;
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const ReducedEdge& x, const ReducedEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
}

int ReducedColouredGraph::colour_of(int a, int b) const {
    return colour_matrix_[static_cast<std::size_t>(a * vertex_count() + b)];
}

std::vector<std::vector<int>> ReducedColouredGraph::colour_adjacency(int s) const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count()));
    for (const auto& e : edges_)
        if (e.colour == s) {
            adj[static_cast<std::size_t>(e.a)].push_back(e.b);
            adj[static_cast<std::size_t>(e.b)].push_back(e.a);
        }
    for (auto& list : adj)
        std::sort(list.begin(), list.end());
    return adj;
}

int ReducedColouredGraph::max_non_neighbours() const {
    int worst = 0;
    for (int v = 0; v < vertex_count(); ++v) {
        int missing = 0;
        for (int w = 0; w < vertex_count(); ++w)
            if (side(w) != side(v) && colour_of(v, w) == 0)
                ++missing;
        worst = std::max(worst, missing);
    }
    return worst;
}

void validate_partition(const HostColouring& c, const std::vector<HostClass>& partition) {
    require(!partition.empty(), ErrorCode::Partition, "empty partition");
    const std::size_t m = partition.front().vertices.size();
    std::vector<char> used_left(static_cast<std::size_t>(c.left_size()), 0);
    std::vector<char> used_right(static_cast<std::size_t>(c.right_size()), 0);
    for (std::size_t i = 0; i < partition.size(); ++i) {
        const auto& cls = partition[i];
        require(!cls.vertices.empty(), ErrorCode::Partition, "class " + std::to_string(i + 1) + " is empty");
        require(cls.vertices.size() == m, ErrorCode::Partition, "classes must be equal-sized");
        auto& used = cls.side == Side::Left ? used_left : used_right;
        for (int v : cls.vertices) {
            require(v >= 0 && v < static_cast<int>(used.size()), ErrorCode::Partition,
                    "class " + std::to_string(i + 1) + " leaves its host side");
            require(!used[static_cast<std::size_t>(v)], ErrorCode::Partition,
                    "classes overlap at a vertex of class " + std::to_string(i + 1));
            used[static_cast<std::size_t>(v)] = 1;
        }
    }
}

ReducedColouredGraph build_reduced_graph(const HostColouring& c, const std::vector<HostClass>& partition,
                                         const Rational& eps, const ReduceOptions& options) {
    validate_partition(c, partition);
    require(eps > 0, ErrorCode::Precondition, "eps must be positive");
    const int colours = c.colour_count();
    const int k = static_cast<int>(partition.size());
    std::vector<PairVerdict> verdicts;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (partition[static_cast<std::size_t>(i)].side != partition[static_cast<std::size_t>(j)].side)
                verdicts.push_back(PairVerdict{i, j, false, 0, {}, {}, false});

    const int threads = options.workers > 0 ? options.workers : omp_get_max_threads();
    const long pair_count = static_cast<long>(verdicts.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long q = 0; q < pair_count; ++q) {
        PairVerdict& pv = verdicts[static_cast<std::size_t>(q)];
        const HostClass* a = &partition[static_cast<std::size_t>(pv.i)];
        const HostClass* b = &partition[static_cast<std::size_t>(pv.j)];
        if (a->side == Side::Right)
            std::swap(a, b);
        for (int s = 1; s <= colours; ++s) {
            const VertexPair pair = VertexPair::from_colouring(c, s, *a, *b);
            pv.counts.push_back(pair.edge_count());
            const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(q * colours + s);
            switch (options.mode) {
            case RegularityMode::Exhaustive: pv.certificates.push_back(eps_regular_exhaustive(pair, eps, 1)); break;
            case RegularityMode::Sampled:
                pv.certificates.push_back(eps_regular_sampled(pair, eps, options.samples, seed));
                break;
            case RegularityMode::Auto: pv.certificates.push_back(eps_regular(pair, eps, options.samples, seed)); break;
            }
        }
    }

    std::vector<Side> sides;
    for (const auto& cls : partition)
        sides.push_back(cls.side);
    std::vector<ReducedEdge> edges;
    const std::int64_t area = static_cast<std::int64_t>(partition.front().vertices.size()) *
                              static_cast<std::int64_t>(partition.front().vertices.size());
    for (auto& pv : verdicts) {
        pv.colour = majority_colour(pv.counts);
        pv.majority_bound_holds = pv.counts[static_cast<std::size_t>(pv.colour - 1)] * colours >= area;
        pv.adjacent = std::all_of(pv.certificates.begin(), pv.certificates.end(),
                                  [](const RegularityCertificate& cert) { return cert.regular; });
        if (pv.adjacent)
            edges.push_back({pv.i, pv.j, pv.colour});
    }
    ReducedColouredGraph reduced(std::move(sides), colours, std::move(edges));
    reduced.classes = partition;
    reduced.verdicts = std::move(verdicts);
    reduced.epsilon = eps;
    return reduced;
}

std::vector<HostClass> equal_partition(const HostColouring& c, int per_side) {
    require(per_side >= 1, ErrorCode::Partition, "need at least one class per side");
    const int m = std::min(c.left_size(), c.right_size()) / per_side;
    require(m >= 1, ErrorCode::Partition, "host too small for " + std::to_string(per_side) + " classes per side");
    std::vector<HostClass> classes;
    for (Side side : {Side::Left, Side::Right})
        for (int q = 0; q < per_side; ++q) {
            HostClass cls{side, {}};
            for (int v = q * m; v < (q + 1) * m; ++v)
                cls.vertices.push_back(v);
            classes.push_back(std::move(cls));
        }
    return classes;
}

std::string method_name(const RegularityCertificate& cert) {
    return cert.method == CertificateMethod::Exhaustive ? "exhaustive" : "sampled:" + std::to_string(cert.samples);
}

std::string certificate_line(int i, int j, const RegularityCertificate& cert, const std::vector<int>& a_ids,
                             const std::vector<int>& b_ids) {
    std::ostringstream line;
    line << "pair " << i << ' ' << j << ' ' << to_string(cert.epsilon) << ' '
         << (cert.regular ? "regular" : "irregular") << ' ' << method_name(cert);
    if (!cert.regular) {
        line << " [";
        for (int x : cert.x)
            line << a_ids[static_cast<std::size_t>(x)] << ' ';
        line << '|';
        for (int y : cert.y)
            line << ' ' << b_ids[static_cast<std::size_t>(y)];
        line << ']';
    }
    return line.str();
}

}  // namespace bipramsey
