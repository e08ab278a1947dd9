#include "bipramsey/embedding.hpp"

#include "bipramsey/error.hpp"
#include "bipramsey/random.hpp"

#include <algorithm>
#include <set>

namespace bipramsey {

CompatibilityReport compatibility_check(const PartitionPlan& plan, const TargetGraph& h, const ShapeTree& tree,
                                        const std::vector<HostClass>& host_classes, const Rational& eps) {
    const int labels = tree.label_count();
    require(static_cast<int>(plan.classes.size()) == labels && static_cast<int>(host_classes.size()) == labels,
            ErrorCode::Structural, "plan, tree and host classes disagree on the number of classes");
    require(static_cast<int>(plan.class_of.size()) == h.vertex_count(), ErrorCode::Structural,
            "plan does not cover the target graph");
    CompatibilityReport rep;
    rep.epsilon = eps;
    const auto sz = [](std::size_t k) { return static_cast<int>(k); };
    for (int i = 0; i < labels; ++i) {
        rep.w_size.push_back(sz(plan.classes[static_cast<std::size_t>(i)].size()));
        rep.v_size.push_back(sz(host_classes[static_cast<std::size_t>(i)].vertices.size()));
    }
    rep.s_min = labels > 0 ? *std::min_element(rep.v_size.begin(), rep.v_size.end()) : 0;
    const auto label_of = [&](int v) { return plan.class_of[static_cast<std::size_t>(v)]; };
    const auto matched = [&](int a, int b) { return tree.partner(a) == b; };

    for (const auto& e : h.edges()) {
        const int a = label_of(e.first);
        const int b = label_of(e.second);
        if (a == b || !tree.has_edge(a, b))
            rep.edge_violations.push_back(e);
    }

    std::vector<char> in_u(static_cast<std::size_t>(h.vertex_count()), 0);
    for (int v = 0; v < h.vertex_count(); ++v)
        for (int w : h.neighbours(v)) {
            const int a = label_of(v);
            const int b = label_of(w);
            if (a != b && tree.has_edge(a, b) && !matched(a, b))
                in_u[static_cast<std::size_t>(v)] = 1;
        }
    rep.u_size.assign(static_cast<std::size_t>(labels), 0);
    rep.u_prime_size.assign(static_cast<std::size_t>(labels), 0);
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (in_u[static_cast<std::size_t>(v)]) {
            ++rep.u_size[static_cast<std::size_t>(label_of(v))];
            continue;
        }
        const auto& nb = h.neighbours(v);
        if (std::any_of(nb.begin(), nb.end(), [&](int w) { return in_u[static_cast<std::size_t>(w)]; }))
            ++rep.u_prime_size[static_cast<std::size_t>(label_of(v))];
    }

    for (int i = 0; i < labels; ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (rep.w_size[k] > rep.v_size[k])
            rep.size_violations.push_back(i);
        if (Rational(rep.u_size[k]) > eps * rep.v_size[k])
            rep.u_violations.push_back(i);
    }
    for (auto [a, b] : tree.matching()) {
        const Rational cap = eps * std::min(rep.v_size[static_cast<std::size_t>(a)], rep.v_size[static_cast<std::size_t>(b)]);
        for (int i : {a, b})
            if (Rational(rep.u_prime_size[static_cast<std::size_t>(i)]) > cap)
                rep.u_prime_violations.push_back(i);
    }
    rep.conditions = {rep.edge_violations.empty(), rep.size_violations.empty(), rep.u_violations.empty(),
                      rep.u_prime_violations.empty()};
    rep.compatible = std::all_of(rep.conditions.begin(), rep.conditions.end(), [](bool b) { return b; });

    const int delta = std::max(1, h.max_degree());
    const Rational u_cap = eps / (2 * delta) * rep.s_min;
    rep.u_chain_holds = std::all_of(rep.u_size.begin(), rep.u_size.end(), [&](int u) { return Rational(u) <= u_cap; });
    rep.u_prime_chain_holds = true;
    for (int i = 0; i < labels; ++i) {
        const int p = tree.partner(i);
        const int allowed = p < 0 ? 0 : delta * rep.u_size[static_cast<std::size_t>(p)];
        if (rep.u_prime_size[static_cast<std::size_t>(i)] > allowed)
            rep.u_prime_chain_holds = false;
    }
    return rep;
}

CompatibilityReport compatibility_check(const PartitionPlan& plan, const TargetGraph& h, const CmShape& shape,
                                        const Rational& eps) {
    return compatibility_check(plan, h, shape.tree, shape.classes, eps);
}

namespace {

bool host_adjacent(const ColourLayer& layer, HostVertex a, HostVertex b) {
    if (a.side == b.side)
        return false;
    return a.side == Side::Left ? layer.has(a.index, b.index) : layer.has(b.index, a.index);
}

class Embedder {
public:
    Embedder(const TargetGraph& h, const PartitionPlan& plan, const ColourLayer& layer,
             const std::vector<HostClass>& classes)
        : h_(h), plan_(plan), layer_(layer), classes_(classes), map_(static_cast<std::size_t>(h.vertex_count())),
          placed_(static_cast<std::size_t>(h.vertex_count()), 0), deferred_(static_cast<std::size_t>(h.vertex_count()), 0),
          used_left_(static_cast<std::size_t>(layer.left_size()), 0),
          used_right_(static_cast<std::size_t>(layer.right_size()), 0) {
        choose_deferred();
        for (int v = 0; v < h.vertex_count(); ++v)
            if (!deferred_[static_cast<std::size_t>(v)])
                order_.push_back(v);
    }

    int deferred_count() const noexcept { return static_cast<int>(held_back_.size()); }

    /// One attempt; `rng` null means plain id order for ties.
    bool attempt(std::uint64_t node_limit, Rng* rng, std::uint64_t& nodes, std::uint64_t& backtracks) {
        node_limit_ = node_limit;
        nodes_ = 0;
        backtracks_ = 0;
        cut_ = false;
        rng_ = rng;
        std::fill(placed_.begin(), placed_.end(), 0);
        std::fill(used_left_.begin(), used_left_.end(), 0);
        std::fill(used_right_.begin(), used_right_.end(), 0);
        const bool ok = extend(0);
        nodes += nodes_;
        backtracks += backtracks_;
        return ok;
    }

    const std::vector<HostVertex>& map() const noexcept { return map_; }

    /// The last attempt stopped at its node limit rather than exhausting the search.
    bool cut() const noexcept { return cut_; }

private:
    const HostClass& host_class(int w) const {
        return classes_[static_cast<std::size_t>(plan_.class_of[static_cast<std::size_t>(w)])];
    }

    bool used(HostVertex x) const {
        return x.side == Side::Left ? used_left_[static_cast<std::size_t>(x.index)]
                                    : used_right_[static_cast<std::size_t>(x.index)];
    }

    void set_used(HostVertex x, bool flag) {
        (x.side == Side::Left ? used_left_ : used_right_)[static_cast<std::size_t>(x.index)] = flag;
    }

    bool fits(int w, HostVertex x) const {
        for (int u : h_.neighbours(w))
            if (placed_[static_cast<std::size_t>(u)] && !host_adjacent(layer_, x, map_[static_cast<std::size_t>(u)]))
                return false;
        return true;
    }

    std::vector<HostVertex> candidates(int w) const {
        std::vector<HostVertex> out;
        const HostClass& cls = host_class(w);
        for (int v : cls.vertices) {
            const HostVertex x{cls.side, v};
            if (!used(x) && fits(w, x))
                out.push_back(x);
        }
        return out;
    }

    /// Options left for the unplaced neighbours of w if w goes to x; -1 when
    /// some neighbour would have none.
    long flexibility(int w, HostVertex x) const {
        long total = 0;
        for (int u : h_.neighbours(w)) {
            if (placed_[static_cast<std::size_t>(u)])
                continue;
            const HostClass& cls = host_class(u);
            long options = 0;
            for (int v : cls.vertices) {
                const HostVertex y{cls.side, v};
                if (y == x || used(y) || !host_adjacent(layer_, x, y) || !fits(u, y))
                    continue;
                ++options;
            }
            if (options == 0)
                return -1;
            total += options;
        }
        return total;
    }

    bool extend(std::size_t k) {
        if (k == order_.size())
            return complete_deferred();
        const int w = order_[k];
        auto cands = candidates(w);
        if (rng_ != nullptr)
            shuffle(cands, *rng_);
        std::vector<std::pair<long, HostVertex>> ranked;
        for (const auto& x : cands) {
            const long f = flexibility(w, x);
            if (f >= 0)
                ranked.emplace_back(f, x);
        }
        std::stable_sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
            if (a.first != b.first)
                return a.first < b.first;
            return rng_ == nullptr && a.second.index < b.second.index;
        });
        for (const auto& [f, x] : ranked) {
            if (nodes_ >= node_limit_) {
                cut_ = true;
                return false;
            }
            ++nodes_;
            map_[static_cast<std::size_t>(w)] = x;
            placed_[static_cast<std::size_t>(w)] = 1;
            set_used(x, true);
            if (extend(k + 1))
                return true;
            set_used(x, false);
            placed_[static_cast<std::size_t>(w)] = 0;
        }
        ++backtracks_;
        return false;
    }

    /// Places the held-back vertices by augmenting paths over their candidate sets.
    bool complete_deferred() {
        const std::size_t d = held_back_.size();
        std::vector<std::vector<HostVertex>> options(d);
        for (std::size_t q = 0; q < d; ++q) {
            options[q] = candidates(held_back_[q]);
            if (options[q].empty())
                return false;
        }
        std::vector<int> owner_left(used_left_.size(), -1);
        std::vector<int> owner_right(used_right_.size(), -1);
        auto owner = [&](HostVertex x) -> int& {
            return x.side == Side::Left ? owner_left[static_cast<std::size_t>(x.index)]
                                        : owner_right[static_cast<std::size_t>(x.index)];
        };
        std::vector<int> seen_left(used_left_.size(), -1);
        std::vector<int> seen_right(used_right_.size(), -1);
        std::vector<HostVertex> assigned(d);
        int stamp = 0;
        auto augment = [&](auto&& self, std::size_t q) -> bool {
            for (const auto& x : options[q]) {
                int& seen = x.side == Side::Left ? seen_left[static_cast<std::size_t>(x.index)]
                                                 : seen_right[static_cast<std::size_t>(x.index)];
                if (seen == stamp)
                    continue;
                seen = stamp;
                int& o = owner(x);
                if (o < 0 || self(self, static_cast<std::size_t>(o))) {
                    o = static_cast<int>(q);
                    assigned[q] = x;
                    return true;
                }
            }
            return false;
        };
        for (std::size_t q = 0; q < d; ++q) {
            ++stamp;
            ++nodes_;
            if (!augment(augment, q))
                return false;
        }
        for (std::size_t q = 0; q < d; ++q)
            map_[static_cast<std::size_t>(held_back_[q])] = assigned[q];
        return true;
    }

    /// Trailing X/Y vertices, pairwise non-adjacent, at most a quarter of H.
    void choose_deferred() {
        const int n = h_.vertex_count();
        const int cap = n / 4;
        for (int v = n - 1; v >= 0 && static_cast<int>(held_back_.size()) < cap; --v) {
            if (plan_.class_of[static_cast<std::size_t>(v)] >= 2 * plan_.ell)
                continue;
            const auto& nb = h_.neighbours(v);
            if (std::any_of(nb.begin(), nb.end(), [&](int u) { return deferred_[static_cast<std::size_t>(u)]; }))
                continue;
            deferred_[static_cast<std::size_t>(v)] = 1;
            held_back_.push_back(v);
        }
        std::sort(held_back_.begin(), held_back_.end());
    }

    const TargetGraph& h_;
    const PartitionPlan& plan_;
    const ColourLayer& layer_;
    const std::vector<HostClass>& classes_;
    std::vector<HostVertex> map_;
    std::vector<char> placed_;
    std::vector<char> deferred_;
    std::vector<int> held_back_;
    std::vector<int> order_;
    std::vector<char> used_left_;
    std::vector<char> used_right_;
    std::uint64_t node_limit_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t backtracks_ = 0;
    bool cut_ = false;
    Rng* rng_ = nullptr;
};

}  // namespace

EmbeddingResult greedy_embed(const TargetGraph& h, const PartitionPlan& plan, const HostColouring& c, int s,
                             const std::vector<HostClass>& host_classes, const EmbedOptions& options) {
    require(s >= 1 && s <= c.colour_count(), ErrorCode::InvalidColour, "colour index out of range");
    require(plan.classes.size() == host_classes.size(), ErrorCode::Structural,
            "plan and host partition disagree on the number of classes");
    require(static_cast<int>(plan.class_of.size()) == h.vertex_count(), ErrorCode::Structural,
            "plan does not cover the target graph");
    EmbeddingResult result;
    for (std::size_t i = 0; i < host_classes.size(); ++i)
        if (plan.classes[i].size() > host_classes[i].vertices.size()) {
            result.reason = "class " + plan.label_name(static_cast<int>(i)) + " needs " +
                            std::to_string(plan.classes[i].size()) + " host vertices but has " +
                            std::to_string(host_classes[i].vertices.size());
            return result;
        }

    const ColourLayer layer = ColourLayer::from_colouring(c, s);
    Embedder engine(h, plan, layer, host_classes);
    result.deferred = engine.deferred_count();
    Rng rng = make_rng(options.seed);
    std::uint64_t limit = 16ULL * static_cast<std::uint64_t>(h.vertex_count()) + 256;
    for (int attempt = 0; result.nodes < options.budget; ++attempt) {
        const std::uint64_t allowance = std::min(limit, options.budget - result.nodes);
        if (engine.attempt(allowance, attempt == 0 ? nullptr : &rng, result.nodes, result.backtracks)) {
            result.success = true;
            result.map = engine.map();
            result.restarts = attempt;
            return result;
        }
        if (!engine.cut()) {
            result.reason = "no class-respecting embedding exists";
            return result;
        }
        result.restarts = attempt + 1;
        limit *= 2;
    }
    result.reason = "search budget of " + std::to_string(options.budget) + " nodes exhausted";
    return result;
}

bool verify_embedding(const EmbeddingResult& result, const TargetGraph& h, const HostColouring& c, int s,
                      const PartitionPlan& plan, const std::vector<HostClass>& host_classes) {
    if (!result.success || static_cast<int>(result.map.size()) != h.vertex_count() ||
        static_cast<int>(plan.class_of.size()) != h.vertex_count())
        return false;
    std::set<std::pair<int, int>> images;
    for (int w = 0; w < h.vertex_count(); ++w) {
        const HostVertex x = result.map[static_cast<std::size_t>(w)];
        if (!images.insert({x.side == Side::Left ? 0 : 1, x.index}).second)
            return false;
        const int label = plan.class_of[static_cast<std::size_t>(w)];
        if (label < 0 || label >= static_cast<int>(host_classes.size()))
            return false;
        const HostClass& cls = host_classes[static_cast<std::size_t>(label)];
        if (cls.side != x.side || std::find(cls.vertices.begin(), cls.vertices.end(), x.index) == cls.vertices.end())
            return false;
    }
    for (const auto& [a, b] : h.edges()) {
        const HostVertex x = result.map[static_cast<std::size_t>(a)];
        const HostVertex y = result.map[static_cast<std::size_t>(b)];
        if (x.side == y.side)
            return false;
        const int u = x.side == Side::Left ? x.index : y.index;
        const int v = x.side == Side::Left ? y.index : x.index;
        if (c.colour(u, v) != s)
            return false;
    }
    return true;
}

}  // namespace bipramsey
