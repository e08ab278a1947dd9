#include "bipramsey/partition.hpp"

#include "bipramsey/error.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace bipramsey {

namespace {

std::string show(const Rational& q) { return to_string(q); }

/// |C1 - C2| <= xi C2 in integers, with xi = num / den.
bool window_ok(std::int64_t c1, std::int64_t c2, const SmallFraction& xi) {
    const __int128 diff = c1 > c2 ? c1 - c2 : c2 - c1;
    return diff * xi.den <= static_cast<__int128>(xi.num) * c2;
}

class PermutationSearch {
public:
    PermutationSearch(const std::vector<ColourCounts>& counts, const SmallFraction& xi, int min_window)
        : counts_(counts), xi_(xi), min_window_(min_window), used_(counts.size(), 0),
          prefix1_(counts.size() + 1, 0), prefix2_(counts.size() + 1, 0) {}

    std::optional<std::vector<int>> run() {
        if (place(0))
            return sigma_;
        return std::nullopt;
    }

private:
    bool place(std::size_t pos) {
        const std::size_t h = counts_.size();
        if (pos == h)
            return true;
        for (std::size_t b = 0; b < h; ++b) {
            if (used_[b])
                continue;
            prefix1_[pos + 1] = prefix1_[pos] + counts_[b].first;
            prefix2_[pos + 1] = prefix2_[pos] + counts_[b].second;
            if (!windows_ending_at(pos))
                continue;
            used_[b] = 1;
            sigma_.push_back(static_cast<int>(b));
            if (place(pos + 1))
                return true;
            sigma_.pop_back();
            used_[b] = 0;
        }
        return false;
    }

    bool windows_ending_at(std::size_t pos) const {
        const long end = static_cast<long>(pos) + 1;
        for (long start = 0; end - start >= min_window_; ++start) {
            const auto s = static_cast<std::size_t>(start);
            if (!window_ok(prefix1_[pos + 1] - prefix1_[s], prefix2_[pos + 1] - prefix2_[s], xi_))
                return false;
        }
        return true;
    }

    const std::vector<ColourCounts>& counts_;
    SmallFraction xi_;
    int min_window_;
    std::vector<char> used_;
    std::vector<std::int64_t> prefix1_;
    std::vector<std::int64_t> prefix2_;
    std::vector<int> sigma_;
};

std::vector<int> excess_interleave(const std::vector<ColourCounts>& counts) {
    std::vector<int> positive;
    std::vector<int> negative;
    std::vector<int> neutral;
    auto excess = [&](int b) { return counts[static_cast<std::size_t>(b)].first - counts[static_cast<std::size_t>(b)].second; };
    for (int b = 0; b < static_cast<int>(counts.size()); ++b)
        (excess(b) > 0 ? positive : excess(b) < 0 ? negative : neutral).push_back(b);
    std::stable_sort(positive.begin(), positive.end(), [&](int a, int b) { return excess(a) > excess(b); });
    std::stable_sort(negative.begin(), negative.end(), [&](int a, int b) { return excess(a) < excess(b); });
    std::vector<int> sigma;
    std::size_t p = 0, q = 0, z = 0;
    std::int64_t running = 0;
    while (sigma.size() < counts.size()) {
        int next;
        if (running > 0 && q < negative.size())
            next = negative[q++];
        else if (running < 0 && p < positive.size())
            next = positive[p++];
        else if (running == 0 && z < neutral.size())
            next = neutral[z++];
        else if (p < positive.size())
            next = positive[p++];
        else if (q < negative.size())
            next = negative[q++];
        else
            next = neutral[z++];
        running += excess(next);
        sigma.push_back(next);
    }
    return sigma;
}

}  // namespace

bool ConstantsProfile::audit_holds() const {
    return std::all_of(audit.begin(), audit.end(), [](const AuditItem& a) { return a.holds; });
}

ConstantsProfile derive_constants(const Rational& gamma, int delta, const Rational& eps1, int k0) {
    require(gamma > 0, ErrorCode::Parameter, "gamma must be positive");
    require(delta >= 1, ErrorCode::Parameter, "delta must be at least 1");
    require(eps1 > 0, ErrorCode::Parameter, "eps1 must be positive");
    require(k0 >= 1, ErrorCode::Parameter, "K0 must be at least 1");
    ConstantsProfile p;
    p.gamma = gamma;
    p.delta = delta;
    p.eps1 = eps1;
    p.k0 = k0;
    const Rational by_eps1 = eps1 / 2;
    const Rational by_gamma = (gamma / 2) / (Rational(2400000) + 2 * (3 + gamma / 2));
    p.eps = by_eps1 < by_gamma ? by_eps1 : by_gamma;
    p.xi = gamma / 6;
    const Rational d2 = Rational(delta) * delta;
    const Rational k2 = Rational(k0) * k0;
    p.beta = p.eps * p.xi * (1 + 2 * p.xi) / (72 * d2 * k2);
    p.hat_ell_max = 7 * Rational(k0) / p.xi + 2 * k0;

    // Smallest multiple of K0 reaching 7 K0 / xi + l, worst case l = K0.
    const Rational floor_needed = 7 * Rational(k0) / p.xi + k0;
    const BigInt multiples = ceil(floor_needed / k0);
    const Rational smallest = Rational(multiples * k0);
    p.audit.push_back({"block-count", smallest <= p.hat_ell_max,
                       "smallest K0-multiple " + show(smallest) + " <= 7K0/xi + 2K0 = " + show(p.hat_ell_max)});

    const Rational lhs = 4 * Rational(k0) * p.hat_ell_max * p.beta;
    const Rational mid = (1 + gamma / 3) * p.eps / (2 * d2);
    p.audit.push_back({"chain-left", lhs <= mid, "4 l hat_l beta = " + show(lhs) + " <= " + show(mid)});
    p.audit.push_back({"chain-right", mid <= p.xi, show(mid) + " <= xi = " + show(p.xi)});
    p.audit.push_back({"beta-vs-blocks", p.beta <= 2 / p.hat_ell_max,
                       "beta = " + show(p.beta) + " <= 2/hat_l = " + show(2 / p.hat_ell_max)});
    p.audit.push_back({"eps-small", p.eps < Rational(1, 2400000), "eps = " + show(p.eps) + " < 1/2400000"});
    return p;
}

bool beta_balanced_check(std::int64_t c1, std::int64_t c2, const Rational& beta) {
    if (c1 == 0 && c2 == 0)
        return true;
    if (c2 == 0)
        return false;
    const Rational ratio(c1, c2);
    return 1 - beta <= ratio && ratio <= 1 + beta;
}

bool beta_balanced_check(const VertexTwoColouring& chi, const std::vector<int>& w, const Rational& beta) {
    std::int64_t c1 = 0;
    std::int64_t c2 = 0;
    for (int v : w)
        (chi.colour.at(static_cast<std::size_t>(v)) == 1 ? c1 : c2)++;
    return beta_balanced_check(c1, c2, beta);
}

std::vector<std::vector<int>> equi_partition(const TargetGraph& h, int hat_ell) {
    const int n = h.vertex_count();
    require(hat_ell >= 1 && n % hat_ell == 0, ErrorCode::Divisibility,
            std::to_string(hat_ell) + " blocks do not divide " + std::to_string(n) + " vertices");
    const int size = n / hat_ell;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(hat_ell));
    for (int v = 0; v < n; ++v)
        blocks[static_cast<std::size_t>(v / size)].push_back(v);
    return blocks;
}

std::vector<ColourCounts> block_counts(const VertexTwoColouring& chi, const std::vector<std::vector<int>>& blocks) {
    std::vector<ColourCounts> counts;
    for (const auto& block : blocks) {
        ColourCounts c{0, 0};
        for (int v : block)
            (chi.colour.at(static_cast<std::size_t>(v)) == 1 ? c.first : c.second)++;
        counts.push_back(c);
    }
    return counts;
}

bool verify_permutation(const std::vector<ColourCounts>& counts, const std::vector<int>& sigma, const Rational& xi,
                        int min_window) {
    const std::size_t h = counts.size();
    if (sigma.size() != h)
        return false;
    std::vector<char> seen(h, 0);
    for (int b : sigma) {
        if (b < 0 || static_cast<std::size_t>(b) >= h || seen[static_cast<std::size_t>(b)])
            return false;
        seen[static_cast<std::size_t>(b)] = 1;
    }
    for (std::size_t a = 0; a < h; ++a) {
        std::int64_t c1 = 0;
        std::int64_t c2 = 0;
        for (std::size_t b = a; b < h; ++b) {
            c1 += counts[static_cast<std::size_t>(sigma[b])].first;
            c2 += counts[static_cast<std::size_t>(sigma[b])].second;
            if (static_cast<int>(b - a + 1) >= min_window && Rational(c1 > c2 ? c1 - c2 : c2 - c1) > xi * c2)
                return false;
        }
    }
    return true;
}

std::optional<std::vector<int>> find_balanced_permutation(const std::vector<ColourCounts>& counts, const Rational& xi,
                                                          int min_window) {
    require(!counts.empty(), ErrorCode::Precondition, "no window classes");
    require(min_window >= 1, ErrorCode::Precondition, "min_window must be at least 1");
    require(xi >= 0, ErrorCode::Precondition, "xi must be non-negative");
    if (static_cast<int>(counts.size()) <= kExhaustivePermutationCap)
        return PermutationSearch(counts, small_fraction(xi), min_window).run();
    auto sigma = excess_interleave(counts);
    if (verify_permutation(counts, sigma, xi, min_window))
        return sigma;
    return std::nullopt;
}

std::string PartitionPlan::label_name(int label) const {
    if (label < ell)
        return "X" + std::to_string(label + 1);
    if (label < 2 * ell)
        return "Y" + std::to_string(label - ell + 1);
    return "Z" + std::to_string(label - 2 * ell + 1);
}

PartitionPlan make_plan(const TargetGraph& h, int hat_ell, int ell, int ell_prime, std::vector<int> sigma) {
    PartitionPlan plan;
    plan.blocks = equi_partition(h, hat_ell);
    require(ell >= 1 && hat_ell % ell == 0, ErrorCode::Divisibility,
            "the number of families must divide the number of blocks");
    require(ell_prime >= 0, ErrorCode::Parameter, "l' must be non-negative");
    std::vector<int> check(sigma);
    std::sort(check.begin(), check.end());
    std::vector<int> identity(static_cast<std::size_t>(hat_ell));
    std::iota(identity.begin(), identity.end(), 0);
    require(check == identity, ErrorCode::Parameter, "sigma is not a permutation of the blocks");
    plan.n = h.vertex_count();
    plan.hat_ell = hat_ell;
    plan.ell = ell;
    plan.ell_prime = ell_prime;
    plan.sigma = std::move(sigma);
    const int per_family = hat_ell / ell;
    for (int i = 1; i <= ell; ++i)
        plan.family_bounds.emplace_back((i - 1) * per_family + 1, i * per_family);
    plan.family_of_block.assign(static_cast<std::size_t>(hat_ell), -1);
    for (int pos = 0; pos < hat_ell; ++pos)
        plan.family_of_block[static_cast<std::size_t>(plan.sigma[static_cast<std::size_t>(pos)])] = pos / per_family;
    plan.links.assign(static_cast<std::size_t>(hat_ell), {});
    plan.kernels = plan.blocks;
    return plan;
}

void build_links_kernels(PartitionPlan& plan, const ShapeTree& tree, const Rational& beta) {
    require(tree.ell == plan.ell && tree.ell_prime == plan.ell_prime, ErrorCode::Structural,
            "plan and shape disagree on l or l'");
    require(beta > 0, ErrorCode::Parameter, "beta must be positive");
    plan.piece_size = static_cast<int>(ceil_to_int(beta * plan.n));
    const int ell = plan.ell;
    auto in_pair = [ell](int label, int family) { return label == family || label == family + ell; };
    for (int i = 0; i + 1 < plan.hat_ell; ++i) {
        auto& link = plan.links[static_cast<std::size_t>(i)];
        link.clear();
        const int r = plan.family_of_block[static_cast<std::size_t>(i)];
        const int s = plan.family_of_block[static_cast<std::size_t>(i + 1)];
        if (r == s)
            continue;
        const auto route = tree.path(r, s);
        int first = -1;
        int last = -1;
        for (int q = 0; q < static_cast<int>(route.size()); ++q) {
            if (in_pair(route[static_cast<std::size_t>(q)], r))
                first = q;
            if (last < 0 && in_pair(route[static_cast<std::size_t>(q)], s))
                last = q;
        }
        require(first >= 0 && last > first, ErrorCode::Structural, "tree path does not join the two matching edges");
        const int t = last - first - 1;
        const auto& block = plan.blocks[static_cast<std::size_t>(i)];
        const int size = static_cast<int>(block.size());
        const int need = (t + 1) * plan.piece_size;
        require(need <= size, ErrorCode::Parameter,
                "block " + std::to_string(i + 1) + " holds " + std::to_string(size) + " vertices but its link needs " +
                    std::to_string(need) + "; beta is too large for this instance");
        for (int j = 1; j <= t + 1; ++j) {
            LinkPiece piece;
            piece.j = j;
            const int begin = size - (t + 2 - j) * plan.piece_size;
            const int end = size - (t + 1 - j) * plan.piece_size;
            piece.vertices.assign(block.begin() + begin, block.begin() + end);
            const int prev = route[static_cast<std::size_t>(first + j - 1)];
            const int cur = route[static_cast<std::size_t>(first + j)];
            const bool prev_x = tree.x_class[static_cast<std::size_t>(prev)];
            require(prev_x != static_cast<bool>(tree.x_class[static_cast<std::size_t>(cur)]), ErrorCode::Structural,
                    "tree labels are not properly 2-coloured");
            piece.colour_one_label = prev_x ? prev : cur;
            piece.colour_two_label = prev_x ? cur : prev;
            link.push_back(std::move(piece));
        }
        plan.kernels[static_cast<std::size_t>(i)].assign(block.begin(), block.end() - need);
    }
}

void assign_classes(PartitionPlan& plan, const VertexTwoColouring& chi, const TargetGraph& h) {
    require(chi.size() == plan.n && chi.is_proper_on(h), ErrorCode::Structural,
            "vertex colouring is not a proper 2-colouring of the target");
    const int labels = 2 * plan.ell + plan.ell_prime;
    plan.classes.assign(static_cast<std::size_t>(labels), {});
    plan.class_of.assign(static_cast<std::size_t>(plan.n), -1);
    auto put = [&](int v, int label) {
        plan.classes[static_cast<std::size_t>(label)].push_back(v);
        plan.class_of[static_cast<std::size_t>(v)] = label;
    };
    for (int i = 0; i < plan.hat_ell; ++i) {
        const int family = plan.family_of_block[static_cast<std::size_t>(i)];
        for (int v : plan.kernels[static_cast<std::size_t>(i)])
            put(v, chi.colour[static_cast<std::size_t>(v)] == 1 ? family : plan.ell + family);
        for (const auto& piece : plan.links[static_cast<std::size_t>(i)])
            for (int v : piece.vertices)
                put(v, chi.colour[static_cast<std::size_t>(v)] == 1 ? piece.colour_one_label : piece.colour_two_label);
    }
    for (auto& cls : plan.classes)
        std::sort(cls.begin(), cls.end());
}

PlanBounds check_plan_bounds(const PartitionPlan& plan, const Rational& xi) {
    PlanBounds b;
    b.xy_bound = (1 + 2 * xi) * plan.n / (2 * plan.ell);
    b.z_bound = 2LL * plan.hat_ell * plan.piece_size;
    for (int label = 0; label < static_cast<int>(plan.classes.size()); ++label) {
        const int size = static_cast<int>(plan.classes[static_cast<std::size_t>(label)].size());
        if (label < 2 * plan.ell)
            b.largest_xy = std::max(b.largest_xy, size);
        else
            b.largest_z = std::max(b.largest_z, size);
    }
    b.holds = Rational(b.largest_xy) <= b.xy_bound && b.largest_z <= b.z_bound;
    return b;
}

bool plan_respects_tree(const PartitionPlan& plan, const TargetGraph& h, const ShapeTree& tree) {
    std::vector<int> seen(static_cast<std::size_t>(plan.n), 0);
    for (std::size_t label = 0; label < plan.classes.size(); ++label)
        for (int v : plan.classes[label]) {
            if (v < 0 || v >= plan.n || plan.class_of[static_cast<std::size_t>(v)] != static_cast<int>(label))
                return false;
            ++seen[static_cast<std::size_t>(v)];
        }
    if (std::any_of(seen.begin(), seen.end(), [](int k) { return k != 1; }))
        return false;
    return std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
        const int a = plan.class_of[static_cast<std::size_t>(e.first)];
        const int b = plan.class_of[static_cast<std::size_t>(e.second)];
        return a != b && tree.has_edge(a, b);
    });
}

void write_plan(std::ostream& out, const PartitionPlan& plan) {
    out << "plan " << plan.n << ' ' << plan.hat_ell << ' ' << plan.ell << ' ' << plan.ell_prime << '\n';
    out << "sigma";
    for (int b : plan.sigma)
        out << ' ' << b + 1;
    out << '\n';
    for (std::size_t i = 0; i < plan.family_bounds.size(); ++i)
        out << "family " << i + 1 << ' ' << plan.family_bounds[i].first << ' ' << plan.family_bounds[i].second << '\n';
    for (std::size_t i = 0; i < plan.links.size(); ++i)
        for (const auto& piece : plan.links[i])
            out << "link " << i + 1 << ' ' << piece.j << ' ' << piece.vertices.size() << ' '
                << plan.label_name(piece.colour_one_label) << ',' << plan.label_name(piece.colour_two_label) << '\n';
    for (int label = 0; label < static_cast<int>(plan.classes.size()); ++label) {
        out << "class " << plan.label_name(label);
        for (int v : plan.classes[static_cast<std::size_t>(label)])
            out << ' ' << v + 1;
        out << '\n';
    }
}

}  // namespace bipramsey
