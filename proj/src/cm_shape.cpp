#include "bipramsey/cm_shape.hpp"

#include "bipramsey/error.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>

namespace bipramsey {

namespace {

std::pair<int, int> ordered(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        return true;
    }
};

/// Kuhn's augmenting-path matching restricted to `left` vertices.
class Matcher {
public:
    explicit Matcher(const std::vector<std::vector<int>>& adj)
        : adj_(adj), match_(adj.size(), -1), seen_(adj.size(), 0) {}

    std::vector<std::pair<int, int>> run(const std::vector<int>& left) {
        for (int u : left) {
            ++stamp_;
            augment(u);
        }
        std::vector<std::pair<int, int>> edges;
        for (int u : left)
            if (match_[static_cast<std::size_t>(u)] >= 0)
                edges.push_back(ordered(u, match_[static_cast<std::size_t>(u)]));
        std::sort(edges.begin(), edges.end());
        return edges;
    }

private:
    bool augment(int u) {
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            if (seen_[static_cast<std::size_t>(v)] == stamp_)
                continue;
            seen_[static_cast<std::size_t>(v)] = stamp_;
            const int w = match_[static_cast<std::size_t>(v)];
            if (w < 0 || augment(w)) {
                match_[static_cast<std::size_t>(v)] = u;
                match_[static_cast<std::size_t>(u)] = v;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<int>>& adj_;
    std::vector<int> match_;
    std::vector<int> seen_;
    int stamp_ = 0;
};

}  // namespace

ConnectedMatching find_connected_matching(const ReducedColouredGraph& r, int s) {
    require(s >= 1 && s <= r.colour_count(), ErrorCode::InvalidColour, "colour index out of range");
    const auto adj = r.colour_adjacency(s);
    const int n = r.vertex_count();
    ConnectedMatching best;
    best.colour = s;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)] || adj[static_cast<std::size_t>(start)].empty())
            continue;
        std::vector<int> component{start};
        seen[static_cast<std::size_t>(start)] = 1;
        for (std::size_t q = 0; q < component.size(); ++q)
            for (int w : adj[static_cast<std::size_t>(component[q])])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    component.push_back(w);
                }
        std::sort(component.begin(), component.end());
        std::vector<int> left;
        for (int v : component)
            if (r.side(v) == Side::Left)
                left.push_back(v);
        auto edges = Matcher(adj).run(left);
        if (edges.size() > best.edges.size()) {
            best.component = std::move(component);
            best.edges = std::move(edges);
        }
    }
    return best;
}

ConnectedMatching best_monochromatic_connected_matching(const ReducedColouredGraph& r, int workers) {
    const int colours = r.colour_count();
    std::vector<ConnectedMatching> per_colour(static_cast<std::size_t>(colours));
    const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int s = 1; s <= colours; ++s)
        per_colour[static_cast<std::size_t>(s - 1)] = find_connected_matching(r, s);
    ConnectedMatching best;
    best.colour = 1;
    for (auto& m : per_colour)
        if (m.size() > best.size())
            best = std::move(m);
    return best;
}

bool validate_connected_matching(const ReducedColouredGraph& r, const ConnectedMatching& m) {
    if (m.edges.empty())
        return true;
    if (m.colour < 1 || m.colour > r.colour_count())
        return false;
    std::vector<char> used(static_cast<std::size_t>(r.vertex_count()), 0);
    for (auto [a, b] : m.edges) {
        if (a < 0 || b < 0 || a >= r.vertex_count() || b >= r.vertex_count())
            return false;
        if (r.colour_of(a, b) != m.colour || used[static_cast<std::size_t>(a)] || used[static_cast<std::size_t>(b)])
            return false;
        used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
    }
    const auto adj = r.colour_adjacency(m.colour);
    std::vector<char> reached(static_cast<std::size_t>(r.vertex_count()), 0);
    std::deque<int> queue{m.edges.front().first};
    reached[static_cast<std::size_t>(m.edges.front().first)] = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!reached[static_cast<std::size_t>(w)]) {
                reached[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
    }
    return std::all_of(m.edges.begin(), m.edges.end(), [&](auto e) {
        return reached[static_cast<std::size_t>(e.first)] && reached[static_cast<std::size_t>(e.second)];
    });
}

MatchingLemmaReport check_matching_lemma_bound(int k, int k_prime, const Rational& eps, const ConnectedMatching& found,
                                               std::optional<int> max_non_neighbours) {
    MatchingLemmaReport report;
    if (!(eps < Rational(1, 300000)))
        report.unmet.emplace_back("eps < 1/(3*10^5)");
    if (Rational(k) < (3 + 300000 * eps) * k_prime)
        report.unmet.emplace_back("k >= (3 + 3*10^5 eps) k'");
    if (max_non_neighbours && Rational(*max_non_neighbours) > eps * k_prime)
        report.unmet.emplace_back("non-neighbours <= eps k'");
    report.hypotheses_hold = report.unmet.empty();
    report.conclusion_holds = found.size() >= k_prime;
    report.counterexample = report.hypotheses_hold && !report.conclusion_holds;
    return report;
}

std::string ShapeTree::label_name(int label) const {
    if (label < ell)
        return "x" + std::to_string(label + 1);
    if (label < 2 * ell)
        return "y" + std::to_string(label - ell + 1);
    return "z" + std::to_string(label - 2 * ell + 1);
}

int ShapeTree::partner(int label) const {
    if (label < ell)
        return label + ell;
    if (label < 2 * ell)
        return label - ell;
    return -1;
}

bool ShapeTree::has_edge(int a, int b) const { return std::binary_search(edges.begin(), edges.end(), ordered(a, b)); }

std::vector<std::pair<int, int>> ShapeTree::matching() const {
    std::vector<std::pair<int, int>> m;
    for (int i = 0; i < ell; ++i)
        m.emplace_back(i, ell + i);
    return m;
}

std::vector<int> ShapeTree::path(int a, int b) const {
    const int n = label_count();
    require(a >= 0 && b >= 0 && a < n && b < n, ErrorCode::Structural, "path endpoint outside the tree");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    parent[static_cast<std::size_t>(a)] = -1;
    std::deque<int> queue{a};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (parent[static_cast<std::size_t>(w)] == -2) {
                parent[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
    }
    require(parent[static_cast<std::size_t>(b)] != -2, ErrorCode::Structural, "labels are not connected in the tree");
    std::vector<int> route;
    for (int v = b; v != -1; v = parent[static_cast<std::size_t>(v)])
        route.push_back(v);
    std::reverse(route.begin(), route.end());
    return route;
}

std::vector<int> tree_distances(int n, const std::vector<std::pair<int, int>>& edges, int source) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

TreeLabelling even_distance_labelling(int n, const std::vector<std::pair<int, int>>& tree,
                                      const std::vector<std::pair<int, int>>& matching) {
    require(n >= 1, ErrorCode::Structural, "a tree needs at least one vertex");
    require(static_cast<int>(tree.size()) == n - 1, ErrorCode::Structural, "a tree on n vertices has n-1 edges");
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : tree) {
        require(a >= 0 && b >= 0 && a < n && b < n && a != b, ErrorCode::Structural, "tree edge out of range");
        edges.push_back(ordered(a, b));
    }
    std::sort(edges.begin(), edges.end());
    require(std::adjacent_find(edges.begin(), edges.end()) == edges.end(), ErrorCode::Structural,
            "repeated tree edge");

    std::vector<int> partner(static_cast<std::size_t>(n), -1);
    int root = n;
    for (auto [a, b] : matching) {
        require(std::binary_search(edges.begin(), edges.end(), ordered(a, b)), ErrorCode::Structural,
                "matching edge is not a tree edge");
        require(partner[static_cast<std::size_t>(a)] < 0 && partner[static_cast<std::size_t>(b)] < 0,
                ErrorCode::Structural, "matching edges share a vertex");
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
        root = std::min({root, a, b});
    }
    if (root == n)
        root = 0;

    const auto dist = tree_distances(n, edges, root);
    require(std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; }), ErrorCode::Structural,
            "tree is not connected");

    TreeLabelling out;
    out.chi.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        out.chi[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(v)] % 2 == 0 ? 1 : 2;
    for (int v = 0; v < n; ++v) {
        if (partner[static_cast<std::size_t>(v)] < 0)
            out.z.push_back(v);
        else if (out.chi[static_cast<std::size_t>(v)] == 1)
            out.x.push_back(v);
    }
    for (int v : out.x)
        out.y.push_back(partner[static_cast<std::size_t>(v)]);

    const int ell = static_cast<int>(out.x.size());
    out.label_of.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < ell; ++i) {
        out.label_of[static_cast<std::size_t>(out.x[static_cast<std::size_t>(i)])] = i;
        out.label_of[static_cast<std::size_t>(out.y[static_cast<std::size_t>(i)])] = ell + i;
    }
    for (std::size_t j = 0; j < out.z.size(); ++j)
        out.label_of[static_cast<std::size_t>(out.z[j])] = 2 * ell + static_cast<int>(j);

    out.shape.ell = ell;
    out.shape.ell_prime = static_cast<int>(out.z.size());
    for (auto [a, b] : edges)
        out.shape.edges.push_back(
            ordered(out.label_of[static_cast<std::size_t>(a)], out.label_of[static_cast<std::size_t>(b)]));
    std::sort(out.shape.edges.begin(), out.shape.edges.end());
    out.shape.x_class.assign(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        out.shape.x_class[static_cast<std::size_t>(out.label_of[static_cast<std::size_t>(v)])] =
            out.chi[static_cast<std::size_t>(v)] == 1;
    return out;
}

std::vector<std::pair<int, int>> spanning_tree_with_matching(const ReducedColouredGraph& r,
                                                             const ConnectedMatching& m) {
    require(!m.edges.empty(), ErrorCode::NoShape, "empty matching has no component");
    UnionFind uf(r.vertex_count());
    std::vector<std::pair<int, int>> tree;
    int root = r.vertex_count();
    for (auto [a, b] : m.edges) {
        require(uf.unite(a, b), ErrorCode::Structural, "matching edges share a vertex");
        tree.push_back(ordered(a, b));
        root = std::min({root, a, b});
    }
    const auto adj = r.colour_adjacency(m.colour);
    std::vector<char> seen(static_cast<std::size_t>(r.vertex_count()), 0);
    std::deque<int> queue{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (uf.unite(v, w))
                tree.push_back(ordered(v, w));
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

CmShape assemble_cm_shape(const HostColouring& c, const std::vector<HostClass>& partition, const Rational& eps,
                          const ReduceOptions& options) {
    CmShape shape;
    shape.reduced = build_reduced_graph(c, partition, eps, options);
    const ReducedColouredGraph& r = shape.reduced;
    const ConnectedMatching m = best_monochromatic_connected_matching(r, options.workers);
    require(m.size() > 0, ErrorCode::NoShape, "no colour has a regular pair to match; no cm-shape exists");

    const auto tree = spanning_tree_with_matching(r, m);
    // Compress the component to 0..n-1 for labelling.
    const auto& comp = m.component;
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(comp.begin(), comp.end(), v) - comp.begin());
    };
    std::vector<std::pair<int, int>> local_tree;
    std::vector<std::pair<int, int>> local_matching;
    for (auto [a, b] : tree)
        local_tree.emplace_back(local(a), local(b));
    for (auto [a, b] : m.edges)
        local_matching.emplace_back(local(a), local(b));
    const TreeLabelling lab = even_distance_labelling(static_cast<int>(comp.size()), local_tree, local_matching);

    shape.colour = m.colour;
    shape.k = r.vertex_count();
    shape.epsilon = eps;
    shape.density = Rational(1, c.colour_count());
    shape.tree = lab.shape;
    shape.reduced_vertex.assign(comp.size(), -1);
    for (std::size_t v = 0; v < comp.size(); ++v)
        shape.reduced_vertex[static_cast<std::size_t>(lab.label_of[v])] = comp[v];
    for (int rv : shape.reduced_vertex)
        shape.classes.push_back(partition[static_cast<std::size_t>(rv)]);

    const std::int64_t area = static_cast<std::int64_t>(partition.front().vertices.size()) *
                              static_cast<std::int64_t>(partition.front().vertices.size());
    shape.tree_edges_certified = true;
    for (auto [a, b] : shape.tree.edges) {
        const auto [i, j] = ordered(shape.reduced_vertex[static_cast<std::size_t>(a)],
                                    shape.reduced_vertex[static_cast<std::size_t>(b)]);
        const auto it = std::find_if(r.verdicts.begin(), r.verdicts.end(),
                                     [&](const PairVerdict& pv) { return pv.i == i && pv.j == j; });
        const bool ok = it != r.verdicts.end() && it->adjacent && it->colour == shape.colour &&
                        it->counts[static_cast<std::size_t>(shape.colour - 1)] * c.colour_count() >= area;
        shape.tree_edges_certified = shape.tree_edges_certified && ok;
    }
    require(shape.tree_edges_certified, ErrorCode::Structural, "internal: tree edge lacks its regularity certificate");
    shape.ell_bound_holds =
        Rational(shape.ell()) * (3 + 2400000 * eps) >= Rational(shape.k, 2);
    return shape;
}

void write_cm_shape(std::ostream& out, const CmShape& shape, const HostColouring& c) {
    const ShapeTree& t = shape.tree;
    out << "cmshape " << t.ell << ' ' << t.ell_prime << ' ' << shape.k << ' ' << shape.colour << '\n';
    for (auto [a, b] : t.edges)
        out << "tedge " << t.label_name(a) << ' ' << t.label_name(b) << '\n';
    for (auto [a, b] : t.matching())
        out << "medge " << t.label_name(a) << ' ' << t.label_name(b) << '\n';
    for (int label = 0; label < t.label_count(); ++label) {
        const HostClass& cls = shape.classes[static_cast<std::size_t>(label)];
        out << "class " << t.label_name(label);
        for (int v : cls.vertices)
            out << ' ' << c.global_id(cls.side, v);
        out << '\n';
    }
}

}  // namespace bipramsey
