#include "bipramsey/cli.hpp"

#include "bipramsey/cm_shape.hpp"
#include "bipramsey/colouring.hpp"
#include "bipramsey/error.hpp"
#include "bipramsey/graph.hpp"
#include "bipramsey/partition.hpp"
#include "bipramsey/pipeline.hpp"
#include "bipramsey/ramsey.hpp"
#include "bipramsey/regularity.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace bipramsey {

namespace {

struct Settings {
    int workers = 0;
    std::uint64_t seed = 0;
    std::string out_path;
    // host
    std::string colouring_path;
    std::string host;
    // target
    std::string target;
    std::string target_path;
    // numbers kept as text until parsed exactly
    std::string eps = "1/10";
    std::string d = "1/3";
    std::string xi = "1/6";
    std::string beta;
    std::string compat_eps;
    std::string gamma;
    std::string eps1;
    int delta = 1;
    int k0 = 1;
    int colour = 0;
    int per_side = 2;
    int n = 0;
    int big_n = 0;
    int r = 3;
    int nmax = 0;
    std::uint64_t budget = 0;
    std::string kind = "random";
    std::string mode = "auto";
    std::int64_t samples = kDefaultRegularitySamples;
    std::string left_ids;
    std::string right_ids;
    std::string targets;
    std::string certificate_path;
    int hat_ell = 0;
    int ell = 1;
    int min_window = 2;
    int slice_r = 2;
};

std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> ids;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        require(!item.empty(), ErrorCode::Parse, "empty entry in id list '" + text + "'");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(used == item.size() && v >= 1, ErrorCode::Parse, "bad id '" + item + "'");
        ids.push_back(v - 1);
    }
    return ids;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        parts.push_back(item);
    return parts;
}

int parse_int(const std::string& text) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    require(!text.empty() && used == text.size(), ErrorCode::Parse, "bad integer '" + text + "'");
    return v;
}

/// "mono:N[:s[:r]]", "extremal:n", "random:N:r:seed".
HostColouring host_from_spec(const std::string& spec) {
    const auto parts = split(spec, ':');
    require(!parts.empty(), ErrorCode::Parse, "empty host spec");
    if (parts[0] == "mono" && parts.size() >= 2 && parts.size() <= 4) {
        const int n = parse_int(parts[1]);
        const int s = parts.size() >= 3 ? parse_int(parts[2]) : 1;
        const int r = parts.size() == 4 ? parse_int(parts[3]) : 3;
        require(n >= 1 && r >= 1 && s >= 1 && s <= r, ErrorCode::Parameter, "bad mono host spec '" + spec + "'");
        return HostColouring(n, n, r, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, static_cast<std::uint8_t>(s)));
    }
    if (parts[0] == "extremal" && parts.size() == 2)
        return extremal_three_split(parse_int(parts[1]));
    if (parts[0] == "random" && parts.size() == 4)
        return random_colouring(parse_int(parts[1]), parse_int(parts[2]),
                                static_cast<std::uint64_t>(parse_int(parts[3])));
    fail(ErrorCode::Parse, "host spec must be mono:N[:s[:r]], extremal:n or random:N:r:seed, got '" + spec + "'");
}

HostColouring load_host(const Settings& s) {
    require(s.colouring_path.empty() != s.host.empty(), ErrorCode::Parameter,
            "give exactly one of --colouring FILE or --host SPEC");
    if (!s.host.empty())
        return host_from_spec(s.host);
    std::ifstream in(s.colouring_path);
    require(static_cast<bool>(in), ErrorCode::Io, "cannot open " + s.colouring_path);
    return read_colouring(in);
}

TargetGraph load_target(const Settings& s) {
    require(s.target.empty() != s.target_path.empty(), ErrorCode::Parameter,
            "give exactly one of --H NAME or --H-file FILE");
    if (!s.target.empty())
        return make_named_graph(s.target);
    std::ifstream in(s.target_path);
    require(static_cast<bool>(in), ErrorCode::Io, "cannot open " + s.target_path);
    return read_graph(in);
}

RegularityMode parse_mode(const std::string& mode) {
    if (mode == "exhaustive")
        return RegularityMode::Exhaustive;
    if (mode == "sampled")
        return RegularityMode::Sampled;
    if (mode == "auto")
        return RegularityMode::Auto;
    fail(ErrorCode::Parse, "mode must be exhaustive, sampled or auto");
}

ReduceOptions reduce_options(const Settings& s) {
    return ReduceOptions{parse_mode(s.mode), s.samples, s.seed, s.workers};
}

/// Artifact sink: the --out file when given, otherwise the main stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            require(static_cast<bool>(file_), ErrorCode::Io, "cannot write " + path);
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

/// Provenance line: subcommand and every flag given, except --workers.
std::string provenance(const CLI::App& sub) {
    std::string line = "# " + sub.get_name();
    for (const CLI::Option* opt : sub.get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--workers" || opt->get_name() == "--help")
            continue;
        std::string name = opt->get_name();
        while (!name.empty() && name.front() == '-')
            name.erase(name.begin());
        line += ' ' + name + '=';
        const auto& values = opt->results();
        for (std::size_t i = 0; i < values.size(); ++i)
            line += (i ? "," : "") + values[i];
    }
    return line;
}

std::string join_ids(const std::vector<int>& ids) {
    std::string s;
    for (int v : ids)
        s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

PipelineParams pipeline_params(const Settings& s) {
    PipelineParams p;
    p.classes_per_side = s.per_side;
    p.eps = parse_rational(s.eps);
    p.density = parse_rational(s.d);
    p.slice_r = s.slice_r;
    p.hat_ell = s.hat_ell;
    p.xi = parse_rational(s.xi);
    p.min_window = s.min_window;
    if (!s.beta.empty())
        p.beta = parse_rational(s.beta);
    if (!s.compat_eps.empty())
        p.compat_eps = parse_rational(s.compat_eps);
    p.reduce = reduce_options(s);
    if (s.budget > 0)
        p.embed.budget = s.budget;
    p.embed.seed = s.seed;
    return p;
}

/// Caterpillar tree x1-y1-x2-y2-... used when no host shape is given.
ShapeTree caterpillar(int ell) {
    require(ell >= 1, ErrorCode::Parameter, "l must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < ell; ++i) {
        edges.emplace_back(2 * i, 2 * i + 1);
        if (i + 1 < ell)
            edges.emplace_back(2 * i + 1, 2 * i + 2);
    }
    std::vector<std::pair<int, int>> matching;
    for (int i = 0; i < ell; ++i)
        matching.emplace_back(2 * i, 2 * i + 1);
    return even_distance_labelling(2 * ell, edges, matching).shape;
}

int cmd_gen_h(const Settings& s, const CLI::App& sub, std::ostream& out) {
    const TargetGraph h = load_target(s);
    Sink sink(s.out_path, out);
    if (s.out_path.empty())
        out << provenance(sub) << '\n';
    write_graph(sink.get(), h);
    return 0;
}

int cmd_gen_colouring(const Settings& s, const CLI::App& sub, std::ostream& out) {
    HostColouring c;
    if (s.kind == "extremal")
        c = extremal_three_split(s.n);
    else if (s.kind == "random")
        c = random_colouring(s.big_n, s.r, s.seed);
    else if (s.kind == "mono")
        c = host_from_spec("mono:" + std::to_string(s.big_n) + ":" + std::to_string(std::max(1, s.colour)) + ":" +
                           std::to_string(s.r));
    else
        fail(ErrorCode::Parse, "kind must be extremal, random or mono");
    Sink sink(s.out_path, out);
    sink.get() << provenance(sub) << '\n';
    write_colouring(sink.get(), c);
    return 0;
}

int cmd_find_mono(const Settings& s, const CLI::App& sub, std::ostream& out) {
    const HostColouring c = load_host(s);
    const TargetGraph h = load_target(s);
    out << provenance(sub) << '\n';
    bool any = false;
    for (int colour = 1; colour <= c.colour_count(); ++colour) {
        if (s.colour != 0 && colour != s.colour)
            continue;
        const auto w = find_monochromatic_copy(c, h, colour);
        out << "colour " << colour << ": ";
        if (!w) {
            out << "none\n";
            continue;
        }
        any = true;
        out << "found";
        for (const auto& x : w->map)
            out << ' ' << c.global_id(x.side, x.index);
        out << '\n';
    }
    out << (any ? "monochromatic copy: yes" : "monochromatic copy: no") << '\n';
    return 0;
}

int cmd_ramsey_exact(const Settings& s, const CLI::App& sub, std::ostream& out) {
    std::vector<TargetGraph> targets;
    for (const auto& name : split(s.targets, ','))
        targets.push_back(make_named_graph(name));
    RamseySearchOptions opts;
    opts.n_max = s.nmax;
    opts.node_budget = s.budget;
    opts.workers = s.workers;
    const RamseyResult res = bipartite_ramsey_exact(targets, opts);
    out << provenance(sub) << '\n';
    if (res.value)
        out << *res.value << '\n';
    else
        out << "unresolved" << (res.budget_exhausted ? " (budget exhausted)" : "") << '\n';
    out << "# avoiding colouring found up to N=" << res.avoiding_size << ", nodes=" << res.nodes << '\n';
    return 0;
}

int cmd_verify_lower(const Settings& s, const CLI::App& sub, std::ostream& out) {
    const TargetGraph h = load_target(s);
    const LowerBoundCheck check = verify_lower_bound_construction(h, s.n);
    out << provenance(sub) << '\n';
    out << "avoids: " << (check.avoids ? "true" : "false") << ", certifies R ≥ " << check.certified_bound << '\n';
    if (!s.certificate_path.empty()) {
        std::ofstream cert(s.certificate_path);
        require(static_cast<bool>(cert), ErrorCode::Io, "cannot write " + s.certificate_path);
        write_lower_certificate(cert, check.certified_bound, check.colouring);
    }
    return check.avoids ? 0 : 1;
}

int cmd_check_regular(const Settings& s, const CLI::App& sub, std::ostream& out) {
    const HostColouring c = load_host(s);
    require(s.colour >= 1, ErrorCode::InvalidColour, "--colour is required");
    const HostClass a{Side::Left, parse_id_list(s.left_ids)};
    const HostClass b{Side::Right, parse_id_list(s.right_ids)};
    validate_partition(c, {a, b});
    const VertexPair p = VertexPair::from_colouring(c, s.colour, a, b);
    const Rational eps = parse_rational(s.eps);
    RegularityCertificate cert;
    switch (parse_mode(s.mode)) {
    case RegularityMode::Exhaustive: cert = eps_regular_exhaustive(p, eps, s.workers); break;
    case RegularityMode::Sampled: cert = eps_regular_sampled(p, eps, s.samples, s.seed); break;
    case RegularityMode::Auto: cert = eps_regular(p, eps, s.samples, s.seed); break;
    }
    out << provenance(sub) << '\n';
    out << "density " << to_string(density(p)) << '\n';
    out << certificate_line(1, 2, cert, p.a_ids, p.b_ids) << '\n';
    return 0;
}

int cmd_reduce(const Settings& s, const CLI::App& sub, std::ostream& out) {
    const HostColouring c = load_host(s);
    const auto partition = equal_partition(c, s.per_side);
    const ReducedColouredGraph r = build_reduced_graph(c, partition, parse_rational(s.eps), reduce_options(s));
    out << provenance(sub) << '\n';
    out << "reduced " << r.vertex_count() << ' ' << r.colour_count() << ' ' << r.edges().size() << '\n';
    for (const auto& pv : r.verdicts) {
        std::size_t pick = 0;
        for (std::size_t q = 0; q < pv.certificates.size(); ++q)
            if (!pv.certificates[q].regular) {
                pick = q;
                break;
            }
        const HostClass* a = &partition[static_cast<std::size_t>(pv.i)];
        const HostClass* b = &partition[static_cast<std::size_t>(pv.j)];
        if (a->side == Side::Right)
            std::swap(a, b);
        const VertexPair p = VertexPair::from_colouring(c, static_cast<int>(pick) + 1, *a, *b);
        out << certificate_line(pv.i + 1, pv.j + 1, pv.certificates[pick], p.a_ids, p.b_ids);
        if (!pv.certificates[pick].regular)
            out << " colour=" << pick + 1;
        out << '\n';
    }
    for (const auto& e : r.edges())
        out << "edge " << e.a + 1 << ' ' << e.b + 1 << ' ' << e.colour << '\n';
    return 0;
}

int cmd_matching(const Settings& s, const CLI::App& sub, std::ostream& out) {
    const HostColouring c = load_host(s);
    const ReducedColouredGraph r =
        build_reduced_graph(c, equal_partition(c, s.per_side), parse_rational(s.eps), reduce_options(s));
    const ConnectedMatching m = s.colour > 0 ? find_connected_matching(r, s.colour)
                                             : best_monochromatic_connected_matching(r, s.workers);
    out << provenance(sub) << '\n';
    out << "matching colour " << m.colour << " size " << m.size() << '\n';
    out << "component " << join_ids([&] {
        std::vector<int> v;
        for (int x : m.component)
            v.push_back(x + 1);
        return v;
    }()) << '\n';
    for (auto [a, b] : m.edges)
        out << "medge " << a + 1 << ' ' << b + 1 << '\n';
    return 0;
}

int cmd_shape(const Settings& s, const CLI::App& sub, std::ostream& out) {
    const HostColouring c = load_host(s);
    const CmShape shape = assemble_cm_shape(c, equal_partition(c, s.per_side), parse_rational(s.eps), reduce_options(s));
    Sink sink(s.out_path, out);
    sink.get() << provenance(sub) << '\n';
    write_cm_shape(sink.get(), shape, c);
    sink.get() << "# l bound " << (shape.ell_bound_holds ? "holds" : "does not hold") << " at this eps\n";
    return 0;
}

int cmd_constants(const Settings& s, const CLI::App& sub, std::ostream& out) {
    const ConstantsProfile p = derive_constants(parse_rational(s.gamma), s.delta, parse_rational(s.eps1), s.k0);
    out << provenance(sub) << '\n';
    out << "eps=" << to_string(p.eps) << '\n';
    out << "xi=" << to_string(p.xi) << '\n';
    out << "beta=" << to_string(p.beta) << '\n';
    out << "hat_ell_max=" << to_string(p.hat_ell_max) << '\n';
    for (const auto& a : p.audit)
        out << "audit " << a.name << ' ' << (a.holds ? "holds" : "fails") << " : " << a.detail << '\n';
    return 0;
}

int cmd_plan_h(const Settings& s, const CLI::App& sub, std::ostream& out) {
    const TargetGraph h = load_target(s);
    ShapeTree tree;
    if (!s.colouring_path.empty() || !s.host.empty()) {
        const HostColouring c = load_host(s);
        tree = assemble_cm_shape(c, equal_partition(c, s.per_side), parse_rational(s.eps), reduce_options(s)).tree;
    } else {
        tree = caterpillar(s.ell);
    }
    const VertexTwoColouring chi = require_two_colouring(h);
    require(s.hat_ell >= 1, ErrorCode::Parameter, "--hat-ell is required");
    const Rational xi = parse_rational(s.xi);
    const auto counts = block_counts(chi, equi_partition(h, s.hat_ell));
    const auto sigma = find_balanced_permutation(counts, xi, s.min_window);
    require(sigma.has_value(), ErrorCode::Partition, "no window-balanced permutation exists at this xi");
    PartitionPlan plan = make_plan(h, s.hat_ell, tree.ell, tree.ell_prime, *sigma);
    const Rational beta = s.beta.empty() ? Rational(std::max(1, bandwidth_of_labelling(h)), h.vertex_count())
                                         : parse_rational(s.beta);
    build_links_kernels(plan, tree, beta);
    assign_classes(plan, chi, h);
    const PlanBounds bounds = check_plan_bounds(plan, xi);
    Sink sink(s.out_path, out);
    sink.get() << provenance(sub) << '\n';
    write_plan(sink.get(), plan);
    sink.get() << "# bounds " << (bounds.holds ? "hold" : "exceeded") << ": max |X|,|Y| = " << bounds.largest_xy
               << " <= " << to_string(bounds.xy_bound) << ", max |Z| = " << bounds.largest_z << " <= " << bounds.z_bound
               << '\n';
    return 0;
}

int cmd_pipeline(const Settings& s, const CLI::App& sub, std::ostream& out, PipelineStage last) {
    const HostColouring c = load_host(s);
    const TargetGraph h = load_target(s);
    const PipelineReport report = pipeline_demo(c, h, pipeline_params(s), last);
    out << provenance(sub) << '\n' << report.render();
    if (report.embedding && report.embedding->success && last == PipelineStage::Verify) {
        out << "map";
        for (const auto& x : report.embedding->map)
            out << ' ' << c.global_id(x.side, x.index);
        out << '\n';
    }
    return report.success ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bipartite Ramsey toolkit: colourings, exact small values, regularity, cm-shapes, embeddings",
                 "bipramsey"};
    app.require_subcommand(1);
    Settings s;

    auto host_opts = [&](CLI::App* sub) {
        sub->add_option("--colouring", s.colouring_path, "Colouring file (bipcol format)");
        sub->add_option("--host", s.host, "Generated host: mono:N[:s[:r]], extremal:n, random:N:r:seed");
    };
    auto target_opts = [&](CLI::App* sub) {
        sub->add_option("--H", s.target, "Target name: P<n>, C<n>, G<a>x<b>, S<k>, E<n>");
        sub->add_option("--H-file", s.target_path, "Target graph file");
    };
    auto reduce_opts = [&](CLI::App* sub) {
        sub->add_option("--per-side", s.per_side, "Classes per host side")->check(CLI::PositiveNumber);
        sub->add_option("--eps", s.eps, "Regularity eps (exact rational)");
        sub->add_option("--mode", s.mode, "exhaustive, sampled or auto");
        sub->add_option("--samples", s.samples, "Sampled certification draws");
        sub->add_option("--seed", s.seed, "Seed");
    };
    auto common = [&](CLI::App* sub) {
        sub->add_option("--workers", s.workers, "OpenMP threads (0: runtime default)");
    };

    auto* gen_h = app.add_subcommand("gen-h", "Write a target graph");
    target_opts(gen_h);
    gen_h->add_option("--out", s.out_path, "Output file");

    auto* gen_col = app.add_subcommand("gen-colouring", "Write a host colouring");
    gen_col->add_option("--kind", s.kind, "extremal, random or mono");
    gen_col->add_option("--n", s.n, "Target size for the extremal split");
    gen_col->add_option("--N", s.big_n, "Host side size");
    gen_col->add_option("--r", s.r, "Number of colours");
    gen_col->add_option("--colour", s.colour, "Colour of a mono host");
    gen_col->add_option("--seed", s.seed, "Seed");
    gen_col->add_option("--out", s.out_path, "Output file");

    auto* find = app.add_subcommand("find-mono", "Search monochromatic copies");
    host_opts(find);
    target_opts(find);
    find->add_option("--colour", s.colour, "Only this colour");

    auto* exact = app.add_subcommand("ramsey-exact", "Exact small bipartite Ramsey number");
    exact->add_option("--targets", s.targets, "Comma-separated target names, one per colour")->required();
    exact->add_option("--nmax", s.nmax, "Largest host size tried");
    exact->add_option("--budget", s.budget, "Node budget per search root (0: unlimited)");
    common(exact);

    auto* lower = app.add_subcommand("verify-lower", "Check the three-part extremal colouring");
    target_opts(lower);
    lower->add_option("--n", s.n, "Target size")->required();
    lower->add_option("--certificate", s.certificate_path, "Write the avoiding colouring here");

    auto* regular = app.add_subcommand("check-regular", "Certify one pair");
    host_opts(regular);
    regular->add_option("--colour", s.colour, "Colour class")->required();
    regular->add_option("--left", s.left_ids, "Left vertices, 1-based, comma-separated")->required();
    regular->add_option("--right", s.right_ids, "Right vertices, 1-based, comma-separated")->required();
    reduce_opts(regular);
    common(regular);

    auto* reduce = app.add_subcommand("reduce", "Reduced coloured graph of an equal partition");
    host_opts(reduce);
    reduce_opts(reduce);
    common(reduce);

    auto* matching = app.add_subcommand("matching", "Largest monochromatic connected matching");
    host_opts(matching);
    reduce_opts(matching);
    matching->add_option("--colour", s.colour, "Only this colour");
    common(matching);

    auto* shape = app.add_subcommand("shape", "Assemble a cm-shape");
    host_opts(shape);
    reduce_opts(shape);
    shape->add_option("--out", s.out_path, "Output file");
    common(shape);

    auto* constants = app.add_subcommand("constants", "Derive and audit the constants");
    constants->add_option("--gamma", s.gamma, "gamma")->required();
    constants->add_option("--delta", s.delta, "Maximum degree")->required();
    constants->add_option("--eps1", s.eps1, "Embedding constant")->required();
    constants->add_option("--K0", s.k0, "K0");

    auto* plan = app.add_subcommand("plan-h", "Partition a target graph");
    target_opts(plan);
    host_opts(plan);
    reduce_opts(plan);
    plan->add_option("--ell", s.ell, "Matching edges of the default caterpillar tree");
    plan->add_option("--hat-ell", s.hat_ell, "Number of blocks")->required();
    plan->add_option("--xi", s.xi, "Window balance xi");
    plan->add_option("--min-window", s.min_window, "Shortest balanced run of blocks");
    plan->add_option("--beta", s.beta, "Piece fraction beta");
    plan->add_option("--out", s.out_path, "Output file");
    common(plan);

    std::vector<std::pair<CLI::App*, PipelineStage>> staged;
    for (auto [name, last, help] : {std::tuple{"compat", PipelineStage::Compat, "Run the pipeline through the compatibility check"},
                                    std::tuple{"embed", PipelineStage::Verify, "Run the pipeline and embed"},
                                    std::tuple{"pipeline", PipelineStage::Verify, "Run every stage"}}) {
        auto* sub = app.add_subcommand(name, help);
        host_opts(sub);
        target_opts(sub);
        reduce_opts(sub);
        sub->add_option("--d", s.d, "Density d for slicing");
        sub->add_option("--slice-r", s.slice_r, "r in the slicing parameters");
        sub->add_option("--hat-ell", s.hat_ell, "Number of blocks (0: automatic)");
        sub->add_option("--xi", s.xi, "Window balance xi");
        sub->add_option("--min-window", s.min_window, "Shortest balanced run of blocks");
        sub->add_option("--beta", s.beta, "Piece fraction beta (default bandwidth/n)");
        sub->add_option("--compat-eps", s.compat_eps, "Compatibility eps (default 2 eps)");
        sub->add_option("--budget", s.budget, "Embedding node budget");
        common(sub);
        staged.emplace_back(sub, last);
    }

    std::vector<const char*> argv{"bipramsey"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "gen-h")
            return cmd_gen_h(s, *sub, out);
        if (name == "gen-colouring")
            return cmd_gen_colouring(s, *sub, out);
        if (name == "find-mono")
            return cmd_find_mono(s, *sub, out);
        if (name == "ramsey-exact")
            return cmd_ramsey_exact(s, *sub, out);
        if (name == "verify-lower")
            return cmd_verify_lower(s, *sub, out);
        if (name == "check-regular")
            return cmd_check_regular(s, *sub, out);
        if (name == "reduce")
            return cmd_reduce(s, *sub, out);
        if (name == "matching")
            return cmd_matching(s, *sub, out);
        if (name == "shape")
            return cmd_shape(s, *sub, out);
        if (name == "constants")
            return cmd_constants(s, *sub, out);
        if (name == "plan-h")
            return cmd_plan_h(s, *sub, out);
        for (auto [app_ptr, last] : staged)
            if (app_ptr == sub)
                return cmd_pipeline(s, *sub, out, last);
        err << "usage error: unhandled subcommand " << name << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << error_code_name(e.code()) << '\n' << e.what() << '\n';
        return 1;
    }
}

}  // namespace bipramsey
