#include "bipramsey/pipeline.hpp"

#include "bipramsey/error.hpp"

#include <sstream>

namespace bipramsey {

const char* stage_name(PipelineStage stage) {
    switch (stage) {
    case PipelineStage::Shape: return "shape";
    case PipelineStage::Slice: return "slice";
    case PipelineStage::Partition: return "partition";
    case PipelineStage::Links: return "links";
    case PipelineStage::Classes: return "classes";
    case PipelineStage::Compat: return "compat";
    case PipelineStage::Embed: return "embed";
    case PipelineStage::Verify: return "verify";
    }
    return "?";
}

std::string PipelineReport::render() const {
    std::ostringstream out;
    for (const auto& line : stages) {
        out << "stage " << stage_name(line.stage) << (line.ok ? " ok" : " fail");
        if (!line.detail.empty())
            out << ' ' << line.detail;
        out << '\n';
    }
    return out.str();
}

namespace {

std::optional<int> choose_hat_ell(int n, int ell, int min_window) {
    for (int d = ell; d <= n; d += ell)
        if (n % d == 0 && d >= ell * min_window)
            return d;
    return std::nullopt;
}

std::string join_labels(const PartitionPlan& plan, const std::vector<int>& labels) {
    std::string s;
    for (int l : labels)
        s += (s.empty() ? "" : ",") + plan.label_name(l);
    return s;
}

}  // namespace

PipelineReport pipeline_demo(const HostColouring& c, const TargetGraph& h, const PipelineParams& params,
                             PipelineStage last) {
    PipelineReport report;
    PipelineStage current = PipelineStage::Shape;
    auto pass = [&](std::string detail) {
        report.stages.push_back({current, true, std::move(detail)});
        return current != last;
    };
    auto fail_stage = [&](std::string detail) { report.stages.push_back({current, false, std::move(detail)}); };

    try {
        current = PipelineStage::Shape;
        report.shape = assemble_cm_shape(c, equal_partition(c, params.classes_per_side), params.eps, params.reduce);
        const CmShape& shape = *report.shape;
        std::ostringstream sd;
        sd << "l=" << shape.ell() << " lprime=" << shape.ell_prime() << " k=" << shape.k << " colour=" << shape.colour;
        if (!pass(sd.str()))
            return report.success = true, report;

        current = PipelineStage::Slice;
        report.slice = super_slice(c, shape.colour, shape.classes, shape.tree.edges, shape.tree.matching(),
                                   params.eps, params.density, params.slice_r);
        const SuperSliceResult& slice = *report.slice;
        int verified = 0;
        int refuted = 0;
        for (const auto& v : slice.verified) {
            verified += v.has_value() && *v;
            refuted += v.has_value() && !*v;
        }
        std::ostringstream ld;
        ld << "size=" << slice.target_size << " eps=" << to_string(slice.epsilon) << " d=" << to_string(slice.density)
           << " verified=" << verified << '/' << slice.verified.size();
        if (refuted > 0) {
            fail_stage(ld.str() + " refuted=" + std::to_string(refuted));
            return report;
        }
        if (!pass(ld.str()))
            return report.success = true, report;

        current = PipelineStage::Partition;
        const VertexTwoColouring chi = require_two_colouring(h);
        const int n = h.vertex_count();
        int hat_ell = params.hat_ell;
        if (hat_ell == 0) {
            const auto chosen = choose_hat_ell(n, shape.ell(), params.min_window);
            if (!chosen) {
                fail_stage("no divisor of " + std::to_string(n) + " is a multiple of l=" + std::to_string(shape.ell()) +
                           " with at least min_window blocks per family");
                return report;
            }
            hat_ell = *chosen;
        }
        const auto counts = block_counts(chi, equi_partition(h, hat_ell));
        const auto sigma = find_balanced_permutation(counts, params.xi, params.min_window);
        if (!sigma) {
            fail_stage("no window-balanced permutation of " + std::to_string(hat_ell) + " blocks at xi=" +
                       to_string(params.xi));
            return report;
        }
        report.plan = make_plan(h, hat_ell, shape.ell(), shape.ell_prime(), *sigma);
        PartitionPlan& plan = *report.plan;
        std::string sig;
        for (int b : plan.sigma)
            sig += (sig.empty() ? "" : ",") + std::to_string(b + 1);
        if (!pass("hat_l=" + std::to_string(hat_ell) + " sigma=" + sig))
            return report.success = true, report;

        current = PipelineStage::Links;
        const int bw = bandwidth_of_labelling(h);
        const Rational beta = params.beta ? *params.beta : Rational(std::max(1, bw), n);
        build_links_kernels(plan, shape.tree, beta);
        int pieces = 0;
        for (const auto& link : plan.links)
            pieces += static_cast<int>(link.size());
        if (!pass("beta=" + to_string(beta) + " piece=" + std::to_string(plan.piece_size) +
                  " pieces=" + std::to_string(pieces)))
            return report.success = true, report;

        current = PipelineStage::Classes;
        assign_classes(plan, chi, h);
        if (!plan_respects_tree(plan, h, shape.tree)) {
            fail_stage("classes do not follow the tree");
            return report;
        }
        const PlanBounds bounds = check_plan_bounds(plan, params.xi);
        std::ostringstream cd;
        cd << "max_xy=" << bounds.largest_xy << " bound=" << to_string(bounds.xy_bound) << " max_z=" << bounds.largest_z
           << " bound=" << bounds.z_bound << (bounds.holds ? " bounds=hold" : " bounds=exceeded");
        if (!pass(cd.str()))
            return report.success = true, report;

        current = PipelineStage::Compat;
        const Rational ceps = params.compat_eps ? *params.compat_eps : 2 * params.eps;
        report.compat = compatibility_check(plan, h, shape.tree, slice.classes, ceps);
        const CompatibilityReport& compat = *report.compat;
        std::ostringstream md;
        md << "eps=" << to_string(ceps) << " conditions=";
        for (bool b : compat.conditions)
            md << (b ? '1' : '0');
        if (!compat.compatible) {
            if (!compat.size_violations.empty())
                md << " oversized=" << join_labels(plan, compat.size_violations);
            if (!compat.u_violations.empty())
                md << " u=" << join_labels(plan, compat.u_violations);
            if (!compat.u_prime_violations.empty())
                md << " uprime=" << join_labels(plan, compat.u_prime_violations);
            if (!compat.edge_violations.empty())
                md << " stray_edges=" << compat.edge_violations.size();
            fail_stage(md.str());
            return report;
        }
        if (!pass(md.str()))
            return report.success = true, report;

        current = PipelineStage::Embed;
        report.embedding = greedy_embed(h, plan, c, shape.colour, slice.classes, params.embed);
        const EmbeddingResult& emb = *report.embedding;
        std::ostringstream ed;
        ed << "nodes=" << emb.nodes << " backtracks=" << emb.backtracks << " restarts=" << emb.restarts
           << " deferred=" << emb.deferred;
        if (!emb.success) {
            fail_stage(ed.str() + " reason=" + emb.reason);
            return report;
        }
        if (!pass(ed.str()))
            return report.success = true, report;

        current = PipelineStage::Verify;
        if (!verify_embedding(emb, h, c, shape.colour, plan, slice.classes)) {
            fail_stage("embedding failed re-validation");
            return report;
        }
        pass("colour=" + std::to_string(shape.colour));
        report.success = true;
    } catch (const Error& e) {
        fail_stage("error " + std::string(error_code_name(e.code())) + ": " + e.what());
    }
    return report;
}

}  // namespace bipramsey
