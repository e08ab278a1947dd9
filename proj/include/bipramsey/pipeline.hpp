#pragma once

#include "bipramsey/embedding.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bipramsey {

struct PipelineParams {
    int classes_per_side = 2;
    Rational eps{1, 10};
    Rational density{1, 3};     // d handed to the slicing step
    int slice_r = 2;            // r in the slicing parameters
    int hat_ell = 0;            // 0: smallest divisor of n that is a multiple of l with hat_l >= l * min_window
    Rational xi{1, 6};
    int min_window = 2;
    std::optional<Rational> beta;  // default: bandwidth / n
    std::optional<Rational> compat_eps;  // default: 2 eps
    ReduceOptions reduce{RegularityMode::Auto, kDefaultRegularitySamples, 0, 0};
    EmbedOptions embed;
};

enum class PipelineStage { Shape, Slice, Partition, Links, Classes, Compat, Embed, Verify };

const char* stage_name(PipelineStage stage);

struct StageLine {
    PipelineStage stage;
    bool ok = false;
    std::string detail;
};

struct PipelineReport {
    std::vector<StageLine> stages;
    bool success = false;
    std::optional<CmShape> shape;
    std::optional<SuperSliceResult> slice;
    std::optional<PartitionPlan> plan;
    std::optional<CompatibilityReport> compat;
    std::optional<EmbeddingResult> embedding;

    /// "stage <name> ok|fail <detail>" lines.
    std::string render() const;
};

/// Shape, slice, partition, links, classes, compat, embed, verify; stops at
/// the first failing stage (or after `last`) and records the error text there.
PipelineReport pipeline_demo(const HostColouring& c, const TargetGraph& h, const PipelineParams& params,
                             PipelineStage last = PipelineStage::Verify);

}  // namespace bipramsey
