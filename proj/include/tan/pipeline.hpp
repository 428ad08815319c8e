#pragma once

#include "tan/analyzer.hpp"
#include "tan/dataset.hpp"
#include "tan/flow.hpp"
#include "tan/geometry.hpp"
#include "tan/losses.hpp"
#include "tan/metrics.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tan {

enum class PipelineMode {
    temporal_affine,     // landmark-propagated canonical warp from frame 1 on
    letterbox_per_frame, // every frame analyzed letterboxed, no propagation
};

enum class FirstFramePolicy {
    letterbox_analysis, // analyze the letterboxed full frame
    gt_landmarks,       // seed frame-0 landmarks from provided annotations
};

struct PipelineConfig {
    ShapeTemplate tmpl;
    std::shared_ptr<const Analyzer> analyzer;
    FlowConfig flow;
    HetGateConfig gate;
    LossWeights weights;
    PipelineMode mode = PipelineMode::temporal_affine;
    FirstFramePolicy first_frame = FirstFramePolicy::letterbox_analysis;
    const AnnotationSet* init_annotations = nullptr; // for gt_landmarks
    int threads = 1;
};

struct StageTimings {
    std::int64_t warp_us = 0;
    std::int64_t analyze_us = 0;
    std::int64_t inverse_us = 0;
};

struct FrameResult {
    int frame_id = 0;
    Mask mask_full;                // original resolution
    LandmarkTriple landmarks_full; // original coordinates
    std::array<double, 2> plane_probs{0.5, 0.5};
    AffineTransform to_canonical;
    Mask mask_canonical;
    StageTimings timings;
    bool reused_previous = false; // degenerate landmarks or failed analysis
};

// Frame-by-frame loop: estimate the affine to the template from the previous
// frame's landmarks, warp, analyze, and map mask and landmarks back. Frame 0
// follows the first-frame policy.
std::vector<FrameResult> run_tan(const VideoSequence& seq, const PipelineConfig& cfg);

// All metrics against ground truth on the frames both sides cover.
SequenceEval evaluate(const std::vector<FrameResult>& results, const AnnotationSet& gt);

struct StageMedians {
    double warp_us = 0, analyze_us = 0, inverse_us = 0, flow_us = 0;
};

struct BenchReport {
    std::string machine;
    int frames = 0;
    int repeats = 0;
    double fps_median_single = 0.0;
    double fps_median_multi = 0.0;
    StageMedians stages_single;
    StageMedians stages_multi;
    bool outputs_identical = false; // across repeats and thread counts
};

// Repeated timed runs of the pipeline plus a per-frame 20-point flow
// propagation between consecutive canonical frames. Outputs are checked to be
// identical across repeats and thread counts.
BenchReport bench(const VideoSequence& seq, const PipelineConfig& cfg, int repeats);

} // namespace tan
