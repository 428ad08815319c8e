#pragma once

#include "tan/contour.hpp"
#include "tan/dataset.hpp"
#include "tan/flow.hpp"
#include "tan/geometry.hpp"
#include "tan/image.hpp"
#include "tan/losses.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace tan {

// Per-frame analysis output in canonical canvas coordinates.
struct AnalysisResult {
    Mask mask;                 // canvas-sized
    LandmarkTriple landmarks;  // canvas coordinates
    std::array<double, 2> plane_probs{0.5, 0.5};
};

// What the pipeline knows about the frame being analyzed.
struct AnalyzerContext {
    int frame_id = 0;
    AffineTransform to_canonical; // original -> canvas
};

class Analyzer {
public:
    virtual ~Analyzer() = default;
    virtual AnalysisResult analyze(const Frame& canonical, const AnalyzerContext& ctx) const = 0;
    virtual std::string describe() const = 0;
};

struct OracleConfig {
    double mask_noise = 0.0;           // boundary erosion/dilation radius, px
    double landmark_noise_sigma = 0.0; // px
    std::uint64_t seed = 0;
};

// Ground-truth-backed analyzer with controllable perturbation; deterministic
// per (seed, frame id).
class OracleAnalyzer : public Analyzer {
public:
    OracleAnalyzer(AnnotationSet gt, OracleConfig cfg);
    AnalysisResult analyze(const Frame& canonical, const AnalyzerContext& ctx) const override;
    std::string describe() const override { return "oracle"; }

private:
    AnnotationSet gt_;
    OracleConfig cfg_;
};

inline constexpr int kFeatureCount = 7;

// Handcrafted per-pixel features: intensity, three box-blur scales, gradient
// magnitude, and normalized (u,v) position.
struct FeatureMaps {
    int width = 0;
    int height = 0;
    std::array<std::vector<float>, kFeatureCount> channels;
};

FeatureMaps compute_features(const Frame& img, const std::array<int, 3>& blur_radii);

// Linear heads over the 7 features: per-pixel 2-class segmentation logits,
// a 6-drift landmark regressor and a 2-logit plane classifier over the
// mean-pooled feature vector.
struct PixelClassifierModel {
    std::array<int, 3> blur_radii{3, 10, 31};
    std::array<double, kFeatureCount> feat_mean{};
    std::array<double, kFeatureCount> feat_scale{1, 1, 1, 1, 1, 1, 1};
    std::array<std::array<double, kFeatureCount>, 2> seg_w{};
    std::array<double, 2> seg_b{};
    std::array<std::array<double, kFeatureCount>, 6> lmk_w{};
    std::array<double, 6> lmk_b{};
    std::array<std::array<double, kFeatureCount>, 2> pln_w{};
    std::array<double, 2> pln_b{};
    ShapeTemplate tmpl;
    std::uint64_t seed = 0;

    // FNV-1a over the exact parameter bytes; equal checksums mean bit-equal
    // parameters.
    std::uint64_t checksum() const;
};

void save_model(const PixelClassifierModel& m, const std::filesystem::path& path);
PixelClassifierModel load_model(const std::filesystem::path& path);

class PixelClassifierAnalyzer : public Analyzer {
public:
    explicit PixelClassifierAnalyzer(PixelClassifierModel model) : model_(std::move(model)) {}
    AnalysisResult analyze(const Frame& canonical, const AnalyzerContext& ctx) const override;
    std::string describe() const override { return "pixel-classifier"; }
    const PixelClassifierModel& model() const { return model_; }

private:
    PixelClassifierModel model_;
};

struct TrainSample {
    Frame frame; // canvas-sized
    Mask mask;
    LandmarkTriple landmarks; // canvas coordinates
    int plane_label = 0;
};

struct TrainOptions {
    int epochs = 12;
    double lr = 0.5;
    LossWeights weights;
    bool ohem = false;
    double ohem_fraction = 0.10;
    std::uint64_t seed = 7;
    // Called after every epoch with the epoch index and current model.
    std::function<void(int, const PixelClassifierModel&)> epoch_observer;
};

// Mini-batch (one frame per step) gradient descent with the analytic
// gradients of the loss module. Deterministic given the seed; aborts on
// non-finite losses.
PixelClassifierModel train_pixel_classifier(const std::vector<TrainSample>& train,
                                            const ShapeTemplate& tmpl,
                                            const TrainOptions& opt);

struct TcmPair {
    Frame prev_frame; // canvas-sized, frame t-1
    Mask prev_label;  // ground truth of t-1
    Frame cur_frame;  // frame t
    std::optional<ContourPolyline> cur_gt_contour; // gate reference when known
};

struct TcmOptions {
    FlowConfig flow;
    HetGateConfig gate;
    double lr = 0.25;
    int passes = 1;
    double ohem_fraction = 0.10;
    std::uint64_t seed = 11;
};

struct TcmStats {
    int pairs_seen = 0;
    int pairs_gated = 0;   // Hausdorff above threshold, zero update
    int pairs_skipped = 0; // propagation failed
};

// Dual-path finetuning of the shared segmentation head: the ground-truth
// path on frame t-1 and the flow-propagated path on frame t are evaluated
// with identical parameters, gated on the contours' Hausdorff distance, and
// applied as one update.
PixelClassifierModel tcm_finetune(PixelClassifierModel model, const std::vector<TcmPair>& pairs,
                                  const TcmOptions& opt, TcmStats* stats = nullptr);

} // namespace tan
