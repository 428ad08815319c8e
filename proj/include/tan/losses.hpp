#pragma once

#include "tan/geometry.hpp"
#include "tan/image.hpp"

#include <array>
#include <vector>

namespace tan {

struct LossWeights {
    double lambda_pln = 0.1;
    double lambda_lmk = 0.1;
    double lambda_seg = 10.0;
};

struct HetGateConfig {
    double hausdorff_threshold = 20.0; // px
};

struct PixelLossMap {
    int width = 0;
    int height = 0;
    std::vector<double> values;
    size_t size() const { return values.size(); }
};

struct SegLossResult {
    PixelLossMap map;
    double mean = 0.0;
    // d(per-pixel loss)/d(logit), 2 entries per pixel: softmax - one_hot.
    std::vector<double> grad;
};

// Per-pixel two-class softmax cross-entropy. `logits` holds 2 values per
// pixel, row-major, [background, foreground].
SegLossResult seg_loss(const std::vector<double>& logits, const Mask& label);

// Indices of the ceil(fraction * N) largest losses, ties broken by ascending
// row-major index; returned sorted ascending.
std::vector<int> ohem_select(const PixelLossMap& map, double fraction = 0.10);

double ohem_mean(const PixelLossMap& map, const std::vector<int>& selected);

struct ScalarLossResult {
    double value = 0.0;
    std::vector<double> grad;
};

// Smooth-L1 on the landmark drift from the template, coordinates scaled by
// the canvas size before the loss. pred_drift is already in scaled units,
// ordered [apex.x, apex.y, annulus_left.x, .y, annulus_right.x, .y].
ScalarLossResult landmark_loss(const std::array<double, 6>& pred_drift,
                               const LandmarkTriple& gt, const ShapeTemplate& tmpl);

// Two-class cross-entropy on the plane logits; label is 0 or 1.
ScalarLossResult plane_loss(const std::array<double, 2>& logits, int label);

double combine_losses(double l_pln, double l_lmk, double l_seg, const LossWeights& w);

// Gated pair loss: the propagated-label path only contributes while the two
// contours agree within the threshold (inclusive); beyond it the combined
// loss, and with it every gradient, is exactly zero.
double heterogeneous_loss(double l_gt_prev, double l_of_cur, double haus,
                          const HetGateConfig& cfg);

} // namespace tan
