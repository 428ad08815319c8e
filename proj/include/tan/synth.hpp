#pragma once

#include "tan/contour.hpp"
#include "tan/dataset.hpp"
#include "tan/geometry.hpp"
#include "tan/image.hpp"
#include "tan/rng.hpp"

#include <cstdint>
#include <tuple>

namespace tan {

// Echo-like sequence generator: a tapered-ellipse cavity with a flat base
// (the two base corners are the annulus landmarks, the long-axis tip the
// apex), a bright myocardial band, darker decoy chambers below and left,
// multiplicative low-passed speckle, and optional boundary dropout arcs.
struct SynthConfig {
    int width = 384;
    int height = 384;
    int frames_per_cycle = 24;
    int cycles = 1;
    double half_axis_short = 55.0; // px, end-diastole
    double half_axis_long = 95.0;  // px, end-diastole
    double contraction_amplitude = 0.35; // in [0,1)
    double orientation_deg = -25.0; // long-axis tilt, apex toward top-right
    Vec2 center_offset{0.10, -0.06}; // cavity center relative to frame center, fraction of dims
    double speckle_sigma = 0.18;
    double dropout_probability = 0.0; // per frame
    double dropout_arc_deg = 40.0;
    bool valve_flap = false;
    PlaneClass plane = PlaneClass::A4C;
    std::uint64_t seed = 1;
};

struct SynthResult {
    VideoSequence sequence;
    AnnotationSet annotations;
};

SynthResult generate_sequence(const SynthConfig& cfg);

// Ground-truth cavity boundary of one frame, before rasterization.
ContourPolyline synth_cavity_contour(const SynthConfig& cfg, int frame_index);

struct AugConfig {
    double rotation_min_deg = -5.0;
    double rotation_max_deg = 5.0;
    double scale_min = 0.8;
    double scale_max = 1.2;
    double max_translation = 14.0; // px, any direction
    std::uint64_t seed = 1;
};

struct AugSample {
    double rotation_deg = 0.0;
    double scale = 1.0;
    double tx = 0.0;
    double ty = 0.0;
};

AugSample sample_augmentation(const AugConfig& cfg, Rng& rng);
AffineTransform augmentation_transform(const AugSample& s, int width, int height);

// One random affine within the configured ranges, applied consistently to
// the frame (bilinear), mask (nearest) and landmarks (point map).
std::tuple<Frame, Mask, LandmarkTriple> augment(const Frame& frame, const Mask& mask,
                                                const LandmarkTriple& lmk,
                                                const AugConfig& cfg);

} // namespace tan
