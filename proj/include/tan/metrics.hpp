#pragma once

#include "tan/contour.hpp"
#include "tan/geometry.hpp"
#include "tan/image.hpp"

#include <vector>

namespace tan {

// 2|A∩B| / (|A|+|B|); two empty masks count as perfect agreement.
double dice(const Mask& a, const Mask& b);

// Symmetric mean surface distance: densified points of one contour against
// the other's segments, averaged equally over both directions.
double asd(const ContourPolyline& a, const ContourPolyline& b);

// Mean consecutive-frame ASD per video, averaged over videos. Videos with
// fewer than 2 frames are excluded (counted in *excluded when given).
double smoothness_index(const std::vector<std::vector<ContourPolyline>>& videos,
                        int* excluded = nullptr);

// Mean over the three landmarks of exp(-d^2 / (2 s^2 k^2)) with
// s = sqrt(object_area) and k = 0.1.
double oks(const LandmarkTriple& pred, const LandmarkTriple& gt, double object_area);

double accuracy(const std::vector<int>& pred, const std::vector<int>& gt);

enum class WorstDirection { lower_is_worse, higher_is_worse };

// Mean over the ceil(fraction*N) worst values; ties keep input order.
double worst_fraction(const std::vector<double>& values, double fraction,
                      WorstDirection direction);

struct SequenceEval {
    std::vector<int> frame_ids;
    std::vector<double> dice_per_frame;
    std::vector<double> asd_per_frame; // px
    std::vector<double> oks_per_frame;
    double si = 0.0;
    double plane_accuracy = 0.0;
    double dice_mean = 0.0, dice_worst10 = 0.0;
    double asd_mean = 0.0, asd_worst10 = 0.0;
    double oks_mean = 0.0;
    int evaluated_frames = 0;
    int total_result_frames = 0;
};

} // namespace tan
