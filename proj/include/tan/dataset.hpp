#pragma once

#include "tan/geometry.hpp"
#include "tan/image.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tan {

struct VideoSequence {
    std::vector<Frame> frames;
    std::vector<int> frame_ids; // monotone increasing
    std::optional<double> fps_hint;
};

enum class PlaneClass { A2C = 0, A4C = 1 };

std::string plane_to_string(PlaneClass p);
PlaneClass plane_from_string(const std::string& s);

struct FrameAnnotation {
    std::optional<Mask> mask;
    std::optional<LandmarkTriple> landmarks;
};

struct AnnotationSet {
    std::string sequence_name;
    std::optional<PlaneClass> plane;
    std::map<int, FrameAnnotation> frames; // keyed by frame id
};

// Reads frame_%05d.pgm / frame_%05d.png files from `dir`, sorted by index.
// All frames must share one resolution; violations name the offending file.
VideoSequence load_sequence(const std::filesystem::path& dir);

void save_sequence(const VideoSequence& seq, const std::filesystem::path& dir);

// Annotation JSON: {"sequence": str, "plane": "A2C"|"A4C",
//   "frames": [{"id": int, "landmarks": {"apex":[x,y], "annulus_left":[x,y],
//   "annulus_right":[x,y]}, "mask": "relative/path.pgm"}]}
// Mask paths are resolved relative to the JSON file. Collinear landmark
// triples are rejected.
AnnotationSet load_annotations(const std::filesystem::path& path);

// Writes the JSON plus one PGM per annotated mask under masks/ next to it.
void save_annotations(const AnnotationSet& ann, const std::filesystem::path& path);

} // namespace tan
