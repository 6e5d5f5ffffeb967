#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mbes {

using Point3 = std::array<double, 3>;

// Gridded multibeam survey. Soundings are indexed by (ping, beam) and stored
// row-major: index = ping * beams + beam. Raw and clean clouds are
// index-aligned; X and Y are always identical between them (only z moves).
struct Survey {
    std::size_t pings = 0;
    std::size_t beams = 0;
    std::vector<Point3> xyz_raw;            // pings*beams
    std::vector<Point3> xyz_clean;          // empty when unavailable
    std::vector<std::uint8_t> outlier_mask; // pings*beams, 1 = outlier
    std::map<std::string, std::string> meta;
    std::optional<double> z_scale;

    bool has_clean() const { return !xyz_clean.empty(); }
    std::size_t point_count() const { return pings * beams; }
    std::size_t index(std::size_t ping, std::size_t beam) const { return ping * beams + beam; }
};

// Window of consecutive pings cut from a survey; point order stays row-major
// (ping, then beam). labels/clean_xyz are carried only when the parent survey
// had them.
struct Patch {
    std::size_t pings = 0;
    std::size_t beams = 0;
    std::vector<Point3> xyz;
    std::vector<std::uint8_t> labels;   // optional, 1 = outlier
    std::vector<Point3> clean_xyz;      // optional
    std::size_t patch_id = 0;
    std::size_t ping_offset = 0;

    bool has_labels() const { return !labels.empty(); }
    bool has_clean() const { return !clean_xyz.empty(); }
    std::size_t size() const { return xyz.size(); }
};

// Invertible split XY/Z normalization of one patch: XY demeaned by the patch
// centroid and divided by the max radius (unit disk), Z demeaned by the patch
// mean and divided by the dataset-global z scale.
struct NormTransform {
    std::array<double, 2> xy_center{0.0, 0.0};
    double xy_scale = 1.0;
    double z_mean = 0.0;
    double z_scale = 1.0;
};

} // namespace mbes
