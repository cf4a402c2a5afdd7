#pragma once

#include <optional>
#include <span>
#include <vector>

#include "meshfield/bvh.hpp"
#include "meshfield/shading.hpp"

namespace meshfield {

// Ground-truth field parameters: half surface thickness h (alpha is 1 within
// |t - t_hit| < h along the ray) and the background color miss rays
// integrate to.
struct FieldConfig {
  double half_thickness = 0.005;
  Rgb background{0.0, 0.0, 0.0};
};

// One supervised sample along a ray. alpha is binary; color is constant per
// ray (the first hit's shaded color, or background on a miss).
struct GroundTruthSample {
  double t = 0.0;
  double delta = 0.0;
  double alpha = 0.0;
  Rgb color;
  bool in_band = false;
};

// Occupancy alpha along the ray: 1 iff a hit exists and |t - t_hit| < h.
double alpha_at(double t, const std::optional<double>& t_hit, double h);

// Immutable scene geometry + lighting bundle used by field evaluation.
struct SceneGeometry {
  const TriangleMesh* mesh = nullptr;
  const Bvh* bvh = nullptr;
  LightConfig light;
};

// Shaded color of the first hit (view direction = toward ray origin).
Rgb shade_hit(const SceneGeometry& scene, const Ray& ray, const HitRecord& hit);

// Labels every sample of the ray against the first hit in [t_min, inf).
// ts must be strictly increasing and >= 0. delta_i = t_{i+1} - t_i; the last
// sample gets last_delta (callers pass (t_far - t_near) / n).
std::vector<GroundTruthSample> ray_ground_truth(const SceneGeometry& scene, const Ray& ray,
                                                std::span<const double> ts,
                                                const FieldConfig& config, double last_delta);

// Alpha-composited color of the samples over the background. For a hit ray
// with at least one in-band sample this equals the first in-band color
// bit-exactly; for an all-empty ray it is exactly the background.
Rgb analytic_integral_color(std::span<const GroundTruthSample> samples, const Rgb& background);

}  // namespace meshfield
