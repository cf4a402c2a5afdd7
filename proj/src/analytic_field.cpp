#include "meshfield/analytic_field.hpp"

#include <cmath>
#include <limits>

namespace meshfield {

double alpha_at(double t, const std::optional<double>& t_hit, double h) {
  if (!t_hit) return 0.0;
  return std::fabs(t - *t_hit) < h ? 1.0 : 0.0;
}

Rgb shade_hit(const SceneGeometry& scene, const Ray& ray, const HitRecord& hit) {
  Rgb base = material_color(scene.mesh->material, hit.uv);
  return phong_color(base, hit.position, hit.normal, -ray.direction, scene.light);
}

std::vector<GroundTruthSample> ray_ground_truth(const SceneGeometry& scene, const Ray& ray,
                                                std::span<const double> ts,
                                                const FieldConfig& config, double last_delta) {
  auto hit = scene.bvh->intersect_first(*scene.mesh, ray, kRayEpsilon,
                                        std::numeric_limits<double>::infinity());
  std::optional<double> t_hit;
  Rgb color = config.background;
  if (hit) {
    t_hit = hit->t_hit;
    color = shade_hit(scene, ray, *hit);
  }

  std::vector<GroundTruthSample> samples(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    GroundTruthSample& s = samples[i];
    s.t = ts[i];
    s.delta = i + 1 < ts.size() ? ts[i + 1] - ts[i] : last_delta;
    s.alpha = alpha_at(ts[i], t_hit, config.half_thickness);
    s.in_band = s.alpha == 1.0;
    s.color = color;
  }
  return samples;
}

Rgb analytic_integral_color(std::span<const GroundTruthSample> samples, const Rgb& background) {
  Rgb out{0.0, 0.0, 0.0};
  double transmittance = 1.0;
  for (const GroundTruthSample& s : samples) {
    out += (transmittance * s.alpha) * s.color;
    transmittance *= 1.0 - s.alpha;
    if (transmittance == 0.0) break;
  }
  out += transmittance * background;
  return out;
}

}  // namespace meshfield
