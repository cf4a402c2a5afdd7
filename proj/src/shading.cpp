#include "meshfield/shading.hpp"

#include <cmath>

namespace meshfield {

Rgb phong_color_unclamped(const Rgb& base, const Vec3& position, const Vec3& normal,
                          const Vec3& view_dir, const LightConfig& light) {
  Rgb color = mul(base, light.ambient);

  Vec3 to_light = light.light_position - position;
  double dist = length(to_light);
  // Degenerate sample exactly at the light: treat the light direction as the
  // normal so the point is simply fully lit.
  Vec3 l = dist > 1e-9 ? to_light / dist : normal;

  double n_dot_l = dot(normal, l);
  if (n_dot_l > 0.0) {
    color += n_dot_l * mul(base, light.diffuse);
    // r = reflection of the incident direction -l about n.
    Vec3 r = 2.0 * n_dot_l * normal - l;
    double r_dot_v = dot(r, view_dir);
    if (r_dot_v > 0.0) color += std::pow(r_dot_v, light.shininess) * light.specular;
  }
  return color;
}

Rgb phong_color(const Rgb& base, const Vec3& position, const Vec3& normal,
                const Vec3& view_dir, const LightConfig& light) {
  return clamp01(phong_color_unclamped(base, position, normal, view_dir, light));
}

}  // namespace meshfield
