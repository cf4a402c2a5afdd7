#pragma once

#include "meshfield/vec3.hpp"

namespace meshfield {

// Point light plus Phong coefficients. Defaults follow the ABO setup:
// light at (0,1,0), ambient 0.8, diffuse 0.3, specular 0.2.
struct LightConfig {
  Vec3 light_position{0.0, 1.0, 0.0};
  Rgb ambient{0.8, 0.8, 0.8};
  Rgb diffuse{0.3, 0.3, 0.3};
  Rgb specular{0.2, 0.2, 0.2};
  double shininess = 32.0;
};

// Classic Phong (reflection-vector specular), clamped to [0,1]:
//   base*ambient + base*diffuse*max(0,n.l) + specular*max(0,r.v)^shininess
// Diffuse and specular vanish when the light is behind the surface.
// view_dir points from the surface toward the eye; normal and view_dir unit.
Rgb phong_color(const Rgb& base, const Vec3& position, const Vec3& normal,
                const Vec3& view_dir, const LightConfig& light);

// Same without the final clamp; used by monotonicity checks.
Rgb phong_color_unclamped(const Rgb& base, const Vec3& position, const Vec3& normal,
                          const Vec3& view_dir, const LightConfig& light);

}  // namespace meshfield
