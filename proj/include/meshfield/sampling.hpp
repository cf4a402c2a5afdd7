#pragma once

#include <optional>
#include <vector>

#include "meshfield/camera.hpp"
#include "meshfield/rng.hpp"
#include "meshfield/vec3.hpp"

namespace meshfield {

// Per-ray sample counts and interval. Train defaults: 512 stratified plus
// 512 band samples; inference uses 800 uniform samples.
struct SamplingConfig {
  int n_stratified = 512;
  int n_band = 512;
  int n_inference = 800;
  double t_near = 1e-4;
  double t_far = 4.0;
  uint64_t seed = 0;
};

// One uniform draw per equal-width bin of [t_near, t_far); strictly
// increasing.
std::vector<double> stratified_samples(double t_near, double t_far, int n, RngState& rng);

// m uniform draws in [t_hit - h, t_hit + h], clipped to [t_near, t_far) when
// the band crosses the interval ends, sorted. Strictness is restored by the
// caller's merge step.
std::vector<double> band_samples(double t_hit, double h, int m, double t_near, double t_far,
                                 RngState& rng);

// Hit rays: stratified + band samples merged into one strictly increasing
// list (duplicates nudged by +1e-9, never dropped, so the count is exactly
// n_stratified + n_band). Miss rays: that many uniform draws.
std::vector<double> sample_ray_train(const std::optional<double>& t_hit, double h,
                                     const SamplingConfig& cfg, RngState& rng);

// n evenly spaced values: first = t_near, spacing (t_far - t_near)/n,
// last < t_far.
std::vector<double> uniform_inference_samples(double t_near, double t_far, int n);

// Entry/exit of the ray with the [-1,1]^3 scene cube, entry clamped to
// >= 1e-4. Returns nullopt when the ray misses the cube.
std::optional<std::pair<double, double>> scene_cube_interval(const Ray& ray);

// n cameras on a Fibonacci lattice sphere around look_at, all looking at
// look_at. The lattice phase derives from seed, so different seeds give
// disjoint view sets.
std::vector<Camera> cameras_on_sphere(int n, double radius, const Vec3& look_at,
                                      double fov_deg, int width, int height, uint64_t seed);

}  // namespace meshfield
