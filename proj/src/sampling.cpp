#include "meshfield/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "meshfield/errors.hpp"

namespace meshfield {

namespace {

// Restores strict ordering after sorting/merging: equal or out-of-order
// entries are nudged forward by 1e-9. Entries are never removed.
void strictify(std::vector<double>& ts) {
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (ts[i] <= ts[i - 1]) ts[i] = ts[i - 1] + 1e-9;
}

}  // namespace

std::vector<double> stratified_samples(double t_near, double t_far, int n, RngState& rng) {
  if (!(t_near < t_far) || n < 1) throw ConfigError("stratified_samples: bad interval or count");
  const double w = (t_far - t_near) / n;
  std::vector<double> ts(n);
  for (int i = 0; i < n; ++i) ts[i] = t_near + (i + rng.next_double()) * w;
  strictify(ts);
  return ts;
}

std::vector<double> band_samples(double t_hit, double h, int m, double t_near, double t_far,
                                 RngState& rng) {
  if (m < 1 || !(h > 0.0)) throw ConfigError("band_samples: bad count or thickness");
  std::vector<double> ts(m);
  const double hi_cap = std::nextafter(t_far, 0.0);
  for (int i = 0; i < m; ++i) {
    double t = rng.next_double(t_hit - h, t_hit + h);
    t = std::fmax(t, t_near);
    t = std::fmin(t, hi_cap);
    ts[i] = t;
  }
  std::sort(ts.begin(), ts.end());
  return ts;
}

std::vector<double> sample_ray_train(const std::optional<double>& t_hit, double h,
                                     const SamplingConfig& cfg, RngState& rng) {
  const int total = cfg.n_stratified + cfg.n_band;
  std::vector<double> ts;
  if (t_hit) {
    RngState strat_rng = rng.derive(rng_stream::kStratified);
    RngState band_rng = rng.derive(rng_stream::kBand);
    ts = stratified_samples(cfg.t_near, cfg.t_far, cfg.n_stratified, strat_rng);
    std::vector<double> band = band_samples(*t_hit, h, cfg.n_band, cfg.t_near, cfg.t_far, band_rng);
    std::vector<double> merged(total);
    std::merge(ts.begin(), ts.end(), band.begin(), band.end(), merged.begin());
    ts = std::move(merged);
  } else {
    RngState miss_rng = rng.derive(rng_stream::kMissRay);
    ts.resize(total);
    for (int i = 0; i < total; ++i) ts[i] = miss_rng.next_double(cfg.t_near, cfg.t_far);
    std::sort(ts.begin(), ts.end());
  }
  strictify(ts);
  return ts;
}

std::vector<double> uniform_inference_samples(double t_near, double t_far, int n) {
  if (n < 2 || !(t_near < t_far)) throw ConfigError("uniform_inference_samples: bad input");
  const double spacing = (t_far - t_near) / n;
  std::vector<double> ts(n);
  for (int i = 0; i < n; ++i) ts[i] = t_near + i * spacing;
  return ts;
}

std::optional<std::pair<double, double>> scene_cube_interval(const Ray& ray) {
  Aabb cube{{-1, -1, -1}, {1, 1, 1}};
  double t0, t1;
  if (!intersect_aabb(cube, ray, 0.0, 1e30, t0, t1)) return std::nullopt;
  t0 = std::fmax(t0, 1e-4);
  if (!(t0 < t1)) return std::nullopt;
  return std::make_pair(t0, t1);
}

std::vector<Camera> cameras_on_sphere(int n, double radius, const Vec3& look_at,
                                      double fov_deg, int width, int height, uint64_t seed) {
  if (n < 1 || !(radius > 0.0)) throw ConfigError("cameras_on_sphere: bad count or radius");
  RngState rng(seed, rng_stream::kCameraPhase);
  const double phase = rng.next_double() * 2.0 * M_PI;
  const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
  std::vector<Camera> cams;
  cams.reserve(n);
  for (int i = 0; i < n; ++i) {
    // Fibonacci lattice, y as the polar axis.
    double y = n == 1 ? 0.0 : 1.0 - 2.0 * (i + 0.5) / n;
    double r_xy = std::sqrt(std::fmax(0.0, 1.0 - y * y));
    double theta = golden_angle * i + phase;
    Vec3 dir{r_xy * std::cos(theta), y, r_xy * std::sin(theta)};
    cams.push_back(make_lookat_camera(look_at + radius * dir, look_at, fov_deg, width, height));
  }
  return cams;
}

}  // namespace meshfield
