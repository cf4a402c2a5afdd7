#pragma once

#include <array>
#include <string>
#include <vector>

#include "meshfield/vec3.hpp"

namespace meshfield {

// Pinhole camera. rotation is camera-to-world, row-major, orthonormal;
// camera space is x-right, y-up, looking along -z.
struct Camera {
  Vec3 position;
  std::array<double, 9> rotation{1, 0, 0, 0, 1, 0, 0, 0, 1};
  double fov_y_deg = 60.0;
  int width = 256;
  int height = 256;

  Vec3 rotate(const Vec3& v) const {
    const auto& r = rotation;
    return {r[0] * v.x + r[1] * v.y + r[2] * v.z,
            r[3] * v.x + r[4] * v.y + r[5] * v.z,
            r[6] * v.x + r[7] * v.y + r[8] * v.z};
  }
  Vec3 forward() const { return -Vec3{rotation[2], rotation[5], rotation[8]}; }
};

// Camera at `position` looking at `target`. up defaults to +y and is nudged
// to +z when the view direction is (anti)parallel to it.
Camera make_lookat_camera(const Vec3& position, const Vec3& target, double fov_y_deg,
                          int width, int height, Vec3 up = {0.0, 1.0, 0.0});

// Ray through the center of pixel (px, py); direction unit length.
Ray pixel_ray(const Camera& camera, int px, int py);

// JSON round-trip: {position, rotation (9 row-major), fov_y_deg, width, height}.
std::string camera_to_json(const Camera& camera);
Camera camera_from_json(const std::string& json_text);

void save_cameras(const std::vector<Camera>& cameras, const std::string& path);
std::vector<Camera> load_cameras(const std::string& path);

}  // namespace meshfield
