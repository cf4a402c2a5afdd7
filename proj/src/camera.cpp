#include "meshfield/camera.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "meshfield/errors.hpp"

namespace meshfield {

using nlohmann::json;

Camera make_lookat_camera(const Vec3& position, const Vec3& target, double fov_y_deg,
                          int width, int height, Vec3 up) {
  Vec3 back = position - target;
  double len = length(back);
  if (len < 1e-12) throw ConfigError("camera position equals look-at target");
  back = back / len;
  if (std::fabs(dot(back, normalized(up))) > 1.0 - 1e-9) up = {0.0, 0.0, 1.0};
  Vec3 right = normalized(cross(up, back));
  Vec3 true_up = cross(back, right);

  Camera cam;
  cam.position = position;
  cam.rotation = {right.x, true_up.x, back.x,
                  right.y, true_up.y, back.y,
                  right.z, true_up.z, back.z};
  cam.fov_y_deg = fov_y_deg;
  cam.width = width;
  cam.height = height;
  return cam;
}

Ray pixel_ray(const Camera& camera, int px, int py) {
  const double f = 0.5 * camera.height / std::tan(0.5 * camera.fov_y_deg * M_PI / 180.0);
  const double x = (px + 0.5) - 0.5 * camera.width;
  const double y = 0.5 * camera.height - (py + 0.5);
  Vec3 dir_cam{x / f, y / f, -1.0};
  return {camera.position, normalized(camera.rotate(dir_cam))};
}

namespace {

json camera_json(const Camera& c) {
  return json{{"position", {c.position.x, c.position.y, c.position.z}},
              {"rotation", c.rotation},
              {"fov_y_deg", c.fov_y_deg},
              {"width", c.width},
              {"height", c.height}};
}

Camera camera_from(const json& j) {
  Camera c;
  auto p = j.at("position");
  c.position = {p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>()};
  auto r = j.at("rotation");
  if (r.size() != 9) throw ParseError("camera rotation must have 9 entries");
  for (int i = 0; i < 9; ++i) c.rotation[i] = r.at(i).get<double>();
  c.fov_y_deg = j.at("fov_y_deg").get<double>();
  c.width = j.at("width").get<int>();
  c.height = j.at("height").get<int>();
  return c;
}

}  // namespace

std::string camera_to_json(const Camera& camera) { return camera_json(camera).dump(2); }

Camera camera_from_json(const std::string& json_text) {
  return camera_from(json::parse(json_text));
}

void save_cameras(const std::vector<Camera>& cameras, const std::string& path) {
  json j;
  j["cameras"] = json::array();
  for (const Camera& c : cameras) j["cameras"].push_back(camera_json(c));
  std::ofstream out(path);
  if (!out) throw IoError("cannot write: " + path);
  out << j.dump(2) << "\n";
}

std::vector<Camera> load_cameras(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  json j = json::parse(in, nullptr, true, true);
  std::vector<Camera> cams;
  for (const auto& cj : j.at("cameras")) cams.push_back(camera_from(cj));
  return cams;
}

}  // namespace meshfield
