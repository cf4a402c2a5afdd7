#include "meshfield/mesh.hpp"

#include <cmath>
#include <map>

#include "meshfield/errors.hpp"

namespace meshfield {

Rgb sample_texture(const TextureImage& texture, double u, double v) {
  // Repeat wrap, then bilinear over the four nearest texel centers.
  u -= std::floor(u);
  v -= std::floor(v);
  const int w = texture.width, h = texture.height;
  double fx = u * w - 0.5;
  double fy = v * h - 0.5;
  int x0 = static_cast<int>(std::floor(fx));
  int y0 = static_cast<int>(std::floor(fy));
  double ax = fx - x0;
  double ay = fy - y0;
  auto wrap = [](int i, int n) {
    i %= n;
    return i < 0 ? i + n : i;
  };
  int x1 = wrap(x0 + 1, w), y1 = wrap(y0 + 1, h);
  x0 = wrap(x0, w);
  y0 = wrap(y0, h);
  Rgb c00 = texture.texel(x0, y0), c10 = texture.texel(x1, y0);
  Rgb c01 = texture.texel(x0, y1), c11 = texture.texel(x1, y1);
  Rgb top = (1.0 - ax) * c00 + ax * c10;
  Rgb bot = (1.0 - ax) * c01 + ax * c11;
  return (1.0 - ay) * top + ay * bot;
}

Rgb material_color(const MaterialSpec& material, const Uv& uv) {
  if (material.use_texture) return sample_texture(material.base_texture, uv.u, uv.v);
  return material.constant_color;
}

TriangleMesh normalize_mesh(const TriangleMesh& mesh) {
  Aabb box = mesh.bounds();
  Vec3 ext = box.extent();
  double longest = std::fmax(ext.x, std::fmax(ext.y, ext.z));
  if (!(longest > 0.0)) throw ConfigError("normalize_mesh: degenerate extent");
  Vec3 center = box.center();
  double scale = 2.0 / longest;
  TriangleMesh out = mesh;
  for (Vec3& v : out.vertices) v = (v - center) * scale;
  return out;
}

void validate_mesh(const TriangleMesh& mesh) {
  if (mesh.faces.empty()) throw ConfigError("mesh has no faces");
  for (const Face& f : mesh.faces) {
    for (int k = 0; k < 3; ++k) {
      if (f.v[k] >= mesh.vertices.size()) throw ConfigError("face vertex index out of range");
      if (f.n[k] >= mesh.normals.size()) throw ConfigError("face normal index out of range");
      if (f.t[k] >= mesh.uvs.size()) throw ConfigError("face uv index out of range");
    }
  }
  for (const Vec3& n : mesh.normals) {
    if (std::fabs(length(n) - 1.0) > 1e-6) throw ConfigError("non-unit normal");
  }
  if (mesh.material.use_texture && !mesh.material.base_texture.valid())
    throw ConfigError("invalid texture");
}

TextureImage make_checker_texture(int n) {
  TextureImage tex;
  tex.width = tex.height = n;
  tex.texels.resize(static_cast<std::size_t>(n) * n * 3);
  const float a[3] = {0.90f, 0.85f, 0.75f};
  const float b[3] = {0.25f, 0.30f, 0.45f};
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      const float* c = ((x + y) & 1) ? b : a;
      std::size_t i = (static_cast<std::size_t>(y) * n + x) * 3;
      tex.texels[i] = c[0];
      tex.texels[i + 1] = c[1];
      tex.texels[i + 2] = c[2];
    }
  return tex;
}

namespace {

MaterialSpec make_test_material(const TestTexture& t) {
  if (t.checker_n >= 1) return MaterialSpec::textured(make_checker_texture(t.checker_n));
  return MaterialSpec::constant(t.color);
}

TriangleMesh make_cube(const TestTexture& texture) {
  TriangleMesh m;
  m.vertices = {{-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1},
                {-1, -1, 1},  {1, -1, 1},  {1, 1, 1},  {-1, 1, 1}};
  m.normals = {{0, 0, -1}, {0, 0, 1}, {-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}};
  m.uvs = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  // Quads (vertex ids, outward normal id), fan split into two triangles each.
  struct Quad {
    uint32_t a, b, c, d, n;
  };
  const Quad quads[6] = {
      {1, 0, 3, 2, 0},  // z = -1
      {4, 5, 6, 7, 1},  // z = +1
      {0, 4, 7, 3, 2},  // x = -1
      {5, 1, 2, 6, 3},  // x = +1
      {0, 1, 5, 4, 4},  // y = -1
      {7, 6, 2, 3, 5},  // y = +1
  };
  for (const Quad& q : quads) {
    m.faces.push_back({{q.a, q.b, q.c}, {q.n, q.n, q.n}, {0, 1, 2}});
    m.faces.push_back({{q.a, q.c, q.d}, {q.n, q.n, q.n}, {0, 2, 3}});
  }
  m.material = make_test_material(texture);
  return m;
}

// Spherical UV for a unit-sphere point.
Uv sphere_uv(const Vec3& p) {
  double u = 0.5 + std::atan2(p.z, p.x) / (2.0 * M_PI);
  double v = std::acos(std::fmin(1.0, std::fmax(-1.0, p.y))) / M_PI;
  return {u, v};
}

TriangleMesh make_icosphere(int subdiv, const TestTexture& texture) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {{-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
                             {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
                             {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1}};
  for (Vec3& v : verts) v = normalized(v);
  std::vector<std::array<uint32_t, 3>> tris = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int s = 0; s < subdiv; ++s) {
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> midpoint;
    auto mid = [&](uint32_t a, uint32_t b) -> uint32_t {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      uint32_t idx = static_cast<uint32_t>(verts.size());
      verts.push_back(normalized(0.5 * (verts[a] + verts[b])));
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<uint32_t, 3>> next;
    next.reserve(tris.size() * 4);
    for (const auto& t : tris) {
      uint32_t ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({t[1], bc, ab});
      next.push_back({t[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }

  TriangleMesh m;
  m.vertices = verts;
  m.normals = verts;  // unit sphere: normal == position
  m.uvs.reserve(verts.size());
  for (const Vec3& v : verts) m.uvs.push_back(sphere_uv(v));
  m.faces.reserve(tris.size());
  for (const auto& t : tris)
    m.faces.push_back({{t[0], t[1], t[2]}, {t[0], t[1], t[2]}, {t[0], t[1], t[2]}});
  m.material = make_test_material(texture);
  return m;
}

TriangleMesh make_two_planes(const TestTexture& texture) {
  TriangleMesh m;
  // Front plane at z=0, back plane at z=0.5, both spanning [-1,1]^2.
  m.vertices = {{-1, -1, 0},   {1, -1, 0},   {1, 1, 0},   {-1, 1, 0},
                {-1, -1, 0.5}, {1, -1, 0.5}, {1, 1, 0.5}, {-1, 1, 0.5}};
  m.normals = {{0, 0, -1}, {0, 0, -1}};
  // Constant UV per plane: with a 2x1 texture the planes get two solid colors.
  m.uvs = {{0.25, 0.5}, {0.75, 0.5}};
  m.faces = {{{0, 1, 2}, {0, 0, 0}, {0, 0, 0}}, {{0, 2, 3}, {0, 0, 0}, {0, 0, 0}},
             {{4, 5, 6}, {1, 1, 1}, {1, 1, 1}}, {{4, 6, 7}, {1, 1, 1}, {1, 1, 1}}};
  if (texture.checker_n >= 1) {
    TextureImage tex;
    tex.width = 2;
    tex.height = 1;
    tex.texels = {0.85f, 0.35f, 0.25f, 0.25f, 0.45f, 0.85f};
    m.material = MaterialSpec::textured(std::move(tex));
  } else {
    m.material = MaterialSpec::constant(texture.color);
  }
  return m;
}

}  // namespace

TriangleMesh make_test_mesh(TestMeshKind kind, int subdiv, const TestTexture& texture) {
  switch (kind) {
    case TestMeshKind::Cube:
      return make_cube(texture);
    case TestMeshKind::Icosphere:
      return make_icosphere(subdiv, texture);
    case TestMeshKind::TwoPlanes:
      return make_two_planes(texture);
  }
  throw ConfigError("unknown test mesh kind");
}

}  // namespace meshfield
