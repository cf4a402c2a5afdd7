#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "meshfield/vec3.hpp"

namespace meshfield {

// Row-major RGB texture, channels in [0,1].
struct TextureImage {
  int width = 0;
  int height = 0;
  std::vector<float> texels;  // width*height*3

  bool valid() const {
    return width >= 1 && height >= 1 &&
           texels.size() == static_cast<std::size_t>(width) * height * 3;
  }
  Rgb texel(int x, int y) const {
    std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    return {texels[i], texels[i + 1], texels[i + 2]};
  }
};

// One material per mesh: a base texture, or a constant color when the mesh
// carries no UVs / no map_Kd.
struct MaterialSpec {
  TextureImage base_texture;
  Rgb constant_color{0.8, 0.8, 0.8};
  bool use_texture = false;

  static MaterialSpec constant(const Rgb& rgb) {
    MaterialSpec m;
    m.constant_color = rgb;
    return m;
  }
  static MaterialSpec textured(TextureImage tex) {
    MaterialSpec m;
    m.base_texture = std::move(tex);
    m.use_texture = true;
    return m;
  }
};

struct Uv {
  double u = 0.0, v = 0.0;
};

// Indexed triangle with separate vertex/normal/uv index triples,
// mirroring the OBJ face record.
struct Face {
  std::array<uint32_t, 3> v;
  std::array<uint32_t, 3> n;
  std::array<uint32_t, 3> t;
};

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<Vec3> normals;  // unit length
  std::vector<Uv> uvs;
  std::vector<Face> faces;
  MaterialSpec material;

  Aabb bounds() const {
    Aabb b;
    for (const Vec3& v : vertices) b.grow(v);
    return b;
  }
};

// Repeat-wrapped bilinear texture lookup.
Rgb sample_texture(const TextureImage& texture, double u, double v);

// Base color of the material at uv.
Rgb material_color(const MaterialSpec& material, const Uv& uv);

// Wavefront OBJ (+ optional MTL / PNG or PPM texture). Quads and n-gons are
// fan-triangulated; absent normals are area-weighted face-normal averages;
// absent UVs default to (0,0) with a constant-color material.
TriangleMesh load_mesh(const std::string& path);

// Uniformly rescales and recenters so the bounding box is centered at the
// origin and the largest axis spans exactly [-1,1].
TriangleMesh normalize_mesh(const TriangleMesh& mesh);

// Throws ConfigError if an invariant is broken (bad index, non-unit normal,
// no faces, bad texture).
void validate_mesh(const TriangleMesh& mesh);

enum class TestMeshKind { Cube, Icosphere, TwoPlanes };

struct TestTexture {
  // n >= 1 -> n x n checkerboard; n == 0 -> constant color.
  int checker_n = 0;
  Rgb color{0.8, 0.8, 0.8};

  static TestTexture checker(int n) { return {n, {}}; }
  static TestTexture constant(const Rgb& rgb) { return {0, rgb}; }
};

// Procedural assets for tests and built-in scenes; all fit [-1,1]^3.
//   cube       12 triangles, 8 vertices
//   icosphere  20 * 4^subdiv triangles, unit radius
//   two_planes two parallel quads at z=0 and z=0.5
TriangleMesh make_test_mesh(TestMeshKind kind, int subdiv = 0,
                            const TestTexture& texture = TestTexture::checker(8));

TextureImage make_checker_texture(int n);

}  // namespace meshfield
