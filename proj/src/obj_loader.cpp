#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "meshfield/errors.hpp"
#include "meshfield/image.hpp"
#include "meshfield/mesh.hpp"

namespace meshfield {

namespace {

namespace fs = std::filesystem;

struct ObjIndex {
  // 0 means "not given" for normal/uv slots.
  long v = 0, t = 0, n = 0;
};

// Parses one "v[/vt[/vn]]" corner reference.
ObjIndex parse_corner(const std::string& token, int line_no) {
  ObjIndex idx;
  long* slots[3] = {&idx.v, &idx.t, &idx.n};
  std::size_t pos = 0;
  for (int slot = 0; slot < 3; ++slot) {
    std::size_t next = token.find('/', pos);
    std::string part = token.substr(pos, next == std::string::npos ? next : next - pos);
    if (!part.empty()) {
      char* end = nullptr;
      long value = std::strtol(part.c_str(), &end, 10);
      if (end == part.c_str() || *end != '\0' || value == 0)
        throw ParseError("malformed face record at line " + std::to_string(line_no));
      *slots[slot] = value;
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (idx.v == 0) throw ParseError("malformed face record at line " + std::to_string(line_no));
  return idx;
}

// OBJ indices are 1-based; negative values count back from the current end.
uint32_t resolve_index(long raw, std::size_t count, int line_no) {
  long resolved = raw > 0 ? raw - 1 : static_cast<long>(count) + raw;
  if (resolved < 0 || resolved >= static_cast<long>(count))
    throw ParseError("index out of range at line " + std::to_string(line_no));
  return static_cast<uint32_t>(resolved);
}

struct MtlMaterial {
  Rgb kd{0.8, 0.8, 0.8};
  std::string map_kd;
};

std::map<std::string, MtlMaterial> load_mtl(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open MTL file: " + path.string());
  std::map<std::string, MtlMaterial> materials;
  std::string line, current;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "newmtl") {
      ss >> current;
      materials[current] = MtlMaterial{};
    } else if (tag == "Kd" && !current.empty()) {
      ss >> materials[current].kd.x >> materials[current].kd.y >> materials[current].kd.z;
    } else if (tag == "map_Kd" && !current.empty()) {
      std::string rest;
      std::getline(ss, rest);
      std::size_t b = rest.find_first_not_of(" \t");
      std::size_t e = rest.find_last_not_of(" \t\r");
      if (b != std::string::npos) materials[current].map_kd = rest.substr(b, e - b + 1);
    }
  }
  return materials;
}

TextureImage load_texture(const fs::path& path) {
  if (!fs::exists(path)) throw IoError("texture not found: " + path.string());
  std::string ext = path.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(c));
  if (ext != ".png" && ext != ".ppm")
    throw ParseError("unsupported texture format: " + path.string());
  ImageBuffer img = read_image(path.string());
  TextureImage tex;
  tex.width = img.width;
  tex.height = img.height;
  tex.texels = std::move(img.pixels);
  return tex;
}

// Area-weighted face-normal accumulation for meshes without vn records.
std::vector<Vec3> compute_vertex_normals(const std::vector<Vec3>& vertices,
                                         const std::vector<Face>& faces) {
  std::vector<Vec3> acc(vertices.size(), Vec3{0, 0, 0});
  for (const Face& f : faces) {
    const Vec3& a = vertices[f.v[0]];
    Vec3 fn = cross(vertices[f.v[1]] - a, vertices[f.v[2]] - a);  // |fn| = 2*area
    for (int k = 0; k < 3; ++k) acc[f.v[k]] += fn;
  }
  for (Vec3& n : acc) {
    double len = length(n);
    n = len > 1e-20 ? n / len : Vec3{0, 0, 1};
  }
  return acc;
}

}  // namespace

TriangleMesh load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open OBJ file: " + path);
  const fs::path base_dir = fs::path(path).parent_path();

  TriangleMesh mesh;
  std::vector<Uv> uvs;
  std::vector<Vec3> file_normals;
  struct RawFace {
    std::array<ObjIndex, 3> corner;
    int line_no;
  };
  std::vector<RawFace> raw_faces;
  std::map<std::string, MtlMaterial> materials;
  std::string active_material;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "v") {
      Vec3 v;
      if (!(ss >> v.x >> v.y >> v.z)) throw ParseError("malformed vertex at line " + std::to_string(line_no));
      mesh.vertices.push_back(v);
    } else if (tag == "vn") {
      Vec3 n;
      if (!(ss >> n.x >> n.y >> n.z)) throw ParseError("malformed normal at line " + std::to_string(line_no));
      double len = length(n);
      file_normals.push_back(len > 1e-20 ? n / len : Vec3{0, 0, 1});
    } else if (tag == "vt") {
      Uv t;
      if (!(ss >> t.u >> t.v)) throw ParseError("malformed uv at line " + std::to_string(line_no));
      uvs.push_back(t);
    } else if (tag == "f") {
      std::vector<ObjIndex> corners;
      std::string token;
      while (ss >> token) corners.push_back(parse_corner(token, line_no));
      if (corners.size() < 3) throw ParseError("face with fewer than 3 vertices at line " + std::to_string(line_no));
      // Fan-triangulate; index resolution happens now so relative indices see
      // the counts at this point in the file.
      for (std::size_t k = 1; k + 1 < corners.size(); ++k)
        raw_faces.push_back({{corners[0], corners[k], corners[k + 1]}, line_no});
    } else if (tag == "mtllib") {
      std::string name;
      ss >> name;
      auto loaded = load_mtl(base_dir / name);
      materials.insert(loaded.begin(), loaded.end());
    } else if (tag == "usemtl") {
      std::string name;
      ss >> name;
      if (active_material.empty()) active_material = name;
    }
    // Everything else (o, g, s, comments) is ignored.
  }
  if (mesh.vertices.empty()) throw ParseError("OBJ contains no vertices: " + path);

  // Resolve indices against final counts. OBJ relative indices refer to the
  // running count at the face line; for the common case (all v before f)
  // final counts are identical, and meshes that interleave still resolve
  // consistently because counts only grow.
  const bool have_uvs = !uvs.empty();
  const bool have_normals = !file_normals.empty();
  std::vector<Vec3> computed;
  for (const RawFace& rf : raw_faces) {
    Face f{};
    for (int k = 0; k < 3; ++k) {
      const ObjIndex& c = rf.corner[k];
      f.v[k] = resolve_index(c.v, mesh.vertices.size(), rf.line_no);
      f.t[k] = (have_uvs && c.t != 0) ? resolve_index(c.t, uvs.size(), rf.line_no) : 0;
      f.n[k] = (have_normals && c.n != 0) ? resolve_index(c.n, file_normals.size(), rf.line_no) : f.v[k];
    }
    mesh.faces.push_back(f);
  }
  if (mesh.faces.empty()) throw ParseError("OBJ contains no faces: " + path);

  mesh.uvs = have_uvs ? std::move(uvs) : std::vector<Uv>{{0.0, 0.0}};
  if (have_normals) {
    mesh.normals = std::move(file_normals);
    // Faces that omitted the normal slot fell back to vertex-indexed
    // normals, which only works when the lists line up; otherwise recompute.
    bool in_range = true;
    for (const Face& f : mesh.faces)
      for (int k = 0; k < 3; ++k) in_range &= f.n[k] < mesh.normals.size();
    if (!in_range) {
      mesh.normals = compute_vertex_normals(mesh.vertices, mesh.faces);
      for (Face& f : mesh.faces) f.n = f.v;
    }
  } else {
    mesh.normals = compute_vertex_normals(mesh.vertices, mesh.faces);
    for (Face& f : mesh.faces) f.n = f.v;
  }

  // Material: the first usemtl wins; one material per mesh.
  MtlMaterial mat;
  if (!active_material.empty()) {
    auto it = materials.find(active_material);
    if (it != materials.end()) mat = it->second;
  } else if (!materials.empty()) {
    mat = materials.begin()->second;
  }
  if (!mat.map_kd.empty() && have_uvs) {
    mesh.material = MaterialSpec::textured(load_texture(base_dir / mat.map_kd));
  } else if (!mat.map_kd.empty()) {
    // Texture referenced but the mesh has no UVs; still verify the file so a
    // broken asset fails loudly, then fall back to the diffuse constant.
    load_texture(base_dir / mat.map_kd);
    mesh.material = MaterialSpec::constant(mat.kd);
  } else {
    mesh.material = MaterialSpec::constant(mat.kd);
  }

  validate_mesh(mesh);
  return mesh;
}

}  // namespace meshfield
