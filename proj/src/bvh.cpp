#include "meshfield/bvh.hpp"

#include <algorithm>
#include <cmath>

#include "meshfield/errors.hpp"

namespace meshfield {

bool intersect_triangle(const TriangleMesh& mesh, uint32_t face_index, const Ray& ray,
                        double t_min, double t_max, double& t, double& b1, double& b2) {
  const Face& f = mesh.faces[face_index];
  const Vec3& p0 = mesh.vertices[f.v[0]];
  const Vec3 e1 = mesh.vertices[f.v[1]] - p0;
  const Vec3 e2 = mesh.vertices[f.v[2]] - p0;
  const Vec3 pvec = cross(ray.direction, e2);
  const double det = dot(e1, pvec);
  if (std::fabs(det) < 1e-14) return false;  // parallel or degenerate
  const double inv_det = 1.0 / det;
  const Vec3 tvec = ray.origin - p0;
  const double u = dot(tvec, pvec) * inv_det;
  if (u < 0.0 || u > 1.0) return false;
  const Vec3 qvec = cross(tvec, e1);
  const double v = dot(ray.direction, qvec) * inv_det;
  if (v < 0.0 || u + v > 1.0) return false;
  const double t_cand = dot(e2, qvec) * inv_det;
  if (t_cand < t_min || t_cand > t_max) return false;
  t = t_cand;
  b1 = u;
  b2 = v;
  return true;
}

HitRecord make_hit_record(const TriangleMesh& mesh, uint32_t face_index, const Ray& ray,
                          double t, double b1, double b2) {
  const Face& f = mesh.faces[face_index];
  const double b0 = 1.0 - b1 - b2;
  HitRecord hit;
  hit.t_hit = t;
  hit.position = ray_at(ray, t);
  hit.face_index = face_index;
  Vec3 n = b0 * mesh.normals[f.n[0]] + b1 * mesh.normals[f.n[1]] + b2 * mesh.normals[f.n[2]];
  double len = length(n);
  if (len < 1e-12) {
    // Opposed vertex normals cancelled; fall back to the geometric normal.
    n = cross(mesh.vertices[f.v[1]] - mesh.vertices[f.v[0]],
              mesh.vertices[f.v[2]] - mesh.vertices[f.v[0]]);
    len = length(n);
  }
  n = n / len;
  if (dot(n, ray.direction) > 0.0) n = -n;  // face the ray origin side
  hit.normal = n;
  const Uv& t0 = mesh.uvs[f.t[0]];
  const Uv& t1 = mesh.uvs[f.t[1]];
  const Uv& t2 = mesh.uvs[f.t[2]];
  hit.uv = {b0 * t0.u + b1 * t1.u + b2 * t2.u, b0 * t0.v + b1 * t1.v + b2 * t2.v};
  return hit;
}

namespace {

// True when (t_new, face_new) beats the current best under the tie rule.
bool closer(double t_new, uint32_t face_new, double t_best, uint32_t face_best) {
  if (t_new < t_best - kTieEpsilon) return true;
  if (t_new <= t_best + kTieEpsilon) return face_new < face_best;
  return false;
}

Aabb triangle_bounds(const TriangleMesh& mesh, uint32_t face) {
  Aabb b;
  for (int k = 0; k < 3; ++k) b.grow(mesh.vertices[mesh.faces[face].v[k]]);
  return b;
}

}  // namespace

Bvh Bvh::build(const TriangleMesh& mesh) {
  validate_mesh(mesh);
  const uint32_t n = static_cast<uint32_t>(mesh.faces.size());

  std::vector<Aabb> tri_box(n);
  std::vector<Vec3> tri_centroid(n);
  for (uint32_t i = 0; i < n; ++i) {
    tri_box[i] = triangle_bounds(mesh, i);
    tri_centroid[i] = tri_box[i].center();
  }

  Bvh bvh;
  bvh.tri_order_.resize(n);
  for (uint32_t i = 0; i < n; ++i) bvh.tri_order_[i] = i;
  bvh.nodes_.reserve(2 * n);

  struct Task {
    uint32_t node, first, count;
  };
  bvh.nodes_.push_back({});
  std::vector<Task> stack{{0, 0, n}};
  constexpr uint32_t kLeafSize = 4;

  while (!stack.empty()) {
    Task task = stack.back();
    stack.pop_back();
    uint32_t* ids = bvh.tri_order_.data() + task.first;

    Aabb box;
    Aabb centroid_box;
    for (uint32_t i = 0; i < task.count; ++i) {
      box.grow(tri_box[ids[i]]);
      centroid_box.grow(tri_centroid[ids[i]]);
    }
    Node& node = bvh.nodes_[task.node];
    node.box = box;

    Vec3 ext = centroid_box.extent();
    int axis = ext.x >= ext.y ? (ext.x >= ext.z ? 0 : 2) : (ext.y >= ext.z ? 1 : 2);
    if (task.count <= kLeafSize || ext[axis] <= 0.0) {
      node.first = task.first;
      node.count = task.count;
      continue;
    }

    // Median split on centroid position along the longest axis; face index
    // breaks centroid ties so the build is deterministic.
    uint32_t mid = task.count / 2;
    std::nth_element(ids, ids + mid, ids + task.count, [&](uint32_t a, uint32_t b) {
      double ca = tri_centroid[a][axis], cb = tri_centroid[b][axis];
      return ca < cb || (ca == cb && a < b);
    });

    uint32_t left = static_cast<uint32_t>(bvh.nodes_.size());
    bvh.nodes_[task.node].left = left;
    bvh.nodes_[task.node].count = 0;
    bvh.nodes_.push_back({});
    bvh.nodes_.push_back({});
    stack.push_back({left + 1, task.first + mid, task.count - mid});
    stack.push_back({left, task.first, mid});
  }
  return bvh;
}

std::optional<HitRecord> Bvh::intersect_first(const TriangleMesh& mesh, const Ray& ray,
                                              double t_min, double t_max) const {
  if (nodes_.empty()) return std::nullopt;

  double best_t = t_max;
  uint32_t best_face = 0;
  double best_b1 = 0.0, best_b2 = 0.0;
  bool found = false;

  uint32_t node_stack[64];
  int sp = 0;
  node_stack[sp++] = 0;
  while (sp > 0) {
    const Node& node = nodes_[node_stack[--sp]];
    // Candidate window: never beyond t_max, but wide enough to catch ties.
    const double t_window = std::fmin(t_max, best_t + kTieEpsilon);
    double t0, t1;
    if (!intersect_aabb(node.box, ray, t_min, t_window, t0, t1)) continue;
    if (node.count > 0) {
      for (uint32_t i = 0; i < node.count; ++i) {
        uint32_t face = tri_order_[node.first + i];
        double t, b1, b2;
        if (!intersect_triangle(mesh, face, ray, t_min, std::fmin(t_max, best_t + kTieEpsilon), t, b1, b2)) continue;
        if (!found || closer(t, face, best_t, best_face)) {
          best_t = t;
          best_face = face;
          best_b1 = b1;
          best_b2 = b2;
          found = true;
        }
      }
    } else {
      // Near child last so it pops first.
      const Node& l = nodes_[node.left];
      const Node& r = nodes_[node.left + 1];
      double l0, l1, r0, r1;
      bool hit_l = intersect_aabb(l.box, ray, t_min, t_window, l0, l1);
      bool hit_r = intersect_aabb(r.box, ray, t_min, t_window, r0, r1);
      if (hit_l && hit_r) {
        if (l0 <= r0) {
          node_stack[sp++] = node.left + 1;
          node_stack[sp++] = node.left;
        } else {
          node_stack[sp++] = node.left;
          node_stack[sp++] = node.left + 1;
        }
      } else if (hit_l) {
        node_stack[sp++] = node.left;
      } else if (hit_r) {
        node_stack[sp++] = node.left + 1;
      }
    }
  }
  if (!found) return std::nullopt;
  return make_hit_record(mesh, best_face, ray, best_t, best_b1, best_b2);
}

}  // namespace meshfield
