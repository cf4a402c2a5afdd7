#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "meshfield/mesh.hpp"
#include "meshfield/vec3.hpp"

namespace meshfield {

// First ray-surface intersection. normal is barycentric-interpolated,
// renormalized, and oriented toward the ray origin side.
struct HitRecord {
  double t_hit = 0.0;
  Vec3 position;
  Vec3 normal;
  Uv uv;
  uint32_t face_index = 0;
};

// Hits with |t - t_best| <= kTieEpsilon count as ties and resolve to the
// lowest face index, so BVH traversal order cannot change the answer.
inline constexpr double kTieEpsilon = 1e-12;

// Self-intersection guard for queries starting on or near a surface.
inline constexpr double kRayEpsilon = 1e-4;

// Moller-Trumbore against one face; two-sided. On a hit, fills t and the
// barycentric coordinates (b1 toward corner 1, b2 toward corner 2).
bool intersect_triangle(const TriangleMesh& mesh, uint32_t face_index, const Ray& ray,
                        double t_min, double t_max, double& t, double& b1, double& b2);

// Builds the full HitRecord (interpolated normal/uv, flipped normal).
HitRecord make_hit_record(const TriangleMesh& mesh, uint32_t face_index, const Ray& ray,
                          double t, double b1, double b2);

// Binary BVH: median split over the longest axis of centroid bounds,
// leaf size <= 4. Immutable after build; traversal is pure.
class Bvh {
 public:
  struct Node {
    Aabb box;
    // Leaf when count > 0: triangles [first, first+count) of tri_order.
    // Inner node otherwise: children at left and left+1... stored as index.
    uint32_t first = 0;
    uint32_t count = 0;
    uint32_t left = 0;   // index of left child; right child is left+1
  };

  static Bvh build(const TriangleMesh& mesh);

  std::optional<HitRecord> intersect_first(const TriangleMesh& mesh, const Ray& ray,
                                           double t_min, double t_max) const;

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<uint32_t>& triangle_order() const { return tri_order_; }

 private:
  std::vector<Node> nodes_;
  std::vector<uint32_t> tri_order_;
};

inline Bvh build_bvh(const TriangleMesh& mesh) { return Bvh::build(mesh); }

inline std::optional<HitRecord> intersect_first(const Bvh& bvh, const TriangleMesh& mesh,
                                                const Ray& ray, double t_min, double t_max) {
  return bvh.intersect_first(mesh, ray, t_min, t_max);
}

}  // namespace meshfield
