#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace flock {

enum class GeometryKind : uint8_t { Torus, SparseUnbounded };

struct Geometry {
  GeometryKind kind = GeometryKind::SparseUnbounded;
  int side = 0;  // torus side L; unused for sparse

  static Geometry torus(int side) { return {GeometryKind::Torus, side}; }
  static Geometry sparse() { return {GeometryKind::SparseUnbounded, 0}; }
  bool is_torus() const { return kind == GeometryKind::Torus; }
  bool operator==(const Geometry&) const = default;
};

// A site is identified by a packed 64-bit key: fixed-width bit fields,
// one per axis (16 bits per axis for d <= 4, 8 bits for d in 5..8).
// Packing is injective on the supported coordinate range, so keys can be
// used directly in hash maps; coordinates outside the range throw.
using SiteKey = uint64_t;

constexpr int kMaxDimension = 8;

class Lattice {
 public:
  Lattice(int d, Geometry geometry);

  int dim() const { return d_; }
  const Geometry& geometry() const { return geom_; }
  int degree() const { return 2 * d_; }

  SiteKey pack(std::span<const int64_t> coords) const;
  std::vector<int64_t> unpack(SiteKey key) const;
  SiteKey origin() const { return origin_; }

  // Nearest neighbor along `axis` in direction `dir` (+1/-1); wraps on
  // the torus, range-checked on the unbounded lattice.
  SiteKey neighbor(SiteKey key, int axis, int dir) const;

  // All 2d neighbors in the fixed order (+axis0, -axis0, +axis1, ...).
  // `out` must have room for degree() keys.
  void neighbors(SiteKey key, SiteKey* out) const;

  // Number of sites of the torus (throws for sparse geometry).
  uint64_t torus_site_count() const;

  // Enumerates all torus sites in a fixed order (axis 0 varying fastest).
  std::vector<SiteKey> torus_sites() const;

  bool operator==(const Lattice&) const = default;

 private:
  int64_t axis_value(SiteKey key, int axis) const;
  SiteKey with_axis_value(SiteKey key, int axis, int64_t value) const;

  int d_ = 1;
  Geometry geom_;
  int bits_ = 16;
  uint64_t mask_ = 0xffff;
  int64_t coord_min_ = 0;  // inclusive
  int64_t coord_max_ = 0;  // inclusive
  SiteKey origin_ = 0;
};

}  // namespace flock
