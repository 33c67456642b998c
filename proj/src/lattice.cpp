#include "flock/lattice.hpp"

#include <stdexcept>
#include <string>

namespace flock {

Lattice::Lattice(int d, Geometry geometry) : d_(d), geom_(geometry) {
  if (d < 1 || d > kMaxDimension) {
    throw std::invalid_argument("lattice dimension must be in [1, " +
                                std::to_string(kMaxDimension) + "]");
  }
  bits_ = d <= 4 ? 16 : 8;
  mask_ = (uint64_t{1} << bits_) - 1;
  if (geom_.is_torus()) {
    if (geom_.side < 3) {
      throw std::invalid_argument("torus side must be >= 3");
    }
    if (uint64_t(geom_.side) > mask_ + 1) {
      throw std::invalid_argument("torus side too large for this dimension");
    }
    coord_min_ = 0;
    coord_max_ = geom_.side - 1;
  } else {
    coord_min_ = -(int64_t{1} << (bits_ - 1));
    coord_max_ = (int64_t{1} << (bits_ - 1)) - 1;
  }
  int64_t zeros[kMaxDimension] = {};
  origin_ = pack(std::span<const int64_t>(zeros, size_t(d_)));
}

SiteKey Lattice::pack(std::span<const int64_t> coords) const {
  if (int(coords.size()) != d_) {
    throw std::invalid_argument("coordinate arity does not match dimension");
  }
  SiteKey key = 0;
  for (int a = 0; a < d_; ++a) {
    int64_t c = coords[a];
    if (c < coord_min_ || c > coord_max_) {
      throw std::out_of_range("lattice coordinate out of supported range");
    }
    uint64_t field = uint64_t(c - coord_min_) & mask_;
    key |= field << (a * bits_);
  }
  return key;
}

std::vector<int64_t> Lattice::unpack(SiteKey key) const {
  std::vector<int64_t> coords(size_t(d_));
  for (int a = 0; a < d_; ++a) coords[size_t(a)] = axis_value(key, a);
  return coords;
}

int64_t Lattice::axis_value(SiteKey key, int axis) const {
  uint64_t field = (key >> (axis * bits_)) & mask_;
  return int64_t(field) + coord_min_;
}

SiteKey Lattice::with_axis_value(SiteKey key, int axis, int64_t value) const {
  uint64_t field = uint64_t(value - coord_min_) & mask_;
  SiteKey cleared = key & ~(mask_ << (axis * bits_));
  return cleared | (field << (axis * bits_));
}

SiteKey Lattice::neighbor(SiteKey key, int axis, int dir) const {
  int64_t c = axis_value(key, axis);
  if (geom_.is_torus()) {
    int64_t L = geom_.side;
    c = dir > 0 ? (c + 1 == L ? 0 : c + 1) : (c == 0 ? L - 1 : c - 1);
  } else {
    c += dir > 0 ? 1 : -1;
    if (c < coord_min_ || c > coord_max_) {
      throw std::out_of_range("simulation reached the edge of the supported "
                              "coordinate range");
    }
  }
  return with_axis_value(key, axis, c);
}

void Lattice::neighbors(SiteKey key, SiteKey* out) const {
  for (int a = 0; a < d_; ++a) {
    out[2 * a] = neighbor(key, a, +1);
    out[2 * a + 1] = neighbor(key, a, -1);
  }
}

uint64_t Lattice::torus_site_count() const {
  if (!geom_.is_torus()) {
    throw std::logic_error("site count requested for unbounded lattice");
  }
  uint64_t n = 1;
  for (int a = 0; a < d_; ++a) n *= uint64_t(geom_.side);
  return n;
}

std::vector<SiteKey> Lattice::torus_sites() const {
  uint64_t n = torus_site_count();
  std::vector<SiteKey> keys;
  keys.reserve(n);
  std::vector<int64_t> c(size_t(d_), 0);
  for (uint64_t i = 0; i < n; ++i) {
    keys.push_back(pack(c));
    for (int a = 0; a < d_; ++a) {
      if (++c[size_t(a)] < geom_.side) break;
      c[size_t(a)] = 0;
    }
  }
  return keys;
}

}  // namespace flock
