#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wsys/distance.hpp"

namespace wsys {

/// Lattice coordinate of a vertex in a periodic parent. Axial (q, r) for the
/// triangular lattice; (a, 0) for the integer line complexes A_k.
struct Coord {
  int q = 0;
  int r = 0;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

/// Lazy description of an infinite, locally finite parent complex.
struct PeriodicParent {
  std::string name;
  std::function<std::vector<Coord>(Coord)> neighbors;
};

/// Finite realization of B_R(basepoint) in a periodic parent, with margin m.
class WindowView {
 public:
  WindowView() = default;
  WindowView(std::string parent, Region region, std::vector<Coord> coords);

  const std::string& parent() const { return parent_; }
  const Region& region() const { return region_; }
  const FlagComplex& complex() const { return region_.complex(); }
  VertexId basepoint() const { return *region_.basepoint(); }
  Hops radius() const { return region_.radius(); }
  Hops margin() const { return region_.margin(); }

  Coord coord(int local) const { return coords_[static_cast<std::size_t>(local)]; }
  std::optional<int> index_at(Coord c) const;
  std::optional<VertexId> id_at(Coord c) const;

  TaggedDistance trusted_distance(VertexId u, VertexId v) const { return region_.trusted_distance(u, v); }

 private:
  std::string parent_;
  Region region_;
  std::vector<Coord> coords_;
  std::map<Coord, int> lookup_;
};

/// Breadth-first realization of the radius-R ball around `center`. Vertex ids
/// are assigned row-major: sorted by (r, q).
WindowView realize_window(const PeriodicParent& parent, Coord center, Hops radius, Hops margin);

/// Compare trusted distances of two windows of the same parent and margin on
/// the vertices trusted in both (matched by coordinate). Returns the number
/// of pairs compared, or the first mismatch.
struct StabilizationResult {
  std::size_t pairs = 0;
  std::optional<std::pair<Coord, Coord>> mismatch;
};
StabilizationResult compare_trusted_distances(const WindowView& small, const WindowView& large);

}  // namespace wsys
