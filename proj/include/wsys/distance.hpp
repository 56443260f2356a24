#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "wsys/complex.hpp"

namespace wsys {

/// Breadth-first distances from `source` (local index) into `out`.
void bfs_distances(const FlagComplex& x, int source, std::vector<Hops>& out);

/// Exact combinatorial distance. Per-source BFS, with an all-pairs table
/// filled eagerly at construction when the complex has at most
/// `cache_threshold` vertices. Immutable after construction.
class DistanceOracle {
 public:
  static constexpr std::size_t kDefaultCacheThreshold = 2000;

  explicit DistanceOracle(std::shared_ptr<const FlagComplex> x,
                          std::size_t cache_threshold = kDefaultCacheThreshold);

  const FlagComplex& complex() const { return *complex_; }
  bool cached() const { return !table_.empty() || complex_->empty(); }

  Hops distance(int u, int v) const;

  /// Distances from u to every vertex. Points into the cache when present,
  /// otherwise into `scratch`.
  std::span<const Hops> row(int u, std::vector<Hops>& scratch) const;

  /// Lexicographically least geodesic (by local index, which orders like ids).
  /// Empty when v is unreachable.
  std::vector<int> geodesic(int u, int v) const;

 private:
  std::shared_ptr<const FlagComplex> complex_;
  std::size_t n_ = 0;
  std::vector<Hops> table_;
};

Hops distance(const FlagComplex& x, VertexId u, VertexId v);
std::vector<VertexId> geodesic(const FlagComplex& x, VertexId u, VertexId v);

struct TaggedDistance {
  Hops value = 0;
  bool trusted = false;
};

/// The part of a complex on which verdicts are reported.
///
/// A whole finite complex is a region where every vertex and every distance
/// is trusted. A window realizes B_R(basepoint) of an infinite parent; a
/// vertex is trusted iff d(basepoint, v) <= R - m, and a distance is trusted
/// iff both endpoints are trusted and the value is at most m.
class Region {
 public:
  Region() = default;

  static Region whole(FlagComplex x, std::size_t cache_threshold = DistanceOracle::kDefaultCacheThreshold);
  static Region window(FlagComplex x, VertexId basepoint, Hops radius, Hops margin,
                       std::size_t cache_threshold = DistanceOracle::kDefaultCacheThreshold);

  const FlagComplex& complex() const { return *complex_; }
  const std::shared_ptr<const FlagComplex>& complex_ptr() const { return complex_; }
  const DistanceOracle& distances() const { return *oracle_; }

  bool is_window() const { return windowed_; }
  std::optional<VertexId> basepoint() const { return basepoint_; }
  Hops radius() const { return radius_; }
  Hops margin() const { return margin_; }

  bool trusted(int i) const { return trusted_[static_cast<std::size_t>(i)] != 0; }
  std::size_t trusted_count() const { return trusted_list_.size(); }
  std::span<const int> trusted_vertices() const { return trusted_list_; }

  /// Value d between local vertices u, v: trusted per the margin rule.
  bool trusted_pair(int u, int v, Hops d) const { return trusted(u) && trusted(v) && d <= margin_; }

  /// A window distance d(u, x) with u trusted and d <= margin is exact in the
  /// parent even when x itself is not trusted (every parent geodesic of
  /// length <= m from u stays inside the realized ball). Used for existential
  /// witnesses next to trusted quantifier ranges.
  bool exact_from(int u, Hops d) const { return trusted(u) && d <= margin_; }

  TaggedDistance trusted_distance(VertexId u, VertexId v) const;

  /// Sub-region: the induced subcomplex on `local` vertices with the same
  /// margin; trust is inherited from this region.
  Region restrict_to(std::span<const int> local) const;

 private:
  std::shared_ptr<const FlagComplex> complex_;
  std::shared_ptr<const DistanceOracle> oracle_;
  bool windowed_ = false;
  std::optional<VertexId> basepoint_;
  Hops radius_ = kInfinite;
  Hops margin_ = kInfinite;
  std::vector<char> trusted_;
  std::vector<int> trusted_list_;
};

}  // namespace wsys
