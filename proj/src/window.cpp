#include "wsys/window.hpp"

#include <algorithm>
#include <tuple>

namespace wsys {

WindowView::WindowView(std::string parent, Region region, std::vector<Coord> coords)
    : parent_(std::move(parent)), region_(std::move(region)), coords_(std::move(coords)) {
  for (std::size_t i = 0; i < coords_.size(); ++i) lookup_.emplace(coords_[i], static_cast<int>(i));
}

std::optional<int> WindowView::index_at(Coord c) const {
  auto it = lookup_.find(c);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> WindowView::id_at(Coord c) const {
  auto i = index_at(c);
  if (!i) return std::nullopt;
  return complex().id(*i);
}

WindowView realize_window(const PeriodicParent& parent, Coord center, Hops radius, Hops margin) {
  if (radius < 0 || margin < 0 || margin > radius) throw InputError("window needs 0 <= margin <= radius");
  std::map<Coord, Hops> depth{{center, 0}};
  std::vector<Coord> frontier{center};
  for (Hops d = 1; d <= radius; ++d) {
    std::vector<Coord> next;
    for (Coord c : frontier) {
      for (Coord n : parent.neighbors(c)) {
        if (depth.emplace(n, d).second) next.push_back(n);
      }
    }
    frontier = std::move(next);
  }

  std::vector<Coord> coords;
  coords.reserve(depth.size());
  for (const auto& [c, d] : depth) coords.push_back(c);
  std::sort(coords.begin(), coords.end(),
            [](Coord a, Coord b) { return std::tie(a.r, a.q) < std::tie(b.r, b.q); });
  std::map<Coord, int> index;
  for (std::size_t i = 0; i < coords.size(); ++i) index.emplace(coords[i], static_cast<int>(i));

  std::vector<VertexId> ids;
  std::vector<std::vector<int>> adj(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    ids.emplace_back(static_cast<std::uint32_t>(i));
    for (Coord n : parent.neighbors(coords[i])) {
      auto it = index.find(n);
      if (it != index.end()) adj[i].push_back(it->second);
    }
  }
  auto x = FlagComplex::from_local(std::move(ids), std::move(adj));
  const VertexId base(static_cast<std::uint32_t>(index.at(center)));
  return WindowView(parent.name, Region::window(std::move(x), base, radius, margin), std::move(coords));
}

StabilizationResult compare_trusted_distances(const WindowView& small, const WindowView& large) {
  StabilizationResult result;
  const Region& a = small.region();
  const Region& b = large.region();
  std::vector<Hops> scratch_a, scratch_b;
  for (int u : a.trusted_vertices()) {
    auto bu = large.index_at(small.coord(u));
    if (!bu || !b.trusted(*bu)) continue;
    auto row_a = a.distances().row(u, scratch_a);
    auto row_b = b.distances().row(*bu, scratch_b);
    for (int v : a.trusted_vertices()) {
      if (v <= u) continue;
      auto bv = large.index_at(small.coord(v));
      if (!bv || !b.trusted(*bv)) continue;
      const Hops da = row_a[static_cast<std::size_t>(v)];
      const Hops db = row_b[static_cast<std::size_t>(*bv)];
      const bool ta = a.trusted_pair(u, v, da);
      const bool tb = b.trusted_pair(*bu, *bv, db);
      if (!ta && !tb) continue;
      ++result.pairs;
      if (ta != tb || da != db) {
        result.mismatch = std::make_pair(small.coord(u), small.coord(v));
        return result;
      }
    }
  }
  return result;
}

}  // namespace wsys
