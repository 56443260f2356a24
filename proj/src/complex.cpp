#include "wsys/complex.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>

namespace wsys {

Graph1Skeleton Graph1Skeleton::from_edges(std::uint32_t n,
                                          std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  Graph1Skeleton g;
  for (std::uint32_t i = 0; i < n; ++i) {
    g.vertices.emplace_back(i);
    g.adjacency[VertexId(i)];
  }
  for (auto [u, v] : edges) {
    g.adjacency[VertexId(u)].emplace_back(v);
    g.adjacency[VertexId(v)].emplace_back(u);
  }
  return g;
}

FlagComplex FlagComplex::from_local(std::vector<VertexId> ids, std::vector<std::vector<int>> adjacency) {
  assert(std::is_sorted(ids.begin(), ids.end()));
  assert(ids.size() == adjacency.size());
  FlagComplex x;
  x.ids_ = std::move(ids);
  x.adjacency_ = std::move(adjacency);
  std::size_t degree_sum = 0;
  for (auto& nbrs : x.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += nbrs.size();
  }
  x.edge_count_ = degree_sum / 2;
  return x;
}

std::optional<int> FlagComplex::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

int FlagComplex::require_index(VertexId v) const {
  auto i = index_of(v);
  if (!i) throw InputError("unknown vertex id " + std::to_string(v.value));
  return *i;
}

bool FlagComplex::adjacent(int i, int j) const {
  const auto& nbrs = adjacency_[static_cast<std::size_t>(i)];
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

bool FlagComplex::adjacent_ids(VertexId u, VertexId v) const {
  auto i = index_of(u);
  auto j = index_of(v);
  return i && j && adjacent(*i, *j);
}

bool FlagComplex::is_clique(std::span<const int> local) const {
  for (std::size_t a = 0; a < local.size(); ++a) {
    for (std::size_t b = a + 1; b < local.size(); ++b) {
      if (!adjacent(local[a], local[b])) return false;
    }
  }
  return true;
}

bool FlagComplex::is_clique_ids(std::span<const VertexId> vs) const {
  std::vector<int> local;
  for (VertexId v : vs) {
    auto i = index_of(v);
    if (!i) return false;
    local.push_back(*i);
  }
  return is_clique(local);
}

FlagComplex FlagComplex::induced(std::span<const int> local) const {
  std::vector<int> keep(local.begin(), local.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  std::vector<int> remap(size(), -1);
  std::vector<VertexId> ids;
  ids.reserve(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    remap[static_cast<std::size_t>(keep[k])] = static_cast<int>(k);
    ids.push_back(ids_[static_cast<std::size_t>(keep[k])]);
  }
  std::vector<std::vector<int>> adj(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    for (int w : neighbors(keep[k])) {
      const int r = remap[static_cast<std::size_t>(w)];
      if (r >= 0) adj[k].push_back(r);
    }
  }
  return from_local(std::move(ids), std::move(adj));
}

std::vector<std::pair<int, int>> FlagComplex::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int i = 0; i < static_cast<int>(size()); ++i) {
    for (int j : neighbors(i)) {
      if (j > i) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<int> FlagComplex::component_labels() const {
  std::vector<int> label(size(), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < static_cast<int>(size()); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int FlagComplex::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<VertexId> FlagComplex::to_ids(std::span<const int> local) const {
  std::vector<VertexId> out;
  out.reserve(local.size());
  for (int i : local) out.push_back(id(i));
  return out;
}

std::vector<int> FlagComplex::to_local(std::span<const VertexId> vs) const {
  std::vector<int> out;
  out.reserve(vs.size());
  for (VertexId v : vs) out.push_back(require_index(v));
  return out;
}

FlagComplex build_flag_complex(const Graph1Skeleton& g) {
  std::vector<VertexId> ids = g.vertices;
  for (const auto& [v, nbrs] : g.adjacency) ids.push_back(v);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  auto index = [&](VertexId v) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  std::set<std::pair<VertexId, VertexId>> arcs;
  for (const auto& [v, nbrs] : g.adjacency) {
    for (VertexId w : nbrs) {
      if (w == v) throw InputError("self-loop at vertex " + std::to_string(v.value));
      if (!std::binary_search(ids.begin(), ids.end(), w)) {
        throw InputError("edge to unknown vertex " + std::to_string(w.value));
      }
      arcs.emplace(v, w);
    }
  }
  std::vector<std::vector<int>> adj(ids.size());
  for (auto [v, w] : arcs) {
    if (!arcs.contains({w, v})) {
      std::ostringstream msg;
      msg << "asymmetric adjacency: " << v << " lists " << w << " but not conversely";
      throw InputError(msg.str());
    }
    adj[static_cast<std::size_t>(index(v))].push_back(index(w));
  }
  return FlagComplex::from_local(std::move(ids), std::move(adj));
}

FacetComplex::FacetComplex(std::vector<Simplex> facets) : facets_(std::move(facets)) {
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
  for (std::size_t a = 0; a < facets_.size(); ++a) {
    for (std::size_t b = 0; b < facets_.size(); ++b) {
      if (a != b && facets_[a].is_face_of(facets_[b])) {
        throw InputError("facets are not an antichain: a facet is a face of another");
      }
    }
  }
}

std::vector<VertexId> FacetComplex::vertices() const {
  std::vector<VertexId> out;
  for (const auto& f : facets_) out.insert(out.end(), f.vertices().begin(), f.vertices().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool FacetComplex::has_simplex(const Simplex& s) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return s.is_face_of(f); });
}

FlagComplex FacetComplex::one_skeleton() const {
  auto ids = vertices();
  auto index = [&](VertexId v) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  std::vector<std::vector<int>> adj(ids.size());
  for (const auto& f : facets_) {
    auto vs = f.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        adj[static_cast<std::size_t>(index(vs[a]))].push_back(index(vs[b]));
        adj[static_cast<std::size_t>(index(vs[b]))].push_back(index(vs[a]));
      }
    }
  }
  return FlagComplex::from_local(std::move(ids), std::move(adj));
}

namespace {

// Bron-Kerbosch with pivoting over local indices.
void bron_kerbosch(const FlagComplex& x, std::vector<int>& r, std::vector<int> p, std::vector<int> excluded,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && excluded.empty()) {
    auto clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* set : {&p, &excluded}) {
    for (int u : *set) {
      std::size_t count = 0;
      for (int v : p) count += x.adjacent(u, v) ? 1 : 0;
      if (pivot < 0 || count > best) {
        pivot = u;
        best = count;
      }
    }
  }
  std::vector<int> branch;
  for (int v : p) {
    if (!x.adjacent(pivot, v)) branch.push_back(v);
  }
  for (int v : branch) {
    std::vector<int> p2, x2;
    for (int w : p) {
      if (x.adjacent(v, w)) p2.push_back(w);
    }
    for (int w : excluded) {
      if (x.adjacent(v, w)) x2.push_back(w);
    }
    r.push_back(v);
    bron_kerbosch(x, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    excluded.push_back(v);
  }
}

std::vector<std::vector<int>> maximal_cliques(const FlagComplex& x) {
  std::vector<std::vector<int>> out;
  std::vector<int> r;
  std::vector<int> p(x.size());
  std::iota(p.begin(), p.end(), 0);
  bron_kerbosch(x, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Simplex> facets(const FlagComplex& x) {
  std::vector<Simplex> out;
  for (const auto& c : maximal_cliques(x)) out.emplace_back(x.to_ids(c));
  std::sort(out.begin(), out.end());
  return out;
}

Verdict is_flag(const FacetComplex& fc) {
  const FlagComplex skeleton = fc.one_skeleton();
  for (const auto& c : maximal_cliques(skeleton)) {
    Simplex s(skeleton.to_ids(c));
    if (!fc.has_simplex(s)) return Verdict::no(SimplexWitness{std::move(s)}, "clique spans no simplex");
  }
  return Verdict::yes();
}

std::vector<std::vector<int>> all_simplices(const FlagComplex& x, std::size_t max_size) {
  std::vector<std::vector<int>> out;
  for_each_simplex(x, [&](std::span<const int> s) {
    if (max_size == 0 || s.size() <= max_size) out.emplace_back(s.begin(), s.end());
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

FlagComplex link_local(const FlagComplex& x, std::span<const int> s) {
  if (s.empty()) throw InputError("link of an empty simplex");
  if (!x.is_clique(s)) throw InputError("link requested for a vertex set that is not a simplex");
  std::vector<int> common;
  for (int w : x.neighbors(s[0])) {
    bool all = true;
    for (std::size_t k = 1; k < s.size() && all; ++k) all = x.adjacent(s[k], w);
    if (all) common.push_back(w);
  }
  return x.induced(common);
}

FlagComplex link(const FlagComplex& x, const Simplex& s) {
  auto local = x.to_local(s.vertices());
  return link_local(x, local);
}

FlagComplex span(const FlagComplex& x, std::span<const VertexId> vertices) {
  return x.induced(x.to_local(vertices));
}

bool is_full_subcomplex(const FlagComplex& x, const FlagComplex& sub) {
  std::vector<int> local;
  for (VertexId v : sub.ids()) {
    auto i = x.index_of(v);
    if (!i) return false;
    local.push_back(*i);
  }
  return x.induced(local) == sub;
}

}  // namespace wsys
