#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wsys/types.hpp"

namespace wsys {

/// Raw graph input: adjacency as given, not yet validated. Asymmetric or
/// reflexive entries are representable here so that validation can name them.
struct Graph1Skeleton {
  std::vector<VertexId> vertices;
  std::map<VertexId, std::vector<VertexId>> adjacency;

  /// Convenience: vertices 0..n-1 with undirected edges.
  static Graph1Skeleton from_edges(std::uint32_t n,
                                   std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);
};

/// A flag simplicial complex, stored as its 1-skeleton. Simplices are the
/// cliques of the skeleton and are only materialized on demand.
///
/// Vertices are addressed two ways: by `VertexId` (stable label, shared with
/// any parent complex) and by local index 0..size()-1 (position in the sorted
/// id list). Algorithms work on local indices; witnesses report ids.
class FlagComplex {
 public:
  FlagComplex() = default;

  /// Build from sorted unique ids and a symmetric adjacency over local indices.
  /// No validation beyond debug assertions; use `build_flag_complex` for input.
  static FlagComplex from_local(std::vector<VertexId> ids, std::vector<std::vector<int>> adjacency);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::size_t edge_count() const { return edge_count_; }

  VertexId id(int i) const { return ids_[static_cast<std::size_t>(i)]; }
  std::span<const VertexId> ids() const { return ids_; }
  std::optional<int> index_of(VertexId v) const;
  /// Like index_of, but throws InputError for unknown ids.
  int require_index(VertexId v) const;
  bool contains(VertexId v) const { return index_of(v).has_value(); }

  std::span<const int> neighbors(int i) const { return adjacency_[static_cast<std::size_t>(i)]; }
  int degree(int i) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(i)].size()); }
  bool adjacent(int i, int j) const;
  bool adjacent_ids(VertexId u, VertexId v) const;

  bool is_clique(std::span<const int> local) const;
  bool is_clique_ids(std::span<const VertexId> vs) const;

  /// Induced subcomplex on a set of local indices (any order, duplicates ignored).
  FlagComplex induced(std::span<const int> local) const;

  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> component_labels() const;
  int component_count() const;
  bool is_connected() const { return component_count() <= 1; }

  std::vector<VertexId> to_ids(std::span<const int> local) const;
  std::vector<int> to_local(std::span<const VertexId> ids) const;

  friend bool operator==(const FlagComplex&, const FlagComplex&) = default;

 private:
  std::vector<VertexId> ids_;
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// A simplicial complex given by its facets (maximal simplices).
class FacetComplex {
 public:
  FacetComplex() = default;
  /// Throws InputError unless the facets form an antichain.
  explicit FacetComplex(std::vector<Simplex> facets);

  std::span<const Simplex> facets() const { return facets_; }
  std::vector<VertexId> vertices() const;
  bool has_simplex(const Simplex& s) const;
  FlagComplex one_skeleton() const;

 private:
  std::vector<Simplex> facets_;
};

/// Validates symmetry and irreflexivity, then returns the clique complex.
FlagComplex build_flag_complex(const Graph1Skeleton& g);

/// Yes iff fc is the clique complex of its own 1-skeleton. The No witness is a
/// maximal clique of the skeleton that is not a simplex of fc.
Verdict is_flag(const FacetComplex& fc);

/// Facets (maximal cliques) of a flag complex, sorted.
std::vector<Simplex> facets(const FlagComplex& x);

/// Visit every clique (nonempty simplex) in local indices, in lexicographic
/// order of sorted index tuples. The visitor returns false to stop early.
template <typename Visitor>
void for_each_simplex(const FlagComplex& x, Visitor&& visit);

/// All simplices as local-index vectors (lexicographic).
std::vector<std::vector<int>> all_simplices(const FlagComplex& x, std::size_t max_size = 0);

/// Link of a simplex: induced complex on common neighbors of its vertices.
FlagComplex link(const FlagComplex& x, const Simplex& s);
FlagComplex link_local(const FlagComplex& x, std::span<const int> s);

/// Full subcomplex spanned by a vertex set.
FlagComplex span(const FlagComplex& x, std::span<const VertexId> vertices);

/// True iff `sub` uses ids of `x` and is the induced subcomplex on its vertices.
bool is_full_subcomplex(const FlagComplex& x, const FlagComplex& sub);

// --- implementation of the visitor template ---

namespace detail {
template <typename Visitor>
bool extend_cliques(const FlagComplex& x, std::vector<int>& current, std::vector<int>& candidates,
                    Visitor& visit) {
  if (!visit(std::span<const int>(current))) return false;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const int c = candidates[k];
    std::vector<int> next;
    for (std::size_t j = k + 1; j < candidates.size(); ++j) {
      if (x.adjacent(c, candidates[j])) next.push_back(candidates[j]);
    }
    current.push_back(c);
    const bool go_on = extend_cliques(x, current, next, visit);
    current.pop_back();
    if (!go_on) return false;
  }
  return true;
}
}  // namespace detail

template <typename Visitor>
void for_each_simplex(const FlagComplex& x, Visitor&& visit) {
  std::vector<int> current;
  for (int v = 0; v < static_cast<int>(x.size()); ++v) {
    std::vector<int> candidates;
    for (int w : x.neighbors(v)) {
      if (w > v) candidates.push_back(w);
    }
    current.assign(1, v);
    if (!detail::extend_cliques(x, current, candidates, visit)) return;
  }
}

}  // namespace wsys
