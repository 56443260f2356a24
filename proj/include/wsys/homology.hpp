#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wsys/complex.hpp"

namespace wsys {

/// Result of collapsing a flag complex.
struct CollapseResult {
  /// Vertices removed because their closed neighborhood is contained in a
  /// neighbor's (their link is a cone, so their star collapses away).
  std::vector<VertexId> dominated_order;
  /// Elementary collapses performed on the residual after the vertex pass.
  std::size_t elementary_collapses = 0;
  /// Collapse states visited during the bounded backtracking search.
  std::size_t states = 0;
  bool reached_point = false;
  bool budget_exhausted = false;
  /// What remains after the dominated-vertex pass (a homotopy-equivalent core).
  FlagComplex core;
};

/// Dominated-vertex removal followed by a bounded free-face search.
CollapseResult collapse(const FlagComplex& x, std::size_t budget);

/// Replay a dominated-vertex removal order and confirm each step was legal
/// and a single vertex remains. Independent of `collapse`.
bool replay_dominated_order(const FlagComplex& x, const std::vector<VertexId>& order);

/// First integral homology H_1 = Z^betti ⊕ torsion.
struct FirstHomology {
  int betti = 0;
  std::vector<std::int64_t> torsion;
  bool trivial() const { return betti == 0 && torsion.empty(); }
};

/// H_1 over the integers via Smith diagonalization of the triangle boundary
/// matrix. Returns nullopt when the matrix exceeds `max_entries` or an
/// intermediate value overflows 64 bits.
std::optional<FirstHomology> first_homology(const FlagComplex& x, std::size_t max_entries = 4'000'000);

/// True iff the closed walk `cycle` is a boundary of triangles over Z/p
/// (p = 2^31 - 1). A cycle that is not a boundary mod p is not one over Z, so
/// it certifies H_1 != 0.
bool is_boundary_mod_p(const FlagComplex& x, std::span<const VertexId> cycle);

/// Sufficient/necessary test for simple connectivity. Yes when a collapse to
/// a point is found; No when the complex is disconnected or H_1 is
/// nontrivial; Unknown otherwise.
Verdict simple_connectivity_oracle(const FlagComplex& x, std::size_t budget = 100'000);

}  // namespace wsys
