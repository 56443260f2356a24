#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsys/distance.hpp"

namespace wsys {

/// Vertex map of a simplicial isometry. Total maps cover every vertex of
/// their complex; window-partial maps are defined on a domain subset (the
/// vertices whose image stays inside a finite window).
class Automorphism {
 public:
  Automorphism() = default;
  /// Throws InputError if a source vertex is listed twice. Injectivity and
  /// adjacency preservation are checked by validate_automorphism.
  Automorphism(std::vector<std::pair<VertexId, VertexId>> pairs, bool total, std::string name = {});

  static Automorphism identity(const FlagComplex& x);

  const std::string& name() const { return name_; }
  bool total() const { return total_; }
  std::size_t size() const { return forward_.size(); }
  std::span<const std::pair<VertexId, VertexId>> pairs() const { return forward_; }
  std::vector<VertexId> domain() const;

  std::optional<VertexId> image(VertexId v) const;
  std::optional<VertexId> preimage(VertexId v) const;

  Automorphism inverse() const;
  /// (*this) ∘ g: apply g, then this map.
  Automorphism after(const Automorphism& g) const;
  /// n-th power; negative n uses the inverse. Domain shrinks for partial maps.
  Automorphism power(int n) const;

  /// Image of a local vertex of x, -1 where undefined or outside x.
  std::vector<int> local_map(const FlagComplex& x) const;

 private:
  std::string name_;
  bool total_ = false;
  std::vector<std::pair<VertexId, VertexId>> forward_;
  std::vector<std::pair<VertexId, VertexId>> backward_;
};

/// Every automorphism of a finite complex, by backtracking in vertex order
/// with degree and adjacency pruning. Stops after `limit` maps.
std::vector<Automorphism> all_automorphisms(const FlagComplex& x, std::size_t limit = 100'000);

/// Bijective on its domain, adjacency preserved both ways, total maps cover x.
Verdict validate_automorphism(const FlagComplex& x, const Automorphism& h);

struct DisplacementProfile {
  /// (v, d(v, h(v))) for every trusted v whose displacement is trusted.
  std::vector<std::pair<VertexId, Hops>> values;
  Hops minimum = kInfinite;
  std::vector<VertexId> argmin;

  std::optional<Hops> at(VertexId v) const;
};

DisplacementProfile displacement_profile(const Region& region, const Automorphism& h);

/// Search for a setwise-invariant simplex. Total maps: exhaustive over orbits
/// (an invariant clique is a union of orbits, and each orbit inside a clique
/// is itself a clique). Partial maps: only closed cycles inside the domain
/// are examined, so the negative answer is Unknown.
Verdict find_invariant_simplex(const FlagComplex& x, const Automorphism& h);

struct Classification {
  enum class Kind { Elliptic, Hyperbolic, UnknownOnWindow };
  Kind kind = Kind::UnknownOnWindow;
  std::optional<Simplex> invariant_simplex;
  Hops translation_length = kInfinite;
};

std::string_view to_string(Classification::Kind k);

Classification classify(const Region& region, const Automorphism& h);

/// Span of the minimal-displacement vertices, as a sub-region of `region`.
/// Throws InputError when |h| = 0 (elliptic case).
Region min_set(const Region& region, const Automorphism& h);

/// Recompute displacement inside Y = Min with Y-internal distances; Yes iff
/// every Y vertex with a trusted Y-displacement is displaced by exactly |h|.
Verdict min_idempotence_check(const Region& region, const Automorphism& h, const Region& min_region);

/// Integer-indexed vertex path γ with γ(a + period) = h(γ(a)).
struct PathChain {
  std::int64_t first_index = 0;
  std::vector<VertexId> vertices;
  Hops period = 0;
  std::vector<VertexId> base;

  std::int64_t last_index() const { return first_index + static_cast<std::int64_t>(vertices.size()) - 1; }
  std::optional<VertexId> at(std::int64_t a) const;
};

/// Concatenate h^n(α) for n in [n_lo, n_hi], truncated to the contiguous
/// defined block around index 0. α must be a geodesic from v to h(v) of
/// length |h| with v minimally displaced.
PathChain chain_along_path(const Region& region, const Automorphism& h, VertexId v, std::span<const VertexId> alpha,
                       int n_lo, int n_hi);

/// Same, with α the lexicographically least geodesic from v to h(v).
PathChain chain_along_geodesic(const Region& region, const Automorphism& h, VertexId v, int n_lo, int n_hi);

/// d(γ(a), γ(b)) = |a - b| for every index pair with |a - b| <= L whose
/// distance is trusted.
Verdict verify_lh_geodesic(const Region& region, const PathChain& chain, Hops L);

/// Every chain vertex whose displacement is known (trusted) attains |h|.
/// Chain vertices with untrusted displacement are skipped and counted.
Verdict chain_in_min(const PathChain& chain, const DisplacementProfile& profile);

/// Minimally displaced vertex nearest the basepoint (ties: smallest id); the
/// smallest argmin id on whole complexes.
VertexId central_argmin(const Region& region, const DisplacementProfile& profile);

}  // namespace wsys
