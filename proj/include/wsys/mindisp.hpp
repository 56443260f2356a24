#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wsys/isometry.hpp"
#include "wsys/local_conditions.hpp"

namespace wsys {

struct EmbeddingReport {
  std::size_t pairs = 0;
  /// max of d_Min - d_X over trusted pairs (kInfinite if Min disconnects a pair).
  Hops max_deviation = 0;
  std::optional<PairWitness> violation;
  /// d_Min >= d_X held on every pair examined, trusted or not.
  bool domination_holds = true;

  Verdict verdict() const;
};

/// d_Min(u, v) = d_X(u, v) for every pair of Min vertices whose X-distance is
/// trusted. Throws InputError unless `min_region` is a full subcomplex of x.
EmbeddingReport isometric_embedding_check(const Region& region, const Region& min_region,
                                          const ScanOptions& scan = {});

/// is_systolic applied to Min.
SystolicReport min_systolic_check(const Region& min_region, const CheckOptions& opts = {});

struct DominatedWheel {
  ExtendedWheel5 wheel;
  std::optional<VertexId> dominator;
};

struct WheelDominationReport {
  /// Yes iff no link of a trusted Min vertex contains a full 5-cycle.
  Verdict verdict;
  std::vector<DominatedWheel> wheels;
};

WheelDominationReport wheel_domination_in_min(const Region& region, const Region& min_region);

struct GeodesicSearchResult {
  /// Yes with `chain`, or Unknown (not found in the window).
  Verdict verdict;
  std::optional<PathChain> chain;
  std::size_t tried = 0;
};

/// Search geodesics from `start` to h^n(start), in lexicographic order, for one
/// whose h^n-translated chain is a geodesic on every trusted index pair. Throws
/// InputError unless start is in Min(h^n).
GeodesicSearchResult invariant_geodesic_search(const Region& region, const Automorphism& h, int n, VertexId start,
                                               std::size_t max_tries = 10'000);

/// Integer-indexed embedding of A_k: index first_index + p maps to vertices[p].
struct ThickGeodesicWitness {
  int k = 1;
  std::int64_t first_index = 0;
  std::vector<VertexId> vertices;
};

/// Injective; adjacent iff index gap <= k; d_X = |j| at index gaps jk. Only
/// indices whose vertex is trusted take part (distances: trusted pairs).
Verdict verify_thick_geodesic(const Region& region, const ThickGeodesicWitness& w);

struct DichotomyReport {
  Classification classification;
  std::optional<PathChain> chain;
  std::optional<ThickGeodesicWitness> thick;
  /// Elliptic: Yes with the invariant simplex. Otherwise the thick-geodesic
  /// verification, or Unknown when no k fits the chain in the window.
  Verdict verdict;
};

DichotomyReport dichotomy_report(const Region& region, const Automorphism& h);

}  // namespace wsys
