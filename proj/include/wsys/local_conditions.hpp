#pragma once

#include <optional>
#include <vector>

#include "wsys/distance.hpp"
#include "wsys/parallel.hpp"

namespace wsys {

/// Induced cycle of length >= 4, canonically rotated so that the least id
/// comes first and its successor is smaller than its predecessor.
struct FullCycle {
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.size(); }
  friend auto operator<=>(const FullCycle&, const FullCycle&) = default;
};

FullCycle canonical_cycle(std::vector<VertexId> cycle);

/// Independent predicate: consecutive vertices adjacent, all others not,
/// length >= 4, no repeats.
bool is_full_cycle(const FlagComplex& x, std::span<const VertexId> cycle);

/// All induced cycles of length 4..max_len, each once up to rotation and
/// reflection, sorted by (length, vertices).
std::vector<FullCycle> enumerate_full_cycles(const FlagComplex& x, int max_len);

/// A shortest induced cycle of length in [4, below), if one exists.
std::optional<FullCycle> shortest_full_cycle(const FlagComplex& x, Hops below = kInfinite);

/// Minimum length of a full cycle; kInfinite when there is none.
Hops systole(const FlagComplex& x);

struct CheckOptions {
  ScanOptions scan;
  std::size_t oracle_budget = 100'000;
};

/// sys(x) >= k and sys(link σ) >= k for every simplex σ.
Verdict is_k_large(const FlagComplex& x, int k);

/// Every link of a nonempty simplex is free of full cycles shorter than k.
/// On windows only simplices with all vertices trusted are examined.
Verdict is_locally_k_large(const Region& region, int k, const ScanOptions& scan = {});

Verdict triangle_condition(const Region& region, const ScanOptions& scan = {});
Verdict quadrangle_condition(const Region& region, const ScanOptions& scan = {});
Verdict is_weakly_modular(const Region& region, const ScanOptions& scan = {});

/// Full 4-cycles with every vertex trusted.
Verdict no_full_4_cycles(const Region& region);

/// Independent witness re-validation for TC / QC.
bool violates_triangle_condition(const FlagComplex& x, const TripleWitness& w);
bool violates_quadrangle_condition(const FlagComplex& x, const QuadrupleWitness& w);

/// Independent predicate for the extended 5-wheel invariants.
bool is_extended_wheel5(const FlagComplex& x, const ExtendedWheel5& w);

/// Every extended 5-wheel with all seven vertices trusted, canonicalized by
/// (center, lexicographically least rim orientation with the apex edge first,
/// apex) and sorted.
std::vector<ExtendedWheel5> find_extended_5_wheels(const Region& region);

/// A vertex outside the wheel adjacent to all seven of its vertices.
std::optional<VertexId> wheel_dominator(const FlagComplex& x, const ExtendedWheel5& w);

Verdict w5hat_condition(const Region& region);

/// SD_n(v). On windows requires n + 1 <= margin so that the spheres are exact.
Verdict sd_property(const Region& region, VertexId v, int n);

/// Independent check of an SD witness: the link of sigma inside B_i(center)
/// is empty or not a clique.
bool violates_sd(const FlagComplex& x, const SphereWitness& w);

/// SD_n(v) for every trusted v and every n up to eccentricity (windows:
/// n <= margin - 1).
Verdict sd_all(const Region& region, const ScanOptions& scan = {});

enum class WeakSystolicMode { Graph, Sd, Composite };

/// The three equivalent characterizations of weak systolicity, evaluated
/// independently.
struct Characterizations {
  Verdict graph;              // weakly modular, no full 4-cycle
  Verdict sd;                 // SD_n(v) for all v, n
  Verdict simply_connected;   // oracle (Unknown allowed)
  Verdict w5hat;
  Verdict no_full_4_cycles;
  Answer third = Answer::Unknown;  // simply connected ∧ Ŵ5 ∧ no full 4-cycle
  bool agree = true;               // every decisive answer is equal
};

Characterizations characterize_weakly_systolic(const Region& region, const CheckOptions& opts = {});

/// Throws InputError on a disconnected complex.
Verdict is_weakly_systolic(const Region& region, WeakSystolicMode mode = WeakSystolicMode::Graph,
                           const CheckOptions& opts = {});

struct SystolicReport {
  Verdict verdict;
  Verdict connected;
  Verdict simply_connected;
  Verdict locally_6_large;
};

/// Connected ∧ simply connected (oracle) ∧ locally 6-large.
SystolicReport is_systolic(const Region& region, const CheckOptions& opts = {});

}  // namespace wsys
