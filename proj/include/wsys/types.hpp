#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wsys {

/// Vertex label. Subcomplexes reuse the ids of their parent complex.
struct VertexId {
  std::uint32_t value = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

inline std::ostream& operator<<(std::ostream& os, VertexId v) { return os << v.value; }

/// Hop count in the 1-skeleton. `kInfinite` marks vertices in different components.
using Hops = std::int32_t;
inline constexpr Hops kInfinite = std::numeric_limits<Hops>::max();

std::string hops_to_string(Hops h);

/// Raised for malformed input (asymmetric adjacency, unknown vertex, non-clique simplex...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Nonempty, sorted, duplicate-free vertex set.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<VertexId> vertices);

  std::span<const VertexId> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  bool contains(VertexId v) const;
  bool is_face_of(const Simplex& other) const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<VertexId> vertices_;
};

enum class Answer { Yes, No, Unknown };

std::string_view to_string(Answer a);

// Witness shapes. Every No verdict carries one of these; each can be
// re-validated against the defining predicate independently of the scan
// that produced it.

/// A full (induced) cycle, optionally found inside the link of `ambient`.
struct CycleWitness {
  std::vector<VertexId> cycle;
  std::optional<Simplex> ambient;
};

/// A vertex set that is a clique but spans no simplex, or an invariant simplex.
struct SimplexWitness {
  Simplex simplex;
};

/// TC violation: d(v,w) = 1 < d(u,v) = d(u,w), no common neighbor closer to u.
struct TripleWitness {
  VertexId u, v, w;
};

/// QC violation.
struct QuadrupleWitness {
  VertexId u, v, w, z;
};

/// Full 5-wheel (center; rim) plus apex adjacent to rim[0], rim[1] only.
struct ExtendedWheel5 {
  VertexId center;
  std::array<VertexId, 5> rim;
  VertexId apex;

  std::vector<VertexId> vertices() const;
  friend auto operator<=>(const ExtendedWheel5&, const ExtendedWheel5&) = default;
};

struct WheelWitness {
  ExtendedWheel5 wheel;
};

/// SD_n(v) violation at level i for simplex sigma in S_{i+1}(center).
struct SphereWitness {
  VertexId center;
  int level = 0;
  Simplex sigma;
};

/// A vertex pair, e.g. a distance mismatch or an adjacency-breaking map pair.
struct PairWitness {
  VertexId u, v;
  Hops expected = 0;
  Hops actual = 0;
};

/// Integer-indexed pair on a path chain.
struct IndexPairWitness {
  std::int64_t a = 0, b = 0;
  Hops expected = 0;
  Hops actual = 0;
};

/// A single vertex (e.g. whose displacement exceeds the translation length).
struct VertexWitness {
  VertexId v;
  Hops value = 0;
};

using Witness = std::variant<CycleWitness, SimplexWitness, TripleWitness, QuadrupleWitness,
                             WheelWitness, SphereWitness, PairWitness, IndexPairWitness,
                             VertexWitness>;

/// Render a witness in the text vocabulary of the complex file format.
std::string describe(const Witness& w);

struct Verdict {
  Answer answer = Answer::Unknown;
  std::optional<Witness> witness;
  std::string note;

  static Verdict yes(std::string note = {}) { return {Answer::Yes, std::nullopt, std::move(note)}; }
  static Verdict no(Witness w, std::string note = {}) { return {Answer::No, std::move(w), std::move(note)}; }
  static Verdict unknown(std::string note = {}) {
    return {Answer::Unknown, std::nullopt, std::move(note)};
  }

  bool is_yes() const { return answer == Answer::Yes; }
  bool is_no() const { return answer == Answer::No; }
};

}  // namespace wsys

template <>
struct std::hash<wsys::VertexId> {
  std::size_t operator()(wsys::VertexId v) const noexcept { return std::hash<std::uint32_t>{}(v.value); }
};
