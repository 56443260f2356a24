#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "wsys/generators.hpp"
#include "wsys/mindisp.hpp"

using namespace wsys;

namespace {

std::vector<VertexId> ids(std::initializer_list<std::uint32_t> vs) {
  std::vector<VertexId> out;
  for (auto v : vs) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("embedding check catches non-isometric subcomplexes") {
  const Region x = Region::whole(wheel(6));
  SUBCASE("disconnected span") {
    const auto rep = isometric_embedding_check(x, Region::whole(span(wheel(6), ids({1, 4}))));
    CHECK(rep.pairs == 1);
    CHECK(rep.max_deviation == kInfinite);
    REQUIRE(rep.violation);
    CHECK(rep.verdict().is_no());
  }
  SUBCASE("rim path") {
    const auto rep = isometric_embedding_check(x, Region::whole(span(wheel(6), ids({1, 2, 3, 4}))));
    CHECK(rep.pairs == 6);
    CHECK(rep.max_deviation == 1);
    REQUIRE(rep.violation);
    const auto& w = *rep.violation;
    CHECK(distance(wheel(6), w.u, w.v) == w.expected);
    CHECK(distance(span(wheel(6), ids({1, 2, 3, 4})), w.u, w.v) == w.actual);
    CHECK(w.actual > w.expected);
    CHECK(rep.domination_holds);
  }
  SUBCASE("rejects non-full and foreign subcomplexes") {
    const auto path = FlagComplex::from_local(ids({1, 2, 3}), {{1}, {0}, {}});
    CHECK_THROWS_AS(isometric_embedding_check(x, Region::whole(path)), InputError);
    CHECK_THROWS_AS(isometric_embedding_check(x, Region::whole(span(cycle_graph(9), ids({7, 8})))), InputError);
  }
}

TEST_CASE("min_systolic_check on a full 4-cycle") {
  const auto c4 = span(octahedron(), ids({0, 1, 2, 3}));
  CHECK(c4.edge_count() == 4);
  const auto rep = min_systolic_check(Region::whole(c4));
  CHECK(rep.verdict.is_no());
  CHECK(rep.simply_connected.is_no());
}

TEST_CASE("lattice translation Min") {
  const auto lat = triangular_lattice_window(10, 4);
  const auto t = lattice_translation(lat, 1);
  const Region min = min_set(lat.region(), t);
  const auto rep = isometric_embedding_check(lat.region(), min);
  CHECK(rep.max_deviation == 0);
  CHECK(rep.pairs > 0);
  CHECK(rep.verdict().is_yes());
  CHECK(rep.pairs == isometric_embedding_check(lat.region(), min, ScanOptions{4}).pairs);
}

TEST_CASE("thick geodesic verification agrees with an explicit A_k") {
  const FlagComplex x = a_k(3, 12);  // ids a + 12
  const Region r = Region::whole(x);
  auto witness = [](int k, std::vector<std::uint32_t> vs) {
    ThickGeodesicWitness w;
    w.k = k;
    for (auto v : vs) w.vertices.emplace_back(v);
    return w;
  };
  auto local = [&](const ThickGeodesicWitness& w) {
    std::vector<int> out;
    for (VertexId v : w.vertices) out.push_back(x.require_index(v));
    return out;
  };

  std::vector<ThickGeodesicWitness> cases;
  std::vector<std::uint32_t> line;
  for (std::uint32_t a = 0; a < 25; ++a) line.push_back(a);
  cases.push_back(witness(3, line));
  cases.push_back(witness(2, line));
  cases.push_back(witness(4, line));
  cases.push_back(witness(3, {0, 1, 2, 4, 3, 5}));
  cases.push_back(witness(3, {0, 1, 2, 2}));
  std::vector<std::uint32_t> stride;
  for (std::uint32_t a = 0; a < 25; a += 3) stride.push_back(a);
  cases.push_back(witness(1, stride));
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    std::vector<std::uint32_t> vs(line.begin(), line.begin() + 8);
    std::shuffle(vs.begin(), vs.end(), rng);
    cases.push_back(witness(1 + t % 3, vs));
  }
  for (const auto& w : cases) {
    CHECK(verify_thick_geodesic(r, w).is_yes() == brute::a_k_embedding_holds(x, w.k, local(w)));
  }
  CHECK(verify_thick_geodesic(r, cases[0]).is_yes());
  CHECK(verify_thick_geodesic(r, cases[5]).is_yes());
  CHECK_THROWS_AS(verify_thick_geodesic(r, witness(0, {0, 1})), InputError);
}

TEST_CASE("dichotomy") {
  SUBCASE("elliptic") {
    const auto w = wheel(6);
    const auto d = dichotomy_report(Region::whole(w), all_automorphisms(w)[1]);
    CHECK(d.classification.kind == Classification::Kind::Elliptic);
    CHECK(d.verdict.is_yes());
    CHECK(std::holds_alternative<SimplexWitness>(*d.verdict.witness));
  }
  SUBCASE("A_2 shift") {
    const auto a2 = a_k_window(2, 8, 3);
    const auto d = dichotomy_report(a2.region(), a_k_shift(a2));
    CHECK(d.verdict.is_yes());
    REQUIRE(d.thick);
    CHECK(d.thick->k == 2);
    CHECK(verify_thick_geodesic(a2.region(), *d.thick).is_yes());
  }
  SUBCASE("lattice translation") {
    const auto lat = triangular_lattice_window(10, 4);
    const auto d = dichotomy_report(lat.region(), lattice_translation(lat, 1));
    CHECK(d.verdict.is_yes());
    REQUIRE(d.thick);
    CHECK(d.thick->k == 1);
  }
}

TEST_CASE("invariant geodesic search") {
  const auto a2 = a_k_window(2, 8, 3);
  const auto h = a_k_shift(a2);
  const VertexId start = a2.basepoint();
  const auto n1 = invariant_geodesic_search(a2.region(), h, 1, start);
  CHECK(n1.verdict.answer == Answer::Unknown);
  const auto n2 = invariant_geodesic_search(a2.region(), h, 2, start);
  CHECK(n2.verdict.is_yes());
  REQUIRE(n2.chain);
  CHECK(verify_lh_geodesic(a2.region(), *n2.chain, 100).is_yes());
  CHECK_THROWS_AS(invariant_geodesic_search(a2.region(), h, 0, start), InputError);
}

TEST_CASE("wheel domination inside Min") {
  const auto lat = triangular_lattice_window(10, 4);
  const auto t = lattice_translation(lat, 1);
  const Region min = min_set(lat.region(), t);
  const auto rep = wheel_domination_in_min(lat.region(), min);
  CHECK(rep.verdict.is_yes());
  CHECK(rep.wheels.empty());

  const Region ico = Region::whole(icosahedron());
  CHECK(wheel_domination_in_min(ico, ico).verdict.is_no());
}
