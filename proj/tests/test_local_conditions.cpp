#include <set>

#include "brute.hpp"
#include "doctest.h"
#include "wsys/generators.hpp"
#include "wsys/local_conditions.hpp"

using namespace wsys;

namespace {

std::set<std::vector<VertexId>> as_sets(const std::vector<FullCycle>& cycles) {
  std::set<std::vector<VertexId>> out;
  for (auto c : cycles) {
    std::sort(c.vertices.begin(), c.vertices.end());
    out.insert(c.vertices);
  }
  return out;
}

std::vector<FlagComplex> small_corpus() {
  std::vector<FlagComplex> out = {octahedron(),      icosahedron(),           cycle_graph(4), cycle_graph(5),
                                  cycle_graph(6),    wheel(6),                wheel(5),       complete_graph(4),
                                  cone(cycle_graph(6)), extended_wheel5(false), extended_wheel5(true)};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) out.push_back(random_flag_complex(12, 0.35, seed));
  return out;
}

}  // namespace

TEST_CASE("canonical cycles") {
  const auto c = canonical_cycle({VertexId(5), VertexId(2), VertexId(9), VertexId(4)});
  CHECK(c.vertices == std::vector<VertexId>{VertexId(2), VertexId(5), VertexId(4), VertexId(9)});
  const auto x = cycle_graph(5);
  CHECK(is_full_cycle(x, std::vector<VertexId>{VertexId(0), VertexId(1), VertexId(2), VertexId(3), VertexId(4)}));
  CHECK_FALSE(is_full_cycle(x, std::vector<VertexId>{VertexId(0), VertexId(1), VertexId(2)}));
  CHECK_FALSE(is_full_cycle(wheel(5), std::vector<VertexId>{VertexId(0), VertexId(1), VertexId(2), VertexId(3)}));
}

TEST_CASE("full cycle enumeration agrees with subset search") {
  for (const auto& x : small_corpus()) {
    const auto got = enumerate_full_cycles(x, static_cast<int>(x.size()));
    const auto want = brute::induced_cycle_sets(x, static_cast<int>(x.size()));
    CHECK(as_sets(got) == want);
    CHECK(got.size() == want.size());
    for (const auto& c : got) CHECK(is_full_cycle(x, c.vertices));
    std::size_t shortest = 0;
    for (const auto& c : want) shortest = shortest == 0 ? c.size() : std::min(shortest, c.size());
    CHECK(systole(x) == (want.empty() ? kInfinite : static_cast<Hops>(shortest)));
  }
}

TEST_CASE("systole and k-large") {
  CHECK(systole(octahedron()) == 4);
  CHECK(systole(icosahedron()) == 5);
  CHECK(systole(complete_graph(5)) == kInfinite);
  const auto v = is_k_large(icosahedron(), 6);
  REQUIRE(v.is_no());
  const auto& w = std::get<CycleWitness>(*v.witness);
  CHECK(w.cycle.size() == 5);
  CHECK(is_full_cycle(w.ambient ? link(icosahedron(), *w.ambient) : icosahedron(), w.cycle));
  CHECK(is_k_large(icosahedron(), 5).is_yes());
  CHECK(is_k_large(cycle_graph(6), 6).is_yes());
  CHECK(is_k_large(cycle_graph(6), 7).is_no());
}

TEST_CASE("locally k-large") {
  CHECK(is_locally_k_large(Region::whole(hex_torus(4, 4)), 6).is_yes());
  CHECK(is_locally_k_large(Region::whole(icosahedron()), 6).is_no());
  CHECK(is_locally_k_large(Region::whole(icosahedron()), 5).is_yes());
  const auto oct = is_locally_k_large(Region::whole(octahedron()), 5);
  REQUIRE(oct.is_no());
  const auto& w = std::get<CycleWitness>(*oct.witness);
  REQUIRE(w.ambient);
  CHECK(is_full_cycle(link(octahedron(), *w.ambient), w.cycle));
}

TEST_CASE("TC and QC agree with the definition") {
  for (const auto& x : small_corpus()) {
    const Region r = Region::whole(x);
    const auto tc = triangle_condition(r);
    const auto qc = quadrangle_condition(r);
    CHECK(tc.is_yes() == brute::tc_holds(x));
    CHECK(qc.is_yes() == brute::qc_holds(x));
    if (tc.is_no()) CHECK(violates_triangle_condition(x, std::get<TripleWitness>(*tc.witness)));
    if (qc.is_no()) CHECK(violates_quadrangle_condition(x, std::get<QuadrupleWitness>(*qc.witness)));
  }
  // Hexagon: no edge is at equal distance from a third vertex, QC fails across.
  CHECK(triangle_condition(Region::whole(cycle_graph(6))).is_yes());
  CHECK(quadrangle_condition(Region::whole(cycle_graph(6))).is_no());
}

TEST_CASE("full 4-cycles") {
  const auto v = no_full_4_cycles(Region::whole(octahedron()));
  REQUIRE(v.is_no());
  CHECK(is_full_cycle(octahedron(), std::get<CycleWitness>(*v.witness).cycle));
  CHECK(no_full_4_cycles(Region::whole(icosahedron())).is_yes());
}

TEST_CASE("extended 5-wheels and domination") {
  const Region bare = Region::whole(extended_wheel5(false));
  const auto wheels = find_extended_5_wheels(bare);
  REQUIRE(wheels.size() == 1);
  const auto& w = wheels.front();
  CHECK(w.center == VertexId(0));
  CHECK(w.apex == VertexId(6));
  CHECK(is_extended_wheel5(bare.complex(), w));
  CHECK_FALSE(wheel_dominator(bare.complex(), w));
  const auto v = w5hat_condition(bare);
  REQUIRE(v.is_no());
  CHECK(std::get<WheelWitness>(*v.witness).wheel == w);

  const Region dom = Region::whole(extended_wheel5(true));
  const auto dw = find_extended_5_wheels(dom);
  REQUIRE(!dw.empty());
  for (const auto& e : dw) {
    CHECK(is_extended_wheel5(dom.complex(), e));
    CHECK(wheel_dominator(dom.complex(), e).has_value());
  }
  CHECK(w5hat_condition(dom).is_yes());
  // Icosahedron: apex across a rim edge is adjacent to nothing else of the wheel.
  CHECK(w5hat_condition(Region::whole(icosahedron())).is_no());
}

TEST_CASE("SD property") {
  const Region oct = Region::whole(octahedron());
  const auto v = sd_property(oct, VertexId(0), 1);
  REQUIRE(v.is_no());
  CHECK(violates_sd(octahedron(), std::get<SphereWitness>(*v.witness)));
  CHECK(sd_all(Region::whole(wheel(6))).is_yes());
  CHECK(sd_all(Region::whole(cone(cycle_graph(7)))).is_yes());
  CHECK(sd_all(Region::whole(cycle_graph(4))).is_no());

  const auto lat = triangular_lattice_window(8, 4);
  CHECK(sd_all(lat.region()).is_yes());
  CHECK_THROWS_AS(sd_property(lat.region(), lat.basepoint(), 4), InputError);
}

TEST_CASE("characterizations agree") {
  for (const auto& x : small_corpus()) {
    if (!x.is_connected()) {
      CHECK_THROWS_AS(is_weakly_systolic(Region::whole(x)), InputError);
      continue;
    }
    const auto c = characterize_weakly_systolic(Region::whole(x));
    CHECK(c.agree);
    CHECK(c.graph.answer == c.sd.answer);
    if (c.third != Answer::Unknown) CHECK(c.third == c.graph.answer);
  }
  CHECK(is_weakly_systolic(Region::whole(octahedron())).is_no());
  CHECK(is_weakly_systolic(Region::whole(wheel(6)), WeakSystolicMode::Sd).is_yes());
  CHECK(is_weakly_systolic(Region::whole(extended_wheel5(false)), WeakSystolicMode::Composite).is_no());
}

TEST_CASE("systolic") {
  const auto torus = is_systolic(Region::whole(hex_torus(4, 4)));
  CHECK(torus.locally_6_large.is_yes());
  CHECK(torus.simply_connected.is_no());
  CHECK(torus.verdict.is_no());
  CHECK(is_systolic(Region::whole(wheel(6))).verdict.is_yes());
  CHECK(is_systolic(Region::whole(octahedron())).verdict.is_no());
}

TEST_CASE("parallel scans return the sequential witness") {
  const auto x = random_flag_complex(40, 0.15, 3);
  const Region r = Region::whole(x);
  for (unsigned jobs : {2u, 4u, 8u}) {
    const ScanOptions scan{jobs};
    const auto a = triangle_condition(r), b = triangle_condition(r, scan);
    CHECK(a.answer == b.answer);
    if (a.witness) CHECK(describe(*a.witness) == describe(*b.witness));
    const auto c = quadrangle_condition(r), d = quadrangle_condition(r, scan);
    CHECK(c.answer == d.answer);
    if (c.witness) CHECK(describe(*c.witness) == describe(*d.witness));
  }
}
