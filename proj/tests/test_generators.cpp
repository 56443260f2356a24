#include "brute.hpp"
#include "doctest.h"
#include "wsys/cli.hpp"
#include "wsys/generators.hpp"

using namespace wsys;

TEST_CASE("window sizes") {
  for (Hops r : {0, 1, 2, 5, 10}) {
    CHECK(triangular_lattice_window(r, 0).complex().size() == static_cast<std::size_t>(1 + 3 * r * (r + 1)));
  }
  CHECK(a_k_window(2, 8, 3).complex().size() == 33);
  CHECK(a_k(2, 5).size() == 11);
  CHECK(a_k(2, 5).edge_count() == 10 + 9);
}

TEST_CASE("lattice ids are row-major") {
  const auto w = triangular_lattice_window(2, 1);
  Coord prev{-100, -100};
  for (int i = 0; i < static_cast<int>(w.complex().size()); ++i) {
    const Coord c = w.coord(i);
    CHECK(std::pair(prev.r, prev.q) < std::pair(c.r, c.q));
    CHECK(w.id_at(c) == w.complex().id(i));
    prev = c;
  }
  CHECK(w.basepoint() == VertexId(9));
}

TEST_CASE("finite complexes") {
  CHECK(icosahedron().size() == 12);
  CHECK(icosahedron().edge_count() == 30);
  for (int i = 0; i < 12; ++i) CHECK(icosahedron().degree(i) == 5);
  const auto t = hex_torus(5, 4);
  CHECK(t.size() == 20);
  for (int i = 0; i < 20; ++i) CHECK(t.degree(i) == 6);
  CHECK_THROWS_AS(hex_torus(3, 4), InputError);
  CHECK(wheel(7).degree(0) == 7);
  CHECK(cone(cycle_graph(5)).size() == 6);
  CHECK(extended_wheel5(true).size() == 8);
  CHECK(extended_wheel5(true).degree(7) == 7);
  CHECK(complete_graph(6).edge_count() == 15);
}

TEST_CASE("generated maps are automorphisms") {
  const auto lat = triangular_lattice_window(6, 2);
  for (const auto& h : {lattice_translation(lat, 1), lattice_translation(lat, -2), lattice_glide(lat)}) {
    CHECK_FALSE(h.total());
    CHECK(validate_automorphism(lat.complex(), h).is_yes());
  }
  CHECK(lattice_glide(lat).image(*lat.id_at({0, 0})) == lat.id_at({1, 1}));
  const auto a3 = a_k_window(3, 4, 2);
  CHECK(validate_automorphism(a3.complex(), a_k_shift(a3, 1)).is_yes());
  CHECK(validate_automorphism(hex_torus(4, 4), hex_torus_translation(4, 4)).is_yes());
  CHECK(validate_automorphism(octahedron(), octahedron_antipodal()).is_yes());
  CHECK(validate_automorphism(cycle_graph(7), cycle_rotation(7, 3)).is_yes());
  for (const auto& name : generator_names()) {
    const auto file = generate_input(name);
    for (const auto& h : file.automorphisms) {
      INFO(name << " " << h.name());
      CHECK(validate_automorphism(file.complex, h).is_yes());
    }
  }
}

TEST_CASE("random flag complexes are reproducible") {
  const auto a = random_flag_complex(20, 0.3, 42);
  CHECK(a == random_flag_complex(20, 0.3, 42));
  CHECK_FALSE(a == random_flag_complex(20, 0.3, 43));
  CHECK(random_flag_complex(10, 0.0, 1).edge_count() == 0);
  CHECK(random_flag_complex(10, 1.0, 1).edge_count() == 45);
  // Draw for pair (i, j): top 53 bits of splitmix64(splitmix64(splitmix64(seed) ^ i) ^ j).
  const std::uint64_t seed = 42;
  for (int i = 0; i < 20; ++i) {
    for (int j = i + 1; j < 20; ++j) {
      const std::uint64_t h = splitmix64(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(i)) ^
                                         static_cast<std::uint64_t>(j));
      const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
      CHECK(a.adjacent(i, j) == (u < 0.3));
    }
  }
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}
