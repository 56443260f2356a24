#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "wsys/isometry.hpp"
#include "wsys/window.hpp"

namespace wsys {

// Periodic parents.

/// Triangular lattice in axial coordinates; neighbors (±1,0), (0,±1), (1,-1), (-1,1).
PeriodicParent triangular_lattice();
/// Hex distance between axial coordinates.
int hex_distance(Coord a, Coord b);
/// The line complex A_k: a ~ a' iff 0 < |a - a'| <= k (coordinates (a, 0)).
PeriodicParent a_k_line(int k);

/// B_R(origin) of the triangular lattice, 1 + 3R(R+1) vertices.
WindowView triangular_lattice_window(Hops radius, Hops margin);

/// Window of A_k with vertices -Rk..Rk (ids a + Rk) and basepoint 0.
WindowView a_k_window(int k, Hops radius, Hops margin);

/// Finite A_k on -N..N, ids a + N.
FlagComplex a_k(int k, int n);

/// Restriction of a coordinate map to the window: defined where the image
/// coordinate is realized.
Automorphism window_map(const WindowView& w, const std::function<Coord(Coord)>& f, std::string name);

/// Translation (q, r) -> (q + s, r). On A_k windows this is the shift a -> a + s.
Automorphism lattice_translation(const WindowView& w, int s);
/// Reflection in the mirror line q = r composed with the translation (1, 1)
/// along it: (q, r) -> (r + 1, q + 1). Its square is the translation (2, 2).
Automorphism lattice_glide(const WindowView& w);
/// Shift a -> a + s on an A_k window.
Automorphism a_k_shift(const WindowView& w, int s = 1);

/// Triangular lattice modulo (p, 0) and (0, q), p, q >= 4. Vertex (x, y) has id y*p + x.
FlagComplex hex_torus(int p, int q);
/// Torus translation (x, y) -> (x + 1, y).
Automorphism hex_torus_translation(int p, int q);

// Finite complexes.

/// Cross-polytope on 0..5 with antipodal pairs (0,1), (2,3), (4,5).
FlagComplex octahedron();
Automorphism octahedron_antipodal();
/// 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
FlagComplex icosahedron();
FlagComplex cycle_graph(int n);
Automorphism cycle_rotation(int n, int step = 1);
FlagComplex complete_graph(int n);
/// Center 0, rim 1..k in cyclic order.
FlagComplex wheel(int k);
/// Full 5-wheel (center 0, rim 1..5) with apex 6 on rim edge 1-2; the
/// dominated variant adds vertex 7 adjacent to all seven.
FlagComplex extended_wheel5(bool dominated);
/// New vertex (id one past the largest) adjacent to everything.
FlagComplex cone(const FlagComplex& x);

/// Counter-based draw: splitmix64 of (seed, i, j) compared against p.
FlagComplex random_flag_complex(int n, double edge_prob, std::uint64_t seed);

/// Raw splitmix64 finalizer, exposed so the scheme can be reproduced.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace wsys
