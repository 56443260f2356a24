#include "wsys/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wsys {

namespace {

constexpr Coord kHexSteps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};

FlagComplex from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<VertexId> ids;
  for (int i = 0; i < n; ++i) ids.emplace_back(static_cast<std::uint32_t>(i));
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return FlagComplex::from_local(std::move(ids), std::move(adj));
}

Automorphism from_permutation(const std::vector<int>& perm, std::string name) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    pairs.emplace_back(VertexId(static_cast<std::uint32_t>(i)), VertexId(static_cast<std::uint32_t>(perm[i])));
  }
  return Automorphism(std::move(pairs), true, std::move(name));
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

PeriodicParent triangular_lattice() {
  return {"triangular-lattice", [](Coord c) {
            std::vector<Coord> out;
            for (Coord s : kHexSteps) out.push_back({c.q + s.q, c.r + s.r});
            return out;
          }};
}

int hex_distance(Coord a, Coord b) {
  const int dq = a.q - b.q;
  const int dr = a.r - b.r;
  return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

PeriodicParent a_k_line(int k) {
  if (k < 1) throw InputError("A_k needs k >= 1");
  std::ostringstream name;
  name << "A" << k;
  return {name.str(), [k](Coord c) {
            std::vector<Coord> out;
            for (int s = 1; s <= k; ++s) {
              out.push_back({c.q - s, 0});
              out.push_back({c.q + s, 0});
            }
            return out;
          }};
}

WindowView triangular_lattice_window(Hops radius, Hops margin) {
  return realize_window(triangular_lattice(), {0, 0}, radius, margin);
}

WindowView a_k_window(int k, Hops radius, Hops margin) { return realize_window(a_k_line(k), {0, 0}, radius, margin); }

FlagComplex a_k(int k, int n) {
  if (k < 1 || n < 0) throw InputError("A_k needs k >= 1 and N >= 0");
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a <= 2 * n; ++a) {
    for (int b = a + 1; b <= std::min(2 * n, a + k); ++b) edges.emplace_back(a, b);
  }
  return from_edges(2 * n + 1, edges);
}

Automorphism window_map(const WindowView& w, const std::function<Coord(Coord)>& f, std::string name) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < static_cast<int>(w.complex().size()); ++i) {
    if (auto j = w.id_at(f(w.coord(i)))) pairs.emplace_back(w.complex().id(i), *j);
  }
  return Automorphism(std::move(pairs), false, std::move(name));
}

Automorphism lattice_translation(const WindowView& w, int s) {
  std::ostringstream name;
  name << "t" << s;
  return window_map(w, [s](Coord c) { return Coord{c.q + s, c.r}; }, name.str());
}

Automorphism lattice_glide(const WindowView& w) {
  return window_map(w, [](Coord c) { return Coord{c.r + 1, c.q + 1}; }, "glide");
}

Automorphism a_k_shift(const WindowView& w, int s) {
  std::ostringstream name;
  name << "shift" << s;
  return window_map(w, [s](Coord c) { return Coord{c.q + s, 0}; }, name.str());
}

FlagComplex hex_torus(int p, int q) {
  if (p < 4 || q < 4) throw InputError("hex_torus needs p, q >= 4");
  std::vector<std::pair<int, int>> edges;
  for (int y = 0; y < q; ++y) {
    for (int x = 0; x < p; ++x) {
      for (Coord s : kHexSteps) {
        const int nx = mod(x + s.q, p);
        const int ny = mod(y + s.r, q);
        edges.emplace_back(y * p + x, ny * p + nx);
      }
    }
  }
  return from_edges(p * q, edges);
}

Automorphism hex_torus_translation(int p, int q) {
  std::vector<int> perm(static_cast<std::size_t>(p * q));
  for (int y = 0; y < q; ++y) {
    for (int x = 0; x < p; ++x) perm[static_cast<std::size_t>(y * p + x)] = y * p + mod(x + 1, p);
  }
  return from_permutation(perm, "t1");
}

FlagComplex octahedron() {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      if (a / 2 != b / 2) edges.emplace_back(a, b);
    }
  }
  return from_edges(6, edges);
}

Automorphism octahedron_antipodal() { return from_permutation({1, 0, 3, 2, 5, 4}, "antipodal"); }

FlagComplex icosahedron() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    const int up = 1 + i, up_next = 1 + (i + 1) % 5;
    const int low = 6 + i, low_next = 6 + (i + 1) % 5;
    edges.emplace_back(0, up);
    edges.emplace_back(up, up_next);
    edges.emplace_back(11, low);
    edges.emplace_back(low, low_next);
    edges.emplace_back(up, low);
    edges.emplace_back(up, low_next);
  }
  return from_edges(12, edges);
}

FlagComplex cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return from_edges(n, edges);
}

Automorphism cycle_rotation(int n, int step) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = mod(i + step, n);
  std::ostringstream name;
  name << "rot" << step;
  return from_permutation(perm, name.str());
}

FlagComplex complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs a vertex");
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return from_edges(n, edges);
}

FlagComplex wheel(int k) {
  if (k < 3) throw InputError("wheel needs k >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % k + 1);
  }
  return from_edges(k + 1, edges);
}

FlagComplex extended_wheel5(bool dominated) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 5; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % 5 + 1);
  }
  edges.emplace_back(6, 1);
  edges.emplace_back(6, 2);
  if (dominated) {
    for (int i = 0; i <= 6; ++i) edges.emplace_back(7, i);
  }
  return from_edges(dominated ? 8 : 7, edges);
}

FlagComplex cone(const FlagComplex& x) {
  const std::uint32_t apex = x.empty() ? 0 : x.ids().back().value + 1;
  std::vector<VertexId> ids(x.ids().begin(), x.ids().end());
  ids.emplace_back(apex);
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<int>> adj;
  for (int i = 0; i < n; ++i) {
    auto nb = x.neighbors(i);
    adj.emplace_back(nb.begin(), nb.end());
    adj.back().push_back(n);
  }
  adj.emplace_back();
  for (int i = 0; i < n; ++i) adj.back().push_back(i);
  return FlagComplex::from_local(std::move(ids), std::move(adj));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

FlagComplex random_flag_complex(int n, double edge_prob, std::uint64_t seed) {
  if (n < 0 || !(edge_prob >= 0.0 && edge_prob <= 1.0)) throw InputError("need n >= 0 and 0 <= p <= 1");
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const std::uint64_t h =
          splitmix64(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(a)) ^ static_cast<std::uint64_t>(b));
      // Top 53 bits as a uniform double in [0, 1).
      const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
      if (u < edge_prob || edge_prob == 1.0) edges.emplace_back(a, b);
    }
  }
  return from_edges(n, edges);
}

}  // namespace wsys
