#include "wsys/local_conditions.hpp"

#include <algorithm>
#include <set>

#include "wsys/homology.hpp"

namespace wsys {

FullCycle canonical_cycle(std::vector<VertexId> cycle) {
  auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return FullCycle{std::move(cycle)};
}

bool is_full_cycle(const FlagComplex& x, std::span<const VertexId> cycle) {
  const std::size_t n = cycle.size();
  if (n < 4) return false;
  std::vector<int> local;
  for (VertexId v : cycle) {
    auto i = x.index_of(v);
    if (!i) return false;
    local.push_back(*i);
  }
  std::vector<int> sorted = local;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool consecutive = (b == a + 1) || (a == 0 && b == n - 1);
      if (x.adjacent(local[a], local[b]) != consecutive) return false;
    }
  }
  return true;
}

namespace {

// Extends induced paths from `path[0]` (the least vertex of every reported cycle).
void extend_induced(const FlagComplex& x, std::vector<int>& path, std::vector<char>& on_path, int max_len,
                    std::vector<FullCycle>& out) {
  const int start = path.front();
  const int tip = path.back();
  for (int next : x.neighbors(tip)) {
    if (next <= start || on_path[static_cast<std::size_t>(next)]) continue;
    bool chord = false;
    for (std::size_t k = 1; k + 1 < path.size(); ++k) {
      if (x.adjacent(next, path[k])) {
        chord = true;
        break;
      }
    }
    if (chord) continue;
    const bool closes = path.size() >= 2 && x.adjacent(next, start);
    const auto length = static_cast<int>(path.size()) + 1;
    if (closes) {
      // A triangle (length 3) closes too early; either way `next` cannot extend.
      if (length >= 4 && length <= max_len && path[1] < next) {
        std::vector<VertexId> ids = x.to_ids(path);
        ids.push_back(x.id(next));
        out.push_back(FullCycle{std::move(ids)});
      }
      continue;
    }
    if (length >= max_len) continue;
    path.push_back(next);
    on_path[static_cast<std::size_t>(next)] = 1;
    extend_induced(x, path, on_path, max_len, out);
    on_path[static_cast<std::size_t>(next)] = 0;
    path.pop_back();
  }
}

}  // namespace

std::vector<FullCycle> enumerate_full_cycles(const FlagComplex& x, int max_len) {
  if (max_len < 4) throw InputError("max_len must be at least 4");
  std::vector<FullCycle> out;
  std::vector<char> on_path(x.size(), 0);
  for (int s = 0; s < static_cast<int>(x.size()); ++s) {
    std::vector<int> path{s};
    on_path[static_cast<std::size_t>(s)] = 1;
    extend_induced(x, path, on_path, max_len, out);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  std::sort(out.begin(), out.end(), [](const FullCycle& a, const FullCycle& b) {
    return std::make_pair(a.length(), a.vertices) < std::make_pair(b.length(), b.vertices);
  });
  return out;
}

std::optional<FullCycle> shortest_full_cycle(const FlagComplex& x, Hops below) {
  // A shortest hole through b with b's hole-neighbors a, c is b + a shortest
  // a-c path whose interior avoids N[b].
  Hops best = below;
  std::optional<FullCycle> found;
  const auto n = x.size();
  std::vector<Hops> dist(n);
  std::vector<int> parent(n);
  std::vector<char> blocked(n, 0);
  std::vector<int> queue;
  for (int b = 0; b < static_cast<int>(n); ++b) {
    if (best != kInfinite && best <= 4) break;
    blocked[static_cast<std::size_t>(b)] = 1;
    for (int w : x.neighbors(b)) blocked[static_cast<std::size_t>(w)] = 1;
    for (int a : x.neighbors(b)) {
      const Hops limit = best == kInfinite ? kInfinite : best - 3;
      if (limit < 2) break;
      std::fill(dist.begin(), dist.end(), kInfinite);
      queue.assign(1, a);
      dist[static_cast<std::size_t>(a)] = 0;
      int hit = -1;
      for (std::size_t h = 0; h < queue.size() && hit < 0; ++h) {
        const int v = queue[h];
        const Hops dv = dist[static_cast<std::size_t>(v)];
        if (dv >= limit) break;
        for (int w : x.neighbors(v)) {
          if (dist[static_cast<std::size_t>(w)] != kInfinite || w == b) continue;
          if (blocked[static_cast<std::size_t>(w)]) {
            // Terminal: another neighbor of b, usable as c when not adjacent to a.
            if (v != a && !x.adjacent(a, w)) {
              dist[static_cast<std::size_t>(w)] = dv + 1;
              parent[static_cast<std::size_t>(w)] = v;
              hit = w;
              break;
            }
            continue;
          }
          dist[static_cast<std::size_t>(w)] = dv + 1;
          parent[static_cast<std::size_t>(w)] = v;
          queue.push_back(w);
        }
      }
      if (hit < 0) continue;
      const Hops length = dist[static_cast<std::size_t>(hit)] + 2;
      if (length >= best) continue;
      best = length;
      std::vector<VertexId> cycle{x.id(b)};
      for (int v = hit; v != a; v = parent[static_cast<std::size_t>(v)]) cycle.push_back(x.id(v));
      cycle.push_back(x.id(a));
      found = canonical_cycle(std::move(cycle));
    }
    blocked[static_cast<std::size_t>(b)] = 0;
    for (int w : x.neighbors(b)) blocked[static_cast<std::size_t>(w)] = 0;
  }
  return found;
}

Hops systole(const FlagComplex& x) {
  auto c = shortest_full_cycle(x);
  return c ? static_cast<Hops>(c->length()) : kInfinite;
}

Verdict is_k_large(const FlagComplex& x, int k) {
  if (k < 4) throw InputError("k must be at least 4");
  if (auto c = shortest_full_cycle(x, k)) {
    return Verdict::no(CycleWitness{std::move(c->vertices), std::nullopt}, "full cycle in the complex");
  }
  std::optional<Verdict> result;
  for_each_simplex(x, [&](std::span<const int> s) {
    const FlagComplex lk = link_local(x, s);
    if (auto c = shortest_full_cycle(lk, k)) {
      result = Verdict::no(CycleWitness{std::move(c->vertices), Simplex(x.to_ids(s))}, "full cycle in a link");
      return false;
    }
    return true;
  });
  return result ? *result : Verdict::yes();
}

Verdict is_locally_k_large(const Region& region, int k, const ScanOptions& scan) {
  if (k < 4) throw InputError("k must be at least 4");
  const FlagComplex& x = region.complex();
  auto trusted = region.trusted_vertices();
  auto hit = first_witness(trusted.size(), scan, [&](std::size_t idx) -> std::optional<CycleWitness> {
    const int v = trusted[idx];
    std::optional<CycleWitness> w;
    std::vector<int> current{v};
    std::vector<int> candidates;
    for (int u : x.neighbors(v)) {
      if (u > v && region.trusted(u)) candidates.push_back(u);
    }
    auto visit = [&](std::span<const int> s) {
      const FlagComplex lk = link_local(x, s);
      if (auto c = shortest_full_cycle(lk, k)) {
        w = CycleWitness{std::move(c->vertices), Simplex(x.to_ids(s))};
        return false;
      }
      return true;
    };
    detail::extend_cliques(x, current, candidates, visit);
    return w;
  });
  if (hit) return Verdict::no(std::move(hit->second), "full cycle in a link");
  return Verdict::yes(region.is_window() ? "trusted region" : "");
}

namespace {

bool has_closer_common_neighbor(const FlagComplex& x, std::span<const Hops> from_u, int v, int w, Hops want) {
  for (int c : x.neighbors(v)) {
    if (from_u[static_cast<std::size_t>(c)] == want && x.adjacent(c, w)) return true;
  }
  return false;
}

std::string region_note(const Region& region) { return region.is_window() ? "trusted region" : ""; }

}  // namespace

Verdict triangle_condition(const Region& region, const ScanOptions& scan) {
  const FlagComplex& x = region.complex();
  const auto edges = x.edges();
  auto trusted = region.trusted_vertices();
  auto hit = first_witness(trusted.size(), scan, [&](std::size_t idx) -> std::optional<TripleWitness> {
    const int u = trusted[idx];
    std::vector<Hops> scratch;
    auto from_u = region.distances().row(u, scratch);
    for (const auto& [v, w] : edges) {
      const Hops k = from_u[static_cast<std::size_t>(v)];
      if (k < 2 || k == kInfinite || from_u[static_cast<std::size_t>(w)] != k) continue;
      if (!region.trusted_pair(u, v, k) || !region.trusted_pair(u, w, k)) continue;
      if (!has_closer_common_neighbor(x, from_u, v, w, k - 1)) return TripleWitness{x.id(u), x.id(v), x.id(w)};
    }
    return std::nullopt;
  });
  if (hit) return Verdict::no(hit->second, "triangle condition fails");
  return Verdict::yes(region_note(region));
}

Verdict quadrangle_condition(const Region& region, const ScanOptions& scan) {
  const FlagComplex& x = region.complex();
  auto trusted = region.trusted_vertices();
  auto hit = first_witness(trusted.size(), scan, [&](std::size_t idx) -> std::optional<QuadrupleWitness> {
    const int u = trusted[idx];
    std::vector<Hops> scratch;
    auto from_u = region.distances().row(u, scratch);
    for (int z = 0; z < static_cast<int>(x.size()); ++z) {
      const Hops kz = from_u[static_cast<std::size_t>(z)];
      if (kz == kInfinite || kz < 3 || !region.trusted_pair(u, z, kz)) continue;
      const Hops k = kz - 1;
      auto nz = x.neighbors(z);
      for (std::size_t a = 0; a < nz.size(); ++a) {
        const int v = nz[a];
        if (from_u[static_cast<std::size_t>(v)] != k || !region.trusted(v)) continue;
        for (std::size_t b = a + 1; b < nz.size(); ++b) {
          const int w = nz[b];
          if (from_u[static_cast<std::size_t>(w)] != k || !region.trusted(w) || x.adjacent(v, w)) continue;
          if (!has_closer_common_neighbor(x, from_u, v, w, k - 1)) {
            return QuadrupleWitness{x.id(u), x.id(v), x.id(w), x.id(z)};
          }
        }
      }
    }
    return std::nullopt;
  });
  if (hit) return Verdict::no(hit->second, "quadrangle condition fails");
  return Verdict::yes(region_note(region));
}

Verdict is_weakly_modular(const Region& region, const ScanOptions& scan) {
  auto tc = triangle_condition(region, scan);
  if (!tc.is_yes()) return tc;
  return quadrangle_condition(region, scan);
}

Verdict no_full_4_cycles(const Region& region) {
  auto trusted = region.trusted_vertices();
  const FlagComplex sub = region.complex().induced(trusted);
  if (auto c = shortest_full_cycle(sub, 5)) {
    return Verdict::no(CycleWitness{std::move(c->vertices), std::nullopt}, "full 4-cycle");
  }
  return Verdict::yes(region_note(region));
}

bool violates_triangle_condition(const FlagComplex& x, const TripleWitness& t) {
  auto u = x.index_of(t.u), v = x.index_of(t.v), w = x.index_of(t.w);
  if (!u || !v || !w) return false;
  std::vector<Hops> d;
  bfs_distances(x, *u, d);
  const Hops k = d[static_cast<std::size_t>(*v)];
  if (!x.adjacent(*v, *w) || k < 2 || k == kInfinite || d[static_cast<std::size_t>(*w)] != k) return false;
  for (int c = 0; c < static_cast<int>(x.size()); ++c) {
    if (x.adjacent(c, *v) && x.adjacent(c, *w) && d[static_cast<std::size_t>(c)] == k - 1) return false;
  }
  return true;
}

bool violates_quadrangle_condition(const FlagComplex& x, const QuadrupleWitness& q) {
  auto u = x.index_of(q.u), v = x.index_of(q.v), w = x.index_of(q.w), z = x.index_of(q.z);
  if (!u || !v || !w || !z) return false;
  std::vector<Hops> d;
  bfs_distances(x, *u, d);
  std::vector<Hops> dv;
  bfs_distances(x, *v, dv);
  const Hops k = d[static_cast<std::size_t>(*v)];
  if (!x.adjacent(*v, *z) || !x.adjacent(*w, *z) || dv[static_cast<std::size_t>(*w)] != 2) return false;
  if (k == kInfinite || k < 2 || d[static_cast<std::size_t>(*w)] != k || d[static_cast<std::size_t>(*z)] != k + 1) {
    return false;
  }
  for (int c = 0; c < static_cast<int>(x.size()); ++c) {
    if (x.adjacent(c, *v) && x.adjacent(c, *w) && d[static_cast<std::size_t>(c)] == k - 1) return false;
  }
  return true;
}

bool is_extended_wheel5(const FlagComplex& x, const ExtendedWheel5& w) {
  std::vector<VertexId> rim(w.rim.begin(), w.rim.end());
  if (!is_full_cycle(x, rim)) return false;
  for (VertexId r : rim) {
    if (!x.adjacent_ids(w.center, r)) return false;
  }
  const auto all = w.vertices();
  std::vector<VertexId> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (x.adjacent_ids(w.apex, w.center)) return false;
  if (!x.adjacent_ids(w.apex, w.rim[0]) || !x.adjacent_ids(w.apex, w.rim[1])) return false;
  for (std::size_t k = 2; k < 5; ++k) {
    if (x.adjacent_ids(w.apex, w.rim[k])) return false;
  }
  return true;
}

std::vector<ExtendedWheel5> find_extended_5_wheels(const Region& region) {
  const FlagComplex& x = region.complex();
  std::set<ExtendedWheel5> found;
  for (int c : region.trusted_vertices()) {
    const FlagComplex lk = link_local(x, std::array{c});
    for (const FullCycle& cyc : enumerate_full_cycles(lk, 5)) {
      if (cyc.length() != 5) continue;
      std::array<int, 5> rim{};
      bool all_trusted = true;
      for (std::size_t k = 0; k < 5; ++k) {
        rim[k] = x.require_index(cyc.vertices[k]);
        all_trusted = all_trusted && region.trusted(rim[k]);
      }
      if (!all_trusted) continue;
      for (std::size_t e = 0; e < 5; ++e) {
        const int p = rim[e];
        const int q = rim[(e + 1) % 5];
        for (int a : x.neighbors(p)) {
          if (a == c || !x.adjacent(a, q) || x.adjacent(a, c) || !region.trusted(a)) continue;
          bool clean = true;
          for (std::size_t k = 0; k < 5 && clean; ++k) {
            if (rim[k] == a) clean = false;
            if (k != e && k != (e + 1) % 5 && x.adjacent(a, rim[k])) clean = false;
          }
          if (!clean) continue;
          // Both orientations that put the apex edge first.
          std::array<VertexId, 5> forward{}, backward{};
          for (std::size_t k = 0; k < 5; ++k) {
            forward[k] = x.id(rim[(e + k) % 5]);
            backward[k] = x.id(rim[(e + 1 + 5 - k) % 5]);
          }
          found.insert(ExtendedWheel5{x.id(c), std::min(forward, backward), x.id(a)});
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

std::optional<VertexId> wheel_dominator(const FlagComplex& x, const ExtendedWheel5& w) {
  const auto all = w.vertices();
  const int c = x.require_index(w.center);
  for (int v : x.neighbors(c)) {
    const VertexId id = x.id(v);
    if (std::find(all.begin(), all.end(), id) != all.end()) continue;
    bool dominates = true;
    for (VertexId t : all) {
      if (!x.adjacent_ids(id, t)) {
        dominates = false;
        break;
      }
    }
    if (dominates) return id;
  }
  return std::nullopt;
}

Verdict w5hat_condition(const Region& region) {
  for (const auto& w : find_extended_5_wheels(region)) {
    if (!wheel_dominator(region.complex(), w)) return Verdict::no(WheelWitness{w}, "undominated extended 5-wheel");
  }
  return Verdict::yes(region_note(region));
}

namespace {

// SD check at one vertex for levels 0..max_level (inclusive). nullopt = holds.
std::optional<SphereWitness> sd_scan(const Region& region, int v, int max_level) {
  const FlagComplex& x = region.complex();
  std::vector<Hops> scratch;
  auto from_v = region.distances().row(v, scratch);
  for (int i = 0; i <= max_level; ++i) {
    std::vector<int> sphere;
    for (int y = 0; y < static_cast<int>(x.size()); ++y) {
      if (from_v[static_cast<std::size_t>(y)] == i + 1) sphere.push_back(y);
    }
    if (sphere.empty()) break;
    const FlagComplex shell = x.induced(sphere);
    std::optional<SphereWitness> bad;
    for_each_simplex(shell, [&](std::span<const int> s) {
      std::vector<int> sigma;
      for (int k : s) sigma.push_back(sphere[static_cast<std::size_t>(k)]);
      std::vector<int> below;
      for (int y : x.neighbors(sigma[0])) {
        if (from_v[static_cast<std::size_t>(y)] != i) continue;
        bool all = true;
        for (std::size_t k = 1; k < sigma.size() && all; ++k) all = x.adjacent(y, sigma[k]);
        if (all) below.push_back(y);
      }
      if (below.empty() || !x.is_clique(below)) {
        bad = SphereWitness{x.id(v), i, Simplex(x.to_ids(sigma))};
        return false;
      }
      return true;
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

int sd_level_bound(const Region& region) {
  return region.margin() == kInfinite ? std::numeric_limits<int>::max() - 1 : region.margin() - 1;
}

}  // namespace

Verdict sd_property(const Region& region, VertexId v, int n) {
  const int i = region.complex().require_index(v);
  if (n < 0) throw InputError("n must be non-negative");
  if (region.is_window() && (!region.trusted(i) || n > sd_level_bound(region))) {
    throw InputError("SD on a window needs a trusted vertex and n + 1 <= margin");
  }
  if (auto w = sd_scan(region, i, n)) return Verdict::no(std::move(*w), "SD fails");
  return Verdict::yes(region_note(region));
}

bool violates_sd(const FlagComplex& x, const SphereWitness& w) {
  auto c = x.index_of(w.center);
  if (!c) return false;
  std::vector<Hops> d;
  bfs_distances(x, *c, d);
  std::vector<int> sigma;
  for (VertexId s : w.sigma.vertices()) {
    auto i = x.index_of(s);
    if (!i || d[static_cast<std::size_t>(*i)] != w.level + 1) return false;
    sigma.push_back(*i);
  }
  if (!x.is_clique(sigma)) return false;
  std::vector<int> link_in_ball;
  for (int y = 0; y < static_cast<int>(x.size()); ++y) {
    if (d[static_cast<std::size_t>(y)] > w.level) continue;
    if (std::all_of(sigma.begin(), sigma.end(), [&](int s) { return x.adjacent(y, s); })) link_in_ball.push_back(y);
  }
  return link_in_ball.empty() || !x.is_clique(link_in_ball);
}

Verdict sd_all(const Region& region, const ScanOptions& scan) {
  auto trusted = region.trusted_vertices();
  const int bound = sd_level_bound(region);
  auto hit = first_witness(trusted.size(), scan,
                           [&](std::size_t idx) { return sd_scan(region, trusted[idx], bound); });
  if (hit) return Verdict::no(std::move(hit->second), "SD fails");
  return Verdict::yes(region_note(region));
}

namespace {

void require_connected(const Region& region) {
  if (region.complex().empty() || !region.complex().is_connected()) {
    throw InputError("weak systolicity is defined for connected flag complexes");
  }
}

Verdict graph_mode(const Region& region, const Verdict& nf4, const ScanOptions& scan) {
  if (!nf4.is_yes()) return nf4;
  return is_weakly_modular(region, scan);
}

}  // namespace

Characterizations characterize_weakly_systolic(const Region& region, const CheckOptions& opts) {
  require_connected(region);
  Characterizations c;
  c.no_full_4_cycles = no_full_4_cycles(region);
  c.graph = graph_mode(region, c.no_full_4_cycles, opts.scan);
  c.sd = sd_all(region, opts.scan);
  c.simply_connected = simple_connectivity_oracle(region.complex(), opts.oracle_budget);
  c.w5hat = w5hat_condition(region);
  if (c.simply_connected.is_no() || c.w5hat.is_no() || c.no_full_4_cycles.is_no()) {
    c.third = Answer::No;
  } else if (c.simply_connected.answer == Answer::Unknown) {
    c.third = Answer::Unknown;
  } else {
    c.third = Answer::Yes;
  }
  c.agree = c.graph.answer == c.sd.answer && (c.third == Answer::Unknown || c.third == c.graph.answer);
  return c;
}

Verdict is_weakly_systolic(const Region& region, WeakSystolicMode mode, const CheckOptions& opts) {
  require_connected(region);
  switch (mode) {
    case WeakSystolicMode::Graph:
      return graph_mode(region, no_full_4_cycles(region), opts.scan);
    case WeakSystolicMode::Sd:
      return sd_all(region, opts.scan);
    case WeakSystolicMode::Composite: {
      auto c = characterize_weakly_systolic(region, opts);
      std::string note = "graph=" + std::string(to_string(c.graph.answer)) +
                         " sd=" + std::string(to_string(c.sd.answer)) +
                         " simply-connected+w5hat+no-4-cycle=" + std::string(to_string(c.third));
      if (!c.agree) return Verdict::unknown("characterizations disagree: " + note);
      Verdict v = c.graph;
      v.note = note;
      return v;
    }
  }
  return Verdict::unknown();
}

SystolicReport is_systolic(const Region& region, const CheckOptions& opts) {
  SystolicReport r;
  const FlagComplex& x = region.complex();
  if (!x.empty() && x.is_connected()) {
    r.connected = Verdict::yes();
  } else if (x.empty()) {
    r.connected = Verdict{Answer::No, std::nullopt, "empty complex"};
  } else {
    const auto labels = x.component_labels();
    int other = 0;
    while (labels[static_cast<std::size_t>(other)] == labels[0]) ++other;
    r.connected = Verdict::no(PairWitness{x.id(0), x.id(other), 0, kInfinite}, "disconnected");
  }
  r.simply_connected = simple_connectivity_oracle(x, opts.oracle_budget);
  r.locally_6_large = is_locally_k_large(region, 6, opts.scan);
  for (const Verdict* v : {&r.connected, &r.locally_6_large, &r.simply_connected}) {
    if (v->is_no()) {
      r.verdict = *v;
      return r;
    }
  }
  r.verdict = r.simply_connected.answer == Answer::Unknown ? Verdict::unknown("simple connectivity undecided")
                                                           : Verdict::yes(region_note(region));
  return r;
}

}  // namespace wsys
