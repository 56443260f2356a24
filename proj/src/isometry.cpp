#include "wsys/isometry.hpp"

#include <algorithm>
#include <sstream>

namespace wsys {

namespace {

using Pair = std::pair<VertexId, VertexId>;

std::optional<VertexId> lookup(const std::vector<Pair>& table, VertexId v) {
  auto it = std::lower_bound(table.begin(), table.end(), v, [](const Pair& p, VertexId key) { return p.first < key; });
  if (it == table.end() || it->first != v) return std::nullopt;
  return it->second;
}

// Distance clipped at 2: 0 equal, 1 adjacent, 2 otherwise. Enough to state
// an adjacency or injectivity failure.
Hops clipped(const FlagComplex& x, int a, int b) {
  if (a == b) return 0;
  return x.adjacent(a, b) ? 1 : 2;
}

}  // namespace

Automorphism::Automorphism(std::vector<Pair> pairs, bool total, std::string name)
    : name_(std::move(name)), total_(total), forward_(std::move(pairs)) {
  std::sort(forward_.begin(), forward_.end());
  for (std::size_t i = 1; i < forward_.size(); ++i) {
    if (forward_[i].first == forward_[i - 1].first) {
      std::ostringstream msg;
      msg << "map lists vertex " << forward_[i].first << " twice";
      throw InputError(msg.str());
    }
  }
  backward_.reserve(forward_.size());
  for (const auto& [u, v] : forward_) backward_.emplace_back(v, u);
  std::sort(backward_.begin(), backward_.end());
}

Automorphism Automorphism::identity(const FlagComplex& x) {
  std::vector<Pair> pairs;
  for (VertexId v : x.ids()) pairs.emplace_back(v, v);
  return Automorphism(std::move(pairs), true, "identity");
}

std::vector<VertexId> Automorphism::domain() const {
  std::vector<VertexId> out;
  out.reserve(forward_.size());
  for (const auto& p : forward_) out.push_back(p.first);
  return out;
}

std::optional<VertexId> Automorphism::image(VertexId v) const { return lookup(forward_, v); }
std::optional<VertexId> Automorphism::preimage(VertexId v) const { return lookup(backward_, v); }

Automorphism Automorphism::inverse() const {
  return Automorphism(backward_, total_, name_.empty() ? std::string{} : name_ + "^-1");
}

Automorphism Automorphism::after(const Automorphism& g) const {
  std::vector<Pair> pairs;
  for (const auto& [u, gu] : g.forward_) {
    if (auto hgu = image(gu)) pairs.emplace_back(u, *hgu);
  }
  return Automorphism(std::move(pairs), total_ && g.total_);
}

Automorphism Automorphism::power(int n) const {
  std::ostringstream label;
  label << name_ << "^" << n;
  if (n == 0) {
    std::vector<Pair> pairs;
    for (const auto& p : forward_) pairs.emplace_back(p.first, p.first);
    for (const auto& p : backward_) pairs.emplace_back(p.first, p.first);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Automorphism(std::move(pairs), total_, label.str());
  }
  const Automorphism step = n > 0 ? *this : inverse();
  Automorphism acc = step;
  for (int i = 1; i < std::abs(n); ++i) acc = step.after(acc);
  acc.name_ = label.str();
  return acc;
}

std::vector<int> Automorphism::local_map(const FlagComplex& x) const {
  std::vector<int> out(x.size(), -1);
  for (const auto& [u, v] : forward_) {
    auto i = x.index_of(u);
    auto j = x.index_of(v);
    if (i && j) out[static_cast<std::size_t>(*i)] = *j;
  }
  return out;
}

Verdict validate_automorphism(const FlagComplex& x, const Automorphism& h) {
  for (const auto& [u, v] : h.pairs()) {
    x.require_index(u);
    x.require_index(v);
  }
  if (h.total()) {
    for (int i = 0; i < static_cast<int>(x.size()); ++i) {
      if (!h.image(x.id(i))) return Verdict::no(VertexWitness{x.id(i), 0}, "total map leaves a vertex unmapped");
    }
  }

  // Injectivity: two sources sharing a target.
  const auto map = h.local_map(x);
  std::vector<int> source_of(x.size(), -1);
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    const int j = map[static_cast<std::size_t>(i)];
    if (j < 0) continue;
    int& s = source_of[static_cast<std::size_t>(j)];
    if (s >= 0) return Verdict::no(PairWitness{x.id(s), x.id(i), clipped(x, s, i), 0}, "two vertices share an image");
    s = i;
  }

  // Edges inside the domain map to edges, and edges among images come from edges.
  for (auto [a, b] : x.edges()) {
    const int ha = map[static_cast<std::size_t>(a)];
    const int hb = map[static_cast<std::size_t>(b)];
    if (ha >= 0 && hb >= 0 && !x.adjacent(ha, hb)) {
      return Verdict::no(PairWitness{x.id(a), x.id(b), 1, clipped(x, ha, hb)}, "adjacent pair mapped to non-adjacent");
    }
    const int pa = source_of[static_cast<std::size_t>(a)];
    const int pb = source_of[static_cast<std::size_t>(b)];
    if (pa >= 0 && pb >= 0 && !x.adjacent(pa, pb)) {
      auto [lo, hi] = std::minmax(pa, pb);
      return Verdict::no(PairWitness{x.id(lo), x.id(hi), clipped(x, lo, hi), 1}, "non-adjacent pair mapped to adjacent");
    }
  }
  return Verdict::yes();
}

std::optional<Hops> DisplacementProfile::at(VertexId v) const {
  auto it = std::lower_bound(values.begin(), values.end(), v,
                             [](const std::pair<VertexId, Hops>& p, VertexId key) { return p.first < key; });
  if (it == values.end() || it->first != v) return std::nullopt;
  return it->second;
}

DisplacementProfile displacement_profile(const Region& region, const Automorphism& h) {
  const FlagComplex& x = region.complex();
  const auto map = h.local_map(x);
  DisplacementProfile p;
  for (int i : region.trusted_vertices()) {
    const int j = map[static_cast<std::size_t>(i)];
    if (j < 0) continue;
    const Hops d = region.distances().distance(i, j);
    if (!region.trusted_pair(i, j, d)) continue;
    p.values.emplace_back(x.id(i), d);
    if (d < p.minimum) {
      p.minimum = d;
      p.argmin.clear();
    }
    if (d == p.minimum) p.argmin.push_back(x.id(i));
  }
  if (p.values.empty()) throw InputError("no vertex has a trusted displacement; enlarge the window or margin");
  return p;
}

Verdict find_invariant_simplex(const FlagComplex& x, const Automorphism& h) {
  const auto map = h.local_map(x);
  std::vector<char> seen(x.size(), 0);
  for (int start = 0; start < static_cast<int>(x.size()); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> orbit{start};
    seen[static_cast<std::size_t>(start)] = 1;
    bool closed = false;
    bool clique = true;
    for (int cur = map[static_cast<std::size_t>(start)]; cur >= 0; cur = map[static_cast<std::size_t>(cur)]) {
      if (cur == start) {
        closed = true;
        break;
      }
      if (seen[static_cast<std::size_t>(cur)]) break;  // joins a chain already examined
      seen[static_cast<std::size_t>(cur)] = 1;
      for (int o : orbit) clique = clique && x.adjacent(o, cur);
      orbit.push_back(cur);
    }
    if (closed && clique) {
      std::ostringstream note;
      note << "orbit of " << x.id(start) << " is a clique";
      return Verdict{Answer::Yes, SimplexWitness{Simplex(x.to_ids(orbit))}, note.str()};
    }
  }
  if (!h.total()) return Verdict::unknown("no invariant simplex among closed orbits of a partial map");
  return {Answer::No, std::nullopt, "no orbit is a clique"};
}

std::string_view to_string(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::Elliptic: return "elliptic";
    case Classification::Kind::Hyperbolic: return "hyperbolic";
    case Classification::Kind::UnknownOnWindow: return "unknown-on-window";
  }
  return "?";
}

Classification classify(const Region& region, const Automorphism& h) {
  Classification c;
  c.translation_length = displacement_profile(region, h).minimum;
  const Verdict inv = find_invariant_simplex(region.complex(), h);
  if (inv.is_yes()) {
    c.kind = Classification::Kind::Elliptic;
    c.invariant_simplex = std::get<SimplexWitness>(*inv.witness).simplex;
  } else if (inv.is_no() && !region.is_window()) {
    c.kind = Classification::Kind::Hyperbolic;
  } else {
    c.kind = Classification::Kind::UnknownOnWindow;
  }
  return c;
}

Region min_set(const Region& region, const Automorphism& h) {
  const auto profile = displacement_profile(region, h);
  if (profile.minimum == 0) throw InputError("|h| = 0: h fixes a vertex, so it is elliptic and has no Min set");
  const auto local = region.complex().to_local(profile.argmin);
  return region.restrict_to(local);
}

Verdict min_idempotence_check(const Region& region, const Automorphism& h, const Region& min_region) {
  const Hops length = displacement_profile(region, h).minimum;
  const FlagComplex& y = min_region.complex();
  const auto map = h.local_map(y);
  std::size_t checked = 0;
  for (int i : min_region.trusted_vertices()) {
    const int j = map[static_cast<std::size_t>(i)];
    if (j < 0) continue;
    const Hops d = min_region.distances().distance(i, j);
    if (!min_region.trusted_pair(i, j, d)) continue;
    ++checked;
    if (d != length) return Verdict::no(VertexWitness{y.id(i), d}, "displacement inside Min differs from |h|");
  }
  std::ostringstream note;
  note << checked << " vertices";
  if (checked == 0) return Verdict::unknown("no vertex of Min has a trusted image in Min");
  return Verdict::yes(note.str());
}

std::optional<VertexId> PathChain::at(std::int64_t a) const {
  if (a < first_index || a > last_index()) return std::nullopt;
  return vertices[static_cast<std::size_t>(a - first_index)];
}

PathChain chain_along_path(const Region& region, const Automorphism& h, VertexId v, std::span<const VertexId> alpha,
                       int n_lo, int n_hi) {
  if (n_lo > 0 || n_hi < 0) throw InputError("index range must contain 0");
  const FlagComplex& x = region.complex();
  const int vi = x.require_index(v);
  const auto hv = h.image(v);
  if (!hv) throw InputError("h is undefined at the start vertex");
  if (alpha.size() < 2 || alpha.front() != v || alpha.back() != *hv) {
    throw InputError("alpha must run from v to h(v)");
  }
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
    if (!x.adjacent_ids(alpha[i], alpha[i + 1])) throw InputError("alpha is not a path");
  }
  const Hops L = static_cast<Hops>(alpha.size()) - 1;
  if (region.distances().distance(vi, x.require_index(*hv)) != L) throw InputError("alpha is not a geodesic");
  const auto profile = displacement_profile(region, h);
  const auto dv = profile.at(v);
  if (!dv || *dv != profile.minimum) throw InputError("v is not in Min(h)");

  // Segment n covers indices nL .. (n+1)L; consecutive segments share an endpoint.
  const std::int64_t lo = static_cast<std::int64_t>(n_lo) * L;
  const std::int64_t hi = static_cast<std::int64_t>(n_hi + 1) * L;
  std::vector<std::optional<VertexId>> slots(static_cast<std::size_t>(hi - lo + 1));
  auto put = [&](std::int64_t a, std::optional<VertexId> w) { slots[static_cast<std::size_t>(a - lo)] = w; };

  std::vector<std::optional<VertexId>> seg(alpha.begin(), alpha.end());
  for (int n = 0; n <= n_hi; ++n) {
    if (n > 0) {
      for (auto& w : seg) w = w ? h.image(*w) : std::nullopt;
    }
    for (Hops j = 0; j <= L; ++j) put(static_cast<std::int64_t>(n) * L + j, seg[static_cast<std::size_t>(j)]);
  }
  seg.assign(alpha.begin(), alpha.end());
  for (int n = -1; n >= n_lo; --n) {
    for (auto& w : seg) w = w ? h.preimage(*w) : std::nullopt;
    for (Hops j = 0; j <= L; ++j) put(static_cast<std::int64_t>(n) * L + j, seg[static_cast<std::size_t>(j)]);
  }

  auto defined = [&](std::int64_t a) {
    return a >= lo && a <= hi && slots[static_cast<std::size_t>(a - lo)].has_value() &&
           x.contains(*slots[static_cast<std::size_t>(a - lo)]);
  };
  std::int64_t first = 0, last = 0;
  while (defined(first - 1)) --first;
  while (defined(last + 1)) ++last;

  PathChain chain;
  chain.first_index = first;
  chain.period = L;
  chain.base.assign(alpha.begin(), alpha.end());
  for (std::int64_t a = first; a <= last; ++a) chain.vertices.push_back(*slots[static_cast<std::size_t>(a - lo)]);
  return chain;
}

PathChain chain_along_geodesic(const Region& region, const Automorphism& h, VertexId v, int n_lo, int n_hi) {
  const FlagComplex& x = region.complex();
  const auto hv = h.image(v);
  if (!hv) throw InputError("h is undefined at the start vertex");
  const auto local = region.distances().geodesic(x.require_index(v), x.require_index(*hv));
  if (local.empty()) throw InputError("h(v) is unreachable from v");
  const auto alpha = x.to_ids(local);
  return chain_along_path(region, h, v, alpha, n_lo, n_hi);
}

Verdict verify_lh_geodesic(const Region& region, const PathChain& chain, Hops L) {
  const FlagComplex& x = region.complex();
  const auto local = x.to_local(chain.vertices);
  std::size_t checked = 0;
  for (std::size_t p = 0; p < local.size(); ++p) {
    for (std::size_t q = p + 1; q < local.size() && static_cast<Hops>(q - p) <= L; ++q) {
      const Hops d = region.distances().distance(local[p], local[q]);
      if (!region.trusted_pair(local[p], local[q], d)) continue;
      ++checked;
      if (d != static_cast<Hops>(q - p)) {
        const std::int64_t a = chain.first_index + static_cast<std::int64_t>(p);
        const std::int64_t b = chain.first_index + static_cast<std::int64_t>(q);
        return Verdict::no(IndexPairWitness{a, b, static_cast<Hops>(q - p), d});
      }
    }
  }
  std::ostringstream note;
  note << checked << " index pairs";
  return Verdict::yes(note.str());
}

Verdict chain_in_min(const PathChain& chain, const DisplacementProfile& profile) {
  std::size_t checked = 0;
  for (std::size_t p = 0; p < chain.vertices.size(); ++p) {
    const auto d = profile.at(chain.vertices[p]);
    if (!d) continue;
    ++checked;
    if (*d != profile.minimum) {
      return Verdict::no(VertexWitness{chain.vertices[p], *d}, "chain vertex displaced more than |h|");
    }
  }
  std::ostringstream note;
  note << checked << " of " << chain.vertices.size() << " chain vertices have a trusted displacement";
  return Verdict::yes(note.str());
}

VertexId central_argmin(const Region& region, const DisplacementProfile& profile) {
  const FlagComplex& x = region.complex();
  VertexId best = profile.argmin.front();
  if (auto base = region.basepoint()) {
    std::vector<Hops> scratch;
    const auto row = region.distances().row(x.require_index(*base), scratch);
    auto key = [&](VertexId a) { return std::pair(row[static_cast<std::size_t>(x.require_index(a))], a); };
    for (VertexId a : profile.argmin) {
      if (key(a) < key(best)) best = a;
    }
  }
  return best;
}

}  // namespace wsys

namespace wsys {

std::vector<Automorphism> all_automorphisms(const FlagComplex& x, std::size_t limit) {
  const int n = static_cast<int>(x.size());
  std::vector<Automorphism> out;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  auto consistent = [&](int v, int c) {
    if (x.degree(v) != x.degree(c)) return false;
    for (int u = 0; u < v; ++u) {
      if (x.adjacent(u, v) != x.adjacent(image[static_cast<std::size_t>(u)], c)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, int v) -> void {
    if (out.size() >= limit) return;
    if (v == n) {
      std::vector<std::pair<VertexId, VertexId>> pairs;
      for (int u = 0; u < n; ++u) pairs.emplace_back(x.id(u), x.id(image[static_cast<std::size_t>(u)]));
      std::ostringstream name;
      name << "aut" << out.size();
      out.emplace_back(std::move(pairs), true, name.str());
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)] || !consistent(v, c)) continue;
      used[static_cast<std::size_t>(c)] = 1;
      image[static_cast<std::size_t>(v)] = c;
      self(self, v + 1);
      used[static_cast<std::size_t>(c)] = 0;
    }
    image[static_cast<std::size_t>(v)] = -1;
  };
  search(search, 0);
  return out;
}

}  // namespace wsys
