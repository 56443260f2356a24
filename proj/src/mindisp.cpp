#include "wsys/mindisp.hpp"

#include <algorithm>
#include <sstream>

#include "wsys/parallel.hpp"

namespace wsys {

Verdict EmbeddingReport::verdict() const {
  std::ostringstream note;
  note << pairs << " trusted pairs, max deviation " << hops_to_string(max_deviation);
  if (violation) return Verdict::no(*violation, note.str());
  return Verdict::yes(note.str());
}

namespace {

struct RowResult {
  std::size_t pairs = 0;
  Hops max_deviation = 0;
  std::optional<PairWitness> violation;
  bool domination = true;
};

}  // namespace

EmbeddingReport isometric_embedding_check(const Region& region, const Region& min_region, const ScanOptions& scan) {
  const FlagComplex& x = region.complex();
  const FlagComplex& y = min_region.complex();
  for (VertexId v : y.ids()) {
    if (!x.contains(v)) {
      std::ostringstream msg;
      msg << "vertex " << v << " of the subcomplex is not in the ambient complex";
      throw InputError(msg.str());
    }
  }
  if (!is_full_subcomplex(x, y)) throw InputError("subcomplex is not full in the ambient complex");

  std::vector<int> to_x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) to_x[i] = *x.index_of(y.id(static_cast<int>(i)));
  const auto members = min_region.trusted_vertices();

  auto rows = parallel_map<RowResult>(members.size(), scan, [&](std::size_t idx) {
    RowResult out;
    std::vector<Hops> sx, sy;
    const int u = members[idx];
    const int ux = to_x[static_cast<std::size_t>(u)];
    const auto dx = region.distances().row(ux, sx);
    const auto dy = min_region.distances().row(u, sy);
    for (std::size_t jdx = idx + 1; jdx < members.size(); ++jdx) {
      const int v = members[jdx];
      const int vx = to_x[static_cast<std::size_t>(v)];
      const Hops d_x = dx[static_cast<std::size_t>(vx)];
      const Hops d_y = dy[static_cast<std::size_t>(v)];
      if (d_y < d_x) out.domination = false;
      if (!region.trusted_pair(ux, vx, d_x)) continue;
      ++out.pairs;
      const Hops dev = d_y == kInfinite ? kInfinite : d_y - d_x;
      out.max_deviation = std::max(out.max_deviation, dev);
      if (dev != 0 && !out.violation) out.violation = PairWitness{y.id(u), y.id(v), d_x, d_y};
    }
    return out;
  });

  EmbeddingReport report;
  for (const auto& r : rows) {
    report.pairs += r.pairs;
    report.max_deviation = std::max(report.max_deviation, r.max_deviation);
    report.domination_holds = report.domination_holds && r.domination;
    if (!report.violation && r.violation) report.violation = r.violation;
  }
  return report;
}

SystolicReport min_systolic_check(const Region& min_region, const CheckOptions& opts) {
  return is_systolic(min_region, opts);
}

WheelDominationReport wheel_domination_in_min(const Region& region, const Region& min_region) {
  WheelDominationReport report;
  for (const auto& w : find_extended_5_wheels(min_region)) {
    report.wheels.push_back({w, wheel_dominator(region.complex(), w)});
  }
  const FlagComplex& y = min_region.complex();
  for (int z : min_region.trusted_vertices()) {
    const int s[] = {z};
    const FlagComplex lk = link_local(y, s);
    for (const auto& c : enumerate_full_cycles(lk, 5)) {
      if (c.length() == 5) {
        report.verdict = Verdict::no(CycleWitness{c.vertices, Simplex({y.id(z)})}, "full 5-cycle in a link of Min");
        return report;
      }
    }
  }
  std::ostringstream note;
  note << report.wheels.size() << " extended 5-wheels in Min";
  report.verdict = Verdict::yes(note.str());
  return report;
}

namespace {

int chain_reach(const Region& region, Hops period) {
  return static_cast<int>(region.complex().size() / static_cast<std::size_t>(std::max<Hops>(period, 1))) + 1;
}

// All trusted pairs of a chain at exact distance |a - b|.
std::optional<IndexPairWitness> chain_geodesic_violation(const Region& region, const PathChain& chain) {
  const auto local = region.complex().to_local(chain.vertices);
  std::vector<Hops> scratch;
  for (std::size_t p = 0; p < local.size(); ++p) {
    const auto row = region.distances().row(local[p], scratch);
    for (std::size_t q = p + 1; q < local.size(); ++q) {
      const Hops d = row[static_cast<std::size_t>(local[q])];
      if (!region.trusted_pair(local[p], local[q], d)) continue;
      if (d != static_cast<Hops>(q - p)) {
        return IndexPairWitness{chain.first_index + static_cast<std::int64_t>(p),
                                chain.first_index + static_cast<std::int64_t>(q), static_cast<Hops>(q - p), d};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

GeodesicSearchResult invariant_geodesic_search(const Region& region, const Automorphism& h, int n, VertexId start,
                                               std::size_t max_tries) {
  if (n < 1) throw InputError("power n must be at least 1");
  const Automorphism hn = h.power(n);
  const auto profile = displacement_profile(region, hn);
  const auto ds = profile.at(start);
  if (!ds || *ds != profile.minimum) throw InputError("start vertex is not in Min(h^n)");
  if (profile.minimum == 0) throw InputError("h^n fixes the start vertex");

  const FlagComplex& x = region.complex();
  const int s = x.require_index(start);
  const int t = x.require_index(*hn.image(start));
  std::vector<Hops> scratch;
  const auto to_t = region.distances().row(t, scratch);
  const std::vector<Hops> dist(to_t.begin(), to_t.end());
  const int reach = chain_reach(region, profile.minimum);

  GeodesicSearchResult result;
  // Depth-first over geodesics in lexicographic order of local indices.
  std::vector<int> path{s};
  std::vector<std::size_t> cursor{0};
  while (!path.empty() && result.tried < max_tries) {
    const int u = path.back();
    if (u == t) {
      ++result.tried;
      auto chain = chain_along_path(region, hn, start, x.to_ids(path), -reach, reach);
      if (!chain_geodesic_violation(region, chain)) {
        std::ostringstream note;
        note << "geodesic " << result.tried << " in lexicographic order; chain indices " << chain.first_index << ".."
             << chain.last_index();
        result.verdict = Verdict::yes(note.str());
        result.chain = std::move(chain);
        return result;
      }
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    const auto nbrs = x.neighbors(u);
    std::size_t& c = cursor.back();
    while (c < nbrs.size() && dist[static_cast<std::size_t>(nbrs[c])] != dist[static_cast<std::size_t>(u)] - 1) ++c;
    if (c == nbrs.size()) {
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    path.push_back(nbrs[c++]);
    cursor.push_back(0);
  }
  std::ostringstream note;
  note << "not found in window after " << result.tried << " geodesics";
  result.verdict = Verdict::unknown(note.str());
  return result;
}

Verdict verify_thick_geodesic(const Region& region, const ThickGeodesicWitness& w) {
  if (w.k < 1) throw InputError("thick geodesic needs k >= 1");
  const FlagComplex& x = region.complex();
  std::vector<int> local;
  std::vector<std::int64_t> index;
  for (std::size_t p = 0; p < w.vertices.size(); ++p) {
    const int i = x.require_index(w.vertices[p]);
    if (!region.trusted(i)) continue;
    local.push_back(i);
    index.push_back(w.first_index + static_cast<std::int64_t>(p));
  }
  std::size_t distance_pairs = 0;
  std::vector<Hops> scratch;
  for (std::size_t p = 0; p < local.size(); ++p) {
    const auto row = region.distances().row(local[p], scratch);
    for (std::size_t q = p + 1; q < local.size(); ++q) {
      const std::int64_t gap = index[q] - index[p];
      if (local[p] == local[q]) {
        return Verdict::no(IndexPairWitness{index[p], index[q], static_cast<Hops>(std::min<std::int64_t>(gap, 2)), 0},
                           "clause injective");
      }
      const bool want = gap <= w.k;
      if (x.adjacent(local[p], local[q]) != want) {
        return Verdict::no(IndexPairWitness{index[p], index[q], want ? 1 : 2, want ? 2 : 1}, "clause adjacency");
      }
      if (gap % w.k == 0) {
        const Hops d = row[static_cast<std::size_t>(local[q])];
        if (!region.trusted_pair(local[p], local[q], d)) continue;
        ++distance_pairs;
        const auto j = static_cast<Hops>(gap / w.k);
        if (d != j) return Verdict::no(IndexPairWitness{index[p], index[q], j, d}, "clause distance");
      }
    }
  }
  std::ostringstream note;
  note << local.size() << " trusted indices, " << distance_pairs << " distance pairs";
  return Verdict::yes(note.str());
}

DichotomyReport dichotomy_report(const Region& region, const Automorphism& h) {
  DichotomyReport report;
  report.classification = classify(region, h);
  if (report.classification.kind == Classification::Kind::Elliptic) {
    report.verdict = Verdict{Answer::Yes, SimplexWitness{*report.classification.invariant_simplex}, "invariant simplex"};
    return report;
  }

  const FlagComplex& x = region.complex();
  const auto profile = displacement_profile(region, h);
  // Start nearest the basepoint so the chain runs through the trusted core.
  const VertexId v = central_argmin(region, profile);
  const int reach = chain_reach(region, profile.minimum);
  PathChain chain = chain_along_geodesic(region, h, v, -reach, reach);

  // Trusted contiguous block around index 0.
  auto trusted_at = [&](std::int64_t a) {
    auto w = chain.at(a);
    return w && region.trusted(x.require_index(*w));
  };
  std::int64_t first = 0, last = 0;
  while (trusted_at(first - 1)) --first;
  while (trusted_at(last + 1)) ++last;
  ThickGeodesicWitness w;
  w.first_index = first;
  for (std::int64_t a = first; a <= last; ++a) w.vertices.push_back(*chain.at(a));
  report.chain = std::move(chain);

  // Greedy fit: the only candidate is the largest index gap of an adjacent pair.
  const auto local = x.to_local(w.vertices);
  int k = 0;
  for (std::size_t p = 0; p < local.size(); ++p) {
    for (std::size_t q = p + 1; q < local.size(); ++q) {
      if (x.adjacent(local[p], local[q])) k = std::max(k, static_cast<int>(q - p));
    }
  }
  bool fits = k >= 1;
  for (std::size_t p = 0; fits && p < local.size(); ++p) {
    for (std::size_t q = p + 1; fits && q < local.size(); ++q) {
      fits = local[p] != local[q] && x.adjacent(local[p], local[q]) == (static_cast<int>(q - p) <= k);
    }
  }
  if (!fits) {
    report.verdict = Verdict::unknown("no k fits the chain in the window");
    return report;
  }
  w.k = k;
  const auto shift = static_cast<std::size_t>(profile.minimum);
  for (std::size_t p = 0; p + shift < w.vertices.size(); ++p) {
    if (h.image(w.vertices[p]) != w.vertices[p + shift]) {
      report.verdict = Verdict::unknown("h does not shift the fitted chain by |h|");
      return report;
    }
  }
  report.verdict = verify_thick_geodesic(region, w);
  report.thick = std::move(w);
  return report;
}

}  // namespace wsys
