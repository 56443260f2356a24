// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "brute.hpp"
#include "wsys/cli.hpp"
#include "wsys/generators.hpp"
#include "wsys/homology.hpp"
#include "wsys/mindisp.hpp"

using namespace wsys;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream log;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      log << " [failed: " << what << "]";
    }
  }
};

struct Hyperbolic {
  std::string name;
  Region region;
  Automorphism h;
};

// Generator inputs whose complex is finite (no window).
std::vector<ComplexFile> finite_corpus() {
  std::vector<ComplexFile> out;
  for (const auto& name : generator_names()) {
    auto f = generate_input(name);
    if (!f.window) out.push_back(std::move(f));
  }
  for (int seed = 2; seed <= 4; ++seed) out.push_back(generate_input("random:seed=" + std::to_string(seed)));
  return out;
}

std::vector<Hyperbolic> hyperbolic_examples() {
  std::vector<Hyperbolic> out;
  const auto lat = triangular_lattice_window(10, 4);
  out.push_back({"lattice t1", lat.region(), lattice_translation(lat, 1)});
  out.push_back({"lattice t2", lat.region(), lattice_translation(lat, 2)});
  const auto big = triangular_lattice_window(26, 12);
  out.push_back({"lattice glide", big.region(), lattice_glide(big)});
  const auto a2 = a_k_window(2, 8, 3);
  out.push_back({"A_2 shift", a2.region(), a_k_shift(a2)});
  const auto a3 = a_k_window(3, 8, 3);
  out.push_back({"A_3 shift", a3.region(), a_k_shift(a3)});
  return out;
}

// 1. Negative controls.
void negative_controls(Outcome& o) {
  const auto oct = octahedron();
  const auto ws = is_weakly_systolic(Region::whole(oct));
  o.require(ws.is_no(), "octahedron weakly systolic No");
  if (ws.witness) {
    const auto* c = std::get_if<CycleWitness>(&*ws.witness);
    o.require(c && c->cycle.size() == 4 && brute::induced_cycle_sets(oct, 4).count([&] {
      auto s = c->cycle;
      std::sort(s.begin(), s.end());
      return s;
    }()) == 1, "octahedron witness is an induced C4");
    if (c) o.log << "octahedron C4 " << describe(*ws.witness) << ";";
  }

  const auto ico = icosahedron();
  const auto large = is_k_large(ico, 6);
  o.require(large.is_no(), "icosahedron 6-large No");
  if (large.witness) {
    const auto* c = std::get_if<CycleWitness>(&*large.witness);
    const FlagComplex host = c && c->ambient ? link(ico, *c->ambient) : ico;
    o.require(c && c->cycle.size() == 5 && is_full_cycle(host, c->cycle), "icosahedron witness is a full 5-cycle");
    o.log << " icosahedron " << describe(*large.witness) << ";";
  }

  const Region torus = Region::whole(hex_torus(4, 4));
  o.require(is_locally_k_large(torus, 6).is_yes(), "hex_torus locally 6-large");
  const auto sys = is_systolic(torus);
  o.require(sys.verdict.is_no() && sys.simply_connected.is_no(), "hex_torus systolic No via homology");
  o.log << " hex_torus systolic " << to_string(sys.verdict.answer) << " (" << sys.simply_connected.note << ")";
}

// 2. Positive control.
void positive_control(Outcome& o) {
  const auto w = triangular_lattice_window(10, 4);
  const Region& r = w.region();
  o.require(triangle_condition(r).is_yes(), "TC");
  o.require(quadrangle_condition(r).is_yes(), "QC");
  o.require(no_full_4_cycles(r).is_yes(), "no full 4-cycle");
  o.require(is_locally_k_large(r, 6).is_yes(), "locally 6-large");
  std::size_t sd_checks = 0;
  for (int v : r.trusted_vertices()) {
    for (int n = 1; n <= 3; ++n) {
      ++sd_checks;
      if (!sd_property(r, r.complex().id(v), n).is_yes()) o.require(false, "SD_n");
    }
  }
  o.log << r.trusted_count() << " trusted vertices, " << sd_checks << " SD_n checks";
}

// 3. Characterizations agree where simple connectivity is decided.
void characterization_cross_check(Outcome& o) {
  std::size_t decisive = 0, disagreements = 0;
  auto examine = [&](const std::string& name, const Region& r) {
    if (!r.complex().is_connected()) return;
    const auto sc = simple_connectivity_oracle(r.complex());
    if (sc.answer == Answer::Unknown) return;
    ++decisive;
    const auto g = is_weakly_systolic(r, WeakSystolicMode::Graph).answer;
    const auto s = is_weakly_systolic(r, WeakSystolicMode::Sd).answer;
    const auto c = is_weakly_systolic(r, WeakSystolicMode::Composite).answer;
    if (g != s || g != c) {
      ++disagreements;
      o.log << " disagree on " << name << ";";
    }
  };
  for (const auto& f : finite_corpus()) examine(f.name, f.region());
  for (const char* spec : {"lattice:R=6,m=3", "a_k:k=2,R=6,m=3", "a_k:k=3,R=4,m=3"}) {
    const auto f = generate_input(spec);
    examine(f.name, f.region());
  }
  o.require(decisive >= 5, "enough decisive inputs");
  o.require(disagreements == 0, "zero disagreements");
  o.log << decisive << " decisive inputs, " << disagreements << " disagreements";
}

// 4. Min is isometrically embedded.
void min_embedding(Outcome& o) {
  for (const auto& ex : hyperbolic_examples()) {
    if (ex.name != "lattice glide" && ex.name != "A_3 shift") continue;
    const Region min = min_set(ex.region, ex.h);
    const auto rep = isometric_embedding_check(ex.region, min);
    o.require(rep.max_deviation == 0 && !rep.violation, ex.name + " deviation 0");
    if (ex.name == "lattice glide") o.require(rep.pairs >= 500, "at least 500 lattice pairs");
    o.log << ex.name << ": " << rep.pairs << " pairs, deviation " << hops_to_string(rep.max_deviation) << "; ";
  }
}

// 5. Min is systolic.
void min_systolic(Outcome& o) {
  for (const auto& ex : hyperbolic_examples()) {
    if (ex.name != "lattice glide" && ex.name != "A_3 shift") continue;
    const Region min = min_set(ex.region, ex.h);
    const auto lk = is_locally_k_large(min, 6);
    const auto sc = simple_connectivity_oracle(min.complex());
    o.require(lk.is_yes(), ex.name + " Min locally 6-large");
    o.require(sc.is_yes(), ex.name + " Min collapses");
    o.log << ex.name << ": locally-6-large " << to_string(lk.answer) << ", simply connected "
          << to_string(sc.answer) << "; ";
  }
}

// 6. Chains and idempotence.
void chains(Outcome& o) {
  for (const auto& ex : hyperbolic_examples()) {
    const auto profile = displacement_profile(ex.region, ex.h);
    const VertexId v = central_argmin(ex.region, profile);
    const int reach = static_cast<int>(ex.region.complex().size()) / profile.minimum + 1;
    const auto chain = chain_along_geodesic(ex.region, ex.h, v, -reach, reach);
    const auto geo = verify_lh_geodesic(ex.region, chain, profile.minimum);
    const auto in_min = chain_in_min(chain, profile);
    const auto idem = min_idempotence_check(ex.region, ex.h, min_set(ex.region, ex.h));
    o.require(geo.is_yes(), ex.name + " |h|-geodesic");
    o.require(in_min.is_yes(), ex.name + " chain in Min");
    o.require(idem.is_yes(), ex.name + " idempotence");
    o.log << ex.name << " (" << geo.note << "); ";
  }
}

// 7. Dichotomy.
void dichotomy(Outcome& o) {
  std::size_t complexes = 0, maps = 0;
  for (const auto& f : finite_corpus()) {
    const Region r = f.region();
    if (!r.complex().is_connected() || !is_weakly_systolic(r).is_yes()) continue;
    ++complexes;
    for (const auto& h : all_automorphisms(f.complex, 5000)) {
      ++maps;
      const auto c = classify(r, h);
      bool ok = c.kind == Classification::Kind::Elliptic && c.invariant_simplex;
      if (ok) {
        std::vector<VertexId> img;
        for (VertexId v : c.invariant_simplex->vertices()) img.push_back(*h.image(v));
        ok = f.complex.is_clique_ids(c.invariant_simplex->vertices()) && Simplex(img) == *c.invariant_simplex;
      }
      if (!ok) o.require(false, f.name + " " + h.name() + " elliptic");
    }
  }
  o.require(complexes >= 4, "enough weakly systolic finite complexes");
  o.log << maps << " automorphisms of " << complexes << " weakly systolic complexes elliptic;";
  for (const auto& ex : hyperbolic_examples()) {
    if (ex.name != "A_2 shift" && ex.name != "lattice t1") continue;
    const auto d = dichotomy_report(ex.region, ex.h);
    o.require(d.thick && verify_thick_geodesic(ex.region, *d.thick).is_yes(), ex.name + " thick geodesic");
    if (d.thick) o.log << " " << ex.name << " k=" << d.thick->k << " (" << d.verdict.note << ")";
  }
}

// 8. The checkers can fail.
void falsifiability(Outcome& o) {
  const auto w = triangular_lattice_window(10, 4);
  // Hexagonal ring of radius 2 around the basepoint, one vertex removed: a path.
  std::vector<VertexId> ring;
  for (int q = -2; q <= 2; ++q) {
    for (int r = -2; r <= 2; ++r) {
      if (hex_distance({q, r}, {}) == 2 && !(q == 2 && r == 0)) ring.push_back(*w.id_at({q, r}));
    }
  }
  const FlagComplex y = span(w.complex(), ring);
  const auto rep = isometric_embedding_check(w.region(), Region::whole(y));
  o.require(rep.max_deviation > 0 && rep.max_deviation != kInfinite, "positive finite deviation");
  if (rep.violation) {
    const auto dx = brute::floyd(w.complex());
    const auto dy = brute::floyd(y);
    const auto& p = *rep.violation;
    const int ux = w.complex().require_index(p.u), vx = w.complex().require_index(p.v);
    const int uy = y.require_index(p.u), vy = y.require_index(p.v);
    o.require(dx[ux][vx] == p.expected && dy[uy][vy] == p.actual && p.actual > p.expected, "witness re-validates");
    o.log << "ring path deviation " << rep.max_deviation << " at " << describe(p) << ";";
  } else {
    o.require(false, "violation witness");
  }

  const FlagComplex c4 = span(octahedron(), std::vector<VertexId>{VertexId(0), VertexId(1), VertexId(2), VertexId(3)});
  const auto sys = min_systolic_check(Region::whole(c4));
  o.require(brute::induced_cycle_sets(c4, 4).size() == 1, "constructed subcomplex is an induced C4");
  o.require(sys.verdict.is_no(), "min_systolic_check No on C4");
  o.log << " C4 min-systolic " << to_string(sys.verdict.answer);
}

// 9. Enumerators agree with brute force.
void oracle_agreement(Outcome& o) {
  std::size_t cycle_inputs = 0, simplex_maps = 0;
  std::vector<FlagComplex> small;
  for (const auto& f : finite_corpus()) small.push_back(f.complex);
  for (std::uint64_t seed = 10; seed < 20; ++seed) small.push_back(random_flag_complex(13, 0.35, seed));
  for (std::uint64_t seed = 20; seed < 25; ++seed) small.push_back(random_flag_complex(24, 0.3, seed));
  for (const auto& x : small) {
    if (x.size() <= 14) {
      ++cycle_inputs;
      std::set<std::vector<VertexId>> got;
      const int longest = std::max(4, static_cast<int>(x.size()));
      for (auto c : enumerate_full_cycles(x, longest)) {
        std::sort(c.vertices.begin(), c.vertices.end());
        got.insert(c.vertices);
      }
      if (got != brute::induced_cycle_sets(x, longest)) o.require(false, "full cycles");
    }
    if (x.size() <= 30) {
      for (const auto& h : all_automorphisms(x, 500)) {
        ++simplex_maps;
        const auto got = find_invariant_simplex(x, h);
        const auto want = brute::invariant_clique(x, h.local_map(x));
        if (got.is_yes() != want.has_value() || (!want && !got.is_no())) o.require(false, "invariant simplex");
      }
    }
  }
  o.log << cycle_inputs << " inputs for full cycles, " << simplex_maps << " maps for invariant simplices";
}

// 10. Determinism.
// Every check on every generator, then isometry and theorems on each hyperbolic example.
std::string suite_report(const std::string& jobs) {
  std::string all;
  for (const auto& c : check_names()) all += (all.empty() ? "" : ",") + c;
  std::vector<std::vector<std::string>> runs;
  for (const auto& g : generator_names()) runs.push_back({"check", "-g", g, "--checks", all});
  const std::vector<std::pair<std::string, std::string>> maps = {{"lattice:R=10,m=4", "t1"},
                                                                 {"lattice:R=10,m=4", "t2"},
                                                                 {"lattice:R=26,m=12", "glide"},
                                                                 {"a_k:k=2,R=8,m=3", "shift1"},
                                                                 {"a_k:k=3,R=8,m=3", "shift1"},
                                                                 {"octahedron", "antipodal"}};
  for (const auto& [g, m] : maps) {
    runs.push_back({"isometry", "-g", g, "--map", m});
    runs.push_back({"theorems", "-g", g, "--map", m});
  }
  std::string out;
  for (auto args : runs) {
    args.insert(args.begin(), "wsys");
    for (const char* extra : {"--format", "structured", "--no-timing", "--jobs"}) args.push_back(extra);
    args.push_back(jobs);
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream report, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), report, err);
    out += std::to_string(code) + "\n" + report.str() + err.str();
  }
  return out;
}

void determinism(Outcome& o) {
  const auto first = suite_report("1");
  const auto second = suite_report("1");
  const auto parallel = suite_report("8");
  o.require(first == second, "two runs identical");
  o.require(first == parallel, "--jobs 1 vs --jobs 8 identical");
  o.require(first.find("wall_ms") == std::string::npos, "timing stripped");
  o.log << first.size() << " bytes of structured report, identical across runs and jobs";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Outcome&)>> criteria = {
      {"negative controls", negative_controls},
      {"positive control", positive_control},
      {"characterization cross-check", characterization_cross_check},
      {"Min isometrically embedded", min_embedding},
      {"Min systolic", min_systolic},
      {"chains and idempotence", chains},
      {"dichotomy", dichotomy},
      {"checker falsifiability", falsifiability},
      {"oracle agreement", oracle_agreement},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.log << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += o.pass ? 0 : 1;
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.log.str() << " [" << std::fixed;
    std::cout.precision(1);
    std::cout << secs << " s]\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
