#include "wsys/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "wsys/generators.hpp"
#include "wsys/homology.hpp"
#include "wsys/local_conditions.hpp"
#include "wsys/mindisp.hpp"

namespace wsys {

namespace {

using Params = std::map<std::string, double>;

struct GeneratorEntry {
  std::vector<std::pair<std::string, double>> defaults;  // canonical key order
  std::function<ComplexFile(const Params&)> build;
};

int as_int(const Params& p, const std::string& key) {
  const double v = p.at(key);
  if (v != static_cast<double>(static_cast<long>(v))) throw InputError("parameter " + key + " must be an integer");
  return static_cast<int>(v);
}

std::vector<Automorphism> with_identity(const FlagComplex& x, std::vector<Automorphism> rest) {
  rest.insert(rest.begin(), Automorphism::identity(x));
  return rest;
}

ComplexFile from_window(const WindowView& w, std::vector<Automorphism> maps) {
  ComplexFile f;
  f.complex = w.complex();
  f.window = WindowSpec{w.basepoint(), w.radius(), w.margin()};
  f.automorphisms = with_identity(f.complex, std::move(maps));
  return f;
}

ComplexFile finite(FlagComplex x, std::vector<Automorphism> maps = {}) {
  ComplexFile f;
  f.complex = std::move(x);
  f.automorphisms = with_identity(f.complex, std::move(maps));
  return f;
}

Automorphism rim_rotation(int k, bool with_center) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  const int offset = with_center ? 1 : 0;
  if (with_center) pairs.emplace_back(VertexId(0), VertexId(0));
  for (int i = 0; i < k; ++i) {
    pairs.emplace_back(VertexId(static_cast<std::uint32_t>(offset + i)),
                       VertexId(static_cast<std::uint32_t>(offset + (i + 1) % k)));
  }
  return Automorphism(std::move(pairs), true, "rot1");
}

const std::map<std::string, GeneratorEntry>& generators() {
  static const std::map<std::string, GeneratorEntry> table = {
      {"lattice",
       {{{"R", 10}, {"m", 4}},
        [](const Params& p) {
          auto w = triangular_lattice_window(as_int(p, "R"), as_int(p, "m"));
          return from_window(w, {lattice_translation(w, 1), lattice_translation(w, 2), lattice_glide(w)});
        }}},
      {"a_k",
       {{{"k", 2}, {"R", 8}, {"m", 3}},
        [](const Params& p) {
          auto w = a_k_window(as_int(p, "k"), as_int(p, "R"), as_int(p, "m"));
          return from_window(w, {a_k_shift(w, 1), a_k_shift(w, 2)});
        }}},
      {"hex_torus",
       {{{"p", 4}, {"q", 4}},
        [](const Params& p) {
          const int a = as_int(p, "p"), b = as_int(p, "q");
          return finite(hex_torus(a, b), {hex_torus_translation(a, b)});
        }}},
      {"octahedron", {{}, [](const Params&) { return finite(octahedron(), {octahedron_antipodal()}); }}},
      {"icosahedron", {{}, [](const Params&) { return finite(icosahedron()); }}},
      {"wheel",
       {{{"k", 6}},
        [](const Params& p) {
          const int k = as_int(p, "k");
          return finite(wheel(k), {rim_rotation(k, true)});
        }}},
      {"extended_wheel5", {{}, [](const Params&) { return finite(extended_wheel5(false)); }}},
      {"extended_wheel5_dominated", {{}, [](const Params&) { return finite(extended_wheel5(true)); }}},
      {"cycle",
       {{{"n", 6}},
        [](const Params& p) {
          const int n = as_int(p, "n");
          return finite(cycle_graph(n), {cycle_rotation(n)});
        }}},
      {"complete",
       {{{"n", 3}},
        [](const Params& p) {
          const int n = as_int(p, "n");
          return finite(complete_graph(n), {cycle_rotation(n)});
        }}},
      {"cone_cycle",
       {{{"n", 6}},
        [](const Params& p) {
          const int n = as_int(p, "n");
          // Rotate the base cycle, fix the apex (id n).
          std::vector<std::pair<VertexId, VertexId>> pairs;
          for (int i = 0; i < n; ++i) {
            pairs.emplace_back(VertexId(static_cast<std::uint32_t>(i)),
                               VertexId(static_cast<std::uint32_t>((i + 1) % n)));
          }
          pairs.emplace_back(VertexId(static_cast<std::uint32_t>(n)), VertexId(static_cast<std::uint32_t>(n)));
          return finite(cone(cycle_graph(n)), {Automorphism(std::move(pairs), true, "rot1")});
        }}},
      {"random",
       {{{"n", 12}, {"p", 0.3}, {"seed", 1}},
        [](const Params& p) {
          return finite(random_flag_complex(as_int(p, "n"), p.at("p"), static_cast<std::uint64_t>(p.at("seed"))));
        }}},
  };
  return table;
}

std::string format_number(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

std::vector<std::string> generator_names() {
  std::vector<std::string> out;
  for (const auto& [name, entry] : generators()) out.push_back(name);
  return out;
}

ComplexFile generate_input(const std::string& spec, std::optional<Hops> radius, std::optional<Hops> margin) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const auto it = generators().find(name);
  if (it == generators().end()) throw InputError("unknown generator '" + name + "'");
  Params params(it->second.defaults.begin(), it->second.defaults.end());
  if (colon != std::string::npos) {
    std::istringstream rest(spec.substr(colon + 1));
    for (std::string item; std::getline(rest, item, ',');) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw InputError("generator parameter '" + item + "' is not key=value");
      const std::string key = item.substr(0, eq);
      if (!params.count(key)) throw InputError("generator " + name + " has no parameter '" + key + "'");
      try {
        std::size_t used = 0;
        params[key] = std::stod(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw InputError("generator parameter '" + item + "' is not numeric");
      }
    }
  }
  if (radius) {
    if (!params.count("R")) throw InputError("--radius applies to window generators only");
    params["R"] = *radius;
  }
  if (margin) {
    if (!params.count("m")) throw InputError("--margin applies to window generators only");
    params["m"] = *margin;
  }
  ComplexFile f = it->second.build(params);
  std::ostringstream label;
  label << name;
  const char* sep = ":";
  for (const auto& [key, def] : it->second.defaults) {
    label << sep << key << "=" << format_number(params.at(key));
    sep = ",";
  }
  f.name = label.str();
  return f;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"flag", "full-cycles",    "systole", "k-large",
                                                  "locally-k-large", "tc", "qc",      "weakly-modular",
                                                  "w5hat",           "sd", "weakly-systolic", "systolic"};
  return names;
}

namespace {

const std::vector<std::string> kIsometryChecks = {
    "validate-automorphism", "displacement", "classify", "min-set", "geodesic-chain",
    "chain-in-min",          "min-idempotence", "embedding", "min-systolic"};
const std::vector<std::string> kTheoremChecks = {"validate-automorphism", "embedding",          "min-systolic",
                                                 "wheel-domination",      "invariant-geodesic", "dichotomy"};

struct Config {
  std::string input_path;
  std::string generator;
  std::vector<std::string> checks;
  std::string mode = "graph";
  std::optional<Hops> margin;
  std::optional<Hops> radius;
  std::size_t oracle_budget = 100'000;
  std::string format = "text";
  std::vector<std::string> require;
  unsigned jobs = 1;
  bool timing = true;
  int k = 6;
  int max_len = 8;
  std::string map;
  int power = 1;
  std::optional<std::uint32_t> start;
  std::vector<std::uint32_t> subset;
  std::string output;
};

struct Input {
  ComplexFile file;
  std::string label;
  Region region;
};

Input load(const Config& c) {
  Input in;
  if (!c.generator.empty()) {
    in.file = generate_input(c.generator, c.radius, c.margin);
    in.label = in.file.name;
  } else {
    if (c.radius) throw InputError("--radius applies to generator windows only");
    in.file = read_complex_file(c.input_path);
    if (c.margin) {
      if (!in.file.window) throw InputError("--margin needs a window input");
      if (*c.margin < 0 || *c.margin > in.file.window->radius) throw InputError("window needs 0 <= margin <= radius");
      in.file.window->margin = *c.margin;
    }
    in.label = in.file.name;
  }
  in.region = in.file.region();
  return in;
}

CheckOptions check_options(const Config& c) {
  CheckOptions o;
  o.scan.jobs = std::max(1u, c.jobs);
  o.oracle_budget = c.oracle_budget;
  return o;
}

WeakSystolicMode parse_mode(const std::string& m) {
  if (m == "graph") return WeakSystolicMode::Graph;
  if (m == "sd") return WeakSystolicMode::Sd;
  if (m == "composite") return WeakSystolicMode::Composite;
  throw InputError("mode must be graph, sd or composite");
}

class Recorder {
 public:
  explicit Recorder(const Input& in) : in_(in) {}

  template <typename F>
  Record& run(const std::string& check, const Region& region, F&& body) {
    Record r;
    r.check = check;
    r.input = in_.label;
    r.window = region.is_window();
    r.vertices = region.complex().size();
    r.trusted_vertices = region.trusted_count();
    const auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report.records.push_back(std::move(r));
    return report.records.back();
  }

  Report report;

 private:
  const Input& in_;
};

Region trusted_part(const Region& region) {
  if (!region.is_window()) return region;
  auto t = region.trusted_vertices();
  return region.restrict_to(std::vector<int>(t.begin(), t.end()));
}

std::string join_ids(std::span<const VertexId> vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

std::string join_answers(const SystolicReport& s) {
  std::ostringstream out;
  out << "connected=" << to_string(s.connected.answer) << " simply-connected=" << to_string(s.simply_connected.answer)
      << " locally-6-large=" << to_string(s.locally_6_large.answer);
  return out.str();
}

Report cmd_check(const Config& c, const Input& in) {
  Recorder rec(in);
  const CheckOptions opts = check_options(c);
  const Region& region = in.region;
  for (const auto& check : c.checks) {
    rec.run(check, region, [&](Record& r) {
      if (check == "flag") {
        r.verdict = in.file.facets ? is_flag(*in.file.facets) : Verdict::yes("edge input is a clique complex");
      } else if (check == "full-cycles") {
        const Region t = trusted_part(region);
        const auto cycles = enumerate_full_cycles(t.complex(), c.max_len);
        std::map<std::size_t, long long> by_length;
        for (const auto& cy : cycles) ++by_length[cy.length()];
        r.detail("max-len", c.max_len).detail("count", static_cast<long long>(cycles.size()));
        for (const auto& [len, n] : by_length) r.detail("length-" + std::to_string(len), n);
        r.verdict = cycles.empty() ? Verdict::yes("no full cycle up to max-len")
                                   : Verdict::no(CycleWitness{cycles.front().vertices, std::nullopt},
                                                 "first full cycle in (length, vertices) order");
      } else if (check == "systole") {
        const Region t = trusted_part(region);
        const auto cyc = shortest_full_cycle(t.complex());
        r.detail("systole", cyc ? std::to_string(cyc->length()) : std::string("inf"));
        r.verdict = Verdict::yes();
        if (cyc) r.verdict.witness = CycleWitness{cyc->vertices, std::nullopt};
      } else if (check == "k-large") {
        r.mode = "k=" + std::to_string(c.k);
        r.verdict = is_k_large(trusted_part(region).complex(), c.k);
      } else if (check == "locally-k-large") {
        r.mode = "k=" + std::to_string(c.k);
        r.verdict = is_locally_k_large(region, c.k, opts.scan);
      } else if (check == "tc") {
        r.verdict = triangle_condition(region, opts.scan);
      } else if (check == "qc") {
        r.verdict = quadrangle_condition(region, opts.scan);
      } else if (check == "weakly-modular") {
        r.verdict = is_weakly_modular(region, opts.scan);
      } else if (check == "w5hat") {
        r.verdict = w5hat_condition(region);
      } else if (check == "sd") {
        r.verdict = sd_all(region, opts.scan);
      } else if (check == "weakly-systolic") {
        r.mode = c.mode;
        r.verdict = is_weakly_systolic(region, parse_mode(c.mode), opts);
      } else if (check == "systolic") {
        const auto s = is_systolic(region, opts);
        r.verdict = s.verdict;
        r.detail("parts", join_answers(s));
      }
    });
  }
  return rec.report;
}

const Automorphism& pick_map(const Config& c, const ComplexFile& f) {
  if (!c.map.empty()) return f.automorphism(c.map);
  if (f.automorphisms.empty()) throw InputError("input has no automorphism");
  for (const auto& h : f.automorphisms) {
    if (h.name() != "identity") return h;
  }
  return f.automorphisms.front();
}

std::string profile_histogram(const DisplacementProfile& p) {
  std::map<Hops, long long> hist;
  for (const auto& [v, d] : p.values) ++hist[d];
  std::ostringstream out;
  const char* sep = "";
  for (const auto& [d, n] : hist) {
    out << sep << hops_to_string(d) << ":" << n;
    sep = " ";
  }
  return out.str();
}

void record_embedding(Recorder& rec, const Region& region, const Region& min_region, const CheckOptions& opts) {
  rec.run("embedding", region, [&](Record& r) {
    const auto e = isometric_embedding_check(region, min_region, opts.scan);
    r.verdict = e.verdict();
    r.detail("pairs", static_cast<long long>(e.pairs))
        .detail("max-deviation", hops_to_string(e.max_deviation))
        .detail("domination", e.domination_holds ? "holds" : "FAILS");
  });
  rec.run("min-systolic", min_region, [&](Record& r) {
    const auto s = min_systolic_check(min_region, opts);
    r.verdict = s.verdict;
    r.detail("parts", join_answers(s));
    if (s.locally_6_large.witness) r.detail("locally-6-large-witness", describe(*s.locally_6_large.witness));
  });
}

Report cmd_isometry(const Config& c, const Input& in) {
  Recorder rec(in);
  const CheckOptions opts = check_options(c);
  const Region& region = in.region;
  const Automorphism& h = pick_map(c, in.file);

  auto& valid = rec.run("validate-automorphism", region, [&](Record& r) {
    r.mode = h.name();
    r.verdict = validate_automorphism(region.complex(), h);
  });
  if (!valid.verdict.is_yes()) return rec.report;

  DisplacementProfile profile;
  rec.run("displacement", region, [&](Record& r) {
    r.mode = h.name();
    profile = displacement_profile(region, h);
    r.verdict = Verdict::yes();
    r.detail("translation-length", hops_to_string(profile.minimum))
        .detail("vertices", static_cast<long long>(profile.values.size()))
        .detail("argmin", static_cast<long long>(profile.argmin.size()))
        .detail("histogram", profile_histogram(profile));
  });
  rec.run("classify", region, [&](Record& r) {
    r.mode = h.name();
    const auto cls = classify(region, h);
    r.verdict = Verdict::yes(std::string(to_string(cls.kind)));
    if (cls.invariant_simplex) r.verdict.witness = SimplexWitness{*cls.invariant_simplex};
    r.detail("kind", std::string(to_string(cls.kind))).detail("translation-length", hops_to_string(cls.translation_length));
  });
  if (profile.minimum == 0) return rec.report;

  const Region min_region = min_set(region, h);
  rec.run("min-set", region, [&](Record& r) {
    r.mode = h.name();
    r.verdict = Verdict::yes();
    r.detail("vertices", static_cast<long long>(min_region.complex().size()))
        .detail("edges", static_cast<long long>(min_region.complex().edge_count()))
        .detail("all-trusted", min_region.complex().size() == region.trusted_count() ? "yes" : "no");
  });

  const VertexId v = central_argmin(region, profile);
  const int reach = static_cast<int>(region.complex().size()) / std::max<Hops>(profile.minimum, 1) + 1;
  const PathChain chain = chain_along_geodesic(region, h, v, -reach, reach);
  rec.run("geodesic-chain", region, [&](Record& r) {
    r.mode = h.name();
    r.verdict = verify_lh_geodesic(region, chain, profile.minimum);
    r.detail("start", static_cast<long long>(v.value))
        .detail("alpha", join_ids(chain.base))
        .detail("indices", std::to_string(chain.first_index) + ".." + std::to_string(chain.last_index()));
  });
  rec.run("chain-in-min", region, [&](Record& r) {
    r.mode = h.name();
    r.verdict = chain_in_min(chain, profile);
  });
  rec.run("min-idempotence", min_region, [&](Record& r) {
    r.mode = h.name();
    r.verdict = min_idempotence_check(region, h, min_region);
  });
  record_embedding(rec, region, min_region, opts);
  return rec.report;
}

Report cmd_theorems(const Config& c, const Input& in) {
  Recorder rec(in);
  const CheckOptions opts = check_options(c);
  const Region& region = in.region;
  const Automorphism& h = pick_map(c, in.file);

  auto& valid = rec.run("validate-automorphism", region, [&](Record& r) {
    r.mode = h.name();
    r.verdict = validate_automorphism(region.complex(), h);
  });
  if (!valid.verdict.is_yes()) return rec.report;
  const auto profile = displacement_profile(region, h);

  if (profile.minimum > 0 || !c.subset.empty()) {
    Region min_region;
    if (c.subset.empty()) {
      min_region = min_set(region, h);
    } else {
      std::vector<VertexId> ids;
      for (auto s : c.subset) ids.emplace_back(s);
      min_region = region.restrict_to(region.complex().to_local(ids));
    }
    record_embedding(rec, region, min_region, opts);
    rec.run("wheel-domination", min_region, [&](Record& r) {
      const auto w = wheel_domination_in_min(region, min_region);
      r.verdict = w.verdict;
      r.detail("wheels", static_cast<long long>(w.wheels.size()));
      for (std::size_t i = 0; i < w.wheels.size(); ++i) {
        const auto& dw = w.wheels[i];
        r.detail("wheel-" + std::to_string(i), describe(WheelWitness{dw.wheel}) + " dominator " +
                                                   (dw.dominator ? std::to_string(dw.dominator->value) : "none"));
      }
    });
  }

  const Automorphism hn = h.power(c.power);
  const auto pn = displacement_profile(region, hn);
  if (pn.minimum > 0) {
    rec.run("invariant-geodesic", region, [&](Record& r) {
      r.mode = "n=" + std::to_string(c.power);
      const VertexId start = c.start ? VertexId(*c.start) : central_argmin(region, pn);
      const auto g = invariant_geodesic_search(region, h, c.power, start);
      r.verdict = g.verdict;
      r.detail("start", static_cast<long long>(start.value)).detail("tried", static_cast<long long>(g.tried));
      if (g.chain) r.detail("alpha", join_ids(g.chain->base));
    });
  }
  rec.run("dichotomy", region, [&](Record& r) {
    r.mode = h.name();
    const auto d = dichotomy_report(region, h);
    r.verdict = d.verdict;
    r.detail("kind", std::string(to_string(d.classification.kind)))
        .detail("translation-length", hops_to_string(d.classification.translation_length));
    if (d.thick) {
      r.detail("k", d.thick->k)
          .detail("indices", std::to_string(d.thick->first_index) + ".." +
                                 std::to_string(d.thick->first_index + static_cast<long long>(d.thick->vertices.size()) - 1));
    }
  });
  return rec.report;
}

std::vector<std::string> split_list(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::istringstream in(item);
    for (std::string part; std::getline(in, part, ',');) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

void add_common(CLI::App* sub, Config& c, bool takes_input) {
  if (takes_input) {
    sub->add_option("input", c.input_path, "Complex file");
    sub->add_option("-g,--generate", c.generator, "Generator spec, e.g. lattice:R=10,m=4");
  }
  sub->add_option("--margin", c.margin, "Trust margin m for windows");
  sub->add_option("--radius", c.radius, "Window radius R for generator windows");
  sub->add_option("--oracle-budget", c.oracle_budget, "Collapse search budget")->capture_default_str();
  sub->add_option("--format", c.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  sub->add_option("--require", c.require, "Checks whose No fails the run (comma separated)")->delimiter(',');
  sub->add_option("--jobs", c.jobs, "Worker threads for quantifier scans")->capture_default_str();
  sub->add_flag("!--no-timing", c.timing, "Omit wall-clock fields");
  sub->add_option("-o,--output", c.output, "Write the report here instead of stdout");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks for weakly systolic complexes and their isometries", "wsys"};
  app.require_subcommand(1);
  Config c;

  auto* check = app.add_subcommand("check", "Run local and global checks on a complex");
  add_common(check, c, true);
  check->add_option("--checks", c.checks, "Checks to run (comma separated)")->delimiter(',');
  check->add_option("--mode", c.mode, "Weak systolicity mode")
      ->check(CLI::IsMember({"graph", "sd", "composite"}))
      ->capture_default_str();
  check->add_option("--k", c.k, "k for k-large checks")->capture_default_str();
  check->add_option("--max-len", c.max_len, "Longest full cycle to enumerate")->capture_default_str();

  auto* iso = app.add_subcommand("isometry", "Classify an automorphism and examine its Min set");
  add_common(iso, c, true);
  iso->add_option("--map", c.map, "Automorphism name (default: first non-identity)");

  auto* thm = app.add_subcommand("theorems", "Embedding, systolicity, wheels, invariant geodesics, dichotomy");
  add_common(thm, c, true);
  thm->add_option("--map", c.map, "Automorphism name (default: first non-identity)");
  thm->add_option("--power", c.power, "Power n for the invariant geodesic search")->capture_default_str();
  thm->add_option("--start", c.start, "Start vertex for the invariant geodesic search");
  thm->add_option("--subset", c.subset, "Use the span of these vertices in place of Min")->delimiter(',');

  auto* gen = app.add_subcommand("generate", "Write a generated complex in the text format");
  gen->add_option("spec", c.generator, "Generator spec")->required();
  gen->add_option("--margin", c.margin, "Trust margin for windows");
  gen->add_option("--radius", c.radius, "Window radius");
  gen->add_option("-o,--output", c.output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitToolError;
  }

  try {
    std::ofstream file;
    if (!c.output.empty()) {
      file.open(c.output);
      if (!file) throw InputError("cannot write " + c.output);
    }
    std::ostream& sink = c.output.empty() ? out : file;

    if (gen->parsed()) {
      write_complex(sink, generate_input(c.generator, c.radius, c.margin));
      return kExitOk;
    }

    const bool is_check = check->parsed();
    c.checks = split_list(c.checks);
    c.require = split_list(c.require);
    if (c.input_path.empty() == c.generator.empty()) {
      err << "error: give exactly one of an input file or --generate\n";
      return kExitToolError;
    }
    // Names are validated before any work.
    const auto& known = is_check ? check_names() : (iso->parsed() ? kIsometryChecks : kTheoremChecks);
    if (is_check) {
      if (c.checks.empty()) {
        err << "error: no checks given; use --checks with any of:";
        for (const auto& n : check_names()) err << " " << n;
        err << "\n";
        return kExitToolError;
      }
      for (const auto& n : c.checks) {
        if (std::find(known.begin(), known.end(), n) == known.end()) {
          err << "error: unknown check '" << n << "'\n";
          return kExitToolError;
        }
      }
    }
    for (const auto& n : c.require) {
      if (n == "all") continue;
      if (std::find(known.begin(), known.end(), n) == known.end()) {
        err << "error: unknown required check '" << n << "'\n";
        return kExitToolError;
      }
    }

    const Input in = load(c);
    const Report report = is_check ? cmd_check(c, in) : iso->parsed() ? cmd_isometry(c, in) : cmd_theorems(c, in);
    if (c.format == "structured") {
      report.write_structured(sink, c.timing);
    } else {
      report.write_text(sink, c.timing);
    }

    const std::set<std::string> required(c.require.begin(), c.require.end());
    for (const auto& r : report.records) {
      if (r.verdict.is_no() && (required.count("all") || required.count(r.check))) return kExitRequiredNo;
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitToolError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitToolError;
  }
}

}  // namespace wsys
