#include "wsys/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace wsys {

namespace {

std::string located(const std::string& source, int line, const std::string& message) {
  std::ostringstream out;
  out << source << ":" << line << ": " << message;
  return out.str();
}

class LineParser {
 public:
  LineParser(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  ComplexFile run() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
      std::istringstream words(raw);
      std::vector<std::string> tok;
      for (std::string w; words >> w;) tok.push_back(w);
      if (tok.empty()) continue;
      dispatch(tok);
    }
    return finish();
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(source_, line_, message); }

  long number(const std::string& s) const {
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) fail("expected an integer, got '" + s + "'");
    return value;
  }

  std::uint32_t vertex(const std::string& s) const {
    const long v = number(s);
    if (!vertices_) fail("'vertices' must come before vertex references");
    if (v < 0 || v >= *vertices_) fail("unknown vertex id " + s);
    return static_cast<std::uint32_t>(v);
  }

  void arity(const std::vector<std::string>& tok, std::size_t n) const {
    if (tok.size() != n) fail("'" + tok[0] + "' takes " + std::to_string(n - 1) + " argument(s)");
  }

  void dispatch(const std::vector<std::string>& tok) {
    const std::string& key = tok[0];
    if (key == "complex") {
      arity(tok, 2);
      out_.name = tok[1];
    } else if (key == "mode") {
      arity(tok, 2);
      if (tok[1] != "flag" && tok[1] != "facets") fail("mode must be 'flag' or 'facets'");
      if (!edges_.empty() || !facets_.empty()) fail("'mode' must come before edges and facets");
      mode_ = tok[1];
    } else if (key == "vertices") {
      arity(tok, 2);
      if (vertices_) fail("'vertices' given twice");
      const long n = number(tok[1]);
      if (n < 0) fail("vertex count must be non-negative");
      vertices_ = n;
    } else if (key == "edge") {
      if (mode_ != "flag") fail("'edge' requires mode flag");
      arity(tok, 3);
      const auto u = vertex(tok[1]);
      const auto v = vertex(tok[2]);
      if (u == v) fail("self-loop at vertex " + tok[1]);
      edges_.emplace(std::min(u, v), std::max(u, v));
    } else if (key == "facet") {
      if (mode_ != "facets") fail("'facet' requires mode facets");
      if (tok.size() < 2) fail("'facet' needs at least one vertex");
      std::vector<VertexId> vs;
      for (std::size_t i = 1; i < tok.size(); ++i) vs.emplace_back(vertex(tok[i]));
      const std::set<VertexId> distinct(vs.begin(), vs.end());
      if (distinct.size() != vs.size()) fail("facet repeats a vertex");
      facets_.emplace_back(std::move(vs));
    } else if (key == "window") {
      arity(tok, 4);
      const Hops r = static_cast<Hops>(number(tok[2]));
      const Hops m = static_cast<Hops>(number(tok[3]));
      if (m < 0 || m > r) fail("window needs 0 <= margin <= radius");
      out_.window = WindowSpec{VertexId(vertex(tok[1])), r, m};
    } else if (key == "automorphism") {
      arity(tok, 3);
      if (tok[2] != "total" && tok[2] != "partial") fail("automorphism kind must be 'total' or 'partial'");
      close_map();
      map_name_ = tok[1];
      map_total_ = tok[2] == "total";
      map_line_ = line_;
    } else if (key == "map") {
      arity(tok, 3);
      if (!map_name_) fail("'map' outside an automorphism block");
      const VertexId u(vertex(tok[1]));
      const VertexId v(vertex(tok[2]));
      for (const auto& p : map_pairs_) {
        if (p.first == u) fail("vertex " + tok[1] + " mapped twice");
      }
      map_pairs_.emplace_back(u, v);
    } else {
      fail("unknown directive '" + key + "'");
    }
  }

  void close_map() {
    if (!map_name_) return;
    for (const auto& a : out_.automorphisms) {
      if (a.name() == *map_name_) throw ParseError(source_, map_line_, "automorphism '" + *map_name_ + "' defined twice");
    }
    out_.automorphisms.emplace_back(std::move(map_pairs_), map_total_, *map_name_);
    map_pairs_.clear();
    map_name_.reset();
  }

  ComplexFile finish() {
    close_map();
    if (!vertices_) throw ParseError(source_, line_, "missing 'vertices' line");
    if (out_.name.empty()) out_.name = source_;
    if (mode_ == "facets") {
      if (facets_.empty() && *vertices_ > 0) throw ParseError(source_, line_, "facets mode without facets");
      out_.facets = FacetComplex(facets_);
      for (const auto& f : facets_) {
        const auto vs = f.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
          for (std::size_t j = i + 1; j < vs.size(); ++j) edges_.emplace(vs[i].value, vs[j].value);
        }
      }
      std::set<std::uint32_t> covered;
      for (const auto& f : facets_) {
        for (VertexId v : f.vertices()) covered.insert(v.value);
      }
      if (covered.size() != static_cast<std::size_t>(*vertices_)) {
        throw ParseError(source_, line_, "every vertex must lie in some facet");
      }
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges(edges_.begin(), edges_.end());
    out_.complex = build_flag_complex(Graph1Skeleton::from_edges(static_cast<std::uint32_t>(*vertices_), edges));
    for (const auto& h : out_.automorphisms) {
      if (h.total() && h.size() != out_.complex.size()) {
        throw InputError(located(source_, line_, "total automorphism '" + h.name() + "' does not map every vertex"));
      }
    }
    return std::move(out_);
  }

  std::istream& in_;
  std::string source_;
  int line_ = 0;
  ComplexFile out_;
  std::string mode_ = "flag";
  std::optional<long> vertices_;
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<Simplex> facets_;
  std::optional<std::string> map_name_;
  bool map_total_ = true;
  int map_line_ = 0;
  std::vector<std::pair<VertexId, VertexId>> map_pairs_;
};

}  // namespace

ParseError::ParseError(const std::string& source, int line, const std::string& message)
    : InputError(located(source, line, message)), line_(line) {}

Region ComplexFile::region() const {
  if (window) return Region::window(complex, window->basepoint, window->radius, window->margin);
  return Region::whole(complex);
}

const Automorphism& ComplexFile::automorphism(const std::string& wanted) const {
  for (const auto& h : automorphisms) {
    if (h.name() == wanted) return h;
  }
  throw InputError("no automorphism named '" + wanted + "' in " + name);
}

ComplexFile parse_complex(std::istream& in, const std::string& source) { return LineParser(in, source).run(); }

ComplexFile read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_complex(in, path);
}

void write_complex(std::ostream& out, const ComplexFile& file) {
  const FlagComplex& x = file.complex;
  // Ids are written as local indices so that the file is self-contained.
  out << "complex " << file.name << "\n";
  if (file.facets) {
    out << "mode facets\nvertices " << x.size() << "\n";
    for (const auto& f : file.facets->facets()) {
      out << "facet";
      for (VertexId v : f.vertices()) out << " " << x.require_index(v);
      out << "\n";
    }
  } else {
    out << "mode flag\nvertices " << x.size() << "\n";
    for (auto [a, b] : x.edges()) out << "edge " << a << " " << b << "\n";
  }
  if (file.window) {
    out << "window " << x.require_index(file.window->basepoint) << " " << file.window->radius << " "
        << file.window->margin << "\n";
  }
  for (const auto& h : file.automorphisms) {
    out << "automorphism " << h.name() << " " << (h.total() ? "total" : "partial") << "\n";
    for (const auto& [u, v] : h.pairs()) out << "map " << x.require_index(u) << " " << x.require_index(v) << "\n";
  }
}

}  // namespace wsys
