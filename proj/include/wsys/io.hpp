#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wsys/isometry.hpp"

namespace wsys {

/// Input error tied to a line of a complex file.
class ParseError : public InputError {
 public:
  ParseError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct WindowSpec {
  VertexId basepoint;
  Hops radius = 0;
  Hops margin = 0;
};

/// Contents of a complex file.
///
///   complex <name>
///   mode flag|facets
///   vertices <n>
///   edge u v              (flag mode)
///   facet v1 v2 ... vk    (facets mode)
///   window <base> <R> <m>
///   automorphism <name> total|partial
///   map u v               (belongs to the preceding automorphism)
///
/// `#` starts a comment. In facets mode `complex` is the clique complex of
/// the facets' 1-skeleton; `facets` keeps the original for the flag check.
struct ComplexFile {
  std::string name;
  FlagComplex complex;
  std::optional<FacetComplex> facets;
  std::optional<WindowSpec> window;
  std::vector<Automorphism> automorphisms;

  Region region() const;
  /// Throws InputError for an unknown name.
  const Automorphism& automorphism(const std::string& name) const;
};

ComplexFile parse_complex(std::istream& in, const std::string& source = "<input>");
ComplexFile read_complex_file(const std::string& path);

void write_complex(std::ostream& out, const ComplexFile& file);

}  // namespace wsys
