#include "wsys/types.hpp"

#include <algorithm>
#include <sstream>

namespace wsys {

std::string hops_to_string(Hops h) { return h == kInfinite ? std::string("inf") : std::to_string(h); }

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("simplex must be nonempty");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InputError("simplex has a repeated vertex");
  }
}

bool Simplex::contains(VertexId v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Yes:
      return "Yes";
    case Answer::No:
      return "No";
    case Answer::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::vector<VertexId> ExtendedWheel5::vertices() const {
  std::vector<VertexId> out{center};
  out.insert(out.end(), rim.begin(), rim.end());
  out.push_back(apex);
  return out;
}

namespace {

void put_list(std::ostream& os, std::span<const VertexId> vs) {
  for (VertexId v : vs) os << ' ' << v;
}

struct Describer {
  std::ostringstream os;

  void operator()(const CycleWitness& w) {
    os << "cycle";
    put_list(os, w.cycle);
    if (w.ambient) {
      os << " in link of simplex";
      put_list(os, w.ambient->vertices());
    }
  }
  void operator()(const SimplexWitness& w) {
    os << "simplex";
    put_list(os, w.simplex.vertices());
  }
  void operator()(const TripleWitness& w) { os << "triple " << w.u << ' ' << w.v << ' ' << w.w; }
  void operator()(const QuadrupleWitness& w) {
    os << "quadruple " << w.u << ' ' << w.v << ' ' << w.w << ' ' << w.z;
  }
  void operator()(const WheelWitness& w) {
    os << "wheel " << w.wheel.center << ';';
    put_list(os, w.wheel.rim);
    os << "; " << w.wheel.apex;
  }
  void operator()(const SphereWitness& w) {
    os << "sphere " << w.center << " level " << w.level << " simplex";
    put_list(os, w.sigma.vertices());
  }
  void operator()(const PairWitness& w) {
    os << "pair " << w.u << ' ' << w.v << " expected " << hops_to_string(w.expected) << " actual "
       << hops_to_string(w.actual);
  }
  void operator()(const IndexPairWitness& w) {
    os << "index-pair " << w.a << ' ' << w.b << " expected " << hops_to_string(w.expected) << " actual "
       << hops_to_string(w.actual);
  }
  void operator()(const VertexWitness& w) { os << "vertex " << w.v << " value " << hops_to_string(w.value); }
};

}  // namespace

std::string describe(const Witness& w) {
  Describer d;
  std::visit(d, w);
  return d.os.str();
}

}  // namespace wsys
