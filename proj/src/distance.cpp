#include "wsys/distance.hpp"

#include <algorithm>
#include <deque>

namespace wsys {

void bfs_distances(const FlagComplex& x, int source, std::vector<Hops>& out) {
  out.assign(x.size(), kInfinite);
  std::vector<int> queue;
  queue.reserve(x.size());
  out[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    const Hops next = out[static_cast<std::size_t>(v)] + 1;
    for (int w : x.neighbors(v)) {
      if (out[static_cast<std::size_t>(w)] == kInfinite) {
        out[static_cast<std::size_t>(w)] = next;
        queue.push_back(w);
      }
    }
  }
}

DistanceOracle::DistanceOracle(std::shared_ptr<const FlagComplex> x, std::size_t cache_threshold)
    : complex_(std::move(x)), n_(complex_->size()) {
  if (n_ > 0 && n_ <= cache_threshold) {
    table_.resize(n_ * n_);
    std::vector<Hops> row;
    for (std::size_t u = 0; u < n_; ++u) {
      bfs_distances(*complex_, static_cast<int>(u), row);
      std::copy(row.begin(), row.end(), table_.begin() + static_cast<std::ptrdiff_t>(u * n_));
    }
  }
}

Hops DistanceOracle::distance(int u, int v) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
  if (u == v) return 0;
  std::vector<Hops> row;
  bfs_distances(*complex_, u, row);
  return row[static_cast<std::size_t>(v)];
}

std::span<const Hops> DistanceOracle::row(int u, std::vector<Hops>& scratch) const {
  if (!table_.empty()) return {table_.data() + static_cast<std::size_t>(u) * n_, n_};
  bfs_distances(*complex_, u, scratch);
  return scratch;
}

std::vector<int> DistanceOracle::geodesic(int u, int v) const {
  std::vector<Hops> scratch;
  auto to_target = row(v, scratch);
  if (to_target[static_cast<std::size_t>(u)] == kInfinite) return {};
  std::vector<int> path{u};
  int current = u;
  while (current != v) {
    const Hops want = to_target[static_cast<std::size_t>(current)] - 1;
    // Neighbor lists are sorted, so the first hit is the least index.
    for (int w : complex_->neighbors(current)) {
      if (to_target[static_cast<std::size_t>(w)] == want) {
        current = w;
        break;
      }
    }
    path.push_back(current);
  }
  return path;
}

Hops distance(const FlagComplex& x, VertexId u, VertexId v) {
  const int i = x.require_index(u);
  const int j = x.require_index(v);
  std::vector<Hops> row;
  bfs_distances(x, i, row);
  return row[static_cast<std::size_t>(j)];
}

std::vector<VertexId> geodesic(const FlagComplex& x, VertexId u, VertexId v) {
  const int i = x.require_index(u);
  const int j = x.require_index(v);
  DistanceOracle oracle(std::make_shared<const FlagComplex>(x), 0);
  return x.to_ids(oracle.geodesic(i, j));
}

Region Region::whole(FlagComplex x, std::size_t cache_threshold) {
  Region r;
  r.complex_ = std::make_shared<const FlagComplex>(std::move(x));
  r.oracle_ = std::make_shared<const DistanceOracle>(r.complex_, cache_threshold);
  r.trusted_.assign(r.complex_->size(), 1);
  r.trusted_list_.resize(r.complex_->size());
  for (std::size_t i = 0; i < r.trusted_list_.size(); ++i) r.trusted_list_[i] = static_cast<int>(i);
  return r;
}

Region Region::window(FlagComplex x, VertexId basepoint, Hops radius, Hops margin, std::size_t cache_threshold) {
  if (margin < 0 || radius < 0) throw InputError("window radius and margin must be non-negative");
  Region r;
  r.complex_ = std::make_shared<const FlagComplex>(std::move(x));
  r.oracle_ = std::make_shared<const DistanceOracle>(r.complex_, cache_threshold);
  r.windowed_ = true;
  r.basepoint_ = basepoint;
  r.radius_ = radius;
  r.margin_ = margin;
  const int b = r.complex_->require_index(basepoint);
  std::vector<Hops> scratch;
  auto from_base = r.oracle_->row(b, scratch);
  r.trusted_.assign(r.complex_->size(), 0);
  for (std::size_t i = 0; i < from_base.size(); ++i) {
    if (from_base[i] != kInfinite && from_base[i] <= radius - margin) {
      r.trusted_[i] = 1;
      r.trusted_list_.push_back(static_cast<int>(i));
    }
  }
  return r;
}

TaggedDistance Region::trusted_distance(VertexId u, VertexId v) const {
  const int i = complex_->require_index(u);
  const int j = complex_->require_index(v);
  const Hops d = oracle_->distance(i, j);
  return {d, trusted_pair(i, j, d)};
}

Region Region::restrict_to(std::span<const int> local) const {
  Region r;
  auto sub = complex_->induced(local);
  r.complex_ = std::make_shared<const FlagComplex>(std::move(sub));
  r.oracle_ = std::make_shared<const DistanceOracle>(r.complex_);
  r.windowed_ = windowed_;
  r.basepoint_ = basepoint_;
  r.radius_ = radius_;
  r.margin_ = margin_;
  r.trusted_.assign(r.complex_->size(), 0);
  for (std::size_t i = 0; i < r.complex_->size(); ++i) {
    const int parent = *complex_->index_of(r.complex_->id(static_cast<int>(i)));
    if (trusted(parent)) {
      r.trusted_[i] = 1;
      r.trusted_list_.push_back(static_cast<int>(i));
    }
  }
  return r;
}

}  // namespace wsys
