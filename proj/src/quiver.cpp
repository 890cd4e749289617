#include "arcmod/quiver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace arcmod {

bool Quiver::operator==(const Quiver& o) const {
  if (vertex_count != o.vertex_count) return false;
  auto a = arrows, b = o.arrows;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

int Quiver::arrows_between(int s, int t) const {
  int c = 0;
  for (auto& [a, b] : arrows)
    if (a == s && b == t) ++c;
  return c;
}

std::vector<int> Quiver::sinks() const {
  std::vector<int> r;
  for (int v = 1; v <= vertex_count; ++v)
    if (is_sink(v)) r.push_back(v);
  return r;
}

std::vector<int> Quiver::sources() const {
  std::vector<int> r;
  for (int v = 1; v <= vertex_count; ++v)
    if (is_source(v)) r.push_back(v);
  return r;
}

bool Quiver::is_sink(int v) const {
  for (auto& [s, t] : arrows)
    if (s == v) return false;
  return true;
}

bool Quiver::is_source(int v) const {
  for (auto& [s, t] : arrows)
    if (t == v) return false;
  return true;
}

QuiverReport validate_quiver(const Quiver& q) {
  if (q.vertex_count <= 0) throw InputError("index", "quiver needs at least one vertex");
  for (auto& [s, t] : q.arrows) {
    if (s < 1 || s > q.vertex_count || t < 1 || t > q.vertex_count)
      throw InputError("index", "arrow (" + std::to_string(s) + "," + std::to_string(t) +
                                    ") out of vertex range");
    if (s == t)
      throw InputError("loop", "loop at vertex " + std::to_string(s));
  }
  for (auto& [s, t] : q.arrows)
    if (q.arrows_between(t, s) > 0)
      throw InputError("two_cycle", "directed 2-cycle between " + std::to_string(s) + " and " +
                                        std::to_string(t));

  QuiverReport rep;

  // Kahn topological sort.
  std::vector<int> indeg(q.vertex_count + 1, 0);
  for (auto& [s, t] : q.arrows) ++indeg[t];
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 1; v <= q.vertex_count; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  std::vector<int> deg = indeg;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (auto& [s, t] : q.arrows)
      if (s == v && --deg[t] == 0) ready.push(t);
  }
  rep.acyclic = (int)order.size() == q.vertex_count;
  if (rep.acyclic) rep.topological_order = order;

  // Affine D recognition: underlying graph is a tree with exactly two
  // trivalent vertices, four leaves, and every leaf attached to a trivalent
  // vertex (this covers the short n = 5 shape as well).
  std::set<std::pair<int, int>> und;
  for (auto& [s, t] : q.arrows) und.insert({std::min(s, t), std::max(s, t)});
  std::vector<int> degree(q.vertex_count + 1, 0);
  for (auto& [a, b] : und) {
    ++degree[a];
    ++degree[b];
  }
  bool tree = (int)und.size() == q.vertex_count - 1;
  if (tree) {
    // connectivity
    std::vector<bool> seen(q.vertex_count + 1, false);
    std::queue<int> bfs;
    bfs.push(1);
    seen[1] = true;
    int found = 1;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (auto& [a, b] : und) {
        int w = (a == v) ? b : (b == v ? a : 0);
        if (w && !seen[w]) {
          seen[w] = true;
          ++found;
          bfs.push(w);
        }
      }
    }
    tree = found == q.vertex_count;
  }
  if (tree && q.vertex_count >= 6) {
    int leaves = 0, forks = 0, mids = 0;
    for (int v = 1; v <= q.vertex_count; ++v) {
      if (degree[v] == 1) ++leaves;
      else if (degree[v] == 2) ++mids;
      else if (degree[v] == 3) ++forks;
      else { leaves = -100; break; }
    }
    bool leaf_shape = true;
    if (leaves == 4 && forks == 2) {
      for (auto& [a, b] : und) {
        if (degree[a] == 1 && degree[b] != 3) leaf_shape = false;
        if (degree[b] == 1 && degree[a] != 3) leaf_shape = false;
      }
    }
    rep.affine_d = leaves == 4 && forks == 2 && mids == q.vertex_count - 6 && leaf_shape;
  }
  return rep;
}

Quiver mutate(const Quiver& q, int vertex) {
  if (vertex < 1 || vertex > q.vertex_count)
    throw InputError("index", "mutation vertex out of range");
  std::vector<std::pair<int, int>> arrows;
  // step 1: composite arrows j -> k for each path j -> vertex -> k
  for (auto& [j, i] : q.arrows) {
    if (i != vertex) continue;
    for (auto& [i2, k] : q.arrows)
      if (i2 == vertex) arrows.push_back({j, k});
  }
  // step 2: reverse arrows at the vertex, copy the rest
  for (auto& [s, t] : q.arrows) {
    if (s == vertex || t == vertex) arrows.push_back({t, s});
    else arrows.push_back({s, t});
  }
  // step 3: delete 2-cycles pairwise
  std::map<std::pair<int, int>, int> count;
  for (auto& a : arrows) ++count[a];
  Quiver out;
  out.vertex_count = q.vertex_count;
  for (auto& [key, c] : count) {
    auto rev = std::make_pair(key.second, key.first);
    int opp = count.count(rev) ? count[rev] : 0;
    int keep = c - std::min(c, opp);
    for (int k = 0; k < keep; ++k) out.arrows.push_back(key);
  }
  std::sort(out.arrows.begin(), out.arrows.end());
  return out;
}

Quiver opposite(const Quiver& q) {
  Quiver r;
  r.vertex_count = q.vertex_count;
  for (auto& [s, t] : q.arrows) r.arrows.push_back({t, s});
  std::sort(r.arrows.begin(), r.arrows.end());
  return r;
}

Quiver canonical_affine_d(int n) {
  if (n < 5) throw InputError("too_small", "affine D needs n >= 5");
  Quiver q;
  q.vertex_count = n + 1;
  q.arrows.push_back({1, 3});
  q.arrows.push_back({2, 3});
  for (int k = 3; k <= n - 2; ++k) q.arrows.push_back({k, k + 1});
  q.arrows.push_back({n - 1, n});
  q.arrows.push_back({n - 1, n + 1});
  return q;
}

EulerData::EulerData(const Quiver& q) {
  int m = q.vertex_count;
  e_ = QMat(m, m);
  for (int i = 0; i < m; ++i) e_.at(i, i) = 1;
  for (auto& [s, t] : q.arrows) e_.at(s - 1, t - 1) -= 1;
  // Coxeter transform: dim(tau M) = phi * dim(M) for non-projectives.
  // With the pairing <x,y> = x^T E y this is phi = -E^{-1} E^T, fixed here by
  // the defining identity <y,x> = -<x,phi y> and confirmed against the BGP
  // realization of tau in the tests.
  phi_ = -(e_.inverse() * e_.transpose());
  phi_inv_ = phi_.inverse();
}

BigInt EulerData::pairing(const std::vector<BigInt>& x, const std::vector<BigInt>& y) const {
  if (x.size() != e_.rows() || y.size() != e_.rows())
    throw InputError("dimension_mismatch", "euler pairing: vector length != vertex count");
  Rat acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (e_.at(i, j) != 0) acc += e_.at(i, j) * Rat(x[i]) * Rat(y[j]);
  return numerator(acc);
}

std::vector<BigInt> delta_vector(int n) {
  std::vector<BigInt> d(n + 1, 2);
  d[0] = d[1] = d[n - 1] = d[n] = 1;
  return d;
}

}  // namespace arcmod
