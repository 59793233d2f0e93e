#include "smoothpoly/iso_dedup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace smoothpoly {

namespace {

// Primitive edge directions leaving each vertex.
std::vector<std::vector<IntVector>> vertex_edge_directions(const LatticePolytope& p) {
  std::vector<std::vector<IntVector>> dirs(p.vertices.size());
  for (const auto& e : edges_of(p)) {
    dirs[e.endpoints.first].push_back(e.direction);
    dirs[e.endpoints.second].push_back(negate(e.direction));
  }
  for (std::size_t v = 0; v < dirs.size(); ++v) {
    if (dirs[v].size() != p.dim) {
      throw Error(ErrorCode::InvariantViolation, "polytope is not simple at " + to_string(p.vertices[v]));
    }
  }
  return dirs;
}

std::string encode(const std::vector<IntVector>& vertices) {
  std::ostringstream os;
  for (const auto& v : vertices) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ';';
  }
  return os.str();
}

template <class F>
void for_each_anchor(const LatticePolytope& p, const std::vector<std::vector<IntVector>>& dirs, F&& f) {
  const std::size_t d = p.dim;
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    do {
      std::vector<IntVector> cols;
      for (auto i : perm) cols.push_back(dirs[v][i]);
      f(v, from_columns(cols));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

}  // namespace

CanonicalPolytope canonical_form(const LatticePolytope& p) {
  const auto dirs = vertex_edge_directions(p);
  std::optional<std::vector<IntVector>> best;
  for_each_anchor(p, dirs, [&](std::size_t v, const IntMatrix& e) {
    const IntMatrix inv = inverse_unimodular(e);
    std::vector<IntVector> mapped;
    mapped.reserve(p.vertices.size());
    for (const auto& w : p.vertices) mapped.push_back(smoothpoly::apply(inv, subtract(w, p.vertices[v])));
    IntVector lo = mapped.front();
    for (const auto& w : mapped) {
      for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], w[i]);
    }
    for (auto& w : mapped) w = subtract(w, lo);
    std::sort(mapped.begin(), mapped.end());
    if (!best || mapped < *best) best = std::move(mapped);
  });
  CanonicalPolytope out;
  out.vertices = std::move(*best);
  out.key = encode(out.vertices);
  return out;
}

bool verify_witness(const LatticePolytope& p, const LatticePolytope& q, const IsoWitness& w) {
  const Int det = determinant(w.u);
  if (det != 1 && det != -1) return false;
  std::vector<IntVector> image;
  for (const auto& v : p.vertices) image.push_back(add(smoothpoly::apply(w.u, v), w.t));
  std::sort(image.begin(), image.end());
  std::vector<IntVector> target = q.vertices;
  std::sort(target.begin(), target.end());
  return image == target;
}

std::optional<IsoWitness> lattice_isomorphic(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim != q.dim || p.vertices.size() != q.vertices.size()) return std::nullopt;
  const auto dp = vertex_edge_directions(p);
  const auto dq = vertex_edge_directions(q);
  const IntMatrix ep_inv = inverse_unimodular(from_columns(dp[0]));
  const IntVector& v0 = p.vertices[0];
  std::optional<IsoWitness> found;
  for_each_anchor(q, dq, [&](std::size_t w, const IntMatrix& ew) {
    if (found) return;
    IsoWitness cand;
    cand.u = multiply(ew, ep_inv);
    cand.t = subtract(q.vertices[w], smoothpoly::apply(cand.u, v0));
    if (verify_witness(p, q, cand)) found = std::move(cand);
  });
  return found;
}

std::vector<ClassificationRecord> dedup(std::vector<ClassificationRecord> records) {
  std::map<std::string, ClassificationRecord> by_key;
  for (auto& r : records) {
    auto it = by_key.find(r.key);
    if (it == by_key.end()) {
      by_key.emplace(r.key, std::move(r));
    } else if (r.provenance < it->second.provenance) {
      it->second = std::move(r);
    }
  }
  std::vector<ClassificationRecord> out;
  out.reserve(by_key.size());
  for (auto& [k, r] : by_key) out.push_back(std::move(r));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.num_lattice_points != b.num_lattice_points) return a.num_lattice_points < b.num_lattice_points;
    return a.num_vertices < b.num_vertices;
  });
  return out;
}

}  // namespace smoothpoly
