#include "vcell/planar_map.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "vcell/errors.hpp"

namespace vcell {

namespace {

bool is_permutation_of_range(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

// Orbits of a permutation, each starting at its smallest element, ordered by it.
std::vector<std::vector<int>> orbits(const std::vector<int>& perm, std::vector<int>& orbit_of) {
  std::vector<std::vector<int>> out;
  orbit_of.assign(perm.size(), -1);
  for (int start = 0; start < static_cast<int>(perm.size()); ++start) {
    if (orbit_of[start] >= 0) continue;
    std::vector<int> cyc;
    for (int d = start; orbit_of[d] < 0; d = perm[d]) {
      orbit_of[d] = static_cast<int>(out.size());
      cyc.push_back(d);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace

PlanarMap::PlanarMap(std::vector<int> alpha, std::vector<int> sigma)
    : alpha_(std::move(alpha)), sigma_(std::move(sigma)) {
  well_formed_ = alpha_.size() == sigma_.size() && is_permutation_of_range(alpha_) &&
                 is_permutation_of_range(sigma_);
  if (!well_formed_) return;
  sigma_inv_.assign(sigma_.size(), 0);
  for (std::size_t d = 0; d < sigma_.size(); ++d) sigma_inv_[sigma_[d]] = static_cast<int>(d);
  vertices_ = orbits(sigma_, vertex_of_);
  std::vector<int> phi(alpha_.size());
  for (std::size_t d = 0; d < alpha_.size(); ++d) phi[d] = sigma_[alpha_[d]];
  faces_ = orbits(phi, face_of_);
}

PlanarMap PlanarMap::from_cycles(const std::vector<std::vector<int>>& vertex_cycles,
                                 const std::vector<std::pair<int, int>>& edges) {
  std::size_t n = 0;
  for (const auto& c : vertex_cycles) n += c.size();
  std::vector<int> sigma(n, -1), alpha(n, -1);
  for (const auto& c : vertex_cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int d = c[k];
      if (d < 0 || static_cast<std::size_t>(d) >= n) throw DomainError("from_cycles: dart out of range");
      sigma[d] = c[(k + 1) % c.size()];
    }
  }
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw DomainError("from_cycles: edge dart out of range");
    }
    alpha[a] = b;
    alpha[b] = a;
  }
  return PlanarMap(std::move(alpha), std::move(sigma));
}

void PlanarMap::set_labels(std::vector<int> labels) {
  if (static_cast<int>(labels.size()) != num_vertices()) {
    throw DomainError("set_labels: expected one label per vertex");
  }
  labels_ = std::move(labels);
}

std::vector<std::string> validate(const PlanarMap& m) {
  std::vector<std::string> issues;
  const auto& alpha = m.alpha_array();
  const auto& sigma = m.sigma_array();
  if (alpha.empty()) issues.emplace_back("empty map: no darts");
  if (alpha.size() != sigma.size()) {
    issues.emplace_back("size mismatch: alpha and sigma act on different dart counts");
  }
  if (!is_permutation_of_range(alpha)) {
    issues.emplace_back("involution violation: alpha is not a permutation of the darts");
  } else {
    for (std::size_t d = 0; d < alpha.size(); ++d) {
      if (alpha[d] == static_cast<int>(d) || alpha[alpha[d]] != static_cast<int>(d)) {
        issues.push_back("involution violation: alpha at dart " + std::to_string(d));
        break;
      }
    }
  }
  if (!is_permutation_of_range(sigma)) {
    issues.emplace_back("permutation violation: sigma is not a permutation of the darts");
  }
  if (!issues.empty() || !m.well_formed()) return issues;

  // Transitivity of <sigma, alpha>.
  std::vector<char> seen(alpha.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    for (int e : {alpha[d], sigma[d], m.sigma_inv(d)}) {
      if (!seen[e]) {
        seen[e] = 1;
        ++reached;
        stack.push_back(e);
      }
    }
  }
  if (reached != alpha.size()) issues.emplace_back("connectivity violation: map is not connected");

  const int euler = m.num_vertices() - m.num_edges() + m.num_faces();
  if (euler != 2) {
    issues.push_back("Euler violation: V - E + F = " + std::to_string(euler) + " (genus > 0)");
  }
  if (m.has_labels() && static_cast<int>(m.labels().size()) != m.num_vertices()) {
    issues.emplace_back("label count differs from vertex count");
  }
  return issues;
}

std::vector<int> distances(const PlanarMap& m, int source) {
  if (source < 0 || source >= m.num_vertices()) throw RangeError("distances: bad source vertex");
  std::vector<int> dist(static_cast<std::size_t>(m.num_vertices()), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int d : m.vertex_darts(v)) {
      const int w = m.head(d);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> rooted_code(const PlanarMap& m, int root, const DartTags& tags) {
  const int n = m.num_darts();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  index[root] = 0;
  order.push_back(root);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int d = order[k];
    for (int e : {m.alpha(d), m.sigma(d)}) {
      if (index[e] < 0) {
        index[e] = static_cast<int>(order.size());
        order.push_back(e);
      }
    }
  }
  std::vector<int> code;
  code.reserve(order.size() * 4 + 1);
  code.push_back(static_cast<int>(order.size()));
  for (int d : order) {
    code.push_back(index[m.alpha(d)]);
    code.push_back(index[m.sigma(d)]);
    code.push_back(m.has_labels() ? m.dart_label(d) : 0);
    code.push_back(tags.empty() ? 0 : tags[d]);
  }
  return code;
}

std::vector<int> canonical_code(const PlanarMap& m, const DartTags& tags) {
  std::vector<int> best;
  for (int r = 0; r < m.num_darts(); ++r) {
    auto c = rooted_code(m, r, tags);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

}  // namespace vcell
