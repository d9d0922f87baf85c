#include "vcell/enumerate_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vcell/errors.hpp"

namespace vcell {

int LabelledTree::min_label() const { return *std::min_element(label.begin(), label.end()); }

namespace {

class TreeCatalogue {
 public:
  explicit TreeCatalogue(int min_label) : min_label_(min_label) {}

  const std::vector<LabelledTree>& get(int edges, int root_label) {
    const auto key = std::make_pair(edges, root_label);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::vector<LabelledTree> out;
    if (root_label >= min_label_) {
      if (edges == 0) {
        out.push_back(LabelledTree{{-1}, {root_label}});
      } else {
        // First subtree of the root (k edges below its first child), then the
        // rest of the tree hanging from the same root.
        for (int k = 0; k <= edges - 1; ++k) {
          for (int delta : {-1, 0, 1}) {
            const auto& firsts = get(k, root_label + delta);
            if (firsts.empty()) continue;
            const auto& rests = get(edges - 1 - k, root_label);
            for (const auto& first : firsts) {
              for (const auto& rest : rests) out.push_back(graft(first, rest));
            }
          }
        }
      }
    }
    return cache_.emplace(key, std::move(out)).first->second;
  }

 private:
  static LabelledTree graft(const LabelledTree& first, const LabelledTree& rest) {
    LabelledTree t;
    const int nf = static_cast<int>(first.parent.size());
    t.parent.reserve(first.parent.size() + rest.parent.size());
    t.parent.push_back(-1);
    t.label.push_back(rest.label[0]);
    for (int k = 0; k < nf; ++k) {
      t.parent.push_back(k == 0 ? 0 : first.parent[k] + 1);
      t.label.push_back(first.label[k]);
    }
    for (std::size_t k = 1; k < rest.parent.size(); ++k) {
      const int p = rest.parent[k];
      t.parent.push_back(p == 0 ? 0 : p + nf);
      t.label.push_back(rest.label[k]);
    }
    return t;
  }

  int min_label_;
  std::map<std::pair<int, int>, std::vector<LabelledTree>> cache_;
};

// Cyclic label sequences of length L, labels in [1, top], steps in {-1,0,1}.
void loop_labelings(int L, int top, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == L) {
    if (std::abs(cur.back() - cur.front()) <= 1) out.push_back(cur);
    return;
  }
  const int prev = cur.back();
  for (int next = prev - 1; next <= prev + 1; ++next) {
    if (next < 1 || next > top) continue;
    cur.push_back(next);
    loop_labelings(L, top, cur, out);
    cur.pop_back();
  }
}

// Weak compositions of `total` into `parts` parts.
void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    visit(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    cur.push_back(k);
    compositions(total - k, parts, cur, visit);
    cur.pop_back();
  }
}

// Assembles the map: loop vertex i has, counterclockwise, its outgoing loop
// dart, the left tree's root edges (in f1), its incoming loop dart, then the
// right tree's root edges (in f2).
RootedIltFM build(const std::vector<int>& loop, const std::vector<const LabelledTree*>& slots) {
  const int L = static_cast<int>(loop.size());
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> cycles;
  std::vector<int> cycle_labels;
  for (int i = 0; i < L; ++i) edges.emplace_back(2 * i, 2 * ((i + 1) % L) + 1);
  int next_dart = 2 * L;

  std::vector<std::vector<int>> root_children(static_cast<std::size_t>(2 * L));
  for (int s = 0; s < 2 * L; ++s) {
    const LabelledTree& t = *slots[s];
    const int nv = static_cast<int>(t.parent.size());
    std::vector<int> up(static_cast<std::size_t>(nv), -1);
    std::vector<std::vector<int>> down(static_cast<std::size_t>(nv));
    for (int k = 1; k < nv; ++k) {
      const int d = next_dart++;
      const int u = next_dart++;
      edges.emplace_back(d, u);
      down[t.parent[k]].push_back(d);
      up[k] = u;
    }
    root_children[s] = down[0];
    for (int k = 1; k < nv; ++k) {
      std::vector<int> cyc{up[k]};
      cyc.insert(cyc.end(), down[k].begin(), down[k].end());
      cycles.push_back(std::move(cyc));
      cycle_labels.push_back(t.label[k]);
    }
  }
  for (int i = 0; i < L; ++i) {
    std::vector<int> cyc{2 * i};
    cyc.insert(cyc.end(), root_children[2 * i].begin(), root_children[2 * i].end());
    cyc.push_back(2 * i + 1);
    cyc.insert(cyc.end(), root_children[2 * i + 1].begin(), root_children[2 * i + 1].end());
    cycles.push_back(std::move(cyc));
    cycle_labels.push_back(loop[i]);
  }

  RootedIltFM r;
  r.iltfm.map = PlanarMap::from_cycles(cycles, edges);
  std::vector<int> labels(static_cast<std::size_t>(r.iltfm.map.num_vertices()), 0);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    labels[r.iltfm.map.vertex(cycles[c].front())] = cycle_labels[c];
  }
  r.iltfm.map.set_labels(std::move(labels));
  r.root = 0;
  r.iltfm.f1 = r.iltfm.map.face(r.iltfm.map.alpha(0));
  r.iltfm.f2 = r.iltfm.map.face(0);
  r.loop_length = L;
  r.loop_labels = loop;
  for (int i = 0; i < L; ++i) {
    r.edges_f1 += slots[2 * i]->edges();
    r.edges_f2 += slots[2 * i + 1]->edges();
  }
  return r;
}

}  // namespace

std::vector<LabelledTree> enum_labelled_trees(int edges, int root_label, int min_label) {
  if (edges < 0) throw DomainError("enum_labelled_trees: negative edge budget");
  TreeCatalogue cat(min_label);
  return cat.get(edges, root_label);
}

void for_each_rooted_iltfm(int E, const std::function<void(const RootedIltFM&)>& visit) {
  if (E < 1 || E > kMaxOracleEdges) {
    throw ConfigError("enum_rooted_iltfm: E must lie in [1, " + std::to_string(kMaxOracleEdges) + "]");
  }
  TreeCatalogue trees(1);
  std::set<std::vector<int>> seen;
  for (int L = 1; L <= E; ++L) {
    const int tree_edges = E - L;
    std::vector<std::vector<int>> loops;
    for (int first = 1; first <= E + 1; ++first) {
      std::vector<int> cur{first};
      loop_labelings(L, E + 1, cur, loops);
    }
    for (const auto& loop : loops) {
      const int loop_min = *std::min_element(loop.begin(), loop.end());
      std::vector<int> cur;
      compositions(tree_edges, 2 * L, cur, [&](const std::vector<int>& sizes) {
        std::vector<const std::vector<LabelledTree>*> lists;
        for (int s = 0; s < 2 * L; ++s) {
          lists.push_back(&trees.get(sizes[s], loop[s / 2]));
          if (lists.back()->empty()) return;
        }
        // Odometer over the cartesian product of the slot lists.
        std::vector<std::size_t> idx(lists.size(), 0);
        std::vector<const LabelledTree*> slots(lists.size());
        while (true) {
          int min1 = loop_min, min2 = loop_min;
          for (std::size_t s = 0; s < lists.size(); ++s) {
            slots[s] = &(*lists[s])[idx[s]];
            int& m = (s % 2 == 0) ? min1 : min2;
            m = std::min(m, slots[s]->min_label());
          }
          if (min1 == 1 && min2 == 1) {
            auto r = build(loop, slots);
            if (!seen.insert(rooted_code(r.iltfm.map, r.root, iltfm_tags(r.iltfm))).second) {
              throw InvariantViolation("enum_rooted_iltfm: duplicate rooted object generated");
            }
            visit(r);
          }
          std::size_t s = 0;
          while (s < idx.size() && ++idx[s] == lists[s]->size()) idx[s++] = 0;
          if (s == idx.size()) break;
        }
      });
    }
  }
}

std::vector<RootedIltFM> enum_rooted_iltfm(int E) {
  std::vector<RootedIltFM> out;
  for_each_rooted_iltfm(E, [&](const RootedIltFM& r) { out.push_back(r); });
  return out;
}

namespace {

void add_weight(std::map<std::pair<int, int>, Rational>& acc, const RootedIltFM& r) {
  const int L = r.loop_length;
  acc[{2 * r.edges_f1 + L, 2 * r.edges_f2 + L}] += Rational(1, L);
}

BiSeries to_series(const std::map<std::pair<int, int>, Rational>& acc, int max_degree) {
  std::vector<BiSeries::Term> terms;
  for (const auto& [ij, c] : acc) terms.push_back({ij.first, ij.second, c});
  return BiSeries::from_terms(max_degree, std::move(terms));
}

}  // namespace

BiSeries oracle_F(int E_max) {
  std::map<std::pair<int, int>, Rational> acc;
  for (int E = 1; E <= E_max; ++E) {
    for_each_rooted_iltfm(E, [&](const RootedIltFM& r) { add_weight(acc, r); });
  }
  return to_series(acc, 2 * E_max);
}

std::pair<BiSeries, BiSeries> oracle_parity_split(int E_max) {
  std::map<std::pair<int, int>, Rational> even, odd;
  for (int E = 1; E <= E_max; ++E) {
    for_each_rooted_iltfm(E, [&](const RootedIltFM& r) {
      add_weight(parity_classify(r.iltfm).odd ? odd : even, r);
    });
  }
  return {to_series(even, 2 * E_max), to_series(odd, 2 * E_max)};
}

}  // namespace vcell
