#pragma once

#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "monocal/pointed_map.hpp"

namespace monocal {

// ---------------------------------------------------------------------------
// The refinement poset K_P: chains of surjective pointed maps
// P_* -> P_1* -> ... -> {}_*, ordered by factoring a step into two surjective
// steps.  Only the reduced skeleton is enumerated (no isomorphism factors);
// intermediate sets carry canonical labels, each named after the smallest
// ground-set element mapping onto it.
// ---------------------------------------------------------------------------

struct RefinementChain {
  // sets[0] is the ground set, sets.back() is empty; maps[i]: sets[i] -> sets[i+1].
  std::vector<std::vector<std::string>> sets;
  std::vector<PointedMap> maps;

  std::size_t steps() const { return maps.size(); }

  static RefinementChain minimal(const std::vector<std::string>& ground) {
    RefinementChain c;
    c.sets = {ground, {}};
    c.maps = {PointedMap(ground, {}, std::vector<int>(ground.size(), PointedMap::kStar))};
    return c;
  }

  void validate() const {
    if (sets.size() != maps.size() + 1 || sets.empty()) throw std::invalid_argument("RefinementChain: shape mismatch");
    if (!sets.back().empty()) throw std::invalid_argument("RefinementChain: chain must end at the empty set");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      if (maps[i].source() != sets[i] || maps[i].target() != sets[i + 1])
        throw std::invalid_argument("RefinementChain: map endpoints do not match the sets");
      if (!maps[i].is_surjective()) throw std::invalid_argument("RefinementChain: maps must be surjective");
    }
  }

  // Composite assignment from the ground set into level `level`.
  std::vector<int> composite_to(std::size_t level) const {
    std::vector<int> comp(sets[0].size());
    for (std::size_t p = 0; p < comp.size(); ++p) comp[p] = static_cast<int>(p);
    for (std::size_t s = 0; s < level; ++s)
      for (auto& v : comp)
        if (v != PointedMap::kStar) v = maps[s].apply(static_cast<std::size_t>(v));
    return comp;
  }

  // Rename every intermediate set by the min-source rule and sort its
  // elements accordingly.  Makes chain equality literal equality.
  void canonicalize() {
    for (std::size_t level = 1; level + 1 < sets.size(); ++level) {
      auto comp = composite_to(level);
      std::size_t n = sets[level].size();
      std::vector<std::size_t> minsrc(n, sets[0].size());
      for (std::size_t p = 0; p < comp.size(); ++p)
        if (comp[p] != PointedMap::kStar) minsrc[comp[p]] = std::min(minsrc[comp[p]], p);
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return minsrc[x] < minsrc[y]; });
      std::vector<int> newpos(n);
      std::vector<std::string> labels(n);
      for (std::size_t np = 0; np < n; ++np) {
        newpos[order[np]] = static_cast<int>(np);
        labels[np] = sets[0][minsrc[order[np]]];
      }
      sets[level] = labels;
      // incoming map: remap values
      std::vector<int> in = maps[level - 1].assignment();
      for (auto& v : in)
        if (v != PointedMap::kStar) v = newpos[v];
      maps[level - 1] = PointedMap(sets[level - 1], labels, std::move(in));
      // outgoing map: permute sources
      std::vector<int> out(n);
      for (std::size_t np = 0; np < n; ++np) out[np] = maps[level].apply(order[np]);
      maps[level] = PointedMap(labels, sets[level + 1], std::move(out));
    }
    if (!maps.empty()) {
      // normalize endpoint map objects against the (possibly relabeled) sets
      maps.front() = PointedMap(sets[0], sets[1], maps.front().assignment());
    }
  }

  std::string key() const {
    std::string k;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      k += "{";
      for (std::size_t i = 0; i < sets[s].size(); ++i) {
        if (i) k += ",";
        k += sets[s][i];
      }
      k += "}";
      if (s < maps.size()) {
        k += "[";
        for (std::size_t p = 0; p < maps[s].source_size(); ++p) {
          if (p) k += ",";
          int q = maps[s].apply(p);
          k += (q == PointedMap::kStar) ? "*" : std::to_string(q);
        }
        k += "]";
      }
    }
    return k;
  }

  bool operator==(const RefinementChain& o) const { return sets == o.sets && maps == o.maps; }
};

// All chains obtained by decomposing one step alpha_i = alpha'' . alpha' with
// both factors surjective, canonically relabeled and de-duplicated.  With
// reduced = true, decompositions where either factor is an isomorphism are
// dropped.
inline std::vector<RefinementChain> elementary_refinements(const RefinementChain& chain, bool reduced) {
  std::vector<RefinementChain> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < chain.maps.size(); ++i) {
    const auto& alpha = chain.maps[i];
    const auto& s_labels = chain.sets[i];
    std::size_t s_size = s_labels.size();
    std::size_t t_size = chain.sets[i + 1].size();
    std::size_t q_lo = reduced ? t_size + 1 : t_size;
    std::size_t q_hi = reduced ? (s_size == 0 ? 0 : s_size - 1) : s_size;
    for (std::size_t q_size = q_lo; q_size <= q_hi && q_size <= s_size; ++q_size) {
      if (q_size < t_size) continue;
      auto q_labels = default_labels(q_size);  // placeholder; canonicalize() renames
      for (auto& a1 : enumerate_pointed_maps(s_labels, q_labels)) {
        if (!a1.is_surjective()) continue;
        // fibers of a1 must refine those of alpha so that alpha'' exists
        std::vector<int> induced(q_size, PointedMap::kStar - 1);
        bool ok = true;
        for (std::size_t p = 0; p < s_size && ok; ++p) {
          int q = a1.apply(p);
          if (q == PointedMap::kStar) {
            if (alpha.apply(p) != PointedMap::kStar) ok = false;
            continue;
          }
          if (induced[q] == PointedMap::kStar - 1)
            induced[q] = alpha.apply(p);
          else if (induced[q] != alpha.apply(p))
            ok = false;
        }
        if (!ok) continue;
        for (auto& v : induced)
          if (v == PointedMap::kStar - 1) v = PointedMap::kStar;  // cannot occur: a1 surjective
        PointedMap a2(q_labels, chain.sets[i + 1], induced);
        if (reduced && (a1.is_isomorphism() || a2.is_isomorphism())) continue;
        RefinementChain refined;
        refined.sets = chain.sets;
        refined.sets.insert(refined.sets.begin() + static_cast<long>(i) + 1, q_labels);
        refined.maps = chain.maps;
        refined.maps[i] = a1;
        refined.maps.insert(refined.maps.begin() + static_cast<long>(i) + 1, a2);
        refined.canonicalize();
        refined.validate();
        if (seen.insert(refined.key()).second) out.push_back(std::move(refined));
      }
    }
  }
  return out;
}

struct PosetK {
  std::vector<std::string> ground;
  std::vector<RefinementChain> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges;  // single refinement steps
  std::vector<std::vector<bool>> leq;                            // reflexive-transitive closure
  std::size_t minimal_index = 0;

  std::string to_dot() const {
    std::string s = "digraph K {\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
      s += "  n" + std::to_string(i) + " [label=\"" + nodes[i].key() + "\"];\n";
    for (auto& e : cover_edges)
      s += "  n" + std::to_string(e.first) + " -> n" + std::to_string(e.second) + ";\n";
    s += "}\n";
    return s;
  }
};

// Breadth-first enumeration of the reduced skeleton from the minimal chain.
inline PosetK enumerate_poset(const std::vector<std::string>& ground, unsigned max_length) {
  if (ground.size() > 5) throw std::invalid_argument("enumerate_poset: ground sets larger than 5 are not supported");
  if (max_length < 1) throw std::invalid_argument("enumerate_poset: max_length must be >= 1");
  PosetK k;
  k.ground = ground;
  std::map<std::string, std::size_t> index;
  std::queue<std::size_t> todo;
  RefinementChain min = RefinementChain::minimal(ground);
  min.canonicalize();
  index[min.key()] = 0;
  k.nodes.push_back(min);
  todo.push(0);
  while (!todo.empty()) {
    std::size_t cur = todo.front();
    todo.pop();
    if (k.nodes[cur].steps() >= max_length) continue;
    for (auto& next : elementary_refinements(k.nodes[cur], /*reduced=*/true)) {
      auto it = index.find(next.key());
      std::size_t id;
      if (it == index.end()) {
        id = k.nodes.size();
        index[next.key()] = id;
        k.nodes.push_back(next);
        todo.push(id);
      } else {
        id = it->second;
      }
      k.cover_edges.emplace_back(cur, id);
    }
  }
  // reflexive-transitive closure over the cover relation
  std::size_t n = k.nodes.size();
  k.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) k.leq[i][i] = true;
  for (auto& e : k.cover_edges) k.leq[e.first][e.second] = true;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      if (k.leq[i][m])
        for (std::size_t j = 0; j < n; ++j)
          if (k.leq[m][j]) k.leq[i][j] = true;
  k.minimal_index = 0;
  return k;
}

// The one-step chain is below every element, and nothing else is.
inline bool check_initiality(const PosetK& k) {
  std::size_t n = k.nodes.size();
  std::size_t bottom_count = 0;
  bool ok = false;
  for (std::size_t i = 0; i < n; ++i) {
    bool below_all = true;
    for (std::size_t j = 0; j < n && below_all; ++j) below_all = k.leq[i][j];
    if (below_all) {
      ++bottom_count;
      ok = k.nodes[i].steps() == 1;
    }
  }
  return bottom_count == 1 && ok;
}

// Connectivity of the comparability graph: a machine-checkable consequence of
// the localized category being a contractible groupoid.
inline bool check_groupoid_connectivity(const PosetK& k) {
  std::size_t n = k.nodes.size();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t cnt = 1;
  while (!q.empty()) {
    std::size_t cur = q.front();
    q.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[j] || cur == j) continue;
      if (k.leq[cur][j] || k.leq[j][cur]) {
        seen[j] = true;
        ++cnt;
        q.push(j);
      }
    }
  }
  return cnt == n;
}

}  // namespace monocal
