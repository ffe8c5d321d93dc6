#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "monocal/binomial.hpp"
#include "monocal/chain_complex.hpp"
#include "monocal/checks.hpp"
#include "monocal/jordan.hpp"
#include "monocal/matrix.hpp"
#include "monocal/pointed_map.hpp"
#include "monocal/refinement.hpp"

namespace monocal {

using json = nlohmann::json;

// All numeric payloads are serialized as strings ("p/q", "r mod l", plain
// integers) so that values stay exact and reports are byte-stable.

inline json to_json(const RescaleTable& t) {
  json rows = json::array();
  for (unsigned r = 0; r <= t.r_max; ++r) {
    json row = json::array();
    for (unsigned j = 0; j <= r; ++j) {
      json coeffs = json::array();
      for (const auto& c : t.rows[r][j].coeffs()) coeffs.push_back(rat_str(c));
      row.push_back(coeffs);
    }
    rows.push_back(row);
  }
  return json{{"r_max", t.r_max}, {"entries", rows}};
}

template <class F>
json matrix_to_json(const Matrix<F>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// Bundle format: dimension, coefficient field, the action kind and its
// parameter, and the matrix itself.
template <class F>
json matrix_bundle(const Matrix<F>& m, unsigned a, const std::string& action, const std::string& parameter) {
  long long ch = m.field().characteristic();
  return json{{"a", a},
              {"field", ch == 0 ? std::string("Q") : "F_" + std::to_string(ch)},
              {"action", action},
              {"parameter", parameter},
              {"matrix", matrix_to_json(m)}};
}

inline json to_json(const PointedMap& alpha) {
  json map = json::object();
  for (std::size_t p = 0; p < alpha.source_size(); ++p) {
    int q = alpha.apply(p);
    map[alpha.source()[p]] = (q == PointedMap::kStar) ? std::string("*") : alpha.target()[q];
  }
  return json{{"P", alpha.source()}, {"Q", alpha.target()}, {"map", map}};
}

inline PointedMap pointed_map_from_json(const json& j) {
  std::vector<std::string> source = j.at("P").get<std::vector<std::string>>();
  std::vector<std::string> target = j.at("Q").get<std::vector<std::string>>();
  std::vector<int> assign(source.size(), PointedMap::kStar);
  for (std::size_t p = 0; p < source.size(); ++p) {
    std::string v = j.at("map").at(source[p]).get<std::string>();
    if (v == "*") continue;
    auto it = std::find(target.begin(), target.end(), v);
    if (it == target.end()) throw std::invalid_argument("pointed_map_from_json: unknown target label " + v);
    assign[p] = static_cast<int>(it - target.begin());
  }
  return PointedMap(std::move(source), std::move(target), std::move(assign));
}

inline json to_json(const CompositionData& d, const PointedMap& alpha) {
  auto fn_on = [](const std::vector<int>& v, const std::vector<std::string>& labels) {
    json o = json::object();
    for (std::size_t i = 0; i < v.size(); ++i) o[labels[i]] = v[i];
    return o;
  };
  return json{{"c", fn_on(d.c, alpha.source())},
              {"a", fn_on(d.a, alpha.source())},
              {"b", fn_on(d.b, alpha.source())},
              {"b_prime", fn_on(d.b_prime, alpha.target())}};
}

inline json hasse_json(const PosetK& k) {
  json nodes = json::array();
  for (const auto& n : k.nodes) nodes.push_back(n.key());
  json edges = json::array();
  for (const auto& e : k.cover_edges) edges.push_back(json::array({e.first, e.second}));
  return json{{"ground", k.ground}, {"nodes", nodes}, {"edges", edges}};
}

inline json to_json(const IntMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

inline IntMat int_mat_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (j.size() != rows) throw std::invalid_argument("int_mat_from_json: row count mismatch");
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("int_mat_from_json: column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = Int(j[i][c].get<std::string>());
  }
  return m;
}

inline json to_json(const IntChainComplex& c) {
  json diffs = json::array();
  for (int i = c.lo(); i < c.hi(); ++i) diffs.push_back(to_json(c.diff_at(i)));
  json ranks = json::array();
  for (int i = c.lo(); i <= c.hi(); ++i) ranks.push_back(c.rank_at(i));
  return json{{"lo", c.lo()}, {"ranks", ranks}, {"differentials", diffs}};
}

inline IntChainComplex complex_from_json(const json& j) {
  int lo = j.at("lo").get<int>();
  std::vector<std::size_t> ranks = j.at("ranks").get<std::vector<std::size_t>>();
  std::vector<IntMat> diffs;
  const json& dj = j.at("differentials");
  for (std::size_t k = 0; k + 1 < ranks.size(); ++k) diffs.push_back(int_mat_from_json(dj.at(k), ranks[k + 1], ranks[k]));
  return IntChainComplex(lo, std::move(ranks), std::move(diffs));
}

inline json chain_map_components_json(const ChainMap& f) {
  json comp = json::object();
  int lo = std::min(f.source().lo(), f.target().lo());
  int hi = std::max(f.source().hi(), f.target().hi());
  for (int i = lo; i <= hi; ++i) {
    IntMat m = f.component(i);
    if (m.is_zero()) continue;
    comp[std::to_string(i)] = to_json(m);
  }
  return comp;
}

inline json to_json(const VancritInstance& inst, const TWindow& w) {
  json complexes = json::array();
  for (const auto& c : inst.complexes) complexes.push_back(to_json(c));
  json maps = json::array();
  for (const auto& f : inst.maps) maps.push_back(chain_map_components_json(f));
  return json{{"window", {{"a", w.a}, {"b", w.b}}}, {"complexes", complexes}, {"maps", maps}};
}

inline VancritInstance instance_from_json(const json& j) {
  VancritInstance inst;
  for (const auto& cj : j.at("complexes")) inst.complexes.push_back(complex_from_json(cj));
  const json& maps = j.at("maps");
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (k + 1 >= inst.complexes.size()) throw std::invalid_argument("instance_from_json: more maps than adjacent pairs");
    const auto& src = inst.complexes[k];
    const auto& tgt = inst.complexes[k + 1];
    std::map<int, IntMat> comp;
    for (auto it = maps[k].begin(); it != maps[k].end(); ++it) {
      int deg = std::stoi(it.key());
      comp[deg] = int_mat_from_json(it.value(), tgt.rank_at(deg), src.rank_at(deg));
    }
    inst.maps.emplace_back(src, tgt, std::move(comp));
  }
  return inst;
}

inline json to_json(const Homotopy& h, const IntChainComplex& src, const IntChainComplex& tgt) {
  json o = json::object();
  for (int i = src.lo(); i <= src.hi() + 1; ++i) {
    IntMat m = h.component(i, src, tgt);
    if (m.is_zero()) continue;
    o[std::to_string(i)] = to_json(m);
  }
  return o;
}

inline json to_json(const UnsolvableCert& c) {
  json w = json::array();
  for (const auto& x : c.w) w.push_back(x.get_str());
  return json{{"w", w}, {"mod", c.mod.get_str()}, {"column", c.bad_column}};
}

inline json verdict_json(const VancritVerdict& v, const VancritInstance& inst) {
  json o;
  o["preconditions_ok"] = v.preconditions_ok;
  o["violations"] = v.violations;
  o["composite_null_homotopic"] = v.composite_null_homotopic;
  if (v.witness && !inst.maps.empty())
    o["homotopy"] = to_json(*v.witness, inst.maps.front().source(), inst.maps.back().target());
  if (v.cert) o["certificate"] = to_json(*v.cert);
  return o;
}

inline json config_json(const RunConfig& cfg) {
  return json{{"command", cfg.command}, {"ell", cfg.ell},           {"a_max", cfg.a_max},
              {"r_max", cfg.r_max},     {"t_max", cfg.t_max},       {"n_range", cfg.n_range},
              {"seed", cfg.seed},       {"vancrit_instances", cfg.vancrit_instances}};
}

// include_timing = false yields the byte-stable form used for determinism
// comparisons.
inline json report_json(const Report& rep, bool include_timing = true) {
  json records = json::array();
  for (const auto& r : rep.records) {
    json rec{{"name", r.name}, {"anchor", r.anchor}, {"status", r.status}};
    if (!r.witness.empty()) rec["witness"] = r.witness;
    records.push_back(rec);
  }
  json o{{"config", config_json(rep.config)},
         {"records", records},
         {"counts", {{"pass", rep.count("pass")}, {"fail", rep.count("fail")}, {"skip", rep.count("skip")}}},
         {"version", rep.version}};
  if (include_timing) o["timing_ms"] = rep.timing_ms;
  return o;
}

}  // namespace monocal
