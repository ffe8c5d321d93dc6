#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monocal/int_matrix.hpp"
#include "monocal/rng.hpp"

namespace monocal {

// ---------------------------------------------------------------------------
// Bounded complexes of finitely generated free Z-modules, their cohomology via
// Smith normal form, null-homotopy solving, and the vanishing criterion: a
// composite of b-a+1 cohomologically-zero maps between complexes whose
// cohomology lives in [a, b] is null-homotopic.  Z-coefficients matter here:
// over a field every cohomologically-zero map is already null-homotopic.
// ---------------------------------------------------------------------------

class IntChainComplex {
 public:
  // ranks[k] is the rank in degree lo+k; diffs[k] maps degree lo+k to lo+k+1
  // and has shape ranks[k+1] x ranks[k].
  IntChainComplex() : lo_(0) {}
  IntChainComplex(int lo, std::vector<std::size_t> ranks, std::vector<IntMat> diffs)
      : lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
    if (ranks_.empty()) throw std::invalid_argument("IntChainComplex: empty degree range");
    if (diffs_.size() + 1 != ranks_.size()) throw std::invalid_argument("IntChainComplex: need one differential per adjacent pair");
    for (std::size_t k = 0; k < diffs_.size(); ++k)
      if (diffs_[k].rows() != ranks_[k + 1] || diffs_[k].cols() != ranks_[k])
        throw std::invalid_argument("IntChainComplex: differential shape mismatch in degree " + std::to_string(lo_ + (int)k));
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
      if (!diffs_[k + 1].mul(diffs_[k]).is_zero())
        throw std::invalid_argument("IntChainComplex: d.d != 0 at degree " + std::to_string(lo_ + (int)k));
  }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }

  std::size_t rank_at(int i) const {
    if (i < lo_ || i > hi()) return 0;
    return ranks_[static_cast<std::size_t>(i - lo_)];
  }

  // d_i: degree i -> i+1, zero-shaped outside the support.
  IntMat diff_at(int i) const {
    if (i < lo_ || i >= hi()) return IntMat(rank_at(i + 1), rank_at(i));
    return diffs_[static_cast<std::size_t>(i - lo_)];
  }

  bool operator==(const IntChainComplex& o) const {
    return lo_ == o.lo_ && ranks_ == o.ranks_ && diffs_ == o.diffs_;
  }

 private:
  int lo_;
  std::vector<std::size_t> ranks_;
  std::vector<IntMat> diffs_;
};

struct Cohomology {
  std::vector<Int> torsion;  // invariant factors > 1, in divisibility order
  std::size_t free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  std::string str() const {
    if (trivial()) return "0";
    std::string s;
    for (const auto& t : torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + t.get_str();
    }
    if (free_rank) {
      if (!s.empty()) s += " + ";
      s += "Z^" + std::to_string(free_rank);
    }
    return s;
  }
};

// Presentation of H^i = ker d_i / im d_{i-1} used by the induced-map
// computation: generators are a primitive basis K of the kernel, relations are
// the image expressed in K-coordinates, put in Smith form.
struct CohomPresentation {
  IntMat kernel;     // columns: basis of ker d_i
  SmithForm rel;     // Smith form of the relation matrix (image in K-coords)
  std::size_t k = 0; // number of generators

  // invariant factor of coordinate j (0 = free)
  Int factor(std::size_t j) const { return j < rel.rank ? rel.d.at(j, j) : Int(0); }
};

inline CohomPresentation cohomology_presentation(const IntChainComplex& c, int i) {
  CohomPresentation pres;
  pres.kernel = kernel_basis(c.diff_at(i));
  pres.k = pres.kernel.cols();
  IntMat image = c.diff_at(i - 1);
  IntMat coords(pres.k, image.cols());
  if (pres.k > 0 && image.cols() > 0) {
    auto sol = solve_int(pres.kernel, image);
    if (!sol.solvable()) throw std::logic_error("cohomology: image not contained in kernel (d.d != 0?)");
    coords = *sol.x;
  }
  pres.rel = smith_normal_form(coords);
  return pres;
}

inline Cohomology cohomology(const IntChainComplex& c, int i) {
  auto pres = cohomology_presentation(c, i);
  Cohomology h;
  for (std::size_t j = 0; j < pres.k; ++j) {
    Int f = pres.factor(j);
    if (f == 0)
      ++h.free_rank;
    else if (f != 1)
      h.torsion.push_back(f);
  }
  return h;
}

class ChainMap {
 public:
  ChainMap(IntChainComplex source, IntChainComplex target, std::map<int, IntMat> components)
      : src_(std::move(source)), tgt_(std::move(target)), comp_(std::move(components)) {
    int lo = std::min(src_.lo(), tgt_.lo());
    int hi = std::max(src_.hi(), tgt_.hi());
    for (auto& [i, m] : comp_)
      if (m.rows() != tgt_.rank_at(i) || m.cols() != src_.rank_at(i))
        throw std::invalid_argument("ChainMap: component shape mismatch in degree " + std::to_string(i));
    for (int i = lo; i < hi; ++i)
      if (!tgt_.diff_at(i).mul(component(i)).operator==(component(i + 1).mul(src_.diff_at(i))))
        throw std::invalid_argument("ChainMap: does not commute with differentials at degree " + std::to_string(i));
  }

  const IntChainComplex& source() const { return src_; }
  const IntChainComplex& target() const { return tgt_; }

  IntMat component(int i) const {
    auto it = comp_.find(i);
    if (it != comp_.end()) return it->second;
    return IntMat(tgt_.rank_at(i), src_.rank_at(i));
  }

  static ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!(f.tgt_ == g.src_)) throw std::invalid_argument("ChainMap::compose: middle complexes differ");
    std::map<int, IntMat> comp;
    int lo = std::min(f.src_.lo(), g.tgt_.lo());
    int hi = std::max(f.src_.hi(), g.tgt_.hi());
    for (int i = lo; i <= hi; ++i) comp[i] = g.component(i).mul(f.component(i));
    return ChainMap(f.src_, g.tgt_, std::move(comp));
  }

  static ChainMap add(const ChainMap& f, const ChainMap& g) {
    if (!(f.src_ == g.src_) || !(f.tgt_ == g.tgt_)) throw std::invalid_argument("ChainMap::add: endpoint mismatch");
    std::map<int, IntMat> comp;
    int lo = std::min(f.src_.lo(), f.tgt_.lo());
    int hi = std::max(f.src_.hi(), f.tgt_.hi());
    for (int i = lo; i <= hi; ++i) comp[i] = f.component(i).add(g.component(i));
    return ChainMap(f.src_, f.tgt_, std::move(comp));
  }

 private:
  IntChainComplex src_, tgt_;
  std::map<int, IntMat> comp_;
};

// Induced map on H^i in canonical (Smith) coordinates on both sides, trivial
// cyclic factors dropped.  Row j of the result is reduced modulo the j-th
// target factor; the map is zero on H^i iff the matrix is zero.
struct InducedCohomologyMap {
  IntMat matrix;                  // target coords x source coords
  std::vector<Int> source_factors;  // 0 = free, otherwise the cyclic order
  std::vector<Int> target_factors;

  bool is_zero() const { return matrix.is_zero(); }
};

inline InducedCohomologyMap induced_cohomology_map(const ChainMap& f, int i) {
  auto src = cohomology_presentation(f.source(), i);
  auto dst = cohomology_presentation(f.target(), i);

  // express f(kernel generators) in the target kernel basis
  IntMat y(dst.k, src.k);
  if (dst.k > 0 && src.k > 0) {
    auto sol = solve_int(dst.kernel, f.component(i).mul(src.kernel));
    if (!sol.solvable()) throw std::logic_error("induced_cohomology_map: image of a cycle is not a cycle");
    y = *sol.x;
  }

  // move to canonical coordinates: w = U_dst . y . U_src^{-1}
  IntMat usrc_inv(src.k, src.k);
  if (src.k > 0) {
    auto sol = solve_int(src.rel.u, IntMat::identity(src.k));
    usrc_inv = *sol.x;  // U is unimodular
  }
  IntMat w = dst.rel.u.mul(y).mul(usrc_inv);

  // keep the non-trivial coordinates and reduce torsion rows
  std::vector<std::size_t> keep_src, keep_dst;
  InducedCohomologyMap out;
  for (std::size_t j = 0; j < src.k; ++j)
    if (src.factor(j) != 1) {
      keep_src.push_back(j);
      out.source_factors.push_back(src.factor(j));
    }
  for (std::size_t j = 0; j < dst.k; ++j)
    if (dst.factor(j) != 1) {
      keep_dst.push_back(j);
      out.target_factors.push_back(dst.factor(j));
    }
  out.matrix = IntMat(keep_dst.size(), keep_src.size());
  for (std::size_t r = 0; r < keep_dst.size(); ++r) {
    Int m = dst.factor(keep_dst[r]);
    for (std::size_t cidx = 0; cidx < keep_src.size(); ++cidx) {
      Int v = w.at(keep_dst[r], keep_src[cidx]);
      if (m != 0) v = ((v % m) + m) % m;
      out.matrix.at(r, cidx) = v;
    }
  }
  return out;
}

inline bool induces_zero_on_cohomology(const ChainMap& f, int i) { return induced_cohomology_map(f, i).is_zero(); }

inline bool induces_zero_everywhere(const ChainMap& f) {
  int lo = std::min(f.source().lo(), f.target().lo());
  int hi = std::max(f.source().hi(), f.target().hi());
  for (int i = lo; i <= hi; ++i)
    if (!induces_zero_on_cohomology(f, i)) return false;
  return true;
}

// Null-homotopy h with d.h + h.d = f, solved as one integer linear system.
struct Homotopy {
  std::map<int, IntMat> h;  // h_i: source^i -> target^{i-1}

  IntMat component(int i, const IntChainComplex& src, const IntChainComplex& tgt) const {
    auto it = h.find(i);
    if (it != h.end()) return it->second;
    return IntMat(tgt.rank_at(i - 1), src.rank_at(i));
  }
};

struct NullHomotopyResult {
  std::optional<Homotopy> homotopy;
  std::optional<UnsolvableCert> cert;
  bool exists() const { return homotopy.has_value(); }
};

inline bool verify_homotopy(const ChainMap& f, const Homotopy& h) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  int lo = std::min(src.lo(), tgt.lo()) - 1;
  int hi = std::max(src.hi(), tgt.hi()) + 1;
  for (int i = lo; i <= hi; ++i) {
    IntMat lhs = tgt.diff_at(i - 1).mul(h.component(i, src, tgt)).add(h.component(i + 1, src, tgt).mul(src.diff_at(i)));
    if (!(lhs == f.component(i))) return false;
  }
  return true;
}

inline NullHomotopyResult null_homotopy(const ChainMap& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  int lo = std::min(src.lo(), tgt.lo());
  int hi = std::max(src.hi(), tgt.hi());

  // unknown blocks h_i (i = lo..hi+1), flattened column-major over blocks
  struct Block {
    int degree;
    std::size_t rows, cols, offset;
  };
  std::vector<Block> blocks;
  std::size_t nvars = 0;
  for (int i = lo; i <= hi + 1; ++i) {
    std::size_t r = tgt.rank_at(i - 1), c = src.rank_at(i);
    if (r * c == 0) continue;
    blocks.push_back({i, r, c, nvars});
    nvars += r * c;
  }
  auto block_of = [&](int degree) -> const Block* {
    for (auto& b : blocks)
      if (b.degree == degree) return &b;
    return nullptr;
  };

  std::size_t neqs = 0;
  std::vector<std::pair<int, std::size_t>> eq_offsets;  // degree, offset
  for (int i = lo; i <= hi; ++i) {
    eq_offsets.emplace_back(i, neqs);
    neqs += tgt.rank_at(i) * src.rank_at(i);
  }

  IntMat a(neqs, nvars), rhs(neqs, 1);
  for (auto& [i, off] : eq_offsets) {
    std::size_t tr = tgt.rank_at(i), sc = src.rank_at(i);
    IntMat fi = f.component(i);
    IntMat dt = tgt.diff_at(i - 1);  // target^{i-1} -> target^i
    IntMat ds = src.diff_at(i);      // source^i -> source^{i+1}
    const Block* bi = block_of(i);
    const Block* bi1 = block_of(i + 1);
    for (std::size_t u = 0; u < tr; ++u)
      for (std::size_t v = 0; v < sc; ++v) {
        std::size_t row = off + u * sc + v;
        rhs.at(row, 0) = fi.at(u, v);
        if (bi)  // d_tgt . h_i contributes dt(u, w) * h_i(w, v)
          for (std::size_t w = 0; w < bi->rows; ++w)
            a.at(row, bi->offset + w * bi->cols + v) += dt.at(u, w);
        if (bi1)  // h_{i+1} . d_src contributes h_{i+1}(u, w) * ds(w, v)
          for (std::size_t w = 0; w < bi1->cols; ++w)
            a.at(row, bi1->offset + u * bi1->cols + w) += ds.at(w, v);
      }
  }

  auto sol = solve_int(a, rhs);
  if (!sol.solvable()) {
    if (!sol.cert->verify(a, rhs)) throw std::logic_error("null_homotopy: unsolvability certificate failed to verify");
    return {std::nullopt, sol.cert};
  }
  Homotopy h;
  for (auto& b : blocks) {
    IntMat m(b.rows, b.cols);
    for (std::size_t u = 0; u < b.rows; ++u)
      for (std::size_t v = 0; v < b.cols; ++v) m.at(u, v) = sol.x->at(b.offset + u * b.cols + v, 0);
    h.h[b.degree] = std::move(m);
  }
  if (!verify_homotopy(f, h)) throw std::logic_error("null_homotopy: solution failed exact re-verification");
  return {h, std::nullopt};
}

struct TWindow {
  int a, b;
  TWindow(int a_, int b_) : a(a_), b(b_) {
    if (a > b) throw std::invalid_argument("TWindow: need a <= b");
  }
  int composite_length() const { return b - a + 1; }
};

struct VancritVerdict {
  bool preconditions_ok = false;
  std::vector<std::string> violations;
  bool composite_null_homotopic = false;
  std::optional<Homotopy> witness;
  std::optional<UnsolvableCert> cert;

  bool holds() const { return preconditions_ok && composite_null_homotopic; }
};

// Verify the hypotheses (cohomology confined to [a, b]; every map zero on all
// cohomology; enough maps), then certify that the composite of the first
// b-a+1 maps is null-homotopic.
inline VancritVerdict vancrit_check(const std::vector<ChainMap>& maps, const TWindow& window) {
  VancritVerdict v;
  if (maps.empty()) {
    v.violations.push_back("no maps given");
    return v;
  }
  int needed = window.composite_length();
  if (static_cast<int>(maps.size()) < needed) {
    v.violations.push_back("need at least " + std::to_string(needed) + " maps for window [" + std::to_string(window.a) +
                           ", " + std::to_string(window.b) + "], got " + std::to_string(maps.size()));
    return v;
  }
  for (std::size_t j = 0; j + 1 < maps.size(); ++j)
    if (!(maps[j].target() == maps[j + 1].source()))
      v.violations.push_back("maps " + std::to_string(j + 1) + " and " + std::to_string(j + 2) + " do not compose");

  auto check_object = [&](const IntChainComplex& c, std::size_t idx) {
    for (int i = c.lo() - 1; i <= c.hi() + 1; ++i) {
      if (i >= window.a && i <= window.b) continue;
      if (!cohomology(c, i).trivial())
        v.violations.push_back("object " + std::to_string(idx) + " has nonzero cohomology in degree " + std::to_string(i));
    }
  };
  check_object(maps[0].source(), 1);
  for (std::size_t j = 0; j < maps.size(); ++j) check_object(maps[j].target(), j + 2);

  for (std::size_t j = 0; j < maps.size(); ++j) {
    const auto& f = maps[j];
    int lo = std::min(f.source().lo(), f.target().lo());
    int hi = std::max(f.source().hi(), f.target().hi());
    for (int i = lo; i <= hi; ++i)
      if (!induces_zero_on_cohomology(f, i))
        v.violations.push_back("map " + std::to_string(j + 1) + " is nonzero on cohomology in degree " + std::to_string(i));
  }
  if (!v.violations.empty()) return v;
  v.preconditions_ok = true;

  ChainMap composite = maps[0];
  for (int j = 1; j < needed; ++j) composite = ChainMap::compose(maps[static_cast<std::size_t>(j)], composite);
  auto res = null_homotopy(composite);
  v.composite_null_homotopic = res.exists();
  v.witness = res.homotopy;
  v.cert = res.cert;
  return v;
}

// --- Randomized instance generator -----------------------------------------
//
// Complexes are direct sums of elementary pieces (Z --m--> Z) sitting in
// degrees (i-1, i), so H^i = Z/m with i inside the window.  Maps are sums of
// null-homotopic noise (d.h + h.d for random h) and degree-shift components
// between a piece at degree i and one at degree i-1; the latter are zero on
// cohomology but obstructed mod gcd(m_src, m_tgt), which is what makes the
// composite-length bound of the lemma non-vacuous.

struct VancritInstance {
  std::vector<IntChainComplex> complexes;
  std::vector<ChainMap> maps;
};

namespace detail {

struct Piece {
  int degree;   // cohomology degree: module in degrees (degree-1, degree)
  long torsion; // m >= 2
};

inline IntChainComplex complex_from_pieces(const std::vector<Piece>& pieces, int window_a) {
  int lo = window_a - 1, hi = window_a;
  for (const auto& p : pieces) {
    lo = std::min(lo, p.degree - 1);
    hi = std::max(hi, p.degree);
  }
  std::vector<std::size_t> ranks(static_cast<std::size_t>(hi - lo + 1), 0);
  // column/row offsets of each piece in its two degrees
  std::vector<std::pair<std::size_t, std::size_t>> offs(pieces.size());
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    offs[k].first = ranks[static_cast<std::size_t>(pieces[k].degree - 1 - lo)]++;
    offs[k].second = ranks[static_cast<std::size_t>(pieces[k].degree - lo)]++;
  }
  std::vector<IntMat> diffs;
  for (int i = lo; i < hi; ++i) diffs.emplace_back(ranks[static_cast<std::size_t>(i + 1 - lo)], ranks[static_cast<std::size_t>(i - lo)]);
  for (std::size_t k = 0; k < pieces.size(); ++k)
    diffs[static_cast<std::size_t>(pieces[k].degree - 1 - lo)].at(offs[k].second, offs[k].first) = pieces[k].torsion;
  return IntChainComplex(lo, std::move(ranks), std::move(diffs));
}

}  // namespace detail

inline VancritInstance generate_cohomologically_zero_instance(const TWindow& window, std::uint64_t seed) {
  Rng rng(seed);
  const long torsions[4] = {2, 3, 4, 6};
  int count = window.composite_length() + 1;

  std::vector<std::vector<detail::Piece>> pieces(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    int npieces = static_cast<int>(1 + rng.below(2));
    for (int k = 0; k < npieces; ++k)
      pieces[static_cast<std::size_t>(j)].push_back(
          {window.a + static_cast<int>(rng.below(static_cast<std::uint64_t>(window.b - window.a + 1))),
           torsions[rng.below(4)]});
    // align one piece a degree below a piece of the previous complex so that
    // shift components have somewhere to go
    if (j > 0) {
      for (const auto& prev : pieces[static_cast<std::size_t>(j - 1)])
        if (prev.degree > window.a && rng.chance(1, 2))
          pieces[static_cast<std::size_t>(j)].push_back({prev.degree - 1, torsions[rng.below(4)]});
    }
  }

  VancritInstance inst;
  for (int j = 0; j < count; ++j)
    inst.complexes.push_back(detail::complex_from_pieces(pieces[static_cast<std::size_t>(j)], window.a));

  for (int j = 0; j + 1 < count; ++j) {
    const auto& src = inst.complexes[static_cast<std::size_t>(j)];
    const auto& tgt = inst.complexes[static_cast<std::size_t>(j + 1)];
    // null-homotopic noise
    Homotopy h;
    for (int i = src.lo(); i <= src.hi() + 1; ++i) {
      IntMat hi_mat(tgt.rank_at(i - 1), src.rank_at(i));
      for (std::size_t u = 0; u < hi_mat.rows(); ++u)
        for (std::size_t v = 0; v < hi_mat.cols(); ++v) hi_mat.at(u, v) = rng.range(-2, 2);
      h.h[i] = std::move(hi_mat);
    }
    std::map<int, IntMat> comp;
    int lo = std::min(src.lo(), tgt.lo());
    int hi = std::max(src.hi(), tgt.hi());
    for (int i = lo; i <= hi; ++i)
      comp[i] = tgt.diff_at(i - 1).mul(h.component(i, src, tgt)).add(h.component(i + 1, src, tgt).mul(src.diff_at(i)));

    // shift components: source piece at degree i, target piece at degree i-1;
    // the offsets mirror the layout chosen by complex_from_pieces
    auto offsets_of = [](const std::vector<detail::Piece>& ps) {
      std::map<int, std::size_t> counter;
      std::vector<std::pair<std::size_t, std::size_t>> offs(ps.size());
      for (std::size_t k = 0; k < ps.size(); ++k) {
        offs[k].first = counter[ps[k].degree - 1]++;
        offs[k].second = counter[ps[k].degree]++;
      }
      return offs;
    };
    auto so = offsets_of(pieces[static_cast<std::size_t>(j)]);
    auto to = offsets_of(pieces[static_cast<std::size_t>(j + 1)]);
    const auto& sp = pieces[static_cast<std::size_t>(j)];
    const auto& tp = pieces[static_cast<std::size_t>(j + 1)];
    for (std::size_t ks = 0; ks < sp.size(); ++ks)
      for (std::size_t kt = 0; kt < tp.size(); ++kt) {
        if (tp[kt].degree != sp[ks].degree - 1) continue;
        if (!rng.chance(1, 2)) continue;
        long kmul = rng.range(1, 3);
        // source lower module (degree i-1) -> target upper module (degree i-1)
        comp[sp[ks].degree - 1].at(to[kt].second, so[ks].first) += kmul;
      }

    ChainMap f(src, tgt, std::move(comp));
    if (!induces_zero_everywhere(f)) throw std::logic_error("generator produced a map nonzero on cohomology");
    inst.maps.push_back(std::move(f));
  }
  return inst;
}

// The sharpness witness for a window of width 1: a single cohomologically-zero
// map that is not null-homotopic (the obstruction is the odd shift component
// between two Z/2 pieces).
inline VancritInstance bockstein_witness(int a) {
  std::vector<detail::Piece> ps{{a, 2}, {a + 1, 2}};
  IntChainComplex m = detail::complex_from_pieces(ps, a);
  // pieces: {a,2} occupies (a-1, a) with offsets (0,0); {a+1,2} occupies (a, a+1) with offsets (1,0)
  std::map<int, IntMat> comp;
  for (int i = m.lo(); i <= m.hi(); ++i) comp[i] = IntMat(m.rank_at(i), m.rank_at(i));
  comp[a].at(0, 1) = 1;  // lower module of the (a+1)-piece -> upper module of the a-piece
  ChainMap f(m, m, std::move(comp));
  return {{m, m}, {f}};
}

}  // namespace monocal
