#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "monocal/jordan.hpp"
#include "monocal/matrix.hpp"

namespace monocal {

// ---------------------------------------------------------------------------
// Pointed maps P_* -> Q_* between finite labeled sets (the basepoint * is
// implicit), their factorization, the induced linear maps, special functions,
// and the composition data (a, b, b') with the fiberwise multiplication map.
// ---------------------------------------------------------------------------

class PointedMap {
 public:
  static constexpr int kStar = -1;

  PointedMap(std::vector<std::string> source, std::vector<std::string> target, std::vector<int> assign)
      : source_(std::move(source)), target_(std::move(target)), assign_(std::move(assign)) {
    if (assign_.size() != source_.size()) throw std::invalid_argument("PointedMap: assignment size mismatch");
    for (int v : assign_)
      if (v != kStar && (v < 0 || v >= static_cast<int>(target_.size())))
        throw std::invalid_argument("PointedMap: assignment out of range");
  }

  static PointedMap identity(std::vector<std::string> labels) {
    std::vector<int> a(labels.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<int>(i);
    auto t = labels;
    return PointedMap(std::move(labels), std::move(t), std::move(a));
  }

  const std::vector<std::string>& source() const { return source_; }
  const std::vector<std::string>& target() const { return target_; }
  const std::vector<int>& assignment() const { return assign_; }
  int apply(std::size_t p) const { return assign_.at(p); }
  std::size_t source_size() const { return source_.size(); }
  std::size_t target_size() const { return target_.size(); }

  std::vector<std::size_t> fiber(int q) const {
    std::vector<std::size_t> f;
    for (std::size_t p = 0; p < assign_.size(); ++p)
      if (assign_[p] == q) f.push_back(p);
    return f;
  }

  // Indices of target labels hit by the source (the image inside Q).
  std::vector<int> image_in_target() const {
    std::vector<bool> hit(target_.size(), false);
    for (int v : assign_)
      if (v != kStar) hit[v] = true;
    std::vector<int> img;
    for (std::size_t q = 0; q < target_.size(); ++q)
      if (hit[q]) img.push_back(static_cast<int>(q));
    return img;
  }

  // Surjective/injective as maps of pointed sets.
  bool is_surjective() const { return image_in_target().size() == target_.size(); }
  bool is_injective() const {
    std::vector<bool> hit(target_.size(), false);
    for (int v : assign_) {
      if (v == kStar) return false;
      if (hit[v]) return false;
      hit[v] = true;
    }
    return true;
  }
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  // beta after alpha.
  static PointedMap compose(const PointedMap& beta, const PointedMap& alpha) {
    if (alpha.target_ != beta.source_) throw std::invalid_argument("PointedMap::compose: middle sets differ");
    std::vector<int> a(alpha.source_size());
    for (std::size_t p = 0; p < a.size(); ++p) {
      int q = alpha.assign_[p];
      a[p] = (q == kStar) ? kStar : beta.assign_[q];
    }
    return PointedMap(alpha.source_, beta.target_, std::move(a));
  }

  bool operator==(const PointedMap& o) const {
    return source_ == o.source_ && target_ == o.target_ && assign_ == o.assign_;
  }

 private:
  std::vector<std::string> source_, target_;
  std::vector<int> assign_;
};

// All pointed maps from an m-element set to an n-element set with the given
// labels (counting in base n+1; digit 0 is the basepoint).
inline std::vector<PointedMap> enumerate_pointed_maps(const std::vector<std::string>& source,
                                                      const std::vector<std::string>& target) {
  std::size_t m = source.size(), n = target.size();
  std::vector<PointedMap> out;
  std::vector<int> digits(m, 0);
  while (true) {
    std::vector<int> a(m);
    for (std::size_t i = 0; i < m; ++i) a[i] = digits[i] - 1;
    out.emplace_back(source, target, std::move(a));
    std::size_t i = 0;
    for (; i < m; ++i) {
      if (digits[i] < static_cast<int>(n)) {
        ++digits[i];
        break;
      }
      digits[i] = 0;
    }
    if (i == m) break;
  }
  return out;
}

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = std::to_string(i + 1);
  return l;
}

// alpha = alpha2 . alpha1 through R = alpha(P) /\ Q, with alpha1 surjective
// and alpha2 injective.
struct Factorization {
  PointedMap alpha1;  // P_* -> R_*
  PointedMap alpha2;  // R_* -> Q_*
};

inline Factorization factorize(const PointedMap& alpha) {
  auto img = alpha.image_in_target();
  std::vector<std::string> r_labels;
  std::vector<int> pos(alpha.target_size(), -1);
  for (std::size_t i = 0; i < img.size(); ++i) {
    pos[img[i]] = static_cast<int>(i);
    r_labels.push_back(alpha.target()[img[i]]);
  }
  std::vector<int> a1(alpha.source_size());
  for (std::size_t p = 0; p < a1.size(); ++p) {
    int q = alpha.apply(p);
    a1[p] = (q == PointedMap::kStar) ? PointedMap::kStar : pos[q];
  }
  PointedMap alpha1(alpha.source(), r_labels, std::move(a1));
  PointedMap alpha2(r_labels, alpha.target(), img);
  return {std::move(alpha1), std::move(alpha2)};
}

// Matrix of the induced linear map A^Q -> A^P: row p reads off coordinate
// alpha(p), or is zero when alpha(p) = *.
inline Matrix<RationalField> linear_map_matrix(const PointedMap& alpha) {
  RationalField fld;
  Matrix<RationalField> m(fld, alpha.source_size(), alpha.target_size());
  for (std::size_t p = 0; p < alpha.source_size(); ++p)
    if (alpha.apply(p) != PointedMap::kStar) m.at(p, alpha.apply(p)) = fld.one();
  return m;
}

// The window [|Q|-|P|, |Q|-|im(alpha) /\ Q|] outside which the relevant
// cohomology vanishes.
inline std::pair<long, long> degree_window(const PointedMap& alpha) {
  long q = static_cast<long>(alpha.target_size());
  long p = static_cast<long>(alpha.source_size());
  long im = static_cast<long>(alpha.image_in_target().size());
  return {q - p, q - im};
}

// a: P -> Z_{>=1} is alpha-special if a(p) = 1 whenever alpha(p) lands in Q.
inline bool is_special(const std::vector<int>& values, const PointedMap& alpha) {
  if (values.size() != alpha.source_size()) throw std::invalid_argument("is_special: size mismatch");
  for (int v : values)
    if (v < 1) throw std::invalid_argument("is_special: values must be >= 1");
  for (std::size_t p = 0; p < values.size(); ++p)
    if (alpha.apply(p) != PointedMap::kStar && values[p] != 1) return false;
  return true;
}

// Splitting of a (beta.alpha)-special function c into an alpha-special part a,
// the complement b, and its pushforward b' to Q.
struct CompositionData {
  std::vector<int> c, a, b;  // on P
  std::vector<int> b_prime;  // on Q
};

inline CompositionData compose_data(const std::vector<int>& c, const PointedMap& alpha, const PointedMap& beta) {
  if (alpha.target() != beta.source()) throw std::invalid_argument("compose_data: alpha and beta do not compose");
  PointedMap ba = PointedMap::compose(beta, alpha);
  if (!is_special(c, ba)) throw std::invalid_argument("compose_data: c is not (beta.alpha)-special");

  std::size_t np = alpha.source_size();
  CompositionData d;
  d.c = c;
  d.a.resize(np);
  d.b.resize(np);
  for (std::size_t p = 0; p < np; ++p) {
    bool at_star = alpha.apply(p) == PointedMap::kStar;
    bool composite_star = ba.apply(p) == PointedMap::kStar;
    d.a[p] = at_star ? c[p] : 1;
    d.b[p] = (composite_star && !at_star) ? c[p] : 1;
  }
  d.b_prime.resize(alpha.target_size());
  for (std::size_t q = 0; q < alpha.target_size(); ++q) {
    auto fib = alpha.fiber(static_cast<int>(q));
    int sum = 0;
    for (auto p : fib) sum += d.b[p];
    d.b_prime[q] = 1 - static_cast<int>(fib.size()) + sum;
  }

  if (!is_special(d.a, alpha)) throw std::logic_error("compose_data: a is not alpha-special");
  if (!is_special(d.b_prime, beta)) throw std::logic_error("compose_data: b' is not beta-special");
  for (std::size_t p = 0; p < np; ++p)
    if (d.a[p] + d.b[p] - 1 != d.c[p]) throw std::logic_error("compose_data: c != a + b - 1");
  return d;
}

// Fiberwise multiplication map underlying the pullback of the product local
// system: for each q in Q, iterated multiplication over the fiber alpha^{-1}(q)
// sends (x)_{p in fiber} L_{b(p)} to L_{b'(q)}; the blocks are tensored in the
// order of the Q labels.  An empty fiber contributes the unit L_1.
template <class F>
struct PullbackMult {
  Matrix<F> matrix;
  std::vector<std::vector<unsigned>> fiber_dims;  // per q, in fiber order
  std::vector<int> b_prime;                       // per q
};

template <class F>
PullbackMult<F> pullback_mult_matrix(const F& fld, const PointedMap& alpha, const std::vector<unsigned>& b) {
  if (b.size() != alpha.source_size()) throw std::invalid_argument("pullback_mult_matrix: size mismatch");
  for (unsigned v : b)
    if (v < 1) throw std::invalid_argument("pullback_mult_matrix: b values must be >= 1");
  Matrix<F> total = Matrix<F>::identity(fld, 1);
  std::vector<std::vector<unsigned>> fiber_dims;
  std::vector<int> b_prime;
  for (std::size_t q = 0; q < alpha.target_size(); ++q) {
    auto fib = alpha.fiber(static_cast<int>(q));
    std::vector<unsigned> dims;
    for (auto p : fib) dims.push_back(b[p]);
    Matrix<F> block = dims.empty() ? Matrix<F>::identity(fld, 1) : iterated_mult(fld, dims).matrix;
    int bp = 1 - static_cast<int>(fib.size());
    for (auto d : dims) bp += static_cast<int>(d);
    total = total.kron(block);
    fiber_dims.push_back(std::move(dims));
    b_prime.push_back(bp);
  }
  return {std::move(total), std::move(fiber_dims), std::move(b_prime)};
}

// Simultaneous monodromy on every tensor factor of each fiber vs. monodromy
// on the targets, intertwined by the pullback multiplication map.
template <class F>
bool diagonal_equivariance_check(const F& fld, const PointedMap& alpha, const std::vector<unsigned>& b, const Int& n) {
  auto pm = pullback_mult_matrix(fld, alpha, b);
  Matrix<F> src = Matrix<F>::identity(fld, 1);
  Matrix<F> dst = Matrix<F>::identity(fld, 1);
  for (std::size_t q = 0; q < pm.fiber_dims.size(); ++q) {
    Matrix<F> fib = Matrix<F>::identity(fld, 1);
    for (unsigned d : pm.fiber_dims[q]) fib = fib.kron(monodromy_matrix(fld, d, n));
    src = src.kron(fib);
    dst = dst.kron(monodromy_matrix(fld, static_cast<unsigned>(pm.b_prime[q]), n));
  }
  return pm.matrix.mul(src).eq(dst.mul(pm.matrix));
}

// Same intertwining for the Galois action at the unit t.
template <class F, class Unit>
bool galois_equivariance_check(const F& fld, const PointedMap& alpha, const std::vector<unsigned>& b, const Unit& t) {
  auto pm = pullback_mult_matrix(fld, alpha, b);
  Matrix<F> src = Matrix<F>::identity(fld, 1);
  Matrix<F> dst = Matrix<F>::identity(fld, 1);
  for (std::size_t q = 0; q < pm.fiber_dims.size(); ++q) {
    Matrix<F> fib = Matrix<F>::identity(fld, 1);
    for (unsigned d : pm.fiber_dims[q]) fib = fib.kron(galois_matrix(fld, d, t));
    src = src.kron(fib);
    dst = dst.kron(galois_matrix(fld, static_cast<unsigned>(pm.b_prime[q]), t));
  }
  return pm.matrix.mul(src).eq(dst.mul(pm.matrix));
}

}  // namespace monocal
