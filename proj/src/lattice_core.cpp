#include "satake/lattice_core.hpp"

#include "satake/integer_linear_algebra.hpp"
#include "satake/rational_lp.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace satake {

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

std::string to_string(const Coweight& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

Int pairing(const Weight& lambda, const Coweight& mu) {
  if (lambda.size() != mu.size()) throw DomainError("pairing: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += lambda[i] * mu[i];
  return s;
}

namespace {

IntMatrix cartan_of(const std::vector<Weight>& roots, const std::vector<Coweight>& coroots) {
  const std::size_t n = roots.size();
  IntMatrix a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = pairing(roots[j], coroots[i]);
  return a;
}

BigMatrix rows_of(const std::vector<Weight>& v) {
  BigMatrix m;
  for (const auto& w : v) m.emplace_back(w.coords.begin(), w.coords.end());
  return m;
}

BigMatrix rows_of(const std::vector<Coweight>& v) {
  BigMatrix m;
  for (const auto& w : v) m.emplace_back(w.coords.begin(), w.coords.end());
  return m;
}

bool all_principal_minors_positive(const IntMatrix& a) {
  const std::size_t n = a.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) idx.push_back(i);
    BigMatrix sub(idx.size(), std::vector<BigInt>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = a[idx[i]][idx[j]];
    if (determinant(sub) <= 0) return false;
  }
  return true;
}

template <class P, class Q>
P reflect_raw(const P& x, const P& root, const Q& coroot) {
  Int c = 0;
  for (std::size_t k = 0; k < x.size(); ++k) c += x[k] * coroot[k];
  P out = x;
  for (std::size_t k = 0; k < x.size(); ++k) out[k] -= c * root[k];
  return out;
}

// W-orbit of every simple root, restricted to nonnegative root coordinates.
template <class P, class Q>
std::vector<P> positive_roots_raw(const std::vector<P>& roots, const std::vector<Q>& coroots,
                                  const IntMatrix& adj) {
  std::set<P> all;
  std::deque<P> queue(roots.begin(), roots.end());
  all.insert(roots.begin(), roots.end());
  while (!queue.empty()) {
    P x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      P y = reflect_raw(x, roots[i], coroots[i]);
      if (all.insert(y).second) queue.push_back(y);
    }
  }
  std::vector<P> pos;
  const std::size_t n = roots.size();
  for (const P& b : all) {
    // root coordinates (up to the positive factor det): adj * (<b, alpha_j^vee>)_j
    std::vector<Int> p(n);
    for (std::size_t j = 0; j < n; ++j) {
      Int s = 0;
      for (std::size_t k = 0; k < b.size(); ++k) s += b[k] * coroots[j][k];
      p[j] = s;
    }
    bool nonneg = true;
    for (std::size_t i = 0; i < n && nonneg; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < n; ++j) s += adj[i][j] * p[j];
      if (s < 0) nonneg = false;
    }
    if (nonneg) pos.push_back(b);
  }
  return pos;
}

}  // namespace

void validate_datum(int rank, const std::vector<Weight>& simple_roots, const std::vector<Coweight>& simple_coroots) {
  if (rank < 0) throw DatumError(DatumErrorKind::kShape, "rank must be nonnegative");
  if (simple_roots.size() != simple_coroots.size())
    throw DatumError(DatumErrorKind::kShape, "simple roots and simple coroots differ in number");
  if (simple_roots.size() > static_cast<std::size_t>(rank))
    throw DatumError(DatumErrorKind::kShape, "more simple roots than the lattice rank");
  for (const auto& r : simple_roots)
    if (r.size() != static_cast<std::size_t>(rank))
      throw DatumError(DatumErrorKind::kShape, "simple root " + to_string(r) + " has wrong length");
  for (const auto& r : simple_coroots)
    if (r.size() != static_cast<std::size_t>(rank))
      throw DatumError(DatumErrorKind::kShape, "simple coroot " + to_string(r) + " has wrong length");

  const IntMatrix a = cartan_of(simple_roots, simple_coroots);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    if (a[i][i] != 2)
      throw DatumError(DatumErrorKind::kCartanDiagonal,
                       "Cartan diagonal != 2 at index " + std::to_string(i) + " (value " + std::to_string(a[i][i]) + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0)
        throw DatumError(DatumErrorKind::kCartanOffDiagonal,
                         "positive off-diagonal Cartan entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw DatumError(DatumErrorKind::kCartanOffDiagonal,
                         "asymmetric zero pattern at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  if (!all_principal_minors_positive(a))
    throw DatumError(DatumErrorKind::kNotFiniteType, "Cartan matrix is not of finite type");
  if (matrix_rank(rows_of(simple_roots)) != n)
    throw DatumError(DatumErrorKind::kDependent, "simple roots are linearly dependent");
  if (matrix_rank(rows_of(simple_coroots)) != n)
    throw DatumError(DatumErrorKind::kDependent, "simple coroots are linearly dependent");
}

struct RootDatum::Derived {
  IntMatrix cartan;
  Int det = 1;
  IntMatrix adj;  // det * cartan^{-1}
  std::vector<Weight> positive_roots;
  std::vector<Coweight> positive_coroots;
  Weight two_rho;
  Coweight two_rho_check;
  // Smith form of the simple-root matrix, for X/Q
  std::vector<Int> elementary_divisors;
  IntMatrix snf_right;
};

RootDatum::RootDatum(int rank, std::vector<Weight> simple_roots, std::vector<Coweight> simple_coroots, std::string name)
    : rank_(rank), simple_roots_(std::move(simple_roots)), simple_coroots_(std::move(simple_coroots)), name_(std::move(name)) {
  validate_datum(rank_, simple_roots_, simple_coroots_);
  auto d = std::make_shared<Derived>();
  const std::size_t n = simple_roots_.size();
  d->cartan = cartan_of(simple_roots_, simple_coroots_);
  const BigMatrix big_cartan = to_big(d->cartan);
  d->det = static_cast<Int>(determinant(big_cartan));
  d->adj.assign(n, std::vector<Int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<BigInt> e(n, 0);
    e[j] = 1;
    auto col = solve_rational_square(big_cartan, e);
    if (!col) throw InternalError("Cartan matrix of finite type is singular");
    for (std::size_t i = 0; i < n; ++i) {
      Rational v = (*col)[i] * d->det;
      if (denominator(v) != 1) throw InternalError("adjugate is not integral");
      d->adj[i][j] = static_cast<Int>(numerator(v));
    }
  }
  d->positive_roots = positive_roots_raw(simple_roots_, simple_coroots_, d->adj);
  // The coroot system has Cartan matrix A^T, whose adjugate is adj^T.
  IntMatrix adj_t(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj_t[i][j] = d->adj[j][i];
  d->positive_coroots = positive_roots_raw(simple_coroots_, simple_roots_, adj_t);
  if (d->positive_roots.size() != d->positive_coroots.size())
    throw InternalError("root and coroot systems differ in size");
  d->two_rho = Weight::zero(static_cast<std::size_t>(rank_));
  for (const auto& r : d->positive_roots) d->two_rho += r;
  d->two_rho_check = Coweight::zero(static_cast<std::size_t>(rank_));
  for (const auto& r : d->positive_coroots) d->two_rho_check += r;

  SmithForm snf = smith_normal_form(rows_of(simple_roots_), static_cast<std::size_t>(rank_));
  for (const auto& x : snf.diagonal) d->elementary_divisors.push_back(static_cast<Int>(x));
  d->snf_right.assign(static_cast<std::size_t>(rank_), std::vector<Int>(static_cast<std::size_t>(rank_)));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) d->snf_right[i][j] = static_cast<Int>(snf.right[i][j]);
  derived_ = std::move(d);
}

const IntMatrix& RootDatum::cartan() const { return derived_->cartan; }
const std::vector<Weight>& RootDatum::positive_roots() const { return derived_->positive_roots; }
const std::vector<Coweight>& RootDatum::positive_coroots() const { return derived_->positive_coroots; }
const Weight& RootDatum::two_rho() const { return derived_->two_rho; }
const Coweight& RootDatum::two_rho_check() const { return derived_->two_rho_check; }
Int RootDatum::cartan_det() const { return derived_->det; }

std::vector<Int> RootDatum::scaled_projected_coordinates(const Weight& v) const {
  if (v.size() != static_cast<std::size_t>(rank_)) throw DomainError("weight has wrong length for this datum");
  const std::size_t n = simple_roots_.size();
  std::vector<Int> p(n);
  for (std::size_t j = 0; j < n; ++j) p[j] = pairing(v, simple_coroots_[j]);
  std::vector<Int> nums(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) nums[i] += derived_->adj[i][j] * p[j];
  return nums;
}

std::optional<std::vector<Int>> RootDatum::scaled_root_coordinates(const Weight& v) const {
  std::vector<Int> nums = scaled_projected_coordinates(v);
  const std::size_t n = nums.size();
  // v must lie in the span: sum nums_i alpha_i == det * v
  Weight check = Weight::zero(v.size());
  for (std::size_t i = 0; i < n; ++i) check += nums[i] * simple_roots_[i];
  if (check != derived_->det * v) return std::nullopt;
  return nums;
}

IntMatrix cartan_matrix(const RootDatum& rd) { return rd.cartan(); }

bool is_dominant(const RootDatum& rd, const Weight& lambda) {
  for (const auto& c : rd.simple_coroots())
    if (pairing(lambda, c) < 0) return false;
  return true;
}

bool is_regular_dominant(const RootDatum& rd, const Weight& lambda) {
  for (const auto& c : rd.simple_coroots())
    if (pairing(lambda, c) <= 0) return false;
  return true;
}

Weight reflect(const RootDatum& rd, const Weight& lambda, int i) {
  const Int c = pairing(lambda, rd.simple_coroots().at(static_cast<std::size_t>(i)));
  return lambda - c * rd.simple_roots()[static_cast<std::size_t>(i)];
}

Weight apply_word(const RootDatum& rd, const WeylWord& w, const Weight& lambda) {
  Weight x = lambda;
  for (int letter : w.letters) {
    if (letter < 0 || letter >= rd.semisimple_rank()) throw DomainError("Weyl word letter out of range");
    x = reflect(rd, x, letter);
  }
  return x;
}

DominantRepresentative dominant_representative(const RootDatum& rd, const Weight& lambda) {
  DominantRepresentative out{lambda, {}};
  for (;;) {
    int violating = -1;
    for (int i = 0; i < rd.semisimple_rank(); ++i)
      if (pairing(out.weight, rd.simple_coroots()[static_cast<std::size_t>(i)]) < 0) {
        violating = i;
        break;
      }
    if (violating < 0) return out;
    out.weight = reflect(rd, out.weight, violating);
    out.word.letters.push_back(violating);
  }
}

std::set<Weight> weyl_orbit(const RootDatum& rd, const Weight& lambda) {
  std::set<Weight> orbit{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight x = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rd.semisimple_rank(); ++i) {
      Weight y = reflect(rd, x, i);
      if (orbit.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return orbit;
}

std::size_t weyl_group_order(const RootDatum& rd) {
  // 2rho pairs to 2 with every simple coroot, so its stabilizer is trivial.
  return weyl_orbit(rd, rd.two_rho()).size();
}

bool leq_dominance(const RootDatum& rd, const Weight& lambda, const Weight& mu) {
  auto nums = rd.scaled_root_coordinates(mu - lambda);
  if (!nums) return false;
  const Int det = rd.cartan_det();
  for (Int x : *nums)
    if (x < 0 || x % det != 0) return false;
  return true;
}

bool preceq(const RootDatum& rd, const Weight& lambda, const Weight& mu) {
  auto nums = rd.scaled_root_coordinates(mu - lambda);
  if (!nums) return false;
  for (Int x : *nums)
    if (x < 0) return false;
  return true;
}

const std::vector<Int>& RootDatum::root_lattice_divisors() const { return derived_->elementary_divisors; }
const IntMatrix& RootDatum::root_lattice_transform() const { return derived_->snf_right; }

std::vector<Int> class_mod_root_lattice(const RootDatum& rd, const Weight& lambda) {
  const std::size_t r = static_cast<std::size_t>(rd.rank());
  if (lambda.size() != r) throw DomainError("weight has wrong length for this datum");
  const auto& v = rd.root_lattice_transform();
  const auto& divisors = rd.root_lattice_divisors();
  std::vector<Int> y(r, 0);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) y[j] += lambda[i] * v[i][j];
  // independent simple roots: every divisor is nonzero
  for (std::size_t j = 0; j < divisors.size(); ++j) {
    const Int d = divisors[j];
    y[j] = ((y[j] % d) + d) % d;
  }
  return y;
}

std::set<Weight> positive_roots(const RootDatum& rd) {
  return {rd.positive_roots().begin(), rd.positive_roots().end()};
}

Weight two_rho(const RootDatum& rd) { return rd.two_rho(); }

Int height(const RootDatum& rd, const Weight& lambda) { return pairing(lambda, rd.two_rho_check()); }

std::vector<Int> dominant_descent_bound(const RootDatum& rd, const Weight& mu) {
  // The inverse of a finite-type Cartan matrix is entrywise nonnegative, so a
  // dominant weight has nonnegative root coordinates (of its projection to the
  // root span). Hence mu - sum c_i alpha_i dominant forces c_i <= coord_i(mu).
  const std::vector<Int> nums = rd.scaled_projected_coordinates(mu);
  const Int det = rd.cartan_det();
  std::vector<Int> bound(nums.size());
  for (std::size_t i = 0; i < nums.size(); ++i) bound[i] = nums[i] >= 0 ? nums[i] / det : -1;
  return bound;
}

std::vector<Weight> dominant_weights_below(const RootDatum& rd, const Weight& mu) {
  if (!is_dominant(rd, mu)) throw DomainError("dominant_weights_below: " + to_string(mu) + " is not dominant");
  const std::vector<Int> bound = dominant_descent_bound(rd, mu);
  const std::size_t n = bound.size();
  std::vector<Weight> out;
  std::vector<Int> c(n, 0);
  // odometer over the box prod [0, bound_i]
  for (;;) {
    Weight x = mu;
    for (std::size_t i = 0; i < n; ++i) x -= c[i] * rd.simple_roots()[i];
    if (is_dominant(rd, x)) out.push_back(std::move(x));
    std::size_t k = 0;
    while (k < n && ++c[k] > bound[k]) c[k++] = 0;
    if (k == n) break;
  }
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    const Int ha = height(rd, a), hb = height(rd, b);
    return ha != hb ? ha > hb : a < b;
  });
  return out;
}

std::set<Weight> omega_set(const RootDatum& rd, const Weight& mu) {
  if (!is_dominant(rd, mu)) throw DomainError("omega_set: " + to_string(mu) + " is not dominant");
  std::set<Weight> out;
  for (const Weight& lam : dominant_weights_below(rd, mu)) {
    auto orbit = weyl_orbit(rd, lam);
    out.insert(orbit.begin(), orbit.end());
  }
  return out;
}

bool conv_hull_leq(const RootDatum& rd, const Weight& lambda, const Weight& mu) {
  if (!is_dominant(rd, lambda) || !is_dominant(rd, mu))
    throw DomainError("conv_hull_leq: inputs must be dominant");
  const std::set<Weight> inner = weyl_orbit(rd, lambda);
  const std::set<Weight> outer_set = weyl_orbit(rd, mu);
  const std::vector<Weight> outer(outer_set.begin(), outer_set.end());
  const std::size_t r = static_cast<std::size_t>(rd.rank());
  for (const Weight& v : inner) {
    // sum t_i w_i mu = v, sum t_i = 1, t >= 0
    RationalMatrix a(r + 1, std::vector<Rational>(outer.size()));
    std::vector<Rational> b(r + 1);
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t i = 0; i < outer.size(); ++i) a[k][i] = outer[i][k];
      b[k] = v[k];
    }
    for (std::size_t i = 0; i < outer.size(); ++i) a[r][i] = 1;
    b[r] = 1;
    if (!is_feasible(a, b)) return false;
  }
  return true;
}

RootDatum dual_root_datum(const RootDatum& rd) {
  std::vector<Weight> roots;
  std::vector<Coweight> coroots;
  for (const auto& c : rd.simple_coroots()) roots.push_back(as_weight(c));
  for (const auto& r : rd.simple_roots()) coroots.push_back(as_coweight(r));
  static constexpr std::string_view kSuffix = "^v";
  std::string name = rd.name();
  if (name.size() >= kSuffix.size() && name.compare(name.size() - kSuffix.size(), kSuffix.size(), kSuffix) == 0)
    name.resize(name.size() - kSuffix.size());
  else if (!name.empty())
    name += kSuffix;
  return RootDatum(rd.rank(), std::move(roots), std::move(coroots), std::move(name));
}

}  // namespace satake
