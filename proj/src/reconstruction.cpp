#include "satake/reconstruction.hpp"

#include "satake/integer_linear_algebra.hpp"
#include "satake/rational_lp.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace satake {

namespace {

[[noreturn]] void inconclusive(const std::string& what) {
  throw ReconstructionError(ReconstructionError::Kind::kInconclusive, what);
}
[[noreturn]] void inconsistent(const std::string& what) {
  throw ReconstructionError(ReconstructionError::Kind::kInconsistent, what);
}

Int to_int(const BigInt& x) {
  if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
    throw InternalError("integer overflow in lattice coordinates");
  return static_cast<Int>(x);
}

std::string vec_string(const std::vector<Int>& v) { return to_string(Weight(v)); }

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue:
      return "true";
    case Verdict::kFalse:
      return "false";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

void validate_config(const ReconstructionConfig& cfg) {
  if (cfg.k_max < 2) throw DomainError("k_max must be at least 2");
}

// ---------------------------------------------------------------------------
// AbstractSemiring

AbstractSemiring::AbstractSemiring(std::string unit, std::vector<std::string> ids,
                                   const std::vector<std::tuple<std::string, std::string, ProductEntry>>& products)
    : unit_(std::move(unit)), ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) throw DomainError("duplicate id in semiring");
  for (std::size_t i = 0; i < ids_.size(); ++i) index_[ids_[i]] = i;
  if (!index_.count(unit_)) throw DomainError("unit '" + unit_ + "' is not an id");
  for (const auto& [a, b, entry] : products) {
    auto ia = index_of(a), ib = index_of(b);
    if (!ia || !ib) throw DomainError("product refers to unknown id");
    for (const auto& [t, m] : entry.terms) {
      if (!index_.count(t)) throw DomainError("product term refers to unknown id '" + t + "'");
      if (m <= 0) throw DomainError("product multiplicities must be positive");
    }
    auto key = std::minmax(*ia, *ib);
    auto [it, fresh] = products_.emplace(std::pair{key.first, key.second}, entry);
    if (!fresh && (it->second.terms != entry.terms || it->second.complete != entry.complete))
      throw DomainError("product (" + a + "," + b + ") listed twice with different terms");
  }
}

std::optional<std::size_t> AbstractSemiring::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const ProductEntry* AbstractSemiring::product(std::size_t a, std::size_t b) const {
  auto it = products_.find(std::minmax(a, b));
  return it == products_.end() ? nullptr : &it->second;
}

const ProductEntry* AbstractSemiring::product(const std::string& a, const std::string& b) const {
  auto ia = index_of(a), ib = index_of(b);
  if (!ia || !ib) throw DomainError("unknown id");
  return product(*ia, *ib);
}

ProductEntry* AbstractSemiring::mutable_product(std::size_t a, std::size_t b) {
  auto it = products_.find(std::minmax(a, b));
  return it == products_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Dump

namespace {

std::vector<Coweight> central_coweights(const RootDatum& rd) {
  const auto r = static_cast<std::size_t>(rd.rank());
  if (rd.semisimple_rank() == 0) {
    std::vector<Coweight> out;
    for (std::size_t i = 0; i < r; ++i) {
      Coweight e = Coweight::zero(r);
      e[i] = 1;
      out.push_back(e);
    }
    return out;
  }
  BigMatrix a;
  for (const auto& al : rd.simple_roots()) {
    std::vector<BigInt> row;
    for (Int c : al.coords) row.emplace_back(c);
    a.push_back(row);
  }
  auto sol = solve_integer_system(a, std::vector<BigInt>(a.size(), 0), r);
  std::vector<Coweight> out;
  for (const auto& k : sol->kernel) {
    Coweight z = Coweight::zero(r);
    for (std::size_t i = 0; i < r; ++i) z[i] = to_int(k[i]);
    out.push_back(z);
  }
  return out;
}

}  // namespace

Int dump_height(const RootDatum& rd, const Weight& lambda) {
  Int h = height(rd, lambda);
  for (const auto& z : central_coweights(rd)) h += std::abs(pairing(lambda, z));
  return h;
}

std::vector<Weight> dominant_weights_up_to(const RootDatum& rd, Int bound) {
  const auto r = static_cast<std::size_t>(rd.rank());
  if (r == 0) return {Weight{}};
  // lambda is determined by its pairings with the simple coroots and with a
  // basis of central coweights; both are bounded by the height
  const auto central = central_coweights(rd);
  BigMatrix m;
  for (const auto& c : rd.simple_coroots()) {
    std::vector<BigInt> row;
    for (Int x : c.coords) row.emplace_back(x);
    m.push_back(row);
  }
  for (const auto& z : central) {
    std::vector<BigInt> row;
    for (Int x : z.coords) row.emplace_back(x);
    m.push_back(row);
  }
  const auto ss = static_cast<std::size_t>(rd.semisimple_rank());
  std::vector<Int> lo(r), hi(r);
  for (std::size_t i = 0; i < r; ++i) {
    lo[i] = i < ss ? 0 : -bound;
    hi[i] = bound;
  }
  std::vector<Weight> out;
  std::vector<Int> p = lo;
  for (;;) {
    std::vector<BigInt> rhs(p.begin(), p.end());
    if (auto x = solve_rational_square(m, rhs)) {
      bool integral = true;
      Weight w = Weight::zero(r);
      for (std::size_t i = 0; i < r && integral; ++i) {
        if (denominator((*x)[i]) != 1) integral = false;
        else w[i] = to_int(numerator((*x)[i]));
      }
      if (integral && is_dominant(rd, w) && dump_height(rd, w) <= bound) out.push_back(w);
    }
    std::size_t i = 0;
    while (i < r && p[i] == hi[i]) {
      p[i] = lo[i];
      ++i;
    }
    if (i == r) break;
    ++p[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

DumpResult dump_semiring(const RootDatum& rd, Int height_bound, std::uint64_t seed) {
  const auto weights = dominant_weights_up_to(rd, height_bound);
  const std::size_t n = weights.size();
  // seeded bijection weights -> tokens (own Fisher-Yates so the stream is
  // identical on every standard library)
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 gen(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[gen() % i]);
  const int width = std::max<int>(3, static_cast<int>(std::to_string(n ? n - 1 : 0).size()));
  std::vector<std::string> token(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(perm[i]);
    token[i] = "g" + std::string(static_cast<std::size_t>(width) - std::min<std::size_t>(digits.size(), width), '0') + digits;
  }
  std::map<Weight, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[weights[i]] = i;

  RepresentationRing ring(rd);
  std::vector<std::tuple<std::string, std::string, ProductEntry>> products;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const auto t = ring.tensor_decompose(weights[i], weights[j]);
      ProductEntry e;
      e.complete = true;
      for (const auto& [w, m] : t.terms()) {
        auto it = index.find(w);
        if (it == index.end()) e.complete = false;
        else e.terms[token[it->second]] = m;
      }
      const auto& a = std::min(token[i], token[j]);
      const auto& b = std::max(token[i], token[j]);
      products.emplace_back(a, b, std::move(e));
    }
  const Weight zero = Weight::zero(static_cast<std::size_t>(rd.rank()));
  DumpResult out;
  out.semiring = AbstractSemiring(token[index.at(zero)], token, products);
  for (std::size_t i = 0; i < n; ++i) out.truth[token[i]] = weights[i];
  return out;
}

// ---------------------------------------------------------------------------
// Supports

SupportEngine::SupportEngine(const AbstractSemiring& sr)
    : sr_(&sr), n_(sr.size()), unit_(*sr.index_of(sr.unit())), prod_(n_ * n_), present_(n_ * n_, 0) {
  const std::size_t words = (n_ + 63) / 64;
  for (auto& s : prod_) {
    s.set.assign(words, 0);
    s.exact = false;
  }
  for (const auto& [key, entry] : sr.entries()) {
    Support s;
    s.set.assign(words, 0);
    s.exact = entry.complete;
    for (const auto& [t, m] : entry.terms) {
      const std::size_t i = *sr.index_of(t);
      s.set[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    prod_[key.first * n_ + key.second] = s;
    prod_[key.second * n_ + key.first] = s;
    present_[key.first * n_ + key.second] = present_[key.second * n_ + key.first] = 1;
  }
}

bool SupportEngine::subset(const IdSet& a, const IdSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::vector<std::size_t> SupportEngine::members(const IdSet& s) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (contains(s, i)) out.push_back(i);
  return out;
}

SupportEngine::Support SupportEngine::times(const Support& s, std::size_t u) const {
  Support out;
  out.set.assign(s.set.size(), 0);
  out.exact = s.exact;
  for (std::size_t w = 0; w < s.set.size(); ++w) {
    std::uint64_t bits = s.set[w];
    while (bits) {
      const std::size_t i = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
      bits &= bits - 1;
      const Support& p = prod_[i * n_ + u];
      if (!p.exact) out.exact = false;
      for (std::size_t k = 0; k < out.set.size(); ++k) out.set[k] |= p.set[k];
    }
  }
  return out;
}

const SupportEngine::Support& SupportEngine::power(std::size_t a, int k) {
  auto key = std::pair{a, k};
  if (auto it = powers_.find(key); it != powers_.end()) return it->second;
  Support s;
  if (k == 0) {
    s.set.assign((n_ + 63) / 64, 0);
    s.set[unit_ / 64] |= std::uint64_t{1} << (unit_ % 64);
  } else {
    s = times(power(a, k - 1), a);
  }
  return powers_.emplace(key, std::move(s)).first->second;
}

std::optional<std::size_t> SupportEngine::dual(std::size_t a) {
  if (auto it = duals_.find(a); it != duals_.end()) return it->second;
  std::optional<std::size_t> found;
  for (std::size_t j = 0; j < n_; ++j)
    if (contains(prod_[a * n_ + j].set, unit_)) {
      if (found) inconsistent("two duals for id '" + sr_->ids()[a] + "'");
      found = j;
    }
  duals_[a] = found;
  return found;
}

// ---------------------------------------------------------------------------
// Orders

OrderOracle::OrderOracle(SupportEngine& engine, ReconstructionConfig cfg) : engine_(&engine), cfg_(cfg) {
  validate_config(cfg_);
}

std::vector<std::size_t> OrderOracle::witnesses(std::size_t a, std::size_t b) {
  // u ranges over sums of: the unit and the visible constituents of
  // v_{b*} v_a and v_b v_{a*} (one step of class and size correction)
  std::set<std::size_t> w{engine_->unit()};
  if (auto bd = engine_->dual(b))
    for (auto i : engine_->members(engine_->product(*bd, a).set)) w.insert(i);
  if (auto ad = engine_->dual(a))
    for (auto i : engine_->members(engine_->product(b, *ad).set)) w.insert(i);
  return {w.begin(), w.end()};
}

Verdict OrderOracle::raw(std::size_t a, std::size_t b) {
  if (a == b) return Verdict::kTrue;
  if (auto it = raw_.find({a, b}); it != raw_.end()) return it->second;
  const auto us = witnesses(a, b);
  bool unknown = false;
  Verdict v = Verdict::kTrue;
  for (int k = 1; k <= cfg_.k_max; ++k) {
    const auto& lhs = engine_->power(a, k);
    if (!lhs.exact) {
      v = Verdict::kInconclusive;
      break;
    }
    const auto& bk = engine_->power(b, k);
    SupportEngine::Support rhs;
    rhs.set.assign(lhs.set.size(), 0);
    rhs.exact = true;
    for (auto u : us) {
      auto t = engine_->times(bk, u);
      if (!t.exact) rhs.exact = false;
      for (std::size_t i = 0; i < rhs.set.size(); ++i) rhs.set[i] |= t.set[i];
    }
    if (SupportEngine::subset(lhs.set, rhs.set)) continue;
    if (rhs.exact) {
      v = Verdict::kFalse;
      break;
    }
    unknown = true;
  }
  if (v == Verdict::kTrue && unknown) v = Verdict::kInconclusive;
  raw_[{a, b}] = v;
  return v;
}

Verdict OrderOracle::preceq(std::size_t a, std::size_t b) {
  Verdict v = raw(a, b);
  // antisymmetry: a passing test only counts once the converse is refuted
  if (v == Verdict::kTrue && a != b && raw(b, a) != Verdict::kFalse) v = Verdict::kInconclusive;
  return v;
}

Verdict recover_preceq(const AbstractSemiring& sr, const ReconstructionConfig& cfg, const std::string& a,
                       const std::string& b) {
  auto ia = sr.index_of(a), ib = sr.index_of(b);
  if (!ia || !ib) throw DomainError("recover_preceq: unknown id");
  SupportEngine engine(sr);
  OrderOracle oracle(engine, cfg);
  return oracle.preceq(*ia, *ib);
}

namespace {

// a + b is the constituent m of v_a v_b whose square holds 2m, and 2m occurs
// in no other product v_p v_q with p, q among a, b and the constituents
// (p + q differs from 2m by a nonzero dominant weight or positive roots).
// The unit is never 2m. Only in-window supports are used, which are exact
// for every listed product.
std::size_t sum_index(SupportEngine& e, std::size_t a, std::size_t b) {
  const auto& ids = e.semiring().ids();
  const auto pair_name = "(" + ids[a] + "," + ids[b] + ")";
  if (!e.has_product(a, b) || !e.product(a, b).exact) inconclusive("incomplete product " + pair_name);
  const auto cs = e.members(e.product(a, b).set);
  if (cs.empty()) inconsistent("empty product " + pair_name);
  if (cs.size() == 1) return cs.front();
  for (auto c : cs) {
    if (!e.has_product(c, c) || !e.product(c, c).exact) inconclusive("incomplete product (" + ids[c] + "," + ids[c] + ")");
    for (auto d : cs)
      if (!e.has_product(c, d)) inconclusive("missing product (" + ids[c] + "," + ids[d] + ")");
  }
  std::vector<std::size_t> pool = cs;
  for (auto f : {a, b})
    if (std::find(pool.begin(), pool.end(), f) == pool.end()) pool.push_back(f);
  std::vector<std::size_t> tops;
  for (auto x : cs) {
    SupportEngine::IdSet cover(e.product(x, x).set.size(), 0);
    cover[e.unit() / 64] |= std::uint64_t{1} << (e.unit() % 64);
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i; j < pool.size(); ++j) {
        if (pool[i] == x && pool[j] == x) continue;
        if (!e.has_product(pool[i], pool[j])) continue;
        const auto& s = e.product(pool[i], pool[j]).set;
        for (std::size_t w = 0; w < cover.size(); ++w) cover[w] |= s[w];
      }
    if (!SupportEngine::subset(e.product(x, x).set, cover)) tops.push_back(x);
  }
  if (tops.empty()) inconsistent("no top constituent in " + pair_name);
  if (tops.size() > 1) inconclusive("ambiguous maximum in " + pair_name);
  return tops.front();
}

}  // namespace

std::string recover_sum(const AbstractSemiring& sr, const ReconstructionConfig& cfg, const std::string& a,
                        const std::string& b) {
  validate_config(cfg);
  auto ia = sr.index_of(a), ib = sr.index_of(b);
  if (!ia || !ib) throw DomainError("recover_sum: unknown id");
  SupportEngine engine(sr);
  return sr.ids()[sum_index(engine, *ia, *ib)];
}

// ---------------------------------------------------------------------------
// Monoid and lattice

namespace {

struct SumRecord {
  std::size_t a, b, s;
};

struct MonoidState {
  MonoidResult result;
  std::vector<SumRecord> sums;
  std::size_t skipped = 0;
};

MonoidState build_monoid(SupportEngine& e) {
  const auto& sr = e.semiring();
  const auto& ids = sr.ids();
  const std::size_t n = e.size();
  MonoidState st;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      if (!e.has_product(a, b) || !e.product(a, b).exact) continue;
      try {
        st.sums.push_back({a, b, sum_index(e, a, b)});
      } catch (const ReconstructionError& err) {
        if (err.kind() != ReconstructionError::Kind::kInconclusive) throw;
        const std::string what = err.what();
        // ambiguity with all data present is a comparison the window could
        // not settle; boundary pairs are simply out of reach
        if (what.rfind("ambiguous", 0) == 0) {
          ++st.skipped;
          st.result.log.push_back("skipped: " + what);
        }
      }
    }
  st.result.log.push_back("sums recovered: " + std::to_string(st.sums.size()) + ", skipped: " +
                          std::to_string(st.skipped));
  // Keep the largest cluster of ids linked through sums of non-units.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Ids near the window boundary occur in too few relations to be pinned
  // down and would add spurious free directions; relations are taken only
  // among ids whose square is complete.
  auto interior = [&](std::size_t i) { return e.has_product(i, i) && e.product(i, i).exact; };
  std::vector<SumRecord> rels;
  for (const auto& r : st.sums)
    if (r.a != e.unit() && r.b != e.unit() && interior(r.a) && interior(r.b) && interior(r.s)) rels.push_back(r);
  std::set<std::size_t> linked;
  for (const auto& r : rels) {
    linked.insert({r.a, r.b, r.s});
    parent[find(r.a)] = find(r.b);
    parent[find(r.s)] = find(r.b);
  }
  if (linked.empty()) inconclusive("generators not found: no sums of non-units in the window");
  std::map<std::size_t, std::vector<std::size_t>> clusters;
  for (auto i : linked) clusters[find(i)].push_back(i);
  const std::vector<std::size_t>* best = nullptr;
  for (const auto& [root, members] : clusters)
    if (!best || members.size() > best->size() || (members.size() == best->size() && members < *best)) best = &members;
  std::set<std::size_t> cols_set(best->begin(), best->end());
  cols_set.insert(e.unit());
  if (clusters.size() > 1)
    st.result.log.push_back("kept a linked cluster of " + std::to_string(best->size()) + " ids out of " +
                            std::to_string(clusters.size()) + " clusters");
  std::vector<SumRecord> kept{{e.unit(), e.unit(), e.unit()}};
  for (const auto& r : rels)
    if (cols_set.count(r.a)) kept.push_back(r);
  st.sums = std::move(kept);
  const std::vector<std::size_t> cols(cols_set.begin(), cols_set.end());
  std::map<std::size_t, std::size_t> col_of;
  for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;

  BigMatrix rel;
  for (const auto& r : st.sums) {
    std::vector<BigInt> row(cols.size(), 0);
    row[col_of[r.a]] += 1;
    row[col_of[r.b]] += 1;
    row[col_of[r.s]] -= 1;
    rel.push_back(std::move(row));
  }
  const BigMatrix basis = row_lattice_basis(rel, cols.size());
  BigMatrix v;
  std::size_t rank = 0;
  if (basis.empty()) {
    v.assign(cols.size(), std::vector<BigInt>(cols.size(), 0));
    for (std::size_t i = 0; i < cols.size(); ++i) v[i][i] = 1;
  } else {
    const SmithForm snf = smith_normal_form(basis, cols.size());
    rank = snf.rank;
    for (std::size_t i = 0; i < rank; ++i)
      if (snf.diagonal[i] != 1) inconsistent("torsion in completion (elementary divisor " + snf.diagonal[i].str() + ")");
    v = snf.right;
  }
  const std::size_t r = cols.size() - rank;
  st.result.rank = static_cast<int>(r);
  std::map<std::vector<Int>, std::size_t> seen;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    std::vector<Int> x(r);
    for (std::size_t j = 0; j < r; ++j) x[j] = to_int(v[i][rank + j]);
    if (auto [it, fresh] = seen.emplace(x, cols[i]); !fresh)
      inconsistent("completion identifies '" + ids[it->second] + "' and '" + ids[cols[i]] + "'");
    st.result.embedding[ids[cols[i]]] = x;
  }
  for (const auto& rc : st.sums) st.result.sums[{ids[rc.a], ids[rc.b]}] = ids[rc.s];
  if (!st.result.embedding.count(sr.unit()) ||
      std::any_of(st.result.embedding.at(sr.unit()).begin(), st.result.embedding.at(sr.unit()).end(),
                  [](Int c) { return c != 0; }))
    inconsistent("unit does not map to zero");

  std::set<std::size_t> decomposable;
  for (const auto& rc : st.sums)
    if (rc.a != e.unit() && rc.b != e.unit()) decomposable.insert(rc.s);
  decomposable.insert(e.unit());
  for (auto c : cols)
    if (!decomposable.count(c)) st.result.generators.push_back(ids[c]);
  st.result.log.push_back("lattice rank " + std::to_string(r) + ", " + std::to_string(cols.size()) +
                          " embedded ids, " + std::to_string(st.result.generators.size()) + " indecomposable");
  return st;
}

std::vector<std::vector<Int>> qplus_from(const AbstractSemiring& sr, const MonoidResult& monoid) {
  std::set<std::vector<Int>> g;
  for (const auto& [mu, emb] : monoid.embedding) {
    const ProductEntry* p = sr.product(mu, mu);
    if (!p || !monoid.sums.count({mu, mu})) continue;
    for (const auto& [c, m] : p->terms) {
      auto it = monoid.embedding.find(c);
      if (it == monoid.embedding.end()) continue;
      std::vector<Int> d(emb.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = 2 * emb[i] - it->second[i];
      if (std::any_of(d.begin(), d.end(), [](Int x) { return x != 0; })) g.insert(d);
    }
  }
  return {g.begin(), g.end()};
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Integer functional positive on every generator, or nullopt if none exists.
std::optional<std::vector<Int>> positive_functional(const std::vector<std::vector<Int>>& gens) {
  if (gens.empty()) return std::vector<Int>{};
  const std::size_t r = gens.front().size(), m = gens.size();
  // variables p (r), q (r), slack (m): (p - q) . g - s_g = 1
  RationalMatrix a(m, std::vector<Rational>(2 * r + m, 0));
  std::vector<Rational> b(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      a[i][j] = gens[i][j];
      a[i][r + j] = -gens[i][j];
    }
    a[i][2 * r + i] = -1;
  }
  auto x = find_nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  std::vector<Rational> phi(r);
  for (std::size_t j = 0; j < r; ++j) phi[j] = (*x)[j] - (*x)[r + j];
  std::vector<Int> out;
  for (const auto& c : clear_denominators(phi)) out.push_back(to_int(c));
  return out;
}

}  // namespace

MonoidResult recover_monoid(const AbstractSemiring& sr, const ReconstructionConfig& cfg) {
  validate_config(cfg);
  SupportEngine engine(sr);
  return build_monoid(engine).result;
}

std::vector<std::vector<Int>> recover_Qplus(const AbstractSemiring& sr, const MonoidResult& monoid) {
  return qplus_from(sr, monoid);
}

Verdict recover_leq(const AbstractSemiring& sr, const ReconstructionConfig& cfg, const MonoidResult& monoid,
                    const std::vector<std::vector<Int>>& qplus, const std::string& a, const std::string& b) {
  if (a == b && sr.index_of(a)) return Verdict::kTrue;
  const Verdict p = recover_preceq(sr, cfg, a, b);
  if (p != Verdict::kTrue) return p;
  auto ea = monoid.embedding.find(a), eb = monoid.embedding.find(b);
  if (ea == monoid.embedding.end() || eb == monoid.embedding.end()) return Verdict::kInconclusive;
  const std::size_t r = ea->second.size();
  std::vector<BigInt> diff(r);
  for (std::size_t i = 0; i < r; ++i) diff[i] = eb->second[i] - ea->second[i];
  if (qplus.empty()) return std::all_of(diff.begin(), diff.end(), [](const BigInt& x) { return x == 0; })
                                ? Verdict::kTrue
                                : Verdict::kFalse;
  // is b - a in the subgroup generated by qplus?
  BigMatrix m(r, std::vector<BigInt>(qplus.size()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < qplus.size(); ++j) m[i][j] = qplus[j][i];
  return solve_integer_system(m, diff, qplus.size()) ? Verdict::kTrue : Verdict::kFalse;
}

std::vector<std::vector<Int>> extract_simple_roots(const std::vector<std::vector<Int>>& qplus) {
  if (qplus.empty()) return {};
  const auto phi = positive_functional(qplus);
  if (!phi) inconsistent("recovered Q+ generators are not contained in a pointed cone");
  Int top = 0;
  for (const auto& g : qplus) top = std::max(top, dot(*phi, g));
  // all semigroup elements with phi <= top
  std::set<std::vector<Int>> reach{std::vector<Int>(qplus.front().size(), 0)};
  std::vector<std::vector<Int>> frontier(reach.begin(), reach.end());
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& x : frontier)
      for (const auto& g : qplus) {
        std::vector<Int> y(x.size());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i] + g[i];
        if (dot(*phi, y) <= top && reach.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<Int>> atoms;
  for (const auto& g : qplus) {
    bool atom = true;
    const Int pg = dot(*phi, g);
    for (const auto& x : reach) {
      const Int px = dot(*phi, x);
      if (px == 0 || px >= pg) continue;
      std::vector<Int> rest(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) rest[i] = g[i] - x[i];
      if (reach.count(rest)) {
        atom = false;
        break;
      }
    }
    if (atom) atoms.push_back(g);
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

namespace {

// mu -> max m with 2mu - m alpha among the constituents of v_mu^2, over
// embedded mu whose square is complete and fully embedded.
std::vector<std::pair<std::vector<Int>, Int>> string_lengths(const AbstractSemiring& sr, const MonoidResult& monoid,
                                                            const std::vector<Int>& alpha) {
  std::vector<std::pair<std::vector<Int>, Int>> out;
  for (const auto& [mu, emb] : monoid.embedding) {
    const ProductEntry* p = sr.product(mu, mu);
    if (!p || !p->complete || !monoid.sums.count({mu, mu})) continue;
    std::set<std::vector<Int>> cons;
    bool embedded = true;
    for (const auto& [c, m] : p->terms) {
      auto it = monoid.embedding.find(c);
      if (it == monoid.embedding.end()) {
        embedded = false;
        break;
      }
      cons.insert(it->second);
    }
    if (!embedded) continue;
    std::vector<Int> x(emb.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = 2 * emb[i];
    if (!cons.count(x)) inconsistent("v_mu^2 lacks the constituent 2mu for '" + mu + "'");
    Int m = 0;
    for (;;) {
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= alpha[i];
      if (!cons.count(x)) break;
      ++m;
    }
    out.emplace_back(emb, m);
  }
  return out;
}

}  // namespace

std::vector<Int> extract_simple_coroots(const AbstractSemiring& sr, const MonoidResult& monoid,
                                        const std::vector<Int>& alpha) {
  const auto data = string_lengths(sr, monoid, alpha);
  const std::size_t r = alpha.size();
  BigMatrix a;
  std::vector<BigInt> b;
  for (const auto& [mu, m] : data) {
    std::vector<BigInt> row(mu.begin(), mu.end());
    a.push_back(row);
    b.emplace_back(m);
  }
  // the functional must also take the value 2 on alpha
  a.emplace_back(alpha.begin(), alpha.end());
  b.emplace_back(2);
  auto sol = solve_integer_system(a, b, r);
  if (!sol) inconsistent("non-additive functional for simple root " + vec_string(alpha));
  if (!sol->kernel.empty()) inconclusive("window too small to determine the coroot of " + vec_string(alpha));
  std::vector<Int> out;
  for (const auto& c : sol->particular) out.push_back(to_int(c));
  return out;
}

RecoveredDatum assemble_root_datum(const std::vector<std::vector<Int>>& roots,
                                   const std::vector<std::vector<Int>>& coroots, const MonoidResult& monoid) {
  if (roots.size() != coroots.size()) throw DomainError("assemble_root_datum: root/coroot count mismatch");
  std::vector<Weight> rs;
  std::vector<Coweight> cs;
  for (const auto& x : roots) rs.emplace_back(x);
  for (const auto& x : coroots) cs.emplace_back(x);
  RecoveredDatum out;
  try {
    out.datum = RootDatum(monoid.rank, rs, cs, "recovered");
  } catch (const DatumError& e) {
    inconsistent(std::string("recovered datum is invalid: ") + e.what());
  }
  for (const auto& [id, emb] : monoid.embedding) out.labeling[id] = Weight(emb);
  return out;
}

// ---------------------------------------------------------------------------
// Pipeline

namespace {

void label_everything(const AbstractSemiring& sr, RecoveredDatum& rec) {
  const auto& rd = rec.datum;
  const auto& ids = sr.ids();
  std::vector<std::optional<Weight>> label(ids.size());
  std::map<Weight, std::size_t> owner;
  auto assign = [&](std::size_t i, const Weight& w) {
    if (!is_dominant(rd, w)) inconsistent("id '" + ids[i] + "' receives non-dominant weight " + to_string(w));
    if (auto [it, fresh] = owner.emplace(w, i); !fresh)
      inconsistent("ids '" + ids[it->second] + "' and '" + ids[i] + "' share weight " + to_string(w));
    label[i] = w;
  };
  for (const auto& [id, w] : rec.labeling) assign(*sr.index_of(id), w);

  RepresentationRing ring(rd);
  std::map<std::pair<std::size_t, std::size_t>, SemiringElement> predicted;
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  for (const auto& [key, entry] : sr.entries())
    if (entry.complete) pending.push_back(key);
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::pair<std::size_t, std::size_t>> still;
    for (const auto& key : pending) {
      if (!label[key.first] || !label[key.second]) {
        still.push_back(key);
        continue;
      }
      auto it = predicted.find(key);
      if (it == predicted.end())
        it = predicted.emplace(key, ring.tensor_decompose(*label[key.first], *label[key.second])).first;
      const ProductEntry& entry = *sr.product(key.first, key.second);
      // unmatched ids and weights, grouped by multiplicity
      std::map<BigInt, std::vector<std::size_t>> open_ids;
      std::map<BigInt, std::vector<Weight>> open_weights;
      std::set<Weight> matched;
      for (const auto& [t, m] : entry.terms) {
        const std::size_t ti = *sr.index_of(t);
        if (label[ti]) {
          matched.insert(*label[ti]);
          continue;
        }
        open_ids[m].push_back(ti);
      }
      for (const auto& [w, m] : it->second.terms())
        if (!matched.count(w) && !owner.count(w)) open_weights[m].push_back(w);
      if (open_ids.empty()) continue;
      std::vector<Weight> free_weights;
      for (const auto& [m, group] : open_weights) free_weights.insert(free_weights.end(), group.begin(), group.end());
      if (open_ids.size() == 1 && open_ids.begin()->second.size() == 1 && free_weights.size() == 1) {
        assign(open_ids.begin()->second.front(), free_weights.front());
        progress = true;
        continue;
      }
      bool unresolved = false;
      for (const auto& [m, group] : open_ids) {
        auto wit = open_weights.find(m);
        if (group.size() == 1 && wit != open_weights.end() && wit->second.size() == 1) {
          assign(group.front(), wit->second.front());
          progress = true;
        } else {
          unresolved = true;
        }
      }
      if (unresolved) still.push_back(key);
    }
    pending = std::move(still);
  }
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (!label[i]) inconclusive("could not label id '" + ids[i] + "'");
  rec.labeling.clear();
  for (std::size_t i = 0; i < ids.size(); ++i) rec.labeling[ids[i]] = *label[i];
}

void check_products(const AbstractSemiring& sr, const RecoveredDatum& rec) {
  RepresentationRing ring(rec.datum);
  std::map<Weight, std::string> owner;
  for (const auto& [id, w] : rec.labeling) owner[w] = id;
  if (!rec.labeling.at(sr.unit()).is_zero()) inconclusive("unit is not labeled by the zero weight");
  // A datum that reproduces every support but not every multiplicity is
  // pinned down by the table, so the table contradicts itself. A support
  // mismatch may instead mean the window did not determine the datum.
  std::string support_problem, mult_problem;
  for (const auto& [key, entry] : sr.entries()) {
    const auto& a = sr.ids()[key.first];
    const auto& b = sr.ids()[key.second];
    const auto pred = ring.tensor_decompose(rec.labeling.at(a), rec.labeling.at(b));
    std::map<std::string, BigInt> expect;
    bool outside = false;
    for (const auto& [w, m] : pred.terms()) {
      auto it = owner.find(w);
      if (it == owner.end()) outside = true;
      else expect[it->second] = m;
    }
    const std::string where = "product (" + a + "," + b + ")";
    bool same_support = expect.size() == entry.terms.size();
    auto jt = entry.terms.begin();
    for (auto it = expect.begin(); same_support && it != expect.end(); ++it, ++jt)
      same_support = it->first == jt->first;
    if (!same_support) {
      if (support_problem.empty()) support_problem = where + " has constituents the recovered datum does not predict";
    } else if (expect != entry.terms) {
      if (mult_problem.empty()) mult_problem = where + " has multiplicities the recovered datum does not predict";
    }
    if (entry.complete == outside && support_problem.empty())
      support_problem = where + (entry.complete ? " is marked complete but has constituents outside the ids"
                                                : " is marked incomplete but all constituents are ids");
  }
  if (!support_problem.empty()) inconclusive("window does not support a consistent datum: " + support_problem);
  if (!mult_problem.empty()) inconsistent(mult_problem);
}

}  // namespace

ReconstructionReport reconstruct(const AbstractSemiring& sr, const ReconstructionConfig& cfg) {
  validate_config(cfg);
  ReconstructionReport rep;
  auto& log = rep.recovered.log;
  // the unit must act trivially
  for (std::size_t i = 0; i < sr.size(); ++i) {
    const ProductEntry* p = sr.product(i, *sr.index_of(sr.unit()));
    if (!p || p->terms != std::map<std::string, BigInt>{{sr.ids()[i], 1}} || !p->complete)
      inconsistent("unit does not act trivially on '" + sr.ids()[i] + "'");
  }
  if (sr.size() == 1) {
    rep.recovered.datum = RootDatum(0, {}, {}, "recovered");
    rep.recovered.labeling[sr.unit()] = Weight{};
    log.push_back("single id: trivial datum");
    return rep;
  }

  SupportEngine engine(sr);
  MonoidState st = build_monoid(engine);
  rep.monoid = st.result;
  rep.skipped_sums = st.skipped;
  for (const auto& l : st.result.log) log.push_back(l);

  // Contradictions met while deriving roots, coroots and labels can come from
  // a window that misses relations; only the final product check, run
  // against a fully labeled valid datum, is reported as an inconsistency.
  try {
    rep.qplus = qplus_from(sr, rep.monoid);
    log.push_back("Q+ generating differences: " + std::to_string(rep.qplus.size()));
    const auto roots = extract_simple_roots(rep.qplus);
    {
      std::ostringstream os;
      os << "simple roots:";
      for (const auto& a : roots) os << ' ' << vec_string(a);
      log.push_back(os.str());
    }
    std::vector<std::vector<Int>> coroots;
    for (const auto& a : roots) coroots.push_back(extract_simple_coroots(sr, rep.monoid, a));
    {
      std::ostringstream os;
      os << "simple coroots:";
      for (const auto& a : coroots) os << ' ' << vec_string(a);
      log.push_back(os.str());
    }
    RecoveredDatum assembled = assemble_root_datum(roots, coroots, rep.monoid);
    rep.recovered.datum = assembled.datum;
    rep.recovered.labeling = assembled.labeling;
    label_everything(sr, rep.recovered);
    log.push_back("labeled all " + std::to_string(sr.size()) + " ids");
  } catch (const ReconstructionError& err) {
    if (err.kind() == ReconstructionError::Kind::kInconclusive) throw;
    inconclusive(std::string("window does not support a consistent datum: ") + err.what());
  }
  check_products(sr, rep.recovered);
  log.push_back("all " + std::to_string(sr.entries().size()) + " products agree with the recovered datum");
  return rep;
}

// ---------------------------------------------------------------------------
// Based isomorphisms

namespace {

BigInt det_of(const IntMatrix& m) { return determinant(to_big(m)); }

}  // namespace

std::optional<IntMatrix> based_iso(const RootDatum& rd1, const RootDatum& rd2) {
  if (rd1.rank() != rd2.rank() || rd1.semisimple_rank() != rd2.semisimple_rank()) return std::nullopt;
  const auto r = static_cast<std::size_t>(rd1.rank());
  const auto s = static_cast<std::size_t>(rd1.semisimple_rank());
  if (r == 0) return IntMatrix{};
  const IntMatrix& a1 = rd1.cartan();
  const IntMatrix& a2 = rd2.cartan();
  std::vector<std::size_t> sigma(s);
  std::iota(sigma.begin(), sigma.end(), 0);
  bool undecided = false;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < s && ok; ++i)
      for (std::size_t j = 0; j < s && ok; ++j)
        if (a1[i][j] != a2[sigma[i]][sigma[j]]) ok = false;
    if (!ok) continue;
    // unknowns M[p][q] at index p*r + q
    BigMatrix eq;
    std::vector<BigInt> rhs;
    for (std::size_t i = 0; i < s; ++i) {
      const auto& x = rd1.simple_roots()[i];
      const auto& y = rd2.simple_roots()[sigma[i]];
      for (std::size_t p = 0; p < r; ++p) {
        std::vector<BigInt> row(r * r, 0);
        for (std::size_t q = 0; q < r; ++q) row[p * r + q] = x[q];
        eq.push_back(row);
        rhs.emplace_back(y[p]);
      }
      const auto& cx = rd1.simple_coroots()[i];
      const auto& cy = rd2.simple_coroots()[sigma[i]];
      for (std::size_t q = 0; q < r; ++q) {
        std::vector<BigInt> row(r * r, 0);
        for (std::size_t p = 0; p < r; ++p) row[p * r + q] = cy[p];
        eq.push_back(row);
        rhs.emplace_back(cx[q]);
      }
    }
    std::optional<IntegerSolution> sol;
    if (eq.empty()) {
      sol = IntegerSolution{std::vector<BigInt>(r * r, 0), {}};
      for (std::size_t k = 0; k < r * r; ++k) {
        std::vector<BigInt> e(r * r, 0);
        e[k] = 1;
        sol->kernel.push_back(e);
      }
    } else {
      sol = solve_integer_system(eq, rhs, r * r);
    }
    if (!sol) continue;
    const std::size_t kdim = sol->kernel.size();
    auto member = [&](const std::vector<BigInt>& coef) {
      IntMatrix m(r, std::vector<Int>(r));
      for (std::size_t p = 0; p < r; ++p)
        for (std::size_t q = 0; q < r; ++q) {
          BigInt v = sol->particular[p * r + q];
          for (std::size_t k = 0; k < kdim; ++k) v += coef[k] * sol->kernel[k][p * r + q];
          m[p][q] = to_int(v);
        }
      return m;
    };
    if (kdim == 0) {
      IntMatrix m = member({});
      const BigInt d = det_of(m);
      if (d == 1 || d == -1) return m;
      continue;
    }
    if (kdim == 1) {
      // kernel matrices have rank 1 here, so det is affine in the coefficient
      const BigInt d0 = det_of(member({BigInt(0)}));
      const BigInt d1 = det_of(member({BigInt(1)})) - d0;
      for (int target : {1, -1}) {
        const BigInt num = target - d0;
        if (d1 == 0) {
          if (num == 0) return member({BigInt(0)});
        } else if (num % d1 == 0) {
          return member({num / d1});
        }
      }
      continue;
    }
    // central rank >= 2: bounded search, undecided if nothing turns up
    std::vector<BigInt> coef(kdim, -3);
    for (;;) {
      IntMatrix m = member(coef);
      const BigInt d = det_of(m);
      if (d == 1 || d == -1) return m;
      std::size_t k = 0;
      while (k < kdim && coef[k] == 3) coef[k++] = -3;
      if (k == kdim) break;
      ++coef[k];
    }
    undecided = true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  if (undecided) throw DomainError("based isomorphism undecided: no unimodular map among small kernel combinations");
  return std::nullopt;
}

}  // namespace satake
