#include "satake/rep_semiring.hpp"

#include <algorithm>

namespace satake {

void SemiringElement::add(const Weight& lambda, const BigInt& m) {
  if (m <= 0) throw DomainError("SemiringElement::add: multiplicity must be positive");
  terms_[lambda] += m;
}

SemiringElement& SemiringElement::operator+=(const SemiringElement& other) {
  for (const auto& [w, m] : other.terms_) terms_[w] += m;
  return *this;
}

BigInt SemiringElement::multiplicity(const Weight& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SemiringElement::check_dominant(const RootDatum& rd) const {
  for (const auto& [w, m] : terms_)
    if (!is_dominant(rd, w)) throw DomainError("semiring term " + to_string(w) + " is not dominant");
}

BigInt WeightMultiplicityTable::total() const {
  BigInt s = 0;
  for (const auto& [w, m] : entries) s += m;
  return s;
}

BigInt WeightMultiplicityTable::multiplicity(const Weight& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? BigInt(0) : it->second;
}

namespace {

// W-invariant form (x, y) = sum over positive coroots of <x, b><y, b>.
Int invariant_form(const RootDatum& rd, const Weight& x, const Weight& y) {
  Int s = 0;
  for (const auto& b : rd.positive_coroots()) s += pairing(x, b) * pairing(y, b);
  return s;
}

}  // namespace

void RepresentationRing::require_dominant(const Weight& lambda, const char* what) const {
  if (lambda.size() != static_cast<std::size_t>(rd_.rank()))
    throw DomainError(std::string(what) + ": weight has wrong length");
  if (!is_dominant(rd_, lambda)) throw DomainError(std::string(what) + ": " + to_string(lambda) + " is not dominant");
}

const std::map<Weight, BigInt>& RepresentationRing::dominant_character(const Weight& lambda) {
  if (auto it = dominant_cache_.find(lambda); it != dominant_cache_.end()) return it->second;
  require_dominant(lambda, "weight_multiplicities");

  // Freudenthal:
  //   m(mu) (lambda - mu, lambda + mu + 2rho) = 2 sum_{a > 0} sum_{j >= 1} m(mu + j a) (mu + j a, a)
  // Dominant weights come sorted by decreasing height, so every weight the
  // right side refers to (after moving it into the dominant chamber) is done.
  const Weight& two_rho_w = rd_.two_rho();
  std::map<Weight, BigInt> mult;
  for (const Weight& mu : dominant_weights_below(rd_, lambda)) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    BigInt rhs = 0;
    for (const Weight& a : rd_.positive_roots()) {
      Weight x = mu + a;
      for (;;) {
        const Weight dom = dominant_representative(rd_, x).weight;
        auto it = mult.find(dom);
        // alpha-strings through the weights of V_lambda are unbroken
        if (it == mult.end()) break;
        rhs += it->second * BigInt(invariant_form(rd_, x, a));
        x += a;
      }
    }
    rhs *= 2;
    const Int denom = invariant_form(rd_, lambda - mu, lambda + mu + two_rho_w);
    if (denom <= 0) throw InternalError("Freudenthal denominator is not positive");
    if (rhs % denom != 0) throw InternalError("Freudenthal recursion produced a non-integral multiplicity");
    BigInt m = rhs / denom;
    if (m < 0) throw InternalError("negative weight multiplicity");
    if (m > 0) mult[mu] = m;
  }
  return dominant_cache_.emplace(lambda, std::move(mult)).first->second;
}

const std::vector<std::pair<Weight, BigInt>>& RepresentationRing::full_character(const Weight& lambda) {
  if (auto it = full_cache_.find(lambda); it != full_cache_.end()) return it->second;
  std::vector<std::pair<Weight, BigInt>> out;
  for (const auto& [mu, m] : dominant_character(lambda))
    for (const Weight& w : weyl_orbit(rd_, mu)) out.emplace_back(w, m);
  std::sort(out.begin(), out.end());
  return full_cache_.emplace(lambda, std::move(out)).first->second;
}

WeightMultiplicityTable RepresentationRing::weight_multiplicities(const Weight& lambda) {
  WeightMultiplicityTable t;
  for (const auto& [w, m] : full_character(lambda)) t.entries.emplace(w, m);
  return t;
}

BigInt RepresentationRing::weyl_dim(const Weight& lambda) const {
  require_dominant(lambda, "weyl_dim");
  // prod <2 lambda + 2 rho, b> / <2 rho, b> over positive coroots b
  const Weight shifted = 2 * lambda + rd_.two_rho();
  BigInt num = 1, den = 1;
  for (const auto& b : rd_.positive_coroots()) {
    num *= pairing(shifted, b);
    den *= pairing(rd_.two_rho(), b);
  }
  if (num % den != 0) throw InternalError("Weyl dimension is not integral");
  return num / den;
}

BigInt RepresentationRing::dimension(const SemiringElement& e) const {
  BigInt s = 0;
  for (const auto& [w, m] : e.terms()) s += m * weyl_dim(w);
  return s;
}

SemiringElement RepresentationRing::tensor_decompose(const Weight& lambda, const Weight& mu) {
  require_dominant(lambda, "tensor_decompose");
  require_dominant(mu, "tensor_decompose");
  // iterate over the smaller character
  const Weight& top = weyl_dim(lambda) >= weyl_dim(mu) ? lambda : mu;
  const Weight& small = (&top == &lambda) ? mu : lambda;
  const Weight& two_rho_w = rd_.two_rho();

  std::map<Weight, BigInt> signed_terms;
  for (const auto& [nu, m] : full_character(small)) {
    // doubled dot action: x = 2(top + nu) + 2rho, reflected into the chamber
    Weight x = 2 * (top + nu) + two_rho_w;
    bool odd = false;
    bool wall = false;
    for (;;) {
      int violating = -1;
      for (int i = 0; i < rd_.semisimple_rank(); ++i) {
        const Int p = pairing(x, rd_.simple_coroots()[static_cast<std::size_t>(i)]);
        if (p == 0) wall = true;
        if (p < 0) {
          violating = i;
          break;
        }
      }
      if (violating < 0) break;
      wall = false;
      x = reflect(rd_, x, violating);
      odd = !odd;
    }
    // the final scan ran over all simple coroots
    if (wall) continue;
    Weight shifted = x - two_rho_w;
    Weight result = Weight::zero(shifted.size());
    for (std::size_t k = 0; k < shifted.size(); ++k) {
      if (shifted[k] % 2 != 0) throw InternalError("dot action left the weight lattice");
      result[k] = shifted[k] / 2;
    }
    signed_terms[result] += odd ? BigInt(-m) : m;
  }
  SemiringElement out;
  for (const auto& [w, m] : signed_terms) {
    if (m < 0) throw InternalError("Klimyk sum produced a negative multiplicity at " + to_string(w));
    if (m > 0) out.add(w, m);
  }
  return out;
}

SemiringElement RepresentationRing::character_product_bruteforce(const Weight& lambda, const Weight& mu) {
  require_dominant(lambda, "character_product_bruteforce");
  require_dominant(mu, "character_product_bruteforce");
  const auto& a = full_character(lambda);
  const auto& b = full_character(mu);
  // dominant part of the product character (it is W-invariant)
  std::map<Weight, BigInt> residue;
  for (const auto& [p, mp] : a)
    for (const auto& [q, mq] : b) {
      Weight s = p + q;
      if (is_dominant(rd_, s)) residue[s] += mp * mq;
    }
  SemiringElement out;
  for (;;) {
    // the positive entry of greatest height is maximal for the dominance order
    const Weight* best = nullptr;
    Int best_h = 0;
    for (const auto& [w, m] : residue) {
      if (m == 0) continue;
      if (m < 0) throw InternalError("character stripping went negative at " + to_string(w));
      const Int h = height(rd_, w);
      if (!best || h > best_h) {
        best = &w;
        best_h = h;
      }
    }
    if (!best) break;
    const Weight top = *best;
    const BigInt m = residue[top];
    out.add(top, m);
    for (const auto& [w, mw] : dominant_character(top)) {
      BigInt& r = residue[w];
      r -= m * mw;
      if (r < 0) throw InternalError("character stripping went negative at " + to_string(w));
    }
  }
  return out;
}

SemiringElement RepresentationRing::multiply(const SemiringElement& a, const SemiringElement& b) {
  SemiringElement out;
  for (const auto& [x, mx] : a.terms())
    for (const auto& [y, my] : b.terms()) {
      const SemiringElement t = tensor_decompose(x, y);
      for (const auto& [w, m] : t.terms()) out.add(w, m * mx * my);
    }
  return out;
}

SemiringElement RepresentationRing::tensor_decompose_many(std::span<const Weight> factors) {
  SemiringElement acc = SemiringElement::irreducible(Weight::zero(static_cast<std::size_t>(rd_.rank())));
  for (const Weight& f : factors) {
    require_dominant(f, "tensor_decompose_many");
    acc = multiply(acc, SemiringElement::irreducible(f));
  }
  return acc;
}

SemiringElement RepresentationRing::power_decompose(const Weight& lambda, unsigned k) {
  require_dominant(lambda, "power_decompose");
  std::vector<Weight> factors(k, lambda);
  return tensor_decompose_many(factors);
}

WeightMultiplicityTable weight_multiplicities(const RootDatum& rd, const Weight& lambda) {
  return RepresentationRing(rd).weight_multiplicities(lambda);
}

BigInt weyl_dim(const RootDatum& rd, const Weight& lambda) { return RepresentationRing(rd).weyl_dim(lambda); }

SemiringElement tensor_decompose(const RootDatum& rd, const Weight& lambda, const Weight& mu) {
  return RepresentationRing(rd).tensor_decompose(lambda, mu);
}

SemiringElement character_product_bruteforce(const RootDatum& rd, const Weight& lambda, const Weight& mu) {
  return RepresentationRing(rd).character_product_bruteforce(lambda, mu);
}

SemiringElement power_decompose(const RootDatum& rd, const Weight& lambda, unsigned k) {
  return RepresentationRing(rd).power_decompose(lambda, k);
}

PrvResult prv_multiplicity(RepresentationRing& ring, std::span<const Weight> mus, std::span<const WeylWord> words) {
  if (mus.empty()) throw DomainError("prv_multiplicity: empty factor list");
  if (mus.size() != words.size()) throw DomainError("prv_multiplicity: factor and word lists differ in length");
  const RootDatum& rd = ring.datum();
  Weight sum = Weight::zero(static_cast<std::size_t>(rd.rank()));
  for (std::size_t i = 0; i < mus.size(); ++i) sum += apply_word(rd, words[i], mus[i]);
  Weight lambda = dominant_representative(rd, sum).weight;
  const SemiringElement product = ring.tensor_decompose_many(mus);
  return {lambda, product.multiplicity(lambda)};
}

PrvResult prv_multiplicity(const RootDatum& rd, std::span<const Weight> mus, std::span<const WeylWord> words) {
  RepresentationRing ring(rd);
  return prv_multiplicity(ring, mus, words);
}

}  // namespace satake
