#pragma once

// The Grothendieck semiring K_0^+ of a split reductive group, realized
// through characters: weight multiplicities (Freudenthal), dimensions
// (Weyl), tensor products (Klimyk) and an independent brute-force oracle
// (character convolution followed by highest-weight stripping).

#include "satake/lattice_core.hpp"

#include <map>
#include <span>
#include <vector>

namespace satake {

/// Finite positive combination of irreducibles, keyed by highest weight.
class SemiringElement {
 public:
  using Terms = std::map<Weight, BigInt>;

  SemiringElement() = default;
  static SemiringElement irreducible(const Weight& lambda) {
    SemiringElement e;
    e.add(lambda, 1);
    return e;
  }

  /// Adds m copies of V_lambda; m must be positive.
  void add(const Weight& lambda, const BigInt& m);
  SemiringElement& operator+=(const SemiringElement& other);

  const Terms& terms() const { return terms_; }
  BigInt multiplicity(const Weight& lambda) const;
  bool contains(const Weight& lambda) const { return terms_.count(lambda) != 0; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Throws DomainError if some key is not dominant for rd.
  void check_dominant(const RootDatum& rd) const;

  friend bool operator==(const SemiringElement&, const SemiringElement&) = default;

 private:
  Terms terms_;
};

/// Character of V_lambda: every weight with its (positive) multiplicity.
struct WeightMultiplicityTable {
  std::map<Weight, BigInt> entries;
  BigInt total() const;
  BigInt multiplicity(const Weight& w) const;
};

/// Memoizing front end to the character computations of one datum. Not
/// thread-safe; use one instance per thread.
class RepresentationRing {
 public:
  explicit RepresentationRing(RootDatum rd) : rd_(std::move(rd)) {}
  const RootDatum& datum() const { return rd_; }

  /// Multiplicities on dominant weights only (Freudenthal recursion).
  const std::map<Weight, BigInt>& dominant_character(const Weight& lambda);
  WeightMultiplicityTable weight_multiplicities(const Weight& lambda);
  BigInt weyl_dim(const Weight& lambda) const;

  SemiringElement tensor_decompose(const Weight& lambda, const Weight& mu);
  SemiringElement character_product_bruteforce(const Weight& lambda, const Weight& mu);
  SemiringElement multiply(const SemiringElement& a, const SemiringElement& b);
  SemiringElement tensor_decompose_many(std::span<const Weight> factors);
  SemiringElement power_decompose(const Weight& lambda, unsigned k);
  BigInt dimension(const SemiringElement& e) const;

 private:
  const std::vector<std::pair<Weight, BigInt>>& full_character(const Weight& lambda);
  void require_dominant(const Weight& lambda, const char* what) const;

  RootDatum rd_;
  std::map<Weight, std::map<Weight, BigInt>> dominant_cache_;
  std::map<Weight, std::vector<std::pair<Weight, BigInt>>> full_cache_;
};

WeightMultiplicityTable weight_multiplicities(const RootDatum& rd, const Weight& lambda);
BigInt weyl_dim(const RootDatum& rd, const Weight& lambda);
SemiringElement tensor_decompose(const RootDatum& rd, const Weight& lambda, const Weight& mu);
SemiringElement character_product_bruteforce(const RootDatum& rd, const Weight& lambda, const Weight& mu);
SemiringElement power_decompose(const RootDatum& rd, const Weight& lambda, unsigned k);

struct PrvResult {
  Weight lambda;  // dominant representative of sum w_i mu_i
  BigInt mult;    // its multiplicity in the tensor product of the V_{mu_i}
};
PrvResult prv_multiplicity(const RootDatum& rd, std::span<const Weight> mus, std::span<const WeylWord> words);
PrvResult prv_multiplicity(RepresentationRing& ring, std::span<const Weight> mus, std::span<const WeylWord> words);

}  // namespace satake
