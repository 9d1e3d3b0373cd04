#pragma once

// Recovering a based root datum from an anonymized, truncated Grothendieck
// semiring, and the based-isomorphism checker used to close the loop.
//
// Every statement quantified over all k or all of K_0^+ is evaluated on the
// finite window as a three-valued verdict: true needs every instance up to
// k_max to be checkable and to pass, false needs a counterexample whose
// supports are fully known, anything else is inconclusive.

#include "satake/rep_semiring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace satake {

struct ProductEntry {
  std::map<std::string, BigInt> terms;
  bool complete = false;
};

/// Irreducible ids, a unit, and a symmetric partial product table.
class AbstractSemiring {
 public:
  AbstractSemiring() = default;
  /// `products` holds each unordered pair once (either order); validates
  /// the invariants and throws DomainError on violation.
  AbstractSemiring(std::string unit, std::vector<std::string> ids,
                   const std::vector<std::tuple<std::string, std::string, ProductEntry>>& products);

  const std::string& unit() const { return unit_; }
  const std::vector<std::string>& ids() const { return ids_; }  // sorted
  std::size_t size() const { return ids_.size(); }
  std::optional<std::size_t> index_of(const std::string& id) const;
  const ProductEntry* product(const std::string& a, const std::string& b) const;
  const ProductEntry* product(std::size_t a, std::size_t b) const;

  /// Every stored entry as (a, b) with a <= b.
  const std::map<std::pair<std::size_t, std::size_t>, ProductEntry>& entries() const { return products_; }
  /// Mutable access for fault injection in tests and tools.
  ProductEntry* mutable_product(std::size_t a, std::size_t b);

 private:
  std::string unit_;
  std::vector<std::string> ids_;
  std::map<std::string, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, ProductEntry> products_;
};

struct ReconstructionConfig {
  int k_max = 4;
  /// Callers turn an inconclusive result into a failure instead of a
  /// warning. Sums skipped for ambiguity never count: every product is
  /// rechecked against the recovered datum.
  bool strict = false;
};
void validate_config(const ReconstructionConfig& cfg);

enum class Verdict { kTrue, kFalse, kInconclusive };
std::string to_string(Verdict v);

class ReconstructionError : public std::runtime_error {
 public:
  enum class Kind { kInconclusive, kInconsistent };
  ReconstructionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct DumpResult {
  AbstractSemiring semiring;
  std::map<std::string, Weight> truth;  // id -> highest weight
};

/// Size used to cut the dump window: <lambda, 2rho^v> plus sum_j |<lambda, z_j>|
/// over a basis z_j of the central coweights (the second part vanishes for
/// semisimple data and keeps windows finite when there is a central torus).
Int dump_height(const RootDatum& rd, const Weight& lambda);
std::vector<Weight> dominant_weights_up_to(const RootDatum& rd, Int bound);
DumpResult dump_semiring(const RootDatum& rd, Int height_bound, std::uint64_t seed);

/// Support bookkeeping over an AbstractSemiring: constituent sets of products
/// and powers, each with a flag saying whether truncation may have hidden
/// constituents.
class SupportEngine {
 public:
  using IdSet = std::vector<std::uint64_t>;
  struct Support {
    IdSet set;
    bool exact = true;
  };

  explicit SupportEngine(const AbstractSemiring& sr);
  const AbstractSemiring& semiring() const { return *sr_; }
  std::size_t size() const { return n_; }
  std::size_t unit() const { return unit_; }

  bool has_product(std::size_t a, std::size_t b) const { return present_[a * n_ + b] != 0; }
  const Support& product(std::size_t a, std::size_t b) const { return prod_[a * n_ + b]; }
  const Support& power(std::size_t a, int k);
  Support times(const Support& s, std::size_t u) const;
  /// The id d with unit in v_a * v_d, if visible in the table.
  std::optional<std::size_t> dual(std::size_t a);

  static bool contains(const IdSet& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1U; }
  static bool subset(const IdSet& a, const IdSet& b);
  std::vector<std::size_t> members(const IdSet& s) const;

 private:
  const AbstractSemiring* sr_;
  std::size_t n_;
  std::size_t unit_;
  std::vector<Support> prod_;
  std::vector<char> present_;
  std::map<std::pair<std::size_t, int>, Support> powers_;
  std::map<std::size_t, std::optional<std::size_t>> duals_;
};

/// Order test between ids; caches raw verdicts.
class OrderOracle {
 public:
  OrderOracle(SupportEngine& engine, ReconstructionConfig cfg);
  Verdict preceq(std::size_t a, std::size_t b);
  /// k_max-th power of a has fully known support.
  bool expandable(std::size_t a) { return engine_->power(a, cfg_.k_max).exact; }
  const ReconstructionConfig& config() const { return cfg_; }
  SupportEngine& engine() { return *engine_; }

 private:
  Verdict raw(std::size_t a, std::size_t b);
  std::vector<std::size_t> witnesses(std::size_t a, std::size_t b);

  SupportEngine* engine_;
  ReconstructionConfig cfg_;
  std::map<std::pair<std::size_t, std::size_t>, Verdict> raw_;
};

Verdict recover_preceq(const AbstractSemiring& sr, const ReconstructionConfig& cfg, const std::string& a,
                       const std::string& b);
/// The top constituent of v_a v_b, certified by the squares of the
/// constituents. Throws ReconstructionError (inconclusive) on "ambiguous
/// maximum" or "incomplete product".
std::string recover_sum(const AbstractSemiring& sr, const ReconstructionConfig& cfg, const std::string& a,
                        const std::string& b);

struct MonoidResult {
  std::vector<std::string> generators;
  std::map<std::string, std::vector<Int>> embedding;
  /// recovered sums (a, b) -> a + b with a <= b
  std::map<std::pair<std::string, std::string>, std::string> sums;
  int rank = 0;
  std::vector<std::string> log;
};
MonoidResult recover_monoid(const AbstractSemiring& sr, const ReconstructionConfig& cfg);

/// Differences 2mu - c for constituents c of v_mu^2, in embedded coordinates.
std::vector<std::vector<Int>> recover_Qplus(const AbstractSemiring& sr, const MonoidResult& monoid);
Verdict recover_leq(const AbstractSemiring& sr, const ReconstructionConfig& cfg, const MonoidResult& monoid,
                    const std::vector<std::vector<Int>>& qplus, const std::string& a, const std::string& b);

/// Minimal nonzero elements (atoms) of the semigroup generated by qplus.
std::vector<std::vector<Int>> extract_simple_roots(const std::vector<std::vector<Int>>& qplus);
/// Integer functional f with f(mu) = max{m : 2mu - m alpha is a constituent of v_mu^2}.
std::vector<Int> extract_simple_coroots(const AbstractSemiring& sr, const MonoidResult& monoid,
                                        const std::vector<Int>& alpha);

struct RecoveredDatum {
  RootDatum datum{0, {}, {}};
  std::map<std::string, Weight> labeling;
  std::vector<std::string> log;
};
RecoveredDatum assemble_root_datum(const std::vector<std::vector<Int>>& roots,
                                   const std::vector<std::vector<Int>>& coroots, const MonoidResult& monoid);

struct ReconstructionReport {
  RecoveredDatum recovered;
  MonoidResult monoid;
  std::vector<std::vector<Int>> qplus;
  std::size_t verdicts_true = 0, verdicts_false = 0, verdicts_inconclusive = 0;
  std::size_t skipped_sums = 0;
};

/// Full pipeline: sums, completion, Q_+, roots, coroots, labeling of every
/// id and a final check of every product against the recovered datum.
ReconstructionReport reconstruct(const AbstractSemiring& sr, const ReconstructionConfig& cfg);

/// Lattice map M (acting on column vectors) with M alpha1_i = alpha2_s(i) and
/// M^T alpha2^v_s(i) = alpha1^v_i for a Cartan-preserving bijection s. Exact
/// when the central rank is at most 1; beyond that a failed bounded search
/// throws DomainError.
std::optional<IntMatrix> based_iso(const RootDatum& rd1, const RootDatum& rd2);

}  // namespace satake
