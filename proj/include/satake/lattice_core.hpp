#pragma once

// Root data, pairings, Weyl group actions and the two dominance orders.
//
// A root datum is stored by its simple roots (in X) and simple coroots (in
// X^vee) over a fixed integer basis; row i of one pairs with row i of the
// other. Everything else (Cartan matrix, positive roots, 2rho) is derived at
// construction and cached immutably, so a RootDatum is safe to share across
// threads.

#include "satake/types.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace satake {

enum class DatumErrorKind {
  kShape,            // counts or lengths do not fit the rank
  kCartanDiagonal,   // A[i][i] != 2
  kCartanOffDiagonal,// positive off-diagonal entry or asymmetric zero pattern
  kNotFiniteType,    // some principal minor is not positive
  kDependent,        // simple roots or coroots linearly dependent
};

class DatumError : public std::invalid_argument {
 public:
  DatumError(DatumErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  DatumErrorKind kind() const { return kind_; }

 private:
  DatumErrorKind kind_;
};

/// Checks every RootDatum invariant; throws DatumError naming the first
/// violation.
void validate_datum(int rank, const std::vector<Weight>& simple_roots, const std::vector<Coweight>& simple_coroots);

struct WeylWord {
  std::vector<int> letters;
  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

class RootDatum {
 public:
  /// Validates on construction; throws DatumError.
  RootDatum(int rank, std::vector<Weight> simple_roots, std::vector<Coweight> simple_coroots, std::string name = {});

  int rank() const { return rank_; }
  int semisimple_rank() const { return static_cast<int>(simple_roots_.size()); }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Coweight>& simple_coroots() const { return simple_coroots_; }
  const std::string& name() const { return name_; }

  const IntMatrix& cartan() const;
  const std::vector<Weight>& positive_roots() const;
  const std::vector<Coweight>& positive_coroots() const;
  const Weight& two_rho() const;
  const Coweight& two_rho_check() const;

  /// Root coordinates of v scaled by cartan_det(): numerators n_i with
  /// v = sum (n_i / det) alpha_i, or nullopt if v is outside the rational span.
  std::optional<std::vector<Int>> scaled_root_coordinates(const Weight& v) const;
  Int cartan_det() const;
  /// Same numerators for the projection of v to the root span (no span check).
  std::vector<Int> scaled_projected_coordinates(const Weight& v) const;

  /// Smith data of the simple-root matrix: x -> x * transform puts the root
  /// lattice in diagonal form with the given elementary divisors.
  const std::vector<Int>& root_lattice_divisors() const;
  const IntMatrix& root_lattice_transform() const;

  /// Equality of the data (rank, simple roots, simple coroots); the label is ignored.
  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.rank_ == b.rank_ && a.simple_roots_ == b.simple_roots_ && a.simple_coroots_ == b.simple_coroots_;
  }

 private:
  struct Derived;
  int rank_;
  std::vector<Weight> simple_roots_;
  std::vector<Coweight> simple_coroots_;
  std::string name_;
  std::shared_ptr<const Derived> derived_;
};

inline void validate_datum(const RootDatum& rd) {
  validate_datum(rd.rank(), rd.simple_roots(), rd.simple_coroots());
}

Int pairing(const Weight& lambda, const Coweight& mu);
IntMatrix cartan_matrix(const RootDatum& rd);

bool is_dominant(const RootDatum& rd, const Weight& lambda);
/// lambda strictly inside the dominant chamber (all simple pairings > 0).
bool is_regular_dominant(const RootDatum& rd, const Weight& lambda);

/// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i
Weight reflect(const RootDatum& rd, const Weight& lambda, int i);
Weight apply_word(const RootDatum& rd, const WeylWord& w, const Weight& lambda);

struct DominantRepresentative {
  Weight weight;
  WeylWord word;  // letters applied left to right to the input
};
DominantRepresentative dominant_representative(const RootDatum& rd, const Weight& lambda);

std::set<Weight> weyl_orbit(const RootDatum& rd, const Weight& lambda);
std::size_t weyl_group_order(const RootDatum& rd);

bool leq_dominance(const RootDatum& rd, const Weight& lambda, const Weight& mu);
bool preceq(const RootDatum& rd, const Weight& lambda, const Weight& mu);

/// Canonical image of lambda in X/Q: residues modulo the elementary
/// divisors of the root lattice followed by the free coordinates.
std::vector<Int> class_mod_root_lattice(const RootDatum& rd, const Weight& lambda);

std::set<Weight> positive_roots(const RootDatum& rd);
Weight two_rho(const RootDatum& rd);
/// <lambda, 2rho^vee>, the height used to bound enumerations.
Int height(const RootDatum& rd, const Weight& lambda);

/// Dominant weights below mu in the dominance order, sorted by decreasing height.
std::vector<Weight> dominant_weights_below(const RootDatum& rd, const Weight& mu);
/// Per-simple-root upper bound on coefficients c with mu - sum c_i alpha_i dominant.
std::vector<Int> dominant_descent_bound(const RootDatum& rd, const Weight& mu);
std::set<Weight> omega_set(const RootDatum& rd, const Weight& mu);

/// Convex-hull containment Conv(W lambda) in Conv(W mu), decided by exact LP.
bool conv_hull_leq(const RootDatum& rd, const Weight& lambda, const Weight& mu);

RootDatum dual_root_datum(const RootDatum& rd);

}  // namespace satake
