#pragma once

// Combinatorial shadow of the Satake category. Coweights of G are weights of
// the dual datum; every quantity here is computed from the pair (G, dual)
// through pairings and the dual group's representation ring.

#include "satake/rep_semiring.hpp"

#include <optional>
#include <span>

namespace satake {

class SatakeContext {
 public:
  explicit SatakeContext(RootDatum rd_g) : rd_g_(std::move(rd_g)), rd_dual_(dual_root_datum(rd_g_)) {}
  const RootDatum& group() const { return rd_g_; }
  const RootDatum& dual() const { return rd_dual_; }

 private:
  RootDatum rd_g_;
  RootDatum rd_dual_;
};

struct StratumReport {
  Coweight mu;
  Coweight nu;
  bool nonempty = false;
  std::optional<Int> dim;  // set iff nonempty
};

/// Coweight dominance: pairing with every simple root of G is >= 0.
bool is_dominant_coweight(const SatakeContext& ctx, const Coweight& mu);

Int orbit_dim(const SatakeContext& ctx, const Coweight& mu);
bool closure_contains(const SatakeContext& ctx, const Coweight& lambda, const Coweight& mu);
StratumReport mv_stratum(const SatakeContext& ctx, const Coweight& mu, const Coweight& nu);
Int semismall_bound(const SatakeContext& ctx, std::span<const Coweight> mus, const Coweight& lambda);
SemiringElement convolution_decompose(const SatakeContext& ctx, std::span<const Coweight> mus);
SemiringElement convolution_decompose(RepresentationRing& dual_ring, std::span<const Coweight> mus);
int component_parity(const SatakeContext& ctx, const Coweight& mu);
BigInt global_sections_dim(const SatakeContext& ctx, const Coweight& mu);

}  // namespace satake
