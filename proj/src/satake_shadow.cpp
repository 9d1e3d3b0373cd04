#include "satake/satake_shadow.hpp"

namespace satake {

namespace {

void require_dominant(const SatakeContext& ctx, const Coweight& mu, const char* what) {
  if (mu.size() != static_cast<std::size_t>(ctx.group().rank()))
    throw DomainError(std::string(what) + ": coweight has wrong length");
  if (!is_dominant_coweight(ctx, mu)) throw DomainError(std::string(what) + ": " + to_string(mu) + " is not dominant");
}

Int halve(Int x, const char* what) {
  if (x % 2 != 0) throw InternalError(std::string(what) + ": odd pairing with 2rho");
  return x / 2;
}

Coweight sum_of(const SatakeContext& ctx, std::span<const Coweight> mus) {
  Coweight s = Coweight::zero(static_cast<std::size_t>(ctx.group().rank()));
  for (const auto& m : mus) s += m;
  return s;
}

}  // namespace

bool is_dominant_coweight(const SatakeContext& ctx, const Coweight& mu) { return is_dominant(ctx.dual(), as_weight(mu)); }

Int orbit_dim(const SatakeContext& ctx, const Coweight& mu) {
  require_dominant(ctx, mu, "orbit_dim");
  return pairing(ctx.group().two_rho(), mu);
}

bool closure_contains(const SatakeContext& ctx, const Coweight& lambda, const Coweight& mu) {
  require_dominant(ctx, lambda, "closure_contains");
  require_dominant(ctx, mu, "closure_contains");
  return leq_dominance(ctx.dual(), as_weight(lambda), as_weight(mu));
}

StratumReport mv_stratum(const SatakeContext& ctx, const Coweight& mu, const Coweight& nu) {
  require_dominant(ctx, mu, "mv_stratum");
  if (nu.size() != mu.size()) throw DomainError("mv_stratum: coweight has wrong length");
  StratumReport r{mu, nu, false, std::nullopt};
  // nu lies in Omega(mu) iff its dominant representative lies below mu
  const Weight nu_dom = dominant_representative(ctx.dual(), as_weight(nu)).weight;
  r.nonempty = leq_dominance(ctx.dual(), nu_dom, as_weight(mu));
  if (r.nonempty) r.dim = halve(pairing(ctx.group().two_rho(), mu + nu), "mv_stratum");
  return r;
}

Int semismall_bound(const SatakeContext& ctx, std::span<const Coweight> mus, const Coweight& lambda) {
  for (const auto& m : mus) require_dominant(ctx, m, "semismall_bound");
  require_dominant(ctx, lambda, "semismall_bound");
  const Coweight total = sum_of(ctx, mus);
  if (!closure_contains(ctx, lambda, total))
    throw DomainError("semismall_bound: " + to_string(lambda) + " is not below " + to_string(total));
  return halve(pairing(ctx.group().two_rho(), total - lambda), "semismall_bound");
}

SemiringElement convolution_decompose(RepresentationRing& dual_ring, std::span<const Coweight> mus) {
  std::vector<Weight> factors;
  for (const auto& m : mus) factors.push_back(as_weight(m));
  return dual_ring.tensor_decompose_many(factors);
}

SemiringElement convolution_decompose(const SatakeContext& ctx, std::span<const Coweight> mus) {
  for (const auto& m : mus) require_dominant(ctx, m, "convolution_decompose");
  RepresentationRing ring(ctx.dual());
  return convolution_decompose(ring, mus);
}

int component_parity(const SatakeContext& ctx, const Coweight& mu) {
  if (mu.size() != static_cast<std::size_t>(ctx.group().rank()))
    throw DomainError("component_parity: coweight has wrong length");
  const Int p = pairing(ctx.group().two_rho(), mu) % 2;
  return static_cast<int>(p < 0 ? p + 2 : p);
}

BigInt global_sections_dim(const SatakeContext& ctx, const Coweight& mu) {
  require_dominant(ctx, mu, "global_sections_dim");
  return weyl_dim(ctx.dual(), as_weight(mu));
}

}  // namespace satake
