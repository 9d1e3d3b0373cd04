#include "doctest.h"

#include "satake/fixtures.hpp"
#include "satake/satake_shadow.hpp"

#include <random>

using namespace satake;

namespace {

std::vector<Coweight> dominant_coweights(const SatakeContext& ctx, Int h) {
  std::vector<Coweight> out;
  const auto n = static_cast<std::size_t>(ctx.group().rank());
  if (n == 0) return {Coweight{}};
  std::vector<Int> c(n, -h);
  for (;;) {
    Coweight m(c);
    if (is_dominant_coweight(ctx, m) && height(ctx.dual(), as_weight(m)) <= h) out.push_back(m);
    std::size_t i = 0;
    while (i < n && c[i] == h) c[i++] = -h;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

}  // namespace

TEST_CASE("orbit dimensions and closures") {
  const SatakeContext sl2(fixture_datum("SL2")), pgl2(fixture_datum("PGL2"));
  CHECK(orbit_dim(sl2, Coweight{0}) == 0);
  CHECK(orbit_dim(sl2, Coweight{1}) == 2);
  CHECK(orbit_dim(pgl2, Coweight{1}) == 1);
  CHECK_THROWS_AS(orbit_dim(sl2, Coweight{-1}), DomainError);
  CHECK(closure_contains(sl2, Coweight{2}, Coweight{2}));
  CHECK(closure_contains(sl2, Coweight{0}, Coweight{2}));
  CHECK_FALSE(closure_contains(pgl2, Coweight{0}, Coweight{1}));
}

TEST_CASE("MV strata") {
  const SatakeContext sl2(fixture_datum("SL2"));
  auto r = mv_stratum(sl2, Coweight{1}, Coweight{1});
  CHECK(r.nonempty);
  CHECK(*r.dim == orbit_dim(sl2, Coweight{1}));
  r = mv_stratum(sl2, Coweight{1}, Coweight{-1});
  CHECK(r.nonempty);
  CHECK(*r.dim == 0);
  r = mv_stratum(sl2, Coweight{1}, Coweight{0});
  CHECK(r.nonempty);
  CHECK(*r.dim == 1);
  r = mv_stratum(sl2, Coweight{1}, Coweight{2});
  CHECK_FALSE(r.nonempty);
  CHECK_FALSE(r.dim.has_value());
  const SatakeContext pgl2(fixture_datum("PGL2"));
  CHECK_FALSE(mv_stratum(pgl2, Coweight{1}, Coweight{0}).nonempty);
}

TEST_CASE("semismall bounds") {
  const SatakeContext sl2(fixture_datum("SL2"));
  std::vector<Coweight> mus{{1}, {1}};
  CHECK(semismall_bound(sl2, mus, Coweight{2}) == 0);
  CHECK(semismall_bound(sl2, mus, Coweight{0}) == 2);
  CHECK(semismall_bound(sl2, mus, Coweight{1}) == 1);
  CHECK_THROWS_AS(semismall_bound(sl2, mus, Coweight{4}), DomainError);
  // fundamental coweights of the adjoint group of type A2
  const SatakeContext pgl3(fixture_datum("PGL3"));
  std::vector<Coweight> m3{{1, 0}, {0, 1}};
  CHECK(semismall_bound(pgl3, m3, Coweight{0, 0}) == 2);
}

TEST_CASE("convolution, parity and global sections") {
  const SatakeContext pgl2(fixture_datum("PGL2")), sl2(fixture_datum("SL2")), pgl3(fixture_datum("PGL3"));
  std::vector<Coweight> one{{3}};
  CHECK(convolution_decompose(pgl2, one).terms() == SemiringElement::Terms{{Weight{3}, 1}});
  std::vector<Coweight> two{{1}, {1}};
  CHECK(convolution_decompose(pgl2, two).terms() == SemiringElement::Terms{{Weight{2}, 1}, {Weight{0}, 1}});
  std::vector<Coweight> a2{{1, 0}, {1, 0}};
  CHECK(convolution_decompose(pgl3, a2).terms() == SemiringElement::Terms{{Weight{2, 0}, 1}, {Weight{0, 1}, 1}});
  CHECK(component_parity(pgl2, Coweight{0}) == 0);
  CHECK(component_parity(pgl2, Coweight{1}) == 1);
  CHECK(component_parity(pgl2, Coweight{-1}) == 1);
  for (Int m = -5; m <= 5; ++m) CHECK(component_parity(sl2, Coweight{m}) == 0);
  CHECK(global_sections_dim(pgl2, Coweight{0}) == 1);
  CHECK(global_sections_dim(pgl2, Coweight{1}) == 2);
  CHECK(global_sections_dim(pgl3, Coweight{1, 1}) == 8);
}

TEST_CASE("shadow coherence on every fixture") {
  std::mt19937_64 gen(11);
  for (const auto& f : all_fixtures()) {
    CAPTURE(f.name);
    const SatakeContext ctx(f.datum);
    RepresentationRing ring(ctx.dual());
    CHECK(ctx.dual() == dual_root_datum(f.datum));
    const auto mus = dominant_coweights(ctx, 6);
    for (const auto& mu : mus) {
      CHECK(mv_stratum(ctx, mu, mu).dim == orbit_dim(ctx, mu));
      std::set<Weight> support;
      for (const auto& [w, m] : ring.weight_multiplicities(as_weight(mu)).entries) support.insert(w);
      CHECK(support == omega_set(ctx.dual(), as_weight(mu)));
      for (const auto& w : support) CHECK(mv_stratum(ctx, mu, as_coweight(w)).nonempty);
    }
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Coweight> fac;
      const std::size_t k = 1 + gen() % 3;
      for (std::size_t i = 0; i < k; ++i) fac.push_back(mus[gen() % mus.size()]);
      Coweight total = Coweight::zero(static_cast<std::size_t>(f.datum.rank()));
      for (const auto& m : fac) total += m;
      const auto conv = convolution_decompose(ring, fac);
      for (const auto& [lam, m] : conv.terms()) {
        const Coweight l = as_coweight(lam);
        CHECK(closure_contains(ctx, l, total));
        CHECK(semismall_bound(ctx, fac, l) >= 0);
        CHECK(component_parity(ctx, l) == component_parity(ctx, total));
      }
    }
  }
}
