#include "doctest.h"

#include "satake/fixtures.hpp"
#include "satake/rep_semiring.hpp"

#include <random>

using namespace satake;

namespace {

SemiringElement elem(std::initializer_list<std::pair<Weight, int>> terms) {
  SemiringElement e;
  for (const auto& [w, m] : terms) e.add(w, m);
  return e;
}

std::vector<Weight> dominant_up_to_height(const RootDatum& rd, Int h) {
  // all dominant weights of height <= h, found below a large enough dominant weight
  std::vector<Weight> out;
  const auto n = static_cast<std::size_t>(rd.rank());
  if (n == 0) return {Weight{}};
  std::vector<Int> c(n, -h);
  for (;;) {
    Weight w(c);
    if (is_dominant(rd, w) && height(rd, w) <= h) out.push_back(w);
    std::size_t i = 0;
    while (i < n && c[i] == h) c[i++] = -h;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

}  // namespace

TEST_CASE("weight multiplicities") {
  const auto sl2 = fixture_datum("SL2");
  const auto sl3 = fixture_datum("SL3");
  auto t = weight_multiplicities(sl2, Weight{2});
  CHECK(t.entries == std::map<Weight, BigInt>{{Weight{2}, 1}, {Weight{0}, 1}, {Weight{-2}, 1}});
  CHECK(weight_multiplicities(sl3, Weight{0, 0}).entries.size() == 1);
  t = weight_multiplicities(sl3, Weight{1, 1});
  CHECK(t.entries.size() == 7);
  CHECK(t.multiplicity(Weight{0, 0}) == 2);
  CHECK(t.total() == 8);
  CHECK_THROWS_AS(weight_multiplicities(sl2, Weight{-1}), DomainError);
  // G2 adjoint: 14 = 12 roots + 2 zero weight
  t = weight_multiplicities(fixture_datum("G2"), Weight{1, 0});
  CHECK(t.total() == 14);
  CHECK(t.multiplicity(Weight{0, 0}) == 2);
}

TEST_CASE("Weyl dimension") {
  const auto sl2 = fixture_datum("SL2");
  CHECK(weyl_dim(sl2, Weight{3}) == 4);
  CHECK(weyl_dim(sl2, Weight{0}) == 1);
  CHECK(weyl_dim(fixture_datum("SL3"), Weight{1, 1}) == 8);
  CHECK(weyl_dim(fixture_datum("G2"), Weight{0, 1}) == 7);
  CHECK(weyl_dim(fixture_datum("Sp4"), Weight{1, 0}) == 4);
  CHECK(weyl_dim(fixture_datum("Sp4"), Weight{0, 1}) == 5);
  CHECK(weyl_dim(fixture_datum("GL2"), Weight{3, 1}) == 3);
  CHECK_THROWS_AS(weyl_dim(sl2, Weight{-2}), DomainError);
  // large G2 weight exceeds 64 bits in intermediate products
  const BigInt big = weyl_dim(fixture_datum("G2"), Weight{1000000, 1000000});
  CHECK(big > BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST_CASE("tensor products") {
  const auto sl2 = fixture_datum("SL2");
  const auto sl3 = fixture_datum("SL3");
  const auto pgl2 = fixture_datum("PGL2");
  CHECK(tensor_decompose(sl2, Weight{1}, Weight{1}) == elem({{Weight{2}, 1}, {Weight{0}, 1}}));
  CHECK(tensor_decompose(sl3, Weight{2, 1}, Weight{0, 0}) == elem({{Weight{2, 1}, 1}}));
  CHECK(tensor_decompose(sl3, Weight{1, 0}, Weight{0, 1}) == elem({{Weight{1, 1}, 1}, {Weight{0, 0}, 1}}));
  CHECK(character_product_bruteforce(sl2, Weight{1}, Weight{1}) == elem({{Weight{2}, 1}, {Weight{0}, 1}}));
  CHECK(character_product_bruteforce(sl2, Weight{0}, Weight{0}) == elem({{Weight{0}, 1}}));
  CHECK(character_product_bruteforce(pgl2, Weight{1}, Weight{1}) ==
        elem({{Weight{2}, 1}, {Weight{1}, 1}, {Weight{0}, 1}}));
  CHECK(tensor_decompose(pgl2, Weight{1}, Weight{1}) == elem({{Weight{2}, 1}, {Weight{1}, 1}, {Weight{0}, 1}}));
  CHECK_THROWS_AS(tensor_decompose(sl2, Weight{-1}, Weight{1}), DomainError);
}

TEST_CASE("tensor powers") {
  const auto sl2 = fixture_datum("SL2");
  CHECK(power_decompose(sl2, Weight{1}, 0) == elem({{Weight{0}, 1}}));
  CHECK(power_decompose(sl2, Weight{1}, 2) == elem({{Weight{2}, 1}, {Weight{0}, 1}}));
  CHECK(power_decompose(sl2, Weight{1}, 3) == elem({{Weight{3}, 1}, {Weight{1}, 2}}));
}

TEST_CASE("PRV multiplicities") {
  const auto sl3 = fixture_datum("SL3");
  std::vector<Weight> mus{{1, 0}, {1, 0}};
  std::vector<WeylWord> ws{WeylWord{}, WeylWord{{0}}};
  auto r = prv_multiplicity(sl3, mus, ws);
  CHECK(r.lambda == Weight{0, 1});
  CHECK(r.mult == 1);
  ws = {WeylWord{}, WeylWord{}};
  r = prv_multiplicity(sl3, mus, ws);
  CHECK(r.lambda == Weight{2, 0});
  CHECK(r.mult == 1);
  const auto sl2 = fixture_datum("SL2");
  std::vector<Weight> m2{{1}, {1}};
  std::vector<WeylWord> w2{WeylWord{}, WeylWord{{0}}};
  r = prv_multiplicity(sl2, m2, w2);
  CHECK(r.lambda == Weight{0});
  CHECK(r.mult == 1);
  CHECK_THROWS_AS(prv_multiplicity(sl2, std::vector<Weight>{}, std::vector<WeylWord>{}), DomainError);
}

TEST_CASE("semiring properties on every fixture") {
  for (const auto& f : all_fixtures()) {
    CAPTURE(f.name);
    RepresentationRing ring(f.datum);
    const auto& rd = f.datum;
    const auto ws = dominant_up_to_height(rd, 6);
    for (const auto& l : ws) {
      const auto t = ring.weight_multiplicities(l);
      CHECK(t.total() == ring.weyl_dim(l));
      std::set<Weight> support;
      for (const auto& [w, m] : t.entries) {
        support.insert(w);
        CHECK(m == t.multiplicity(dominant_representative(rd, w).weight));
      }
      CHECK(support == omega_set(rd, l));
    }
    for (const auto& l : ws)
      for (const auto& m : ws) {
        if (height(rd, l) + height(rd, m) > 6) continue;
        const auto p = ring.tensor_decompose(l, m);
        CHECK(p == ring.tensor_decompose(m, l));
        CHECK(ring.dimension(p) == ring.weyl_dim(l) * ring.weyl_dim(m));
        for (const auto& [nu, k] : p.terms()) CHECK(leq_dominance(rd, nu, l + m));
      }
    // associativity on a few triples
    for (std::size_t i = 0; i < ws.size() && i < 4; ++i)
      for (std::size_t j = 0; j < ws.size() && j < 4; ++j) {
        const auto a = SemiringElement::irreducible(ws[i]);
        const auto b = SemiringElement::irreducible(ws[j]);
        const auto c = SemiringElement::irreducible(ws[ws.size() / 2]);
        CHECK(ring.multiply(ring.multiply(a, b), c) == ring.multiply(a, ring.multiply(b, c)));
      }
  }
}

TEST_CASE("PRV property with random words") {
  std::mt19937_64 gen(7);
  for (const auto& f : all_fixtures()) {
    CAPTURE(f.name);
    RepresentationRing ring(f.datum);
    const auto ws = dominant_up_to_height(f.datum, 4);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t k = 1 + gen() % 3;
      std::vector<Weight> mus;
      std::vector<WeylWord> words;
      for (std::size_t i = 0; i < k; ++i) {
        mus.push_back(ws[gen() % ws.size()]);
        WeylWord w;
        const std::size_t len = gen() % 6;
        for (std::size_t j = 0; j < len && f.datum.semisimple_rank() > 0; ++j)
          w.letters.push_back(static_cast<int>(gen() % static_cast<std::size_t>(f.datum.semisimple_rank())));
        words.push_back(w);
      }
      CHECK(prv_multiplicity(ring, mus, words).mult >= 1);
    }
  }
}
