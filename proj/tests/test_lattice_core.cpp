#include "doctest.h"

#include "satake/fixtures.hpp"
#include "satake/lattice_core.hpp"

using namespace satake;

namespace {

std::vector<Weight> dominant_box(const RootDatum& rd, Int bound) {
  std::vector<Weight> out;
  const auto n = static_cast<std::size_t>(rd.rank());
  std::vector<Int> c(n, -bound);
  if (n == 0) return {Weight{}};
  for (;;) {
    Weight w(c);
    if (is_dominant(rd, w)) out.push_back(w);
    std::size_t i = 0;
    while (i < n && c[i] == bound) c[i++] = -bound;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

}  // namespace

TEST_CASE("validate_datum reports the first violation") {
  CHECK_NOTHROW(validate_datum(1, {{2}}, {{1}}));
  try {
    validate_datum(1, {{1}}, {{1}});
    FAIL("expected DatumError");
  } catch (const DatumError& e) {
    CHECK(e.kind() == DatumErrorKind::kCartanDiagonal);
  }
  try {
    // affine A1: A = [[2,-2],[-2,2]]
    validate_datum(2, {{2, -2}, {-2, 2}}, {{1, 0}, {0, 1}});
    FAIL("expected DatumError");
  } catch (const DatumError& e) {
    CHECK(e.kind() == DatumErrorKind::kNotFiniteType);
  }
  CHECK_THROWS_AS(validate_datum(2, {{2, -1}}, {{1, 0}, {0, 1}}), DatumError);
  CHECK_NOTHROW(validate_datum(2, {{2, 0}, {0, 2}}, {{1, 0}, {0, 1}}));
  // zero pattern must be symmetric
  try {
    validate_datum(2, {{2, -1}, {0, 2}}, {{1, 0}, {0, 1}});
    FAIL("expected DatumError");
  } catch (const DatumError& e) {
    CHECK(e.kind() == DatumErrorKind::kCartanOffDiagonal);
  }
}

TEST_CASE("pairing and Cartan matrices") {
  CHECK(pairing(Weight{2}, Coweight{1}) == 2);
  CHECK(pairing(Weight{0, 0}, Coweight{5, 7}) == 0);
  CHECK_THROWS_AS(pairing(Weight{1}, Coweight{1, 2}), DomainError);
  CHECK(pairing(Weight{2, -1}, Coweight{1, 0}) == 2);
  CHECK(cartan_matrix(fixture_datum("SL2")) == IntMatrix{{2}});
  CHECK(cartan_matrix(fixture_datum("SL3")) == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(cartan_matrix(fixture_datum("G2")) == IntMatrix{{2, -1}, {-3, 2}});
  CHECK(cartan_matrix(fixture_datum("Sp4")) == IntMatrix{{2, -2}, {-1, 2}});
}

TEST_CASE("dominance and dominant representatives") {
  const auto sl2 = fixture_datum("SL2");
  const auto sl3 = fixture_datum("SL3");
  CHECK(is_dominant(sl2, Weight{3}));
  CHECK_FALSE(is_dominant(sl3, Weight{-1, 2}));
  CHECK(is_dominant(sl3, Weight{0, 0}));

  auto r = dominant_representative(sl2, Weight{-3});
  CHECK(r.weight == Weight{3});
  CHECK(r.word.letters == std::vector<int>{0});

  r = dominant_representative(sl3, Weight{0, -1});
  CHECK(r.weight == Weight{1, 0});
  CHECK(r.word.length() == 2);
  CHECK(apply_word(sl3, r.word, Weight{0, -1}) == r.weight);

  r = dominant_representative(sl3, Weight{2, 1});
  CHECK(r.weight == Weight{2, 1});
  CHECK(r.word.empty());
}

TEST_CASE("Weyl orbits and group orders") {
  const auto sl2 = fixture_datum("SL2");
  const auto sl3 = fixture_datum("SL3");
  CHECK(weyl_orbit(sl2, Weight{1}) == std::set<Weight>{{1}, {-1}});
  CHECK(weyl_orbit(sl3, Weight{1, 0}) == std::set<Weight>{{1, 0}, {-1, 1}, {0, -1}});
  CHECK(weyl_orbit(sl3, Weight{0, 0}).size() == 1);
  CHECK(weyl_group_order(sl2) == 2);
  CHECK(weyl_group_order(sl3) == 6);
  CHECK(weyl_group_order(fixture_datum("G2")) == 12);
  CHECK(weyl_group_order(fixture_datum("Sp4")) == 8);
  CHECK(weyl_group_order(fixture_datum("GL2")) == 2);
}

TEST_CASE("dominance orders") {
  const auto sl2 = fixture_datum("SL2");
  const auto sl3 = fixture_datum("SL3");
  CHECK(leq_dominance(sl2, Weight{0}, Weight{2}));
  CHECK_FALSE(leq_dominance(sl2, Weight{1}, Weight{2}));
  CHECK(leq_dominance(sl3, Weight{0, 0}, Weight{1, 1}));
  CHECK(preceq(sl2, Weight{1}, Weight{2}));
  CHECK_FALSE(preceq(sl2, Weight{2}, Weight{1}));
  CHECK(preceq(sl3, Weight{1, 1}, Weight{3, 0}));
  // GL2: difference outside the root span
  const auto gl2 = fixture_datum("GL2");
  CHECK_FALSE(preceq(gl2, Weight{0, 0}, Weight{1, 0}));
  CHECK(leq_dominance(gl2, Weight{0, 0}, Weight{1, -1}));
}

TEST_CASE("classes modulo the root lattice") {
  const auto sl2 = fixture_datum("SL2");
  CHECK(class_mod_root_lattice(sl2, Weight{1}) == class_mod_root_lattice(sl2, Weight{3}));
  CHECK(class_mod_root_lattice(sl2, Weight{0}) != class_mod_root_lattice(sl2, Weight{1}));
  const auto pgl2 = fixture_datum("PGL2");
  CHECK(class_mod_root_lattice(pgl2, Weight{0}) == class_mod_root_lattice(pgl2, Weight{5}));
  const auto gl2 = fixture_datum("GL2");
  CHECK(class_mod_root_lattice(gl2, Weight{1, 0}) == class_mod_root_lattice(gl2, Weight{0, 1}));
  CHECK(class_mod_root_lattice(gl2, Weight{1, 0}) != class_mod_root_lattice(gl2, Weight{1, 1}));
}

TEST_CASE("positive roots and 2rho") {
  CHECK(positive_roots(fixture_datum("SL2")) == std::set<Weight>{{2}});
  CHECK(positive_roots(fixture_datum("SL3")) == std::set<Weight>{{2, -1}, {-1, 2}, {1, 1}});
  CHECK(positive_roots(fixture_datum("G2")).size() == 6);
  CHECK(positive_roots(fixture_datum("Sp4")).size() == 4);
  CHECK(two_rho(fixture_datum("SL2")) == Weight{2});
  CHECK(two_rho(fixture_datum("SL3")) == Weight{2, 2});
  CHECK(two_rho(fixture_datum("PGL2")) == Weight{1});
  for (const auto& f : all_fixtures()) {
    CAPTURE(f.name);
    for (const auto& c : f.datum.simple_coroots()) CHECK(pairing(two_rho(f.datum), c) == 2);
  }
}

TEST_CASE("omega sets") {
  const auto pgl2 = fixture_datum("PGL2");
  const auto sl2 = fixture_datum("SL2");
  // PGL2 coweights behave like SL2 weights
  CHECK(omega_set(dual_root_datum(pgl2), Weight{1}) == std::set<Weight>{{1}, {-1}});
  CHECK(omega_set(sl2, Weight{2}) == std::set<Weight>{{2}, {0}, {-2}});
  CHECK(omega_set(sl2, Weight{0}) == std::set<Weight>{{0}});
  CHECK_THROWS_AS(omega_set(sl2, Weight{-1}), DomainError);
  CHECK(omega_set(pgl2, Weight{2}) == std::set<Weight>{{2}, {1}, {0}, {-1}, {-2}});
}

TEST_CASE("convex hull oracle") {
  const auto sl2 = fixture_datum("SL2");
  CHECK(conv_hull_leq(sl2, Weight{1}, Weight{2}));
  CHECK_FALSE(conv_hull_leq(sl2, Weight{2}, Weight{1}));
  CHECK(conv_hull_leq(sl2, Weight{2}, Weight{2}));
  CHECK_THROWS_AS(conv_hull_leq(sl2, Weight{-1}, Weight{2}), DomainError);
}

TEST_CASE("dual datum") {
  const auto sl2 = fixture_datum("SL2");
  const auto d = dual_root_datum(sl2);
  CHECK(d.simple_roots() == std::vector<Weight>{{1}});
  CHECK(d.simple_coroots() == std::vector<Coweight>{{2}});
  for (const auto& f : all_fixtures()) {
    CAPTURE(f.name);
    const auto dd = dual_root_datum(dual_root_datum(f.datum));
    CHECK(dd == f.datum);
    CHECK(dd.name() == f.datum.name());
  }
  // B2 and C2 Cartan matrices are transposes
  const auto sp4 = fixture_datum("Sp4");
  IntMatrix a = cartan_matrix(sp4), b = cartan_matrix(dual_root_datum(sp4));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(a[i][j] == b[j][i]);
}

TEST_CASE("order properties on every fixture") {
  for (const auto& f : all_fixtures()) {
    CAPTURE(f.name);
    const auto& rd = f.datum;
    const auto box = dominant_box(rd, 3);
    for (const auto& l : box)
      for (const auto& m : box) {
        CAPTURE(l);
        CAPTURE(m);
        const bool le = leq_dominance(rd, l, m);
        const bool pr = preceq(rd, l, m);
        if (le) CHECK(pr);
        CHECK(le == (pr && class_mod_root_lattice(rd, l) == class_mod_root_lattice(rd, m)));
        CHECK(pr == conv_hull_leq(rd, l, m));
      }
    for (const auto& l : box) {
      const auto orbit = weyl_orbit(rd, l);
      for (const auto& w : orbit) {
        CHECK(dominant_representative(rd, w).weight == l);
        for (int i = 0; i < rd.semisimple_rank(); ++i) CHECK(orbit.count(reflect(rd, w, i)) == 1);
      }
      // omega_set is the set of weights whose dominant representative lies below l
      for (const auto& w : omega_set(rd, l)) CHECK(leq_dominance(rd, dominant_representative(rd, w).weight, l));
      for (const auto& d : dominant_weights_below(rd, l)) CHECK(leq_dominance(rd, d, l));
    }
  }
}

TEST_CASE("dominant_weights_below is complete inside a box") {
  for (const auto& f : all_fixtures()) {
    CAPTURE(f.name);
    const auto& rd = f.datum;
    const auto box = dominant_box(rd, 4);
    for (const auto& m : box) {
      const auto below = dominant_weights_below(rd, m);
      const std::set<Weight> got(below.begin(), below.end());
      for (const auto& l : box)
        if (leq_dominance(rd, l, m)) CHECK(got.count(l) == 1);
    }
  }
}

TEST_CASE("rank zero datum") {
  RootDatum rd(0, {}, {});
  CHECK(weyl_group_order(rd) == 1);
  CHECK(omega_set(rd, Weight{}) == std::set<Weight>{Weight{}});
  CHECK(two_rho(rd) == Weight{});
}
