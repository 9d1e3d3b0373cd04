#include "doctest.h"

#include "satake/cli.hpp"
#include "satake/fixtures.hpp"
#include "satake/integer_linear_algebra.hpp"
#include "satake/io.hpp"
#include "satake/reconstruction.hpp"

using namespace satake;

namespace {

const ReconstructionConfig kCfg{};

Int dot_product(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string id_of(const DumpResult& d, const Weight& w) {
  for (const auto& [id, x] : d.truth)
    if (x == w) return id;
  FAIL("weight not in dump: " << w);
  return {};
}

/// Linear map L with L(embedding(id)) = truth(id), as rational rows; only
/// needs to exist on the embedded ids.
struct TruthMap {
  std::vector<std::vector<Rational>> rows;  // n_truth x rank
  std::vector<Int> apply(const std::vector<Int>& x) const {
    std::vector<Int> out;
    for (const auto& row : rows) {
      Rational s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s += row[j] * x[j];
      REQUIRE(denominator(s) == 1);
      out.push_back(static_cast<Int>(numerator(s)));
    }
    return out;
  }
};

TruthMap truth_map(const DumpResult& d, const MonoidResult& m) {
  // pick rank many embedded ids with independent coordinates and invert
  const auto r = static_cast<std::size_t>(m.rank);
  std::vector<std::string> basis;
  BigMatrix rows;
  for (const auto& [id, e] : m.embedding) {
    BigMatrix trial = rows;
    trial.emplace_back(e.begin(), e.end());
    if (matrix_rank(trial) > rows.size()) {
      rows = trial;
      basis.push_back(id);
    }
    if (rows.size() == r) break;
  }
  REQUIRE(rows.size() == r);
  const std::size_t n = d.truth.begin()->second.size();
  TruthMap t;
  t.rows.assign(n, std::vector<Rational>(r));
  for (std::size_t i = 0; i < n; ++i) {
    // solve rows * x = (truth of basis)_i
    std::vector<BigInt> rhs;
    for (const auto& id : basis) rhs.emplace_back(d.truth.at(id)[i]);
    const auto x = solve_rational_square(rows, rhs);
    REQUIRE(x);
    t.rows[i] = *x;
  }
  for (const auto& [id, e] : m.embedding) CHECK(Weight(t.apply(e)) == d.truth.at(id));
  return t;
}

bool in_natural_root_cone(const RootDatum& rd, const Weight& v) {
  const auto c = rd.scaled_root_coordinates(v);
  if (!c) return false;
  for (Int x : *c)
    if (x < 0 || x % rd.cartan_det() != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("dump_semiring") {
  const auto sl2 = fixture_datum("SL2");
  auto d = dump_semiring(sl2, 4, 1);
  CHECK(d.semiring.size() == 5);
  d = dump_semiring(sl2, 8, 1);
  CHECK(d.semiring.size() == 9);
  CHECK(d.semiring.entries().size() == 45);
  CHECK(d.truth.at(d.semiring.unit()) == Weight{0});
  const auto* p = d.semiring.product(id_of(d, Weight{4}), id_of(d, Weight{4}));
  REQUIRE(p);
  CHECK(p->complete);
  CHECK(p->terms.size() == 5);
  p = d.semiring.product(id_of(d, Weight{8}), id_of(d, Weight{1}));
  REQUIRE(p);
  CHECK_FALSE(p->complete);
  CHECK(p->terms == std::map<std::string, BigInt>{{id_of(d, Weight{7}), 1}});
  for (const auto& id : d.semiring.ids()) {
    const auto* u = d.semiring.product(id, d.semiring.unit());
    REQUIRE(u);
    CHECK(u->terms == std::map<std::string, BigInt>{{id, 1}});
  }
  CHECK(semiring_to_json(dump_semiring(sl2, 8, 5).semiring) == semiring_to_json(dump_semiring(sl2, 8, 5).semiring));
  CHECK(semiring_to_json(dump_semiring(sl2, 8, 5).semiring) != semiring_to_json(dump_semiring(sl2, 8, 6).semiring));

  const RootDatum trivial(0, {}, {});
  d = dump_semiring(trivial, 10, 1);
  CHECK(d.semiring.size() == 1);
  CHECK(d.semiring.ids().front() == d.semiring.unit());
}

TEST_CASE("AbstractSemiring rejects malformed tables") {
  ProductEntry e{{{"x", 1}}, true};
  CHECK_THROWS_AS(AbstractSemiring("u", {"x"}, {}), DomainError);
  CHECK_THROWS_AS(AbstractSemiring("u", {"u", "u"}, {}), DomainError);
  CHECK_THROWS_AS(AbstractSemiring("u", {"u", "x"}, {{"x", "y", e}}), DomainError);
  ProductEntry zero{{{"x", 0}}, true};
  CHECK_THROWS_AS(AbstractSemiring("u", {"u", "x"}, {{"x", "x", zero}}), DomainError);
  ProductEntry other{{{"u", 1}}, true};
  CHECK_THROWS_AS(AbstractSemiring("u", {"u", "x"}, {{"x", "x", e}, {"x", "x", other}}), DomainError);
  CHECK_THROWS_AS(validate_config(ReconstructionConfig{1, false}), DomainError);
}

TEST_CASE("recover_preceq examples") {
  const auto d = dump_semiring(fixture_datum("SL2"), 8, 3);
  const auto& sr = d.semiring;
  CHECK(recover_preceq(sr, kCfg, id_of(d, Weight{0}), id_of(d, Weight{2})) == Verdict::kTrue);
  CHECK(recover_preceq(sr, kCfg, id_of(d, Weight{2}), id_of(d, Weight{0})) == Verdict::kFalse);
  for (const auto& id : sr.ids()) CHECK(recover_preceq(sr, kCfg, id, id) == Verdict::kTrue);
}

TEST_CASE("recover_sum examples") {
  auto d = dump_semiring(fixture_datum("SL2"), 8, 3);
  CHECK(recover_sum(d.semiring, kCfg, id_of(d, Weight{1}), id_of(d, Weight{1})) == id_of(d, Weight{2}));
  for (const auto& id : d.semiring.ids())
    if (d.truth.at(id) != Weight{8}) CHECK(recover_sum(d.semiring, kCfg, id, d.semiring.unit()) == id);
  CHECK_THROWS_AS(recover_sum(d.semiring, kCfg, id_of(d, Weight{8}), id_of(d, Weight{8})), ReconstructionError);
  d = dump_semiring(fixture_datum("SL3"), 12, 3);
  CHECK(recover_sum(d.semiring, kCfg, id_of(d, Weight{1, 0}), id_of(d, Weight{0, 1})) == id_of(d, Weight{1, 1}));
}

TEST_CASE("recover_monoid") {
  auto d = dump_semiring(fixture_datum("SL2"), 8, 2);
  auto m = recover_monoid(d.semiring, kCfg);
  CHECK(m.rank == 1);
  CHECK(m.generators == std::vector<std::string>{id_of(d, Weight{1})});
  const Int g = m.embedding.at(id_of(d, Weight{1}))[0];
  CHECK((g == 1 || g == -1));
  for (const auto& [id, e] : m.embedding) CHECK(e[0] == g * d.truth.at(id)[0]);

  d = dump_semiring(fixture_datum("SL3"), 16, 2);
  m = recover_monoid(d.semiring, kCfg);
  CHECK(m.rank == 2);
  std::set<std::string> gens(m.generators.begin(), m.generators.end());
  CHECK(gens == std::set<std::string>{id_of(d, Weight{1, 0}), id_of(d, Weight{0, 1})});

  // a window too small to see any sum
  d = dump_semiring(fixture_datum("SL2"), 1, 2);
  try {
    recover_monoid(d.semiring, kCfg);
    FAIL("expected an inconclusive error");
  } catch (const ReconstructionError& e) {
    CHECK(e.kind() == ReconstructionError::Kind::kInconclusive);
  }
}

TEST_CASE("recover_Qplus and recover_leq") {
  auto d = dump_semiring(fixture_datum("SL2"), 8, 4);
  auto m = recover_monoid(d.semiring, kCfg);
  auto q = recover_Qplus(d.semiring, m);
  auto t = truth_map(d, m);
  std::set<Int> diffs;
  for (const auto& v : q) diffs.insert(t.apply(v)[0]);
  CHECK(diffs.count(2) == 1);
  for (Int x : diffs) CHECK((x > 0 && x % 2 == 0));
  CHECK(recover_leq(d.semiring, kCfg, m, q, id_of(d, Weight{1}), id_of(d, Weight{2})) == Verdict::kFalse);
  CHECK(recover_leq(d.semiring, kCfg, m, q, id_of(d, Weight{0}), id_of(d, Weight{2})) == Verdict::kTrue);
  for (const auto& id : d.semiring.ids()) CHECK(recover_leq(d.semiring, kCfg, m, q, id, id) == Verdict::kTrue);
  auto roots = extract_simple_roots(q);
  REQUIRE(roots.size() == 1);
  CHECK(t.apply(roots[0]) == std::vector<Int>{2});
  auto f = extract_simple_coroots(d.semiring, m, roots[0]);
  CHECK(dot_product(f, m.embedding.at(id_of(d, Weight{3}))) == 3);
  CHECK(dot_product(f, m.embedding.at(d.semiring.unit())) == 0);
  CHECK(dot_product(f, roots[0]) == 2);

  d = dump_semiring(fixture_datum("PGL2"), 8, 4);
  m = recover_monoid(d.semiring, kCfg);
  q = recover_Qplus(d.semiring, m);
  t = truth_map(d, m);
  diffs.clear();
  for (const auto& v : q) diffs.insert(t.apply(v)[0]);
  CHECK(diffs.count(1) == 1);
  CHECK(diffs.count(2) == 1);
  roots = extract_simple_roots(q);
  REQUIRE(roots.size() == 1);
  CHECK(t.apply(roots[0]) == std::vector<Int>{1});
}

TEST_CASE("simple roots and coroots of SL3") {
  const auto d = dump_semiring(fixture_datum("SL3"), 24, 1);
  const auto m = recover_monoid(d.semiring, kCfg);
  const auto q = recover_Qplus(d.semiring, m);
  const auto t = truth_map(d, m);
  const auto roots = extract_simple_roots(q);
  REQUIRE(roots.size() == 2);
  std::set<std::vector<Int>> mapped{t.apply(roots[0]), t.apply(roots[1])};
  CHECK(mapped == std::set<std::vector<Int>>{{2, -1}, {-1, 2}});
  for (const auto& a : roots) {
    if (t.apply(a) != std::vector<Int>{2, -1}) continue;
    const auto f = extract_simple_coroots(d.semiring, m, a);
    CHECK(dot_product(f, m.embedding.at(id_of(d, Weight{1, 1}))) == 1);
    CHECK(dot_product(f, m.embedding.at(d.semiring.unit())) == 0);
  }
}

TEST_CASE("assembled Cartan matrices") {
  auto rep = reconstruct(dump_semiring(fixture_datum("SL2"), 8, 1).semiring, kCfg);
  CHECK(rep.recovered.datum.cartan() == IntMatrix{{2}});
  rep = reconstruct(dump_semiring(fixture_datum("SL3"), 24, 1).semiring, kCfg);
  CHECK(rep.recovered.datum.cartan() == IntMatrix{{2, -1}, {-1, 2}});
  rep = reconstruct(dump_semiring(fixture_datum("G2"), 40, 1).semiring, kCfg);
  const auto& c = rep.recovered.datum.cartan();
  CHECK((c == IntMatrix{{2, -1}, {-3, 2}} || c == IntMatrix{{2, -3}, {-1, 2}}));
  rep = reconstruct(dump_semiring(RootDatum(0, {}, {}), 5, 1).semiring, kCfg);
  CHECK(rep.recovered.datum.rank() == 0);
  CHECK(rep.recovered.labeling.size() == 1);
}

TEST_CASE("based_iso") {
  for (const auto& f : all_fixtures()) {
    CAPTURE(f.name);
    const auto m = based_iso(f.datum, f.datum);
    REQUIRE(m);
    CHECK(determinant(to_big(*m)) * determinant(to_big(*m)) == 1);
  }
  CHECK(based_iso(fixture_datum("SL3"), fixture_datum("SL3")) == IntMatrix{{1, 0}, {0, 1}});
  CHECK_FALSE(based_iso(fixture_datum("SL2"), fixture_datum("PGL2")));
  CHECK_FALSE(based_iso(fixture_datum("SL3"), fixture_datum("PGL3")));
  CHECK_FALSE(based_iso(fixture_datum("Sp4"), dual_root_datum(fixture_datum("Sp4"))));
  CHECK(based_iso(fixture_datum("G2"), dual_root_datum(fixture_datum("G2"))));
  // central rank 1: GL2 in a skewed basis, versus SL2 x Gm and PGL2 x Gm
  const RootDatum gl2_skew(2, {Weight{0, -1}}, {Coweight{1, -2}});
  CHECK(based_iso(fixture_datum("GL2"), gl2_skew));
  const RootDatum sl2_gm(2, {Weight{2, 0}}, {Coweight{1, 0}});
  const RootDatum pgl2_gm(2, {Weight{1, 0}}, {Coweight{2, 0}});
  CHECK_FALSE(based_iso(fixture_datum("GL2"), sl2_gm));
  CHECK_FALSE(based_iso(fixture_datum("GL2"), pgl2_gm));
  CHECK_FALSE(based_iso(sl2_gm, pgl2_gm));
  CHECK(based_iso(sl2_gm, RootDatum(2, {Weight{2, 6}}, {Coweight{1, 0}})));
}

TEST_CASE("round trip recovers the dumped datum") {
  for (const auto& f : all_fixtures()) {
    CAPTURE(f.name);
    const auto rd = dual_root_datum(f.datum);
    const auto d = dump_semiring(rd, cli::default_window(f.name), 1);
    const auto rep = reconstruct(d.semiring, kCfg);
    REQUIRE(based_iso(rep.recovered.datum, rd));
    // the labeling is a lattice isomorphism onto the true weights
    const auto t = truth_map(d, rep.monoid);
    std::set<std::vector<Int>> labels;
    for (const auto& [id, w] : rep.recovered.labeling) labels.insert(w.coords);
    CHECK(labels.size() == d.truth.size());
    for (const auto& [id, w] : rep.recovered.labeling) {
      const auto& e = rep.monoid.embedding;
      if (e.count(id)) CHECK(Weight(t.apply(e.at(id))) == d.truth.at(id));
    }
  }
}

TEST_CASE("order agreement with the lattice orders") {
  for (const auto& f : all_fixtures()) {
    CAPTURE(f.name);
    const auto rd = dual_root_datum(f.datum);
    const auto d = dump_semiring(rd, cli::default_window(f.name), 1);
    const auto m = recover_monoid(d.semiring, kCfg);
    std::vector<std::vector<Int>> q;
    if (m.rank > 0) q = recover_Qplus(d.semiring, m);
    std::size_t decided = 0, total = 0;
    for (const auto& [a, wa] : d.truth)
      for (const auto& [b, wb] : d.truth) {
        CAPTURE(wa);
        CAPTURE(wb);
        ++total;
        const Verdict v = recover_preceq(d.semiring, kCfg, a, b);
        if (v != Verdict::kInconclusive) {
          ++decided;
          CHECK((v == Verdict::kTrue) == preceq(rd, wa, wb));
        }
        const Verdict l = recover_leq(d.semiring, kCfg, m, q, a, b);
        if (l != Verdict::kInconclusive) CHECK((l == Verdict::kTrue) == leq_dominance(rd, wa, wb));
      }
    MESSAGE(f.name << ": " << decided << " of " << total << " preceq verdicts decided");
  }
}

TEST_CASE("recovered sums are weight addition") {
  for (const auto& f : all_fixtures()) {
    CAPTURE(f.name);
    const auto d = dump_semiring(dual_root_datum(f.datum), cli::default_window(f.name), 2);
    const auto m = recover_monoid(d.semiring, kCfg);
    CHECK_FALSE(m.sums.empty());
    for (const auto& [ab, s] : m.sums) CHECK(d.truth.at(ab.first) + d.truth.at(ab.second) == d.truth.at(s));
  }
}

TEST_CASE("verdicts are stable under widening the window") {
  for (const char* name : {"SL2", "PGL2", "SL3"}) {
    CAPTURE(name);
    const auto rd = fixture_datum(name);
    const auto small = dump_semiring(rd, 8, 1);
    const auto large = dump_semiring(rd, 16, 1);
    for (const auto& [a, wa] : small.truth)
      for (const auto& [b, wb] : small.truth) {
        const Verdict v = recover_preceq(small.semiring, kCfg, a, b);
        if (v == Verdict::kInconclusive) continue;
        CHECK(recover_preceq(large.semiring, kCfg, id_of(large, wa), id_of(large, wb)) == v);
      }
  }
}

TEST_CASE("anonymization seeds do not change the recovered datum") {
  for (const char* name : {"SL2", "GL2", "PGL3", "Sp4"}) {
    CAPTURE(name);
    const auto rd = dual_root_datum(fixture_datum(name));
    const auto base = reconstruct(dump_semiring(rd, cli::default_window(name), 1).semiring, kCfg);
    for (std::uint64_t seed : {2, 3}) {
      const auto rep = reconstruct(dump_semiring(rd, cli::default_window(name), seed).semiring, kCfg);
      CHECK(based_iso(rep.recovered.datum, base.recovered.datum));
    }
  }
}

TEST_CASE("corrupted products are rejected") {
  const auto rd = fixture_datum("SL3");
  auto d = dump_semiring(rd, 24, 1);
  auto* p = d.semiring.mutable_product(*d.semiring.index_of(id_of(d, Weight{1, 1})),
                                       *d.semiring.index_of(id_of(d, Weight{1, 1})));
  REQUIRE(p);
  p->terms.at(id_of(d, Weight{0, 0})) += 1;
  try {
    reconstruct(d.semiring, kCfg);
    FAIL("corruption not detected");
  } catch (const ReconstructionError& e) {
    CHECK(e.kind() == ReconstructionError::Kind::kInconsistent);
  }
}

TEST_CASE("semiring and datum json") {
  const auto d = dump_semiring(fixture_datum("G2"), 12, 9);
  const std::string text = semiring_to_json(d.semiring);
  CHECK(semiring_to_json(parse_semiring_json(text)) == text);
  for (const auto& f : all_fixtures()) CHECK(parse_datum_json(datum_to_json(f.datum)) == f.datum);
  CHECK_THROWS_AS(parse_semiring_json("{"), ParseError);
  CHECK_THROWS_AS(parse_semiring_json(R"({"unit":"u","ids":["u"],"products":[{"a":"u","b":"v","terms":[],"complete":true}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_datum_json(R"({"rank":1,"simple_roots":[[2]]})"), ParseError);
  CHECK_THROWS_AS(parse_datum_json(R"({"rank":1,"simple_roots":[[3]],"simple_coroots":[[1]]})"), DatumError);
  // big multiplicities survive as decimal strings
  const auto big = parse_semiring_json(
      R"({"unit":"u","ids":["u","x"],"products":[{"a":"x","b":"x","terms":[{"id":"x","mult":"123456789012345678901234567890"}],"complete":false}]})");
  CHECK(big.product("x", "x")->terms.at("x") == BigInt("123456789012345678901234567890"));
  CHECK(semiring_to_json(parse_semiring_json(semiring_to_json(big))) == semiring_to_json(big));
}
