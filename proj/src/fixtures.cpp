#include "satake/fixtures.hpp"

namespace satake {

namespace {

RootDatum make(const std::string& name, int rank, std::vector<Weight> roots, std::vector<Coweight> coroots) {
  return RootDatum(rank, std::move(roots), std::move(coroots), name);
}

}  // namespace

RootDatum fixture_datum(const std::string& name) {
  if (name == "SL2") return make(name, 1, {{2}}, {{1}});
  if (name == "PGL2") return make(name, 1, {{1}}, {{2}});
  if (name == "GL2") return make(name, 2, {{1, -1}}, {{1, -1}});
  if (name == "SL3") return make(name, 2, {{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}});
  if (name == "PGL3") return make(name, 2, {{1, 0}, {0, 1}}, {{2, -1}, {-1, 2}});
  if (name == "Sp4") return make(name, 2, {{2, -1}, {-2, 2}}, {{1, 0}, {0, 1}});
  if (name == "G2") return make(name, 2, {{2, -3}, {-1, 2}}, {{1, 0}, {0, 1}});
  throw DomainError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() { return {"SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "G2"}; }

std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out;
  for (const auto& n : fixture_names()) out.push_back({n, fixture_datum(n)});
  return out;
}

}  // namespace satake
