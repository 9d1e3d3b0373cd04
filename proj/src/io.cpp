#include "satake/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace satake {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<Int>();
}

BigInt as_big(const json& j, const char* what) {
  if (j.is_number_integer()) return BigInt(j.get<Int>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(std::string(what) + " must be a decimal integer");
    return BigInt(s);
  }
  throw ParseError(std::string(what) + " must be an integer");
}

json big_to_json(const BigInt& x) {
  if (x <= std::numeric_limits<Int>::max() && x >= std::numeric_limits<Int>::min()) return static_cast<Int>(x);
  return x.str();
}

std::vector<std::vector<Int>> int_rows(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<Int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError(std::string(what) + " must be an array of arrays");
    std::vector<Int> r;
    for (const auto& x : row) r.push_back(as_int(x, what));
    out.push_back(std::move(r));
  }
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RootDatum parse_datum_json(const std::string& text) {
  const json j = parse(text);
  const Int rank = as_int(field(j, "rank"), "rank");
  if (rank < 0) throw ParseError("rank must be nonnegative");
  const auto roots = int_rows(field(j, "simple_roots"), "simple_roots");
  const auto coroots = int_rows(field(j, "simple_coroots"), "simple_coroots");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name must be a string");
    name = j["name"].get<std::string>();
  }
  std::vector<Weight> rs;
  std::vector<Coweight> cs;
  for (const auto& r : roots) rs.emplace_back(r);
  for (const auto& c : coroots) cs.emplace_back(c);
  return RootDatum(static_cast<int>(rank), rs, cs, name);
}

std::string datum_to_json(const RootDatum& rd) {
  json j;
  j["name"] = rd.name();
  j["rank"] = rd.rank();
  j["simple_roots"] = json::array();
  j["simple_coroots"] = json::array();
  for (const auto& a : rd.simple_roots()) j["simple_roots"].push_back(a.coords);
  for (const auto& c : rd.simple_coroots()) j["simple_coroots"].push_back(c.coords);
  return j.dump(2) + "\n";
}

AbstractSemiring parse_semiring_json(const std::string& text) {
  const json j = parse(text);
  const json& unit = field(j, "unit");
  if (!unit.is_string()) throw ParseError("unit must be a string");
  const json& ids_j = field(j, "ids");
  if (!ids_j.is_array()) throw ParseError("ids must be an array");
  std::vector<std::string> ids;
  for (const auto& x : ids_j) {
    if (!x.is_string()) throw ParseError("ids must be strings");
    ids.push_back(x.get<std::string>());
  }
  const json& prods = field(j, "products");
  if (!prods.is_array()) throw ParseError("products must be an array");
  std::vector<std::tuple<std::string, std::string, ProductEntry>> products;
  for (const auto& p : prods) {
    const json& a = field(p, "a");
    const json& b = field(p, "b");
    if (!a.is_string() || !b.is_string()) throw ParseError("product factors must be strings");
    const json& complete = field(p, "complete");
    if (!complete.is_boolean()) throw ParseError("complete must be a boolean");
    ProductEntry e;
    e.complete = complete.get<bool>();
    const json& terms = field(p, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    for (const auto& t : terms) {
      const json& id = field(t, "id");
      if (!id.is_string()) throw ParseError("term id must be a string");
      if (!e.terms.emplace(id.get<std::string>(), as_big(field(t, "mult"), "mult")).second)
        throw ParseError("repeated term '" + id.get<std::string>() + "'");
    }
    products.emplace_back(a.get<std::string>(), b.get<std::string>(), std::move(e));
  }
  try {
    return AbstractSemiring(unit.get<std::string>(), ids, products);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string semiring_to_json(const AbstractSemiring& sr) {
  // written by hand so the layout stays one product per line
  std::ostringstream os;
  os << "{\n  \"unit\": " << json(sr.unit()).dump() << ",\n  \"ids\": [";
  for (std::size_t i = 0; i < sr.size(); ++i) os << (i ? ", " : "") << json(sr.ids()[i]).dump();
  os << "],\n  \"products\": [";
  bool first = true;
  for (const auto& [key, entry] : sr.entries()) {
    json p;
    p["a"] = sr.ids()[key.first];
    p["b"] = sr.ids()[key.second];
    p["terms"] = json::array();
    for (const auto& [id, m] : entry.terms) p["terms"].push_back({{"id", id}, {"mult", big_to_json(m)}});
    p["complete"] = entry.complete;
    os << (first ? "\n    " : ",\n    ") << p.dump();
    first = false;
  }
  os << (first ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

}  // namespace satake
