#include "satake/cli.hpp"

#include "satake/fixtures.hpp"
#include "satake/io.hpp"
#include "satake/reconstruction.hpp"
#include "satake/rep_semiring.hpp"
#include "satake/satake_shadow.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace satake::cli {

using Json = nlohmann::ordered_json;

long long default_window(const std::string& fixture) {
  // smallest windows that reconstruct the dual for seeds 1..3, plus 4
  static const std::map<std::string, long long> windows{
      {"SL2", 12}, {"PGL2", 8}, {"GL2", 12}, {"SL3", 28}, {"PGL3", 12}, {"Sp4", 28}, {"G2", 44}};
  auto it = windows.find(fixture);
  if (it == windows.end()) throw DomainError("no default window for '" + fixture + "'; pass --bound");
  return it->second;
}

namespace {

struct Failure {
  int code;
  std::string message;
};

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return "fnv1a64:" + os.str();
}

Json weight_json(const std::vector<Int>& coords) { return Json(coords); }

std::string weight_text(const std::vector<Int>& coords) {
  std::string s = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + std::to_string(coords[i]);
  return s + "]";
}

Json big_json(const BigInt& x) {
  if (x <= std::numeric_limits<Int>::max() && x >= std::numeric_limits<Int>::min()) return static_cast<Int>(x);
  return x.str();
}

std::vector<Int> parse_weight(const std::string& text, std::size_t rank) {
  std::string s;
  for (char c : text)
    if (c != '[' && c != ']' && c != '(' && c != ')' && c != ' ') s += c;
  std::vector<Int> out;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(part, &used);
      } catch (const std::exception&) {
        throw ParseError("malformed weight '" + text + "'");
      }
      if (used != part.size()) throw ParseError("malformed weight '" + text + "'");
      out.push_back(v);
    }
  }
  if (out.size() != rank)
    throw ParseError("weight '" + text + "' has " + std::to_string(out.size()) + " coordinates, expected " +
                     std::to_string(rank));
  return out;
}

/// Result tables plus the surrounding report, rendered as json or tsv.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Json>> params;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, Json>> summary;
  std::vector<Table> tables;
  std::vector<std::string> log;
  std::size_t pass = 0, fail = 0, inconclusive = 0;
  std::string status = "ok";
};

std::string cell_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    bool flat = true;
    for (const auto& x : j) flat = flat && x.is_number_integer();
    if (flat) return weight_text(j.get<std::vector<Int>>());
    std::string s = "[";
    bool first = true;
    for (const auto& x : j) {
      s += (first ? "" : ";") + cell_text(x);
      first = false;
    }
    return s + "]";
  }
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_null()) return "-";
  return j.dump();
}

std::string render(const Report& r, const std::string& format) {
  if (format == "json") {
    Json j;
    j["command"] = r.command;
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    Json inputs = Json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    j["status"] = r.status;
    j["verdicts"] = {{"pass", r.pass}, {"fail", r.fail}, {"inconclusive", r.inconclusive}};
    Json summary = Json::object();
    for (const auto& [k, v] : r.summary) summary[k] = v;
    j["summary"] = summary;
    Json tables = Json::object();
    for (const auto& t : r.tables) {
      Json rows = Json::array();
      for (const auto& row : t.rows) {
        Json o = Json::object();
        for (std::size_t i = 0; i < t.columns.size(); ++i) o[t.columns[i]] = row[i];
        rows.push_back(o);
      }
      tables[t.name] = rows;
    }
    j["tables"] = tables;
    j["log"] = r.log;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# command\t" << r.command << "\n";
  for (const auto& [k, v] : r.params) os << "# param\t" << k << "\t" << cell_text(v) << "\n";
  for (const auto& [k, v] : r.inputs) os << "# input\t" << k << "\t" << v << "\n";
  os << "# status\t" << r.status << "\n";
  os << "# verdicts\tpass=" << r.pass << "\tfail=" << r.fail << "\tinconclusive=" << r.inconclusive << "\n";
  for (const auto& [k, v] : r.summary) os << "# " << k << "\t" << cell_text(v) << "\n";
  for (const auto& t : r.tables) {
    os << "\n## " << t.name << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "\t" : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << cell_text(row[i]);
      os << "\n";
    }
  }
  if (!r.log.empty()) {
    os << "\n## log\n";
    for (const auto& l : r.log) os << l << "\n";
  }
  return os.str();
}

struct Options {
  std::string datum_file, fixture, dump_file, out_file, format = "tsv", truth_file;
  std::vector<std::string> mus;
  long long bound = -1;
  int kmax = 4;
  std::uint64_t seed = kDefaultSeed;
  long long trials = 100;
  bool strict = false;
};

struct LoadedDatum {
  RootDatum datum{0, {}, {}};
  std::string label, digest;
};

LoadedDatum load_datum(const Options& o) {
  if (o.datum_file.empty() == o.fixture.empty()) throw ParseError("give exactly one of --datum FILE or --fixture NAME");
  LoadedDatum d;
  if (!o.fixture.empty()) {
    d.datum = fixture_datum(o.fixture);
    d.label = "fixture:" + o.fixture;
    d.digest = fnv1a(datum_to_json(d.datum));
  } else {
    const std::string text = read_text_file(o.datum_file);
    d.datum = parse_datum_json(text);
    d.label = o.datum_file;
    d.digest = fnv1a(text);
  }
  return d;
}

Report base_report(const std::string& cmd, const Options& o) {
  Report r;
  r.command = cmd;
  r.params.emplace_back("format", o.format);
  return r;
}

std::vector<Json> cartan_rows(const RootDatum& rd) {
  std::vector<Json> rows;
  for (const auto& row : rd.cartan()) rows.push_back(Json(row));
  return rows;
}

// -- decompose ---------------------------------------------------------------

Report cmd_decompose(const Options& o) {
  const LoadedDatum d = load_datum(o);
  Report r = base_report("decompose", o);
  r.inputs.emplace_back(d.label, d.digest);
  if (o.mus.empty()) throw ParseError("decompose needs at least one --mu");
  // the datum's own representations are tensored; the geometric columns
  // refer to the group whose coweights index them (its dual)
  const SatakeContext ctx(dual_root_datum(d.datum));
  std::vector<Coweight> mus;
  Json mu_list = Json::array();
  for (const auto& m : o.mus) {
    mus.emplace_back(parse_weight(m, static_cast<std::size_t>(d.datum.rank())));
    mu_list.push_back(weight_json(mus.back().coords));
  }
  r.params.emplace_back("mu", mu_list);
  RepresentationRing ring(d.datum);
  const SemiringElement conv = convolution_decompose(ring, mus);
  Table t{"constituents", {"lambda", "mult", "dim", "parity", "semismall_bound"}, {}};
  BigInt total = 0;
  for (const auto& [lam, m] : conv.terms()) {
    const Coweight c = as_coweight(lam);
    const BigInt dim = ring.weyl_dim(lam);
    total += m * dim;
    t.rows.push_back({weight_json(lam.coords), big_json(m), big_json(dim), component_parity(ctx, c),
                      semismall_bound(ctx, mus, c)});
  }
  r.summary.emplace_back("total_dim", big_json(total));
  r.tables.push_back(std::move(t));
  return r;
}

// -- orbits ------------------------------------------------------------------

std::vector<Weight> dominant_box(const RootDatum& rd, long long bound) {
  const auto n = static_cast<std::size_t>(rd.rank());
  if (n == 0) return {Weight{}};
  std::vector<Weight> out;
  std::vector<Int> c(n, -bound);
  for (;;) {
    Weight w(c);
    if (is_dominant(rd, w)) out.push_back(w);
    std::size_t i = 0;
    while (i < n && c[i] == bound) c[i++] = -bound;
    if (i == n) break;
    ++c[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report cmd_orbits(const Options& o) {
  const LoadedDatum d = load_datum(o);
  if (o.bound < 0) throw ParseError("orbits needs --bound N >= 0");
  Report r = base_report("orbits", o);
  r.params.emplace_back("bound", o.bound);
  r.inputs.emplace_back(d.label, d.digest);
  const SatakeContext ctx(d.datum);
  // dominant coweights with every coordinate in [-bound, bound]
  const auto mus = dominant_box(ctx.dual(), o.bound);
  Table t{"orbits", {"mu", "orbit_dim", "parity", "omega_size", "covers"}, {}};
  for (const auto& mu : mus) {
    const Coweight c = as_coweight(mu);
    Json covers = Json::array();
    for (const auto& lam : mus) {
      if (lam == mu || !closure_contains(ctx, as_coweight(lam), c)) continue;
      bool between = false;
      for (const auto& nu : mus)
        if (nu != mu && nu != lam && closure_contains(ctx, as_coweight(lam), as_coweight(nu)) &&
            closure_contains(ctx, as_coweight(nu), c)) {
          between = true;
          break;
        }
      if (!between) covers.push_back(weight_json(lam.coords));
    }
    t.rows.push_back({weight_json(mu.coords), orbit_dim(ctx, c), component_parity(ctx, c),
                      static_cast<Int>(omega_set(ctx.dual(), mu).size()), covers});
  }
  r.tables.push_back(std::move(t));
  return r;
}

// -- dump --------------------------------------------------------------------

int cmd_dump(const Options& o, std::string& text) {
  const LoadedDatum d = load_datum(o);
  if (o.bound < 0) throw ParseError("dump needs --bound N >= 0");
  const DumpResult dump = dump_semiring(d.datum, o.bound, o.seed);
  text = semiring_to_json(dump.semiring);
  if (!o.truth_file.empty()) {
    Json truth = Json::object();
    for (const auto& [id, w] : dump.truth) truth[id] = weight_json(w.coords);
    std::ofstream f(o.truth_file, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + o.truth_file + "'");
    f << truth.dump(2) << "\n";
  }
  return kOk;
}

// -- reconstruct -------------------------------------------------------------

void fill_reconstruction(Report& r, const ReconstructionReport& rep) {
  const RootDatum& rd = rep.recovered.datum;
  r.summary.emplace_back("lattice_rank", rd.rank());
  r.summary.emplace_back("semisimple_rank", rd.semisimple_rank());
  Table cartan{"cartan", {"row"}, {}};
  for (auto& row : cartan_rows(rd)) cartan.rows.push_back({row});
  Table simple{"simple", {"root", "coroot"}, {}};
  for (std::size_t i = 0; i < rd.simple_roots().size(); ++i)
    simple.rows.push_back({weight_json(rd.simple_roots()[i].coords), weight_json(rd.simple_coroots()[i].coords)});
  Table labels{"labeling", {"weight", "id"}, {}};
  std::vector<std::pair<Weight, std::string>> sorted;
  for (const auto& [id, w] : rep.recovered.labeling) sorted.emplace_back(w, id);
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [w, id] : sorted) labels.rows.push_back({weight_json(w.coords), id});
  r.summary.emplace_back("skipped_sums", static_cast<Int>(rep.skipped_sums));
  r.tables.push_back(std::move(cartan));
  r.tables.push_back(std::move(simple));
  r.tables.push_back(std::move(labels));
  for (const auto& l : rep.recovered.log) r.log.push_back(l);
}

ReconstructionConfig config_from(const Options& o) {
  ReconstructionConfig cfg;
  cfg.k_max = o.kmax;
  cfg.strict = o.strict;
  validate_config(cfg);
  return cfg;
}

int cmd_reconstruct(const Options& o, Report& r, std::ostream& err) {
  if (o.dump_file.empty()) throw ParseError("reconstruct needs --dump FILE");
  r = base_report("reconstruct", o);
  r.params.emplace_back("kmax", o.kmax);
  r.params.emplace_back("strict", o.strict);
  const ReconstructionConfig cfg = config_from(o);
  const std::string text = read_text_file(o.dump_file);
  r.inputs.emplace_back(o.dump_file, fnv1a(text));
  const AbstractSemiring sr = parse_semiring_json(text);
  try {
    const ReconstructionReport rep = reconstruct(sr, cfg);
    fill_reconstruction(r, rep);
    r.pass = 1;
    return kOk;
  } catch (const ReconstructionError& e) {
    r.log.push_back(e.what());
    if (e.kind() == ReconstructionError::Kind::kInconsistent) {
      r.status = "inconsistent";
      r.fail = 1;
      return kInconsistent;
    }
    r.status = "inconclusive";
    r.inconclusive = 1;
    err << "warning: " << e.what() << "\n";
    return o.strict ? kInconclusive : kOk;
  }
}

// -- verify-duality ----------------------------------------------------------

int cmd_verify(const Options& o, Report& r, std::ostream& err) {
  const LoadedDatum d = load_datum(o);
  r = base_report("verify-duality", o);
  r.inputs.emplace_back(d.label, d.digest);
  const ReconstructionConfig cfg = config_from(o);
  const RootDatum dual = dual_root_datum(d.datum);
  AbstractSemiring sr;
  if (!o.dump_file.empty()) {
    const std::string text = read_text_file(o.dump_file);
    r.inputs.emplace_back(o.dump_file, fnv1a(text));
    sr = parse_semiring_json(text);
  } else {
    long long bound = o.bound;
    if (bound < 0) {
      if (o.fixture.empty()) throw ParseError("verify-duality needs --bound N for a datum file");
      bound = default_window(o.fixture);
    }
    r.params.emplace_back("bound", bound);
    r.params.emplace_back("seed", o.seed);
    sr = dump_semiring(dual, bound, o.seed).semiring;
    r.summary.emplace_back("dump_ids", static_cast<Int>(sr.size()));
    r.summary.emplace_back("dump_products", static_cast<Int>(sr.entries().size()));
  }
  r.params.emplace_back("kmax", o.kmax);
  r.params.emplace_back("strict", o.strict);
  try {
    const ReconstructionReport rep = reconstruct(sr, cfg);
    fill_reconstruction(r, rep);
    const auto iso = based_iso(rep.recovered.datum, dual);
    if (!iso) {
      r.status = "fail";
      r.fail = 1;
      r.log.push_back("no based isomorphism between the recovered datum and the dual datum");
      return kInconsistent;
    }
    Table m{"isomorphism", {"row"}, {}};
    for (const auto& row : *iso) m.rows.push_back({Json(row)});
    r.tables.push_back(std::move(m));
    r.status = "pass";
    r.pass = 1;
    return kOk;
  } catch (const ReconstructionError& e) {
    r.log.push_back(e.what());
    if (e.kind() == ReconstructionError::Kind::kInconsistent) {
      r.status = "fail";
      r.fail = 1;
      return kInconsistent;
    }
    r.status = "inconclusive";
    r.inconclusive = 1;
    err << "warning: " << e.what() << "\n";
    return o.strict ? kInconclusive : kOk;
  }
}

// -- prv ---------------------------------------------------------------------

int cmd_prv(const Options& o, Report& r) {
  const LoadedDatum d = load_datum(o);
  if (o.trials < 0) throw ParseError("--trials must be nonnegative");
  r = base_report("prv", o);
  r.params.emplace_back("trials", o.trials);
  r.params.emplace_back("seed", o.seed);
  r.inputs.emplace_back(d.label, d.digest);
  const RootDatum& rd = d.datum;
  RepresentationRing ring(rd);
  // small dominant weights: every coordinate within [-2, 2]
  const auto pool = dominant_box(rd, 2);
  std::mt19937_64 gen(o.seed);
  Table t{"trials", {"trial", "mus", "words", "lambda", "mult"}, {}};
  std::optional<BigInt> min_mult;
  for (long long trial = 0; trial < o.trials; ++trial) {
    const std::size_t k = 1 + gen() % 3;
    std::vector<Weight> mus;
    std::vector<WeylWord> words;
    Json mj = Json::array(), wj = Json::array();
    for (std::size_t i = 0; i < k; ++i) {
      mus.push_back(pool[gen() % pool.size()]);
      WeylWord w;
      const std::size_t len = gen() % 6;
      for (std::size_t j = 0; j < len && rd.semisimple_rank() > 0; ++j)
        w.letters.push_back(static_cast<int>(gen() % static_cast<std::size_t>(rd.semisimple_rank())));
      words.push_back(w);
      mj.push_back(weight_json(mus.back().coords));
      wj.push_back(Json(w.letters));
    }
    const PrvResult res = prv_multiplicity(ring, mus, words);
    if (!min_mult || res.mult < *min_mult) min_mult = res.mult;
    if (res.mult >= 1) ++r.pass;
    else ++r.fail;
    t.rows.push_back({trial, mj, wj, weight_json(res.lambda.coords), big_json(res.mult)});
  }
  r.summary.emplace_back("min_mult", min_mult ? big_json(*min_mult) : Json(nullptr));
  r.tables.push_back(std::move(t));
  if (r.fail > 0) {
    r.status = "fail";
    return kInconsistent;
  }
  return kOk;
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_file, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + o.out_file + "'");
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root data, representation rings and their Satake shadows"};
  app.require_subcommand(1);
  Options o;
  auto add_datum = [&](CLI::App* sub) {
    sub->add_option("--datum", o.datum_file, "root datum JSON file");
    sub->add_option("--fixture", o.fixture, "shipped datum: SL2 PGL2 GL2 SL3 PGL3 Sp4 G2");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("--out", o.out_file, "output file (default stdout)");
  };
  auto* decompose = app.add_subcommand("decompose", "tensor product table with geometric columns");
  add_datum(decompose);
  add_format(decompose);
  // raw strings: the default container parsing would split "[1,0]"
  decompose
      ->add_option(
          "--mu",
          [&](const CLI::results_t& res) {
            o.mus.insert(o.mus.end(), res.begin(), res.end());
            return true;
          },
          "dominant weight, e.g. 1,0 (repeatable)")
      ->type_size(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->delimiter('\0');
  auto* orbits = app.add_subcommand("orbits", "dominant coweights, orbit dimensions and covering relations");
  add_datum(orbits);
  add_format(orbits);
  orbits->add_option("--bound", o.bound, "coordinate bound");
  auto* dump = app.add_subcommand("dump", "anonymized semiring dump as JSON");
  add_datum(dump);
  dump->add_option("--bound", o.bound, "height bound of the window");
  dump->add_option("--seed", o.seed, "anonymization seed");
  dump->add_option("--out", o.out_file, "output file (default stdout)");
  dump->add_option("--truth", o.truth_file, "also write the id -> weight labeling here");
  auto* recon = app.add_subcommand("reconstruct", "recover a based root datum from a dump");
  recon->add_option("--dump", o.dump_file, "semiring dump JSON file");
  recon->add_option("--kmax", o.kmax, "bound on tensor powers");
  recon->add_flag("--strict", o.strict, "exit 4 instead of warning when the window is insufficient");
  add_format(recon);
  auto* verify = app.add_subcommand("verify-duality", "dump the dual, reconstruct, compare");
  add_datum(verify);
  add_format(verify);
  verify->add_option("--dump", o.dump_file, "use this dump of the dual instead of generating one");
  verify->add_option("--bound", o.bound, "height bound of the generated dump");
  verify->add_option("--kmax", o.kmax, "bound on tensor powers");
  verify->add_option("--seed", o.seed, "anonymization seed");
  verify->add_flag("--strict", o.strict, "exit 4 instead of warning when the window is insufficient");
  auto* prv = app.add_subcommand("prv", "random PRV instances");
  add_datum(prv);
  add_format(prv);
  prv->add_option("--trials", o.trials, "number of instances");
  prv->add_option("--seed", o.seed, "random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  try {
    if (*dump) {
      std::string text;
      const int code = cmd_dump(o, text);
      emit(text, o, out);
      return code;
    }
    Report r;
    int code = kOk;
    if (*decompose) r = cmd_decompose(o);
    else if (*orbits) r = cmd_orbits(o);
    else if (*recon) code = cmd_reconstruct(o, r, err);
    else if (*verify) code = cmd_verify(o, r, err);
    else if (*prv) code = cmd_prv(o, r);
    emit(render(r, o.format), o, out);
    if (code == kInconsistent) err << "error: " << r.status << (r.log.empty() ? "" : ": " + r.log.back()) << "\n";
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const DatumError& e) {
    err << "error: invalid root datum: " << e.what() << "\n";
    return kDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const ReconstructionError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ReconstructionError::Kind::kInconsistent ? kInconsistent : kInconclusive;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace satake::cli
