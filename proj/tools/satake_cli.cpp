// satake: command-line front end for the library.
//
// Exit codes: 0 success, 1 usage or input error, 2 validation failure.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "satake/endoscopy.hpp"
#include "satake/json_io.hpp"
#include "satake/partition.hpp"
#include "satake/spherical.hpp"

using namespace satake;
using satake::json_io::json;
namespace fs = std::filesystem;

namespace {

struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string preset, datum, endo, catalog, format = "json", lambda, param;
  Int max_height = 4, height_bound = 40;
  double q0 = 9.0;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

RootDatumTheta load_datum(const Options& o) {
  if (!o.preset.empty() && !o.datum.empty()) throw std::invalid_argument("give either --preset or --datum");
  if (!o.preset.empty()) return RootDatumTheta::preset(o.preset);
  if (!o.datum.empty()) return json_io::root_datum_from_json(read_json_file(o.datum));
  throw std::invalid_argument("a root datum is required (--preset or --datum)");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Weight parse_weight(const std::string& s, std::size_t rank) {
  std::vector<Int> v;
  for (const auto& t : split_list(s)) v.push_back(std::stoll(t));
  if (v.size() != rank) throw std::invalid_argument("--lambda needs " + std::to_string(rank) + " entries");
  return Weight(v);
}

RatVec parse_ratvec(const std::string& s, std::size_t rank) {
  RatVec v;
  for (const auto& t : split_list(s)) {
    mpq_class x;
    if (x.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + t);
    x.canonicalize();
    v.push_back(x);
  }
  if (v.size() != rank) throw std::invalid_argument("--param needs " + std::to_string(rank) + " entries");
  return v;
}

void emit(const Options& o, const json& j, const std::string& csv) {
  if (o.format == "csv")
    std::cout << csv;
  else
    std::cout << j.dump(2) << '\n';
}

// ---- series cache

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

GAElement lowering_series(const RootDatumTheta& d, Int bound) {
  FactoredPartition p = restricted_determinant(d).invert_E().at_q_one().inverted();
  Weight g = lowering_grading(d);
  const char* dir = std::getenv("SATAKE_CACHE_DIR");
  if (!dir || !*dir) return expand(p, g, bound);

  std::ostringstream key;
  key << d.name() << '|' << p.str() << '|' << g.str();
  std::ostringstream name;
  name << "series-" << std::hex << fnv1a(key.str()) << std::dec << '-' << bound << ".json";
  fs::path file = fs::path(dir) / name.str();
  if (fs::exists(file)) {
    try {
      json j = read_json_file(file.string());
      if (j.value("key", std::string()) == key.str()) {
        GAElement s = json_io::gaelement_from_json(j.at("series"));
        if (s.truncation() && s.truncation()->grading == g && s.truncation()->bound >= bound) return s;
      }
    } catch (const std::exception&) {
      // unreadable entry: recompute and overwrite
    }
  }
  GAElement s = expand(p, g, bound);
  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << json{{"key", key.str()}, {"series", json_io::to_json(s)}}.dump() << '\n';
  }
  fs::rename(tmp, file, ec);
  return s;
}

// ---- commands

int cmd_character(const Options& o) {
  RootDatumTheta d = load_datum(o);
  std::vector<Weight> lambdas = o.lambda.empty() ? index_set(d, o.max_height)
                                                 : std::vector<Weight>{parse_weight(o.lambda, d.rank())};
  Int top = 0;
  for (const auto& l : lambdas) {
    if (!d.in_Y(l) || !d.is_dominant(l)) throw std::invalid_argument("weight " + l.str() + " is not dominant");
    top = std::max(top, d.height2(l));
  }
  const Int extra = 2;
  GAElement series = lowering_series(d, 2 * top + extra);
  Weight g = lowering_grading(d);

  json chars = json::array();
  std::ostringstream csv;
  csv << "lambda,weight,value\n";
  for (const auto& l : lambdas) {
    const Int h = d.height2(l);
    GAElement t = (alt_symmetrize_J(d, GAElement::monomial(l)) * series).truncated(g, h + extra);
    bool clean = true;
    for (const auto& [w, c] : t.terms())
      if (dot(w, g) > h) clean = false;
    GAElement r = clean ? t.as_exact() : tau(d, l);
    chars.push_back(json{{"lambda", json_io::to_json(l)}, {"tau", json_io::to_json(r)}});
    for (const auto& [w, c] : r.terms())
      csv << '"' << l.str() << "\",\"" << w.str() << "\",\"" << c.str() << "\"\n";
  }
  emit(o, json{{"command", "character"}, {"datum", d.name()}, {"characters", chars}}, csv.str());
  return 0;
}

int cmd_matrix(const Options& o, const std::string& command) {
  RootDatumTheta d = load_datum(o);
  if (o.max_height < 0) throw std::invalid_argument("--max-height must be non-negative");
  auto index = index_set(d, o.max_height);
  CoeffMatrix m;
  if (command == "satake")
    m = satake_matrix(d, index);
  else if (command == "inverse-satake")
    m = kato_lusztig_matrix(d, index);
  else if (command == "weight-mult")
    m = weight_mult_matrix(d, index);
  else
    m = van_leeuwen_inverse(d, index);
  emit(o, json{{"command", command}, {"datum", d.name()}, {"max_height", o.max_height}, {"matrix", json_io::to_json(m)}},
       json_io::to_csv(m));
  return 0;
}

struct LoadedEndo {
  EndoscopicDatum endo;
  TransferData data;
};

LoadedEndo load_endo(const Options& o) {
  if (!o.endo.empty() && !o.catalog.empty()) throw std::invalid_argument("give either --endo or --catalog");
  if (!o.catalog.empty()) {
    EndoscopicDatum e = catalog_datum(o.catalog);
    return {e, construct_transfer_data(e)};
  }
  if (o.endo.empty()) throw std::invalid_argument("endoscopic datum required (--endo or --catalog)");
  json j = read_json_file(o.endo);
  EndoscopicDatum e;
  try {
    e = json_io::endoscopic_datum_from_json(j);
  } catch (const json::exception& ex) {
    throw std::invalid_argument(o.endo + ": " + ex.what());
  }
  if (j.contains("transfer")) return {e, json_io::transfer_data_from_json(j["transfer"], e.G->rank())};
  return {e, construct_transfer_data(e)};
}

json report_json(const TransferReport& r) {
  return json{{"conjugacy_proxy", r.conjugacy_proxy}, {"regularity", r.regularity},
              {"partition_identity", r.partition_identity}, {"pinning", r.pinning}, {"messages", r.messages},
              {"ok", r.ok()}};
}

int cmd_validate(const Options& o) {
  std::vector<std::string> names;
  if (o.catalog == "all") names = endoscopic_catalog();
  json results = json::array();
  bool all_ok = true;
  auto run = [&](const std::function<LoadedEndo()>& load, const std::string& label) {
    json r{{"label", label}};
    try {
      LoadedEndo le = load();
      TransferReport rep = validate_transfer_data(le.endo, le.data);
      r["route"] = le.data.route;
      r["transfer"] = json_io::to_json(le.data);
      r["report"] = report_json(rep);
      all_ok = all_ok && rep.ok();
    } catch (const std::runtime_error& e) {
      r["report"] = json{{"ok", false}, {"messages", {std::string("unsupported: ") + e.what()}}};
      all_ok = false;
    }
    results.push_back(r);
  };
  if (!names.empty()) {
    for (const auto& n : names) {
      Options one = o;
      one.catalog = n;
      run([one] { return load_endo(one); }, n);
    }
  } else {
    // malformed input is a usage error, not a validation failure
    json j = o.endo.empty() ? json() : read_json_file(o.endo);
    std::string label = o.catalog.empty() ? j.value("label", o.endo) : o.catalog;
    run([&o] { return load_endo(o); }, label);
  }
  std::ostringstream csv;
  csv << "label,ok\n";
  for (const auto& r : results) csv << '"' << r["label"].get<std::string>() << "\"," << r["report"]["ok"] << '\n';
  emit(o, json{{"command", "validate-data"}, {"results", results}, {"ok", all_ok}}, csv.str());
  if (!all_ok) throw ValidationFailure("transfer data failed validation");
  return 0;
}

int cmd_branch(const Options& o, bool base_change) {
  LoadedEndo le = load_endo(o);
  TransferReport rep = validate_transfer_data(le.endo, le.data);
  if (!rep.ok()) {
    std::cerr << report_json(rep).dump(2) << '\n';
    throw ValidationFailure("transfer data failed validation");
  }
  auto index_G = index_set(*le.endo.G, o.max_height);
  auto index_H = branching_columns(le.endo, le.data, index_G);
  CoeffMatrix m = base_change ? base_change_matrix(le.endo, le.data, index_G, index_H)
                              : branching_matrix(le.endo, le.data, index_G, index_H);
  emit(o,
       json{{"command", base_change ? "base-change" : "branch"},
            {"datum", json_io::to_json(le.endo)},
            {"transfer", json_io::to_json(le.data)},
            {"matrix", json_io::to_json(m)}},
       json_io::to_csv(m));
  return 0;
}

int cmd_plancherel(const Options& o) {
  RootDatumTheta d = load_datum(o);
  if (!(o.q0 > 1)) throw std::invalid_argument("--q must exceed 1");
  if (o.height_bound <= 0) throw std::invalid_argument("--height-bound must be positive");
  auto index = index_set(d, o.max_height);
  const double tol = 1e-6;
  double worst = 0;
  json pairs = json::array();
  std::ostringstream csv;
  csv << "lambda,mu,value,expected,error\n";
  for (const auto& l : index)
    for (const auto& m : index) {
      std::complex<double> v = plancherel_pair(d, l, m, o.q0, o.height_bound);
      std::complex<double> expected = 0;
      if (l == m)
        expected = (c_constant(d, m) * Laurent::monomial(static_cast<int>(d.height2(m)))).evaluate(o.q0);
      double err = std::abs(v - expected);
      worst = std::max(worst, err);
      pairs.push_back(json{{"lambda", json_io::to_json(l)},
                           {"mu", json_io::to_json(m)},
                           {"value", {v.real(), v.imag()}},
                           {"expected", expected.real()},
                           {"error", err}});
      csv << '"' << l.str() << "\",\"" << m.str() << "\"," << v.real() << ',' << expected.real() << ',' << err
          << '\n';
    }
  bool ok = worst < tol;
  emit(o,
       json{{"command", "plancherel-check"},
            {"datum", d.name()},
            {"q", o.q0},
            {"height_bound", o.height_bound},
            {"tolerance", tol},
            {"pairs", pairs},
            {"max_error", worst},
            {"ok", ok}},
       csv.str());
  if (!ok) throw ValidationFailure("Plancherel check exceeded the tolerance");
  return 0;
}

int cmd_l_function(const Options& o) {
  RootDatumTheta d = load_datum(o);
  RatVec param = o.param.empty() ? RatVec(d.rank(), 0) : parse_ratvec(o.param, d.rank());
  FactoredPartition p = restricted_determinant(d).inverted();
  LFunction l = l_function_evaluate(p, param);
  std::ostringstream csv;
  csv << "part,value\n\"numerator\",\"" << l.numerator.str() << "\"\n\"denominator\",\"" << l.denominator.str()
      << "\"\n";
  emit(o,
       json{{"command", "l-function"},
            {"datum", d.name()},
            {"parameter", json_io::to_json(param)},
            {"partition", p.str()},
            {"numerator", json_io::to_json(l.numerator)},
            {"denominator", json_io::to_json(l.denominator)},
            {"text", l.str()}},
       csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted characters, Satake transforms and endoscopic branching"};
  app.require_subcommand(1);
  Options o;

  auto datum_opts = [&](CLI::App* s) {
    s->add_option("--preset", o.preset, "preset root datum, e.g. A2 or A2.sc~2");
    s->add_option("--datum", o.datum, "root datum JSON file");
  };
  auto endo_opts = [&](CLI::App* s) {
    s->add_option("--endo", o.endo, "endoscopic datum JSON file");
    s->add_option("--catalog", o.catalog, "named catalog datum");
  };
  auto format_opt = [&](CLI::App* s) {
    s->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto height_opt = [&](CLI::App* s, const char* name) {
    s->add_option(name, o.max_height, "largest <lambda, 2 rho^vee>")->check(CLI::NonNegativeNumber);
  };

  auto* character = app.add_subcommand("character", "twisted characters tau_lambda");
  datum_opts(character);
  height_opt(character, "--max-height");
  character->add_option("--lambda", o.lambda, "a single dominant weight, comma separated");
  format_opt(character);

  std::vector<std::pair<std::string, CLI::App*>> matrices;
  for (const char* name : {"satake", "inverse-satake", "weight-mult", "invert-mult"}) {
    auto* s = app.add_subcommand(name, std::string(name) + " matrix on a saturated set");
    datum_opts(s);
    height_opt(s, "--max-height");
    format_opt(s);
    matrices.emplace_back(name, s);
  }

  auto* branch = app.add_subcommand("branch", "endoscopic branching matrix");
  auto* base = app.add_subcommand("base-change", "base-change matrix");
  for (auto* s : {branch, base}) {
    endo_opts(s);
    height_opt(s, "--max-height");
    format_opt(s);
  }

  auto* validate = app.add_subcommand("validate-data", "validate transfer data (--catalog all for the catalog)");
  endo_opts(validate);
  format_opt(validate);

  auto* planch = app.add_subcommand("plancherel-check", "orthogonality of f^_lambda at a numeric q");
  datum_opts(planch);
  height_opt(planch, "--max");
  planch->add_option("--q", o.q0, "numeric q > 1");
  planch->add_option("--height-bound", o.height_bound, "density series bound");
  format_opt(planch);

  auto* lfun = app.add_subcommand("l-function", "L-function of the restricted determinant at a parameter");
  datum_opts(lfun);
  lfun->add_option("--param", o.param, "torus parameter as rationals mod 1, comma separated");
  format_opt(lfun);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (character->parsed()) return cmd_character(o);
    for (const auto& [name, s] : matrices)
      if (s->parsed()) return cmd_matrix(o, name);
    if (branch->parsed()) return cmd_branch(o, false);
    if (base->parsed()) return cmd_branch(o, true);
    if (validate->parsed()) return cmd_validate(o);
    if (planch->parsed()) return cmd_plancherel(o);
    if (lfun->parsed()) return cmd_l_function(o);
  } catch (const ValidationFailure& e) {
    std::cerr << "validation failed: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
