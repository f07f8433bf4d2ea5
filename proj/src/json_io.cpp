#include "satake/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace satake::json_io {

namespace {

std::string weight_text(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

json to_json(const Cyclo& c) {
  json coeffs = json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(x.get_str());
  return json{{"modulus", c.modulus()}, {"coeffs", coeffs}};
}

Cyclo cyclo_from_json(const json& j) {
  int m = j.at("modulus").get<int>();
  Cyclo out;
  long k = 0;
  for (const auto& x : j.at("coeffs")) {
    mpq_class q(x.get<std::string>());
    q.canonicalize();
    if (q != 0) out += Cyclo(q) * Cyclo::zeta(m, k);
    ++k;
  }
  return out;
}

json to_json(const Laurent& l) {
  json terms = json::array();
  for (const auto& [e2, c] : l.terms()) terms.push_back(json{{"q2", e2}, {"coeff", to_json(c)}});
  return json{{"text", l.str()}, {"terms", terms}};
}

Laurent laurent_from_json(const json& j) {
  Laurent out;
  for (const auto& t : j.at("terms")) out += Laurent::monomial(t.at("q2").get<int>(), cyclo_from_json(t.at("coeff")));
  return out;
}

json to_json(const Weight& w) { return json(w.coords()); }

Weight weight_from_json(const json& j) { return Weight(j.get<std::vector<Int>>()); }

json to_json(const RatVec& v) {
  json num = json::array(), den = json::array();
  for (mpq_class x : v) {
    x.canonicalize();
    num.push_back(x.get_num().get_si());
    den.push_back(x.get_den().get_si());
  }
  return json{{"num", num}, {"den", den}};
}

RatVec ratvec_from_json(const json& j) {
  auto num = j.at("num").get<std::vector<long>>();
  auto den = j.at("den").get<std::vector<long>>();
  if (num.size() != den.size()) throw std::invalid_argument("num and den differ in length");
  RatVec v(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (den[i] == 0) throw std::invalid_argument("zero denominator");
    v[i] = mpq_class(num[i], den[i]);
    v[i].canonicalize();
  }
  return v;
}

json to_json(const IntMatrix& m) { return json(m.to_rows()); }

IntMatrix intmatrix_from_json(const json& j, std::size_t cols) {
  return IntMatrix::from_rows(j.get<std::vector<std::vector<Int>>>(), cols);
}

json to_json(const CoeffMatrix& m) {
  json rows = json::array(), cols = json::array(), entries = json::array();
  for (const auto& r : m.rows) rows.push_back(to_json(r));
  for (const auto& c : m.cols) cols.push_back(to_json(c));
  for (const auto& [ij, v] : m.entries)
    if (!v.is_zero()) entries.push_back(json{{"row", ij.first}, {"col", ij.second}, {"value", to_json(v)}});
  return json{{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

CoeffMatrix coeffmatrix_from_json(const json& j) {
  CoeffMatrix m;
  for (const auto& r : j.at("rows")) m.rows.push_back(weight_from_json(r));
  for (const auto& c : j.at("cols")) m.cols.push_back(weight_from_json(c));
  for (const auto& e : j.at("entries")) {
    auto i = e.at("row").get<std::size_t>(), k = e.at("col").get<std::size_t>();
    if (i >= m.rows.size() || k >= m.cols.size()) throw std::invalid_argument("matrix entry out of range");
    m.set(i, k, laurent_from_json(e.at("value")));
  }
  return m;
}

json to_json(const GAElement& f) {
  json terms = json::array();
  for (const auto& [w, c] : f.terms()) terms.push_back(json{{"weight", to_json(w)}, {"coeff", to_json(c)}});
  json out{{"terms", terms}};
  if (f.truncation())
    out["truncation"] = json{{"grading", to_json(f.truncation()->grading)}, {"bound", f.truncation()->bound}};
  return out;
}

GAElement gaelement_from_json(const json& j) {
  GAElement f;
  for (const auto& t : j.at("terms")) f.add_term(weight_from_json(t.at("weight")), laurent_from_json(t.at("coeff")));
  if (j.contains("truncation"))
    f = f.truncated(weight_from_json(j["truncation"].at("grading")), j["truncation"].at("bound").get<Int>());
  return f;
}

RootDatumTheta root_datum_from_json(const json& j) {
  if (j.contains("preset")) return RootDatumTheta::preset(j.at("preset").get<std::string>());
  const auto rank = j.at("rank").get<std::size_t>();
  std::vector<Weight> roots, coroots;
  for (const auto& r : j.at("roots")) roots.push_back(weight_from_json(r));
  for (const auto& r : j.at("coroots")) coroots.push_back(weight_from_json(r));
  for (const auto* v : {&roots, &coroots})
    for (const auto& w : *v)
      if (w.size() != rank) throw std::invalid_argument("root datum vector of the wrong rank");
  IntMatrix theta = j.contains("theta") ? intmatrix_from_json(j["theta"], rank) : IntMatrix::identity(rank);
  return RootDatumTheta(j.value("name", std::string("custom")), rank, std::move(roots), std::move(coroots),
                        j.at("positive").get<std::vector<int>>(), theta);
}

json to_json(const NormalizerElement& n) {
  json word = json::array();
  for (const auto& [i, e] : n.word) word.push_back(json::array({i, e}));
  return json{{"torus", to_json(n.torus)}, {"word", word}};
}

NormalizerElement normalizer_from_json(const json& j) {
  NormalizerElement n;
  n.torus = ratvec_from_json(j.at("torus"));
  for (const auto& x : j.at("word")) {
    int e = x.at(1).get<int>();
    if (e != 1 && e != -1) throw std::invalid_argument("Tits word exponents must be +-1");
    n.word.push_back({x.at(0).get<int>(), e});
  }
  return n;
}

json to_json(const EndoscopicDatum& e) {
  json roots = json::array();
  for (int k : e.roots_H) roots.push_back(to_json(e.G->roots()[k]));
  return json{{"preset", e.G->name()}, {"label", e.label}, {"s", to_json(e.s)}, {"w_dot", to_json(e.w_dot)},
              {"roots_H", roots}};
}

EndoscopicDatum endoscopic_datum_from_json(const json& j) {
  auto G = std::make_shared<const RootDatumTheta>(RootDatumTheta::preset(j.at("preset").get<std::string>()));
  NormalizerElement n;
  if (j.contains("w_dot")) {
    n = normalizer_from_json(j["w_dot"]);
  } else {
    n.torus = RatVec(G->rank(), 0);
  }
  return make_endoscopic_datum(G, ratvec_from_json(j.at("s")), n, j.value("label", std::string()));
}

json to_json(const TransferData& d) {
  return json{{"u_rank", d.u_rank},         {"phi_star", to_json(d.phi_star)}, {"iota_star", to_json(d.iota_star)},
              {"epsilon", to_json(d.epsilon)}, {"B_adapted", d.B_adapted},       {"B1", d.B1},
              {"w_dot", to_json(d.w_dot)},  {"route", d.route}};
}

TransferData transfer_data_from_json(const json& j, std::size_t rank) {
  TransferData d;
  d.u_rank = j.at("u_rank").get<std::size_t>();
  d.phi_star = d.u_rank ? intmatrix_from_json(j.at("phi_star"), rank) : IntMatrix(0, rank);
  d.iota_star = d.u_rank ? intmatrix_from_json(j.at("iota_star"), rank) : IntMatrix(0, rank);
  if (d.phi_star.rows() != d.u_rank || d.iota_star.rows() != d.u_rank)
    throw std::invalid_argument("lattice maps do not have u_rank rows");
  d.epsilon = ratvec_from_json(j.at("epsilon"));
  d.B_adapted = j.at("B_adapted").get<std::vector<int>>();
  d.B1 = j.at("B1").get<std::vector<int>>();
  d.w_dot = normalizer_from_json(j.at("w_dot"));
  d.route = j.value("route", std::string("manual"));
  return d;
}

std::string to_csv(const CoeffMatrix& m) {
  std::ostringstream os;
  os << "row,col,value\n";
  for (const auto& [ij, v] : m.entries)
    if (!v.is_zero())
      os << csv_quote(weight_text(m.rows[ij.first])) << ',' << csv_quote(weight_text(m.cols[ij.second])) << ','
         << csv_quote(v.str()) << '\n';
  return os.str();
}

}  // namespace satake::json_io
