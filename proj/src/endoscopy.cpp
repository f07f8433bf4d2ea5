#include "satake/endoscopy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace satake {

namespace {

std::vector<int> letters(const NormalizerElement& n) {
  std::vector<int> out;
  for (const auto& [i, e] : n.word) out.push_back(i);
  return out;
}

IntMatrix power(const IntMatrix& m, int k) {
  IntMatrix r = IntMatrix::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

IntMatrix inverse_in_weyl(const RootDatumTheta& G, const IntMatrix& m) {
  auto word = G.reduced_word(m);
  std::reverse(word.begin(), word.end());
  return G.word_matrix(word);
}

int highest_root(const RootDatumTheta& G) {
  int best = -1;
  for (int k : G.positive_roots())
    if (best < 0 || G.height2(G.roots()[k]) > G.height2(G.roots()[best])) best = k;
  return best;
}

RatVec apply_dual(const IntMatrix& w, const RatVec& v) {
  return RatMatrix(RootDatumTheta::dual_matrix(w)).apply(v);
}

// det(1 - z A) as a polynomial in z = q, via Newton's identities.
Laurent char_poly(const RatMatrix& a) {
  std::size_t n = a.rows();
  std::vector<mpq_class> p(n + 1, 0), e(n + 1, 0);
  RatMatrix pw = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    pw = pw * a;
    for (std::size_t i = 0; i < n; ++i) p[k] += pw(i, i);
  }
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    mpq_class s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += ((i % 2) ? 1 : -1) * e[k - i] * p[i];
    e[k] = s / static_cast<long>(k);
  }
  Laurent out;
  for (std::size_t k = 0; k <= n; ++k)
    out += Laurent::q_pow(static_cast<int>(k)) * Laurent(mpq_class((k % 2 ? -1 : 1) * e[k]));
  return out;
}

// roots whose theta_1-orbit sum is nonzero (or zero when want_zero)
std::vector<int> split_by_norm(const RootDatumTheta& G, const std::vector<int>& B, const IntMatrix& action,
                               const IntMatrix& map, bool want_zero) {
  std::vector<int> out;
  for (int k : B) {
    Weight n = map.apply(RootDatumTheta::orbit_sum(action, G.roots()[k]));
    if (n.is_zero() == want_zero) out.push_back(k);
  }
  return out;
}

MonomialAction eps_theta(const EndoscopicDatum& endo, const TransferData& D) {
  return endo.lie->torus(D.epsilon).after(endo.lie->theta());
}

TransferData trivial_data(const EndoscopicDatum& endo) {
  const auto& G = *endo.G;
  TransferData D;
  D.u_rank = G.rank();
  D.phi_star = D.iota_star = IntMatrix::identity(G.rank());
  D.epsilon = endo.w_dot.torus;
  D.B_adapted = D.B1 = G.positive_roots();
  D.w_dot = endo.w_dot;
  D.route = "trivial";
  return D;
}

// Type-A components of a set of simple positions, or nullopt.
std::optional<std::vector<std::vector<int>>> type_a_components(const RootDatumTheta& G, const std::vector<int>& J) {
  std::set<int> js(J.begin(), J.end());
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (int j : J) {
    if (seen.count(j)) continue;
    std::vector<int> c{j};
    seen.insert(j);
    for (std::size_t k = 0; k < c.size(); ++k) {
      int deg = 0;
      for (int i : js) {
        if (i == c[k] || G.cartan(c[k], i) == 0) continue;
        if (G.cartan(c[k], i) * G.cartan(i, c[k]) != 1) return std::nullopt;
        ++deg;
        if (seen.insert(i).second) c.push_back(i);
      }
      if (deg > 2) return std::nullopt;
    }
    std::sort(c.begin(), c.end());
    comps.push_back(c);
  }
  return comps;
}

// w' = w1 w w1^{-1} a Coxeter element of a type-A standard Levi.
std::optional<TransferData> levi_data(const EndoscopicDatum& endo) {
  const auto& G = *endo.G;
  const auto& W = G.weyl();
  for (std::size_t x = 0; x < W.size(); ++x) {
    const IntMatrix& w1 = W.elements[x];
    IntMatrix w1inv = inverse_in_weyl(G, w1);
    IntMatrix wp = w1 * endo.w * w1inv;
    auto rw = G.reduced_word(wp);
    std::set<int> J(rw.begin(), rw.end());
    if (J.size() != rw.size()) continue;
    auto comps = type_a_components(G, {J.begin(), J.end()});
    if (!comps) continue;

    TransferData D;
    IntMatrix levi(J.size(), G.rank());
    std::size_t row = 0;
    for (int j : J) {
      for (std::size_t c = 0; c < G.rank(); ++c) levi(row, c) = G.roots()[G.simple_roots()[j]][c];
      ++row;
    }
    auto ker = integer_kernel(levi);
    D.u_rank = ker.size();
    D.phi_star = IntMatrix(ker.size(), G.rank());
    for (std::size_t i = 0; i < ker.size(); ++i)
      for (std::size_t c = 0; c < G.rank(); ++c) D.phi_star(i, c) = ker[i][c];
    D.epsilon = RatVec(G.rank(), 0);
    for (const auto& comp : *comps) {
      std::set<int> cs(comp.begin(), comp.end());
      mpq_class scale(1, 2 * static_cast<long>(comp.size() + 1));
      for (int k : G.positive_roots()) {
        const auto& sc = G.simple_coords(k);
        bool inside = true;
        for (std::size_t i = 0; i < sc.size(); ++i)
          if (sc[i] != 0 && !cs.count(static_cast<int>(i))) inside = false;
        if (!inside) continue;
        for (std::size_t c = 0; c < G.rank(); ++c) D.epsilon[c] += scale * static_cast<long>(G.coroots()[k][c]);
      }
    }
    D.epsilon = mod_one(D.epsilon);
    D.iota_star = D.phi_star * w1;
    D.B1 = G.positive_roots();
    for (int k : G.positive_roots()) D.B_adapted.push_back(G.act_on_root(w1inv, k));
    std::sort(D.B_adapted.begin(), D.B_adapted.end());
    auto w1word = G.reduced_word(w1);
    for (auto it = w1word.rbegin(); it != w1word.rend(); ++it) D.w_dot.word.push_back({*it, -1});
    for (int i : rw) D.w_dot.word.push_back({i, 1});
    for (int i : w1word) D.w_dot.word.push_back({i, 1});
    D.w_dot.torus = RatVec(G.rank(), 0);
    D.route = (ker.empty() ? "coxeter" : "levi") + std::string(x ? "+conjugate" : "");
    return D;
  }
  return std::nullopt;
}

// w = w1^{-1} theta w1 theta^{-1}: conjugate to the trivial base case.
std::optional<TransferData> twisted_conjugate_data(const EndoscopicDatum& endo) {
  const auto& G = *endo.G;
  std::vector<int> pos = G.positive_roots();
  RootDatumTheta abs(G.name() + "(abs)", G.rank(), G.roots(), G.coroots(), pos, IntMatrix::identity(G.rank()));
  IntMatrix theta_inv = power(G.theta(), G.theta_order() - 1);
  const auto& W = abs.weyl();
  for (std::size_t x = 0; x < W.size(); ++x) {
    const IntMatrix& w1 = W.elements[x];
    IntMatrix w1inv = inverse_in_weyl(G, w1);
    if (!(w1inv * G.theta() * w1 * theta_inv == endo.w)) continue;
    TransferData D;
    D.u_rank = G.rank();
    D.phi_star = IntMatrix::identity(G.rank());
    D.iota_star = w1;
    D.B1 = G.positive_roots();
    for (int k : G.positive_roots()) D.B_adapted.push_back(G.act_on_root(w1inv, k));
    std::sort(D.B_adapted.begin(), D.B_adapted.end());
    auto w1word = G.reduced_word(w1);
    D.w_dot.torus = endo.w_dot.torus;
    for (auto it = w1word.rbegin(); it != w1word.rend(); ++it) D.w_dot.word.push_back({*it, -1});
    for (int i : w1word) D.w_dot.word.push_back({G.simple_perm(i), 1});
    D.epsilon = mod_one(apply_dual(w1, endo.w_dot.torus));
    D.route = "trivial+conjugate";
    return D;
  }
  return std::nullopt;
}

}  // namespace

EndoscopicDatum make_endoscopic_datum(std::shared_ptr<const RootDatumTheta> G, const RatVec& s,
                                      const NormalizerElement& w_dot, std::string label) {
  if (s.size() != G->rank() || w_dot.torus.size() != G->rank())
    throw std::invalid_argument("torus element of the wrong rank");
  EndoscopicDatum e;
  e.label = std::move(label);
  e.G = G;
  e.lie = std::make_shared<LieModel>(*G);
  e.s = mod_one(s);
  e.w_dot = w_dot;
  e.w_dot.torus = mod_one(w_dot.torus);
  e.w = G->word_matrix(letters(w_dot));
  e.theta1 = e.w * G->theta();
  if (!matrix_order(e.theta1)) throw std::invalid_argument("w theta does not have finite order");
  for (std::size_t k = 0; k < G->roots().size(); ++k)
    if (pair(G->roots()[k], e.s).get_den() == 1) e.roots_H.push_back(static_cast<int>(k));
  std::set<int> hs(e.roots_H.begin(), e.roots_H.end());
  for (int k : e.roots_H)
    if (!hs.count(G->act_on_root(e.theta1, k))) throw std::invalid_argument("roots of H are not w theta-stable");
  std::set<Weight> ext;
  for (int i : G->simple_roots()) ext.insert(G->roots()[i]);
  ext.insert(-G->roots()[highest_root(*G)]);
  for (const auto& v : ext)
    if (!ext.count(e.w.apply(v))) throw std::invalid_argument("w does not preserve the extended Dynkin diagram");
  return e;
}

TransferData construct_transfer_data(const EndoscopicDatum& endo) {
  const auto& G = *endo.G;
  if (endo.w.is_identity()) return trivial_data(endo);
  if (G.theta_trivial()) {
    if (auto D = levi_data(endo)) return *D;
  } else if (auto D = twisted_conjugate_data(endo)) {
    return *D;
  }
  throw std::runtime_error("unsupported reduction path for " + (endo.label.empty() ? G.name() : endo.label) +
                           "; supply transfer data explicitly");
}

TransferReport validate_transfer_data(const EndoscopicDatum& endo, const TransferData& D) {
  const auto& G = *endo.G;
  TransferReport rep;
  std::size_t r = G.rank();
  if (D.phi_star.rows() != D.u_rank || D.phi_star.cols() != r || D.iota_star.rows() != D.u_rank ||
      D.iota_star.cols() != r || D.epsilon.size() != r) {
    rep.messages.push_back("shapes are incompatible");
    return rep;
  }

  rep.regularity = true;
  for (const auto& a : G.restricted_roots())
    if (D.phi_star.apply(a.vector).is_zero() && character_value(a.vector, D.epsilon) == Cyclo(1)) {
      rep.regularity = false;
      rep.messages.push_back("regularity fails at restricted root " + a.vector.str());
    }

  MonomialAction twisted = endo.lie->twisted(D.w_dot);
  IntMatrix theta1 = G.word_matrix(letters(D.w_dot)) * G.theta();
  MonomialAction et = eps_theta(endo, D);

  rep.pinning = true;
  std::set<int> adapted(D.B_adapted.begin(), D.B_adapted.end());
  std::set<int> pos_H;
  for (int k : endo.roots_H)
    if (adapted.count(k)) pos_H.insert(k);
  for (int k : pos_H) {
    if (!pos_H.count(twisted.perm[k])) {
      rep.pinning = false;
      rep.messages.push_back("w theta does not preserve the positive roots of H");
      break;
    }
    bool simple = true;
    for (int a : pos_H)
      if (auto b = G.root_index(G.roots()[k] - G.roots()[a]); b && pos_H.count(*b)) simple = false;
    if (simple && !(twisted.orbit_eigenvalue(k) == Cyclo(1))) {
      rep.pinning = false;
      rep.messages.push_back("w theta moves the pinning of H at root " + G.roots()[k].str());
    }
  }
  try {
    auto left = adjoint_determinant(G, et, G.theta(), split_by_norm(G, D.B1, G.theta(), D.phi_star, false))
                    .mapped(D.phi_star);
    auto right = adjoint_determinant(G, twisted, theta1, split_by_norm(G, D.B_adapted, theta1, IntMatrix::identity(r), false))
                     .mapped(D.iota_star);
    rep.partition_identity = expand_exact(left, D.u_rank) == expand_exact(right, D.u_rank);
    if (!rep.partition_identity) rep.messages.push_back("partition identity fails: " + left.str() + " vs " + right.str());
  } catch (const std::exception& ex) {
    rep.messages.push_back(std::string("partition identity: ") + ex.what());
  }

  try {
    std::vector<int> all(G.roots().size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
    auto lhs = char_poly(twisted.cartan) *
               expand_exact(adjoint_determinant(G, twisted, theta1, all).mapped(D.iota_star), D.u_rank);
    auto rhs = char_poly(et.cartan) *
               expand_exact(adjoint_determinant(G, et, G.theta(), all).mapped(D.phi_star), D.u_rank);
    rep.conjugacy_proxy = lhs == rhs;
    if (!rep.conjugacy_proxy) rep.messages.push_back("adjoint characteristic polynomials differ");
  } catch (const std::exception& ex) {
    rep.messages.push_back(std::string("conjugacy proxy: ") + ex.what());
  }
  return rep;
}

namespace {

std::vector<int> partition_roots(const EndoscopicDatum& endo, const TransferData& D, const IntMatrix& theta1) {
  std::set<int> hs(endo.roots_H.begin(), endo.roots_H.end());
  std::vector<int> out;
  for (int k : split_by_norm(*endo.G, D.B_adapted, theta1, IntMatrix::identity(endo.G->rank()), false))
    if (!hs.count(k)) out.push_back(k);
  return out;
}

IntMatrix theta1_of(const EndoscopicDatum& endo, const TransferData& D) {
  return endo.G->word_matrix(letters(D.w_dot)) * endo.G->theta();
}

}  // namespace

FactoredPartition endoscopic_partition(const EndoscopicDatum& endo, const TransferData& D) {
  IntMatrix theta1 = theta1_of(endo, D);
  auto det = adjoint_determinant(*endo.G, endo.lie->twisted(D.w_dot), theta1, partition_roots(endo, D, theta1));
  return det.mapped(D.iota_star).inverted();
}

Weight endoscopic_grading(const EndoscopicDatum& endo, const TransferData& D) {
  auto p = endoscopic_partition(endo, D).invert_E();
  std::size_t u = D.u_rank;
  auto ok = [&](const Weight& g) {
    for (const auto& f : p.factors)
      if (dot(f.weight, g) <= 0) return false;
    return true;
  };
  if (ok(Weight(u))) return Weight(u);
  for (Int r = 1; r <= 12; ++r) {
    // lexicographic sweep of the box of radius r
    Weight g(u);
    std::function<std::optional<Weight>(std::size_t)> rec = [&](std::size_t i) -> std::optional<Weight> {
      if (i == u) {
        bool edge = false;
        for (std::size_t j = 0; j < u; ++j) edge = edge || g[j] == r || g[j] == -r;
        if (edge && ok(g)) return g;
        return std::nullopt;
      }
      for (Int x = -r; x <= r; ++x) {
        g[i] = x;
        if (auto found = rec(i + 1)) return found;
      }
      return std::nullopt;
    };
    if (auto found = rec(0)) return *found;
  }
  throw std::runtime_error("no grading separates the endoscopic partition function");
}

GAElement endoscopic_expansion(const EndoscopicDatum& endo, const TransferData& D, Int depth) {
  // E^{-1} evaluates at the inverse element, so the eigenvalues are conjugated too
  auto p = endoscopic_partition(endo, D).invert_E().at_q_one();
  for (auto& f : p.factors) f.zeta = f.zeta.conj();
  return expand(p, endoscopic_grading(endo, D), depth);
}

Cyclo d0_constant(const EndoscopicDatum& endo, const TransferData& D) {
  const auto& G = *endo.G;
  auto zero = split_by_norm(G, D.B1, G.theta(), D.phi_star, true);
  auto det = adjoint_determinant(G, eps_theta(endo, D), G.theta(), zero);
  Cyclo v(1);
  for (const auto& f : det.factors)
    for (int i = 0; i < f.mult; ++i) v *= Cyclo(1) - f.zeta.conj();
  if (v.is_zero()) throw std::domain_error("d0 vanishes: the data violate regularity");
  return v;
}

RootDatumTheta endoscopic_group(const EndoscopicDatum& endo, const TransferData& D) {
  const auto& G = *endo.G;
  std::set<int> adapted(D.B_adapted.begin(), D.B_adapted.end());
  std::vector<Weight> roots, coroots;
  std::vector<int> pos;
  for (int k : endo.roots_H) {
    if (adapted.count(k)) pos.push_back(static_cast<int>(roots.size()));
    roots.push_back(G.roots()[k]);
    coroots.push_back(G.coroots()[k]);
  }
  std::string name = (endo.label.empty() ? G.name() : endo.label) + ":H";
  return RootDatumTheta(name, G.rank(), roots, coroots, pos, theta1_of(endo, D));
}

GAElement restrict_character(const EndoscopicDatum& endo, const TransferData& D, const GAElement& f) {
  if (!f.is_exact()) throw std::invalid_argument("restrict_character needs an exact element");
  if (!f.is_zero() && f.terms().begin()->first.size() != endo.G->rank())
    throw std::invalid_argument("element of the wrong rank");
  GAElement out;
  for (const auto& [nu, c] : f.terms())
    out.add_term(D.phi_star.apply(nu), c * Laurent(character_value(nu, D.epsilon)));
  return out;
}

Weight iota_star(const TransferData& D, const Weight& mu) { return D.iota_star.apply(mu); }

GAElement lift_to_T1(const EndoscopicDatum& endo, const TransferData& D, const GAElement& f) {
  std::size_t r = endo.G->rank();
  IntMatrix shifted = theta1_of(endo, D);
  for (std::size_t i = 0; i < r; ++i) shifted(i, i) -= 1;
  auto K = integer_kernel(shifted);
  RatMatrix M(D.u_rank, K.size());
  for (std::size_t j = 0; j < K.size(); ++j) {
    Weight im = D.iota_star.apply(K[j]);
    for (std::size_t i = 0; i < D.u_rank; ++i) M(i, j) = static_cast<long>(im[i]);
  }
  GAElement out;
  for (const auto& [v, c] : f.terms()) {
    RatVec b(D.u_rank);
    for (std::size_t i = 0; i < D.u_rank; ++i) b[i] = static_cast<long>(v[i]);
    auto x = solve_rational(M, b);
    if (!x) throw std::logic_error("support leaves the image of iota*: " + v.str());
    Weight w(r);
    for (std::size_t j = 0; j < K.size(); ++j) {
      if ((*x)[j].get_den() != 1) throw std::logic_error("support leaves the image of iota*: " + v.str());
      w += (*x)[j].get_num().get_si() * K[j];
    }
    if (!(D.iota_star.apply(w) == v)) throw std::logic_error("iota* is not injective on the support");
    out.add_term(w, c);
  }
  return out;
}

std::vector<Weight> branching_columns(const EndoscopicDatum& endo, const TransferData& D,
                                      const std::vector<Weight>& index_G) {
  auto H = endoscopic_group(endo, D);
  std::set<Weight> cols;
  for (const auto& lambda : index_G) {
    auto lifted = lift_to_T1(endo, D, restrict_character(endo, D, tau(*endo.G, lambda)));
    for (const auto& [w, c] : lifted.terms())
      if (H.is_dominant(w) && !cols.count(w))
        for (const auto& below : H.dominant_below(w)) cols.insert(below);
  }
  std::vector<Weight> out(cols.begin(), cols.end());
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) { return H.index_less(a, b); });
  return out;
}

CoeffMatrix branching_matrix(const EndoscopicDatum& endo, const TransferData& D, const std::vector<Weight>& index_G,
                             const std::vector<Weight>& index_H) {
  const auto& G = *endo.G;
  require_saturated(G, index_G);
  Weight g = endoscopic_grading(endo, D);
  Cyclo d0 = d0_constant(endo, D);
  Laurent inv_d0(d0.inverse());

  struct Term {
    Weight shift;  // phi*(w.lambda)
    Laurent c;
  };
  std::vector<std::vector<Term>> terms(index_G.size());
  Int depth = 0;
  for (std::size_t i = 0; i < index_G.size(); ++i) {
    for (std::size_t w = 0; w < G.weyl().size(); ++w) {
      Weight nu = G.dot_action(static_cast<int>(w), index_G[i]);
      Laurent c(character_value(nu, D.epsilon) * Cyclo(G.weyl().length[w] % 2 ? -1 : 1));
      terms[i].push_back({D.phi_star.apply(nu), c});
    }
    for (const auto& mu : index_H)
      for (const auto& t : terms[i]) depth = std::max(depth, dot(iota_star(D, mu) - t.shift, g));
  }
  auto p = endoscopic_expansion(endo, D, depth);

  CoeffMatrix m(index_G, index_H);
  for (std::size_t i = 0; i < index_G.size(); ++i)
    for (std::size_t j = 0; j < index_H.size(); ++j) {
      Laurent v;
      Weight target = iota_star(D, index_H[j]);
      for (const auto& t : terms[i]) {
        Weight nu = target - t.shift;
        if (dot(nu, g) < 0) continue;
        v += t.c * p.coeff(nu);
      }
      m.set(i, j, v * inv_d0);
    }
  return m;
}

CoeffMatrix apply_transform_rule(const CoeffMatrix& m, const RatVec& t) {
  CoeffMatrix out(m.rows, m.cols);
  for (const auto& [ij, v] : m.entries) out.set(ij.first, ij.second, v * Laurent(character_value(m.cols[ij.second], t)));
  return out;
}

CoeffMatrix base_change_matrix(const EndoscopicDatum& endo, const TransferData& D, const std::vector<Weight>& index_G,
                               const std::vector<Weight>& index_H) {
  const auto& G = *endo.G;
  auto H = endoscopic_group(endo, D);
  require_saturated(H, index_H);
  CoeffMatrix B = geometric_satake(G, index_G) * branching_matrix(endo, D, index_G, index_H) *
                  kato_lusztig_matrix(H, index_H);
  for (std::size_t i = 0; i < index_G.size(); ++i) {
    auto lhs = lift_to_T1(endo, D, restrict_character(endo, D, macdonald_fhat(G, index_G[i])));
    GAElement rhs;
    for (std::size_t j = 0; j < index_H.size(); ++j) {
      Laurent c = B.at(i, j);
      if (!c.is_zero()) rhs += c * macdonald_fhat(H, index_H[j]);
    }
    if (!(lhs == rhs))
      throw std::logic_error("base change cross-check fails at lambda = " + index_G[i].str());
  }
  return B;
}

namespace {

struct CatalogEntry {
  std::string name, preset;
  std::vector<mpq_class> s, torus;
  std::vector<int> word;
};

RatVec rv(const std::vector<mpq_class>& v) { return RatVec(v.begin(), v.end()); }

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> e = [] {
    std::vector<CatalogEntry> out;
    for (std::string p : {"A1", "A2", "B2", "G2", "A3", "A2~2", "A3~2", "D4~3"}) {
      std::size_t r = RootDatumTheta::preset(p).rank();
      out.push_back({p + ">" + p, p, std::vector<mpq_class>(r, 0), std::vector<mpq_class>(r, 0), {}});
    }
    using Q = mpq_class;
    out.push_back({"A1>T", "A1", {Q(1, 4)}, {0}, {}});
    out.push_back({"A2>A1xT", "A2", {Q(1, 6), Q(1, 3)}, {0, 0}, {}});
    out.push_back({"A2>T", "A2", {Q(1, 7), Q(3, 7)}, {0, 0}, {}});
    out.push_back({"B2>T", "B2", {Q(1, 7), Q(3, 7)}, {0, 0}, {}});
    out.push_back({"A2:coxeter", "A2", {Q(1, 3), Q(1, 3)}, {0, 0}, {0, 1}});
    out.push_back({"A3:coxeter", "A3", {Q(3, 8), Q(1, 2), Q(3, 8)}, {0, 0, 0}, {0, 1, 2}});
    out.push_back({"A3:coxeter2", "A3", {Q(3, 8), Q(1, 2), Q(3, 8)}, {0, 0, 0}, {0, 1, 2, 0, 1, 2}});
    out.push_back({"A2~2>T", "A2~2", {Q(1, 7), Q(3, 7)}, {0, 0}, {}});
    out.push_back({"A2~2>U(1,1)", "A2~2", {Q(1, 2), Q(1, 2)}, {Q(1, 4), Q(1, 4)}, {}});
    out.push_back({"A2~2:conjugate", "A2~2", {Q(1, 7), Q(3, 7)}, {0, 0}, {0, 1}});
    out.push_back({"B2:omega", "B2", {Q(1, 7), Q(1, 11)}, {0, 0}, {0, 1, 0}});
    out.push_back({"C3:omega", "C3", {Q(1, 7), Q(1, 11), Q(1, 13)}, {0, 0, 0}, {2, 1, 2, 0, 1, 2}});
    out.push_back({"D4:omega", "D4", {Q(1, 7), Q(1, 11), Q(1, 13), Q(1, 17)}, {0, 0, 0, 0}, {0, 1, 3, 2, 1, 0}});
    out.push_back({"A4~2:conjugate", "A4~2", {Q(1, 7), Q(1, 11), Q(1, 13), Q(1, 17)}, {0, 0, 0, 0}, {0, 1, 2, 3}});
    return out;
  }();
  return e;
}

}  // namespace

std::vector<std::string> endoscopic_catalog() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.name);
  return out;
}

EndoscopicDatum catalog_datum(const std::string& name) {
  for (const auto& e : entries()) {
    if (e.name != name) continue;
    auto G = std::make_shared<const RootDatumTheta>(RootDatumTheta::preset(e.preset));
    NormalizerElement n;
    n.torus = rv(e.torus);
    for (int i : e.word) n.word.push_back({i, 1});
    return make_endoscopic_datum(G, rv(e.s), n, e.name);
  }
  throw std::invalid_argument("unknown endoscopic datum: " + name);
}

}  // namespace satake
