#include "satake/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <regex>
#include <set>
#include <stdexcept>

namespace satake {

std::string to_string(Diagram d) { return d == Diagram::A1 ? "A1" : "A2"; }

std::string to_string(OrbitRole r) {
  switch (r) {
    case OrbitRole::A1Orbit: return "A1-orbit";
    case OrbitRole::A2Beta: return "A2-beta-orbit";
    case OrbitRole::A2Gamma: return "A2-gamma-orbit";
  }
  return "?";
}

int TwistedWeyl::find(const IntMatrix& m) const {
  auto it = index.find(m);
  return it == index.end() ? -1 : it->second;
}

namespace {

std::vector<std::vector<Int>> cartan_matrix(char type, int n) {
  std::vector<std::vector<Int>> c(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 1, n - 3);
      break;
    case 'G':
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

}  // namespace

RootDatumTheta RootDatumTheta::preset(const std::string& name) {
  static const std::regex re(R"(^([ABCDG])(\d+)(?:\.(sc|ad))?(?:~(\d+))?$)");
  std::smatch m;
  if (!std::regex_match(name, m, re)) throw std::invalid_argument("unknown preset: " + name);
  char type = m[1].str()[0];
  int n = std::stoi(m[2].str());
  bool adjoint = m[3].matched && m[3].str() == "ad";
  int twist = m[4].matched ? std::stoi(m[4].str()) : 1;

  bool ok = n >= 1;
  if (type == 'B' || type == 'C') ok = n >= 2;
  if (type == 'D') ok = n >= 4;
  if (type == 'G') ok = n == 2;
  if (!ok) throw std::invalid_argument("unknown preset: " + name);

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  if (twist == 2 && type == 'A' && n >= 2) {
    for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
  } else if (twist == 2 && type == 'D') {
    std::swap(perm[n - 2], perm[n - 1]);
  } else if (twist == 3 && type == 'D' && n == 4) {
    perm[0] = 2;
    perm[2] = 3;
    perm[3] = 0;
  } else if (twist != 1) {
    throw std::invalid_argument("twist incompatible with diagram: " + name);
  }

  auto c = cartan_matrix(type, n);
  std::vector<Weight> sroot(n, Weight(n)), scoroot(n, Weight(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (adjoint) {
        sroot[j][i] = (i == j);
        scoroot[j][i] = c[j][i];
      } else {
        sroot[j][i] = c[i][j];
        scoroot[j][i] = (i == j);
      }
    }

  // Orbit of the simple roots under simple reflections.
  std::vector<Weight> roots, coroots;
  std::vector<std::vector<Int>> coords;
  std::map<Weight, int> seen;
  std::deque<int> queue;
  for (int j = 0; j < n; ++j) {
    seen[sroot[j]] = static_cast<int>(roots.size());
    roots.push_back(sroot[j]);
    coroots.push_back(scoroot[j]);
    std::vector<Int> cc(n, 0);
    cc[j] = 1;
    coords.push_back(cc);
    queue.push_back(j);
  }
  while (!queue.empty()) {
    int k = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Int p = dot(roots[k], scoroot[i]);
      Weight r = roots[k] - p * sroot[i];
      if (seen.count(r)) continue;
      Weight cr = coroots[k] - dot(sroot[i], coroots[k]) * scoroot[i];
      std::vector<Int> cc = coords[k];
      cc[i] -= p;
      seen[r] = static_cast<int>(roots.size());
      roots.push_back(r);
      coroots.push_back(cr);
      coords.push_back(cc);
      queue.push_back(static_cast<int>(roots.size()) - 1);
    }
  }
  std::vector<int> positive;
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (std::all_of(coords[k].begin(), coords[k].end(), [](Int x) { return x >= 0; }))
      positive.push_back(static_cast<int>(k));

  IntMatrix theta(n, n);
  for (int i = 0; i < n; ++i) theta(perm[i], i) = 1;

  std::string canon = std::string(1, type) + std::to_string(n) + (adjoint ? ".ad" : ".sc");
  if (twist != 1) canon += "~" + std::to_string(twist);
  RootDatumTheta d(canon, n, roots, coroots, positive, theta);
  d.type_ = type;
  return d;
}

RootDatumTheta::RootDatumTheta(std::string name, std::size_t rank, std::vector<Weight> roots,
                               std::vector<Weight> coroots, const std::vector<int>& positive,
                               IntMatrix theta, std::size_t weyl_cap)
    : name_(std::move(name)),
      rank_(rank),
      roots_(std::move(roots)),
      coroots_(std::move(coroots)),
      positive_(roots_.size(), false),
      theta_(std::move(theta)) {
  for (int p : positive) {
    if (p < 0 || static_cast<std::size_t>(p) >= roots_.size())
      throw std::invalid_argument("positive root index out of range");
    positive_[p] = true;
  }
  check_and_derive();
  build_orbits();
  build_restricted();
  build_weyl(weyl_cap);
}

void RootDatumTheta::check_and_derive() {
  const std::size_t N = roots_.size();
  if (coroots_.size() != N) throw std::invalid_argument("roots and coroots differ in number");
  if (theta_.rows() != rank_ || theta_.cols() != rank_)
    throw std::invalid_argument("theta has the wrong shape");
  for (std::size_t k = 0; k < N; ++k) {
    if (roots_[k].size() != rank_ || coroots_[k].size() != rank_)
      throw std::invalid_argument("root vector of the wrong rank");
    if (dot(roots_[k], coroots_[k]) != 2) throw std::invalid_argument("<alpha, alpha^vee> != 2");
    if (!root_index_.emplace(roots_[k], static_cast<int>(k)).second)
      throw std::invalid_argument("duplicate root");
  }
  neg_.assign(N, -1);
  for (std::size_t k = 0; k < N; ++k) {
    auto it = root_index_.find(-roots_[k]);
    if (it == root_index_.end()) throw std::invalid_argument("root set not symmetric");
    neg_[k] = it->second;
    if (positive_[k] == positive_[it->second])
      throw std::invalid_argument("positive system must contain exactly one of each +-alpha");
    if (!(coroots_[it->second] == -coroots_[k])) throw std::invalid_argument("coroot of -alpha");
  }
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t l = 0; l < N; ++l) {
      Weight r = roots_[l] - dot(roots_[l], coroots_[k]) * roots_[k];
      if (!root_index_.count(r)) throw std::invalid_argument("reflections do not preserve roots");
    }
  for (std::size_t k = 0; k < N; ++k) {
    if (!positive_[k]) continue;
    pos_.push_back(static_cast<int>(k));
  }
  // Simple roots: positive roots that are not a sum of two positive roots.
  for (int k : pos_) {
    bool decomposable = false;
    for (int a : pos_) {
      auto it = root_index_.find(roots_[k] - roots_[a]);
      if (it != root_index_.end() && positive_[it->second]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple_.push_back(k);
  }
  const std::size_t s = simple_.size();
  RatMatrix basis(rank_, s);
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < rank_; ++i) basis(i, j) = static_cast<long>(roots_[simple_[j]][i]);
  if (basis.rank() != s) throw std::invalid_argument("simple roots are linearly dependent");
  simple_coords_.resize(N);
  for (std::size_t k = 0; k < N; ++k) {
    RatVec v(rank_);
    for (std::size_t i = 0; i < rank_; ++i) v[i] = static_cast<long>(roots_[k][i]);
    auto x = solve_rational(basis, v);
    if (!x) throw std::invalid_argument("root outside the span of the simple roots");
    std::vector<Int> c(s);
    for (std::size_t j = 0; j < s; ++j) {
      if ((*x)[j].get_den() != 1) throw std::invalid_argument("non-integral simple coordinates");
      c[j] = (*x)[j].get_num().get_si();
      if (positive_[k] ? c[j] < 0 : c[j] > 0)
        throw std::invalid_argument("positive system is not compatible with its simple roots");
    }
    simple_coords_[k] = c;
  }

  auto ord = matrix_order(theta_);
  if (!ord) throw std::invalid_argument("theta does not have finite order");
  order_ = *ord;
  auto inv = RatMatrix(theta_).inverse();
  if (!inv) throw std::invalid_argument("theta is not invertible");
  theta_dual_ = IntMatrix(rank_, rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) {
      const mpq_class& x = (*inv)(j, i);
      if (x.get_den() != 1) throw std::invalid_argument("theta is not unimodular");
      theta_dual_(i, j) = x.get_num().get_si();
    }
  theta_perm_.assign(N, -1);
  for (std::size_t k = 0; k < N; ++k) {
    auto it = root_index_.find(theta_.apply(roots_[k]));
    if (it == root_index_.end()) throw std::invalid_argument("theta does not permute the roots");
    theta_perm_[k] = it->second;
    if (positive_[it->second] != positive_[k])
      throw std::invalid_argument("theta does not preserve the positive system");
    if (!(theta_dual_.apply(coroots_[k]) == coroots_[it->second]))
      throw std::invalid_argument("theta is incompatible with the coroots");
  }
  simple_perm_.assign(s, -1);
  for (std::size_t i = 0; i < s; ++i) {
    int img = theta_perm_[simple_[i]];
    auto pos = std::find(simple_.begin(), simple_.end(), img);
    if (pos == simple_.end()) throw std::invalid_argument("theta does not permute the simple roots");
    simple_perm_[i] = static_cast<int>(pos - simple_.begin());
  }

  rho2_ = Weight(rank_);
  rho2_dual_ = Weight(rank_);
  for (int k : pos_) {
    rho2_ += roots_[k];
    rho2_dual_ += coroots_[k];
  }
}

std::optional<int> RootDatumTheta::root_index(const Weight& w) const {
  auto it = root_index_.find(w);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

Int RootDatumTheta::cartan(std::size_t i, std::size_t j) const {
  return dot(roots_[simple_[j]], coroots_[simple_[i]]);
}

void RootDatumTheta::build_orbits() {
  std::vector<bool> done(roots_.size(), false);
  for (int k : pos_) {
    if (done[k]) continue;
    RootOrbit o;
    int cur = k;
    do {
      o.roots.push_back(cur);
      done[cur] = true;
      cur = theta_perm_[cur];
    } while (cur != k);
    o.norm = Weight(rank_);
    for (int r : o.roots) o.norm += roots_[r];
    bool beta = false, gamma = false;
    for (int a : o.roots)
      for (int b : o.roots)
        if (a < b && root_index_.count(roots_[a] + roots_[b])) beta = true;
    // gamma: the root is a sum of two roots from one theta-orbit
    if (!beta) {
      for (int a : pos_) {
        auto it = root_index_.find(roots_[o.roots[0]] - roots_[a]);
        if (it == root_index_.end() || !positive_[it->second]) continue;
        int c = it->second;
        int x = a;
        do {
          if (x == c) gamma = true;
          x = theta_perm_[x];
        } while (x != a && !gamma);
        if (gamma) break;
      }
    }
    const int sz = static_cast<int>(o.roots.size());
    if (beta) {
      o.diagram = Diagram::A2;
      o.role = OrbitRole::A2Beta;
      o.b = sz / 2;
    } else if (gamma) {
      o.diagram = Diagram::A2;
      o.role = OrbitRole::A2Gamma;
      o.b = sz;
      o.sign = Cyclo(-1);
    } else {
      o.b = sz;
    }
    orbits_.push_back(o);
  }
  std::vector<bool> sdone(simple_.size(), false);
  for (std::size_t i = 0; i < simple_.size(); ++i) {
    if (sdone[i]) continue;
    std::vector<int> orb;
    int cur = static_cast<int>(i);
    do {
      orb.push_back(cur);
      sdone[cur] = true;
      cur = simple_perm_[cur];
    } while (cur != static_cast<int>(i));
    std::sort(orb.begin(), orb.end());
    simple_orbits_.push_back(orb);
  }
}

void RootDatumTheta::build_restricted() {
  // Group orbits by homothety of their norms.
  std::vector<bool> used(orbits_.size(), false);
  auto homothetic = [](const Weight& a, const Weight& b) {
    // positive rational multiples
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a[i] * b[j] != a[j] * b[i]) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != 0) return (a[i] > 0) == (b[i] > 0);
    return true;
  };
  std::set<int> simple_set(simple_.begin(), simple_.end());
  for (std::size_t o = 0; o < orbits_.size(); ++o) {
    if (used[o]) continue;
    RestrictedRoot rr;
    for (std::size_t p = o; p < orbits_.size(); ++p) {
      if (used[p] || !homothetic(orbits_[o].norm, orbits_[p].norm)) continue;
      used[p] = true;
      rr.source_orbits.push_back(static_cast<int>(p));
    }
    bool a2 = false;
    Weight shortest = orbits_[rr.source_orbits[0]].norm;
    for (int p : rr.source_orbits) {
      const RootOrbit& ob = orbits_[p];
      if (ob.diagram == Diagram::A2) a2 = true;
      if (height2(ob.norm) < height2(shortest)) shortest = ob.norm;
      Factor f;
      f.zeta = ob.sign;
      f.q2 = 2 * static_cast<int>(ob.roots.size());
      f.weight = ob.norm;
      rr.d_factors.push_back(f);
      for (int r : ob.roots)
        if (simple_set.count(r)) rr.simple = true;
    }
    rr.diagram = a2 ? Diagram::A2 : Diagram::A1;
    rr.vector = a2 ? 2 * shortest : shortest;
    rr.b = orbits_[rr.source_orbits[0]].b;
    if (a2)
      for (int p : rr.source_orbits)
        if (orbits_[p].role == OrbitRole::A2Gamma) rr.b = orbits_[p].b;
    restricted_.push_back(rr);
  }
  std::sort(restricted_.begin(), restricted_.end(), [&](const RestrictedRoot& a, const RestrictedRoot& b) {
    Int ha = height2(a.vector), hb = height2(b.vector);
    if (ha != hb) return ha < hb;
    return a.vector < b.vector;
  });
}

IntMatrix RootDatumTheta::reflection(int simple_pos) const {
  const Weight& a = roots_[simple_[simple_pos]];
  const Weight& c = coroots_[simple_[simple_pos]];
  IntMatrix m = IntMatrix::identity(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) m(i, j) -= a[i] * c[j];
  return m;
}

IntMatrix RootDatumTheta::word_matrix(const std::vector<int>& word) const {
  IntMatrix m = IntMatrix::identity(rank_);
  for (int i : word) m = m * reflection(i);
  return m;
}

int RootDatumTheta::act_on_root(const IntMatrix& w, int root) const {
  auto it = root_index_.find(w.apply(roots_[root]));
  if (it == root_index_.end()) throw std::logic_error("lattice map does not preserve the roots");
  return it->second;
}

int RootDatumTheta::abs_length(const IntMatrix& w) const {
  int n = 0;
  for (int k : pos_)
    if (!positive_[act_on_root(w, k)]) ++n;
  return n;
}

std::vector<int> RootDatumTheta::reduced_word(const IntMatrix& w0) const {
  std::vector<int> rev;
  IntMatrix w = w0;
  while (true) {
    int found = -1;
    for (std::size_t i = 0; i < simple_.size() && found < 0; ++i)
      if (!positive_[act_on_root(w, simple_[i])]) found = static_cast<int>(i);
    if (found < 0) break;
    rev.push_back(found);
    w = w * reflection(found);
  }
  if (!w.is_identity()) throw std::logic_error("lattice map is not in the Weyl group");
  return {rev.rbegin(), rev.rend()};
}

IntMatrix RootDatumTheta::dual_matrix(const IntMatrix& w) {
  auto inv = RatMatrix(w).inverse();
  if (!inv) throw std::invalid_argument("dual of a singular matrix");
  IntMatrix d(w.cols(), w.rows());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      const mpq_class& x = (*inv)(j, i);
      if (x.get_den() != 1) throw std::invalid_argument("dual of a non-unimodular matrix");
      d(i, j) = x.get_num().get_si();
    }
  return d;
}

void RootDatumTheta::build_weyl(std::size_t cap) {
  for (const auto& orb : simple_orbits_) {
    IntMatrix w = IntMatrix::identity(rank_);
    std::vector<int> word;
    while (true) {
      int found = -1;
      for (int j : orb)
        if (positive_[act_on_root(w, simple_[j])]) {
          found = j;
          break;
        }
      if (found < 0) break;
      w = w * reflection(found);
      word.push_back(found);
    }
    weyl_.generators.push_back(w);
    weyl_.generator_abs_word.push_back(word);
  }
  IntMatrix id = IntMatrix::identity(rank_);
  weyl_.elements.push_back(id);
  weyl_.length.push_back(0);
  weyl_.word.push_back({});
  weyl_.index[id] = 0;
  for (std::size_t k = 0; k < weyl_.elements.size(); ++k) {
    for (std::size_t g = 0; g < weyl_.generators.size(); ++g) {
      IntMatrix n = weyl_.elements[k] * weyl_.generators[g];
      if (weyl_.index.count(n)) continue;
      if (weyl_.elements.size() >= cap) throw std::runtime_error("twisted Weyl group exceeds size cap");
      weyl_.index[n] = static_cast<int>(weyl_.elements.size());
      weyl_.elements.push_back(n);
      weyl_.length.push_back(weyl_.length[k] + 1);
      auto w = weyl_.word[k];
      w.push_back(static_cast<int>(g));
      weyl_.word.push_back(w);
    }
  }
  for (const auto& e : weyl_.elements) weyl_.length_abs.push_back(abs_length(e));
}

bool RootDatumTheta::in_Y(const Weight& mu) const { return theta_.apply(mu) == mu; }

bool RootDatumTheta::is_dominant(const Weight& mu) const {
  for (int s : simple_)
    if (dot(mu, coroots_[s]) < 0) return false;
  return true;
}

Weight RootDatumTheta::orbit_sum(const IntMatrix& action, const Weight& mu) {
  Weight s = mu, cur = action.apply(mu);
  int guard = 0;
  while (!(cur == mu)) {
    s += cur;
    cur = action.apply(cur);
    if (++guard > 100000) throw std::runtime_error("orbit_sum: action of infinite order");
  }
  return s;
}

Weight RootDatumTheta::norm(const Weight& mu) const { return orbit_sum(theta_, mu); }

Weight RootDatumTheta::dot_action(int w, const Weight& mu) const {
  Weight v = 2 * mu + rho2_;
  Weight r = weyl_.elements.at(w).apply(v) - rho2_;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] % 2) throw std::logic_error("dot action left the lattice");
    r[i] /= 2;
  }
  return r;
}

std::optional<int> RootDatumTheta::chamber_of(const Weight& mu) const {
  Weight v = 2 * mu + rho2_;
  IntMatrix x = IntMatrix::identity(rank_);
  while (true) {
    int found = -1;
    for (std::size_t s = 0; s < simple_orbits_.size() && found < 0; ++s)
      if (dot(v, coroots_[simple_[simple_orbits_[s][0]]]) < 0) found = static_cast<int>(s);
    if (found < 0) break;
    v = weyl_.generators[found].apply(v);
    x = weyl_.generators[found] * x;
  }
  for (int s : simple_)
    if (dot(v, coroots_[s]) == 0) return std::nullopt;
  int idx = weyl_.find(x);
  if (idx < 0) throw std::logic_error("chamber element missing from W^theta");
  return idx;
}

std::vector<int> RootDatumTheta::stabilizer_orbits(const Weight& mu) const {
  std::vector<int> out;
  for (std::size_t s = 0; s < simple_orbits_.size(); ++s)
    if (dot(mu, coroots_[simple_[simple_orbits_[s][0]]]) == 0) out.push_back(static_cast<int>(s));
  return out;
}

std::vector<int> RootDatumTheta::parabolic(const std::vector<int>& orbs) const {
  std::vector<int> out{0};
  std::set<int> seen{0};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int g : orbs) {
      int n = weyl_.find(weyl_.elements[out[k]] * weyl_.generators[g]);
      if (seen.insert(n).second) out.push_back(n);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> RootDatumTheta::dominant_weights(Int max_height2) const {
  if (!is_semisimple()) throw std::invalid_argument("dominant enumeration needs a semisimple datum");
  RatMatrix a(rank_, rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) a(i, j) = static_cast<long>(coroots_[simple_[i]][j]);
  auto inv = a.inverse();
  if (!inv) throw std::logic_error("coroot matrix is singular");
  std::vector<RatVec> varpi;
  std::vector<Int> h;
  for (const auto& orb : simple_orbits_) {
    RatVec w(rank_, 0);
    for (int i : orb)
      for (std::size_t r = 0; r < rank_; ++r) w[r] += (*inv)(r, i);
    mpq_class ht = 0;
    for (std::size_t r = 0; r < rank_; ++r) ht += w[r] * static_cast<long>(rho2_dual_[r]);
    if (ht.get_den() != 1 || ht <= 0) throw std::logic_error("bad fundamental weight height");
    varpi.push_back(w);
    h.push_back(ht.get_num().get_si());
  }
  std::vector<Weight> out;
  std::vector<Int> c(varpi.size(), 0);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t k, Int budget) {
    if (k == varpi.size()) {
      RatVec v(rank_, 0);
      for (std::size_t s = 0; s < varpi.size(); ++s)
        for (std::size_t r = 0; r < rank_; ++r) v[r] += mpq_class(static_cast<long>(c[s])) * varpi[s][r];
      Weight w(rank_);
      for (std::size_t r = 0; r < rank_; ++r) {
        if (v[r].get_den() != 1) return;
        w[r] = v[r].get_num().get_si();
      }
      out.push_back(w);
      return;
    }
    for (Int x = 0; x * h[k] <= budget; ++x) {
      c[k] = x;
      rec(k + 1, budget - x * h[k]);
    }
    c[k] = 0;
  };
  rec(0, max_height2);
  std::sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) { return index_less(x, y); });
  return out;
}

bool RootDatumTheta::index_less(const Weight& a, const Weight& b) const {
  Int ha = height2(a), hb = height2(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

std::vector<Weight> RootDatumTheta::dominant_below(const Weight& mu) const {
  std::vector<Weight> steps;
  for (const auto& orb : simple_orbits_) {
    Weight s(rank_);
    for (int i : orb) s += roots_[simple_[i]];
    steps.push_back(s);
  }
  std::set<Weight> seen{mu};
  std::deque<Weight> queue{mu};
  std::vector<Weight> out;
  while (!queue.empty()) {
    Weight v = queue.front();
    queue.pop_front();
    if (is_dominant(v)) out.push_back(v);
    for (const auto& s : steps) {
      Weight n = v - s;
      if (height2(n) < 0 || seen.count(n)) continue;
      seen.insert(n);
      queue.push_back(n);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) { return index_less(x, y); });
  return out;
}

bool RootDatumTheta::dominance_leq(const Weight& mu, const Weight& lambda) const {
  Weight d = lambda - mu;
  if (d.is_zero()) return true;
  RatMatrix basis(rank_, simple_.size());
  for (std::size_t j = 0; j < simple_.size(); ++j)
    for (std::size_t i = 0; i < rank_; ++i) basis(i, j) = static_cast<long>(roots_[simple_[j]][i]);
  RatVec v(rank_);
  for (std::size_t i = 0; i < rank_; ++i) v[i] = static_cast<long>(d[i]);
  auto x = solve_rational(basis, v);
  if (!x) return false;
  for (const auto& c : *x)
    if (c.get_den() != 1 || c < 0) return false;
  return true;
}

}  // namespace satake

namespace satake {

Weight FixedGroup::to_coords(const Weight& ambient) const {
  RatMatrix m(embed);
  RatVec b(ambient.size());
  for (std::size_t i = 0; i < ambient.size(); ++i) b[i] = static_cast<long>(ambient[i]);
  auto x = solve_rational(m, b);
  if (!x) throw std::invalid_argument("vector is not theta-fixed: " + ambient.str());
  Weight out(x->size());
  for (std::size_t i = 0; i < x->size(); ++i) {
    if ((*x)[i].get_den() != 1) throw std::invalid_argument("vector is not in Y*: " + ambient.str());
    out[i] = (*x)[i].get_num().get_si();
  }
  if (!(embed.apply(out) == ambient)) throw std::invalid_argument("vector is not theta-fixed: " + ambient.str());
  return out;
}

FixedGroup theta_fixed_group(const RootDatumTheta& d) {
  std::size_t r = d.rank();
  IntMatrix shifted = d.theta();
  for (std::size_t i = 0; i < r; ++i) shifted(i, i) -= 1;
  auto K = integer_kernel(shifted);
  std::size_t k = K.size();
  IntMatrix embed(r, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < r; ++i) embed(i, j) = K[j][i];

  // W^theta-invariant form on Y*
  auto form = [&](const Weight& x, const Weight& y) {
    Int s = 0;
    for (const auto& w : d.weyl().elements) s += dot(w.apply(x), w.apply(y));
    return s;
  };
  FixedGroup probe{d, embed};
  std::vector<Weight> roots, coroots;
  std::vector<int> pos;
  for (int sign : {1, -1})
    for (const auto& rr : d.restricted_roots()) {
      Weight v = sign * rr.vector;
      Int vv = form(v, v);
      Weight co(k);
      for (std::size_t j = 0; j < k; ++j) {
        Int num = 2 * form(K[j], v);
        if (num % vv) throw std::logic_error("restricted coroot is not integral");
        co[j] = num / vv;
      }
      if (sign > 0) pos.push_back(static_cast<int>(roots.size()));
      roots.push_back(probe.to_coords(v));
      coroots.push_back(co);
    }
  return FixedGroup{RootDatumTheta(d.name() + "_theta", k, roots, coroots, pos, IntMatrix::identity(k)), embed};
}

}  // namespace satake
