#include "satake/group_algebra.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "satake/lie_model.hpp"

namespace satake {

GAElement GAElement::monomial(const Weight& mu, const Laurent& c) {
  GAElement g;
  g.add_term(mu, c);
  return g;
}

bool GAElement::certified(const Weight& mu) const {
  return !trunc_ || dot(mu, trunc_->grading) <= trunc_->bound;
}

Laurent GAElement::coeff(const Weight& mu) const {
  if (!certified(mu))
    throw std::out_of_range("coefficient " + mu.str() + " outside the certified truncation region");
  auto it = t_.find(mu);
  return it == t_.end() ? Laurent() : it->second;
}

void GAElement::add_term(const Weight& mu, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = t_.find(mu);
  if (it == t_.end()) {
    t_.emplace(mu, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

namespace {

std::optional<Truncation> combine_sum(const std::optional<Truncation>& a, const std::optional<Truncation>& b) {
  if (!a) return b;
  if (!b) return a;
  if (!(a->grading == b->grading)) throw std::invalid_argument("truncations with different gradings");
  return Truncation{a->grading, std::min(a->bound, b->bound)};
}

}  // namespace

GAElement& GAElement::operator+=(const GAElement& o) {
  trunc_ = combine_sum(trunc_, o.trunc_);
  for (const auto& [w, c] : o.t_) add_term(w, c);
  if (trunc_) *this = truncated(trunc_->grading, trunc_->bound);
  return *this;
}

GAElement& GAElement::operator-=(const GAElement& o) { return *this += -o; }

std::optional<Int> GAElement::min_grade(const Weight& g) const {
  std::optional<Int> m;
  for (const auto& [w, c] : t_) {
    Int x = dot(w, g);
    if (!m || x < *m) m = x;
  }
  return m;
}

GAElement operator*(const GAElement& a, const GAElement& b) {
  GAElement r;
  if (a.trunc_ || b.trunc_) {
    const Weight& g = a.trunc_ ? a.trunc_->grading : b.trunc_->grading;
    if (a.trunc_ && b.trunc_ && !(a.trunc_->grading == b.trunc_->grading))
      throw std::invalid_argument("truncations with different gradings");
    // A true (untruncated) series has no term below min(stored, bound + 1).
    auto true_min = [&](const GAElement& x) -> std::optional<Int> {
      auto m = x.min_grade(g);
      if (!x.trunc_) return m;
      Int cap = x.trunc_->bound + 1;
      return m ? std::min(*m, cap) : cap;
    };
    auto ma = true_min(a), mb = true_min(b);
    if ((!a.trunc_ && !ma) || (!b.trunc_ && !mb)) return r;  // exact zero factor
    Int bound = std::numeric_limits<Int>::max();
    if (a.trunc_) bound = std::min(bound, a.trunc_->bound + *mb);
    if (b.trunc_) bound = std::min(bound, b.trunc_->bound + *ma);
    r.trunc_ = Truncation{g, bound};
    for (const auto& [wa, ca] : a.t_) {
      Int ga = dot(wa, g);
      for (const auto& [wb, cb] : b.t_)
        if (ga + dot(wb, g) <= bound) r.add_term(wa + wb, ca * cb);
    }
    return r;
  }
  for (const auto& [wa, ca] : a.t_)
    for (const auto& [wb, cb] : b.t_) r.add_term(wa + wb, ca * cb);
  return r;
}

GAElement operator*(const Laurent& c, GAElement a) {
  if (c.is_zero()) {
    a.t_.clear();
    return a;
  }
  for (auto& [w, x] : a.t_) x = c * x;
  return a;
}

bool operator==(const GAElement& a, const GAElement& b) {
  if (a.trunc_ || b.trunc_) throw std::logic_error("equality of truncated elements is undefined");
  return a.t_ == b.t_;
}

GAElement GAElement::truncated(const Weight& g, Int bound) const {
  if (trunc_) {
    if (!(trunc_->grading == g)) throw std::invalid_argument("truncations with different gradings");
    bound = std::min(bound, trunc_->bound);
  }
  GAElement r;
  r.trunc_ = Truncation{g, bound};
  for (const auto& [w, c] : t_)
    if (dot(w, g) <= bound) r.t_.emplace(w, c);
  return r;
}

GAElement GAElement::as_exact() const {
  GAElement r = *this;
  r.trunc_.reset();
  return r;
}

GAElement GAElement::mapped(const IntMatrix& m) const {
  if (trunc_) throw std::logic_error("lattice maps apply to exact elements only");
  GAElement r;
  for (const auto& [w, c] : t_) r.add_term(m.apply(w), c);
  return r;
}

GAElement GAElement::conj() const {
  GAElement r;
  if (trunc_) r.trunc_ = Truncation{-trunc_->grading, trunc_->bound};
  for (const auto& [w, c] : t_) r.t_.emplace(-w, c.conj());
  return r;
}

GAElement GAElement::invert_q() const {
  GAElement r = *this;
  for (auto& [w, c] : r.t_) c = c.invert_q();
  return r;
}

Laurent GAElement::evaluate_at(const RatVec& torus) const {
  if (trunc_) throw std::logic_error("evaluation of a truncated series");
  Laurent s;
  for (const auto& [w, c] : t_) s += Laurent(character_value(w, torus)) * c;
  return s;
}

std::string GAElement::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")*e^" << it->first.str();
  }
  return os.str();
}

GAElement orbit_sum(const RootDatumTheta& d, const Weight& mu) {
  if (!d.in_Y(mu) || !d.is_dominant(mu)) throw std::invalid_argument("orbit_sum needs a dominant weight");
  std::set<Weight> orbit;
  for (const auto& w : d.weyl().elements) orbit.insert(w.apply(mu));
  GAElement r;
  for (const auto& w : orbit) r.add_term(w, Laurent(1));
  return r;
}

GAElement alt_symmetrize_J(const RootDatumTheta& d, const GAElement& f) {
  if (!f.is_exact()) throw std::invalid_argument("J needs an exact element");
  GAElement r;
  for (std::size_t w = 0; w < d.weyl().size(); ++w) {
    Laurent sign(d.weyl().length[w] % 2 ? -1 : 1);
    for (const auto& [mu, c] : f.terms()) r.add_term(d.dot_action(static_cast<int>(w), mu), sign * c);
  }
  return r;
}

GAElement desymmetrize_L(const RootDatumTheta& d, const GAElement& f) {
  if (!f.is_exact()) throw std::invalid_argument("L needs an exact element");
  GAElement r;
  for (const auto& [mu, c] : f.terms()) {
    auto x = d.chamber_of(mu);
    if (!x) continue;
    Laurent sign(d.weyl().length[*x] % 2 ? -1 : 1);
    r.add_term(d.dot_action(*x, mu), sign * c);
  }
  return r;
}

GAElement weyl_act(const RootDatumTheta& d, int w, const GAElement& f) {
  return f.mapped(d.weyl().elements.at(w));
}

bool is_weyl_invariant(const RootDatumTheta& d, const GAElement& f) {
  for (std::size_t g = 0; g < d.weyl().generators.size(); ++g)
    if (!(f.mapped(d.weyl().generators[g]) == f)) return false;
  return true;
}

}  // namespace satake
