#include "dt4/weights.hpp"

#include <sstream>

#include "dt4/error.hpp"

namespace dt4 {

TorusPoint::TorusPoint(std::array<Rational, 4> s) : s_(std::move(s)) {
  if (s_[0] + s_[1] + s_[2] + s_[3] != 0)
    throw Error(ErrorKind::InvalidArgument, "torus parameters must sum to zero: " + to_string());
}

std::string TorusPoint::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < 4; ++i) out << (i ? "," : "") << s_[i].get_str();
  return out.str();
}

LinForm::LinForm(const std::array<int, 4>& a)
    : reduced_{a[0] - a[3], a[1] - a[3], a[2] - a[3]} {}

LinForm LinForm::s(int i) {
  if (i < 1 || i > 4) throw Error(ErrorKind::InvalidArgument, "s index out of range");
  std::array<int, 4> a{0, 0, 0, 0};
  a[static_cast<std::size_t>(i - 1)] = 1;
  return LinForm(a);
}

int LinForm::leading_sign() const {
  for (int c : reduced_)
    if (c != 0) return c > 0 ? 1 : -1;
  return 0;
}

Rational LinForm::evaluate(const TorusPoint& s) const {
  Rational v = 0;
  for (std::size_t i = 0; i < 3; ++i) v += reduced_[i] * s[i];
  return v;
}

LinForm LinForm::operator-() const {
  return LinForm({-reduced_[0], -reduced_[1], -reduced_[2], 0});
}

LinForm operator+(const LinForm& a, const LinForm& b) {
  return LinForm({a.reduced_[0] + b.reduced_[0], a.reduced_[1] + b.reduced_[1],
                  a.reduced_[2] + b.reduced_[2], 0});
}

LinForm LinForm::permuted(const std::array<int, 4>& perm) const {
  std::array<int, 4> b{0, 0, 0, 0};
  for (std::size_t i = 0; i < 3; ++i) b[static_cast<std::size_t>(perm[i])] += reduced_[i];
  return LinForm(b);
}

std::string LinForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const int c = reduced_[i];
    if (c == 0) continue;
    if (c < 0)
      out << "-";
    else if (!first)
      out << "+";
    if (c != 1 && c != -1) out << (c < 0 ? -c : c) << "*";
    out << "s" << (i + 1);
    first = false;
  }
  return out.str();
}

LinForm weight_of(const ExpVec& e) { return LinForm(e); }

WeightMultiset WeightMultiset::from_character(const Laurent& character) {
  std::map<LinForm, Rational> merged;
  for (const auto& [e, c] : character.terms()) merged[weight_of(e)] += c;
  WeightMultiset out;
  for (const auto& [w, c] : merged) {
    if (c == 0) continue;
    if (c < 0 || !is_integer(c))
      throw Error(ErrorKind::NotEffective,
                  "weight " + w.to_string() + " has multiplicity " + c.get_str());
    out.add(w, static_cast<int>(c.get_num().get_si()));
  }
  return out;
}

void WeightMultiset::add(const LinForm& w, int multiplicity) {
  if (multiplicity < 0) throw Error(ErrorKind::NotEffective, "negative multiplicity");
  if (multiplicity == 0) return;
  weights_[w] += multiplicity;
}

int WeightMultiset::size() const {
  int n = 0;
  for (const auto& [w, m] : weights_) n += m;
  return n;
}

int WeightMultiset::multiplicity(const LinForm& w) const {
  auto it = weights_.find(w);
  return it == weights_.end() ? 0 : it->second;
}

bool WeightMultiset::contains_zero() const { return multiplicity(LinForm{}) > 0; }

bool WeightMultiset::is_self_dual() const {
  for (const auto& [w, m] : weights_)
    if (multiplicity(-w) != m) return false;
  return true;
}

Laurent WeightMultiset::to_character() const {
  Laurent out;
  for (const auto& [w, m] : weights_) {
    const auto r = w.reduced();
    out.add_term({r[0], r[1], r[2], 0}, m);
  }
  return out;
}

WeightMultiset WeightMultiset::dual() const {
  WeightMultiset out;
  for (const auto& [w, m] : weights_) out.add(-w, m);
  return out;
}

WeightMultiset WeightMultiset::permuted(const std::array<int, 4>& perm) const {
  WeightMultiset out;
  for (const auto& [w, m] : weights_) out.add(w.permuted(perm), m);
  return out;
}

FactoredWeightProduct FactoredWeightProduct::zero() {
  FactoredWeightProduct p;
  p.zero_ = true;
  return p;
}

void FactoredWeightProduct::multiply(const LinForm& w, int exponent) {
  if (exponent == 0) return;
  if (w.is_zero()) {
    if (exponent < 0)
      throw Error(ErrorKind::InternalInconsistency, "division by the zero weight");
    zero_ = true;
    return;
  }
  LinForm key = w;
  if (w.leading_sign() < 0) {
    key = -w;
    if (exponent % 2 != 0) sign_ = -sign_;
  }
  auto [it, inserted] = factors_.try_emplace(key, exponent);
  if (!inserted) {
    it->second += exponent;
    if (it->second == 0) factors_.erase(it);
  }
}

void FactoredWeightProduct::multiply(const FactoredWeightProduct& other) {
  if (other.zero_) zero_ = true;
  for (const auto& [w, k] : other.factors_) multiply(w, k);
  scalar_ *= other.scalar_;
  sign_ *= other.sign_;
}

void FactoredWeightProduct::scale(const Rational& c) {
  if (c == 0) zero_ = true;
  scalar_ *= c;
}

int FactoredWeightProduct::degree() const {
  int d = 0;
  for (const auto& [w, k] : factors_) d += k;
  return d;
}

Rational FactoredWeightProduct::evaluate(const TorusPoint& s) const {
  if (zero_) return 0;
  Rational value = scalar_ * sign_;
  for (const auto& [w, k] : factors_) {
    const Rational v = w.evaluate(s);
    if (v == 0) {
      if (k > 0) return 0;
      throw Error(ErrorKind::NonGenericParameters,
                  "denominator weight " + w.to_string() + " vanishes at s = " + s.to_string());
    }
    for (int i = 0; i < (k < 0 ? -k : k); ++i) {
      if (k > 0)
        value *= v;
      else
        value /= v;
    }
  }
  return value;
}

std::string FactoredWeightProduct::to_string() const {
  if (zero_) return "0";
  std::ostringstream out;
  out << (sign_ < 0 ? "-" : "");
  bool any = false;
  if (scalar_ != 1) {
    out << scalar_.get_str();
    any = true;
  }
  for (const auto& [w, k] : factors_) {
    if (any) out << "*";
    out << "(" << w.to_string() << ")";
    if (k != 1) out << "^" << k;
    any = true;
  }
  if (!any) out << "1";
  return out.str();
}

Rational fwp_eval(const FactoredWeightProduct& p, const TorusPoint& s) { return p.evaluate(s); }

Laurent linform_polynomial(const LinForm& w) {
  Laurent out;
  const auto r = w.reduced();
  for (std::size_t i = 0; i < 3; ++i) out.add_term(unit_exp(static_cast<int>(i)), r[i]);
  return out;
}

Laurent expand_polynomial(const FactoredWeightProduct& p) {
  if (p.is_zero()) return {};
  Laurent out = Laurent::constant(p.scalar() * p.sign());
  for (const auto& [w, k] : p.factors()) {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "cannot expand a negative exponent");
    for (int i = 0; i < k; ++i) out = out * linform_polynomial(w);
  }
  return out;
}

Laurent elementary_symmetric_reduced(int k) {
  Laurent out;
  for (int mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
    Laurent term = Laurent::constant(1);
    for (int i = 0; i < 4; ++i)
      if (mask & (1 << i)) term = term * linform_polynomial(LinForm::s(i + 1));
    out += term;
  }
  return out;
}

}  // namespace dt4
