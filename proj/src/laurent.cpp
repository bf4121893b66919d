#include "dt4/laurent.hpp"

#include <sstream>

#include "dt4/error.hpp"

namespace dt4 {

ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

ExpVec operator-(const ExpVec& a, const ExpVec& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

ExpVec operator-(const ExpVec& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

ExpVec unit_exp(int i) {
  ExpVec e{0, 0, 0, 0};
  e.at(static_cast<std::size_t>(i)) = 1;
  return e;
}

Laurent Laurent::monomial(const ExpVec& e, const Rational& c) {
  Laurent l;
  l.add_term(e, c);
  return l;
}

Laurent Laurent::constant(const Rational& c) { return monomial({0, 0, 0, 0}, c); }

Rational Laurent::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Laurent::add_term(const ExpVec& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Laurent& Laurent::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

Rational Laurent::value_at_one() const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

Rational Laurent::evaluate(const std::array<Rational, 4>& t) const {
  for (const auto& x : t)
    if (x == 0) throw Error(ErrorKind::InvalidArgument, "Laurent evaluation at a zero coordinate");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < 4; ++i) {
      const int k = e[i];
      for (int j = 0; j < (k < 0 ? -k : k); ++j) {
        if (k > 0)
          term *= t[i];
        else
          term /= t[i];
      }
    }
    sum += term;
  }
  return sum;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      mono << "t" << (i + 1);
      if (e[i] != 1) mono << "^" << e[i];
      any = true;
    }
    if (!any) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << mono.str();
    }
  }
  return out.str();
}

Laurent laurent_mul(const Laurent& a, const Laurent& b) { return a * b; }

Laurent laurent_bar(const Laurent& a) {
  Laurent out;
  for (const auto& [e, c] : a.terms()) out.add_term(-e, c);
  return out;
}

ExpVec cy_reduce(const ExpVec& e) { return {e[0] - e[3], e[1] - e[3], e[2] - e[3], 0}; }

Laurent cy_reduce(const Laurent& a) {
  Laurent out;
  for (const auto& [e, c] : a.terms()) out.add_term(cy_reduce(e), c);
  return out;
}

Laurent koszul_factor_dual() {
  Laurent out = Laurent::constant(1);
  for (int i = 0; i < 4; ++i)
    out = out * (Laurent::constant(1) - Laurent::monomial(-unit_exp(i)));
  return out;
}

}  // namespace dt4
