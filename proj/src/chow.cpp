#include "dt4/chow.hpp"

#include <numeric>
#include <sstream>

#include "dt4/error.hpp"

namespace dt4 {

RingPresentation::RingPresentation(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw Error(ErrorKind::InvalidArgument, "empty list of projective dimensions");
  for (int n : dims_)
    if (n <= 0) throw Error(ErrorKind::InvalidArgument, "projective dimensions must be positive");
  dimension_ = std::accumulate(dims_.begin(), dims_.end(), 0);
}

bool RingPresentation::admissible(const Monomial& m) const {
  if (m.size() != dims_.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] < 0 || m[i] > dims_[i]) return false;
  return true;
}

std::vector<Monomial> RingPresentation::basis(int degree) const {
  std::vector<Monomial> out;
  Monomial m(dims_.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == dims_.size()) {
      if (remaining <= dims_[i]) {
        m[i] = remaining;
        out.push_back(m);
      }
      return;
    }
    for (int e = 0; e <= std::min(remaining, dims_[i]); ++e) {
      m[i] = e;
      self(self, i + 1, remaining - e);
    }
  };
  if (degree >= 0) rec(rec, 0, degree);
  return out;
}

RingPresentation product_projective_ring(const std::vector<int>& dims) { return RingPresentation(dims); }

namespace {

int degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

}  // namespace

CohClass CohClass::constant(const RingPresentation& ring, const Rational& c) {
  CohClass out(ring);
  out.add_term(Monomial(ring.dims().size(), 0), c);
  return out;
}

CohClass CohClass::generator(const RingPresentation& ring, int i) {
  if (i < 0 || i >= ring.generators()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  CohClass out(ring);
  Monomial m(ring.dims().size(), 0);
  m[static_cast<std::size_t>(i)] = 1;
  out.add_term(m, 1);
  return out;
}

CohClass CohClass::linear(const RingPresentation& ring, const std::vector<Rational>& coeffs) {
  if (static_cast<int>(coeffs.size()) != ring.generators())
    throw Error(ErrorKind::InvalidArgument, "wrong number of divisor coefficients");
  CohClass out(ring);
  for (int i = 0; i < ring.generators(); ++i) out += generator(ring, i) * coeffs[static_cast<std::size_t>(i)];
  return out;
}

Rational CohClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational CohClass::constant_term() const { return coefficient(Monomial(ring_.dims().size(), 0)); }

void CohClass::add_term(const Monomial& m, const Rational& c) {
  if (c == 0 || !ring_.admissible(m)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CohClass CohClass::degree_part(int k) const {
  CohClass out(ring_);
  for (const auto& [m, c] : terms_)
    if (degree_of(m) == k) out.terms_.emplace(m, c);
  return out;
}

CohClass CohClass::truncated(int max_degree) const {
  CohClass out(ring_);
  for (const auto& [m, c] : terms_)
    if (degree_of(m) <= max_degree) out.terms_.emplace(m, c);
  return out;
}

CohClass CohClass::graded_dual() const {
  CohClass out(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, degree_of(m) % 2 ? Rational(-c) : c);
  return out;
}

CohClass& CohClass::operator+=(const CohClass& other) {
  if (!(ring_ == other.ring_)) throw Error(ErrorKind::InvalidArgument, "classes from different rings");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& other) {
  if (!(ring_ == other.ring_)) throw Error(ErrorKind::InvalidArgument, "classes from different rings");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

CohClass& CohClass::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

CohClass operator*(const CohClass& a, const CohClass& b) {
  if (!(a.ring_ == b.ring_)) throw Error(ErrorKind::InvalidArgument, "classes from different rings");
  CohClass out(a.ring_);
  Monomial m(a.ring_.dims().size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

std::string CohClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    out << (first ? "" : " + ") << "(" << c.get_str() << ")";
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) out << "*h" << (i + 1) << (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
    first = false;
  }
  return out.str();
}

CohClass power(const CohClass& a, int k) {
  CohClass out = CohClass::constant(a.ring(), 1);
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

CohClass apply_series(const std::vector<Rational>& coeffs, const CohClass& x) {
  if (x.constant_term() != 0) throw Error(ErrorKind::InvalidArgument, "series argument must be nilpotent");
  CohClass out(x.ring());
  CohClass xk = CohClass::constant(x.ring(), 1);
  const int top = x.ring().dimension();
  for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= top; ++k) {
    out += xk * coeffs[k];
    xk = xk * x;
  }
  return out;
}

CohClass inverse(const CohClass& a) {
  const Rational a0 = a.constant_term();
  if (a0 == 0) throw Error(ErrorKind::InvalidArgument, "class with zero constant term is not invertible");
  // a = a0 (1 + u), u nilpotent.
  CohClass u = a * Rational(1 / a0) - CohClass::constant(a.ring(), 1);
  std::vector<Rational> geometric;
  for (int k = 0; k <= a.ring().dimension(); ++k) geometric.emplace_back(k % 2 ? -1 : 1);
  return apply_series(geometric, u) * Rational(1 / a0);
}

std::vector<Rational> exp_series(int max_degree) {
  std::vector<Rational> c;
  Rational term = 1;
  for (int k = 0; k <= max_degree; ++k) {
    if (k > 0) term /= k;
    c.push_back(term);
  }
  return c;
}

std::vector<Rational> todd_series(int max_degree) {
  // (1 - e^{-x})/x = sum_k (-1)^k x^k / (k+1)!, inverted as a power series.
  std::vector<Rational> f;
  Rational fact = 1;
  for (int k = 0; k <= max_degree; ++k) {
    fact *= (k + 1);
    f.push_back(Rational(k % 2 ? -1 : 1) / fact);
  }
  std::vector<Rational> g(static_cast<std::size_t>(max_degree) + 1);
  g[0] = 1;
  for (int n = 1; n <= max_degree; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += f[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(n - k)];
    g[static_cast<std::size_t>(n)] = -acc;
  }
  return g;
}

SheafClass ch_line(const CohClass& divisor) {
  return SheafClass(apply_series(exp_series(divisor.ring().dimension()), divisor));
}

SheafClass structure_sheaf(const RingPresentation& ring) { return SheafClass(CohClass::constant(ring, 1)); }

SheafClass chern_to_ch(const Rational& rank, const std::vector<CohClass>& chern) {
  if (chern.empty()) throw Error(ErrorKind::InvalidArgument, "empty Chern class list");
  const RingPresentation& ring = chern.front().ring();
  const int top = ring.dimension();
  auto e = [&](int k) {
    return k < static_cast<int>(chern.size()) ? chern[static_cast<std::size_t>(k)].degree_part(k) : CohClass(ring);
  };
  std::vector<CohClass> p(static_cast<std::size_t>(top) + 1, CohClass(ring));
  CohClass ch = CohClass::constant(ring, rank);
  Rational fact = 1;
  for (int k = 1; k <= top; ++k) {
    CohClass pk = e(k) * Rational((k % 2 ? 1 : -1) * k);
    for (int i = 1; i < k; ++i) pk += e(i) * p[static_cast<std::size_t>(k - i)] * Rational(i % 2 ? 1 : -1);
    p[static_cast<std::size_t>(k)] = pk;
    fact *= k;
    ch += pk * Rational(1 / fact);
  }
  return SheafClass(ch);
}

std::vector<CohClass> ch_to_chern(const SheafClass& sheaf) {
  const RingPresentation& ring = sheaf.ch().ring();
  const int top = ring.dimension();
  std::vector<CohClass> p(static_cast<std::size_t>(top) + 1, CohClass(ring));
  Rational fact = 1;
  for (int k = 1; k <= top; ++k) {
    fact *= k;
    p[static_cast<std::size_t>(k)] = sheaf.component(k) * fact;
  }
  std::vector<CohClass> e{CohClass::constant(ring, 1)};
  for (int k = 1; k <= top; ++k) {
    CohClass acc(ring);
    for (int i = 1; i <= k; ++i)
      acc += e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)] * Rational(i % 2 ? 1 : -1);
    e.push_back(acc * Rational(1, k));
  }
  return e;
}

std::vector<CohClass> chern_components(const CohClass& total) {
  std::vector<CohClass> out;
  for (int k = 0; k <= total.ring().dimension(); ++k) out.push_back(total.degree_part(k));
  return out;
}

CohClass todd_from_chern(const CohClass& c1, const CohClass& c2, const CohClass& c3, const CohClass& c4) {
  const RingPresentation& ring = c1.ring();
  CohClass td = CohClass::constant(ring, 1);
  td += c1 * Rational(1, 2);
  td += (c1 * c1 + c2) * Rational(1, 12);
  td += c1 * c2 * Rational(1, 24);
  CohClass c1sq = c1 * c1;
  td += (c1sq * c1sq * Rational(-1) + c1sq * c2 * Rational(4) + c1 * c3 + c2 * c2 * Rational(3) - c4) *
        Rational(1, 720);
  return td.truncated(4);
}

VarietyContext::VarietyContext(RingPresentation ambient, std::optional<CohClass> divisor, std::vector<int> degrees,
                               int dimension, CohClass tangent_ch, CohClass todd)
    : ambient_(std::move(ambient)),
      divisor_(std::move(divisor)),
      divisor_degrees_(std::move(degrees)),
      dimension_(dimension),
      tangent_ch_(std::move(tangent_ch)),
      todd_(std::move(todd)) {}

namespace {

CohClass ambient_tangent_ch(const RingPresentation& ring) {
  CohClass ch(ring);
  for (int i = 0; i < ring.generators(); ++i) {
    const int n = ring.dims()[static_cast<std::size_t>(i)];
    ch += ch_line(CohClass::generator(ring, i)).ch() * Rational(n + 1);
    ch -= CohClass::constant(ring, 1);
  }
  return ch;
}

CohClass ambient_todd(const RingPresentation& ring) {
  const auto series = todd_series(ring.dimension());
  CohClass td = CohClass::constant(ring, 1);
  for (int i = 0; i < ring.generators(); ++i) {
    const CohClass t = apply_series(series, CohClass::generator(ring, i));
    td = td * power(t, ring.dims()[static_cast<std::size_t>(i)] + 1);
  }
  return td;
}

}  // namespace

VarietyContext VarietyContext::product_projective(const std::vector<int>& dims) {
  RingPresentation ring(dims);
  return VarietyContext(ring, std::nullopt, {}, ring.dimension(), ambient_tangent_ch(ring), ambient_todd(ring));
}

VarietyContext VarietyContext::hypersurface(const std::vector<int>& dims, const std::vector<int>& bidegree) {
  RingPresentation ring(dims);
  std::vector<Rational> coeffs(bidegree.begin(), bidegree.end());
  CohClass d = CohClass::linear(ring, coeffs);
  const int dim = ring.dimension() - 1;
  CohClass tangent = (ambient_tangent_ch(ring) - ch_line(d).ch()).truncated(dim);
  CohClass todd = (ambient_todd(ring) * inverse(apply_series(todd_series(ring.dimension()), d))).truncated(dim);
  return VarietyContext(ring, d, bidegree, dim, tangent, todd);
}

std::vector<CohClass> VarietyContext::tangent_chern() const {
  auto c = ch_to_chern(SheafClass(tangent_ch_));
  c.resize(static_cast<std::size_t>(dimension_) + 1, CohClass(ambient_));
  return c;
}

SheafClass VarietyContext::cotangent() const { return SheafClass(tangent_ch_).dual(); }

CohClass VarietyContext::line_class(const std::vector<int>& coeffs) const {
  return CohClass::linear(ambient_, std::vector<Rational>(coeffs.begin(), coeffs.end()));
}

Rational integrate(const VarietyContext& ctx, const CohClass& alpha) {
  if (!(alpha.ring() == ctx.ambient())) throw Error(ErrorKind::InvalidArgument, "class from a different ring");
  const CohClass integrand = ctx.divisor() ? alpha * *ctx.divisor() : alpha;
  return integrand.coefficient(ctx.ambient().top_monomial());
}

Rational euler_characteristic(const VarietyContext& ctx) {
  return integrate(ctx, ctx.tangent_chern()[static_cast<std::size_t>(ctx.dimension())]);
}

Rational chi_pair(const VarietyContext& ctx, const SheafClass& e, const SheafClass& f) {
  return integrate(ctx, e.dual().ch() * f.ch() * ctx.todd());
}

VarietyContext liqin_fourfold() { return VarietyContext::hypersurface({1, 4}, {2, 5}); }

SheafClass liqin_sheaf(const VarietyContext& x, int eps1, int eps2) {
  return ch_line(x.line_class({-1, 1})) + ch_line(x.line_class({eps1 + 1, eps2 - 1}));
}

LiQinCase liqin_case(int eps1, int eps2) {
  if ((eps1 != 0 && eps1 != 1) || (eps2 != 0 && eps2 != 1))
    throw Error(ErrorKind::InvalidArgument, "epsilon values must be 0 or 1");
  const VarietyContext x = liqin_fourfold();
  const SheafClass e = liqin_sheaf(x, eps1, eps2);
  const Rational chi = chi_pair(x, e, e);
  if (!is_integer(chi)) throw Error(ErrorKind::InternalInconsistency, "chi(E,E) is not an integer: " + chi.get_str());
  LiQinCase out;
  out.eps1 = eps1;
  out.eps2 = eps2;
  out.chi = chi.get_num();
  const Integer twice_k = Integer(2) - out.chi;
  if (twice_k % 2 != 0) throw Error(ErrorKind::InternalInconsistency, "2 - chi(E,E) is odd");
  out.k = twice_k / 2;
  out.binomial_form = Integer(1 + eps1) * binomial(6 - eps2, 4);
  return out;
}

Integer chi_ideal_cy4(int n, int h02) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "number of points must be nonnegative");
  if (h02 != 0 && h02 != 1) throw Error(ErrorKind::InvalidArgument, "h02 must be 0 or 1");
  // chi(O_X) from h^{0,i} = (1, 0, h02, 0, 1).
  const Integer chi_o = Integer(1) + h02 + 1;
  // chi(O, O_Z) = n and, by Serre duality with trivial canonical class,
  // chi(O_Z, O) = n; chi(O_Z, O_Z) = n * sum_i (-1)^i C(4, i).
  Integer chi_zz = 0;
  for (int i = 0; i <= 4; ++i) chi_zz += Integer(i % 2 ? -1 : 1) * binomial(4, i);
  chi_zz *= n;
  return chi_o - Integer(n) - Integer(n) + chi_zz;
}

int vdim_ideal_cy4(int n, int h02) {
  const Integer v = Integer(2) - chi_ideal_cy4(n, h02);
  return static_cast<int>(v.get_si());
}

SurfaceIdentity surface_obstruction_identity(const VarietyContext& surface, const SheafClass& f) {
  if (surface.dimension() != 2) throw Error(ErrorKind::InvalidArgument, "context is not a surface");
  SurfaceIdentity out;
  out.lhs = -chi_pair(surface, f, f * surface.cotangent());
  const Rational r = f.rank();
  out.rhs = Rational(-2) * chi_pair(surface, f, f) + r * r * euler_characteristic(surface);
  out.equal = out.lhs == out.rhs;
  return out;
}

SheafClass projective_plane_sheaf(const VarietyContext& p2, const Rational& ch0, const Rational& ch1,
                                  const Rational& ch2) {
  if (p2.ambient().dims() != std::vector<int>{2} || p2.divisor())
    throw Error(ErrorKind::InvalidArgument, "context is not P^2");
  CohClass ch(p2.ambient());
  ch.add_term({0}, ch0);
  ch.add_term({1}, ch1);
  ch.add_term({2}, ch2);
  return SheafClass(ch);
}

}  // namespace dt4
