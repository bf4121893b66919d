#include "dt4/rational.hpp"

#include "dt4/error.hpp"

namespace dt4 {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonGenericParameters: return "NonGenericParameters";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotEffective: return "NotEffective";
    case ErrorKind::OddPairing: return "OddPairing";
    case ErrorKind::CheckFailed: return "CheckFailed";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty rational");
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && part.front() == '-') part.remove_prefix(1);
    if (part.empty()) return false;
    for (char c : part)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw Error(ErrorKind::InvalidArgument, "not a rational: '" + s + "'");
  Rational q{Integer(num), Integer(den)};
  if (q.get_den() == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Integer binomial(long x, long k) {
  if (k < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= Integer(x - i);
    den *= Integer(i + 1);
  }
  return num / den;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace dt4
