#include "dyfrt/scalar.hpp"

#include <cctype>

#include "dyfrt/errors.hpp"

namespace dyfrt {

std::string to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view t) {
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class to_mpz(std::string_view t) {
  std::string s(t);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num)) throw StructuralError("bad scalar: '" + std::string(text) + "'");
  Scalar out;
  if (slash == std::string_view::npos) {
    out = Scalar(to_mpz(num));
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_text(den) || den.front() == '-' || den.front() == '+')
      throw StructuralError("bad scalar: '" + std::string(text) + "'");
    mpz_class d = to_mpz(den);
    if (d == 0) throw StructuralError("zero denominator: '" + std::string(text) + "'");
    out = Scalar(to_mpz(num), d);
    out.canonicalize();
  }
  return out;
}

}  // namespace dyfrt
