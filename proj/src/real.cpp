#include "plab/real.hpp"

#include "plab/error.hpp"

#include <cctype>
#include <ios>

namespace plab {

Real parse_real(const std::string& text) {
  if (text.empty()) throw DomainError("empty number");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' || c == 'e' ||
          c == 'E'))
      throw DomainError("not a decimal number: '" + text + "'");
  }
  try {
    return Real(text);
  } catch (const std::exception&) {
    throw DomainError("not a decimal number: '" + text + "'");
  }
}

std::string format_real(const Real& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

Complex root_of_unity(long long num, long long den) {
  Real angle = 2 * pi() * Real(num) / Real(den);
  return {cos(angle), sin(angle)};
}

}  // namespace plab
