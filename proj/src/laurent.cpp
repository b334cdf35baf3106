#include "heaptl/laurent.hpp"

#include <sstream>

namespace heaptl {

bool Laurent::divide(const Laurent& num, const Laurent& den, Laurent& quot) {
  if (den.is_zero()) return false;
  Laurent rem = num;  // copy before touching quot: quot may alias num
  quot = Laurent();
  if (rem.is_zero()) return true;
  // normalize to ordinary polynomials; a valid quotient then has bottom
  // exponent num.min - den.min, which bounds the division from below
  const int den_top = den.max_exp();
  const int floor_exp = (rem.min_exp() - den.min_exp()) + den_top;
  while (!rem.is_zero()) {
    const int top = rem.max_exp();
    if (top < floor_exp) return false;
    const Int lead = rem.coeff(top);
    const Int den_lead = den.coeff(den_top);
    if (lead % den_lead != 0) return false;
    Laurent factor = monomial(lead / den_lead, top - den_top);
    quot += factor;
    rem -= den * factor;
  }
  return true;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      if (a < 0) {
        out << " - ";
        a = -a;
      } else {
        out << " + ";
      }
    }
    if (e == 0) {
      out << a;
    } else {
      if (a != 1) out << a;
      out << "v";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace heaptl
