#include "inducibility/bounds.hpp"

#include <stdexcept>

namespace inducibility {

ClosedFormBounds closed_form_bounds(int t) {
  if (t < 2) throw std::invalid_argument("bounds need t >= 2");
  if (t > 20) throw std::invalid_argument("bounds are tabulated for t <= 20");
  Integer factorial(1);
  for (int i = 2; i <= t; ++i) factorial *= i;
  const Integer tt(t);
  ClosedFormBounds b;
  b.t = t;
  b.pippenger_golumbic = Rational(factorial, pow(tt, t) - tt);
  b.exoo = Rational(factorial, pow(tt + 1, t - 1) - 1);
  b.path_upper = Rational(factorial, 2 * pow(tt - 1, t - 1));
  return b;
}

}  // namespace inducibility
