#include "grasslab/field.hpp"

#include <string>

#include "grasslab/error.hpp"

namespace grasslab {

bool Field::is_supported_prime(int p) noexcept {
  switch (p) {
    case 2: case 3: case 5: case 7: case 11: case 13: return true;
    default: return false;
  }
}

Field::Field(int p) : p_(p) {
  if (!is_supported_prime(p))
    throw Error(ErrorCode::ParamOutOfRange, "field modulus must be a prime in [2, 13], got " + std::to_string(p));
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if ((a * b) % p == 1) inverse_[a] = static_cast<Elem>(b);
}

}  // namespace grasslab
