#pragma once

#include <string>

namespace sfdepth {

// Coefficient field: the rationals (characteristic 0) or F_p. All linear
// algebra over these is exact.
struct FieldSpec {
  int characteristic = 0;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec mod(int p);  // validates p prime

  bool operator==(const FieldSpec&) const = default;
  std::string str() const;
};

bool is_prime(int p);

}  // namespace sfdepth
