#pragma once

namespace wg {

// Exponent pair (k, ell) of the equation N = p^k + n^ell, p prime, n >= 1.
// k >= 1 and ell >= 2 are enforced on construction; ell = 1 is rejected
// because every exponent function below assumes ell >= 2.
struct PowerPair {
  int k;
  int ell;

  PowerPair(int k_, int ell_);
};

}  // namespace wg
