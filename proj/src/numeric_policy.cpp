#include "mgbccm/numeric_policy.hpp"

namespace mgbccm {

NumericPolicy& numeric_policy() {
  static NumericPolicy policy;
  return policy;
}

}  // namespace mgbccm
