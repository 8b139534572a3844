#pragma once

#include <functional>
#include <vector>

namespace selfevoc {

// Central-difference gradient check. Returns the max over coordinates of
// |analytic - central| / max(1, |central|). Throws if f evaluates to a
// non-finite value near x.
double finite_diff_check(const std::function<double(const std::vector<double>&)>& f,
                         const std::function<std::vector<double>(const std::vector<double>&)>& grad,
                         const std::vector<double>& x, double h);

}  // namespace selfevoc
