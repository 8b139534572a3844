#include "selfevoc/gradcheck.hpp"

#include <cmath>
#include <stdexcept>

namespace selfevoc {

double finite_diff_check(const std::function<double(const std::vector<double>&)>& f,
                         const std::function<std::vector<double>(const std::vector<double>&)>& grad,
                         const std::vector<double>& x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("finite_diff_check: h must be positive");

    const std::vector<double> analytic = grad(x);
    if (analytic.size() != x.size())
        throw std::invalid_argument("finite_diff_check: gradient size mismatch");

    std::vector<double> probe = x;
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + h;
        const double fp = f(probe);
        probe[i] = x[i] - h;
        const double fm = f(probe);
        probe[i] = x[i];
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw std::runtime_error("finite_diff_check: f is non-finite near x");
        const double central = (fp - fm) / (2.0 * h);
        const double rel = std::fabs(analytic[i] - central) / std::max(1.0, std::fabs(central));
        worst = std::max(worst, rel);
    }
    return worst;
}

}  // namespace selfevoc
