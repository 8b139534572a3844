#include "selfevoc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace selfevoc {

namespace {

constexpr int kMaxClusters = 64;

void check_labels(const std::vector<int>& pred, const std::vector<int>& truth) {
    if (pred.size() != truth.size())
        throw std::invalid_argument("label vectors have different lengths");
    for (int v : pred)
        if (v < 0) throw std::invalid_argument("negative label in pred");
    for (int v : truth)
        if (v < 0) throw std::invalid_argument("negative label in truth");
}

int max_label(const std::vector<int>& v) {
    int m = -1;
    for (int x : v) m = std::max(m, x);
    return m;
}

double pairs(double n) { return 0.5 * n * (n - 1.0); }

}  // namespace

std::vector<int> hungarian(const Matrix& cost) {
    if (cost.rows() != cost.cols()) throw std::invalid_argument("hungarian: matrix must be square");
    const int n = static_cast<int>(cost.rows());
    if (n == 0) return {};

    const double inf = std::numeric_limits<double>::infinity();
    // Potentials-based shortest augmenting path, 1-indexed with a dummy 0.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), char{0});
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            double delta = inf;
            int j1 = -1;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> assignment(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] != 0) assignment[p[j] - 1] = j - 1;
    return assignment;
}

Matrix contingency_table(const std::vector<int>& a, const std::vector<int>& b) {
    check_labels(a, b);
    const int ka = max_label(a) + 1;
    const int kb = max_label(b) + 1;
    Matrix t(std::max(ka, 1), std::max(kb, 1));
    for (std::size_t i = 0; i < a.size(); ++i) t(a[i], b[i]) += 1.0;
    return t;
}

double clustering_accuracy(const std::vector<int>& pred, const std::vector<int>& truth) {
    check_labels(pred, truth);
    if (pred.empty()) throw std::invalid_argument("clustering_accuracy: empty input");
    const int kp = max_label(pred) + 1;
    const int kt = max_label(truth) + 1;
    if (kp > kMaxClusters || kt > kMaxClusters)
        throw std::invalid_argument("clustering_accuracy: more than 64 clusters");

    const int n = std::max(kp, kt);
    Matrix counts(n, n);
    for (std::size_t i = 0; i < pred.size(); ++i) counts(pred[i], truth[i]) += 1.0;

    // Maximize agreement = minimize (N - count).
    const double big = static_cast<double>(pred.size());
    Matrix cost(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cost(i, j) = big - counts(i, j);

    const std::vector<int> match = hungarian(cost);
    double agree = 0.0;
    for (int i = 0; i < n; ++i) agree += counts(i, match[i]);
    return agree / static_cast<double>(pred.size());
}

double normalized_mutual_info(const std::vector<int>& pred, const std::vector<int>& truth) {
    check_labels(pred, truth);
    if (pred.empty()) throw std::invalid_argument("normalized_mutual_info: empty input");

    const Matrix t = contingency_table(pred, truth);
    const double n = static_cast<double>(pred.size());
    std::vector<double> row_sum(t.rows(), 0.0), col_sum(t.cols(), 0.0);
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) {
            row_sum[i] += t(i, j);
            col_sum[j] += t(i, j);
        }

    double hp = 0.0, ht = 0.0;
    for (double s : row_sum)
        if (s > 0.0) hp -= (s / n) * std::log(s / n);
    for (double s : col_sum)
        if (s > 0.0) ht -= (s / n) * std::log(s / n);

    if (hp <= 0.0 || ht <= 0.0) {
        // Degenerate single-cluster side(s): identical trivial partitions
        // count as perfect agreement, anything else as none.
        return (hp <= 0.0 && ht <= 0.0) ? 1.0 : 0.0;
    }

    double mi = 0.0;
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) {
            const double c = t(i, j);
            if (c > 0.0) mi += (c / n) * std::log(c * n / (row_sum[i] * col_sum[j]));
        }

    return std::clamp(mi / std::sqrt(hp * ht), 0.0, 1.0);
}

double adjusted_rand_index(const std::vector<int>& pred, const std::vector<int>& truth) {
    check_labels(pred, truth);
    if (pred.size() < 2) throw std::invalid_argument("adjusted_rand_index: need at least 2 samples");

    const Matrix t = contingency_table(pred, truth);
    const double n = static_cast<double>(pred.size());
    std::vector<double> row_sum(t.rows(), 0.0), col_sum(t.cols(), 0.0);
    double index = 0.0;
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) {
            const double c = t(i, j);
            row_sum[i] += c;
            col_sum[j] += c;
            index += pairs(c);
        }
    double sum_a = 0.0, sum_b = 0.0;
    for (double s : row_sum) sum_a += pairs(s);
    for (double s : col_sum) sum_b += pairs(s);

    const double expected = sum_a * sum_b / pairs(n);
    const double max_index = 0.5 * (sum_a + sum_b);
    const double denom = max_index - expected;
    if (std::fabs(denom) < 1e-12) {
        // Both partitions trivial (all-one-cluster or all-singletons).
        return std::fabs(index - expected) < 1e-12 ? 1.0 : 0.0;
    }
    return (index - expected) / denom;
}

}  // namespace selfevoc
