#include "qd/gauss.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace qd {

// Newton iteration on the Legendre recurrence, symmetric roots.
static GaussRule build_rule(int n) {
    GaussRule rule;
    rule.x.assign(n, 0.0);
    rule.w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.x[i] = -z;
        rule.x[n - 1 - i] = z;
        rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.w[n - 1 - i] = rule.w[i];
    }
    return rule;
}

std::shared_ptr<const GaussRule> gauss_legendre(int n) {
    static std::mutex mtx;
    static std::map<int, std::shared_ptr<const GaussRule>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto rule = std::make_shared<const GaussRule>(build_rule(n));
    cache[n] = rule;
    return rule;
}

} // namespace qd
