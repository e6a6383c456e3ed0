#include "qd/multi_index.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qd {

double MultiIndex::factorial() const {
    double f = 1.0;
    for (int v : e)
        for (int k = 2; k <= v; ++k) f *= k;
    return f;
}

bool MultiIndex::operator<(const MultiIndex& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    return o.e < e; // within a degree: first exponent varies slowest
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

static void enumerate_degree(int n, int degree, std::vector<int>& cur, int pos,
                             std::vector<MultiIndex>& out) {
    if (pos == n - 1) {
        cur[pos] = degree;
        out.emplace_back(cur);
        return;
    }
    for (int v = degree; v >= 0; --v) {
        cur[pos] = v;
        enumerate_degree(n, degree - v, cur, pos + 1, out);
    }
}

std::vector<MultiIndex> enumerate_multi_indices(int n, int max_degree) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(n, 0);
    for (int d = 0; d <= max_degree; ++d) enumerate_degree(n, d, cur, 0, out);
    return out;
}

SimplexTable::SimplexTable(int n, int order) : n_(n), order_(order) {
    list_ = enumerate_multi_indices(n, order);
    std::size_t flat_size = 1;
    for (int i = 0; i < n; ++i) flat_size *= static_cast<std::size_t>(order + 1);
    lookup_.assign(flat_size, -1);
    for (int i = 0; i < size(); ++i) lookup_[flat_key(list_[i])] = i;
    sum_.assign(static_cast<std::size_t>(size()) * size(), -1);
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) {
            if (list_[i].degree() + list_[j].degree() > order) continue;
            sum_[static_cast<std::size_t>(i) * size() + j] = index_of(list_[i] + list_[j]);
        }
}

int SimplexTable::flat_key(const MultiIndex& alpha) const {
    int key = 0;
    for (int i = 0; i < n_; ++i) key = key * (order_ + 1) + alpha.e[i];
    return key;
}

int SimplexTable::index_of(const MultiIndex& alpha) const {
    if (alpha.dim() != n_ || alpha.degree() > order_) return -1;
    for (int v : alpha.e)
        if (v < 0) return -1;
    return lookup_[flat_key(alpha)];
}

std::shared_ptr<const SimplexTable> SimplexTable::get(int n, int order) {
    if (n < 1 || n > 6 || order < 0 || order > 16)
        throw std::invalid_argument("SimplexTable: unsupported (dim, order)");
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::shared_ptr<const SimplexTable>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, order);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ptr = std::shared_ptr<const SimplexTable>(new SimplexTable(n, order));
    cache[key] = ptr;
    return ptr;
}

} // namespace qd
