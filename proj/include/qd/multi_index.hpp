///////////////////////////////////////////////////////////////////////////////
// multi_index.hpp
//
// multi-indices and the graded enumeration of the simplex |alpha| <= N
///////////////////////////////////////////////////////////////////////////////
#pragma once

#include <memory>
#include <vector>

namespace qd {

struct MultiIndex {
    std::vector<int> e; // exponents, one per variable

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> exps) : e(std::move(exps)) {}
    static MultiIndex zeros(int n) { return MultiIndex(std::vector<int>(n, 0)); }
    static MultiIndex unit(int n, int i) {
        MultiIndex m = zeros(n);
        m.e[i] = 1;
        return m;
    }

    int dim() const { return static_cast<int>(e.size()); }
    int degree() const {
        int s = 0;
        for (int v : e) s += v;
        return s;
    }
    double factorial() const; // alpha! as double

    bool operator==(const MultiIndex& o) const { return e == o.e; }
    bool operator<(const MultiIndex& o) const; // graded lexicographic
};

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);

/// all multi-indices of dimension n with |alpha| <= max_degree, graded-lex order
std::vector<MultiIndex> enumerate_multi_indices(int n, int max_degree);

/// dense enumeration tables for jets: list + exponent->position lookup
class SimplexTable {
  public:
    static std::shared_ptr<const SimplexTable> get(int n, int order);

    int dim() const { return n_; }
    int order() const { return order_; }
    int size() const { return static_cast<int>(list_.size()); }
    const MultiIndex& at(int i) const { return list_[i]; }
    const std::vector<MultiIndex>& list() const { return list_; }

    /// position of alpha in the graded list, -1 if |alpha| > order
    int index_of(const MultiIndex& alpha) const;

    /// position of the elementwise sum, -1 if it exceeds the order
    int sum_index(int i, int j) const { return sum_[static_cast<std::size_t>(i) * list_.size() + j]; }

  private:
    SimplexTable(int n, int order);
    int n_, order_;
    std::vector<MultiIndex> list_;
    std::vector<int> lookup_; // flat (order+1)^n array
    std::vector<int> sum_;    // precomputed pairwise sum positions
    int flat_key(const MultiIndex& alpha) const;
};

} // namespace qd
