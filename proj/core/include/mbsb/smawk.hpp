#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace mbsb {

/// A matrix defined by an evaluation function; entries are computed on demand
/// and never stored. eval must be pure and total over the index rectangle.
struct ImplicitMatrix {
    int rows = 0;
    int cols = 0;
    std::function<double(int row, int col)> eval;
};

struct RowMax {
    int col = 0;
    double value = 0;
};

/// Row maxima of a totally monotone matrix (leftmost maximizing column per
/// row) in O(rows + cols) evaluations. The caller guarantees total
/// monotonicity for maxima: for i<i', j<j', A[i,j] <= A[i,j'] implies
/// A[i',j] <= A[i',j']. Output on non-monotone inputs is unspecified.
/// If eval_count is non-null, it is incremented once per entry evaluation.
std::vector<RowMax> row_maxima(const ImplicitMatrix& m, std::uint64_t* eval_count = nullptr);

}  // namespace mbsb
