#pragma once

#include "symprod/rational.hpp"

#include <vector>

namespace symprod {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row major; rows must have equal length

Rat det(Mat a);

// Ryser's inclusion-exclusion formula, O(2^n * n).  Callers are expected to
// guard the arity; this routine itself refuses n > 20 outright.
Rat permanent(const Mat& a);

int rank(Mat a);

// Reduced row echelon form; if pivot_cols is non-null it receives the pivot
// column indices in order.
Mat rref(Mat a, std::vector<int>* pivot_cols = nullptr);

// Basis of the right kernel {x : a x = 0}, one vector per free column,
// in free-column order (deterministic).
std::vector<Vec> nullspace(const Mat& a);

}  // namespace symprod
