#include "symprod/exact_linalg.hpp"

namespace symprod {

namespace {

void check_rect(const Mat& a) {
    for (const auto& row : a)
        if (row.size() != a.front().size())
            throw std::domain_error("ragged matrix");
}

}  // namespace

Rat det(Mat a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    check_rect(a);
    if (a.front().size() != n) throw std::domain_error("det: matrix not square");
    Rat result = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            result = -result;
        }
        result *= a[col][col];
        const Rat inv = Rat(1) / a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const Rat f = a[r][col] * inv;
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return result;
}

Rat permanent(const Mat& a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    check_rect(a);
    if (a.front().size() != n) throw std::domain_error("permanent: matrix not square");
    if (n > 20) throw resource_error("permanent: arity too large");
    // Ryser: perm(A) = (-1)^n sum_{S != empty} (-1)^|S| prod_i sum_{j in S} a_ij
    Rat total = 0;
    const unsigned long full = 1ul << n;
    for (unsigned long s = 1; s < full; ++s) {
        Rat prod = 1;
        for (size_t i = 0; i < n && prod != 0; ++i) {
            Rat rowsum = 0;
            for (size_t j = 0; j < n; ++j)
                if (s & (1ul << j)) rowsum += a[i][j];
            prod *= rowsum;
        }
        const bool odd = __builtin_parityl(s);
        if (odd) total -= prod; else total += prod;
    }
    if (n % 2 == 0) return total;
    return -total;
}

Mat rref(Mat a, std::vector<int>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    if (a.empty()) return a;
    check_rect(a);
    const size_t rows = a.size(), cols = a.front().size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        const Rat inv = Rat(1) / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        if (pivot_cols) pivot_cols->push_back(static_cast<int>(c));
        ++r;
    }
    return a;
}

int rank(Mat a) {
    std::vector<int> pivots;
    rref(std::move(a), &pivots);
    return static_cast<int>(pivots.size());
}

std::vector<Vec> nullspace(const Mat& a) {
    if (a.empty()) return {};
    std::vector<int> pivots;
    const Mat e = rref(a, &pivots);
    const size_t cols = e.front().size();
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<Vec> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec v(cols, Rat(0));
        v[free_c] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            v[static_cast<size_t>(pivots[k])] = -e[k][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace symprod
