#include "relconv/gf2_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace relconv {

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    auto words = row_mut(r);
    if (value)
        words[c / 64] |= bit;
    else
        words[c / 64] &= ~bit;
}

bool GF2Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t GF2Matrix::column_weight(std::size_t c) const {
    std::size_t weight = 0;
    for (std::size_t r = 0; r < rows_; ++r) weight += get(r, c);
    return weight;
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("GF2Matrix product: inner dimensions differ");
    GF2Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        auto target = out.row_mut(i);
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (!a.get(i, k)) continue;
            const auto source = b.row(k);
            for (std::size_t w = 0; w < out.words_; ++w) target[w] ^= source[w];
        }
    }
    return out;
}

namespace {

// Row-reduces `m` in place (optionally carrying a right-hand side) and returns
// the pivot column of each pivot row.
std::vector<std::size_t> eliminate(std::size_t rows, std::size_t cols, std::size_t words,
                                   std::vector<std::uint64_t>& data, std::vector<bool>* rhs) {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t r = pivot_row;
        while (r < rows && !(data[r * words + w] & bit)) ++r;
        if (r == rows) continue;
        if (r != pivot_row) {
            std::swap_ranges(data.begin() + static_cast<std::ptrdiff_t>(r * words),
                             data.begin() + static_cast<std::ptrdiff_t>((r + 1) * words),
                             data.begin() + static_cast<std::ptrdiff_t>(pivot_row * words));
            if (rhs) {
                const bool tmp = (*rhs)[r];
                (*rhs)[r] = (*rhs)[pivot_row];
                (*rhs)[pivot_row] = tmp;
            }
        }
        for (std::size_t other = 0; other < rows; ++other) {
            if (other == pivot_row || !(data[other * words + w] & bit)) continue;
            // Rank only needs rows below cleared; solving needs all of them.
            // Words left of w hold columns that are settled either way.
            if (!rhs && other < pivot_row) continue;
            for (std::size_t k = w; k < words; ++k) data[other * words + k] ^= data[pivot_row * words + k];
            if (rhs && (*rhs)[pivot_row]) (*rhs)[other] = !(*rhs)[other];
        }
        pivots.push_back(c);
        ++pivot_row;
    }
    return pivots;
}

}  // namespace

std::size_t gf2_rank(const GF2Matrix& matrix) {
    GF2Matrix work = matrix;
    return eliminate(work.rows_, work.cols_, work.words_, work.data_, nullptr).size();
}

std::optional<std::vector<bool>> gf2_solve(const GF2Matrix& a, const std::vector<bool>& b) {
    if (b.size() != a.rows_) throw std::invalid_argument("gf2_solve: right-hand side has wrong length");
    GF2Matrix work = a;
    std::vector<bool> rhs = b;
    const auto pivots = eliminate(work.rows_, work.cols_, work.words_, work.data_, &rhs);
    for (std::size_t r = pivots.size(); r < work.rows_; ++r)
        if (rhs[r]) return std::nullopt;
    std::vector<bool> x(a.cols_, false);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs[i];
    return x;
}

}  // namespace relconv
