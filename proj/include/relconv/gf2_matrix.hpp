#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace relconv {

/// Dense matrix over the two-element field, rows packed into 64-bit words.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols);

    static GF2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1U; }
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c) { row_mut(r)[c / 64] ^= std::uint64_t{1} << (c % 64); }

    std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * words_, words_}; }

    bool is_zero() const;
    std::size_t column_weight(std::size_t c) const;

    friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
    friend bool operator==(const GF2Matrix& a, const GF2Matrix& b) = default;

private:
    std::span<std::uint64_t> row_mut(std::size_t r) { return {data_.data() + r * words_, words_}; }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;

    friend std::size_t gf2_rank(const GF2Matrix&);
    friend std::optional<std::vector<bool>> gf2_solve(const GF2Matrix&, const std::vector<bool>&);
};

/// Rank over Z2 by Gaussian elimination on a private copy.
std::size_t gf2_rank(const GF2Matrix& matrix);

/// Some x with A x = b, or nullopt if the system is inconsistent. Free
/// variables are set to zero, so the answer is the unique solution supported
/// on the pivot columns chosen left to right.
std::optional<std::vector<bool>> gf2_solve(const GF2Matrix& a, const std::vector<bool>& b);

}  // namespace relconv
