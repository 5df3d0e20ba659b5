#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lpp/ideal.hpp"

namespace lpp {

// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<std::int64_t>& data() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B);

std::size_t rank_mod_p(const IntMatrix& A, long p);

// Rank over Q by fraction-free elimination. Runs in int64 and restarts in
// arbitrary precision if an intermediate overflows.
std::size_t rank_rational(const IntMatrix& A);

std::size_t rank(const IntMatrix& A, const Field& field);

} // namespace lpp
