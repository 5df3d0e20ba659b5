#include "lpp/linalg.hpp"

#include <optional>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "lpp/error.hpp"

namespace lpp {

namespace {

using boost::multiprecision::cpp_int;

std::int64_t reduce(std::int64_t v, std::int64_t p)
{
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p)
{
    std::int64_t result = 1;
    std::int64_t base = a;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) {
            result = static_cast<std::int64_t>((static_cast<__int128>(result) * base) % p);
        }
        base = static_cast<std::int64_t>((static_cast<__int128>(base) * base) % p);
    }
    return result;
}

// Bareiss elimination over a generic integer type; returns nullopt when the
// step function reports overflow.
template <class T, class Step>
std::optional<std::size_t> bareiss(std::vector<std::vector<T>> m, std::size_t cols, Step step)
{
    const std::size_t rows = m.size();
    std::size_t r = 0;
    T previous = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                auto v = step(m[r][c], m[i][j], m[i][c], m[r][j], previous);
                if (!v) {
                    return std::nullopt;
                }
                m[i][j] = *v;
            }
            m[i][c] = 0;
        }
        previous = m[r][c];
        ++r;
    }
    return r;
}

} // namespace

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B)
{
    if (A.cols() != B.rows()) {
        throw DimensionMismatch("matrix product shape mismatch");
    }
    IntMatrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const std::int64_t a = A(i, k);
            if (a == 0) {
                continue;
            }
            for (std::size_t j = 0; j < B.cols(); ++j) {
                C(i, j) += a * B(k, j);
            }
        }
    }
    return C;
}

std::size_t rank_mod_p(const IntMatrix& A, long p)
{
    if (p < 2) {
        throw PreconditionError("modular rank needs a prime");
    }
    const std::size_t rows = A.rows();
    const std::size_t cols = A.cols();
    std::vector<std::int64_t> m(A.data());
    for (auto& v : m) {
        v = reduce(v, p);
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot * cols + c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != r) {
            for (std::size_t j = 0; j < cols; ++j) {
                std::swap(m[pivot * cols + j], m[r * cols + j]);
            }
        }
        const std::int64_t inv = inverse_mod(m[r * cols + c], p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::int64_t f = m[i * cols + c] * inv % p;
            if (f == 0) {
                continue;
            }
            for (std::size_t j = c; j < cols; ++j) {
                m[i * cols + j] = reduce(m[i * cols + j] - f * m[r * cols + j], p);
            }
        }
        ++r;
    }
    return r;
}

std::size_t rank_rational(const IntMatrix& A)
{
    const std::size_t rows = A.rows();
    const std::size_t cols = A.cols();
    std::vector<std::vector<std::int64_t>> small(rows, std::vector<std::int64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            small[i][j] = A(i, j);
        }
    }
    auto checked = [](std::int64_t piv, std::int64_t x, std::int64_t lead, std::int64_t top,
                      std::int64_t prev) -> std::optional<std::int64_t> {
        std::int64_t a = 0;
        std::int64_t b = 0;
        std::int64_t d = 0;
        if (__builtin_mul_overflow(piv, x, &a) || __builtin_mul_overflow(lead, top, &b)
            || __builtin_sub_overflow(a, b, &d)) {
            return std::nullopt;
        }
        return d / prev;
    };
    if (auto r = bareiss(std::move(small), cols, checked)) {
        return *r;
    }
    std::vector<std::vector<cpp_int>> big(rows, std::vector<cpp_int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            big[i][j] = A(i, j);
        }
    }
    auto exact = [](const cpp_int& piv, const cpp_int& x, const cpp_int& lead, const cpp_int& top,
                    const cpp_int& prev) -> std::optional<cpp_int> { return (piv * x - lead * top) / prev; };
    return *bareiss(std::move(big), cols, exact);
}

std::size_t rank(const IntMatrix& A, const Field& field)
{
    return field.characteristic() == 0 ? rank_rational(A) : rank_mod_p(A, field.characteristic());
}

} // namespace lpp
