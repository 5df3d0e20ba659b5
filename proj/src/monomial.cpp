#include "lpp/monomial.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "lpp/error.hpp"

namespace lpp {

namespace {

void check_nvars(std::size_t n)
{
    if (n > kMaxVars) {
        throw PreconditionError("at most " + std::to_string(kMaxVars) + " variables are supported, got "
                                + std::to_string(n));
    }
}

Exponent checked_exponent(long e)
{
    if (e < 0 || e > std::numeric_limits<Exponent>::max()) {
        throw PreconditionError("exponent out of range: " + std::to_string(e));
    }
    return static_cast<Exponent>(e);
}

void check_same_ring(const Monomial& u, const Monomial& v)
{
    if (u.nvars() != v.nvars()) {
        throw DimensionMismatch("monomials in " + std::to_string(u.nvars()) + " and " + std::to_string(v.nvars())
                                + " variables");
    }
}

} // namespace

Monomial::Monomial(std::size_t n)
{
    check_nvars(n);
    n_ = static_cast<std::uint8_t>(n);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(exponents.size())
{
    std::size_t i = 0;
    for (int e : exponents) {
        exps_[i++] = checked_exponent(e);
    }
}

Monomial Monomial::from_exponents(std::span<const int> exponents)
{
    Monomial m(exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        m.exps_[i] = checked_exponent(exponents[i]);
    }
    return m;
}

Monomial Monomial::variable(std::size_t n, std::size_t k, int power)
{
    Monomial m(n);
    if (k >= n) {
        throw PreconditionError("variable index " + std::to_string(k + 1) + " outside ring of "
                                + std::to_string(n) + " variables");
    }
    m.exps_[k] = checked_exponent(power);
    return m;
}

Monomial Monomial::with(std::size_t i, int exponent) const
{
    if (i >= n_) {
        throw PreconditionError("variable index out of range");
    }
    Monomial m = *this;
    m.exps_[i] = checked_exponent(exponent);
    return m;
}

int Monomial::degree() const noexcept
{
    int d = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        d += exps_[i];
    }
    return d;
}

bool Monomial::is_one() const noexcept
{
    return std::all_of(exps_.begin(), exps_.begin() + n_, [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept
{
    return std::all_of(exps_.begin(), exps_.begin() + n_, [](Exponent e) { return e <= 1; });
}

std::uint32_t Monomial::support() const noexcept
{
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (exps_[i] != 0) {
            mask |= 1u << i;
        }
    }
    return mask;
}

std::size_t Monomial::max_variable() const noexcept
{
    for (std::size_t i = n_; i > 0; --i) {
        if (exps_[i - 1] != 0) {
            return i;
        }
    }
    return 0;
}

Monomial Monomial::radical() const noexcept
{
    Monomial r = *this;
    for (std::size_t i = 0; i < n_; ++i) {
        r.exps_[i] = exps_[i] != 0 ? 1 : 0;
    }
    return r;
}

bool Monomial::divides(const Monomial& other) const
{
    check_same_ring(*this, other);
    for (std::size_t i = 0; i < n_; ++i) {
        if (exps_[i] > other.exps_[i]) {
            return false;
        }
    }
    return true;
}

std::size_t Monomial::hash() const noexcept
{
    // FNV-1a over the used exponents.
    std::uint64_t h = 1469598103934665603ull ^ n_;
    for (std::size_t i = 0; i < n_; ++i) {
        h ^= exps_[i];
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::string Monomial::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) {
        if (exps_[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += 'x';
        out += std::to_string(i + 1);
        if (exps_[i] > 1) {
            out += '^';
            out += std::to_string(exps_[i]);
        }
    }
    return out.empty() ? "1" : out;
}

Monomial operator*(const Monomial& u, const Monomial& v)
{
    check_same_ring(u, v);
    Monomial m = u;
    for (std::size_t i = 0; i < u.n_; ++i) {
        m.exps_[i] = checked_exponent(long{u.exps_[i]} + v.exps_[i]);
    }
    return m;
}

Monomial operator/(const Monomial& u, const Monomial& v)
{
    if (!v.divides(u)) {
        throw PreconditionError(v.to_string() + " does not divide " + u.to_string());
    }
    Monomial m = u;
    for (std::size_t i = 0; i < u.n_; ++i) {
        m.exps_[i] = static_cast<Exponent>(u.exps_[i] - v.exps_[i]);
    }
    return m;
}

Monomial gcd(const Monomial& u, const Monomial& v)
{
    check_same_ring(u, v);
    Monomial m = u;
    for (std::size_t i = 0; i < u.n_; ++i) {
        m.exps_[i] = std::min(u.exps_[i], v.exps_[i]);
    }
    return m;
}

Monomial lcm(const Monomial& u, const Monomial& v)
{
    check_same_ring(u, v);
    Monomial m = u;
    for (std::size_t i = 0; i < u.n_; ++i) {
        m.exps_[i] = std::max(u.exps_[i], v.exps_[i]);
    }
    return m;
}

Monomial colon(const Monomial& u, const Monomial& v)
{
    check_same_ring(u, v);
    Monomial m = u;
    for (std::size_t i = 0; i < u.n_; ++i) {
        m.exps_[i] = u.exps_[i] > v.exps_[i] ? static_cast<Exponent>(u.exps_[i] - v.exps_[i]) : 0;
    }
    return m;
}

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v)
{
    check_same_ring(u, v);
    for (std::size_t i = 0; i < u.nvars(); ++i) {
        if (u[i] != v[i]) {
            return u[i] <=> v[i];
        }
    }
    return std::strong_ordering::equal;
}

std::strong_ordering revlex_compare(const Monomial& u, const Monomial& v)
{
    check_same_ring(u, v);
    if (u.degree() != v.degree()) {
        throw PreconditionError("revlex comparison of " + u.to_string() + " and " + v.to_string()
                                + " with different degrees");
    }
    for (std::size_t i = u.nvars(); i > 0; --i) {
        if (u[i - 1] != v[i - 1]) {
            return v[i - 1] <=> u[i - 1];
        }
    }
    return std::strong_ordering::equal;
}

bool DegLexLess::operator()(const Monomial& u, const Monomial& v) const
{
    const int du = u.degree();
    const int dv = v.degree();
    if (du != dv) {
        return du < dv;
    }
    return lex_compare(u, v) > 0;
}

namespace {

void fill_degree(std::vector<int>& exps, std::size_t pos, int remaining, std::vector<Monomial>& out)
{
    if (pos + 1 == exps.size()) {
        exps[pos] = remaining;
        out.push_back(Monomial::from_exponents(exps));
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        exps[pos] = e;
        fill_degree(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, int d)
{
    check_nvars(n);
    std::vector<Monomial> out;
    if (d < 0) {
        return out;
    }
    if (n == 0) {
        if (d == 0) {
            out.emplace_back(0);
        }
        return out;
    }
    out.reserve(count_monomials(n, d));
    std::vector<int> exps(n, 0);
    fill_degree(exps, 0, d, out);
    return out;
}

std::size_t count_monomials(std::size_t n, int d)
{
    if (d < 0) {
        return 0;
    }
    if (n == 0) {
        return d == 0 ? 1 : 0;
    }
    // C(n-1+d, n-1) computed incrementally; each prefix product is an exact
    // binomial coefficient.
    unsigned __int128 c = 1;
    for (std::size_t k = 1; k < n; ++k) {
        c = c * static_cast<unsigned>(d + k) / k;
        if (c > std::numeric_limits<std::size_t>::max()) {
            return std::numeric_limits<std::size_t>::max();
        }
    }
    return static_cast<std::size_t>(c);
}

std::vector<Monomial> divisors(const Monomial& m)
{
    std::vector<Monomial> out{Monomial(m.nvars())};
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        const std::size_t base = out.size();
        for (int e = 1; e <= m[i]; ++e) {
            for (std::size_t k = 0; k < base; ++k) {
                out.push_back(out[k].with(i, e));
            }
        }
    }
    return out;
}

Monomial sigma_swap(const Monomial& m, std::size_t a, std::size_t b)
{
    if (a == b) {
        throw PreconditionError("sigma_swap needs two distinct variables");
    }
    if (a >= m.nvars() || b >= m.nvars()) {
        throw PreconditionError("sigma_swap variable outside the ring");
    }
    return m.with(a, m[b]).with(b, m[a]);
}

} // namespace lpp
