#include "lpp/betti.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lpp/error.hpp"
#include "lpp/transforms.hpp"

namespace lpp {

namespace {

Monomial squarefree_from_mask(std::size_t n, std::uint32_t mask)
{
    Monomial mu(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
            mu = mu.with(i, 1);
        }
    }
    return mu;
}

std::int64_t small_binomial(int top, int k)
{
    if (k < 0 || top < 0 || k > top) {
        return 0;
    }
    std::int64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * (top - k + i) / i;
    }
    return c;
}

void accumulate(BettiResult& out, const Monomial& m, const std::vector<std::int64_t>& counts)
{
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] != 0) {
            out.multigraded.add(static_cast<int>(i), m, counts[i]);
            out.graded.add(static_cast<int>(i), m.degree(), counts[i]);
        }
    }
}

std::vector<Monomial> candidate_multidegrees(const MonomialIdeal& I)
{
    std::vector<Monomial> out;
    if (I.is_zero()) {
        return out;
    }
    for (auto& m : divisors(I.generator_lcm())) {
        if (I.contains(m)) {
            out.push_back(m);
        }
    }
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
}

} // namespace

std::string to_string(Convention c)
{
    return c == Convention::ideal ? "ideal" : "quotient";
}

std::int64_t BettiTable::at(int i, int j) const
{
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::int64_t count)
{
    if (count == 0) {
        return;
    }
    auto& slot = entries_[{i, j}];
    slot += count;
    if (slot == 0) {
        entries_.erase({i, j});
    }
}

int BettiTable::max_index() const noexcept
{
    int top = -1;
    for (const auto& [key, value] : entries_) {
        top = std::max(top, key.first);
    }
    return top;
}

std::int64_t BettiTable::total(int i) const
{
    std::int64_t sum = 0;
    for (const auto& [key, value] : entries_) {
        if (key.first == i) {
            sum += value;
        }
    }
    return sum;
}

bool MultidegreeKeyLess::operator()(const std::pair<int, Monomial>& x, const std::pair<int, Monomial>& y) const
{
    if (x.first != y.first) {
        return x.first < y.first;
    }
    return DegLexLess{}(x.second, y.second);
}

std::int64_t MultigradedBettiTable::at(int i, const Monomial& m) const
{
    auto it = entries_.find({i, m});
    return it == entries_.end() ? 0 : it->second;
}

void MultigradedBettiTable::add(int i, const Monomial& m, std::int64_t count)
{
    if (count == 0) {
        return;
    }
    auto& slot = entries_[{i, m}];
    slot += count;
    if (slot == 0) {
        entries_.erase({i, m});
    }
}

BettiTable MultigradedBettiTable::graded() const
{
    BettiTable t(Convention::ideal);
    for (const auto& [key, value] : entries_) {
        t.add(key.first, key.second.degree(), value);
    }
    return t;
}

std::vector<std::int64_t> KoszulSubcomplex::homology(const Field& field) const
{
    const std::size_t top = basis.size();
    std::vector<std::int64_t> ranks(top + 1, 0);
    for (std::size_t i = 1; i < top; ++i) {
        ranks[i] = static_cast<std::int64_t>(rank(boundary[i], field));
    }
    std::vector<std::int64_t> h(top, 0);
    for (std::size_t i = 0; i < top; ++i) {
        h[i] = static_cast<std::int64_t>(basis[i].size()) - ranks[i] - ranks[i + 1];
    }
    return h;
}

KoszulSubcomplex koszul_subcomplex(const MonomialIdeal& I, const Monomial& m)
{
    if (I.nvars() != m.nvars()) {
        throw DimensionMismatch("multidegree from another ring");
    }
    const std::size_t n = m.nvars();
    const std::uint32_t supp = m.support();
    const int k = std::popcount(supp);

    KoszulSubcomplex cx;
    cx.multidegree = m;
    cx.basis.resize(static_cast<std::size_t>(k) + 1);
    std::vector<std::vector<std::uint32_t>> masks(static_cast<std::size_t>(k) + 1);

    // Enumerate submasks of the support in increasing numeric order.
    for (std::uint32_t sub = 0;; sub = (sub - supp) & supp) {
        const Monomial mu = squarefree_from_mask(n, sub);
        if (I.contains(m / mu)) {
            const auto i = static_cast<std::size_t>(std::popcount(sub));
            cx.basis[i].push_back(mu);
            masks[i].push_back(sub);
        }
        if (sub == supp) {
            break;
        }
    }

    cx.boundary.resize(cx.basis.size());
    for (std::size_t i = 1; i < cx.basis.size(); ++i) {
        std::unordered_map<std::uint32_t, std::size_t> row_of;
        for (std::size_t r = 0; r < masks[i - 1].size(); ++r) {
            row_of.emplace(masks[i - 1][r], r);
        }
        IntMatrix D(masks[i - 1].size(), masks[i].size());
        for (std::size_t c = 0; c < masks[i].size(); ++c) {
            const std::uint32_t mu = masks[i][c];
            int position = 0;
            for (std::size_t v = 0; v < n; ++v) {
                if (!(mu & (1u << v))) {
                    continue;
                }
                ++position;
                // f in I implies f * x_v in I, so the face is always present.
                const std::size_t r = row_of.at(mu & ~(1u << v));
                D(r, c) = (position % 2 == 1) ? 1 : -1;
            }
        }
        cx.boundary[i] = std::move(D);
    }
    return cx;
}

std::vector<std::int64_t> koszul_betti_at(const MonomialIdeal& I, const Monomial& m, const Field& field)
{
    std::vector<std::int64_t> out(I.nvars() + 1, 0);
    if (!I.contains(m)) {
        return out;
    }
    const auto h = koszul_subcomplex(I, m).homology(field);
    std::copy(h.begin(), h.end(), out.begin());
    return out;
}

BettiResult betti_table(const MonomialIdeal& I, const Field& field, const BettiOptions& options)
{
    const auto candidates = candidate_multidegrees(I);
    std::vector<std::vector<std::int64_t>> results(candidates.size());
    std::exception_ptr failure;

#ifdef _OPENMP
    const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        try {
            results[k] = koszul_betti_at(I, candidates[k], field);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    (void)options;
    if (failure) {
        std::rethrow_exception(failure);
    }

    BettiResult out{BettiTable(Convention::ideal), {}};
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        accumulate(out, candidates[k], results[k]);
    }
    return out;
}

BettiResult betti_table_serial(const MonomialIdeal& I, const Field& field)
{
    BettiResult out{BettiTable(Convention::ideal), {}};
    for (const auto& m : candidate_multidegrees(I)) {
        accumulate(out, m, koszul_betti_at(I, m, field));
    }
    return out;
}

BettiTable to_quotient(const BettiTable& ideal_table)
{
    if (ideal_table.convention() != Convention::ideal) {
        throw PreconditionError("to_quotient expects an ideal-convention table");
    }
    BettiTable q(Convention::quotient);
    const bool unit = ideal_table.entries().size() == 1 && ideal_table.at(0, 0) == 1;
    if (unit) {
        return q;
    }
    q.add(0, 0, 1);
    for (const auto& [key, value] : ideal_table.entries()) {
        q.add(key.first + 1, key.second, value);
    }
    return q;
}

BettiTable to_ideal(const BettiTable& quotient_table)
{
    if (quotient_table.convention() != Convention::quotient) {
        throw PreconditionError("to_ideal expects a quotient-convention table");
    }
    BettiTable t(Convention::ideal);
    if (quotient_table.entries().empty()) {
        t.add(0, 0, 1);
        return t;
    }
    for (const auto& [key, value] : quotient_table.entries()) {
        if (key.first == 0) {
            continue;
        }
        t.add(key.first - 1, key.second, value);
    }
    return t;
}

HilbertFunction hilbert_from_betti(const BettiTable& ideal_table, std::size_t n, int cap)
{
    if (ideal_table.convention() != Convention::ideal) {
        throw PreconditionError("hilbert_from_betti expects an ideal-convention table");
    }
    HilbertFunction hf;
    hf.cap = cap;
    hf.values.assign(static_cast<std::size_t>(cap) + 1, 0);
    for (int d = 0; d <= cap; ++d) {
        BigInt v = 0;
        for (const auto& [key, value] : ideal_table.entries()) {
            const BigInt term = BigInt(value) * dim_polynomial_ring(n, d - key.second);
            v += (key.first % 2 == 0) ? term : BigInt(-term);
        }
        hf.values[static_cast<std::size_t>(d)] = v;
    }
    return hf;
}

MonomialIdeal shadow(const MonomialIdeal& I, const Monomial& m)
{
    const Monomial root = m.radical();
    const MonomialIdeal quotient = colon(I, m / root);
    const std::uint32_t supp = m.support();
    std::vector<Monomial> gens;
    for (const auto& g : quotient.generators()) {
        if (g.is_squarefree() && (g.support() & ~supp) == 0) {
            gens.push_back(g);
        }
    }
    return MonomialIdeal::from_generators(I.nvars(), std::move(gens));
}

KeyLemmaValues keylemma_check(const MonomialIdeal& I, const Monomial& m, const Field& field)
{
    const Monomial root = m.radical();
    const Monomial rest = m / root;
    KeyLemmaValues v;
    v.direct = koszul_betti_at(I, m, field);
    v.intersection =
        koszul_betti_at(intersect(I, MonomialIdeal::from_generators(I.nvars(), {rest})), m, field);
    v.colon = koszul_betti_at(colon(I, rest), root, field);
    v.shadow = koszul_betti_at(shadow(I, m), root, field);
    if (v.direct != v.intersection || v.direct != v.colon || v.direct != v.shadow) {
        throw CertificateFailure("multigraded Betti reductions disagree at " + m.to_string() + " for "
                                 + I.to_string());
    }
    return v;
}

BettiTable ek_betti(const MonomialIdeal& B)
{
    if (!is_borel(B)) {
        throw PreconditionError("Eliahou-Kervaire formula needs a Borel ideal, got " + B.to_string());
    }
    BettiTable t(Convention::ideal);
    for (const auto& u : B.generators()) {
        const int top = static_cast<int>(u.max_variable());
        if (top == 0) {
            t.add(0, 0, 1);
            continue;
        }
        for (int i = 0; i < top; ++i) {
            t.add(i, u.degree() + i, small_binomial(top - 1, i));
        }
    }
    return t;
}

BettiTable colon_formula_betti(const MonomialIdeal& M, const PowerSequence& P, const Field& field)
{
    if (M.nvars() != P.nvars()) {
        throw DimensionMismatch("colon formula: M and P live in different rings");
    }
    const std::size_t n = M.nvars();
    const std::size_t r = P.length();
    for (std::size_t k = 0; k < r; ++k) {
        if (M.contains(P.pure_power(k))) {
            throw PreconditionError("colon formula needs M to avoid " + P.pure_power(k).to_string());
        }
    }
    std::vector<Monomial> kept;
    for (const auto& g : M.generators()) {
        bool hit = false;
        for (std::size_t k = 0; k < r && !hit; ++k) {
            hit = P.pure_power(k).divides(g);
        }
        if (!hit) {
            kept.push_back(g);
        }
    }
    const MonomialIdeal reduced = MonomialIdeal::from_generators(n, std::move(kept));

    BettiTable out(Convention::quotient);
    for (std::uint32_t tau = 0; tau < (1u << r); ++tau) {
        Monomial x_tau(n);
        for (std::size_t k = 0; k < r; ++k) {
            if (tau & (1u << k)) {
                x_tau = x_tau * P.pure_power(k);
            }
        }
        const MonomialIdeal quotient = colon(reduced, x_tau);
        if (quotient.is_unit()) {
            continue;
        }
        const BettiTable part = to_quotient(betti_table(quotient, field).graded);
        const int size = std::popcount(tau);
        for (const auto& [key, value] : part.entries()) {
            out.add(key.first + size, key.second + x_tau.degree(), value);
        }
    }
    return out;
}

std::optional<CancellationTable> consecutive_cancellation(const BettiTable& L_table, const BettiTable& I_table)
{
    if (L_table.convention() != I_table.convention()) {
        throw PreconditionError("consecutive cancellation across conventions");
    }
    std::vector<int> degrees;
    for (const auto* t : {&L_table, &I_table}) {
        for (const auto& [key, value] : t->entries()) {
            degrees.push_back(key.second);
        }
    }
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    const int top = std::max(L_table.max_index(), I_table.max_index());

    CancellationTable c;
    for (int j : degrees) {
        std::int64_t previous = 0;
        for (int i = 0; i <= top; ++i) {
            const std::int64_t value = L_table.at(i, j) - I_table.at(i, j) - previous;
            if (value < 0) {
                return std::nullopt;
            }
            if (value != 0) {
                c[{i, j}] = value;
            }
            previous = value;
        }
        if (previous != 0) {
            return std::nullopt;
        }
    }
    return c;
}

bool betti_dominates(const BettiTable& A, const BettiTable& B)
{
    if (A.convention() != B.convention()) {
        throw PreconditionError("Betti dominance across conventions");
    }
    return std::all_of(B.entries().begin(), B.entries().end(),
                       [&](const auto& entry) { return A.at(entry.first.first, entry.first.second) >= entry.second; });
}

} // namespace lpp
