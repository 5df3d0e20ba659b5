#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpp/hilbert.hpp"
#include "lpp/ideal.hpp"
#include "lpp/linalg.hpp"

namespace lpp {

// Whether a table holds b_{i,j}(I) or b_{i,j}(S/I).
enum class Convention { ideal, quotient };

std::string to_string(Convention c);

// Graded Betti numbers; only nonzero entries are stored.
class BettiTable {
public:
    using Key = std::pair<int, int>;

    BettiTable() = default;
    explicit BettiTable(Convention c) : convention_(c) {}

    Convention convention() const noexcept { return convention_; }
    const std::map<Key, std::int64_t>& entries() const noexcept { return entries_; }

    std::int64_t at(int i, int j) const;
    void add(int i, int j, std::int64_t count);

    // Largest homological index with a nonzero entry; -1 if empty.
    int max_index() const noexcept;

    // Total Betti number b_i.
    std::int64_t total(int i) const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    Convention convention_ = Convention::ideal;
    std::map<Key, std::int64_t> entries_;
};

// Orders multigraded keys by index, then multidegree degree, then lex
// descending.
struct MultidegreeKeyLess {
    bool operator()(const std::pair<int, Monomial>& x, const std::pair<int, Monomial>& y) const;
};

class MultigradedBettiTable {
public:
    using Key = std::pair<int, Monomial>;

    std::int64_t at(int i, const Monomial& m) const;
    void add(int i, const Monomial& m, std::int64_t count);

    const std::map<Key, std::int64_t, MultidegreeKeyLess>& entries() const noexcept { return entries_; }

    // Sums multidegrees of equal total degree (ideal convention).
    BettiTable graded() const;

    friend bool operator==(const MultigradedBettiTable& x, const MultigradedBettiTable& y)
    {
        return x.entries_ == y.entries_;
    }

private:
    std::map<Key, std::int64_t, MultidegreeKeyLess> entries_;
};

// The strand (K ⊗ I)_m. basis[i] lists the squarefree mu with |mu| = i,
// mu | m and m / mu in I. boundary[i] is the matrix of D: C_i -> C_{i-1}
// with rows indexed by basis[i-1] and columns by basis[i]; boundary[0] is
// empty.
struct KoszulSubcomplex {
    Monomial multidegree;
    std::vector<std::vector<Monomial>> basis;
    std::vector<IntMatrix> boundary;

    // dim H_i for each i, over the given field.
    std::vector<std::int64_t> homology(const Field& field) const;
};

KoszulSubcomplex koszul_subcomplex(const MonomialIdeal& I, const Monomial& m);

// b_{i,m}(I) for i = 0..n. All zero when m is not in I.
std::vector<std::int64_t> koszul_betti_at(const MonomialIdeal& I, const Monomial& m, const Field& field);

struct BettiResult {
    BettiTable graded;
    MultigradedBettiTable multigraded;
};

struct BettiOptions {
    // Worker threads for the multidegree loop; 0 means the OpenMP default.
    int jobs = 0;
};

// Ideal-convention tables. The unit ideal gives {(0,0): 1}; the zero ideal
// gives an empty table.
BettiResult betti_table(const MonomialIdeal& I, const Field& field, const BettiOptions& options = {});

// Single-threaded reference for betti_table.
BettiResult betti_table_serial(const MonomialIdeal& I, const Field& field);

BettiTable to_quotient(const BettiTable& ideal_table);
BettiTable to_ideal(const BettiTable& quotient_table);

// Hilb(I)(d) = sum_{i,j} (-1)^i b_{i,j}(I) dim S_{d-j} for d = 0..cap.
HilbertFunction hilbert_from_betti(const BettiTable& ideal_table, std::size_t n, int cap);

// sqfree((I : m/sqrt(m)) ∩ k[supp m]), embedded in the ambient ring.
MonomialIdeal shadow(const MonomialIdeal& I, const Monomial& m);

// The four equal quantities for b_{i,m}, each indexed by i.
struct KeyLemmaValues {
    std::vector<std::int64_t> direct;       // b_{i,m}(I)
    std::vector<std::int64_t> intersection; // b_{i,m}(I ∩ (m/sqrt m))
    std::vector<std::int64_t> colon;        // b_{i,sqrt m}(I : m/sqrt m)
    std::vector<std::int64_t> shadow;       // b_{i,sqrt m}(shadow_m(I))
};

// Throws CertificateFailure when the four values differ.
KeyLemmaValues keylemma_check(const MonomialIdeal& I, const Monomial& m, const Field& field);

// Eliahou–Kervaire table (ideal convention). Throws PreconditionError for
// non-Borel input.
BettiTable ek_betti(const MonomialIdeal& B);

// b_{i,j}(S/(M+P)) from the colon ideals (M : x_tau). Generators of M that
// are multiples of a pure power of P are dropped first, which leaves M + P
// unchanged. Throws PreconditionError if M contains a pure power of P.
BettiTable colon_formula_betti(const MonomialIdeal& M, const PowerSequence& P, const Field& field);

using CancellationTable = std::map<BettiTable::Key, std::int64_t>;

// The forced c_{i,j} with b_{i,j}(I) = b_{i,j}(L) - c_{i,j} - c_{i-1,j}, or
// nullopt when some c is negative or the recursion does not close.
std::optional<CancellationTable> consecutive_cancellation(const BettiTable& L_table, const BettiTable& I_table);

// A(i,j) >= B(i,j) for every (i,j).
bool betti_dominates(const BettiTable& A, const BettiTable& B);

} // namespace lpp
