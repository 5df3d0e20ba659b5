#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lpp/ideal.hpp"

namespace lpp {

inline constexpr int kDefaultMargin = 2;

// Variables a, b (0-based, a < b) and the shift offset t >= 0.
struct ShiftSpec {
    std::size_t a = 0;
    std::size_t b = 1;
    int t = 0;
};

// max generator degree + sum of finite exponents of P + margin.
int default_cap(const MonomialIdeal& I, const PowerSequence& P, int margin = kDefaultMargin);

// Rebuilds an ideal from degreewise sets J_0..J_cap after checking that
// x_i * J_{d-1} ⊆ J_d throughout and that no minimal generator lives in the
// top `margin` degrees. Throws CapError otherwise.
MonomialIdeal stabilized_ideal(std::size_t n, const std::vector<std::vector<Monomial>>& sets,
                               int margin = kDefaultMargin);

// The t-th (a,b)-shift, computed through cap and certified by
// stabilized_ideal. For m = f a^p b^q: if q < t, m stays iff m ∈ I;
// otherwise with q' = q - t and partner f a^{q'} b^{p+t}, m stays iff m ∈ I
// (p = q'), m or partner ∈ I (p > q'), m and partner ∈ I (p < q').
MonomialIdeal shift(const MonomialIdeal& I, const ShiftSpec& spec, int cap, int margin = kDefaultMargin);

// f a^s b^{l+t} ∈ I with s < l implies f a^l b^{s+t} ∈ I, for degrees <= cap.
bool is_shifted(const MonomialIdeal& I, const ShiftSpec& spec, int cap);

// (a,b,t)-shifted for t = 0..cap-1.
bool is_strongly_shifted(const MonomialIdeal& I, std::size_t a, std::size_t b, int cap);

// Replaces each slice V_f (f a monomial outside `vars`) by the lex ideal of
// k[vars] with the same Hilbert function.
MonomialIdeal compress(const MonomialIdeal& I, std::uint32_t vars, int cap, int margin = kDefaultMargin);

bool is_compressed(const MonomialIdeal& I, std::uint32_t vars, int cap);

// Exchange property checked on the minimal generators (exact).
bool is_borel(const MonomialIdeal& I);

// Exchange property checked on every monomial of degree <= cap.
bool is_borel_degreewise(const MonomialIdeal& I, int cap);

// Degreewise sets of the largest Borel ideal inside I, through cap.
std::vector<std::vector<Monomial>> borel_interior(const MonomialIdeal& I, int cap);

// I = B + P for some Borel B, checked through cap via the Borel interior.
bool is_borel_plus_P(const MonomialIdeal& I, const PowerSequence& P, int cap);

struct Polarization {
    MonomialIdeal ideal;
    std::size_t added_vars = 0;
};

// b^k in each generator becomes b c_1 ... c_{k-1}; the new variables are
// appended after x_n.
Polarization polarize(const MonomialIdeal& I, std::size_t b);

// I S' for a ring S' with n' >= n variables (the first n shared).
MonomialIdeal extend_ring(const MonomialIdeal& I, std::size_t n);

// Drops the minimal generator b^{e_b} if present.
MonomialIdeal delete_power(const MonomialIdeal& I, std::size_t b, int e_b);

// delete_power with e_b read from P; unchanged when b has no finite power.
MonomialIdeal delete_power(const MonomialIdeal& I, const PowerSequence& P, std::size_t b);

bool is_shifted_plus_P(const MonomialIdeal& I, const PowerSequence& P, const ShiftSpec& spec, int cap);
bool is_compressed_plus_P(const MonomialIdeal& I, const PowerSequence& P, std::size_t a, std::size_t b, int cap);

// J = shift(I', a, b, t+1) + P. Requires P ⊆ I and I' (a,b,t)-shifted.
// Throws CertificateFailure unless J ⊇ P, Hilb(J) = Hilb(I) and J >=_rev I.
MonomialIdeal tshift_plus_P(const MonomialIdeal& I, const PowerSequence& P, const ShiftSpec& spec, int cap,
                            int margin = kDefaultMargin);

enum class StepKind { initial_shift, t_shift_plus_P, compression_plus_P };

const char* to_string(StepKind kind);

struct TransformStep {
    StepKind kind;
    std::size_t a;
    std::size_t b;
    int t; // -1 when not applicable
    MonomialIdeal before;
    MonomialIdeal after;
};

using StepObserver = std::function<void(const TransformStep&)>;

struct StrongShiftOptions {
    int margin = kDefaultMargin;
    int iteration_limit = 10000;
    StepObserver observer;
};

// shift_{a,b,0}, then repeated tshift_plus_P at the smallest failing t until
// I is (a,b)-strongly shifted-plus-P. Only changing steps are reported.
// Throws CertificateFailure on a step that does not strictly increase the
// revlex order, or when the iteration limit is reached.
MonomialIdeal strong_shift_plus_P(const MonomialIdeal& I, const PowerSequence& P, std::size_t a, std::size_t b,
                                  int cap, const StrongShiftOptions& options = {});

// T = compress(I', {a,b}) + P, with Hilbert and revlex certificates.
MonomialIdeal compress_plus_P(const MonomialIdeal& I, const PowerSequence& P, std::size_t a, std::size_t b,
                              int cap, int margin = kDefaultMargin);

} // namespace lpp
