#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpp/betti.hpp"
#include "lpp/hilbert.hpp"
#include "lpp/ideal.hpp"
#include "lpp/transforms.hpp"

namespace lpp {

struct WalkStep {
    StepKind kind;
    std::size_t a;
    std::size_t b;
    int t; // -1 for compression steps
    MonomialIdeal before;
    MonomialIdeal after;
    bool hf_equal = false;
    IdealOrder revlex = IdealOrder::equal;
    std::optional<bool> betti_dominates; // set when Betti checking is on
};

struct WalkTrace {
    std::vector<WalkStep> steps;
    MonomialIdeal outcome;
    double wall_seconds = 0.0;

    std::size_t step_count() const noexcept { return steps.size(); }
};

struct WalkOptions {
    int margin = kDefaultMargin;
    int iteration_limit = 10000;
    bool check_betti = false;
    Field field;
};

struct WalkResult {
    MonomialIdeal borel;
    WalkTrace trace;
};

// Walks I to a Borel-plus-P ideal with the same Hilbert function by strong
// shifts and compressions over the first non-compressed pair (a, b) in lex
// order. Throws CertificateFailure if a step breaks its certificates or the
// result is not Borel-plus-P.
WalkResult borelify_plus_P(const MonomialIdeal& I, const PowerSequence& P, int cap, const WalkOptions& options = {});

// Exact Hilbert series equality, via the numerators of S/I and S/J.
bool same_hilbert_series(const MonomialIdeal& I, const MonomialIdeal& J);

struct VerifyOptions {
    bool borelify = false;
    bool check_betti = false;
    int jobs = 0;
};

struct VerifyReport {
    MonomialIdeal input;
    PowerSequence powers;
    Field field;
    int cap = 0;
    HilbertFunction hilbert;
    MonomialIdeal lex_plus_powers;
    bool hf_equal = false;
    BettiTable input_betti{Convention::ideal};
    BettiTable lex_betti{Convention::ideal};
    bool dominates = false;
    std::optional<CancellationTable> cancellation;
    std::optional<WalkTrace> walk;
    bool walk_dominates = true;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

// Lexifies I modulo P and compares Betti tables (ideal convention). Failed
// verdicts are listed in `failures`.
VerifyReport lpp_verify(const MonomialIdeal& I, const PowerSequence& P, const Field& field, int cap,
                        const VerifyOptions& options = {});

struct FuzzConfig {
    std::size_t n = 3;
    std::vector<int> powers{2, 2, 2};
    std::size_t samples = 100;
    std::uint64_t seed = 42;
    int max_extra_gens = 4;
    int max_degree = 4;
    std::vector<long> characteristics{0};
    bool borelify = true;
    bool check_betti = false;
    int jobs = 0;
    // Directory for reproducer files; empty disables them.
    std::string reproducer_dir;
};

struct FuzzFailure {
    std::size_t index;
    long characteristic;
    std::string ideal;
    std::string reason;
};

struct FuzzReport {
    FuzzConfig config;
    std::size_t runs = 0;
    std::size_t passed = 0;
    std::vector<FuzzFailure> failures;
    double wall_seconds = 0.0;
};

// The ideal drawn for sample `index`; depends only on (config, index).
MonomialIdeal fuzz_sample(const FuzzConfig& config, std::size_t index);

FuzzReport fuzz_campaign(const FuzzConfig& config);

} // namespace lpp
