#include "lpp/walk.hpp"

#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lpp/error.hpp"
#include "lpp/io.hpp"

namespace lpp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Portable bounded draw; std::uniform_int_distribution is not reproducible
// across standard libraries.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t state) : state_(state) {}

    std::uint64_t next() { return state_ = splitmix64(state_); }

    int between(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::uint64_t state_;
};

class BettiCache {
public:
    BettiCache(const Field& field) : field_(field) {}

    const BettiTable& get(const MonomialIdeal& I)
    {
        if (!ideal_ || *ideal_ != I) {
            ideal_ = I;
            table_ = betti_table(I, field_).graded;
        }
        return table_;
    }

private:
    Field field_;
    std::optional<MonomialIdeal> ideal_;
    BettiTable table_;
};

} // namespace

bool same_hilbert_series(const MonomialIdeal& I, const MonomialIdeal& J)
{
    if (I.nvars() != J.nvars()) {
        throw DimensionMismatch("Hilbert series comparison across rings");
    }
    return hilbert_numerator(I) == hilbert_numerator(J);
}

WalkResult borelify_plus_P(const MonomialIdeal& I, const PowerSequence& P, int cap, const WalkOptions& options)
{
    const auto start = Clock::now();
    if (!is_subset(P.ideal(), I)) {
        throw PreconditionError(I.to_string() + " does not contain the pure powers");
    }
    WalkResult result;
    result.borel = I;
    std::optional<BettiCache> before_tables;
    std::optional<BettiCache> after_tables;
    if (options.check_betti) {
        before_tables.emplace(options.field);
        after_tables.emplace(options.field);
    }

    auto record = [&](const TransformStep& s) {
        WalkStep step{s.kind, s.a, s.b, s.t, s.before, s.after, false, IdealOrder::equal, std::nullopt};
        step.hf_equal = hf_equal(s.before, s.after, cap) && same_hilbert_series(s.before, s.after);
        step.revlex = revlex_compare_ideals(s.after, s.before, cap);
        if (!step.hf_equal) {
            throw CertificateFailure(std::string(to_string(s.kind)) + " changed the Hilbert function");
        }
        if (step.revlex != IdealOrder::greater) {
            throw CertificateFailure(std::string(to_string(s.kind)) + " did not raise the revlex order");
        }
        if (options.check_betti) {
            step.betti_dominates = betti_dominates(after_tables->get(s.after), before_tables->get(s.before));
        }
        result.trace.steps.push_back(std::move(step));
    };

    const std::size_t n = I.nvars();
    MonomialIdeal current = I;
    for (int round = 0;; ++round) {
        if (round >= options.iteration_limit) {
            throw CertificateFailure("Borelification did not terminate within "
                                     + std::to_string(options.iteration_limit) + " rounds");
        }
        std::optional<std::pair<std::size_t, std::size_t>> pair;
        for (std::size_t a = 0; a < n && !pair; ++a) {
            for (std::size_t b = a + 1; b < n && !pair; ++b) {
                if (!is_compressed_plus_P(current, P, a, b, cap)) {
                    pair.emplace(a, b);
                }
            }
        }
        if (!pair) {
            break;
        }
        const auto [a, b] = *pair;
        StrongShiftOptions shift_options;
        shift_options.margin = options.margin;
        shift_options.iteration_limit = options.iteration_limit;
        shift_options.observer = record;
        const MonomialIdeal shifted = strong_shift_plus_P(current, P, a, b, cap, shift_options);
        const MonomialIdeal compressed = compress_plus_P(shifted, P, a, b, cap, options.margin);
        if (compressed != shifted) {
            record({StepKind::compression_plus_P, a, b, -1, shifted, compressed});
        }
        if (compressed == current) {
            throw CertificateFailure("no progress on pair (x" + std::to_string(a + 1) + ", x" + std::to_string(b + 1)
                                     + ") for " + current.to_string());
        }
        current = compressed;
    }
    if (!is_borel_plus_P(current, P, cap)) {
        throw CertificateFailure("walk ended at " + current.to_string() + ", which is not Borel-plus-P");
    }
    result.borel = current;
    result.trace.outcome = current;
    result.trace.wall_seconds = seconds_since(start);
    return result;
}

VerifyReport lpp_verify(const MonomialIdeal& I, const PowerSequence& P, const Field& field, int cap,
                        const VerifyOptions& options)
{
    if (!is_subset(P.ideal(), I)) {
        throw PreconditionError(I.to_string() + " does not contain the pure powers");
    }
    VerifyReport report;
    report.input = I;
    report.powers = P;
    report.field = field;
    report.cap = cap;
    report.hilbert = hilbert_function(I, cap);
    report.lex_plus_powers = lexify_mod_powers(report.hilbert, P);
    report.hf_equal = same_hilbert_series(I, report.lex_plus_powers);
    if (!report.hf_equal) {
        throw CapError("cap " + std::to_string(cap) + " is too small to determine the lex-plus-powers ideal");
    }

    BettiOptions betti_options;
    betti_options.jobs = options.jobs;
    report.input_betti = betti_table(I, field, betti_options).graded;
    report.lex_betti = betti_table(report.lex_plus_powers, field, betti_options).graded;
    report.dominates = betti_dominates(report.lex_betti, report.input_betti);
    if (!report.dominates) {
        report.failures.push_back("lex-plus-powers Betti numbers do not dominate");
    }
    report.cancellation = consecutive_cancellation(report.lex_betti, report.input_betti);
    if (!report.cancellation) {
        report.failures.push_back("no consecutive-cancellation certificate");
    }

    if (options.borelify) {
        WalkOptions walk_options;
        walk_options.check_betti = options.check_betti;
        walk_options.field = field;
        auto walk = borelify_plus_P(I, P, cap, walk_options);
        for (const auto& step : walk.trace.steps) {
            if (step.betti_dominates && !*step.betti_dominates) {
                report.walk_dominates = false;
            }
        }
        if (!report.walk_dominates) {
            report.failures.push_back("a walk step lowered some Betti number");
        }
        const auto borel_betti = betti_table(walk.borel, field, betti_options).graded;
        if (!betti_dominates(borel_betti, report.input_betti)) {
            report.failures.push_back("Borel-plus-P Betti numbers do not dominate the input");
        }
        if (!betti_dominates(report.lex_betti, borel_betti)) {
            report.failures.push_back("lex-plus-powers Betti numbers do not dominate the Borel-plus-P ideal");
        }
        report.walk = std::move(walk.trace);
    }
    return report;
}

MonomialIdeal fuzz_sample(const FuzzConfig& config, std::size_t index)
{
    const PowerSequence P(config.n, config.powers);
    SampleRng rng(splitmix64(config.seed ^ splitmix64(index + 1)));
    const int count = rng.between(0, std::max(config.max_extra_gens, 0));
    std::vector<Monomial> gens = P.ideal().generators();
    for (int k = 0; k < count; ++k) {
        const int degree = rng.between(1, std::max(config.max_degree, 1));
        std::vector<int> exps(config.n, 0);
        for (int unit = 0; unit < degree; ++unit) {
            ++exps[static_cast<std::size_t>(rng.between(0, static_cast<int>(config.n) - 1))];
        }
        gens.push_back(Monomial::from_exponents(exps));
    }
    return MonomialIdeal::from_generators(config.n, std::move(gens));
}

FuzzReport fuzz_campaign(const FuzzConfig& config)
{
    const auto start = Clock::now();
    const PowerSequence P(config.n, config.powers);
    FuzzReport report;
    report.config = config;
    const std::size_t per_sample = config.characteristics.size();
    std::vector<std::optional<FuzzFailure>> outcomes(config.samples * per_sample);

#ifdef _OPENMP
    const int threads = config.jobs > 0 ? config.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (std::size_t index = 0; index < config.samples; ++index) {
        const MonomialIdeal I = fuzz_sample(config, index);
        const int cap = default_cap(I, P);
        for (std::size_t c = 0; c < per_sample; ++c) {
            const long characteristic = config.characteristics[c];
            std::string reason;
            try {
                VerifyOptions options;
                options.borelify = config.borelify;
                options.check_betti = config.check_betti;
                options.jobs = 1;
                const auto verdict = lpp_verify(I, P, Field(characteristic), cap, options);
                for (const auto& f : verdict.failures) {
                    reason += (reason.empty() ? "" : "; ") + f;
                }
            } catch (const std::exception& e) {
                reason = std::string("exception: ") + e.what();
            }
            if (!reason.empty()) {
                outcomes[index * per_sample + c] = FuzzFailure{index, characteristic, I.to_string(), reason};
            }
        }
    }

    for (std::size_t k = 0; k < outcomes.size(); ++k) {
        ++report.runs;
        if (!outcomes[k]) {
            ++report.passed;
            continue;
        }
        report.failures.push_back(*outcomes[k]);
        if (!config.reproducer_dir.empty()) {
            const auto& f = *outcomes[k];
            std::filesystem::create_directories(config.reproducer_dir);
            const auto path = std::filesystem::path(config.reproducer_dir)
                              / ("sample_" + std::to_string(f.index) + "_char" + std::to_string(f.characteristic)
                                 + ".ideal");
            std::ofstream out(path);
            out << "# seed " << config.seed << " index " << f.index << " char " << f.characteristic << "\n"
                << "# " << f.reason << "\n"
                << serialize_ideal(fuzz_sample(config, f.index), P);
        }
    }
    report.wall_seconds = seconds_since(start);
    return report;
}

} // namespace lpp
