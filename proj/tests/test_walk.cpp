#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpp/error.hpp"
#include "lpp/io.hpp"
#include "lpp/walk.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace lpp;
using helpers::ideal;

namespace {

BettiTable oracle_table(const MonomialIdeal& I, long p = 0)
{
    return oracle::to_table(oracle::graded(oracle::betti_multigraded(oracle::from_lpp(I), p)));
}

} // namespace

TEST_CASE("walk examples")
{
    const PowerSequence P(3, {2, 2, 2});
    const auto I = sum(P.ideal(), ideal(3, {"x2*x3"}));
    const int cap = default_cap(I, P);
    const auto result = borelify_plus_P(I, P, cap);
    CHECK(result.borel == sum(P.ideal(), ideal(3, {"x1*x2"})));
    CHECK(is_borel_plus_P(result.borel, P, cap));
    CHECK(hf_equal(result.borel, I, cap));
    CHECK(result.trace.step_count() >= 1);
    CHECK(result.trace.outcome == result.borel);

    const auto B = sum(P.ideal(), ideal(3, {"x1*x2"}));
    const auto same = borelify_plus_P(B, P, cap);
    CHECK(same.borel == B);
    CHECK(same.trace.steps.empty());

    const auto only_p = borelify_plus_P(P.ideal(), P, cap);
    CHECK(only_p.borel == P.ideal());
    CHECK(only_p.trace.steps.empty());

    CHECK_THROWS_AS(borelify_plus_P(ideal(3, {"x1"}), P, cap), PreconditionError);
}

TEST_CASE("walk steps carry their certificates")
{
    const PowerSequence P(3, {2, 2, 3});
    const auto I = sum(P.ideal(), ideal(3, {"x2*x3^2", "x3^2*x1"}));
    const int cap = default_cap(I, P);
    WalkOptions options;
    options.check_betti = true;
    const auto result = borelify_plus_P(I, P, cap, options);
    MonomialIdeal current = I;
    for (const auto& s : result.trace.steps) {
        CHECK(s.before == current);
        CHECK(s.hf_equal);
        CHECK(s.revlex == IdealOrder::greater);
        REQUIRE(s.betti_dominates.has_value());
        CHECK(*s.betti_dominates);
        current = s.after;
    }
    CHECK(current == result.borel);
}

TEST_CASE("verify examples")
{
    const PowerSequence P(3, {2, 2, 2});
    const auto I = sum(P.ideal(), ideal(3, {"x2*x3"}));
    const int cap = default_cap(I, P);
    const auto report = lpp_verify(I, P, Field(), cap);
    CHECK(report.lex_plus_powers == sum(P.ideal(), ideal(3, {"x1*x2"})));
    // Swapping x1 and x3 maps I to L + P, so the tables coincide.
    REQUIRE(oracle_table(I) == oracle_table(report.lex_plus_powers));
    CHECK(report.input_betti == report.lex_betti);
    CHECK(report.dominates);
    REQUIRE(report.cancellation.has_value());
    CHECK(report.cancellation->empty());
    CHECK(report.passed());

    const auto L = report.lex_plus_powers;
    const auto again = lpp_verify(L, P, Field(2), cap);
    CHECK(again.lex_plus_powers == L);
    CHECK(again.cancellation->empty());
    CHECK(again.passed());

    const auto only_p = lpp_verify(P.ideal(), P, Field(), cap);
    CHECK(only_p.passed());
    CHECK(only_p.cancellation->empty());
}

TEST_CASE("verify finds a nontrivial cancellation")
{
    const PowerSequence P(4, {2, 2, 2, 2});
    const auto I = sum(P.ideal(), ideal(4, {"x1*x2", "x3*x4"}));
    const auto L = sum(P.ideal(), ideal(4, {"x1*x2", "x1*x3", "x2*x3*x4"}));
    const auto report = lpp_verify(I, P, Field(), default_cap(I, P), {true, true, 0});
    CHECK(report.lex_plus_powers == L);
    CHECK(report.passed());
    REQUIRE(report.walk.has_value());

    // The forced cancellations, recomputed from oracle tables.
    const auto tI = oracle_table(I);
    const auto tL = oracle_table(L);
    CHECK(report.input_betti == tI);
    CHECK(report.lex_betti == tL);
    REQUIRE(report.cancellation.has_value());
    const auto& c = *report.cancellation;
    auto c_at = [&](int i, int j) {
        const auto it = c.find({i, j});
        return it == c.end() ? std::int64_t{0} : it->second;
    };
    for (int i = 0; i <= 4; ++i) {
        for (int j = 0; j <= 8; ++j) {
            CHECK(tI.at(i, j) == tL.at(i, j) - c_at(i, j) - c_at(i - 1, j));
        }
    }
    CHECK(c == CancellationTable{{{0, 3}, 1}, {{1, 4}, 1}});
}

TEST_CASE("verify rejects a cap that cannot see the lex-plus-powers ideal")
{
    const PowerSequence P(3, {2, 2, 2});
    const auto I = sum(P.ideal(), ideal(3, {"x2*x3"}));
    CHECK_THROWS_AS(lpp_verify(I, P, Field(), 1), CapError);
}

TEST_CASE("fuzz campaign examples")
{
    FuzzConfig config;
    config.n = 3;
    config.powers = {2, 2, 2};
    config.samples = 100;
    config.seed = 42;
    const auto report = fuzz_campaign(config);
    CHECK(report.runs == 100);
    CHECK(report.passed == 100);
    CHECK(report.failures.empty());

    config.samples = 0;
    const auto empty = fuzz_campaign(config);
    CHECK(empty.runs == 0);
    CHECK(empty.passed == 0);
    CHECK(empty.failures.empty());
}

TEST_CASE("fuzz reports are deterministic across thread counts")
{
    FuzzConfig config;
    config.n = 3;
    config.powers = {2, 2, 3};
    config.samples = 40;
    config.seed = 7;
    config.characteristics = {0, 2};
    config.jobs = 1;
    const auto one = fuzz_json(fuzz_campaign(config)).dump();
    config.jobs = 4;
    const auto four = fuzz_json(fuzz_campaign(config)).dump();
    CHECK(one == four);
    CHECK(fuzz_json(fuzz_campaign(config)).dump() == four);
    for (std::size_t k = 0; k < config.samples; ++k) {
        CHECK(fuzz_sample(config, k) == fuzz_sample(config, k));
        CHECK(is_subset(PowerSequence(3, {2, 2, 3}).ideal(), fuzz_sample(config, k)));
    }
}

TEST_CASE("property: walks on random ideals")
{
    gen::Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 2, 3));
        const auto P = gen::powers(rng, n, 3, n);
        const auto I = gen::plus_powers(rng, P, 3, 4);
        const int cap = default_cap(I, P);
        WalkOptions options;
        options.check_betti = true;
        const auto result = borelify_plus_P(I, P, cap, options);
        CHECK(is_borel_plus_P(result.borel, P, cap));
        CHECK(hilbert_function(result.borel, cap) == hilbert_function(I, cap));
        for (const auto& s : result.trace.steps) {
            CHECK(s.revlex == IdealOrder::greater);
            CHECK(*s.betti_dominates);
        }
        const auto again = borelify_plus_P(I, P, cap, options);
        CHECK(trace_json(again.trace) == trace_json(result.trace));
    }
}
