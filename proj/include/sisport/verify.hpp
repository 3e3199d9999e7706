#pragma once

#include <optional>
#include <random>
#include <string>

#include "sisport/sis_analysis.hpp"

namespace sisport {

// Pseudo-random rational with numerator in [-20, 20], denominator in [1, 10].
Rational random_rational(std::mt19937_64& rng);

// Valid tuple (b, m nonzero). Every eighth draw lands exactly on the
// coalescence boundary m = bk - c so the saddle-node path is exercised.
SisParams random_sis_params(std::mt19937_64& rng, long index);

struct VerifySummary {
    long samples = 0;
    long regime_agreement = 0;
    long infinite_census = 0;
    long invariant_lines = 0;
    long class_consistency = 0;
    std::optional<SisParams> first_failure;
    std::string failed_check;
    bool ok() const { return !first_failure.has_value(); }
};

// Exact property census over `samples` tuples; `threads <= 0` picks the
// hardware default capped by the SISPORT_THREADS environment variable.
VerifySummary run_verify(long samples, unsigned long seed, int threads = 0);

// Worker-pool size honoring SISPORT_THREADS.
int effective_threads(int requested);

}  // namespace sisport
