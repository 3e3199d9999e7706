#pragma once

#include <string>
#include <vector>

#include "sisport/classify.hpp"
#include "sisport/compactify.hpp"
#include "sisport/invariants.hpp"

namespace sisport {

// The two finite steady states: q = (k, 0) disease-free,
// p = ((c+m)/b, (bk-c-m)/b) endemic. They coincide exactly when m = bk - c.
struct SteadyStates {
    RatPoint p;
    RatPoint q;
    bool coincident = false;
};

enum class RegimeCase {
    PSaddleQNode,        // (bk-c-m) m < 0
    PNodeQSaddle,        // (bk-c-m) m > 0
    CoalescedSaddleNode  // m = bk - c
};

const char* to_string(RegimeCase c);

struct Regime {
    RegimeCase c = RegimeCase::PSaddleQNode;
    int sign_m = 0;       // witness signs
    int sign_excess = 0;  // sign(bk - c - m)
};

enum class PortraitClass { A, B };
const char* to_string(PortraitClass c);

struct FinitePointReport {
    RatPoint point;
    Classification cls;
};

struct PortraitReport {
    SisParams params;
    SteadyStates states;
    std::vector<FinitePointReport> finite;
    std::vector<InfinitePoint> infinite;
    std::vector<InvariantCurve> lines;
    PortraitClass cls = PortraitClass::A;
};

SteadyStates steady_states(const SisParams& p);

Regime regime(const SisParams& p);

// B iff m = bk - c exactly; both distinct-state regimes share class A.
PortraitClass portrait_class(const SisParams& p);

// Full assembly. The regime shortcut and the general classifier are checked
// against each other; disagreement throws std::logic_error.
PortraitReport full_report(const SisParams& p);

}  // namespace sisport
