#include "sisport/sis_analysis.hpp"

#include <stdexcept>

namespace sisport {

const char* to_string(RegimeCase c) {
    switch (c) {
        case RegimeCase::PSaddleQNode: return "p saddle, q node";
        case RegimeCase::PNodeQSaddle: return "p node, q saddle";
        case RegimeCase::CoalescedSaddleNode: return "coalesced saddle-node";
    }
    return "?";
}

const char* to_string(PortraitClass c) { return c == PortraitClass::A ? "A" : "B"; }

SteadyStates steady_states(const SisParams& p) {
    validate(p);
    SteadyStates s;
    s.q = {p.k, Rational(0)};
    s.p = {(p.c + p.m) / p.b, (p.b * p.k - p.c - p.m) / p.b};
    s.coincident = sgn(p.b * p.k - p.c - p.m) == 0;
    return s;
}

Regime regime(const SisParams& p) {
    validate(p);
    const Rational excess = p.b * p.k - p.c - p.m;
    Regime r;
    r.sign_m = sgn(p.m);
    r.sign_excess = sgn(excess);
    const int s = sgn(excess * p.m);
    if (s < 0)
        r.c = RegimeCase::PSaddleQNode;
    else if (s > 0)
        r.c = RegimeCase::PNodeQSaddle;
    else
        r.c = RegimeCase::CoalescedSaddleNode;
    return r;
}

PortraitClass portrait_class(const SisParams& p) {
    validate(p);
    return sgn(p.b * p.k - p.c - p.m) == 0 ? PortraitClass::B : PortraitClass::A;
}

PortraitReport full_report(const SisParams& params) {
    validate(params);
    const VectorField f = make_sis_field(params);

    PortraitReport rep;
    rep.params = params;
    rep.states = steady_states(params);
    rep.cls = portrait_class(params);

    if (rep.states.coincident) {
        rep.finite.push_back({rep.states.q, classify_point(f, rep.states.q)});
    } else {
        rep.finite.push_back({rep.states.p, classify_point(f, rep.states.p)});
        rep.finite.push_back({rep.states.q, classify_point(f, rep.states.q)});
    }
    rep.infinite = infinite_singular_points(f);
    rep.lines = find_invariant_lines(f);

    // The regime decision restates the classification; verify they agree.
    const Regime r = regime(params);
    auto expect = [&](size_t idx, bool saddle) {
        const SingKind k = rep.finite[idx].cls.kind;
        const bool ok = saddle ? k == SingKind::Saddle : is_node(k);
        if (!ok)
            throw std::logic_error("regime/classification mismatch at finite point");
    };
    switch (r.c) {
        case RegimeCase::PSaddleQNode:
            expect(0, true);
            expect(1, false);
            break;
        case RegimeCase::PNodeQSaddle:
            expect(0, false);
            expect(1, true);
            break;
        case RegimeCase::CoalescedSaddleNode:
            if (rep.finite.size() != 1 || rep.finite[0].cls.kind != SingKind::SaddleNode)
                throw std::logic_error("coalesced point is not a saddle-node");
            break;
    }
    return rep;
}

}  // namespace sisport
