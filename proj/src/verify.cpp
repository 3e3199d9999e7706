#include "sisport/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace sisport {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 10);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

SisParams random_sis_params(std::mt19937_64& rng, long index) {
    SisParams p;
    do {
        p.b = random_rational(rng);
    } while (sgn(p.b) == 0);
    p.c = random_rational(rng);
    p.k = random_rational(rng);
    if (index % 8 == 7 && sgn(p.b * p.k - p.c) != 0) {
        p.m = p.b * p.k - p.c;
        return p;
    }
    do {
        p.m = random_rational(rng);
    } while (sgn(p.m) == 0);
    return p;
}

int effective_threads(int requested) {
    int n = requested > 0 ? requested
                          : static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (const char* env = std::getenv("SISPORT_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return std::max(1, n);
}

namespace {

// Empty string on success, otherwise the name of the failed check.
std::string check_tuple(const SisParams& params, VerifySummary& tally) {
    const VectorField f = make_sis_field(params);
    const SteadyStates ss = steady_states(params);
    const Regime r = regime(params);
    const Rational excess = params.b * params.k - params.c - params.m;

    // Finite points: the sign shortcut against the general classifier, and
    // the closed-form delta/tau values.
    {
        if (ss.coincident) {
            const Classification c = classify_point(f, ss.q);
            if (r.c != RegimeCase::CoalescedSaddleNode || c.kind != SingKind::SaddleNode)
                return "regime-agreement";
            if (!c.semihyp || c.semihyp->alpha % 2 != 0) return "regime-agreement";
        } else {
            const Classification cp = classify_point(f, ss.p);
            const Classification cq = classify_point(f, ss.q);
            const Rational delta_p = excess * params.m;
            const Rational tau_p = params.c - params.b * params.k;
            if (cp.delta != delta_p || cp.tau != tau_p) return "regime-agreement";
            if (cq.delta != -delta_p || cq.tau != params.b * params.k - params.c - 2 * params.m)
                return "regime-agreement";
            const bool p_saddle = cp.kind == SingKind::Saddle;
            const bool q_saddle = cq.kind == SingKind::Saddle;
            if (r.c == RegimeCase::PSaddleQNode && !(p_saddle && is_node(cq.kind)))
                return "regime-agreement";
            if (r.c == RegimeCase::PNodeQSaddle && !(is_node(cp.kind) && q_saddle))
                return "regime-agreement";
        }
        ++tally.regime_agreement;
    }

    // Infinite census: saddle-nodes of type SN1 at the chart origins, nodes at
    // u = -1 with antipodally mirrored stability.
    {
        const auto inf = infinite_singular_points(f);
        if (inf.size() != 6) return "infinite-census";
        auto find = [&](ChartId ch, const Rational& u) -> const InfinitePoint* {
            for (const auto& ip : inf)
                if (ip.chart == ch && ip.u == u) return &ip;
            return nullptr;
        };
        const auto* o1 = find(ChartId::U1, Rational(0));
        const auto* o2 = find(ChartId::U2, Rational(0));
        const auto* ov1 = find(ChartId::V1, Rational(0));
        const auto* ov2 = find(ChartId::V2, Rational(0));
        const auto* n1 = find(ChartId::U1, Rational(-1));
        const auto* n2 = find(ChartId::U2, Rational(-1));
        if (!o1 || !o2 || !ov1 || !ov2 || !n1 || !n2) return "infinite-census";
        for (const auto* sn : {o1, o2, ov1, ov2})
            if (sn->cls.kind != SingKind::SaddleNode || !sn->sn || *sn->sn != SnType::SN1)
                return "infinite-census";
        if (!is_node(n1->cls.kind) || !is_node(n2->cls.kind)) return "infinite-census";
        if (time_reversed(n1->cls.kind) != n2->cls.kind) return "infinite-census";
        ++tally.infinite_census;
    }

    // Invariant lines: y and x + y - k always; x - k exactly when c = bk.
    {
        const auto lines = find_invariant_lines(f);
        const Poly2 f1 = Poly2::y();
        const Poly2 f2 = Poly2::x() + Poly2::y() - Poly2(params.k);
        const Poly2 f3 = Poly2::x() - Poly2(params.k);
        const Poly2 k1 = params.b * Poly2::x() - Poly2(params.m + params.c);
        const Poly2 k2 = -Poly2(params.m);
        const Poly2 k3 = -Poly2(params.m) - params.b * Poly2::y();
        auto has = [&](const Poly2& g, const Poly2& k) {
            for (const auto& c : lines)
                if (c.f == g && c.cofactor == k) return true;
            return false;
        };
        const bool extra = sgn(params.c - params.b * params.k) == 0;
        const size_t expected = extra ? 3u : 2u;
        if (lines.size() != expected || !has(f1, k1) || !has(f2, k2)) return "invariant-lines";
        if (extra && !has(f3, k3)) return "invariant-lines";
        for (const auto& c : lines)
            if (!verify_invariant_line(f, c.f, c.cofactor)) return "invariant-lines";
        ++tally.invariant_lines;
    }

    // Portrait class: B exactly on the boundary, A elsewhere.
    {
        const PortraitClass cls = portrait_class(params);
        const bool boundary = sgn(excess) == 0;
        if ((cls == PortraitClass::B) != boundary) return "class-consistency";
        if (boundary != ss.coincident) return "class-consistency";
        ++tally.class_consistency;
    }
    return {};
}

}  // namespace

VerifySummary run_verify(long samples, unsigned long seed, int threads) {
    VerifySummary total;
    total.samples = samples;

    // Draw all tuples up front so results do not depend on the pool size.
    std::mt19937_64 rng(seed);
    std::vector<SisParams> tuples;
    tuples.reserve(samples);
    for (long i = 0; i < samples; ++i) tuples.push_back(random_sis_params(rng, i));

    const int pool = effective_threads(threads);
    std::vector<VerifySummary> partial(pool);
    std::vector<long> fail_index(pool, -1);
    std::vector<std::string> fail_check(pool);

    auto work = [&](int w) {
        for (long i = w; i < samples; i += pool) {
            const std::string failed = check_tuple(tuples[i], partial[w]);
            if (!failed.empty()) {
                fail_index[w] = i;
                fail_check[w] = failed;
                return;
            }
        }
    };
    if (pool == 1) {
        work(0);
    } else {
        std::vector<std::thread> ts;
        for (int w = 0; w < pool; ++w) ts.emplace_back(work, w);
        for (auto& t : ts) t.join();
    }

    long first = -1;
    for (int w = 0; w < pool; ++w) {
        total.regime_agreement += partial[w].regime_agreement;
        total.infinite_census += partial[w].infinite_census;
        total.invariant_lines += partial[w].invariant_lines;
        total.class_consistency += partial[w].class_consistency;
        if (fail_index[w] >= 0 && (first < 0 || fail_index[w] < first)) {
            first = fail_index[w];
            total.first_failure = tuples[fail_index[w]];
            total.failed_check = fail_check[w];
        }
    }
    return total;
}

}  // namespace sisport
