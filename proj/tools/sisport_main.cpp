#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sisport/portrait.hpp"
#include "sisport/report_json.hpp"
#include "sisport/verify.hpp"

namespace {

using namespace sisport;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitDiagnostics = 3;

SisParams params_from_strings(const std::string& b, const std::string& c, const std::string& k,
                              const std::string& m) {
    SisParams p;
    p.b = parse_rational(b);
    p.c = parse_rational(c);
    p.k = parse_rational(k);
    p.m = parse_rational(m);
    validate(p);
    return p;
}

std::vector<Rational> parse_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(parse_rational(item));
    }
    if (out.empty()) throw std::invalid_argument("empty value list: " + csv);
    return out;
}

const char* regime_token(RegimeCase c) {
    switch (c) {
        case RegimeCase::PSaddleQNode: return "p-saddle-q-node";
        case RegimeCase::PNodeQSaddle: return "p-node-q-saddle";
        case RegimeCase::CoalescedSaddleNode: return "coalesced-saddle-node";
    }
    return "?";
}

int cmd_analyze(const std::string& b, const std::string& c, const std::string& k,
                const std::string& m, const std::string& json_path) {
    SisParams p;
    try {
        p = params_from_strings(b, c, k, m);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
    const PortraitReport rep = full_report(p);
    const std::string text = serialize_report(rep);
    if (json_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return kExitBadParams;
        }
        out << text;
    }
    return kExitOk;
}

int cmd_portrait(const std::string& b, const std::string& c, const std::string& k,
                 const std::string& m, const std::string& svg_path, const SvgStyle& style) {
    SisParams p;
    try {
        p = params_from_strings(b, c, k, m);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
    const PortraitReport rep = full_report(p);
    const DiscFlow flow(make_sis_field(p));
    const std::vector<Orbit> orbits = default_portrait_orbits(rep, flow);

    bool diagnostics = false;
    for (const auto& o : orbits)
        if (o.end == OrbitEnd::StepUnderflow || o.end == OrbitEnd::MaxSteps) diagnostics = true;

    const std::string svg = render_svg(rep, orbits, style);
    std::ofstream out(svg_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << svg_path << "\n";
        return kExitBadParams;
    }
    out << svg;
    if (diagnostics) {
        std::cerr << "warning: some orbits ended with integration diagnostics\n";
        return kExitDiagnostics;
    }
    return kExitOk;
}

int cmd_sweep(const std::string& bl, const std::string& cl, const std::string& kl,
              const std::string& ml, const std::string& csv_path) {
    std::vector<Rational> bs, cs, ks, ms;
    try {
        bs = parse_list(bl);
        cs = parse_list(cl);
        ks = parse_list(kl);
        ms = parse_list(ml);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }

    std::ostringstream rows;
    rows << "b,c,k,m,case,class,delta_p,tau_p,delta_q,tau_q\n";
    long skipped = 0;
    bool saw_a = false, saw_b = false;
    for (const auto& b : bs)
        for (const auto& c : cs)
            for (const auto& k : ks)
                for (const auto& m : ms) {
                    if (sgn(b) == 0 || sgn(m) == 0) {
                        ++skipped;
                        continue;
                    }
                    const SisParams p{b, c, k, m};
                    const Regime r = regime(p);
                    const PortraitClass cls = portrait_class(p);
                    (cls == PortraitClass::A ? saw_a : saw_b) = true;
                    const Rational excess = b * k - c - m;
                    const Rational delta_p = excess * m;
                    const Rational tau_p = c - b * k;
                    const Rational delta_q = -delta_p;
                    const Rational tau_q = b * k - c - 2 * m;
                    rows << to_string(b) << ',' << to_string(c) << ',' << to_string(k) << ','
                         << to_string(m) << ',' << regime_token(r.c) << ',' << to_string(cls)
                         << ',' << to_string(delta_p) << ',' << to_string(tau_p) << ','
                         << to_string(delta_q) << ',' << to_string(tau_q) << '\n';
                }
    const int distinct = (saw_a ? 1 : 0) + (saw_b ? 1 : 0);
    rows << "# distinct classes: " << distinct << "\n";
    if (skipped > 0)
        std::cerr << "warning: skipped " << skipped << " cells with b = 0 or m = 0\n";

    if (csv_path.empty()) {
        std::cout << rows.str();
    } else {
        std::ofstream out(csv_path);
        if (!out) {
            std::cerr << "error: cannot write " << csv_path << "\n";
            return kExitBadParams;
        }
        out << rows.str();
        std::cout << "distinct classes: " << distinct << "\n";
    }
    return kExitOk;
}

int cmd_verify(long samples, unsigned long seed) {
    if (samples < 1) {
        std::cerr << "error: samples must be >= 1\n";
        return kExitBadParams;
    }
    const VerifySummary s = run_verify(samples, seed);
    std::cout << "regime/classification agreement: " << s.regime_agreement << "/" << samples
              << "\n";
    std::cout << "infinite-point census:           " << s.infinite_census << "/" << samples
              << "\n";
    std::cout << "invariant-line sets:             " << s.invariant_lines << "/" << samples
              << "\n";
    std::cout << "portrait-class consistency:      " << s.class_consistency << "/" << samples
              << "\n";
    if (!s.ok()) {
        const SisParams& p = *s.first_failure;
        std::cout << "FAILED check " << s.failed_check << " at b=" << to_string(p.b)
                  << " c=" << to_string(p.c) << " k=" << to_string(p.k)
                  << " m=" << to_string(p.m) << "\n";
        return kExitVerifyFailed;
    }
    std::cout << "all checks passed (samples=" << samples << ", seed=" << seed << ")\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qualitative analysis of the planar SIS vector field on the Poincare disc"};
    app.require_subcommand(1);

    std::string b, c, k, m;
    std::string json_path, svg_path = "portrait.svg", csv_path;

    auto* analyze = app.add_subcommand("analyze", "Classify steady states and emit a JSON report");
    analyze->add_option("b", b, "infectivity coefficient (nonzero)")->required();
    analyze->add_option("c", c, "recovery coefficient")->required();
    analyze->add_option("k", k, "population size")->required();
    analyze->add_option("m", m, "death rate (nonzero)")->required();
    analyze->add_option("--json", json_path, "write the report to this file instead of stdout");

    SvgStyle style;
    auto* portrait = app.add_subcommand("portrait", "Render the global phase portrait as SVG");
    portrait->add_option("b", b, "infectivity coefficient (nonzero)")->required();
    portrait->add_option("c", c, "recovery coefficient")->required();
    portrait->add_option("k", k, "population size")->required();
    portrait->add_option("m", m, "death rate (nonzero)")->required();
    portrait->add_option("--svg", svg_path, "output file (default portrait.svg)");
    portrait->add_option("--stroke-width", style.stroke_width, "orbit stroke width");
    portrait->add_option("--orbit-color", style.orbit_color, "orbit stroke color");
    portrait->add_option("--line-color", style.line_color, "invariant line color");
    portrait->add_flag("--shade-quadrant", style.shade_quadrant,
                       "shade the biologically meaningful quadrant");

    std::string bl, cl, kl, ml;
    auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid and emit CSV");
    sweep->add_option("--b", bl, "comma-separated b values")->required();
    sweep->add_option("--c", cl, "comma-separated c values")->required();
    sweep->add_option("--k", kl, "comma-separated k values")->required();
    sweep->add_option("--m", ml, "comma-separated m values")->required();
    sweep->add_option("--csv", csv_path, "write rows to this file instead of stdout");

    long samples = 1000;
    unsigned long seed = 7;
    auto* verify = app.add_subcommand("verify", "Run the exact property census on random tuples");
    verify->add_option("--samples", samples, "number of tuples (default 1000)");
    verify->add_option("--seed", seed, "PRNG seed (default 7)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(b, c, k, m, json_path);
        if (app.got_subcommand(portrait)) return cmd_portrait(b, c, k, m, svg_path, style);
        if (app.got_subcommand(sweep)) return cmd_sweep(bl, cl, kl, ml, csv_path);
        if (app.got_subcommand(verify)) return cmd_verify(samples, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
    return kExitOk;
}
