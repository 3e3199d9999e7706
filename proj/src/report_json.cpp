#include "sisport/report_json.hpp"

#include <json.hpp>

#include <stdexcept>

namespace sisport {

using nlohmann::json;

namespace {

json rat(const Rational& q) { return to_string(q); }

json point_json(const RatPoint& p) { return json::array({rat(p.first), rat(p.second)}); }

RatPoint parse_point(const json& j) {
    return {parse_rational(j.at(0).get<std::string>()), parse_rational(j.at(1).get<std::string>())};
}

json classification_json(const Classification& c) {
    json j;
    j["kind"] = to_string(c.kind);
    j["delta"] = rat(c.delta);
    j["tau"] = rat(c.tau);
    if (c.semihyp) {
        j["lambda"] = rat(c.semihyp->lambda);
        j["a"] = rat(c.semihyp->a);
        j["alpha"] = c.semihyp->alpha;
    }
    return j;
}

Classification parse_classification(const json& j) {
    Classification c;
    c.kind = parse_sing_kind(j.at("kind").get<std::string>());
    c.delta = parse_rational(j.at("delta").get<std::string>());
    c.tau = parse_rational(j.at("tau").get<std::string>());
    if (j.contains("lambda")) {
        SemiHypEvidence e;
        e.lambda = parse_rational(j.at("lambda").get<std::string>());
        e.a = parse_rational(j.at("a").get<std::string>());
        e.alpha = j.at("alpha").get<int>();
        c.semihyp = e;
    }
    return c;
}

}  // namespace

std::string serialize_report(const PortraitReport& rep) {
    json j;
    j["params"] = {{"b", rat(rep.params.b)},
                   {"c", rat(rep.params.c)},
                   {"k", rat(rep.params.k)},
                   {"m", rat(rep.params.m)}};
    j["steady_states"] = {{"p", point_json(rep.states.p)},
                          {"q", point_json(rep.states.q)},
                          {"coincident", rep.states.coincident}};
    j["finite"] = json::array();
    for (const auto& fp : rep.finite) {
        json e = classification_json(fp.cls);
        e["point"] = point_json(fp.point);
        j["finite"].push_back(e);
    }
    j["infinite"] = json::array();
    for (const auto& ip : rep.infinite) {
        json e = classification_json(ip.cls);
        e["chart"] = to_string(ip.chart);
        e["u"] = rat(ip.u);
        if (ip.sn) e["sn_type"] = to_string(*ip.sn);
        j["infinite"].push_back(e);
    }
    j["invariant_lines"] = json::array();
    for (const auto& c : rep.lines)
        j["invariant_lines"].push_back(
            {{"f", c.f.to_string()}, {"cofactor", c.cofactor.to_string()}});
    j["class"] = to_string(rep.cls);
    j["versions"] = {{"schema", 1}, {"sisport", "0.1.0"}};
    return j.dump(2) + "\n";
}

PortraitReport parse_report(const std::string& text) {
    const json j = json::parse(text);
    PortraitReport rep;
    rep.params.b = parse_rational(j.at("params").at("b").get<std::string>());
    rep.params.c = parse_rational(j.at("params").at("c").get<std::string>());
    rep.params.k = parse_rational(j.at("params").at("k").get<std::string>());
    rep.params.m = parse_rational(j.at("params").at("m").get<std::string>());
    rep.states.p = parse_point(j.at("steady_states").at("p"));
    rep.states.q = parse_point(j.at("steady_states").at("q"));
    rep.states.coincident = j.at("steady_states").at("coincident").get<bool>();
    for (const auto& e : j.at("finite")) {
        FinitePointReport fp;
        fp.point = parse_point(e.at("point"));
        fp.cls = parse_classification(e);
        rep.finite.push_back(fp);
    }
    for (const auto& e : j.at("infinite")) {
        InfinitePoint ip;
        ip.chart = parse_chart_id(e.at("chart").get<std::string>());
        ip.u = parse_rational(e.at("u").get<std::string>());
        ip.cls = parse_classification(e);
        if (e.contains("sn_type"))
            ip.sn = e.at("sn_type").get<std::string>() == "SN1" ? SnType::SN1 : SnType::SN2;
        rep.infinite.push_back(ip);
    }
    for (const auto& e : j.at("invariant_lines")) {
        InvariantCurve c;
        c.f = parse_poly(e.at("f").get<std::string>());
        c.cofactor = parse_poly(e.at("cofactor").get<std::string>());
        rep.lines.push_back(c);
    }
    rep.cls = j.at("class").get<std::string>() == "A" ? PortraitClass::A : PortraitClass::B;
    return rep;
}

Poly2 parse_poly(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty polynomial string");
    if (text == "0") return Poly2();

    Poly2 out;
    size_t pos = 0;
    int term_sign = 1;
    if (text[0] == '-') {
        term_sign = -1;
        pos = 1;
    }
    while (pos < text.size()) {
        size_t end = text.find(' ', pos);
        const std::string term =
            end == std::string::npos ? text.substr(pos) : text.substr(pos, end - pos);

        Rational coef(term_sign);
        int ei = 0, ej = 0;
        size_t tp = 0;
        while (tp < term.size()) {
            size_t fac_end = term.find('*', tp);
            const std::string fac = fac_end == std::string::npos
                                        ? term.substr(tp)
                                        : term.substr(tp, fac_end - tp);
            if (fac.empty()) throw std::invalid_argument("malformed polynomial: " + text);
            if (fac[0] == 'x' || fac[0] == 'y') {
                int e = 1;
                if (fac.size() > 1) {
                    if (fac[1] != '^') throw std::invalid_argument("malformed monomial: " + fac);
                    e = std::stoi(fac.substr(2));
                }
                (fac[0] == 'x' ? ei : ej) += e;
            } else {
                coef *= parse_rational(fac);
            }
            if (fac_end == std::string::npos) break;
            tp = fac_end + 1;
        }
        out += Poly2::mono(ei, ej, coef);

        if (end == std::string::npos) break;
        // Expect " + " or " - ".
        if (end + 2 >= text.size() || text[end + 2] != ' ')
            throw std::invalid_argument("malformed polynomial separators: " + text);
        const char op = text[end + 1];
        if (op == '+')
            term_sign = 1;
        else if (op == '-')
            term_sign = -1;
        else
            throw std::invalid_argument("malformed polynomial operator: " + text);
        pos = end + 3;
    }
    return out;
}

bool reports_equal(const PortraitReport& a, const PortraitReport& b) {
    auto cls_eq = [](const Classification& x, const Classification& y) {
        if (x.kind != y.kind || x.delta != y.delta || x.tau != y.tau) return false;
        if (x.semihyp.has_value() != y.semihyp.has_value()) return false;
        if (x.semihyp &&
            (x.semihyp->lambda != y.semihyp->lambda || x.semihyp->a != y.semihyp->a ||
             x.semihyp->alpha != y.semihyp->alpha))
            return false;
        return true;
    };
    if (a.params.b != b.params.b || a.params.c != b.params.c || a.params.k != b.params.k ||
        a.params.m != b.params.m)
        return false;
    if (a.states.p != b.states.p || a.states.q != b.states.q ||
        a.states.coincident != b.states.coincident)
        return false;
    if (a.cls != b.cls) return false;
    if (a.finite.size() != b.finite.size() || a.infinite.size() != b.infinite.size() ||
        a.lines.size() != b.lines.size())
        return false;
    for (size_t i = 0; i < a.finite.size(); ++i)
        if (a.finite[i].point != b.finite[i].point ||
            !cls_eq(a.finite[i].cls, b.finite[i].cls))
            return false;
    for (size_t i = 0; i < a.infinite.size(); ++i) {
        const auto& x = a.infinite[i];
        const auto& y = b.infinite[i];
        if (x.chart != y.chart || x.u != y.u || x.sn != y.sn || !cls_eq(x.cls, y.cls))
            return false;
    }
    for (size_t i = 0; i < a.lines.size(); ++i)
        if (!(a.lines[i] == b.lines[i])) return false;
    return true;
}

}  // namespace sisport
