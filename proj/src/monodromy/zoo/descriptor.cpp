#include "monodromy/zoo/descriptor.hpp"

#include "monodromy/error.hpp"
#include "monodromy/zoo/algebraic.hpp"
#include "monodromy/zoo/hypergeometric.hpp"
#include "monodromy/zoo/polylog.hpp"
#include "monodromy/zoo/power.hpp"

namespace monodromy::zoo {

using nlohmann::json;

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw Error(ErrorCode::Parse, "expected a number or [re, im]");
}

json describe(const continuation::AnalyticElement& e) {
    json p = json::object();
    if (auto* x = dynamic_cast<const PowerBranch*>(&e)) {
        p = {{"alpha", complex_to_json(x->alpha())}, {"a", complex_to_json(x->exponent())},
             {"scale", complex_to_json(x->scale())}};
        return {{"family", "power"}, {"parameters", p}};
    }
    if (auto* x = dynamic_cast<const LogBranch*>(&e)) {
        p = {{"alpha", complex_to_json(x->alpha())}, {"scale", complex_to_json(x->scale())}};
        return {{"family", "log"}, {"parameters", p}};
    }
    if (auto* x = dynamic_cast<const AlgebroGeometricElement*>(&e)) {
        json phi = json::array();
        for (auto c : x->phi()) phi.push_back(complex_to_json(c));
        p = {{"alpha", complex_to_json(x->alpha())}, {"a", complex_to_json(x->exponent())},
             {"n", x->log_power()}, {"phi", phi}};
        return {{"family", "algebro_geometric"}, {"parameters", p}};
    }
    if (auto* x = dynamic_cast<const PolylogElement*>(&e)) {
        p = {{"k", x->order()}, {"scale", complex_to_json(x->scale())}};
        return {{"family", "polylog"}, {"parameters", p}};
    }
    if (auto* x = dynamic_cast<const Hypergeometric2F1*>(&e)) {
        p = {{"a", complex_to_json(x->a())}, {"b", complex_to_json(x->b())}, {"c", complex_to_json(x->c())}};
        return {{"family", "hyp2f1"}, {"parameters", p}};
    }
    if (auto* x = dynamic_cast<const AlgebraicElement*>(&e)) {
        return {{"family", "algebraic"}, {"parameters", {{"preset", x->name()}}}};
    }
    if (auto* x = dynamic_cast<const continuation::LinearCombination*>(&e)) {
        json terms = json::array();
        for (const auto& t : x->terms())
            terms.push_back({{"coef", complex_to_json(t.coef)}, {"element", describe(*t.element)}});
        return {{"family", "sum"}, {"parameters", {{"terms", terms}}}};
    }
    return {{"family", e.name()}, {"parameters", p}};
}

continuation::ElementPtr element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw Error(ErrorCode::Parse, "element descriptor needs a family");
    const std::string fam = j.at("family").get<std::string>();
    const json p = j.value("parameters", json::object());
    auto cx = [&](const char* key, cplx dflt) { return p.contains(key) ? complex_from_json(p.at(key)) : dflt; };
    try {
        if (fam == "power") return std::make_shared<PowerBranch>(cx("alpha", 1.0), cx("a", 0.5), cx("scale", 1.0));
        if (fam == "log") return std::make_shared<LogBranch>(cx("alpha", 1.0), cx("scale", 1.0));
        if (fam == "algebro_geometric") {
            std::vector<cplx> phi;
            for (const auto& c : p.value("phi", json::array())) phi.push_back(complex_from_json(c));
            return std::make_shared<AlgebroGeometricElement>(cx("alpha", 1.0), cx("a", 0.0), p.value("n", 0), phi);
        }
        if (fam == "polylog") return std::make_shared<PolylogElement>(p.value("k", 2), cx("scale", 1.0));
        if (fam == "hyp2f1") return std::make_shared<Hypergeometric2F1>(cx("a", 0.5), cx("b", 0.5), cx("c", 1.0));
        if (fam == "algebraic") {
            std::string preset = p.value("preset", std::string("sqrt(1-z)"));
            if (preset == "sqrt(1-z)") return AlgebraicElement::sqrt_one_minus_z();
            if (preset == "1+sqrt(1-z)") return AlgebraicElement::shifted_sqrt();
            if (preset == "w^3-w-z") return AlgebraicElement::cubic();
            throw Error(ErrorCode::InvalidArgument, "unknown algebraic preset " + preset);
        }
        if (fam == "sum") {
            std::vector<continuation::LinearCombination::Term> terms;
            for (const auto& t : p.at("terms"))
                terms.push_back({complex_from_json(t.value("coef", json(1.0))), element_from_json(t.at("element"))});
            return std::make_shared<continuation::LinearCombination>(std::move(terms));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("bad element parameters: ") + e.what());
    }
    throw Error(ErrorCode::InvalidArgument, "unknown element family " + fam);
}

}  // namespace monodromy::zoo
