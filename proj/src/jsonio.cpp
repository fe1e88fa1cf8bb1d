#include "swlink/jsonio.hpp"

#include <algorithm>
#include <numeric>

namespace swlink {

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(what + ": " + e.what());
    }
}

Json poly_to_json(const LaurentPoly& p) {
    Json j;
    j["vars"] = p.vars();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["coef"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly poly_from_json(const Json& j) {
    try {
        std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
        // Accept any variable order; permute exponents into sorted order.
        std::vector<size_t> order(vars.size());
        std::iota(order.begin(), order.end(), size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return vars[a] < vars[b]; });
        std::vector<std::string> sorted;
        sorted.reserve(vars.size());
        for (size_t i : order) sorted.push_back(vars[i]);

        LaurentPoly::TermMap terms;
        for (const Json& t : j.at("terms")) {
            ExpVec raw = t.at("exp").get<ExpVec>();
            if (raw.size() != vars.size())
                throw ParseError("polynomial term has wrong exponent length");
            const Json& cj = t.at("coef");
            Int c = cj.is_string() ? Int(cj.get<std::string>()) : Int(cj.get<long long>());
            ExpVec e;
            e.reserve(raw.size());
            for (size_t i : order) e.push_back(raw[i]);
            if (c != 0) {
                auto [it, fresh] = terms.try_emplace(std::move(e), c);
                if (!fresh) throw ParseError("duplicate exponent vector in polynomial");
            }
        }
        return LaurentPoly(std::move(sorted), std::move(terms));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad polynomial JSON: ") + e.what());
    } catch (const VariableMismatch& e) {
        throw ParseError(std::string("bad polynomial JSON: ") + e.what());
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw ParseError(std::string("bad polynomial JSON: ") + e.what());
    }
}

Json block_to_json(const ManifoldBlock& m) {
    Json j;
    j["name"] = m.name;
    j["classes"] = m.classes;
    j["parity"] = m.parity;
    j["closed"] = m.closed;
    j["relative"] = m.relative;
    j["sw"] = poly_to_json(m.sw);
    Json pr = Json::array();
    for (const auto& [a, b] : m.pairings) pr.push_back(Json::array({a, b}));
    j["pairings"] = std::move(pr);
    return j;
}

ManifoldBlock block_from_json(const Json& j) {
    try {
        ManifoldBlock m;
        m.name = j.at("name").get<std::string>();
        m.classes = j.at("classes").get<std::vector<std::string>>();
        m.parity = j.at("parity").get<int>();
        m.closed = j.at("closed").get<bool>();
        m.relative = j.value("relative", false);
        m.sw = poly_from_json(j.at("sw"));
        if (j.contains("pairings"))
            for (const Json& p : j.at("pairings"))
                m.pairings.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
        if (m.parity != 0 && m.parity != 1) throw ParseError("parity must be 0 or 1");
        m.validate();
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad block JSON: ") + e.what());
    }
}

Json triple_to_json(const SurgeryBasisTriple& t) {
    Json j;
    j["A"] = poly_to_json(t.a);
    j["B"] = poly_to_json(t.b);
    j["C"] = poly_to_json(t.c);
    return j;
}

SurgeryBasisTriple triple_from_json(const Json& j) {
    try {
        SurgeryBasisTriple t;
        t.a = poly_from_json(j.at("A"));
        t.b = poly_from_json(j.at("B"));
        t.c = poly_from_json(j.at("C"));
        t.align_entries();
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad triple JSON: ") + e.what());
    }
}

Json family_verdict_to_json(const FamilyVerdict& v) {
    Json j;
    j["equal"] = v.equal;
    j["witness"] = v.witness ? poly_to_json(*v.witness) : Json(nullptr);
    return j;
}

Json obstruction_verdict_to_json(const ObstructionVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    j["lhs"] = poly_to_json(v.lhs);
    j["rhs"] = poly_to_json(v.rhs);
    j["rhs_tau_reversed"] = v.rhs_reversed ? poly_to_json(*v.rhs_reversed) : Json(nullptr);
    return j;
}

Json presentation_to_json(const GroupPresentation& p) {
    Json j;
    Json gens = Json::array();
    for (const auto& g : p.generators) {
        Json e;
        e["name"] = g.name;
        e["component"] = g.component;
        e["variable"] = g.variable;
        gens.push_back(std::move(e));
    }
    j["generators"] = std::move(gens);
    Json rels = Json::array();
    for (const FreeWord& r : p.relators) {
        Json w = Json::array();
        for (const auto& [g, e] : r.letters) w.push_back(e > 0 ? g + 1 : -(g + 1));
        rels.push_back(std::move(w));
    }
    j["relators"] = std::move(rels);
    Json ab;
    for (const auto& g : p.generators) ab[g.name] = g.variable;
    j["abelianization"] = std::move(ab);
    return j;
}

} // namespace swlink
