#include "swlink/alexander.hpp"

namespace swlink {

LaurentPoly fox_derivative(const FreeWord& w, int gen, const GroupPresentation& p) {
    const auto vars = p.variables();
    const int ngen = static_cast<int>(p.generators.size());
    if (gen < 0 || gen >= ngen) throw UnmappedGenerator("no such generator");

    LaurentPoly result = LaurentPoly::zero(vars);
    LaurentPoly prefix = LaurentPoly::constant(1).aligned_to(vars);
    for (const auto& [g, e] : w.letters) {
        if (g < 0 || g >= ngen) throw UnmappedGenerator("relator uses an unmapped generator");
        LaurentPoly tg = LaurentPoly::variable(p.generators[g].variable, e).aligned_to(vars);
        if (e > 0) {
            if (g == gen) result += prefix;
            prefix *= tg;
        } else {
            prefix *= tg; // tg is the inverse monomial
            if (g == gen) result += -prefix;
        }
    }
    return result;
}

std::vector<std::vector<LaurentPoly>> alexander_matrix(const GroupPresentation& p) {
    std::vector<std::vector<LaurentPoly>> m;
    m.reserve(p.relators.size());
    for (const FreeWord& r : p.relators) {
        std::vector<LaurentPoly> row;
        row.reserve(p.generators.size());
        for (size_t j = 0; j < p.generators.size(); ++j)
            row.push_back(fox_derivative(r, static_cast<int>(j), p));
        m.push_back(std::move(row));
    }
    return m;
}

AssociateClass alexander_polynomial(const GroupPresentation& p, int delete_gen) {
    const int ngen = static_cast<int>(p.generators.size());
    if (p.relators.empty() && ngen == 1)
        return AssociateClass(LaurentPoly::constant(1)); // unknot
    if (static_cast<int>(p.relators.size()) != ngen - 1)
        throw DegenerateMatrix("need #relators = #generators - 1, got " +
                               std::to_string(p.relators.size()) + " and " +
                               std::to_string(ngen));
    if (delete_gen < 0) delete_gen = ngen - 1;
    if (delete_gen >= ngen) throw UnmappedGenerator("deleted column out of range");

    auto m = alexander_matrix(p);
    for (auto& row : m) row.erase(row.begin() + delete_gen);
    LaurentPoly d = exact_determinant(std::move(m));

    if (p.component_count() >= 2) {
        LaurentPoly v = LaurentPoly::variable(p.generators[delete_gen].variable);
        d = divexact(d, v - LaurentPoly::constant(1));
    }
    return AssociateClass(d);
}

AssociateClass hosokawa(const LaurentPoly& delta_collapsed, int k) {
    if (k < 2) throw ArityMismatch("Hosokawa polynomial needs >= 2 components");
    if (delta_collapsed.pruned().vars().size() > 1)
        throw ArityMismatch("input must be collapsed to one variable");
    if (delta_collapsed.is_zero() || k == 2) return AssociateClass(delta_collapsed);
    const std::string var =
        delta_collapsed.pruned().vars().empty() ? "t" : delta_collapsed.pruned().vars()[0];
    LaurentPoly tm1 = LaurentPoly::variable(var) - LaurentPoly::constant(1);
    return AssociateClass(divexact(delta_collapsed, tm1.pow(static_cast<unsigned>(k - 2))));
}

AssociateClass closure_alexander(const BraidWord& b) {
    return alexander_polynomial(closed_braid_presentation(b));
}

AssociateClass axis_alexander(const BraidWord& b) {
    return alexander_polynomial(braid_axis_presentation(b));
}

AssociateClass hosokawa_of_braid(const BraidWord& b) {
    const int k = closure_components(b).count;
    if (k < 2) throw ArityMismatch("closure is a knot; Hosokawa needs >= 2 components");
    LaurentPoly delta = closure_alexander(b).rep();
    std::map<std::string, MonomialMap> collapse;
    for (const std::string& v : delta.vars()) collapse[v] = MonomialMap{{"t", 1}};
    return hosokawa(specialize(delta, collapse), k);
}

} // namespace swlink
