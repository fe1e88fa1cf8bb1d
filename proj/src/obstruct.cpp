#include "swlink/obstruct.hpp"

namespace swlink {

std::string to_string(ObstructionStatus s) {
    return s == ObstructionStatus::NOT_ISOTOPIC ? "NOT_ISOTOPIC" : "NOT_DISTINGUISHED";
}

ObstructionVerdict compare_axis_invariants(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    ObstructionVerdict v;
    v.lhs = lhs;
    v.rhs = rhs;
    LaurentPoly reversed = rhs;
    if (reversed.var_index("tau") >= 0) {
        std::map<std::string, MonomialMap> flip;
        for (const std::string& var : reversed.vars())
            flip[var] = MonomialMap{{var, var == "tau" ? -1 : 1}};
        reversed = specialize(reversed, flip);
    }
    v.rhs_reversed = reversed;

    bool same = AssociateClass(lhs) == AssociateClass(rhs);
    bool rev = AssociateClass(lhs) == AssociateClass(reversed);
    v.status = (!same && !rev) ? ObstructionStatus::NOT_ISOTOPIC
                               : ObstructionStatus::NOT_DISTINGUISHED;
    return v;
}

ObstructionVerdict braided_torus_obstruction(const BraidWord& b1, const BraidWord& b2) {
    if (b1.strands != b2.strands)
        throw StrandMismatch("braids have " + std::to_string(b1.strands) + " and " +
                             std::to_string(b2.strands) + " strands");
    for (const BraidWord* b : {&b1, &b2})
        if (closure_components(*b).count != 1)
            throw DomainError("braided torus needs a one-component closure");
    return compare_axis_invariants(symmetrize(axis_alexander(b1).rep()),
                                   symmetrize(axis_alexander(b2).rep()));
}

ObstructionVerdict simple_cover_obstruction(const AssociateClass& dl, const AssociateClass& dlp,
                                            int k, int kp) {
    if (k != 3 || kp != 3)
        throw ArityMismatch("threefold-cover test needs k = k' = 3");

    auto nabla_sym = [](const AssociateClass& d) {
        LaurentPoly rep = d.rep();
        std::map<std::string, MonomialMap> collapse;
        for (const std::string& v : rep.vars()) collapse[v] = MonomialMap{{"t", 1}};
        LaurentPoly h = hosokawa(specialize(rep, collapse), 3).rep();
        return h.is_zero() ? h : symmetrize(h);
    };

    ObstructionVerdict v;
    v.lhs = nabla_sym(dl);
    v.rhs = nabla_sym(dlp);
    v.status = AssociateClass(v.lhs) == AssociateClass(v.rhs)
                   ? ObstructionStatus::NOT_DISTINGUISHED
                   : ObstructionStatus::NOT_ISOTOPIC;
    return v;
}

int strands_from_genus(int g) {
    if (g < 0) throw DomainError("genus must be nonnegative");
    return 2 * g + 4;
}

} // namespace swlink
