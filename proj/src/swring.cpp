#include "swlink/swring.hpp"

#include <algorithm>

namespace swlink {

namespace {

int parity_of(const LaurentPoly& q, int fallback) {
    auto s = symmetry_sign(q);
    return s ? *s : fallback;
}

LaurentPoly torus_factor(const std::string& c) {
    return LaurentPoly::variable(c) - LaurentPoly::variable(c, -1);
}

} // namespace

void ManifoldBlock::validate() {
    std::sort(classes.begin(), classes.end());
    if (std::adjacent_find(classes.begin(), classes.end()) != classes.end())
        throw VariableMismatch("duplicate class name in block '" + name + "'");
    const LaurentPoly pruned = sw.pruned();
    for (const std::string& v : pruned.vars())
        if (!has_class(v))
            throw UnknownClass("sw of block '" + name + "' uses undeclared class '" + v + "'");
    for (const auto& [a, b] : pairings)
        if (!has_class(a) || !has_class(b))
            throw UnknownClass("pairing table of block '" + name + "' names an unknown class");
    sw = pruned.aligned_to(classes);
}

bool ManifoldBlock::has_class(const std::string& c) const {
    return std::binary_search(classes.begin(), classes.end(), c);
}

std::vector<std::pair<ExpVec, Int>> basic_classes(const ManifoldBlock& m) {
    std::vector<std::pair<ExpVec, Int>> out;
    LaurentPoly sw = m.sw.aligned_to(m.classes);
    out.reserve(sw.terms().size());
    for (const auto& [e, c] : sw.terms()) out.emplace_back(e, c);
    return out;
}

bool check_symmetry(const ManifoldBlock& m) {
    if (!m.closed) throw DomainError("conjugation symmetry applies to closed blocks only");
    for (const auto& [e, c] : m.sw.terms()) {
        ExpVec ne(e);
        for (int& x : ne) x = -x;
        Int want = m.parity % 2 ? -c : c;
        if (m.sw.coeff(ne) != want) return false;
    }
    return true;
}

ManifoldBlock knot_surgery(const ManifoldBlock& x, const AssociateClass& delta_k,
                           const std::string& torus_class) {
    if (!x.has_class(torus_class))
        throw UnknownClass("block '" + x.name + "' has no class '" + torus_class + "'");
    const LaurentPoly& rep = delta_k.rep();
    if (rep.vars().size() > 1)
        throw ArityMismatch("knot surgery takes a one-variable polynomial");
    LaurentPoly sym = symmetrize(rep);
    if (!sym.vars().empty()) sym = rename_var(sym, sym.vars()[0], torus_class);

    ManifoldBlock out = x;
    out.sw = (sym * x.sw).aligned_to(out.classes);
    out.name = x.name + "_K";
    out.closed = x.closed || x.relative;
    out.relative = false;
    return out;
}

ManifoldBlock link_surgery(const std::vector<std::pair<ManifoldBlock, std::string>>& blocks,
                           const LaurentPoly& delta_l) {
    const std::vector<std::string>& tvars = delta_l.vars();
    if (tvars.size() != blocks.size())
        throw ArityMismatch("polynomial has " + std::to_string(tvars.size()) +
                            " variables but " + std::to_string(blocks.size()) +
                            " blocks were given");
    LaurentPoly sym = delta_l.is_zero() ? delta_l : symmetrize(delta_l).aligned_to(tvars);

    LaurentPoly sw = sym;
    std::vector<std::string> classes(tvars);
    int parity = parity_of(sym, 0);
    std::string name = "link-surgery(";
    for (size_t j = 0; j < blocks.size(); ++j) {
        const ManifoldBlock& b = blocks[j].first;
        const std::string& tc = blocks[j].second;
        if (!b.has_class(tc))
            throw UnknownClass("block '" + b.name + "' has no class '" + tc + "'");
        LaurentPoly bsw = rename_var(b.sw.pruned(), tc, tvars[j]);
        sw *= bsw;
        parity ^= b.parity;
        if (!b.relative) {
            sw *= torus_factor(tvars[j]);
            parity ^= 1;
        }
        for (const std::string& c : b.classes) {
            if (c == tc) continue;
            if (std::find(classes.begin(), classes.end(), c) != classes.end())
                throw VariableMismatch("class '" + c + "' appears in two blocks");
            classes.push_back(c);
        }
        name += (j ? "," : "") + b.name;
    }
    name += ")";

    ManifoldBlock out;
    out.name = name;
    out.classes = classes;
    out.sw = sw;
    out.parity = parity;
    out.closed = true;
    out.relative = false;
    out.validate();
    return out;
}

ManifoldBlock fibersum_relative(const ManifoldBlock& x, const BraidWord& b,
                                const std::string& torus_class) {
    if (!x.has_class(torus_class))
        throw UnknownClass("block '" + x.name + "' has no class '" + torus_class + "'");
    if (closure_components(b).count != 1)
        throw DomainError("braided torus needs a one-component closure, got " +
                          std::to_string(closure_components(b).count));
    if (x.has_class("tau"))
        throw VariableMismatch("block already carries a class named 'tau'");
    // Basic classes of x must pair trivially with the torus.
    for (const auto& [a, c] : x.pairings) {
        std::string other;
        if (a == torus_class) other = c;
        else if (c == torus_class) other = a;
        else continue;
        int idx = x.sw.var_index(other);
        if (idx < 0) continue;
        for (const auto& [e, coef] : x.sw.terms())
            if (e[idx] != 0)
                throw DomainError("sw of '" + x.name + "' involves class '" + other +
                                  "' pairing nontrivially with the torus");
    }

    LaurentPoly sym = symmetrize(axis_alexander(b).rep());
    std::map<std::string, MonomialMap> sigma;
    for (const std::string& v : sym.vars())
        sigma[v] = v == "t" ? MonomialMap{{torus_class, 1}} : MonomialMap{{v, 1}};
    sym = specialize(sym, sigma);

    ManifoldBlock out = x;
    out.name = x.name + "#(" + braid_to_string(b) + ")";
    out.classes.push_back("tau");
    out.sw = sym * x.sw;
    out.parity = parity_of(sym, 0) ^ x.parity;
    if (!x.relative) {
        out.sw *= torus_factor(torus_class);
        out.parity ^= 1;
    }
    out.closed = false;
    out.relative = false;
    out.validate();
    return out;
}

LaurentPoly cover_pushforward(const AssociateClass& delta_l, const ManifoldBlock& x,
                              const std::string& torus_class) {
    if (!x.has_class(torus_class))
        throw UnknownClass("block '" + x.name + "' has no class '" + torus_class + "'");
    const LaurentPoly& rep = delta_l.rep();
    if (rep.vars().size() > 3)
        throw ArityMismatch("threefold cover takes a polynomial in at most 3 variables");
    LaurentPoly sym = symmetrize(rep);
    std::map<std::string, MonomialMap> collapse;
    for (const std::string& v : sym.vars()) collapse[v] = MonomialMap{{torus_class, 1}};
    sym = specialize(sym, collapse);

    LaurentPoly result = sym * x.sw.pow(3);
    if (!x.relative) result *= torus_factor(torus_class).pow(3);
    return result;
}

bool adjunction_check(int genus, int self_intersection, const std::vector<int>& pairings) {
    if (genus < 1) throw DomainError("adjunction inequality needs genus >= 1");
    for (int p : pairings)
        if (2 * genus - 2 < self_intersection + p) return false;
    return true;
}

ManifoldBlock vanishing_flag(ManifoldBlock m, bool split) {
    if (split) m.sw = LaurentPoly::zero(m.sw.vars());
    return m;
}

} // namespace swlink
