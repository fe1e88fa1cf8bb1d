#include "swlink/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace swlink {

namespace {

void check_vars(const std::vector<std::string>& vars) {
    for (size_t i = 0; i + 1 < vars.size(); ++i) {
        if (vars[i] == vars[i + 1])
            throw VariableMismatch("duplicate variable '" + vars[i] + "'");
        if (vars[i] > vars[i + 1])
            throw VariableMismatch("variable list not sorted");
    }
}

} // namespace

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace(ExpVec{}, Int(c));
}

LaurentPoly::LaurentPoly(Int c) {
    if (c != 0) terms_.emplace(ExpVec{}, std::move(c));
}

LaurentPoly::LaurentPoly(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
    check_vars(vars_);
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.size() != vars_.size())
            throw VariableMismatch("exponent vector length does not match variable count");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

LaurentPoly LaurentPoly::zero(std::vector<std::string> vars) {
    std::sort(vars.begin(), vars.end());
    return LaurentPoly(std::move(vars), TermMap{});
}

LaurentPoly LaurentPoly::constant(Int c) { return LaurentPoly(std::move(c)); }

LaurentPoly LaurentPoly::variable(const std::string& name, int exp) {
    LaurentPoly p;
    p.vars_ = {name};
    p.terms_.emplace(ExpVec{exp}, Int(1));
    return p;
}

LaurentPoly LaurentPoly::monomial(Int c, const MonomialMap& m) {
    LaurentPoly p;
    if (c == 0) return p;
    ExpVec e;
    for (const auto& [name, exp] : m) {
        p.vars_.push_back(name); // std::map iterates sorted
        e.push_back(exp);
    }
    p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const ExpVec& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int LaurentPoly::var_index(const std::string& name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return -1;
    return static_cast<int>(it - vars_.begin());
}

const Int& LaurentPoly::coeff(const ExpVec& e) const {
    static const Int zero_coeff{0};
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_coeff : it->second;
}

Int LaurentPoly::constant_term() const { return coeff(ExpVec(vars_.size(), 0)); }

ExpVec LaurentPoly::min_exponents() const {
    ExpVec m(vars_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

ExpVec LaurentPoly::max_exponents() const {
    ExpVec m(vars_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], e[i]);
        }
    }
    return m;
}

LaurentPoly LaurentPoly::aligned_to(const std::vector<std::string>& superset) const {
    check_vars(superset);
    std::vector<int> pos(vars_.size());
    {
        size_t j = 0;
        for (size_t i = 0; i < vars_.size(); ++i) {
            while (j < superset.size() && superset[j] < vars_[i]) ++j;
            if (j == superset.size() || superset[j] != vars_[i])
                throw VariableMismatch("variable '" + vars_[i] + "' missing from alignment target");
            pos[i] = static_cast<int>(j);
        }
    }
    LaurentPoly out;
    out.vars_ = superset;
    for (const auto& [e, c] : terms_) {
        ExpVec ne(superset.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

LaurentPoly LaurentPoly::pruned() const {
    std::vector<size_t> keep;
    for (size_t i = 0; i < vars_.size(); ++i) {
        for (const auto& [e, c] : terms_) {
            if (e[i] != 0) {
                keep.push_back(i);
                break;
            }
        }
    }
    if (keep.size() == vars_.size()) return *this;
    LaurentPoly out;
    for (size_t i : keep) out.vars_.push_back(vars_[i]);
    for (const auto& [e, c] : terms_) {
        ExpVec ne;
        ne.reserve(keep.size());
        for (size_t i : keep) ne.push_back(e[i]);
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& by) const {
    if (by.size() != vars_.size())
        throw VariableMismatch("shift vector length does not match variable count");
    LaurentPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        ExpVec ne(e);
        for (size_t i = 0; i < ne.size(); ++i) ne[i] += by[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

LaurentPoly LaurentPoly::exponents_scaled(int k) const {
    LaurentPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        ExpVec ne(e);
        for (int& x : ne) x *= k;
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

LaurentPoly LaurentPoly::inverted_vars() const { return exponents_scaled(-1); }

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly acc = LaurentPoly::constant(1).aligned_to(vars_);
    LaurentPoly base = *this;
    while (k) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

void LaurentPoly::add_term(const ExpVec& e, Int c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    auto vars = merged_vars(a.vars_, b.vars_);
    LaurentPoly x = a.aligned_to(vars);
    LaurentPoly y = b.aligned_to(vars);
    for (const auto& [e, c] : y.terms_) x.add_term(e, c);
    return x;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    auto vars = merged_vars(a.vars_, b.vars_);
    LaurentPoly x = a.aligned_to(vars);
    LaurentPoly y = b.aligned_to(vars);
    LaurentPoly out;
    out.vars_ = vars;
    ExpVec e(vars.size());
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto vars = merged_vars(a.vars_, b.vars_);
    return a.aligned_to(vars).terms_ == b.aligned_to(vars).terms_;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool all_zero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (a != 1 || all_zero) os << a.str();
        bool printed = (a != 1 || all_zero);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << vars_[i];
            if (e[i] != 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

LaurentPoly normalize_units(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    ExpVec mins = p.min_exponents();
    for (int& x : mins) x = -x;
    LaurentPoly q = p.shifted(mins);
    if (q.terms().begin()->second < 0) q = -q;
    return q;
}

std::optional<int> symmetry_sign(const LaurentPoly& q) {
    LaurentPoly r = q.inverted_vars();
    if (r == q) return 0;
    if (r == -q) return 1;
    return std::nullopt;
}

LaurentPoly symmetrize(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly n = normalize_units(p);
    ExpVec deg = n.max_exponents();
    for (int& x : deg) x = -x;
    LaurentPoly q = n.exponents_scaled(2).shifted(deg);
    if (!symmetry_sign(q))
        throw AsymmetricSupport("no monomial shift centers the support of " + p.str());
    return q;
}

LaurentPoly specialize(const LaurentPoly& p, const std::map<std::string, MonomialMap>& sigma) {
    // Target alphabet: union of image variables over the whole source
    // alphabet, used or not, so the result shape is input-independent.
    std::vector<std::string> tvars;
    for (const std::string& v : p.vars()) {
        auto it = sigma.find(v);
        if (it == sigma.end()) throw UnmappedVariable("no image for variable '" + v + "'");
        for (const auto& [tv, e] : it->second)
            tvars = merged_vars(tvars, {tv});
    }
    std::vector<MonomialMap> images;
    images.reserve(p.vars().size());
    for (const std::string& v : p.vars()) images.push_back(sigma.at(v));

    LaurentPoly out;
    out = LaurentPoly::zero(tvars);
    ExpVec ne(tvars.size());
    for (const auto& [e, c] : p.terms()) {
        std::fill(ne.begin(), ne.end(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            for (const auto& [tv, te] : images[i]) {
                auto pos = std::lower_bound(tvars.begin(), tvars.end(), tv) - tvars.begin();
                ne[pos] += e[i] * te;
            }
        }
        out.add_term(ne, c);
    }
    return out;
}

LaurentPoly rename_var(const LaurentPoly& p, const std::string& from, const std::string& to) {
    std::map<std::string, MonomialMap> sigma;
    for (const std::string& v : p.vars())
        sigma[v] = v == from ? MonomialMap{{to, 1}} : MonomialMap{{v, 1}};
    return specialize(p, sigma);
}

namespace {

// Exact division with both operands in the non-negative exponent cone and
// per-variable minimum exponent 0. Leading (lex-largest) terms must divide
// at every step; the leading exponent strictly decreases, so this
// terminates, and a failed step certifies non-divisibility.
LaurentPoly cone_divexact(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly r = f;
    LaurentPoly q = LaurentPoly::zero(f.vars());
    const auto& glead = *g.terms().begin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().begin();
        ExpVec e(rlead.first);
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] -= glead.first[i];
            if (e[i] < 0) throw NotDivisible("monomial obstruction in exact division");
        }
        if (rlead.second % glead.second != 0)
            throw NotDivisible("coefficient obstruction in exact division");
        Int c = rlead.second / glead.second;
        LaurentPoly term(f.vars(), LaurentPoly::TermMap{{std::move(e), std::move(c)}});
        q += term;
        r = r - term * g;
    }
    return q;
}

} // namespace

LaurentPoly divexact(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw NotDivisible("division by zero");
    if (f.is_zero()) return f;
    auto vars = merged_vars(f.vars(), g.vars());
    LaurentPoly fa = f.aligned_to(vars);
    LaurentPoly ga = g.aligned_to(vars);
    ExpVec fmin = fa.min_exponents();
    ExpVec gmin = ga.min_exponents();
    ExpVec fshift(fmin), qshift(fmin);
    for (size_t i = 0; i < vars.size(); ++i) {
        fshift[i] = -fmin[i];
        qshift[i] = fmin[i] - gmin[i];
    }
    ExpVec gshift(gmin);
    for (int& x : gshift) x = -x;
    LaurentPoly q = cone_divexact(fa.shifted(fshift), ga.shifted(gshift));
    return q.shifted(qshift);
}

LaurentPoly exact_determinant(std::vector<std::vector<LaurentPoly>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw NonSquare("matrix is not square");
    if (n == 0) return LaurentPoly::constant(1);

    std::vector<std::string> vars;
    for (const auto& row : m)
        for (const auto& p : row) vars = merged_vars(vars, p.vars());
    for (auto& row : m)
        for (auto& p : row) p = p.aligned_to(vars);

    // Clear each row into the non-negative cone, collecting the factored
    // monomial so the final determinant can be restored exactly.
    ExpVec total_shift(vars.size(), 0);
    for (auto& row : m) {
        ExpVec rmin;
        bool any = false;
        for (const auto& p : row) {
            if (p.is_zero()) continue;
            ExpVec pm = p.min_exponents();
            if (!any) {
                rmin = pm;
                any = true;
            } else {
                for (size_t i = 0; i < rmin.size(); ++i) rmin[i] = std::min(rmin[i], pm[i]);
            }
        }
        if (!any) return LaurentPoly::zero(vars); // zero row
        for (size_t i = 0; i < rmin.size(); ++i) total_shift[i] += rmin[i];
        ExpVec neg(rmin);
        for (int& x : neg) x = -x;
        for (auto& p : row) p = p.shifted(neg);
    }

    int sign = 1;
    LaurentPoly prev = LaurentPoly::constant(1).aligned_to(vars);
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return LaurentPoly::zero(vars);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = LaurentPoly::zero(vars);
        }
        prev = m[k][k];
    }
    LaurentPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det.shifted(total_shift);
}

} // namespace swlink
