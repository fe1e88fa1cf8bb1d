#include "swlink/family.hpp"

#include <algorithm>
#include <set>

namespace swlink {

void SurgeryBasisTriple::align_entries() {
    auto vars = merged_vars(merged_vars(a.vars(), b.vars()), c.vars());
    a = a.aligned_to(vars);
    b = b.aligned_to(vars);
    c = c.aligned_to(vars);
}

LaurentPoly mms_evaluate(const SurgeryBasisTriple& tr, const Int& p, const Int& q, const Int& r) {
    return LaurentPoly(p) * tr.a + LaurentPoly(q) * tr.b + LaurentPoly(r) * tr.c;
}

namespace {

// Solve M x = rhs over the integers, M an m x 3 matrix. Diagonalize by
// unimodular row and column operations, applying row operations to rhs and
// accumulating column operations in V; then back-substitute exactly.
std::optional<std::array<Int, 3>> solve_z3(std::vector<std::array<Int, 3>> m,
                                           std::vector<Int> rhs) {
    const size_t rows = m.size();
    std::array<std::array<Int, 3>, 3> v{};
    for (int i = 0; i < 3; ++i) v[i][i] = 1;

    auto swap_rows = [&](size_t i, size_t j) {
        std::swap(m[i], m[j]);
        std::swap(rhs[i], rhs[j]);
    };
    auto addmul_row = [&](size_t dst, size_t src, const Int& f) {
        for (int k = 0; k < 3; ++k) m[dst][k] += f * m[src][k];
        rhs[dst] += f * rhs[src];
    };
    // Column operations on m are mirrored on v so that x = v * y solves the
    // original system whenever y solves the reduced one.
    auto swap_cols = [&](int i, int j) {
        for (size_t r = 0; r < rows; ++r) std::swap(m[r][i], m[r][j]);
        for (int r = 0; r < 3; ++r) std::swap(v[r][i], v[r][j]);
    };
    auto addmul_col = [&](int dst, int src, const Int& f) {
        for (size_t r = 0; r < rows; ++r) m[r][dst] += f * m[r][src];
        for (int r = 0; r < 3; ++r) v[r][dst] += f * v[r][src];
    };

    size_t rank = 0;
    for (int k = 0; k < 3 && rank < rows; ++k) {
        for (;;) {
            // Smallest nonzero |entry| in the remaining block -> pivot.
            size_t pi = rows;
            int pj = -1;
            for (size_t i = rank; i < rows; ++i)
                for (int j = k; j < 3; ++j)
                    if (m[i][j] != 0 &&
                        (pi == rows || abs(m[i][j]) < abs(m[pi][pj])))
                        pi = i, pj = j;
            if (pi == rows) break; // block is zero
            if (pi != rank) swap_rows(pi, rank);
            if (pj != k) swap_cols(pj, k);
            bool clean = true;
            for (size_t i = rank + 1; i < rows; ++i) {
                if (m[i][k] == 0) continue;
                Int f = m[i][k] / m[rank][k];
                addmul_row(i, rank, -f);
                if (m[i][k] != 0) clean = false;
            }
            for (int j = k + 1; j < 3; ++j) {
                if (m[rank][j] == 0) continue;
                Int f = m[rank][j] / m[rank][k];
                addmul_col(j, k, -f);
                if (m[rank][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[rank][k] == 0) break;
        ++rank;
    }

    std::array<Int, 3> y{};
    for (size_t i = 0; i < rows; ++i) {
        int j = static_cast<int>(i);
        if (i < rank) {
            if (rhs[i] % m[i][j] != 0) return std::nullopt;
            y[j] = rhs[i] / m[i][j];
        } else if (rhs[i] != 0) {
            return std::nullopt;
        }
    }
    std::array<Int, 3> x{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) x[i] += v[i][j] * y[j];
    return x;
}

} // namespace

std::optional<std::array<Int, 3>> family_membership(const SurgeryBasisTriple& tr,
                                                    const LaurentPoly& target) {
    SurgeryBasisTriple t = tr;
    auto vars = merged_vars(merged_vars(t.a.vars(), t.b.vars()),
                            merged_vars(t.c.vars(), target.vars()));
    t.a = t.a.aligned_to(vars);
    t.b = t.b.aligned_to(vars);
    t.c = t.c.aligned_to(vars);
    LaurentPoly p = target.aligned_to(vars);

    std::set<ExpVec, std::greater<ExpVec>> support;
    for (const auto& [e, c] : t.a.terms()) support.insert(e);
    for (const auto& [e, c] : t.b.terms()) support.insert(e);
    for (const auto& [e, c] : t.c.terms()) support.insert(e);
    for (const auto& [e, c] : p.terms()) support.insert(e);

    std::vector<std::array<Int, 3>> m;
    std::vector<Int> rhs;
    m.reserve(support.size());
    for (const ExpVec& e : support) {
        m.push_back({t.a.coeff(e), t.b.coeff(e), t.c.coeff(e)});
        rhs.push_back(p.coeff(e));
    }
    return solve_z3(std::move(m), std::move(rhs));
}

FamilyVerdict family_equal(const SurgeryBasisTriple& t1, const SurgeryBasisTriple& t2) {
    for (const LaurentPoly* g : {&t1.a, &t1.b, &t1.c})
        if (!family_membership(t2, *g)) return {false, *g};
    for (const LaurentPoly* g : {&t2.a, &t2.b, &t2.c})
        if (!family_membership(t1, *g)) return {false, *g};
    return {true, std::nullopt};
}

} // namespace swlink
