#include "swlink/present.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace swlink {

FreeWord FreeWord::inverse() const {
    FreeWord out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.letters.emplace_back(it->first, -it->second);
    return out;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
    FreeWord out = *this;
    out.letters.insert(out.letters.end(), o.letters.begin(), o.letters.end());
    return out;
}

FreeWord FreeWord::reduced() const {
    FreeWord out;
    for (const auto& l : letters) {
        if (!out.letters.empty() && out.letters.back().first == l.first &&
            out.letters.back().second == -l.second)
            out.letters.pop_back();
        else
            out.letters.push_back(l);
    }
    return out;
}

std::string FreeWord::str() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : letters) {
        if (!first) os << " ";
        first = false;
        os << "x" << (g + 1);
        if (e < 0) os << "^-1";
    }
    return os.str();
}

FreeGroupEndo FreeGroupEndo::identity(int n) {
    FreeGroupEndo f;
    f.images.reserve(n);
    for (int i = 0; i < n; ++i) f.images.push_back(FreeWord::gen(i));
    return f;
}

FreeWord FreeGroupEndo::apply(const FreeWord& w) const {
    FreeWord out;
    for (const auto& [g, e] : w.letters) {
        if (g < 0 || g >= rank()) throw UnmappedGenerator("generator index out of range");
        const FreeWord img = e > 0 ? images[g] : images[g].inverse();
        out.letters.insert(out.letters.end(), img.letters.begin(), img.letters.end());
    }
    return out;
}

FreeGroupEndo FreeGroupEndo::after(const FreeGroupEndo& inner) const {
    FreeGroupEndo out;
    out.images.reserve(inner.images.size());
    for (const FreeWord& w : inner.images) out.images.push_back(apply(w).reduced());
    return out;
}

FreeGroupEndo artin_generator(int n, int letter) {
    if (letter == 0 || std::abs(letter) >= n)
        throw LetterOutOfRange("letter " + std::to_string(letter) + " invalid for " +
                               std::to_string(n) + " strands");
    FreeGroupEndo f = FreeGroupEndo::identity(n);
    int i = std::abs(letter) - 1;
    if (letter > 0) {
        // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        f.images[i] = FreeWord::gen(i) * FreeWord::gen(i + 1) * FreeWord::gen(i, -1);
        f.images[i + 1] = FreeWord::gen(i);
    } else {
        // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        f.images[i] = FreeWord::gen(i + 1);
        f.images[i + 1] = FreeWord::gen(i + 1, -1) * FreeWord::gen(i) * FreeWord::gen(i + 1);
    }
    return f;
}

FreeGroupEndo artin_action(const BraidWord& b) {
    validate_braid(b);
    FreeGroupEndo total = FreeGroupEndo::identity(b.strands);
    for (int w : b.letters) total = artin_generator(b.strands, w).after(total);
    return total;
}

std::vector<std::string> GroupPresentation::variables() const {
    std::vector<std::string> vars;
    for (const auto& g : generators) vars.push_back(g.variable);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool GroupPresentation::relators_abelianize_to_zero() const {
    for (const FreeWord& r : relators) {
        std::map<std::string, long> sums;
        for (const auto& [g, e] : r.letters) {
            if (g < 0 || g >= static_cast<int>(generators.size())) return false;
            sums[generators[g].variable] += e;
        }
        for (const auto& [v, s] : sums)
            if (s != 0) return false;
    }
    return true;
}

std::string component_variable(int component, int component_count) {
    if (component_count == 1) return "t";
    // Width-pad so the names sort in component order for any count.
    std::string digits = std::to_string(component + 1);
    std::string width = std::to_string(component_count);
    return "t" + std::string(width.size() - digits.size(), '0') + digits;
}

GroupPresentation closed_braid_presentation(const BraidWord& b) {
    const int n = b.strands;
    ClosureComponents cc = closure_components(b);
    FreeGroupEndo beta = artin_action(b);

    GroupPresentation p;
    p.generators.reserve(n);
    for (int i = 0; i < n; ++i)
        p.generators.push_back({"x" + std::to_string(i + 1), cc.label[i],
                                component_variable(cc.label[i], cc.count)});
    for (int i = 0; i + 1 < n; ++i) // highest-index strand's relator dropped
        p.relators.push_back((beta.images[i] * FreeWord::gen(i, -1)).reduced());
    return p;
}

GroupPresentation braid_axis_presentation(const BraidWord& b) {
    const int n = b.strands;
    ClosureComponents cc = closure_components(b);
    FreeGroupEndo beta = artin_action(b);

    GroupPresentation p;
    p.generators.reserve(n + 1);
    for (int i = 0; i < n; ++i)
        p.generators.push_back({"x" + std::to_string(i + 1), cc.label[i],
                                component_variable(cc.label[i], cc.count)});
    p.generators.push_back({"a", cc.count, "tau"});
    const int axis = n;
    for (int i = 0; i < n; ++i) {
        FreeWord r = FreeWord::gen(axis) * beta.images[i] * FreeWord::gen(axis, -1) *
                     FreeWord::gen(i, -1);
        p.relators.push_back(r.reduced());
    }
    return p;
}

} // namespace swlink
