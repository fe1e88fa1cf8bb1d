#ifndef SWLINK_PRESENT_HPP
#define SWLINK_PRESENT_HPP

#include <string>
#include <utility>
#include <vector>

#include "swlink/braid.hpp"

namespace swlink {

/// Word in a free group: (generator index, ±1) letters, stored unreduced.
struct FreeWord {
    std::vector<std::pair<int, int>> letters;

    static FreeWord gen(int i, int e = 1) { return FreeWord{{{i, e}}}; }
    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& o) const; // concatenation
    /// Cancel adjacent inverse pairs; idempotent.
    FreeWord reduced() const;
    bool empty() const { return letters.empty(); }
    friend bool operator==(const FreeWord& a, const FreeWord& b) = default;
    std::string str() const; // x1 x2^-1 ...
};

/// Endomorphism of the free group on x_0..x_{n-1}, given by generator images.
struct FreeGroupEndo {
    std::vector<FreeWord> images;

    static FreeGroupEndo identity(int n);
    int rank() const { return static_cast<int>(images.size()); }
    FreeWord apply(const FreeWord& w) const;
    /// Composite mapping x -> this(inner(x)).
    FreeGroupEndo after(const FreeGroupEndo& inner) const;
};

/// Artin action of one braid generator (signed, 1-based) on n strands.
FreeGroupEndo artin_generator(int n, int letter);

/// Artin action of the whole word, letters applied in word order.
FreeGroupEndo artin_action(const BraidWord& b);

struct PresGenerator {
    std::string name;
    int component = 0;    // link component the meridian belongs to
    std::string variable; // abelianization target
};

/// Finite presentation with meridional generators. The abelianization sends
/// each generator to exponent 1 of its component's variable.
struct GroupPresentation {
    std::vector<PresGenerator> generators;
    std::vector<FreeWord> relators;

    int deficiency() const {
        return static_cast<int>(generators.size()) - static_cast<int>(relators.size());
    }
    /// Sorted distinct variable names.
    std::vector<std::string> variables() const;
    /// Number of distinct variables (= link components represented).
    int component_count() const { return static_cast<int>(variables().size()); }
    /// Every relator must have zero exponent sum in each variable.
    bool relators_abelianize_to_zero() const;
};

/// Variable for a closure component: "t" when the closure is a knot,
/// otherwise "t1".."tk".
std::string component_variable(int component, int component_count);

/// Presentation of the closed-braid complement: generators x1..xn, relators
/// beta(x_i) x_i^-1 with the last strand's relator dropped (deficiency 1).
GroupPresentation closed_braid_presentation(const BraidWord& b);

/// Presentation of the closed braid together with its axis: generators
/// x1..xn and the axis meridian a (variable "tau"); relators
/// a beta(x_i) a^-1 x_i^-1 for every i.
GroupPresentation braid_axis_presentation(const BraidWord& b);

} // namespace swlink

#endif
