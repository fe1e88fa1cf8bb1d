#ifndef SWLINK_FAMILY_HPP
#define SWLINK_FAMILY_HPP

#include <array>
#include <optional>

#include "swlink/laurent.hpp"

namespace swlink {

/// Generating triple of a torus-surgery family: the group-ring values at
/// surgery coefficients (1,0,0), (0,1,0), (0,0,1) in the (alpha, beta,
/// delta) basis (circle direction, framing pushoff, meridian). The family
/// they generate is the set of all integer combinations.
struct SurgeryBasisTriple {
    LaurentPoly a, b, c;

    /// Align all three entries to the shared alphabet.
    void align_entries();
};

/// p*A + q*B + r*C, exactly.
LaurentPoly mms_evaluate(const SurgeryBasisTriple& tr, const Int& p, const Int& q, const Int& r);

/// Some integer (p,q,r) with p*A + q*B + r*C = target, or nullopt. Solved by
/// unimodular reduction of the coefficient matrix over the support union.
std::optional<std::array<Int, 3>> family_membership(const SurgeryBasisTriple& tr,
                                                    const LaurentPoly& target);

struct FamilyVerdict {
    bool equal = false;
    std::optional<LaurentPoly> witness; // lies in exactly one family
};

/// Families coincide iff each triple's entries lie in the other's family.
FamilyVerdict family_equal(const SurgeryBasisTriple& t1, const SurgeryBasisTriple& t2);

} // namespace swlink

#endif
