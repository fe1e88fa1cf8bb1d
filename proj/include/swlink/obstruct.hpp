#ifndef SWLINK_OBSTRUCT_HPP
#define SWLINK_OBSTRUCT_HPP

#include <optional>
#include <string>

#include "swlink/alexander.hpp"
#include "swlink/braid.hpp"

namespace swlink {

/// One-sided verdicts: the tests obstruct isotopy, they never certify it.
enum class ObstructionStatus { NOT_ISOTOPIC, NOT_DISTINGUISHED };

struct ObstructionVerdict {
    ObstructionStatus status = ObstructionStatus::NOT_DISTINGUISHED;
    LaurentPoly lhs;                         // compared invariant of the first input
    LaurentPoly rhs;                         // ... of the second input
    std::optional<LaurentPoly> rhs_reversed; // second input with tau -> tau^-1
};

std::string to_string(ObstructionStatus s);

/// Decision core of the braided-torus test: associate-class comparison of
/// two symmetrized axis invariants under both tau orientations.
/// NOT_ISOTOPIC only when they differ for both.
ObstructionVerdict compare_axis_invariants(const LaurentPoly& lhs, const LaurentPoly& rhs);

/// Braided-torus test: compares the symmetrized axis-link polynomials at
/// squared variables, under both tau orientations. Braids must have equal
/// strand counts (StrandMismatch) and one-component closures.
ObstructionVerdict braided_torus_obstruction(const BraidWord& b1, const BraidWord& b2);

/// Threefold-simple-cover test: compares symmetrized Hosokawa polynomials
/// at the squared variable. Requires k = kp = 3.
ObstructionVerdict simple_cover_obstruction(const AssociateClass& dl, const AssociateClass& dlp,
                                            int k, int kp);

/// Strand count of the branch braid realizing a genus-g fibered link in the
/// threefold-cover construction: m = 2g + 4.
int strands_from_genus(int g);

} // namespace swlink

#endif
