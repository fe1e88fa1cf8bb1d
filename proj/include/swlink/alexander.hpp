/**
 * @file alexander.hpp
 * @brief Fox calculus, Alexander matrices and polynomials, Hosokawa
 *        polynomials, and the braid-to-polynomial pipelines.
 */
#ifndef SWLINK_ALEXANDER_HPP
#define SWLINK_ALEXANDER_HPP

#include "swlink/laurent.hpp"
#include "swlink/present.hpp"

namespace swlink {

/// Fox derivative of w with respect to generator `gen`, abelianized through
/// the presentation's generator -> variable map. Result is over the
/// presentation's full variable alphabet.
LaurentPoly fox_derivative(const FreeWord& w, int gen, const GroupPresentation& p);

/// (#relators) x (#generators) matrix of abelianized Fox derivatives.
std::vector<std::vector<LaurentPoly>> alexander_matrix(const GroupPresentation& p);

/// Alexander polynomial of a meridional deficiency-1 presentation, as an
/// associate class. `delete_gen` picks the deleted column (default: the
/// last generator); the result is independent of that choice.
///
/// The deleted-column determinant D is the polynomial itself for knots; for
/// links of >= 2 components D carries the extra factor (v_j - 1), which is
/// divided out exactly (NotDivisible signals a presentation outside the
/// supported class).
AssociateClass alexander_polynomial(const GroupPresentation& p, int delete_gen = -1);

/// Hosokawa polynomial from the one-variable collapse of a k-component
/// Alexander polynomial: exact division by (t-1)^(k-2). Zero passes through.
AssociateClass hosokawa(const LaurentPoly& delta_collapsed, int k);

// Braid pipelines.
AssociateClass closure_alexander(const BraidWord& b);
AssociateClass axis_alexander(const BraidWord& b);
/// Collapse the closure polynomial to one variable and divide; requires a
/// closure with >= 2 components.
AssociateClass hosokawa_of_braid(const BraidWord& b);

} // namespace swlink

#endif
