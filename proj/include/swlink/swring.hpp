/**
 * @file swring.hpp
 * @brief Seiberg-Witten invariants as integral group-ring elements and the
 *        knot-surgery / link-surgery / fiber-sum / cover-pushforward
 *        product formulas.
 */
#ifndef SWLINK_SWRING_HPP
#define SWLINK_SWRING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swlink/alexander.hpp"
#include "swlink/braid.hpp"
#include "swlink/laurent.hpp"

namespace swlink {

/// A named building block: a 4-manifold (or relative piece) with its SW
/// element over named homology-class variables.
///
/// `relative` marks blocks stored with the rational-elliptic-surface
/// normalization: sw holds SW*(t-t^-1) (= 1 for E(1) itself) and the block's
/// (t_j - t_j^-1) factor is suppressed in the product formulas.
///
/// `parity` is (e+sign)/4 mod 2, supplied by the caller, never computed.
/// `pairings` declares which class pairs have nonzero intersection; it is
/// consulted only by precondition checks.
struct ManifoldBlock {
    std::string name;
    std::vector<std::string> classes; // sorted, unique
    LaurentPoly sw;                   // over a subset of classes
    int parity = 0;
    bool closed = false;
    bool relative = false;
    std::vector<std::pair<std::string, std::string>> pairings;

    /// Sorts classes, checks uniqueness and that sw only uses declared
    /// classes. Throws UnknownClass / VariableMismatch.
    void validate();
    bool has_class(const std::string& c) const;
};

/// Support of the SW element with coefficients, in canonical term order.
/// The zero class is reported too when its coefficient is nonzero.
std::vector<std::pair<ExpVec, Int>> basic_classes(const ManifoldBlock& m);

/// coef(-beta) == (-1)^parity coef(beta) for every class. Requires closed.
bool check_symmetry(const ManifoldBlock& m);

/// sw <- sym(delta_k) at the squared torus class, times sw. delta_k must be
/// a one-variable (knot) polynomial.
ManifoldBlock knot_surgery(const ManifoldBlock& x, const AssociateClass& delta_k,
                           const std::string& torus_class);

/// sw <- sym(delta_l) at squared torus variables, times prod_j sw_j (t_j -
/// t_j^-1), the factor suppressed for relative blocks. delta_l's variable
/// list names the torus variables: block j's torus class is identified with
/// the j-th variable, so the list length must equal the block count (a zero
/// polynomial over n named variables encodes an n-component split link).
ManifoldBlock link_surgery(const std::vector<std::pair<ManifoldBlock, std::string>>& blocks,
                           const LaurentPoly& delta_l);

/// Relative SW element of the braided torus S^1 x B inside x's torus
/// neighborhood: sym(axis polynomial of B)(t^2, tau^2) * sw * (t - t^-1).
/// The closure of B must be a knot. Adds the rim class "tau".
ManifoldBlock fibersum_relative(const ManifoldBlock& x, const BraidWord& b,
                                const std::string& torus_class);

/// Threefold-cover pushforward: sym(delta_l) collapsed to the torus class,
/// times sw^3 (t - t^-1)^3 (factors suppressed for relative blocks).
LaurentPoly cover_pushforward(const AssociateClass& delta_l, const ManifoldBlock& x,
                              const std::string& torus_class);

/// 2g-2 >= s + p for every declared pairing value p. Requires g >= 1.
bool adjunction_check(int genus, int self_intersection, const std::vector<int>& pairings);

/// Declared positive-scalar-curvature splitting: zeroes sw when set.
ManifoldBlock vanishing_flag(ManifoldBlock m, bool split);

} // namespace swlink

#endif
