#ifndef SWLINK_BRAID_HPP
#define SWLINK_BRAID_HPP

#include <string>
#include <vector>

#include "swlink/errors.hpp"

namespace swlink {

/// An n-strand braid word. Letters are signed 1-based generator indices:
/// +i is the positive crossing of strands i, i+1, read left to right.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;
};

/// Grammar: `<n> ":" (<signed-int>)*`, whitespace-insensitive.
/// Throws MalformedInput on grammar violations, LetterOutOfRange when a
/// letter is 0 or has magnitude >= n.
BraidWord parse_braid(const std::string& text);

/// Canonical serialization; parse_braid is a left inverse of this.
std::string braid_to_string(const BraidWord& b);

void validate_braid(const BraidWord& b);

/// Bijection on {0..n-1}; images[i] is where strand i ends up.
struct Permutation {
    std::vector<int> images;
    int size() const { return static_cast<int>(images.size()); }
    static Permutation identity(int n);
    /// Cycles sorted by smallest element; elements within a cycle follow
    /// the orbit from that smallest element.
    std::vector<std::vector<int>> cycles() const;
};

Permutation braid_permutation(const BraidWord& b);

struct ClosureComponents {
    int count = 0;
    std::vector<int> label; // strand (0-based) -> component index (0-based)
};

/// Components of the closed braid: cycles of braid_permutation, labeled in
/// order of their smallest strand.
ClosureComponents closure_components(const BraidWord& b);

/// Markov move I: g . b . g^-1 (g a signed generator index).
BraidWord conjugate(const BraidWord& b, int g);

/// Markov move II: add a strand and a final crossing sign*n.
BraidWord stabilize(const BraidWord& b, int sign);

} // namespace swlink

#endif
