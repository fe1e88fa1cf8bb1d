#include "swlink/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace swlink {

void validate_braid(const BraidWord& b) {
    if (b.strands < 1) throw MalformedInput("strand count must be >= 1");
    for (int w : b.letters) {
        if (w == 0 || std::abs(w) >= b.strands)
            throw LetterOutOfRange("letter " + std::to_string(w) + " invalid for " +
                                   std::to_string(b.strands) + " strands");
    }
}

BraidWord parse_braid(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos) throw MalformedInput("missing ':' in braid '" + text + "'");

    auto parse_int = [](const std::string& tok) {
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(tok, &pos);
        } catch (const std::exception&) {
            throw MalformedInput("bad integer '" + tok + "'");
        }
        if (pos != tok.size()) throw MalformedInput("bad integer '" + tok + "'");
        return v;
    };

    std::string head = text.substr(0, colon);
    std::istringstream hs(head);
    std::string tok;
    if (!(hs >> tok)) throw MalformedInput("missing strand count");
    long n = parse_int(tok);
    if (hs >> tok) throw MalformedInput("unexpected token before ':'");
    if (n < 1) throw MalformedInput("strand count must be >= 1");

    BraidWord b;
    b.strands = static_cast<int>(n);
    std::istringstream ts(text.substr(colon + 1));
    while (ts >> tok) {
        long w = parse_int(tok);
        if (w == 0 || std::labs(w) >= n)
            throw LetterOutOfRange("letter " + tok + " invalid for " + std::to_string(n) +
                                   " strands");
        b.letters.push_back(static_cast<int>(w));
    }
    return b;
}

std::string braid_to_string(const BraidWord& b) {
    std::ostringstream os;
    os << b.strands << ":";
    for (int w : b.letters) os << " " << w;
    return os.str();
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images.size(), false);
    for (size_t i = 0; i < images.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int j = static_cast<int>(i);
        while (!seen[j]) {
            seen[j] = true;
            cyc.push_back(j);
            j = images[j];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

Permutation braid_permutation(const BraidWord& b) {
    validate_braid(b);
    Permutation p = Permutation::identity(b.strands);
    // Letters compose in word order: the word's first transposition acts
    // outermost, so appending a letter permutes the arguments of p.
    for (int w : b.letters) {
        int i = std::abs(w) - 1;
        std::swap(p.images[i], p.images[i + 1]);
    }
    return p;
}

ClosureComponents closure_components(const BraidWord& b) {
    auto cycles = braid_permutation(b).cycles();
    ClosureComponents cc;
    cc.count = static_cast<int>(cycles.size());
    cc.label.resize(b.strands, -1);
    for (size_t c = 0; c < cycles.size(); ++c)
        for (int s : cycles[c]) cc.label[s] = static_cast<int>(c);
    return cc;
}

BraidWord conjugate(const BraidWord& b, int g) {
    validate_braid(b);
    if (g == 0 || std::abs(g) >= b.strands)
        throw LetterOutOfRange("conjugating letter " + std::to_string(g) + " invalid for " +
                               std::to_string(b.strands) + " strands");
    BraidWord out;
    out.strands = b.strands;
    out.letters.reserve(b.letters.size() + 2);
    out.letters.push_back(g);
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    out.letters.push_back(-g);
    return out;
}

BraidWord stabilize(const BraidWord& b, int sign) {
    validate_braid(b);
    if (sign != 1 && sign != -1) throw DomainError("stabilization sign must be +1 or -1");
    BraidWord out;
    out.strands = b.strands + 1;
    out.letters = b.letters;
    out.letters.push_back(sign * b.strands);
    return out;
}

} // namespace swlink
