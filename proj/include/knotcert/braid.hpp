#pragma once

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotcert {

/// Raised on malformed or out-of-contract user input.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant breaks; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct BraidLetter {
    int index;  // generator index, 1 <= index <= strands-1
    int sign;   // +1 or -1
};

/// A word in the braid group B_n.  Text form: "n: i1 i2 ...", with negative
/// entries for inverse generators, e.g. "2: 1 1 1" for the right trefoil.
struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;

    /// Permutation of {0..n-1} induced by the word: strand entering at top
    /// position p leaves at bottom position perm[p]; the closure ties bottom
    /// position q back to top position q.
    std::vector<int> permutation() const {
        std::vector<int> cur(static_cast<std::size_t>(strands));
        std::iota(cur.begin(), cur.end(), 0);  // cur[pos] = strand now at pos
        for (const auto& l : letters)
            std::swap(cur[static_cast<std::size_t>(l.index - 1)], cur[static_cast<std::size_t>(l.index)]);
        std::vector<int> perm(static_cast<std::size_t>(strands));
        for (int p = 0; p < strands; ++p) perm[static_cast<std::size_t>(cur[static_cast<std::size_t>(p)])] = p;
        return perm;
    }

    /// The closure is a knot iff the permutation is a single n-cycle.
    bool closes_to_knot() const {
        auto perm = permutation();
        int count = 0;
        std::vector<bool> seen(perm.size(), false);
        for (std::size_t s = 0; s < perm.size(); ++s) {
            if (seen[s]) continue;
            ++count;
            std::size_t c = s;
            while (!seen[c]) {
                seen[c] = true;
                c = static_cast<std::size_t>(perm[c]);
            }
        }
        return count == 1;
    }

    int component_count() const {
        auto perm = permutation();
        int count = 0;
        std::vector<bool> seen(perm.size(), false);
        for (std::size_t s = 0; s < perm.size(); ++s) {
            if (seen[s]) continue;
            ++count;
            std::size_t c = s;
            while (!seen[c]) {
                seen[c] = true;
                c = static_cast<std::size_t>(perm[c]);
            }
        }
        return count;
    }

    bool all_positive() const {
        for (const auto& l : letters)
            if (l.sign < 0) return false;
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        os << strands << ":";
        for (const auto& l : letters) os << " " << l.sign * l.index;
        return os.str();
    }
};

/// Parse "n: i1 i2 ..." and validate that the closure is a knot.
inline BraidWord parse_braid(const std::string& text) {
    std::istringstream is(text);
    std::string head;
    if (!(is >> head)) throw input_error("empty braid text");
    if (head.back() != ':') throw input_error("braid text must start with 'n:' strand count");
    BraidWord b;
    try {
        std::size_t used = 0;
        b.strands = std::stoi(head.substr(0, head.size() - 1), &used);
        if (used != head.size() - 1) throw input_error("malformed strand count '" + head + "'");
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("malformed strand count '" + head + "'");
    }
    if (b.strands < 1) throw input_error("strand count must be >= 1");
    std::string tok;
    while (is >> tok) {
        long v = 0;
        try {
            std::size_t used = 0;
            v = std::stol(tok, &used);
            if (used != tok.size()) throw input_error("malformed braid letter '" + tok + "'");
        } catch (const input_error&) {
            throw;
        } catch (const std::exception&) {
            throw input_error("malformed braid letter '" + tok + "'");
        }
        if (v == 0) throw input_error("braid letter 0 is not a generator");
        long idx = std::labs(v);
        if (idx > b.strands - 1) {
            std::ostringstream os;
            os << "generator index " << idx << " out of range for " << b.strands << " strands";
            throw input_error(os.str());
        }
        b.letters.push_back({static_cast<int>(idx), v > 0 ? 1 : -1});
    }
    if (!b.closes_to_knot()) {
        std::ostringstream os;
        os << "braid closure has " << b.component_count() << " components; a knot is required";
        throw input_error(os.str());
    }
    return b;
}

}  // namespace knotcert
