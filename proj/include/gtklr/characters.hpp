#pragma once

#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gtklr/laurent.hpp"
#include "gtklr/words.hpp"

namespace gtklr {

// Graded character: word -> graded dimension of the corresponding
// idempotent's image.  Keys share one content; map order is lex order.
using Character = std::map<Word, Laurent>;

// -2 for equal labels, +1 for adjacent labels, 0 otherwise.
inline int crossing_degree(int x, int y) {
    if (x == y) return -2;
    if (x - y == 1 || y - x == 1) return 1;
    return 0;
}

// One step of the restricted quantum shuffle product: interleaves `factor`
// into every word of `acc`, preserving internal orders.  The factor's red
// letter (at most one) must land after every red already present; every
// factor letter landing before an existing letter contributes its crossing
// degree to the q-power.
Character shuffle_into(const Character& acc, const Word& factor, int n);

// kappa = prod [m_r]! over GL multiplicities, shift = sum m_r(m_r-1)/2.
// GL' repeats contribute to neither.
std::pair<Laurent, int> kappa_and_shift(const RedGoodFactorization& fact);

// Character of the standard module of a red-good word: the shuffle product
// of its factorization, twisted into the self-dual grading.
Character std_character(const Word& good, const DimensionVector& v);

struct SimpleRecord {
    Word good_word;
    Character character;
    Laurent kappa;
    int shift = 0;
    std::optional<Character> standard;  // kept only on request
};

struct BlockOptions {
    int strand_limit = 12;
    bool keep_standards = false;
    std::function<void(size_t, size_t)> progress;  // (finished, total)
};

struct BlockData {
    DimensionVector v;
    std::vector<SimpleRecord> simples;  // decreasing lex order of good words
    // (standard J, simple I) -> graded multiplicity [std(J) : L(I)], J < I
    std::map<std::pair<Word, Word>, Laurent> decomposition;

    const SimpleRecord* find(const Word& good) const;
};

// Runs the peeling algorithm over the whole block: in decreasing lex order,
// subtract already-known simple characters from each standard character,
// splitting each coefficient into a bar-invariant residue plus
// kappa * (positive multiplicity).
BlockData simple_characters(const DimensionVector& v, const BlockOptions& opts = {});

}  // namespace gtklr
