#pragma once

#include <set>
#include <vector>

#include "gtklr/words.hpp"

namespace gtklr {

inline constexpr size_t kDefaultClassCap = 5'000'000;

// Words one move away, either direction:
//   (1) swap adjacent letters r,s with |r-s| >= 2,
//   (2) (r, r-1, r) <-> (r, r, r-1)     for 2 <= r <= n-1,
//   (3) (r, r+1, r) <-> (r+1, r, r)     for 1 <= r <= n-1.
std::vector<Word> move_neighbors(const Word& word, int n);

// Full move-equivalence class (breadth-first closure).
std::set<Word> canonical_class(const Word& word, int n, size_t cap = kDefaultClassCap);

// The unique red-good word in the class: greedy descent toward lex-smaller
// words, with a best-first sweep of the class as fallback.
Word canonical_form(const Word& word, int n, size_t cap = kDefaultClassCap);

// Lex-least word obtainable using move (1) alone; the representative the
// published tables display for rank 4.
Word move1_reduce(const Word& word, int n);

}  // namespace gtklr
