#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "gtklr/canonical.hpp"
#include "gtklr/characters.hpp"
#include "gtklr/words.hpp"

namespace gtklr {

using Rational = boost::multiprecision::cpp_rational;

// Array a_{ij} over Omega = {(i,j) : 1 <= i <= n, 1 <= j <= v_i}.  Rows are
// kept in the order given; classification works on the dominant (sorted)
// lift internally.
struct GTPattern {
    DimensionVector v;
    std::vector<std::vector<Rational>> rows;  // rows[i-1] has v_i entries

    int n() const { return v.n(); }
    void validate() const;
    GTPattern dominant_lift() const;
    bool is_integral() const;
};

struct WeightClass {
    bool critical = false;
    Word word;  // empty when critical
};

// Sorts Omega by value; ties between rows put the larger row index first;
// a repeated value inside one row makes the weight critical.
WeightClass weight_to_word(const GTPattern& p);

// b_1 ... b_n for b_k = (n, n-1, ..., sigma(k)); sigma is 1-based.
Word verma_word(const std::vector<int>& sigma, int n);

// NW-SE inequalities a_{ij} >= a_{i+1,j} with row n pinned to `top`
// entrywise (in the given column order).  gl_n shape only.
bool is_semi_pattern(const GTPattern& p, const std::vector<Rational>& top);

// Enumerates integral semi-patterns with row n = chi_{sigma^{-1}(j)} and
// free entries within [min(chi)-bound, max(chi)+bound]; returns the words
// of the non-critical ones.
std::set<Word> semi_pattern_support(const std::vector<int>& sigma,
                                    const std::vector<long long>& chi, int bound);

struct BlockSpec {
    DimensionVector v;
    std::optional<SingularComposition> singular;
    std::vector<DimensionVector> cosets;  // non-integral product blocks
};

struct BlockTable {
    DimensionVector v;
    std::vector<Word> row_words;             // decreasing lex, realizable only
    std::vector<Word> columns;               // good words, decreasing lex
    std::vector<size_t> column_slots;        // 1-based slot in the regular block
    std::vector<std::vector<long long>> entries;  // q = 1 values, rows x columns
    std::vector<std::vector<Laurent>> graded;     // filled only in graded mode
    std::vector<int> boxes;                  // per row: column index of the canonical module
    std::vector<int> gk;                     // per column
    std::optional<std::vector<bool>> iws;    // per column, rank 3 and 4 only

    bool is_graded() const { return !graded.empty(); }
};

struct TableOptions {
    bool graded = false;
    int strand_limit = 12;
    int threads = 1;
    size_t class_cap = kDefaultClassCap;
    std::function<void(size_t, size_t)> progress;
};

BlockTable block_table(const BlockSpec& spec, const TableOptions& opts = {});
BlockTable block_table(const BlockData& block, const std::optional<SingularComposition>& singular,
                       const TableOptions& opts = {});

struct SimpleMetadata {
    int gk = 0;
    std::optional<bool> iws;
    std::vector<Word> essential_support;
};

SimpleMetadata simple_metadata(const SimpleRecord& record, int n);

// Product of the q=1 coefficients of word_i in ch(L(good_i)) over the
// cosets of a non-integral product block.
BigInt product_multiplicity(const std::vector<DimensionVector>& cosets,
                            const std::vector<Word>& words, const std::vector<Word>& goods,
                            const BlockOptions& opts = {});

}  // namespace gtklr
