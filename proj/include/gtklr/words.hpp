#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtklr/errors.hpp"

namespace gtklr {

using BigInt = boost::multiprecision::cpp_int;

// A word is a sequence of letters in [1,n], one byte per letter.  Letter n
// is the red one.  Byte-wise comparison of equal-length words is the
// standard lexicographic order used throughout.
using Word = std::string;
using Letter = unsigned char;

inline Word make_word(std::initializer_list<int> letters) {
    Word w;
    for (int x : letters) w.push_back(static_cast<char>(x));
    return w;
}

// v[i-1] = number of occurrences of letter i; rank n = v.size().
struct DimensionVector {
    std::vector<int> v;

    DimensionVector() = default;
    explicit DimensionVector(std::vector<int> counts) : v(std::move(counts)) { validate(); }

    // v = (1, 2, ..., n), the gl_n case
    static DimensionVector gl(int n);

    int n() const { return static_cast<int>(v.size()); }
    long long total() const;
    void validate() const;

    bool operator==(const DimensionVector& o) const { return v == o.v; }
};

// Multiset of letters of a word, as a DimensionVector of the given rank.
DimensionVector content_of(const Word& w, int n);

void check_letters(const Word& w, int n);

// Good Lyndon words (k, k-1, ..., k-p) with k <= n-1, 0 <= p < k,
// ordered by first letter, then length.
std::vector<Word> gl_lyndon(int n);

// The red ones: (n, n-1, ..., n-p) for 0 <= p < n.
std::vector<Word> glprime_lyndon(int n);

// Lexicographic comparison where running off the end counts as larger than
// any letter, so a proper prefix is *greater* than the longer word.
std::strong_ordering lyndon_compare(const Word& u, const Word& w);

struct RedGoodFactorization {
    std::vector<Word> a_list;               // GL words, weakly increasing
    std::vector<Word> b_list;               // GL' words, in word order
    std::map<Word, int> multiplicities;     // GL word -> m_r

    Word concatenated() const;
};

// Splits a word as a_1...a_p b_1...b_{v_n} per the red-good criterion, or
// nullopt if no such factorization exists.  When one exists it is unique;
// the search asserts this.
std::optional<RedGoodFactorization> factorize_red_good(const Word& word, int n);

inline bool is_red_good(const Word& word, int n) {
    return factorize_red_good(word, n).has_value();
}

// All red-good words of the given content, decreasing lex order.
std::vector<Word> enumerate_red_good(const DimensionVector& v);

// |enumerate_red_good(v)| by dynamic programming, no enumeration.
BigInt count_red_good(const DimensionVector& v);

// All words of the given content, decreasing lex order.
std::vector<Word> enumerate_words(const DimensionVector& v);

BigInt count_words(const DimensionVector& v);

// Letters strictly before the first n plus letters strictly after the last
// n; the whole length if no n occurs.
int gk_dimension(const Word& word, int n);

// No letter of adjacent label sits strictly inside the span of any black
// letter's occurrences; exactly the words whose weight spaces attain the
// Futorny-Ovsienko bound in one simple.
bool is_essential(const Word& word, int n);

// Two essential words of one content share their simple module iff their
// {i, i+1}-subsequences agree for every i.
bool essentially_same(const Word& w1, const Word& w2, int n);

// Infinite h-weight-space criterion; only known for n = 3 and 4.
bool iws_predicate(const Word& word, int n);

// Product of (run length)! over maximal runs of equal letters < n.
long long run_divisor(const Word& word, int n);

// Group sizes of equal longitudes among the n's, in word order.
using SingularComposition = std::vector<int>;

// True iff no letter < n sits strictly between two n's of the same group.
bool is_realizable_singular(const Word& word, int n, const SingularComposition& comp);

}  // namespace gtklr
