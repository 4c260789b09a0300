#include "gtklr/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gtklr {

DimensionVector DimensionVector::gl(int n) {
    if (n < 1) throw domain_error("gl: rank must be >= 1");
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return DimensionVector(std::move(v));
}

long long DimensionVector::total() const {
    long long s = 0;
    for (int x : v) s += x;
    return s;
}

void DimensionVector::validate() const {
    if (v.empty()) throw domain_error("dimension vector must have rank >= 1");
    for (int x : v)
        if (x < 0) throw domain_error("dimension vector entries must be >= 0");
}

DimensionVector content_of(const Word& w, int n) {
    check_letters(w, n);
    std::vector<int> c(static_cast<size_t>(n), 0);
    for (unsigned char x : w) ++c[x - 1];
    return DimensionVector(std::move(c));
}

void check_letters(const Word& w, int n) {
    if (n < 1) throw domain_error("rank must be >= 1");
    for (unsigned char x : w)
        if (x < 1 || x > n) throw domain_error("letter out of range [1,n]");
}

std::vector<Word> gl_lyndon(int n) {
    if (n < 1) throw domain_error("gl_lyndon: rank must be >= 1");
    std::vector<Word> out;
    for (int k = 1; k <= n - 1; ++k)
        for (int p = 0; p < k; ++p) {
            Word w;
            for (int x = k; x >= k - p; --x) w.push_back(static_cast<char>(x));
            out.push_back(std::move(w));
        }
    return out;
}

std::vector<Word> glprime_lyndon(int n) {
    if (n < 1) throw domain_error("glprime_lyndon: rank must be >= 1");
    std::vector<Word> out;
    for (int p = 0; p < n; ++p) {
        Word w;
        for (int x = n; x >= n - p; --x) w.push_back(static_cast<char>(x));
        out.push_back(std::move(w));
    }
    return out;
}

std::strong_ordering lyndon_compare(const Word& u, const Word& w) {
    size_t m = std::min(u.size(), w.size());
    for (size_t i = 0; i < m; ++i) {
        if (u[i] != w[i])
            return static_cast<unsigned char>(u[i]) < static_cast<unsigned char>(w[i])
                       ? std::strong_ordering::less
                       : std::strong_ordering::greater;
    }
    // proper prefix: the longer word is smaller
    if (u.size() == w.size()) return std::strong_ordering::equal;
    return u.size() > w.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

Word RedGoodFactorization::concatenated() const {
    Word w;
    for (const auto& a : a_list) w += a;
    for (const auto& b : b_list) w += b;
    return w;
}

namespace {

// Splits the all-red-suffix part: every segment must be a run descending by
// one from n, starting at each occurrence of n.  Forced, so no search.
std::optional<std::vector<Word>> split_b_part(const Word& s, int n) {
    std::vector<Word> out;
    size_t i = 0;
    while (i < s.size()) {
        if (static_cast<unsigned char>(s[i]) != n) return std::nullopt;
        size_t j = i + 1;
        while (j < s.size() && static_cast<unsigned char>(s[j]) != n) ++j;
        // segment [i, j) must be n, n-1, n-2, ...
        for (size_t t = i; t < j; ++t)
            if (static_cast<unsigned char>(s[t]) != n - static_cast<int>(t - i))
                return std::nullopt;
        out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// Counts factorizations of the black prefix into weakly increasing GL words
// and records the unique split when there is exactly one.
struct APartSearch {
    const Word& s;
    size_t count = 0;
    std::vector<size_t> best;  // factor lengths of the first factorization found

    std::vector<size_t> cur;

    void run(size_t i, const Word* last) {
        if (count > 1) return;
        if (i == s.size()) {
            ++count;
            if (count == 1) best = cur;
            return;
        }
        // candidate factors: descending-by-one runs starting at i
        Word f;
        for (size_t j = i; j < s.size(); ++j) {
            unsigned char x = static_cast<unsigned char>(s[j]);
            if (j > i && x != static_cast<unsigned char>(s[j - 1]) - 1) break;
            if (j > i && x < 1) break;
            f.push_back(static_cast<char>(x));
            if (last && lyndon_compare(*last, f) == std::strong_ordering::greater) continue;
            cur.push_back(f.size());
            Word keep = f;
            run(j + 1, &keep);
            cur.pop_back();
            if (count > 1) return;
        }
    }
};

}  // namespace

std::optional<RedGoodFactorization> factorize_red_good(const Word& word, int n) {
    check_letters(word, n);
    size_t first_red = word.find(static_cast<char>(n));
    Word prefix = first_red == Word::npos ? word : word.substr(0, first_red);
    Word suffix = first_red == Word::npos ? Word() : word.substr(first_red);

    auto b = split_b_part(suffix, n);
    if (!b) return std::nullopt;

    APartSearch search{prefix};
    search.run(0, nullptr);
    if (search.count == 0) return std::nullopt;
    if (search.count > 1)
        throw structural_error("factorize_red_good: factorization is not unique");

    RedGoodFactorization fact;
    size_t pos = 0;
    for (size_t len : search.best) {
        fact.a_list.push_back(prefix.substr(pos, len));
        pos += len;
    }
    fact.b_list = std::move(*b);
    for (const auto& a : fact.a_list) ++fact.multiplicities[a];
    return fact;
}

namespace {

// Letter consumption of one word against a running budget; all-or-nothing.
// GL and GL' words never repeat a letter, so a single availability pass is
// exact.
bool consume(std::vector<int>& budget, const Word& w) {
    for (unsigned char x : w)
        if (budget[x - 1] == 0) return false;
    for (unsigned char x : w) --budget[x - 1];
    return true;
}

void restore(std::vector<int>& budget, const Word& w) {
    for (unsigned char x : w) ++budget[x - 1];
}

}  // namespace

std::vector<Word> enumerate_red_good(const DimensionVector& v) {
    v.validate();
    const int n = v.n();
    std::vector<Word> gls = gl_lyndon(n);
    std::sort(gls.begin(), gls.end(), [](const Word& a, const Word& b) {
        return lyndon_compare(a, b) == std::strong_ordering::less;
    });
    std::vector<Word> glp = glprime_lyndon(n);
    const int red_slots = v.v[static_cast<size_t>(n) - 1];

    std::set<Word> out;
    std::vector<int> budget = v.v;
    Word acc;

    // b-part: an ordered tuple of red_slots GL' words
    auto rec_b = [&](auto&& self, int slot) -> void {
        if (slot == red_slots) {
            for (int x : budget)
                if (x != 0) return;
            out.insert(acc);
            return;
        }
        for (const Word& b : glp) {
            // each GL' word consumes exactly one n, already reserved below
            Word black = b.substr(1);
            if (!consume(budget, black)) continue;
            acc += b;
            self(self, slot + 1);
            acc.resize(acc.size() - b.size());
            restore(budget, black);
        }
    };

    // a-part: a weakly increasing multiset of GL words
    auto rec_a = [&](auto&& self, size_t idx) -> void {
        if (idx == gls.size()) {
            // all remaining blacks must be covered by the b-part
            rec_b(rec_b, 0);
            return;
        }
        size_t taken = 0;
        while (true) {
            self(self, idx + 1);
            if (!consume(budget, gls[idx])) break;
            acc += gls[idx];
            ++taken;
        }
        for (size_t t = 0; t < taken; ++t) {
            acc.resize(acc.size() - gls[idx].size());
            restore(budget, gls[idx]);
        }
    };

    if (red_slots > 0) budget[static_cast<size_t>(n) - 1] -= red_slots;
    rec_a(rec_a, 0);

    std::vector<Word> res(out.rbegin(), out.rend());
    return res;
}

namespace {

// Mixed-radix index over sub-contents c with 0 <= c_i <= v_i.
struct ContentIndex {
    std::vector<int> radix;
    size_t size = 1;

    explicit ContentIndex(const std::vector<int>& v) : radix(v) {
        for (int x : v) size *= static_cast<size_t>(x) + 1;
    }

    size_t index(const std::vector<int>& c) const {
        size_t idx = 0;
        for (size_t i = 0; i < radix.size(); ++i) idx = idx * (radix[i] + 1) + c[i];
        return idx;
    }
};

std::vector<int> word_content_vec(const Word& w, int n) {
    std::vector<int> c(static_cast<size_t>(n), 0);
    for (unsigned char x : w) ++c[x - 1];
    return c;
}

}  // namespace

BigInt count_red_good(const DimensionVector& v) {
    v.validate();
    const int n = v.n();
    const int red_slots = v.v[static_cast<size_t>(n) - 1];
    ContentIndex ci(v.v);

    // count_a[c] = multisets of GL words with content exactly c
    std::vector<BigInt> count_a(ci.size, 0);
    count_a[0] = 1;
    {
        // unbounded knapsack, one GL word at a time
        std::vector<int> c(static_cast<size_t>(n), 0);
        for (const Word& w : gl_lyndon(n)) {
            std::vector<int> wc = word_content_vec(w, n);
            std::fill(c.begin(), c.end(), 0);
            // iterate all contents in mixed-radix order; index(c - wc) < index(c)
            for (size_t idx = 0; idx < ci.size; ++idx) {
                bool fits = true;
                for (size_t i = 0; i < c.size(); ++i)
                    if (c[i] < wc[i]) { fits = false; break; }
                if (fits) {
                    std::vector<int> prev(c);
                    for (size_t i = 0; i < c.size(); ++i) prev[i] -= wc[i];
                    count_a[idx] += count_a[ci.index(prev)];
                }
                // increment mixed radix counter
                for (int i = n - 1; i >= 0; --i) {
                    if (c[i] < v.v[i]) { ++c[i]; break; }
                    c[i] = 0;
                }
            }
        }
    }

    // count_b[c] = ordered tuples of red_slots GL' words with content c
    std::vector<BigInt> count_b(ci.size, 0);
    count_b[0] = 1;
    std::vector<std::vector<int>> glp_contents;
    for (const Word& w : glprime_lyndon(n)) glp_contents.push_back(word_content_vec(w, n));
    for (int slot = 0; slot < red_slots; ++slot) {
        std::vector<BigInt> next(ci.size, 0);
        std::vector<int> c(static_cast<size_t>(n), 0);
        for (size_t idx = 0; idx < ci.size; ++idx) {
            if (count_b[idx] != 0) {
                for (const auto& wc : glp_contents) {
                    bool fits = true;
                    std::vector<int> tgt(c);
                    for (size_t i = 0; i < c.size(); ++i) {
                        tgt[i] += wc[i];
                        if (tgt[i] > v.v[i]) { fits = false; break; }
                    }
                    if (fits) next[ci.index(tgt)] += count_b[idx];
                }
            }
            for (int i = n - 1; i >= 0; --i) {
                if (c[i] < v.v[i]) { ++c[i]; break; }
                c[i] = 0;
            }
        }
        count_b = std::move(next);
    }

    // stitch: sum over c of count_a[c] * count_b[v - c]
    BigInt total = 0;
    std::vector<int> c(static_cast<size_t>(n), 0);
    for (size_t idx = 0; idx < ci.size; ++idx) {
        if (count_a[idx] != 0) {
            std::vector<int> rest(c);
            for (size_t i = 0; i < c.size(); ++i) rest[i] = v.v[i] - c[i];
            total += count_a[idx] * count_b[ci.index(rest)];
        }
        for (int i = n - 1; i >= 0; --i) {
            if (c[i] < v.v[i]) { ++c[i]; break; }
            c[i] = 0;
        }
    }
    return total;
}

std::vector<Word> enumerate_words(const DimensionVector& v) {
    v.validate();
    std::vector<Word> out;
    Word cur;
    std::vector<int> budget = v.v;
    const long long total = v.total();
    auto rec = [&](auto&& self) -> void {
        if (static_cast<long long>(cur.size()) == total) {
            out.push_back(cur);
            return;
        }
        for (int x = v.n(); x >= 1; --x) {
            if (budget[x - 1] > 0) {
                --budget[x - 1];
                cur.push_back(static_cast<char>(x));
                self(self);
                cur.pop_back();
                ++budget[x - 1];
            }
        }
    };
    rec(rec);
    return out;
}

BigInt count_words(const DimensionVector& v) {
    v.validate();
    BigInt r = 1;
    long long k = 0;
    for (int x : v.v)
        for (int i = 1; i <= x; ++i) {
            r *= ++k;
            r /= i;
        }
    return r;
}

int gk_dimension(const Word& word, int n) {
    check_letters(word, n);
    size_t first = word.find(static_cast<char>(n));
    if (first == Word::npos) return static_cast<int>(word.size());
    size_t last = word.rfind(static_cast<char>(n));
    return static_cast<int>(first + (word.size() - 1 - last));
}

// The Futorny-Ovsienko bound is attained exactly when the half-twist on
// each black letter's strands crosses nothing of adjacent label, i.e. no
// letter i-1 or i+1 sits strictly inside the span of a black letter i.
// Red strands carry no half-twist, so black letters inside the red span
// are harmless; this is weaker than forbidding every interleaving of i
// with i+1 when i+1 = n.
bool is_essential(const Word& word, int n) {
    check_letters(word, n);
    for (int i = 1; i <= n - 1; ++i) {
        size_t first = word.find(static_cast<char>(i));
        if (first == Word::npos) continue;
        size_t last = word.rfind(static_cast<char>(i));
        for (size_t p = first + 1; p < last; ++p) {
            int x = static_cast<unsigned char>(word[p]);
            if (x - i == 1 || i - x == 1) return false;
        }
    }
    return true;
}

bool essentially_same(const Word& w1, const Word& w2, int n) {
    if (!is_essential(w1, n) || !is_essential(w2, n))
        throw domain_error("essentially_same: inputs must be essential");
    if (!(content_of(w1, n) == content_of(w2, n)))
        throw domain_error("essentially_same: inputs must have equal content");
    // The straight-line diagram between the idempotents has degree 0 iff no
    // adjacent labels cross, i.e. the {i, i+1}-subsequences agree.
    for (int i = 1; i < n; ++i) {
        auto sub = [&](const Word& w) {
            Word s;
            for (unsigned char x : w)
                if (x == i || x == i + 1) s.push_back(static_cast<char>(x));
            return s;
        };
        if (sub(w1) != sub(w2)) return false;
    }
    return true;
}

bool iws_predicate(const Word& word, int n) {
    check_letters(word, n);
    if (n != 3 && n != 4)
        throw domain_error("iws_predicate: criterion only known for rank 3 and 4");
    auto begins_ends = [&](const Word& t) {
        return word.size() >= t.size() && word.compare(0, t.size(), t) == 0 &&
               word.compare(word.size() - t.size(), t.size(), t) == 0;
    };
    if (n == 3) return begins_ends(make_word({2}));
    for (const Word& t :
         {make_word({2}), make_word({3}), make_word({2, 3}), make_word({3, 2})})
        if (begins_ends(t)) return true;
    return false;
}

long long run_divisor(const Word& word, int n) {
    check_letters(word, n);
    long long r = 1;
    size_t i = 0;
    while (i < word.size()) {
        size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        if (static_cast<unsigned char>(word[i]) != n)
            for (size_t len = 2; len <= j - i; ++len) r *= static_cast<long long>(len);
        i = j;
    }
    return r;
}

bool is_realizable_singular(const Word& word, int n, const SingularComposition& comp) {
    check_letters(word, n);
    std::vector<size_t> reds;
    for (size_t p = 0; p < word.size(); ++p)
        if (static_cast<unsigned char>(word[p]) == n) reds.push_back(p);
    long long sum = 0;
    for (int part : comp) {
        if (part < 1) throw domain_error("singular composition parts must be >= 1");
        sum += part;
    }
    if (sum != static_cast<long long>(reds.size()))
        throw domain_error("singular composition must sum to the number of n's");
    size_t pos = 0;
    for (int part : comp) {
        for (int k = 1; k < part; ++k) {
            // consecutive n's in one group must be adjacent in the word
            if (reds[pos + k] != reds[pos + k - 1] + 1) return false;
        }
        pos += static_cast<size_t>(part);
    }
    return true;
}

}  // namespace gtklr
