#include "gtklr/canonical.hpp"

#include <algorithm>
#include <queue>

namespace gtklr {

std::vector<Word> move_neighbors(const Word& word, int n) {
    check_letters(word, n);
    std::set<Word> out;
    const size_t len = word.size();
    auto u = [&](size_t i) { return static_cast<unsigned char>(word[i]); };

    for (size_t i = 0; i + 1 < len; ++i) {
        int x = u(i), y = u(i + 1);
        if (x - y >= 2 || y - x >= 2) {
            Word w = word;
            std::swap(w[i], w[i + 1]);
            out.insert(std::move(w));
        }
    }
    for (size_t i = 0; i + 2 < len; ++i) {
        int a = u(i), b = u(i + 1), c = u(i + 2);
        // (r, r-1, r) <-> (r, r, r-1), 2 <= r <= n-1
        if (a == c && b == a - 1 && a >= 2 && a <= n - 1) {
            Word w = word;
            w[i + 1] = static_cast<char>(a);
            w[i + 2] = static_cast<char>(a - 1);
            out.insert(std::move(w));
        }
        if (a == b && c == a - 1 && a >= 2 && a <= n - 1) {
            Word w = word;
            w[i + 1] = static_cast<char>(a - 1);
            w[i + 2] = static_cast<char>(a);
            out.insert(std::move(w));
        }
        // (r, r+1, r) <-> (r+1, r, r), 1 <= r <= n-1
        if (a == c && b == a + 1 && a >= 1 && a + 1 <= n) {
            Word w = word;
            w[i] = static_cast<char>(a + 1);
            w[i + 1] = static_cast<char>(a);
            out.insert(std::move(w));
        }
        if (b == c && a == b + 1 && b >= 1 && b + 1 <= n) {
            Word w = word;
            w[i] = static_cast<char>(b);
            w[i + 1] = static_cast<char>(b + 1);
            out.insert(std::move(w));
        }
    }
    return std::vector<Word>(out.begin(), out.end());
}

std::set<Word> canonical_class(const Word& word, int n, size_t cap) {
    check_letters(word, n);
    std::set<Word> seen{word};
    std::queue<Word> frontier;
    frontier.push(word);
    while (!frontier.empty()) {
        Word cur = std::move(frontier.front());
        frontier.pop();
        for (Word& nb : move_neighbors(cur, n)) {
            if (seen.insert(nb).second) {
                if (seen.size() > cap)
                    throw resource_error("canonical_class: class size exceeds cap");
                frontier.push(std::move(nb));
            }
        }
    }
    return seen;
}

Word canonical_form(const Word& word, int n, size_t cap) {
    check_letters(word, n);
    // Greedy descent: any red-good word reached is the answer, because each
    // class holds exactly one.
    Word cur = word;
    while (true) {
        if (is_red_good(cur, n)) return cur;
        const Word* best = nullptr;
        std::vector<Word> nbs = move_neighbors(cur, n);
        for (const Word& nb : nbs)
            if (nb < cur && (!best || nb < *best)) best = &nb;
        if (!best) break;
        cur = *best;
    }
    // Stuck at a non-red-good local minimum; sweep the class smallest-first.
    std::priority_queue<Word, std::vector<Word>, std::greater<Word>> pq;
    std::set<Word> seen{cur};
    pq.push(cur);
    while (!pq.empty()) {
        Word t = pq.top();
        pq.pop();
        if (is_red_good(t, n)) return t;
        for (Word& nb : move_neighbors(t, n)) {
            if (seen.insert(nb).second) {
                if (seen.size() > cap)
                    throw resource_error("canonical_form: class size exceeds cap");
                pq.push(std::move(nb));
            }
        }
    }
    throw structural_error("canonical_form: move class contains no red-good word");
}

Word move1_reduce(const Word& word, int n) {
    check_letters(word, n);
    Word w = word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (static_cast<unsigned char>(w[i]) >= static_cast<unsigned char>(w[i + 1]) + 2) {
                std::swap(w[i], w[i + 1]);
                changed = true;
            }
        }
    }
    return w;
}

}  // namespace gtklr
