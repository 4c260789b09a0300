#include "gtklr/gtmod.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace gtklr {

void GTPattern::validate() const {
    v.validate();
    if (rows.size() != static_cast<size_t>(v.n()))
        throw domain_error("pattern: row count must equal the rank");
    for (int i = 1; i <= v.n(); ++i)
        if (rows[i - 1].size() != static_cast<size_t>(v.v[i - 1]))
            throw domain_error("pattern: row length mismatch");
}

GTPattern GTPattern::dominant_lift() const {
    GTPattern p = *this;
    for (auto& row : p.rows) std::sort(row.begin(), row.end());
    return p;
}

bool GTPattern::is_integral() const {
    for (const auto& row : rows)
        for (const auto& x : row)
            if (boost::multiprecision::denominator(x) != 1) return false;
    return true;
}

WeightClass weight_to_word(const GTPattern& p) {
    p.validate();
    GTPattern lift = p.dominant_lift();
    for (const auto& row : lift.rows)
        for (size_t j = 0; j + 1 < row.size(); ++j)
            if (row[j] == row[j + 1]) return {true, {}};
    // (value asc, row desc): equal values in different rows put the larger
    // row first
    std::vector<std::pair<Rational, int>> cells;
    for (int i = 1; i <= lift.n(); ++i)
        for (const auto& x : lift.rows[i - 1]) cells.emplace_back(x, i);
    std::stable_sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    });
    Word w;
    for (const auto& [x, i] : cells) {
        (void)x;
        w.push_back(static_cast<char>(i));
    }
    return {false, std::move(w)};
}

Word verma_word(const std::vector<int>& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n)
        throw domain_error("verma_word: sigma must have length n");
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int x : sigma) {
        if (x < 1 || x > n || seen[static_cast<size_t>(x)])
            throw domain_error("verma_word: sigma is not a permutation of [1,n]");
        seen[static_cast<size_t>(x)] = true;
    }
    Word w;
    for (int k = 0; k < n; ++k)
        for (int x = n; x >= sigma[static_cast<size_t>(k)]; --x)
            w.push_back(static_cast<char>(x));
    return w;
}

bool is_semi_pattern(const GTPattern& p, const std::vector<Rational>& top) {
    p.validate();
    const int n = p.n();
    for (int i = 1; i <= n; ++i)
        if (p.v.v[i - 1] != i) throw domain_error("is_semi_pattern: gl_n shape required");
    if (top.size() != static_cast<size_t>(n))
        throw domain_error("is_semi_pattern: top row length mismatch");
    for (int j = 0; j < n; ++j)
        if (p.rows[static_cast<size_t>(n) - 1][static_cast<size_t>(j)] != top[static_cast<size_t>(j)])
            return false;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (p.rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j)] <
                p.rows[static_cast<size_t>(i)][static_cast<size_t>(j)])
                return false;
    return true;
}

std::set<Word> semi_pattern_support(const std::vector<int>& sigma,
                                    const std::vector<long long>& chi, int bound) {
    const int n = static_cast<int>(sigma.size());
    if (bound < 0) throw domain_error("semi_pattern_support: bound must be >= 0");
    Word check = verma_word(sigma, n);  // validates sigma
    (void)check;
    std::vector<int> inv(static_cast<size_t>(n) + 1, 0);
    for (int k = 0; k < n; ++k) inv[static_cast<size_t>(sigma[static_cast<size_t>(k)])] = k + 1;

    long long lo = *std::min_element(chi.begin(), chi.end()) - bound;
    long long hi = *std::max_element(chi.begin(), chi.end()) + bound;

    GTPattern p;
    p.v = DimensionVector::gl(n);
    p.rows.assign(static_cast<size_t>(n), {});
    for (int i = 1; i <= n; ++i) p.rows[static_cast<size_t>(i) - 1].assign(static_cast<size_t>(i), 0);
    for (int j = 1; j <= n; ++j)
        p.rows[static_cast<size_t>(n) - 1][static_cast<size_t>(j) - 1] =
            chi[static_cast<size_t>(inv[static_cast<size_t>(j)]) - 1];

    std::set<Word> words;
    // free cells row n-1 down to row 1, each >= the cell below it
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == 0) {
            WeightClass wc = weight_to_word(p);
            if (!wc.critical) words.insert(wc.word);
            return;
        }
        if (j > i) {
            self(self, i - 1, 1);
            return;
        }
        const Rational& below = p.rows[static_cast<size_t>(i)][static_cast<size_t>(j) - 1];
        for (long long val = lo; val <= hi; ++val) {
            if (Rational(val) < below) continue;
            p.rows[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1] = val;
            self(self, i, j + 1);
        }
    };
    rec(rec, n - 1, 1);
    return words;
}

BlockTable block_table(const BlockData& block, const std::optional<SingularComposition>& singular,
                       const TableOptions& opts) {
    const DimensionVector& v = block.v;
    const int n = v.n();

    BlockTable table;
    table.v = v;

    std::vector<Word> all_rows = enumerate_words(v);
    for (Word& w : all_rows)
        if (!singular || is_realizable_singular(w, n, *singular))
            table.row_words.push_back(std::move(w));

    // keep every column with a nonzero surviving entry, in block order
    std::vector<size_t> kept;
    for (size_t c = 0; c < block.simples.size(); ++c) {
        if (!singular) {
            kept.push_back(c);
            continue;
        }
        const Character& ch = block.simples[c].character;
        bool alive = false;
        for (const Word& w : table.row_words)
            if (ch.count(w)) {
                alive = true;
                break;
            }
        if (alive) kept.push_back(c);
    }
    for (size_t c : kept) {
        table.columns.push_back(block.simples[c].good_word);
        table.column_slots.push_back(c + 1);
    }

    table.entries.assign(table.row_words.size(),
                         std::vector<long long>(table.columns.size(), 0));
    if (opts.graded)
        table.graded.assign(table.row_words.size(), std::vector<Laurent>(table.columns.size()));

    std::map<Word, size_t> row_index;
    for (size_t r = 0; r < table.row_words.size(); ++r) row_index[table.row_words[r]] = r;

    for (size_t ci = 0; ci < kept.size(); ++ci) {
        const Character& ch = block.simples[kept[ci]].character;
        for (const auto& [w, poly] : ch) {
            auto it = row_index.find(w);
            if (it == row_index.end()) continue;
            table.entries[it->second][ci] = static_cast<long long>(poly.eval_at_one());
            if (opts.graded) table.graded[it->second][ci] = poly;
        }
    }

    // canonical module of each row; rows are independent, so chunk them
    // over the worker threads
    std::map<Word, size_t> col_index;
    for (size_t ci = 0; ci < table.columns.size(); ++ci) col_index[table.columns[ci]] = ci;
    table.boxes.assign(table.row_words.size(), -1);
    auto box_range = [&](size_t lo, size_t hi) {
        for (size_t r = lo; r < hi; ++r) {
            Word good = canonical_form(table.row_words[r], n, opts.class_cap);
            auto it = col_index.find(good);
            if (it == col_index.end())
                throw structural_error("block_table: canonical module column is missing");
            table.boxes[r] = static_cast<int>(it->second);
            if (table.entries[r][it->second] == 0)
                throw structural_error("block_table: boxed entry is zero");
        }
    };
    const size_t nrows = table.row_words.size();
    const size_t nthreads =
        std::min<size_t>(std::max(opts.threads, 1), std::max<size_t>(nrows, 1));
    if (nthreads <= 1 || nrows < 64) {
        box_range(0, nrows);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nthreads);
        for (size_t t = 0; t < nthreads; ++t) {
            size_t lo = nrows * t / nthreads, hi = nrows * (t + 1) / nthreads;
            pool.emplace_back([&, t, lo, hi] {
                try {
                    box_range(lo, hi);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    for (size_t ci = 0; ci < kept.size(); ++ci) {
        SimpleMetadata md = simple_metadata(block.simples[kept[ci]], n);
        table.gk.push_back(md.gk);
        if (md.iws) {
            if (!table.iws) table.iws.emplace();
            table.iws->push_back(*md.iws);
        }
    }
    return table;
}

BlockTable block_table(const BlockSpec& spec, const TableOptions& opts) {
    spec.v.validate();
    if (spec.singular) {
        long long sum = 0;
        for (int part : *spec.singular) sum += part;
        if (sum != spec.v.v[static_cast<size_t>(spec.v.n()) - 1])
            throw domain_error("block_table: singular composition must sum to v_n");
    }
    BlockOptions bo;
    bo.strand_limit = opts.strand_limit;
    bo.progress = opts.progress;
    BlockData block = simple_characters(spec.v, bo);
    return block_table(block, spec.singular, opts);
}

SimpleMetadata simple_metadata(const SimpleRecord& record, int n) {
    SimpleMetadata md;
    for (const auto& [w, p] : record.character) {
        (void)p;
        md.gk = std::max(md.gk, gk_dimension(w, n));
        if (is_essential(w, n)) md.essential_support.push_back(w);
    }
    if (n == 3 || n == 4) {
        bool any = false;
        for (const auto& [w, p] : record.character) {
            (void)p;
            if (iws_predicate(w, n)) {
                any = true;
                break;
            }
        }
        md.iws = any;
    }
    for (size_t i = 1; i < md.essential_support.size(); ++i)
        if (!essentially_same(md.essential_support[0], md.essential_support[i], n))
            throw structural_error("simple_metadata: essential support is not essentially the same");
    return md;
}

BigInt product_multiplicity(const std::vector<DimensionVector>& cosets,
                            const std::vector<Word>& words, const std::vector<Word>& goods,
                            const BlockOptions& opts) {
    if (cosets.size() != words.size() || cosets.size() != goods.size())
        throw domain_error("product_multiplicity: one word and one good word per coset");
    if (cosets.empty()) throw domain_error("product_multiplicity: no cosets");
    BigInt result = 1;
    for (size_t i = 0; i < cosets.size(); ++i) {
        if (!(content_of(words[i], cosets[i].n()) == cosets[i]))
            throw domain_error("product_multiplicity: word content does not match its coset");
        BlockData block = simple_characters(cosets[i], opts);
        const SimpleRecord* rec = block.find(goods[i]);
        if (!rec) throw domain_error("product_multiplicity: not a good word for its coset");
        auto it = rec->character.find(words[i]);
        result *= it == rec->character.end() ? Coeff(0) : it->second.eval_at_one();
    }
    return result;
}

}  // namespace gtklr
