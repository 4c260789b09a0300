#include "gtklr/characters.hpp"

#include <algorithm>
#include <set>

namespace gtklr {

namespace {

// Shuffles one (word, poly) pair against `factor` into `out`.
struct ShuffleState {
    const Word& w;
    const Word& f;
    const Laurent& poly;
    int n;
    long long last_red;  // last index of a red letter in w, -1 if none
    // sufdeg[x][i] = sum of crossing_degree(w[j], x) over j >= i
    std::vector<std::vector<int>> sufdeg;
    Word buf;
    Character& out;

    ShuffleState(const Word& w_, const Word& f_, const Laurent& p_, int n_, Character& out_)
        : w(w_), f(f_), poly(p_), n(n_), last_red(-1), out(out_) {
        for (size_t i = 0; i < w.size(); ++i)
            if (static_cast<unsigned char>(w[i]) == n) last_red = static_cast<long long>(i);
        sufdeg.assign(static_cast<size_t>(n) + 1, {});
        for (unsigned char x : f) {
            auto& col = sufdeg[x];
            if (!col.empty()) continue;
            col.assign(w.size() + 1, 0);
            for (size_t i = w.size(); i-- > 0;)
                col[i] = col[i + 1] + crossing_degree(static_cast<unsigned char>(w[i]), x);
        }
        buf.reserve(w.size() + f.size());
    }

    void run(size_t i, size_t j, int deg) {
        if (j == f.size()) {
            size_t keep = buf.size();
            buf.append(w, i, Word::npos);
            out[buf].add_scaled_shifted(poly, 1, deg);
            buf.resize(keep);
            return;
        }
        if (i < w.size()) {
            buf.push_back(w[i]);
            run(i + 1, j, deg);
            buf.pop_back();
        }
        unsigned char x = static_cast<unsigned char>(f[j]);
        if (x == n && static_cast<long long>(i) <= last_red) return;  // red-red crossing
        buf.push_back(static_cast<char>(x));
        run(i, j + 1, deg + sufdeg[x][i]);
        buf.pop_back();
    }
};

}  // namespace

Character shuffle_into(const Character& acc, const Word& factor, int n) {
    check_letters(factor, n);
    if (std::count(factor.begin(), factor.end(), static_cast<char>(n)) > 1)
        throw domain_error("shuffle_into: factor may contain at most one red letter");
    if (acc.empty()) throw domain_error("shuffle_into: empty accumulator");
    Character out;
    for (const auto& [w, p] : acc) {
        ShuffleState st(w, factor, p, n, out);
        st.run(0, 0, 0);
    }
    return out;
}

std::pair<Laurent, int> kappa_and_shift(const RedGoodFactorization& fact) {
    Laurent kappa = Laurent::one();
    int shift = 0;
    for (const auto& [word, m] : fact.multiplicities) {
        (void)word;
        kappa *= quantum_factorial(m);
        shift += m * (m - 1) / 2;
    }
    return {std::move(kappa), shift};
}

namespace {

Character shuffle_factors(const std::vector<Word>& factors, int n) {
    if (factors.empty()) return Character{{Word(), Laurent::one()}};
    Character acc{{factors[0], Laurent::one()}};
    for (size_t i = 1; i < factors.size(); ++i) acc = shuffle_into(acc, factors[i], n);
    return acc;
}

void apply_grading_shift(Character& ch, int shift) {
    if (shift == 0) return;
    for (auto& [w, p] : ch) p = p.shifted(shift);
}

std::vector<Word> factor_sequence(const RedGoodFactorization& fact) {
    std::vector<Word> fs = fact.a_list;
    fs.insert(fs.end(), fact.b_list.begin(), fact.b_list.end());
    return fs;
}

}  // namespace

Character std_character(const Word& good, const DimensionVector& v) {
    v.validate();
    auto fact = factorize_red_good(good, v.n());
    if (!fact || !(content_of(good, v.n()) == v))
        throw domain_error("std_character: word is not red-good for this content");
    auto [kappa, shift] = kappa_and_shift(*fact);
    Character ch = shuffle_factors(factor_sequence(*fact), v.n());
    apply_grading_shift(ch, shift);
    if (ch.at(good) != kappa)
        throw structural_error("std_character: coefficient at the good word is not kappa");
    return ch;
}

const SimpleRecord* BlockData::find(const Word& good) const {
    for (const auto& s : simples)
        if (s.good_word == good) return &s;
    return nullptr;
}

BlockData simple_characters(const DimensionVector& v, const BlockOptions& opts) {
    v.validate();
    if (v.total() > opts.strand_limit)
        throw resource_error("simple_characters: strand count exceeds the configured limit");
    const int n = v.n();

    BlockData block;
    block.v = v;
    std::vector<Word> goods = enumerate_red_good(v);
    std::set<Word> goods_set(goods.begin(), goods.end());
    std::unordered_map<Word, size_t> index;

    // Incremental shuffle cache along the shared factor-sequence prefix of
    // consecutive good words; one path of accumulators is alive at a time.
    std::vector<std::pair<Word, Character>> path;

    for (size_t k = 0; k < goods.size(); ++k) {
        const Word& good = goods[k];
        auto fact = factorize_red_good(good, n);
        if (!fact) throw structural_error("simple_characters: enumerated word not red-good");
        auto [kappa, shift] = kappa_and_shift(*fact);
        std::vector<Word> factors = factor_sequence(*fact);

        size_t common = 0;
        while (common < path.size() && common < factors.size() &&
               path[common].first == factors[common])
            ++common;
        path.resize(common);
        for (size_t i = common; i < factors.size(); ++i) {
            Character next = (i == 0) ? Character{{factors[0], Laurent::one()}}
                                      : shuffle_into(path.back().second, factors[i], n);
            path.emplace_back(factors[i], std::move(next));
        }

        Character running =
            factors.empty() ? Character{{Word(), Laurent::one()}} : path.back().second;
        apply_grading_shift(running, shift);
        if (running.at(good) != kappa)
            throw structural_error("simple_characters: standard coefficient at good word != kappa");

        std::optional<Character> standard;
        if (opts.keep_standards) standard = running;

        // Peel lex-greater good words in increasing lex order; the support
        // only shrinks, so the target list can be frozen up front.  Words
        // below `good` never occur, and `good` itself is never peeled.
        std::vector<Word> targets;
        for (auto it = std::next(running.begin()); it != running.end(); ++it)
            if (goods_set.count(it->first)) targets.push_back(it->first);

        for (const Word& t : targets) {
            auto it = running.find(t);
            if (it == running.end()) continue;
            const SimpleRecord& prior = block.simples[index.at(t)];
            auto [rho, gamma] = peel_split(it->second, prior.kappa);
            (void)rho;
            if (gamma.is_zero()) continue;
            if (gamma.min_exp() < 1 || !gamma.has_nonneg_coeffs())
                throw structural_error("simple_characters: multiplicity outside qZ_{>=0}[q]");
            for (const auto& [w2, p2] : prior.character) {
                auto slot = running.find(w2);
                if (slot == running.end())
                    throw structural_error("simple_characters: subtraction widened the support");
                slot->second -= gamma * p2;
                if (slot->second.is_zero()) running.erase(slot);
            }
            block.decomposition[{good, t}] = std::move(gamma);
        }

        if (running.begin()->first != good)
            throw structural_error("simple_characters: good word is not the lex-minimal support");
        if (running.at(good) != kappa)
            throw structural_error("simple_characters: simple coefficient at good word != kappa");
        for (const auto& [w2, p2] : running)
            if (!p2.is_bar_invariant())
                throw structural_error("simple_characters: simple character not bar-invariant");

        index[good] = block.simples.size();
        block.simples.push_back(
            {good, std::move(running), std::move(kappa), shift, std::move(standard)});
        if (opts.progress) opts.progress(k + 1, goods.size());
    }
    return block;
}

}  // namespace gtklr
