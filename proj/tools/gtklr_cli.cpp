#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "gtklr/canonical.hpp"
#include "gtklr/characters.hpp"
#include "gtklr/gtmod.hpp"
#include "gtklr/oracle.hpp"
#include "gtklr/serialize.hpp"
#include "gtklr/words.hpp"

using namespace gtklr;
using nlohmann::json;

namespace {

struct GlobalFlags {
    int threads = 0;  // 0 = auto
    int strand_limit = 12;
    unsigned long long seed = 20240601ULL;
    std::string output;
};

int resolved_threads(const GlobalFlags& g) {
    if (g.threads > 0) return g.threads;
    if (const char* env = std::getenv("GTK_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void emit(const GlobalFlags& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(g.output, std::ios::binary);
        if (!out) throw domain_error("cannot open output file: " + g.output);
        out << text;
    }
}

DimensionVector parse_dim(const std::string& s) {
    std::vector<int> v;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            v.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw domain_error("bad dimension vector entry: " + tok);
        }
    }
    return DimensionVector(std::move(v));
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> v;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            v.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw domain_error("bad integer: " + tok);
        }
    }
    return v;
}

std::vector<std::string> split_pipes(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, '|')) out.push_back(tok);
    return out;
}

struct BlockSelector {
    int gl = 0;
    std::string dim;

    DimensionVector resolve() const {
        if (gl > 0 && !dim.empty()) throw domain_error("give either --gl or --dim, not both");
        if (gl > 0) return DimensionVector::gl(gl);
        if (!dim.empty()) return parse_dim(dim);
        throw domain_error("one of --gl or --dim is required");
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--gl", gl, "rank n of gl_n, i.e. v = (1,...,n)");
        cmd->add_option("--dim", dim, "dimension vector v_1,...,v_n");
    }
};

struct CheckPrinter {
    bool quiet = false;
    bool all = true;
    json records = json::array();

    void check(const std::string& name, bool pass) {
        if (!quiet) std::cout << (pass ? "pass" : "FAIL") << "  " << name << "\n";
        records.push_back({{"name", name}, {"pass", pass}});
        all = all && pass;
    }
};

void suite_words(CheckPrinter& out) {
    for (int n = 1; n <= 4; ++n) {
        bool counts_ok = true, roundtrip_ok = true;
        std::vector<int> v(static_cast<size_t>(n));
        auto rec = [&](auto&& self, int i, int left) -> void {
            if (i == n) {
                DimensionVector dv(v);
                auto words = enumerate_red_good(dv);
                if (count_red_good(dv) != words.size()) counts_ok = false;
                for (const auto& w : words) {
                    auto f = factorize_red_good(w, n);
                    if (!f || f->concatenated() != w) roundtrip_ok = false;
                }
                return;
            }
            for (int x = 0; x <= left; ++x) {
                v[static_cast<size_t>(i)] = x;
                self(self, i + 1, left - x);
            }
        };
        rec(rec, 0, 7);
        std::ostringstream name;
        name << "rank " << n << ": count matches enumeration, factorizations round-trip";
        out.check(name.str(), counts_ok && roundtrip_ok);
    }
}

void suite_qlaurent(CheckPrinter& out, int trials, unsigned long long seed) {
    std::mt19937 rng(static_cast<unsigned>(seed));
    std::uniform_int_distribution<int> mdist(1, 4), exp(1, 5);
    std::uniform_int_distribution<long long> coeff(-6, 6), pos(0, 6);
    bool split_ok = true, div_ok = true, bar_ok = true;
    for (int t = 0; t < trials; ++t) {
        Laurent kappa = quantum_factorial(mdist(rng));
        Laurent rho, gamma;
        for (int i = 0; i < 3; ++i) {
            int e = exp(rng);
            long long c = pos(rng);
            rho += Laurent::monomial(c, e) + Laurent::monomial(c, -e);
            gamma += Laurent::monomial(pos(rng), exp(rng));
        }
        auto [r, gm] = peel_split(rho + kappa * gamma, kappa);
        if (r != rho || gm != gamma) split_ok = false;

        Laurent a, b;
        for (int i = 0; i < 4; ++i) {
            a += Laurent::monomial(coeff(rng), exp(rng) - 3);
            b += Laurent::monomial(coeff(rng), exp(rng) - 3);
        }
        if (!b.is_zero() && exact_div(a * b, b) != a) div_ok = false;
        if ((a * b).bar() != a.bar() * b.bar()) bar_ok = false;
    }
    out.check("peel_split recovers random (rho, gamma) pairs", split_ok);
    out.check("exact_div(p*d, d) == p on random pairs", div_ok);
    out.check("bar is a ring involution on random pairs", bar_ok);
    bool qf_ok = true;
    Coeff fact = 1;
    for (int m = 0; m <= 12; ++m) {
        if (m > 0) fact *= m;
        Laurent f = quantum_factorial(m);
        if (!f.is_bar_invariant() || f.eval_at_one() != fact) qf_ok = false;
    }
    out.check("[m]! bar-invariant with [m]!(1) = m! for m <= 12", qf_ok);
}

void block_property_checks(CheckPrinter& out, const DimensionVector& v, int strand_limit) {
    const int n = v.n();
    BlockOptions bo;
    bo.strand_limit = strand_limit;
    BlockData block = simple_characters(v, bo);

    bool bar_ok = true, kappa_ok = true, gamma_ok = true, recon_ok = true;
    bool rowsum_ok = true, divisor_ok = true, essential_ok = true, move1_ok = true;

    for (const auto& s : block.simples) {
        if (s.character.begin()->first != s.good_word) kappa_ok = false;
        if (s.character.at(s.good_word) != s.kappa) kappa_ok = false;
        for (const auto& [w, p] : s.character) {
            (void)w;
            if (!p.is_bar_invariant()) bar_ok = false;
        }
        Character rebuilt = s.character;
        for (const auto& other : block.simples) {
            auto it = block.decomposition.find({s.good_word, other.good_word});
            if (it == block.decomposition.end()) continue;
            if (it->second.is_zero() || it->second.min_exp() < 1 ||
                !it->second.has_nonneg_coeffs())
                gamma_ok = false;
            for (const auto& [w, p] : other.character) rebuilt[w] += it->second * p;
        }
        for (auto it = rebuilt.begin(); it != rebuilt.end();)
            it = it->second.is_zero() ? rebuilt.erase(it) : std::next(it);
        if (rebuilt != std_character(s.good_word, v)) recon_ok = false;
    }

    long long bound = 1;
    for (int i = 1; i <= n - 1; ++i)
        for (int k = 2; k <= v.v[static_cast<size_t>(i) - 1]; ++k) bound *= k;
    for (const auto& w : enumerate_words(v)) {
        long long total = 0;
        int appearing = 0;
        bool attained = false;
        for (const auto& s : block.simples) {
            auto it = s.character.find(w);
            if (it == s.character.end()) continue;
            long long val = static_cast<long long>(it->second.eval_at_one());
            total += val;
            ++appearing;
            attained = attained || val == bound;
            if (val % run_divisor(w, n) != 0) divisor_ok = false;
        }
        if (total > bound) rowsum_ok = false;
        if (attained != is_essential(w, n) || (attained && appearing != 1)) essential_ok = false;
        // neighbours under a distant swap carry identical graded columns
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            int x = static_cast<unsigned char>(w[i]), y = static_cast<unsigned char>(w[i + 1]);
            if (x - y < 2 && y - x < 2) continue;
            Word swapped = w;
            std::swap(swapped[i], swapped[i + 1]);
            for (const auto& s : block.simples) {
                auto a = s.character.find(w);
                auto b = s.character.find(swapped);
                bool have_a = a != s.character.end(), have_b = b != s.character.end();
                if (have_a != have_b || (have_a && a->second != b->second)) move1_ok = false;
            }
        }
    }

    std::ostringstream tag;
    tag << "v=(";
    for (size_t i = 0; i < v.v.size(); ++i) tag << (i ? "," : "") << v.v[i];
    tag << ")";
    out.check(tag.str() + ": simple characters bar-invariant", bar_ok);
    out.check(tag.str() + ": good word is lex-min with coefficient kappa", kappa_ok);
    out.check(tag.str() + ": decomposition polynomials in q*Z_{>=0}[q]", gamma_ok);
    out.check(tag.str() + ": standards rebuild from simples", recon_ok);
    out.check(tag.str() + ": row sums bounded by prod v_i!", rowsum_ok);
    out.check(tag.str() + ": entries divisible by the run divisor", divisor_ok);
    out.check(tag.str() + ": the bound is attained alone, exactly at essential words",
              essential_ok);
    out.check(tag.str() + ": distant swaps preserve all columns", move1_ok);
}

void suite_gl4_spot(CheckPrinter& out, int strand_limit) {
    BlockOptions bo;
    bo.strand_limit = strand_limit;
    bo.progress = [](size_t done, size_t total) {
        if (done % 16 == 0 || done == total)
            std::cerr << "\r" << done << "/" << total << " simples" << (done == total ? "\n" : "")
                      << std::flush;
    };
    DimensionVector v = DimensionVector::gl(4);
    BlockData block = simple_characters(v, bo);
    out.check("259 simples", block.simples.size() == 259);

    auto row_multiset = [&](const std::string& digits) {
        Word w;
        for (char c : digits) w.push_back(static_cast<char>(c - '0'));
        std::multiset<long long> vals;
        for (const auto& s : block.simples) {
            auto it = s.character.find(w);
            if (it != s.character.end())
                vals.insert(static_cast<long long>(it->second.eval_at_one()));
        }
        return vals;
    };
    using MS = std::multiset<long long>;
    out.check("row 4444333221 = {12}", row_multiset("4444333221") == MS{12});
    out.check("row 4432143243 = {1}", row_multiset("4432143243") == MS{1});
    out.check("row 4444333212 = {6,6}", row_multiset("4444333212") == MS{6, 6});
    out.check("row 4444332321 = {2,8}", row_multiset("4444332321") == MS{2, 8});
    out.check("row 4443343221 = {4,8}", row_multiset("4443343221") == MS{4, 8});
    out.check("row 4443432321 = {1,1,2,5}", row_multiset("4443432321") == MS{1, 1, 2, 5});
    out.check("row 4434343221 = {2,2,2,4}", row_multiset("4434343221") == MS{2, 2, 2, 4});
    out.check("row 4434343212 = {1,1,1,1,1,1,2,2}",
              row_multiset("4434343212") == MS{1, 1, 1, 1, 1, 1, 2, 2});

    bool rowsum_ok = true, essential_ok = true;
    for (const auto& w : enumerate_words(v)) {
        long long total = 0;
        int appearing = 0;
        bool attained = false;
        for (const auto& s : block.simples) {
            auto it = s.character.find(w);
            if (it == s.character.end()) continue;
            long long val = static_cast<long long>(it->second.eval_at_one());
            total += val;
            ++appearing;
            attained = attained || val == 12;
        }
        if (total > 12) rowsum_ok = false;
        if (attained != is_essential(w, 4) || (attained && appearing != 1)) essential_ok = false;
    }
    out.check("all 12600 row sums <= 12", rowsum_ok);
    out.check("a simple attains 12 exactly at essential words, alone", essential_ok);

    int gk_zero = 0;
    for (const auto& s : block.simples)
        if (simple_metadata(s, 4).gk == 0) ++gk_zero;
    out.check("exactly one simple of GK dimension 0", gk_zero == 1);
}

void suite_ogz(CheckPrinter& out, int trials, unsigned long long seed) {
    for (int n = 2; n <= 4; ++n) {
        RelationReport r = verify_gl_relations(n, trials, seed);
        for (const auto& rel : r.relations)
            out.check("n=" + std::to_string(n) + ": " + rel.name, rel.pass);
    }
}

int run_verify_suite(const std::string& suite, int trials, unsigned long long seed,
                     int strand_limit, bool as_json) {
    CheckPrinter out;
    out.quiet = as_json;
    if (suite == "words") {
        suite_words(out);
    } else if (suite == "qlaurent") {
        suite_qlaurent(out, trials, seed);
    } else if (suite == "gl2") {
        block_property_checks(out, DimensionVector({1, 2}), strand_limit);
    } else if (suite == "gl3") {
        block_property_checks(out, DimensionVector::gl(3), strand_limit);
    } else if (suite == "gl4-spot") {
        suite_gl4_spot(out, strand_limit);
    } else if (suite == "ogz") {
        suite_ogz(out, trials, seed);
    } else {
        throw domain_error("unknown suite: " + suite);
    }
    if (as_json) {
        json j;
        j["suite"] = suite;
        j["checks"] = out.records;
        j["all_pass"] = out.all;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (out.all ? "all checks passed" : "FAILURES above") << "\n";
    }
    return out.all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded characters of KLRW standard and simple modules, Gelfand-Tsetlin "
                 "multiplicity tables, canonical-form rewriting, and an exact shift-operator "
                 "oracle for the OGZ action formulas"};
    app.require_subcommand(1);
    app.fallthrough(true);

    GlobalFlags g;
    app.add_option("--threads", g.threads, "worker threads (default: all cores; GTK_THREADS)");
    app.add_option("--strand-limit", g.strand_limit, "refuse blocks with more strands")
        ->default_val(12);
    app.add_option("--seed", g.seed, "seed for randomized verification");
    app.add_option("--output", g.output, "write the result to a file instead of stdout");

    auto* cmd_count = app.add_subcommand("count", "number of red-good words (= simples)");
    BlockSelector sel_count;
    sel_count.attach(cmd_count);

    auto* cmd_enum = app.add_subcommand("enumerate", "list red-good words (or all words)");
    BlockSelector sel_enum;
    sel_enum.attach(cmd_enum);
    bool enum_all = false;
    cmd_enum->add_flag("--all", enum_all, "all words of the content, not just red-good ones");

    auto* cmd_chars = app.add_subcommand("characters", "graded simple characters of a block");
    BlockSelector sel_chars;
    sel_chars.attach(cmd_chars);
    std::string chars_word;
    int chars_rank = 0;
    cmd_chars->add_option("--word", chars_word, "restrict output to this good word");
    cmd_chars->add_option("--rank", chars_rank, "rank, when only --word is given");

    auto* cmd_table = app.add_subcommand("table", "multiplicity table of a block");
    BlockSelector sel_table;
    sel_table.attach(cmd_table);
    std::string singular_str, format = "csv";
    bool graded = false, confirm_large = false;
    cmd_table->add_option("--singular", singular_str, "singular composition c_1,c_2,...");
    cmd_table->add_option("--format", format, "csv, md or json")->default_val("csv");
    cmd_table->add_flag("--graded", graded, "emit graded entries instead of q=1 values");
    cmd_table->add_flag("--confirm-large", confirm_large,
                        "allow minutes-scale blocks (10 strands or more)");

    auto* cmd_canon = app.add_subcommand("canonical", "canonical form of a word");
    std::string canon_word;
    int canon_rank = 0;
    bool canon_class = false;
    cmd_canon->add_option("--word", canon_word, "the word to rewrite")->required();
    cmd_canon->add_option("--rank", canon_rank, "rank n")->required();
    cmd_canon->add_flag("--class", canon_class, "print the whole move-equivalence class");

    auto* cmd_weight = app.add_subcommand("classify-weight", "word of a Gelfand-Tsetlin weight");
    std::string pattern_str;
    cmd_weight->add_option("--pattern", pattern_str, "rows n..1, e.g. 0,1,2;0,1;0")->required();

    auto* cmd_prod = app.add_subcommand("product", "non-integral product-block multiplicity");
    std::string cosets_str, words_str, simples_str;
    cmd_prod->add_option("--cosets", cosets_str, "dimension vectors, e.g. 1,2,1,1|0,0,2,3")
        ->required();
    cmd_prod->add_option("--words", words_str, "one word per coset, pipe-separated")->required();
    cmd_prod->add_option("--simples", simples_str, "one good word per coset, pipe-separated")
        ->required();

    auto* cmd_verma = app.add_subcommand("verma", "red-good word of a Verma module");
    std::string sigma_str;
    cmd_verma->add_option("--sigma", sigma_str, "permutation of [1,n], e.g. 2,1,3")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a self-verification suite");
    std::string suite;
    int trials = 20;
    bool verify_json = false;
    cmd_verify->add_option("--suite", suite, "words, qlaurent, gl2, gl3, gl4-spot or ogz")
        ->required();
    cmd_verify->add_option("--trials", trials, "randomized trials")->default_val(20);
    cmd_verify->add_flag("--json", verify_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd_count->parsed()) {
            emit(g, count_red_good(sel_count.resolve()).str());
            return 0;
        }

        if (cmd_enum->parsed()) {
            DimensionVector v = sel_enum.resolve();
            json arr = json::array();
            for (const auto& w : enum_all ? enumerate_words(v) : enumerate_red_good(v))
                arr.push_back(word_to_string(w, v.n()));
            emit(g, arr.dump(1));
            return 0;
        }

        if (cmd_chars->parsed()) {
            DimensionVector v = [&] {
                if (sel_chars.gl > 0 || !sel_chars.dim.empty()) return sel_chars.resolve();
                if (chars_word.empty() || chars_rank == 0)
                    throw domain_error("need --gl/--dim, or --word with --rank");
                return content_of(parse_word(chars_word).word, chars_rank);
            }();
            BlockOptions bo;
            bo.strand_limit = g.strand_limit;
            BlockData block = simple_characters(v, bo);
            if (!chars_word.empty()) {
                Word w = parse_word(chars_word).word;
                const SimpleRecord* rec = block.find(w);
                if (!rec) throw domain_error("not a red-good word of this block: " + chars_word);
                json j;
                j["good"] = word_to_string(w, v.n());
                j["kappa"] = laurent_to_json(rec->kappa);
                j["char"] = character_to_json(rec->character, v.n());
                emit(g, j.dump(1));
            } else {
                emit(g, block_to_json(block).dump(1));
            }
            return 0;
        }

        if (cmd_table->parsed()) {
            BlockSpec spec;
            spec.v = sel_table.resolve();
            if (!singular_str.empty()) spec.singular = parse_int_list(singular_str);
            if (spec.v.total() >= 10 && !confirm_large)
                throw resource_error(
                    "blocks with 10 or more strands take minutes; pass --confirm-large");
            TableOptions topts;
            topts.graded = graded;
            topts.strand_limit = g.strand_limit;
            topts.threads = resolved_threads(g);
            if (spec.v.total() >= 10)
                topts.progress = [](size_t done, size_t total) {
                    if (done % 16 == 0 || done == total)
                        std::cerr << "\r" << done << "/" << total << " simples"
                                  << (done == total ? "\n" : "") << std::flush;
                };
            BlockTable table = block_table(spec, topts);
            if (format == "csv")
                emit(g, table_to_csv(table));
            else if (format == "md")
                emit(g, table_to_markdown(table));
            else if (format == "json")
                emit(g, table_to_json(table).dump(1));
            else
                throw domain_error("unknown format: " + format);
            return 0;
        }

        if (cmd_canon->parsed()) {
            ParsedWord pw = parse_word(canon_word);
            // echo the input format
            auto render = [&](const Word& w) {
                return pw.had_commas ? word_to_string_commas(w) : word_to_string(w, canon_rank);
            };
            if (canon_class) {
                json arr = json::array();
                for (const auto& w : canonical_class(pw.word, canon_rank))
                    arr.push_back(render(w));
                emit(g, arr.dump(1));
            } else {
                emit(g, render(canonical_form(pw.word, canon_rank)));
            }
            return 0;
        }

        if (cmd_weight->parsed()) {
            GTPattern p = parse_pattern(pattern_str);
            WeightClass wc = weight_to_word(p);
            emit(g, wc.critical ? std::string("critical") : word_to_string(wc.word, p.n()));
            return 0;
        }

        if (cmd_prod->parsed()) {
            std::vector<DimensionVector> cosets;
            for (const auto& s : split_pipes(cosets_str)) cosets.push_back(parse_dim(s));
            std::vector<Word> words, simples;
            for (const auto& s : split_pipes(words_str)) words.push_back(parse_word(s).word);
            for (const auto& s : split_pipes(simples_str)) simples.push_back(parse_word(s).word);
            BlockOptions bo;
            bo.strand_limit = g.strand_limit;
            emit(g, product_multiplicity(cosets, words, simples, bo).str());
            return 0;
        }

        if (cmd_verma->parsed()) {
            std::vector<int> sigma = parse_int_list(sigma_str);
            int n = static_cast<int>(sigma.size());
            emit(g, word_to_string(verma_word(sigma, n), n));
            return 0;
        }

        if (cmd_verify->parsed())
            return run_verify_suite(suite, trials, g.seed, g.strand_limit, verify_json);

        return 1;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const structural_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    }
}
