#include "gtklr/serialize.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace gtklr {

using nlohmann::json;

std::string word_to_string(const Word& w, int n) {
    if (n > 9) return word_to_string_commas(w);
    std::ostringstream os;
    for (unsigned char x : w) os << static_cast<int>(x);
    return os.str();
}

std::string word_to_string_commas(const Word& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << static_cast<int>(static_cast<unsigned char>(w[i]));
    }
    return os.str();
}

ParsedWord parse_word(const std::string& s) {
    ParsedWord out;
    if (s.find(',') != std::string::npos) {
        out.had_commas = true;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            int x = std::stoi(tok);
            if (x < 1 || x > 255) throw domain_error("parse_word: letter out of range");
            out.word.push_back(static_cast<char>(x));
        }
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw domain_error("parse_word: expected digits 1-9");
            out.word.push_back(static_cast<char>(c - '0'));
        }
    }
    return out;
}

namespace {

Rational parse_rational(const std::string& tok) {
    size_t slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(tok));
        return Rational(BigInt(tok.substr(0, slash)), BigInt(tok.substr(slash + 1)));
    } catch (const std::exception&) {
        throw domain_error("parse_pattern: bad rational '" + tok + "'");
    }
}

}  // namespace

GTPattern parse_pattern(const std::string& s) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream is(s);
    std::string row;
    while (std::getline(is, row, ';')) {
        std::vector<Rational> vals;
        std::istringstream ir(row);
        std::string tok;
        while (std::getline(ir, tok, ',')) {
            if (!tok.empty()) vals.push_back(parse_rational(tok));
        }
        rows.push_back(std::move(vals));
    }
    // text order is row n first
    std::reverse(rows.begin(), rows.end());
    GTPattern p;
    std::vector<int> v;
    for (const auto& r : rows) v.push_back(static_cast<int>(r.size()));
    p.v = DimensionVector(std::move(v));
    p.rows = std::move(rows);
    p.validate();
    return p;
}

json laurent_to_json(const Laurent& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms())
        j[std::to_string(e)] = static_cast<long long>(c);
    return j;
}

Laurent laurent_from_json(const json& j) {
    Laurent p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p += Laurent::monomial(Coeff(it.value().get<long long>()), std::stoi(it.key()));
    return p;
}

json character_to_json(const Character& ch, int n) {
    json j = json::object();
    for (const auto& [w, p] : ch) j[word_to_string(w, n)] = laurent_to_json(p);
    return j;
}

json block_to_json(const BlockData& block) {
    const int n = block.v.n();
    json j;
    j["v"] = block.v.v;
    j["simples"] = json::array();
    for (const auto& s : block.simples) {
        json rec;
        rec["good"] = word_to_string(s.good_word, n);
        rec["kappa"] = laurent_to_json(s.kappa);
        rec["shift"] = s.shift;
        rec["char"] = character_to_json(s.character, n);
        j["simples"].push_back(std::move(rec));
    }
    j["decomposition"] = json::array();
    for (const auto& [key, gamma] : block.decomposition) {
        json rec;
        rec["std"] = word_to_string(key.first, n);
        rec["simple"] = word_to_string(key.second, n);
        rec["gamma"] = laurent_to_json(gamma);
        j["decomposition"].push_back(std::move(rec));
    }
    return j;
}

json table_to_json(const BlockTable& table) {
    const int n = table.v.n();
    json j;
    j["v"] = table.v.v;
    j["rows"] = json::array();
    for (const auto& w : table.row_words) j["rows"].push_back(word_to_string(w, n));
    j["columns"] = json::array();
    for (const auto& w : table.columns) j["columns"].push_back(word_to_string(w, n));
    j["column_slots"] = table.column_slots;
    if (table.is_graded()) {
        json rows = json::array();
        for (const auto& row : table.graded) {
            json r = json::array();
            for (const auto& p : row) r.push_back(laurent_to_json(p));
            rows.push_back(std::move(r));
        }
        j["entries"] = std::move(rows);
        j["graded"] = true;
    } else {
        j["entries"] = table.entries;
        j["graded"] = false;
    }
    j["boxes"] = table.boxes;
    j["gk"] = table.gk;
    if (table.iws) {
        json arr = json::array();
        for (bool b : *table.iws) arr.push_back(b);
        j["iws"] = std::move(arr);
    }
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += "\"";
    return out;
}

std::string table_to_csv(const BlockTable& table) {
    const int n = table.v.n();
    std::ostringstream os;
    os << "word,box";
    for (const auto& c : table.columns) os << "," << csv_field(word_to_string(c, n));
    os << "\r\n";
    os << "gk,";
    for (int g : table.gk) os << "," << g;
    os << "\r\n";
    if (table.iws) {
        os << "iws,";
        for (bool b : *table.iws) os << "," << (b ? "T" : "F");
        os << "\r\n";
    }
    for (size_t r = 0; r < table.row_words.size(); ++r) {
        os << csv_field(word_to_string(table.row_words[r], n)) << ","
           << csv_field(word_to_string(table.columns[static_cast<size_t>(table.boxes[r])], n));
        if (table.is_graded()) {
            for (const auto& p : table.graded[r]) os << "," << csv_field(p.is_zero() ? "" : p.str());
        } else {
            for (long long e : table.entries[r]) {
                os << ",";
                if (e != 0) os << e;
            }
        }
        os << "\r\n";
    }
    return os.str();
}

std::string table_to_markdown(const BlockTable& table) {
    const int n = table.v.n();
    std::ostringstream os;
    os << "| word |";
    for (const auto& c : table.columns) os << " " << word_to_string(c, n) << " |";
    os << "\n|---|";
    for (size_t i = 0; i < table.columns.size(); ++i) os << "---|";
    os << "\n| gk |";
    for (int g : table.gk) os << " " << g << " |";
    os << "\n";
    if (table.iws) {
        os << "| iws |";
        for (bool b : *table.iws) os << " " << (b ? "T" : "F") << " |";
        os << "\n";
    }
    for (size_t r = 0; r < table.row_words.size(); ++r) {
        os << "| " << word_to_string(table.row_words[r], n) << " |";
        for (size_t c = 0; c < table.columns.size(); ++c) {
            std::string cell;
            if (table.is_graded()) {
                if (!table.graded[r][c].is_zero()) cell = table.graded[r][c].str();
            } else if (table.entries[r][c] != 0) {
                cell = std::to_string(table.entries[r][c]);
            }
            if (static_cast<int>(c) == table.boxes[r]) cell = "[" + cell + "]";
            os << " " << cell << " |";
        }
        os << "\n";
    }
    return os.str();
}

json report_to_json(const RelationReport& report) {
    json j;
    j["n"] = report.n;
    j["relations"] = json::array();
    for (const auto& r : report.relations)
        j["relations"].push_back({{"name", r.name}, {"pass", r.pass}});
    j["all_pass"] = report.all_pass();
    return j;
}

}  // namespace gtklr
