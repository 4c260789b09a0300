#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gtklr/characters.hpp"
#include "gtklr/gtmod.hpp"
#include "gtklr/oracle.hpp"

namespace gtklr {

// Words print as digit strings for rank <= 9 and comma-separated integers
// otherwise.
std::string word_to_string(const Word& w, int n);
std::string word_to_string_commas(const Word& w);

struct ParsedWord {
    Word word;
    bool had_commas = false;
};
ParsedWord parse_word(const std::string& s);

// "0,1,2;0,1;0" -- rows from i = n down to i = 1, entries rational
GTPattern parse_pattern(const std::string& s);

nlohmann::json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const nlohmann::json& j);

nlohmann::json character_to_json(const Character& ch, int n);

nlohmann::json block_to_json(const BlockData& block);

nlohmann::json table_to_json(const BlockTable& table);
std::string table_to_csv(const BlockTable& table);
std::string table_to_markdown(const BlockTable& table);

nlohmann::json report_to_json(const RelationReport& report);

// RFC 4180 field quoting
std::string csv_field(const std::string& s);

}  // namespace gtklr
