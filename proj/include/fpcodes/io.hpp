#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "fpcodes/code.hpp"
#include "fpcodes/construct.hpp"
#include "fpcodes/verdict.hpp"

namespace fpcodes {

// Code file: header "q l", then one word per line as space-separated symbols.
// Grouped file: header "q l g p", then lines "group_index symbols...".
// Writers emit canonical order (words sorted; grouped lines by group, then word).
Code read_code(std::istream& in);
void write_code(std::ostream& out, const Code& c);
TwoLevelCode read_grouped_code(std::istream& in);
void write_grouped_code(std::ostream& out, const TwoLevelCode& c);

// Sniffs the header (2 fields = flat, 4 = grouped).
std::variant<Code, TwoLevelCode> read_any_code(std::istream& in);
std::variant<Code, TwoLevelCode> read_any_code_file(const std::string& path);

Code read_code_file(const std::string& path);
void write_code_file(const std::string& path, const Code& c);
TwoLevelCode read_grouped_code_file(const std::string& path);
void write_grouped_code_file(const std::string& path, const TwoLevelCode& c);

// "011" for q ≤ 10, "0 1 11" otherwise.
std::string format_word(const Codeword& w, std::size_t q);
// Fixture helper: one decimal digit per symbol.
Codeword word_from_digits(std::string_view digits);

nlohmann::ordered_json to_json(const Witness& w, std::size_t q);
nlohmann::ordered_json to_json(const Verdict& v, std::size_t q);
nlohmann::ordered_json to_json(const ConstructionReport& r, std::size_t q);

std::string render_witness(const Witness& w, std::size_t q);
std::string render_report(const ConstructionReport& r, std::size_t q);

} // namespace fpcodes
