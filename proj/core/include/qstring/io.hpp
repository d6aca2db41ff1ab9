#pragma once

#include <string>

#include "qstring/text.hpp"

namespace qs {

// Input files hold one string per line. Two encodings:
//   - raw mode: each line's UTF-8 bytes are the symbols (alphabet 256);
//   - integer mode: a leading "#alphabet N" line, then whitespace-separated
//     symbol values per line.
// Texts whose symbols are all distinct get the non_repetitive flag.
std::vector<Text> load_texts(const std::string& path);

// Writes integer mode. Round-trips through load_texts.
void save_texts(const std::string& path, const std::vector<Text>& texts);

} // namespace qs
