#include "qstring/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace qs {

namespace {
bool all_distinct(const std::vector<uint32_t>& v) {
    std::unordered_set<uint32_t> seen;
    for (uint32_t c : v)
        if (!seen.insert(c).second) return false;
    return true;
}
} // namespace

std::vector<Text> load_texts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::vector<Text> out;
    std::string line;
    bool int_mode = false;
    uint32_t alphabet = 256;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first && line.rfind("#alphabet", 0) == 0) {
            int_mode = true;
            alphabet = static_cast<uint32_t>(std::stoul(line.substr(9)));
            first = false;
            continue;
        }
        first = false;
        std::vector<uint32_t> chars;
        if (int_mode) {
            std::istringstream ss(line);
            uint64_t v;
            while (ss >> v) chars.push_back(static_cast<uint32_t>(v));
        } else {
            for (unsigned char c : line) chars.push_back(c);
        }
        out.push_back(make_text(std::move(chars), alphabet, false));
        out.back().non_repetitive = all_distinct(out.back().chars);
    }
    if (out.empty()) throw std::runtime_error("no strings in input file: " + path);
    return out;
}

void save_texts(const std::string& path, const std::vector<Text>& texts) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    uint32_t alphabet = 1;
    for (auto& t : texts) alphabet = std::max(alphabet, t.alphabet_size);
    out << "#alphabet " << alphabet << "\n";
    for (auto& t : texts) {
        for (size_t i = 0; i < t.size(); i++) {
            if (i) out << ' ';
            out << t.chars[i];
        }
        out << "\n";
    }
}

} // namespace qs
