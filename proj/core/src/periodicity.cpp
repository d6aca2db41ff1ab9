#include "qstring/periodicity.hpp"

namespace qs {

size_t period(const std::vector<uint32_t>& s) {
    size_t n = s.size();
    if (n == 0) throw std::invalid_argument("period of empty string");
    // Failure function; the smallest period is n minus the longest border.
    std::vector<size_t> pi(n, 0);
    for (size_t i = 1; i < n; i++) {
        size_t j = pi[i - 1];
        while (j > 0 && s[i] != s[j]) j = pi[j - 1];
        if (s[i] == s[j]) j++;
        pi[i] = j;
    }
    return n - pi[n - 1];
}

Interval extend_periodic(const QueryReader& reader, Interval anchor, size_t q,
                         size_t limit) {
    size_t n = reader.size();
    Interval out = anchor;
    size_t moved = 0;
    while (moved < limit && out.x >= 1 && reader[out.x - 1] == reader[out.x - 1 + q]) {
        out.x--;
        moved++;
    }
    moved = 0;
    while (moved < limit && out.y + 1 < n && reader[out.y + 1] == reader[out.y + 1 - q]) {
        out.y++;
        moved++;
    }
    return out;
}

} // namespace qs
