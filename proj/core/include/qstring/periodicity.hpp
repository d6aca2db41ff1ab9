#pragma once

#include "qstring/text.hpp"

namespace qs {

// Smallest q > 0 with s[i] = s[i+q] for all valid i (border-based, O(n)).
size_t period(const std::vector<uint32_t>& s);

// Closed interval [x, y], 0-based inclusive.
struct Interval {
    size_t x = 0, y = 0;
    size_t length() const { return y - x + 1; }
};

// Grows a q-periodic anchor to a maximal q-periodic interval, moving each
// endpoint at most `limit` positions. Reads go through the reader.
Interval extend_periodic(const QueryReader& reader, Interval anchor, size_t q,
                         size_t limit);

} // namespace qs
