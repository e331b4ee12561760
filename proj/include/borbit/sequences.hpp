#pragma once

#include <vector>

namespace borbit {

// Sign sequences over {+1, -1}; positions are 1-based in the signed sums.

int plus_number(const std::vector<int>& x);
int minus_number(const std::vector<int>& x);

// Delete identical adjacent pairs until none remain, then a trailing +1 if
// present. The result is alternating and independent of deletion order.
std::vector<int> reduce_sequence(std::vector<int> x);

// Flip the leftmost offending adjacent equal pair until the sequence is a
// prefix of +1s followed by an alternating tail. Preserves the reduced form.
std::vector<int> normalize_sequence(std::vector<int> x);

}  // namespace borbit
