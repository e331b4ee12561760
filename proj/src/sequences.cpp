#include "borbit/sequences.hpp"

#include <stdexcept>

namespace borbit {

int plus_number(const std::vector<int>& x) {
  int s = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] == 1) s += (i + 1) % 2 ? -1 : 1;
  return s;
}

int minus_number(const std::vector<int>& x) {
  int s = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] == -1) s += (i + 1) % 2 ? -1 : 1;
  return s;
}

std::vector<int> reduce_sequence(std::vector<int> x) {
  bool again = true;
  while (again) {
    again = false;
    for (size_t i = 0; i + 1 < x.size(); ++i) {
      if (x[i] == x[i + 1]) {
        x.erase(x.begin() + i, x.begin() + i + 2);
        again = true;
        break;
      }
    }
  }
  if (!x.empty() && x.back() == 1) x.pop_back();
  return x;
}

std::vector<int> normalize_sequence(std::vector<int> x) {
  int n = (int)x.size();
  while (true) {
    size_t p = 0;
    while (p < x.size() && x[p] == 1) ++p;
    bool terminal = true;
    for (size_t i = p; i + 1 < x.size(); ++i)
      if (x[i] == x[i + 1]) terminal = false;
    if (terminal) return x;

    // smallest k with x[k-1] != x[k] == x[k+1], or x[k] == x[k+1] == -1
    int k = -1;
    for (int i = 0; i + 1 < n; ++i) {
      if (x[i] != x[i + 1]) continue;
      if ((i > 0 && x[i - 1] != x[i]) || x[i] == -1) {
        k = i;
        break;
      }
    }
    if (k < 0) throw std::logic_error("non-terminal sequence without a flip position");
    x[k] = -x[k];
    x[k + 1] = -x[k + 1];
  }
}

}  // namespace borbit
