#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tng {

// Subsets of [n] = {1..n}, kept sorted ascending.
using Subset = std::vector<int>;
// Permutation of [n]; pi[i-1] = pi(i).
using Perm = std::vector<int>;

struct GroundParams {
  int n = 0;
  int k = 0;
};

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct structure_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct verify_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool contains(const Subset& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

Subset sorted(Subset s);
Subset set_union(const Subset& a, const Subset& b);
Subset set_minus(const Subset& a, const Subset& b);
Subset set_intersect(const Subset& a, const Subset& b);
Subset complement_of(const Subset& a, int n);  // ascending

std::vector<Subset> all_subsets(int n, int k);
std::vector<Perm> all_perms(int n);

std::string subset_str(const Subset& s);  // "{1,2,4}"
std::string perm_str(const Perm& p);      // "3 4 1 2"

// A total order on [n]: pos[a-1] is the rank of a (0 = smallest).
struct Order {
  std::vector<int> pos;
  int rank(int a) const { return pos[a - 1]; }
  bool lt(int a, int b) const { return pos[a - 1] < pos[b - 1]; }
};

// <_t : t < t+1 < ... < n < 1 < ... < t-1, i.e. <_{c^{t-1}}.
Order cyclic_order(int n, int t);
// Order induced by w: a <_w b iff w^{-1}(a) < w^{-1}(b).
Order order_of_perm(const Perm& w);

Perm inverse_perm(const Perm& p);

// Gale order on k-subsets induced by the given total order.
bool gale_leq(const Subset& A, const Subset& B, const Order& ord);

}  // namespace tng
