#include "tng/base.hpp"

#include <sstream>

namespace tng {

Subset sorted(Subset s) {
  std::sort(s.begin(), s.end());
  return s;
}

Subset set_union(const Subset& a, const Subset& b) {
  Subset r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Subset set_minus(const Subset& a, const Subset& b) {
  Subset r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(r));
  return r;
}

Subset set_intersect(const Subset& a, const Subset& b) {
  Subset r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r));
  return r;
}

Subset complement_of(const Subset& a, int n) {
  Subset r;
  for (int x = 1; x <= n; ++x)
    if (!contains(a, x)) r.push_back(x);
  return r;
}

std::vector<Subset> all_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string subset_str(const Subset& s) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << '}';
  return os.str();
}

std::string perm_str(const Perm& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ' ';
    os << p[i];
  }
  return os.str();
}

Order cyclic_order(int n, int t) {
  Order o;
  o.pos.resize(n);
  for (int a = 1; a <= n; ++a) o.pos[a - 1] = ((a - t) % n + n) % n;
  return o;
}

Order order_of_perm(const Perm& w) {
  Order o;
  o.pos.resize(w.size());
  for (size_t i = 0; i < w.size(); ++i) o.pos[w[i] - 1] = (int)i;
  return o;
}

Perm inverse_perm(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = (int)i + 1;
  return q;
}

bool gale_leq(const Subset& A, const Subset& B, const Order& ord) {
  if (A.size() != B.size())
    throw input_error("gale_leq: size mismatch " + subset_str(A) + " vs " +
                      subset_str(B));
  Subset a = A, b = B;
  auto cmp = [&](int x, int y) { return ord.lt(x, y); };
  std::sort(a.begin(), a.end(), cmp);
  std::sort(b.begin(), b.end(), cmp);
  for (size_t i = 0; i < a.size(); ++i)
    if (ord.rank(a[i]) > ord.rank(b[i])) return false;
  return true;
}

}  // namespace tng
