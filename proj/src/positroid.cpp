#include "tng/positroid.hpp"

namespace tng {

bool is_matroid(const std::vector<Subset>& collection, const GroundParams& p) {
  if (collection.empty()) return false;
  for (const auto& s : collection)
    if ((int)s.size() != (int)collection[0].size())
      throw input_error("is_matroid: members of unequal size");
  for (const auto& w : all_perms(p.n)) {
    Order ord = order_of_perm(w);
    int maximal_count = 0;
    for (size_t i = 0; i < collection.size(); ++i) {
      bool is_max = true;
      for (size_t j = 0; j < collection.size(); ++j) {
        if (i == j) continue;
        if (collection[i] != collection[j] &&
            gale_leq(collection[i], collection[j], ord)) {
          is_max = false;
          break;
        }
      }
      if (is_max && ++maximal_count > 1) break;
    }
    if (maximal_count != 1) return false;
  }
  return true;
}

Positroid schubert_matroid(const Subset& I, const Order& ord,
                           const GroundParams& p) {
  Positroid m;
  m.p = p;
  for (const auto& h : all_subsets(p.n, (int)I.size()))
    if (gale_leq(I, h, ord)) m.bases.push_back(h);
  return m;
}

GrassmannNecklace necklace_of_matroid(const Positroid& m) {
  if (m.bases.empty()) throw input_error("necklace_of_matroid: empty matroid");
  GrassmannNecklace neck;
  neck.n = m.p.n;
  neck.k = (int)m.bases[0].size();
  for (int t = 1; t <= m.p.n; ++t) {
    Order ord = cyclic_order(m.p.n, t);
    const Subset* min = nullptr;
    for (const auto& b : m.bases) {
      bool below_all = true;
      for (const auto& c : m.bases)
        if (!gale_leq(b, c, ord)) {
          below_all = false;
          break;
        }
      if (below_all) {
        min = &b;
        break;
      }
    }
    if (!min)
      throw structure_error(
          "necklace_of_matroid: no unique <=_t-minimal member at shift t=" +
          std::to_string(t));
    neck.I.push_back(*min);
  }
  return neck;
}

void validate_necklace(const GrassmannNecklace& neck) {
  if ((int)neck.I.size() != neck.n)
    throw structure_error("necklace: expected n=" + std::to_string(neck.n) +
                          " subsets, got " + std::to_string(neck.I.size()));
  for (int i = 1; i <= neck.n; ++i) {
    const Subset& cur = neck.I[i - 1];
    const Subset& next = neck.I[i % neck.n];
    if ((int)cur.size() != neck.k)
      throw structure_error("necklace: I_" + std::to_string(i) +
                            " has wrong size");
    if (contains(cur, i)) {
      Subset kept = set_minus(cur, Subset{i});
      Subset added = set_minus(next, kept);
      if (set_minus(kept, next).size() != 0 || added.size() != 1)
        throw structure_error("necklace: step I_" + std::to_string(i) +
                              " -> I_" + std::to_string(i % neck.n + 1) +
                              " violates (I_i \\ {i}) u {j} with i in I_i");
    } else {
      if (cur != next)
        throw structure_error("necklace: step I_" + std::to_string(i) +
                              " -> I_" + std::to_string(i % neck.n + 1) +
                              " must be constant since i not in I_i");
    }
  }
}

Positroid positroid_of_necklace(const GrassmannNecklace& neck) {
  validate_necklace(neck);
  Positroid m;
  m.p = GroundParams{neck.n, neck.k};
  std::vector<Order> ords;
  for (int t = 1; t <= neck.n; ++t) ords.push_back(cyclic_order(neck.n, t));
  for (const auto& h : all_subsets(neck.n, neck.k)) {
    bool ok = true;
    for (int t = 1; t <= neck.n; ++t)
      if (!gale_leq(neck.I[t - 1], h, ords[t - 1])) {
        ok = false;
        break;
      }
    if (ok) m.bases.push_back(h);
  }
  return m;
}

DecoratedPermutation necklace_to_decperm(const GrassmannNecklace& neck) {
  validate_necklace(neck);
  DecoratedPermutation dp;
  dp.pi.resize(neck.n);
  for (int i = 1; i <= neck.n; ++i) {
    const Subset& cur = neck.I[i - 1];
    const Subset& next = neck.I[i % neck.n];
    if (contains(cur, i)) {
      Subset added = set_minus(next, set_minus(cur, Subset{i}));
      int j = added[0];
      dp.pi[i - 1] = j;
      if (j == i) dp.col[i] = -1;
    } else {
      dp.pi[i - 1] = i;
      dp.col[i] = +1;
    }
  }
  return dp;
}

int decperm_rank(const DecoratedPermutation& dp) {
  int n = dp.n();
  Perm pinv = inverse_perm(dp.pi);
  int k = 0;
  for (int i = 1; i <= n; ++i) {
    if (dp.pi[i - 1] == i) {
      if (dp.col.at(i) == -1) ++k;
    } else if (i < pinv[i - 1]) {
      ++k;
    }
  }
  return k;
}

GrassmannNecklace decperm_to_necklace(const DecoratedPermutation& dp, int k) {
  int n = dp.n();
  GrassmannNecklace neck;
  neck.n = n;
  Perm pinv = inverse_perm(dp.pi);
  for (int r = 1; r <= n; ++r) {
    Order ord = cyclic_order(n, r);
    Subset I;
    for (int i = 1; i <= n; ++i) {
      if (dp.pi[i - 1] == i) {
        if (dp.col.at(i) == -1) I.push_back(i);
      } else if (ord.lt(i, pinv[i - 1])) {
        I.push_back(i);
      }
    }
    neck.I.push_back(I);
  }
  neck.k = (int)neck.I[0].size();
  if (k >= 0 && neck.k != k)
    throw structure_error("decperm_to_necklace: rank mismatch, expected " +
                          std::to_string(k) + " got " +
                          std::to_string(neck.k));
  validate_necklace(neck);
  return neck;
}

std::vector<DecoratedPermutation> all_decperms(int n) {
  std::vector<DecoratedPermutation> out;
  for (const auto& p : all_perms(n)) {
    std::vector<int> fixed;
    for (int i = 1; i <= n; ++i)
      if (p[i - 1] == i) fixed.push_back(i);
    int f = (int)fixed.size();
    for (int mask = 0; mask < (1 << f); ++mask) {
      DecoratedPermutation dp;
      dp.pi = p;
      for (int j = 0; j < f; ++j)
        dp.col[fixed[j]] = (mask >> j & 1) ? -1 : +1;
      out.push_back(dp);
    }
  }
  return out;
}

Positroid lattice_path_matroid(const Subset& I, const Subset& J,
                               const GroundParams& p) {
  Order nat = cyclic_order(p.n, 1);
  if (!gale_leq(I, J, nat))
    throw input_error("lattice_path_matroid: need I <= J, got " +
                      subset_str(I) + " !<= " + subset_str(J));
  Positroid m;
  m.p = p;
  for (const auto& h : all_subsets(p.n, (int)I.size()))
    if (gale_leq(I, h, nat) && gale_leq(h, J, nat)) m.bases.push_back(h);
  return m;
}

DecoratedPermutation lpm_decperm(const Subset& I, const Subset& J, int n) {
  Order nat = cyclic_order(n, 1);
  if (!gale_leq(I, J, nat))
    throw input_error("lpm_decperm: need I <= J");
  DecoratedPermutation dp;
  dp.pi.resize(n);
  int k = (int)I.size();
  for (int r = 0; r < k; ++r) dp.pi[J[r] - 1] = I[r];
  Subset d = complement_of(J, n), c = complement_of(I, n);
  for (int r = 0; r < n - k; ++r) dp.pi[d[r] - 1] = c[r];
  for (int t = 1; t <= n; ++t)
    if (dp.pi[t - 1] == t) dp.col[t] = contains(J, t) ? -1 : +1;
  return dp;
}

}  // namespace tng
