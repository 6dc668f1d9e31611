#include "tng/lediagram.hpp"

#include <sstream>

namespace tng {

int LeDiagram::num_dots() const {
  int c = 0;
  for (const auto& r : dot)
    for (char d : r) c += d != 0;
  return c;
}

void validate_le(const LeDiagram& d) {
  if (d.k < 0 || d.n < d.k || (int)d.rows.size() != d.k ||
      (int)d.dot.size() != d.k)
    throw input_error("le-diagram: inconsistent dimensions");
  for (int x = 1; x <= d.k; ++x) {
    if (d.rows[x - 1] < 0 || d.rows[x - 1] > d.n - d.k)
      throw input_error("le-diagram: row " + std::to_string(x) +
                        " longer than n-k");
    if (x > 1 && d.rows[x - 1] > d.rows[x - 2])
      throw input_error("le-diagram: row lengths not weakly decreasing at row " +
                        std::to_string(x));
    if ((int)d.dot[x - 1].size() != d.rows[x - 1])
      throw input_error("le-diagram: dot row " + std::to_string(x) +
                        " has wrong length");
  }
  for (int x = 1; x <= d.k; ++x)
    for (int y = 1; y <= d.rows[x - 1]; ++y) {
      if (d.has_dot(x, y)) continue;
      bool above = false, left = false;
      int xa = 0, yl = 0;
      for (int x2 = 1; x2 < x; ++x2)
        if (d.has_dot(x2, y)) above = true, xa = x2;
      for (int y2 = 1; y2 < y; ++y2)
        if (d.has_dot(x, y2)) left = true, yl = y2;
      if (above && left)
        throw structure_error(
            "le-property fails: dots at (" + std::to_string(xa) + "," +
            std::to_string(y) + ") and (" + std::to_string(x) + "," +
            std::to_string(yl) + ") but no dot at (" + std::to_string(x) +
            "," + std::to_string(y) + ")");
    }
}

int row_label(const LeDiagram& d, int x) { return x + (d.n - d.k) - d.rows[x - 1]; }

int col_label(const LeDiagram& d, int y) {
  int above = 0;
  for (int x = 1; x <= d.k; ++x)
    if (d.rows[x - 1] >= y) ++above;
  return (d.n - d.k - y + 1) + above;
}

Subset boundary_I(const LeDiagram& d) {
  Subset I;
  for (int x = 1; x <= d.k; ++x) I.push_back(row_label(d, x));
  return sorted(I);
}

LeDiagram diagram_of_shape(const Subset& I, int n) {
  LeDiagram d;
  d.k = (int)I.size();
  d.n = n;
  Subset comp = complement_of(I, n);
  for (int x = 1; x <= d.k; ++x) {
    int len = 0;
    for (int c : comp)
      if (c > I[x - 1]) ++len;
    d.rows.push_back(len);
  }
  for (int x = 1; x <= d.k; ++x)
    if (x > 1 && d.rows[x - 1] > d.rows[x - 2])
      throw structure_error("diagram_of_shape: internal shape error");
  d.dot.resize(d.k);
  for (int x = 1; x <= d.k; ++x) d.dot[x - 1].assign(d.rows[x - 1], 0);
  return d;
}

LeDiagram full_diagram(const Subset& I, int n) {
  LeDiagram d = diagram_of_shape(I, n);
  for (auto& r : d.dot) std::fill(r.begin(), r.end(), 1);
  return d;
}

std::vector<LeDiagram> all_fillings(const Subset& I, int n) {
  LeDiagram base = diagram_of_shape(I, n);
  std::vector<std::pair<int, int>> boxes;
  for (int x = 1; x <= base.k; ++x)
    for (int y = 1; y <= base.rows[x - 1]; ++y) boxes.push_back({x, y});
  std::vector<LeDiagram> out;
  int b = (int)boxes.size();
  for (long mask = 0; mask < (1L << b); ++mask) {
    LeDiagram d = base;
    for (int i = 0; i < b; ++i)
      if (mask >> i & 1) d.dot[boxes[i].first - 1][boxes[i].second - 1] = 1;
    try {
      validate_le(d);
    } catch (const structure_error&) {
      continue;
    }
    out.push_back(d);
  }
  return out;
}

std::vector<LeDiagram> all_diagrams(int n) {
  std::vector<LeDiagram> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& I : all_subsets(n, k))
      for (auto& d : all_fillings(I, n)) out.push_back(std::move(d));
  return out;
}

namespace {

// Rules of the road. Heading west at a dot: turn north if some dot lies above
// in the column, else south (then run to the column's bottom). Heading north
// at a dot: turn west if some dot lies west in the row, else east (then run to
// the row's right end). Returns the exit label.
int trip_from_west(const LeDiagram& d, int x, int y);

int trip_from_north(const LeDiagram& d, int x, int y) {
  for (int y2 = y - 1; y2 >= 1; --y2)
    if (d.has_dot(x, y2)) return trip_from_west(d, x, y2);
  return row_label(d, x);
}

int trip_from_west(const LeDiagram& d, int x, int y) {
  for (int x2 = x - 1; x2 >= 1; --x2)
    if (d.has_dot(x2, y)) return trip_from_north(d, x2, y);
  return col_label(d, y);
}

}  // namespace

DecoratedPermutation chi(const LeDiagram& d) {
  validate_le(d);
  DecoratedPermutation dp;
  dp.pi.assign(d.n, 0);
  for (int x = 1; x <= d.k; ++x) {
    int i = row_label(d, x);
    int ymax = 0;
    for (int y = 1; y <= d.rows[x - 1]; ++y)
      if (d.has_dot(x, y)) ymax = y;
    if (ymax == 0) {
      dp.pi[i - 1] = i;
      dp.col[i] = -1;
    } else {
      dp.pi[i - 1] = trip_from_west(d, x, ymax);
    }
  }
  for (int y = 1; y <= d.n - d.k; ++y) {
    int j = col_label(d, y);
    int xmax = 0;
    for (int x = 1; x <= d.k; ++x)
      if (d.has_dot(x, y)) xmax = x;
    if (xmax == 0) {
      dp.pi[j - 1] = j;
      dp.col[j] = +1;
    } else {
      dp.pi[j - 1] = trip_from_north(d, xmax, y);
    }
  }
  Subset seen(dp.pi.begin(), dp.pi.end());
  if (sorted(seen) != complement_of({}, d.n))
    throw structure_error("chi: trips did not produce a permutation");
  return dp;
}

LeDiagram chi_inverse(const DecoratedPermutation& dp) {
  GrassmannNecklace neck = decperm_to_necklace(dp, -1);
  Subset I1 = neck.I.empty() ? Subset{} : neck.I[0];
  std::vector<LeDiagram> found;
  for (const auto& d : all_fillings(I1, dp.n()))
    if (chi(d) == dp) found.push_back(d);
  if (found.empty())
    throw structure_error(
        "chi_inverse: no Le-diagram with boundary " + subset_str(I1) +
        " maps to the given decorated permutation");
  if (found.size() > 1)
    throw structure_error("chi_inverse: chi is not injective here (bug)");
  return found[0];
}

LeDiagram lpm_le_diagram(const Subset& I, const Subset& J, int n) {
  Order nat = cyclic_order(n, 1);
  if (!gale_leq(I, J, nat)) throw input_error("lpm_le_diagram: need I <= J");
  LeDiagram d = diagram_of_shape(I, n);
  int k = d.k;
  for (int x = 1; x <= k; ++x) {
    int cx = (n - k) - J[x - 1] + x;  // columns west of the J-path in row x
    for (int y = cx + 1; y <= d.rows[x - 1]; ++y) d.dot[x - 1][y - 1] = 1;
  }
  validate_le(d);
  return d;
}

bool is_lpm_diagram(const LeDiagram& d) {
  for (int x = 1; x <= d.k; ++x)
    for (int y = 1; y <= d.rows[x - 1]; ++y) {
      if (!d.has_dot(x, y)) continue;
      if (d.in_shape(x + 1, y) && !d.has_dot(x + 1, y)) return false;
      if (d.in_shape(x, y + 1) && !d.has_dot(x, y + 1)) return false;
    }
  return true;
}

std::string plucker_str(const PluckerIndex& idx) {
  std::ostringstream os;
  os << "D{";
  for (size_t i = 0; i < idx.X.size(); ++i) {
    if (i) os << ',';
    os << idx.X[i];
  }
  os << '|';
  for (size_t i = 0; i < idx.Y.size(); ++i) {
    if (i) os << ',';
    os << idx.Y[i];
  }
  os << '}';
  return os.str();
}

Subset plucker_resolve(const PluckerIndex& idx, const Subset& I, int n) {
  int k = (int)I.size();
  if (idx.X.size() != idx.Y.size())
    throw input_error("plucker_resolve: |X| != |Y| in " + plucker_str(idx));
  Subset comp = complement_of(I, n);
  std::reverse(comp.begin(), comp.end());  // j_1 > ... > j_{n-k}
  Subset drop, add;
  for (int x : idx.X) {
    if (x < 1 || x > k)
      throw input_error("plucker_resolve: row index out of range in " +
                        plucker_str(idx));
    drop.push_back(I[x - 1]);
  }
  for (int y : idx.Y) {
    if (y < 1 || y > n - k)
      throw input_error("plucker_resolve: column index out of range in " +
                        plucker_str(idx));
    add.push_back(comp[y - 1]);
  }
  return set_union(set_minus(I, sorted(drop)), sorted(add));
}

PluckerIndex plucker_index_of_subset(const Subset& K, const Subset& I, int n) {
  if (K.size() != I.size())
    throw input_error("plucker_index_of_subset: |K| != k");
  Subset comp = complement_of(I, n);
  std::reverse(comp.begin(), comp.end());
  PluckerIndex idx;
  for (int x = 1; x <= (int)I.size(); ++x)
    if (!contains(K, I[x - 1])) idx.X.push_back(x);
  for (int y = 1; y <= (int)comp.size(); ++y)
    if (contains(K, comp[y - 1])) idx.Y.push_back(y);
  idx.Y = sorted(idx.Y);
  if (plucker_resolve(idx, I, n) != K)
    throw input_error("plucker_index_of_subset: " + subset_str(K) +
                      " does not resolve over I = " + subset_str(I));
  return idx;
}

std::vector<PluckerIndex> all_plucker_indices(int k, int nk) {
  std::vector<PluckerIndex> out;
  for (int r = 0; r <= std::min(k, nk); ++r)
    for (const auto& X : all_subsets(k, r))
      for (const auto& Y : all_subsets(nk, r)) out.push_back({X, Y});
  return out;
}

}  // namespace tng
