#pragma once

#include "tng/positroid.hpp"

namespace tng {

// Young shape inside a k x (n-k) grid plus dots, row 1 topmost, column 1
// leftmost. rows has exactly k entries (weakly decreasing, possibly 0).
struct LeDiagram {
  int k = 0;
  int n = 0;
  std::vector<int> rows;
  std::vector<std::vector<char>> dot;  // dot[x-1] has rows[x-1] entries

  bool in_shape(int x, int y) const {
    return x >= 1 && x <= k && y >= 1 && y <= rows[x - 1];
  }
  bool has_dot(int x, int y) const {
    return in_shape(x, y) && dot[x - 1][y - 1];
  }
  int num_dots() const;
  bool operator==(const LeDiagram& o) const {
    return k == o.k && n == o.n && rows == o.rows && dot == o.dot;
  }
};

// Throws input_error if shape/dot dimensions are inconsistent; throws
// structure_error naming the witness triple if the Le-property fails.
void validate_le(const LeDiagram& d);

// Boundary path labels. Row x's vertical step: x + (n-k) - rows[x-1].
// Column y's horizontal step: (n-k-y+1) + #{x : rows[x-1] >= y}.
int row_label(const LeDiagram& d, int x);
int col_label(const LeDiagram& d, int y);
Subset boundary_I(const LeDiagram& d);  // = I(lambda)

// Shape from a boundary subset: row x has #{complement elements > i_x} boxes.
LeDiagram diagram_of_shape(const Subset& I, int n);  // no dots
LeDiagram full_diagram(const Subset& I, int n);      // all boxes dotted

std::vector<LeDiagram> all_fillings(const Subset& I, int n);  // Le-valid only
std::vector<LeDiagram> all_diagrams(int n);  // all k, all shapes, Le-valid

// Rules of the road.
DecoratedPermutation chi(const LeDiagram& d);
// Filtered enumeration over Le-valid fillings of the shape of I_1.
LeDiagram chi_inverse(const DecoratedPermutation& dp);

// Le-diagram of LP_{I,J}: shape of I, dots strictly east of the J-path.
LeDiagram lpm_le_diagram(const Subset& I, const Subset& J, int n);
bool is_lpm_diagram(const LeDiagram& d);

// Plucker variable Delta_{X,Y}; X rows of I to drop, Y columns to add, with
// the complement enumerated descending (j_1 > ... > j_{n-k}).
struct PluckerIndex {
  Subset X, Y;
  int rank() const { return (int)X.size(); }
  bool operator==(const PluckerIndex& o) const { return X == o.X && Y == o.Y; }
  bool operator<(const PluckerIndex& o) const {
    return X != o.X ? X < o.X : Y < o.Y;
  }
};

std::string plucker_str(const PluckerIndex& idx);  // "D{1,3|2,4}", "D{|}"
Subset plucker_resolve(const PluckerIndex& idx, const Subset& I, int n);
// Inverse of plucker_resolve on k-subsets.
PluckerIndex plucker_index_of_subset(const Subset& K, const Subset& I, int n);
// All (X,Y) pairs with |X|=|Y| for a k x (n-k) ambient grid.
std::vector<PluckerIndex> all_plucker_indices(int k, int nk);

}  // namespace tng
