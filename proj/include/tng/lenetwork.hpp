#pragma once

#include <nlohmann/json.hpp>

#include "tng/laurent.hpp"
#include "tng/lediagram.hpp"

namespace tng {

// Directed Gamma-network of a Le-diagram. Every line crossing carries a dot
// (that is exactly the Le-property), so vertices are the dots plus the n
// boundary vertices. Horizontal edges point west, vertical edges south; the
// horizontal edge whose west endpoint is dot (x,y) carries the symbol of that
// dot, all other edges weight 1. Sources are the row labels I(lambda), sinks
// the column labels.
class LeNetwork {
 public:
  struct Edge {
    int to;
    int sym;  // -1 for weight 1
  };

  explicit LeNetwork(const LeDiagram& d);

  const LeDiagram& diagram() const { return d_; }
  const Subset& boundary() const { return I_; }
  int num_symbols() const { return (int)sym_names_.size(); }
  const std::vector<std::string>& symbol_names() const { return sym_names_; }
  const std::vector<std::pair<int, int>>& dots() const { return dots_; }
  int symbol_of_dot(int x, int y) const;

  // Sum over vertex-disjoint path families from sources {i_x : x in X} to
  // sinks {labels of columns Y}; memoized.
  const LaurentPoly& plucker(const PluckerIndex& idx) const;
  // Number of vertex-disjoint families, counting at most `cap`.
  long long family_count(const PluckerIndex& idx, long long cap) const;
  bool is_nonzero(const PluckerIndex& idx) const;
  bool is_unique_path(const PluckerIndex& idx) const;
  int rank_of_cell() const;

  // All indices (X,Y) for this shape's ambient k x (n-k) grid.
  std::vector<PluckerIndex> all_indices() const;
  // Resolved k-subsets with nonzero path polynomial.
  std::vector<Subset> nonzero_subsets() const;

  // k x n boundary measurement matrix: A_I = Id, a_{rj} = (-1)^s M_{i_r, j}
  // with s = #elements of I strictly between i_r and j.
  std::vector<std::vector<LaurentPoly>> boundary_matrix() const;
  // Maximal minor of the boundary matrix on column set K (ascending).
  LaurentPoly boundary_minor(const Subset& K) const;

  nlohmann::json to_json() const;

 private:
  int vertex_of_boundary(int label) const { return (int)dots_.size() + label - 1; }

  LeDiagram d_;
  Subset I_;
  std::vector<std::pair<int, int>> dots_;
  std::map<std::pair<int, int>, int> dot_id_;
  std::vector<std::string> sym_names_;
  std::vector<std::vector<Edge>> out_;  // indexed by vertex
  std::vector<int> sources_, sinks_;    // boundary labels
  mutable std::map<PluckerIndex, LaurentPoly> cache_;
};

// Monomial expressions of the edge symbols in a unique-path basis.
struct WeightSolution {
  std::vector<PluckerIndex> basis;  // as given, including D{|}
  // expo[s][j] = exponent of basis[j] in the monomial for edge symbol s.
  std::vector<std::vector<long long>> expo;
};

// Requires every basis element unique-path and |basis| = d+1 including D{|};
// throws verify_error otherwise (rank deficiency, non-integral solution).
WeightSolution solve_weights_from_basis(const std::vector<PluckerIndex>& basis,
                                        const LeNetwork& net);

// Substitute the solved monomials into plucker(idx); result is a Laurent
// polynomial over one symbol per basis element.
LaurentPoly expand_in_basis(const PluckerIndex& idx, const WeightSolution& sol,
                            const LeNetwork& net);

std::vector<std::string> basis_symbol_names(const WeightSolution& sol);

}  // namespace tng
