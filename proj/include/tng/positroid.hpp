#pragma once

#include <map>

#include "tng/base.hpp"

namespace tng {

struct GrassmannNecklace {
  int n = 0;
  int k = 0;
  std::vector<Subset> I;  // I[0] = I_1, ..., I[n-1] = I_n
  bool operator==(const GrassmannNecklace& o) const {
    return n == o.n && k == o.k && I == o.I;
  }
};

struct DecoratedPermutation {
  Perm pi;
  std::map<int, int> col;  // defined exactly on fixed points, values +1/-1
  int n() const { return (int)pi.size(); }
  bool operator==(const DecoratedPermutation& o) const {
    return pi == o.pi && col == o.col;
  }
};

struct Positroid {
  GroundParams p;
  std::vector<Subset> bases;  // sorted lexicographically
  bool operator==(const Positroid& o) const {
    return p.n == o.p.n && p.k == o.p.k && bases == o.bases;
  }
};

// Def 2.2, verbatim: unique maximal member for every total order (all n!).
bool is_matroid(const std::vector<Subset>& collection, const GroundParams& p);

// { H : I <=_w H }.
Positroid schubert_matroid(const Subset& I, const Order& ord,
                           const GroundParams& p);

// I_i = unique <=_i-minimal member; throws structure_error naming the shift
// where no unique minimum exists.
GrassmannNecklace necklace_of_matroid(const Positroid& m);

// Oh: bases = { H : I_t <=_t H for all t }.
Positroid positroid_of_necklace(const GrassmannNecklace& neck);

void validate_necklace(const GrassmannNecklace& neck);

DecoratedPermutation necklace_to_decperm(const GrassmannNecklace& neck);
GrassmannNecklace decperm_to_necklace(const DecoratedPermutation& dp, int k);
// k recovered from the I_r formula itself; helper computing it:
int decperm_rank(const DecoratedPermutation& dp);

// All decorated permutations of [n] (fixed points colored both ways).
std::vector<DecoratedPermutation> all_decperms(int n);

// Lattice path matroid LP_{I,J} = { H : I <= H <= J } in the natural order.
Positroid lattice_path_matroid(const Subset& I, const Subset& J,
                               const GroundParams& p);
DecoratedPermutation lpm_decperm(const Subset& I, const Subset& J, int n);

}  // namespace tng
