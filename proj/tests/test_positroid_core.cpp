#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tng/io.hpp"
#include "tng/lediagram.hpp"
#include "tng/positroid.hpp"

using namespace tng;

TEST_CASE("gale order basics") {
  Order nat = cyclic_order(4, 1);
  CHECK(gale_leq({1, 2}, {1, 3}, nat));
  CHECK(!gale_leq({1, 3}, {1, 2}, nat));
  CHECK(gale_leq({2, 4}, {2, 4}, nat));

  // n=4, t=2 gives the order 2<3<4<1; check A={2,3} <= B={1,4} against the
  // explicit order table.
  Order o2 = cyclic_order(4, 2);
  CHECK(o2.rank(2) == 0);
  CHECK(o2.rank(3) == 1);
  CHECK(o2.rank(4) == 2);
  CHECK(o2.rank(1) == 3);
  // sorted under <_2: A=(2,3), B=(4,1); 2<=4 and 3<=1 under <_2.
  CHECK(gale_leq({2, 3}, {1, 4}, o2));

  CHECK_THROWS_AS(gale_leq({1}, {1, 2}, nat), input_error);
}

TEST_CASE("gale order is a partial order (n <= 5, all orders)") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto subs = all_subsets(n, k);
      for (const auto& w : all_perms(n)) {
        Order ord = order_of_perm(w);
        for (const auto& a : subs) {
          CHECK(gale_leq(a, a, ord));
          for (const auto& b : subs) {
            if (a != b && gale_leq(a, b, ord)) CHECK(!gale_leq(b, a, ord));
            for (const auto& c : subs)
              if (gale_leq(a, b, ord) && gale_leq(b, c, ord))
                CHECK(gale_leq(a, c, ord));
          }
        }
      }
    }
  }
}

TEST_CASE("is_matroid") {
  GroundParams p{4, 2};
  CHECK(is_matroid(all_subsets(4, 2), p));
  CHECK(!is_matroid({{1, 2}, {3, 4}}, p));
  CHECK(is_matroid({{1, 2}}, p));
}

TEST_CASE("schubert_matroid") {
  GroundParams p{4, 2};
  Order nat = cyclic_order(4, 1);
  CHECK(schubert_matroid({1, 2}, nat, p).bases == all_subsets(4, 2));
  CHECK(schubert_matroid({3, 4}, nat, p).bases ==
        std::vector<Subset>{{3, 4}});
  CHECK(schubert_matroid({2, 3}, nat, p).bases ==
        std::vector<Subset>{{2, 3}, {2, 4}, {3, 4}});
}

TEST_CASE("necklace of matroid") {
  Positroid u24{{4, 2}, all_subsets(4, 2)};
  GrassmannNecklace neck = necklace_of_matroid(u24);
  CHECK(neck.I == std::vector<Subset>{{1, 2}, {2, 3}, {3, 4}, {1, 4}});

  Positroid single{{4, 2}, {{1, 2}}};
  CHECK(necklace_of_matroid(single).I ==
        std::vector<Subset>{{1, 2}, {1, 2}, {1, 2}, {1, 2}});

  Positroid s = schubert_matroid({2, 3}, cyclic_order(4, 1), {4, 2});
  CHECK(necklace_of_matroid(s).I[0] == Subset{2, 3});

  Positroid bad{{4, 2}, {{1, 2}, {3, 4}}};
  CHECK_THROWS_AS(necklace_of_matroid(bad), structure_error);
}

TEST_CASE("positroid_of_necklace") {
  Positroid u24{{4, 2}, all_subsets(4, 2)};
  GrassmannNecklace neck = necklace_of_matroid(u24);
  CHECK(positroid_of_necklace(neck).bases == u24.bases);

  GrassmannNecklace constant{4, 2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}}};
  // i=1 in I_1 and I_2 = I_1 is legal (j = i); same at i=2.
  Positroid m = positroid_of_necklace(constant);
  CHECK(contains(Subset{}, 0) == false);
  CHECK(std::find(m.bases.begin(), m.bases.end(), Subset{1, 2}) !=
        m.bases.end());
  // Necklace membership: exactly those H with I_t <=_t H for all t; for the
  // constant necklace, H must contain 1 and 2 (H >=_2 {1,2} forces 1 in H,
  // H >=_1 and >=_2 force 2). Brute-check against direct Gale evaluation.
  std::vector<Subset> expect;
  for (const auto& h : all_subsets(4, 2)) {
    bool ok = true;
    for (int t = 1; t <= 4; ++t)
      ok = ok && gale_leq({1, 2}, h, cyclic_order(4, t));
    if (ok) expect.push_back(h);
  }
  CHECK(m.bases == expect);
  CHECK(m.bases == std::vector<Subset>{{1, 2}});
}

TEST_CASE("necklace round trip over all decorated permutations, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& dp : all_decperms(n)) {
      GrassmannNecklace neck = decperm_to_necklace(dp, -1);
      CHECK(necklace_to_decperm(neck) == dp);
      Positroid m = positroid_of_necklace(neck);
      if (neck.k >= 1 && neck.k <= n) {
        GrassmannNecklace back = necklace_of_matroid(m);
        CHECK(back == neck);
      }
    }
  }
}

TEST_CASE("necklace to decperm examples") {
  GrassmannNecklace neck{4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}};
  DecoratedPermutation dp = necklace_to_decperm(neck);
  CHECK(dp.pi == Perm{3, 4, 1, 2});
  CHECK(dp.col.empty());

  DecoratedPermutation id3;
  id3.pi = {1, 2, 3};
  id3.col = {{1, -1}, {2, -1}, {3, -1}};
  GrassmannNecklace c3 = decperm_to_necklace(id3, 3);
  for (const auto& I : c3.I) CHECK(I == Subset{1, 2, 3});
}

TEST_CASE("boundary labels") {
  // Full 2x2 in Gr(2,4): rows 1,2; columns carry 4,3 (largest complement
  // label on column 1).
  LeDiagram d = full_diagram({1, 2}, 4);
  CHECK(boundary_I(d) == Subset{1, 2});
  CHECK(row_label(d, 1) == 1);
  CHECK(row_label(d, 2) == 2);
  CHECK(col_label(d, 1) == 4);
  CHECK(col_label(d, 2) == 3);

  // Column label equals the y-th largest complement element, any shape n<=6.
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& I : all_subsets(n, k)) {
        LeDiagram s = diagram_of_shape(I, n);
        CHECK(boundary_I(s) == I);
        Subset comp = complement_of(I, n);
        std::reverse(comp.begin(), comp.end());
        for (int y = 1; y <= n - k; ++y) CHECK(col_label(s, y) == comp[y - 1]);
      }
}

TEST_CASE("le property validation") {
  LeDiagram d = full_diagram({1, 2}, 4);
  d.dot[1][1] = 0;  // dots at (1,2),(2,1) but not (2,2)
  CHECK_THROWS_AS(validate_le(d), structure_error);
}

TEST_CASE("chi fixtures") {
  // Full 2x2.
  DecoratedPermutation dp = chi(full_diagram({1, 2}, 4));
  CHECK(dp.pi == Perm{3, 4, 1, 2});
  CHECK(dp.col.empty());

  // Empty 1x1 diagram, k=1, n=2: both fixed; vertical step (row) gets -1.
  LeDiagram empty11 = diagram_of_shape({1}, 2);
  DecoratedPermutation e = chi(empty11);
  CHECK(e.pi == Perm{1, 2});
  CHECK(e.col.at(1) == -1);
  CHECK(e.col.at(2) == +1);

  // Single dot at (1,1), k=1, n=2.
  LeDiagram one = full_diagram({1}, 2);
  CHECK(chi(one).pi == Perm{2, 1});
}

TEST_CASE("chi matches the necklace of the cell (n <= 5)") {
  // decperm_to_necklace(chi(D)) must be a valid necklace whose positroid has
  // necklace-minimum I_1 = boundary of D. (Full positroid cross-check against
  // path enumeration lives in the le-network tests.)
  for (int n = 1; n <= 5; ++n)
    for (const auto& d : all_diagrams(n)) {
      DecoratedPermutation dp = chi(d);
      GrassmannNecklace neck = decperm_to_necklace(dp, -1);
      CHECK(neck.k == d.k);
      if (d.k > 0) CHECK(neck.I[0] == boundary_I(d));
    }
}

TEST_CASE("chi_inverse") {
  DecoratedPermutation dp;
  dp.pi = {3, 4, 1, 2};
  CHECK(chi_inverse(dp) == full_diagram({1, 2}, 4));

  DecoratedPermutation idplus;
  idplus.pi = {1, 2, 3};
  idplus.col = {{1, 1}, {2, 1}, {3, 1}};
  LeDiagram d = chi_inverse(idplus);
  CHECK(d.k == 0);
  CHECK(d.num_dots() == 0);

  for (int n = 1; n <= 5; ++n)
    for (const auto& dd : all_diagrams(n)) CHECK(chi_inverse(chi(dd)) == dd);
}

TEST_CASE("lattice path matroids") {
  GroundParams p{4, 2};
  CHECK(lattice_path_matroid({1, 2}, {3, 4}, p).bases == all_subsets(4, 2));
  CHECK(lattice_path_matroid({1, 3}, {1, 3}, p).bases ==
        std::vector<Subset>{{1, 3}});
  CHECK_THROWS_AS(lattice_path_matroid({2, 3}, {1, 4}, p), input_error);

  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k)
      for (const auto& I : all_subsets(n, k))
        for (const auto& J : all_subsets(n, k)) {
          if (!gale_leq(I, J, cyclic_order(n, 1))) continue;
          LeDiagram d = lpm_le_diagram(I, J, n);
          CHECK(is_lpm_diagram(d));
          CHECK(chi(d) == lpm_decperm(I, J, n));
          Positroid lp = lattice_path_matroid(I, J, {n, k});
          GrassmannNecklace neck = decperm_to_necklace(chi(d), k);
          CHECK(positroid_of_necklace(neck).bases == lp.bases);
          // LPMs are positroids: the necklace round-trips.
          CHECK(necklace_of_matroid(lp) == neck);
        }
}

TEST_CASE("plucker_resolve") {
  Subset I{1, 2};
  CHECK(plucker_resolve({{}, {}}, I, 4) == Subset{1, 2});
  CHECK(plucker_resolve({{1}, {1}}, I, 4) == Subset{2, 4});
  CHECK(plucker_resolve({{1, 2}, {1, 2}}, I, 4) == Subset{3, 4});
  CHECK(plucker_resolve({{2}, {2}}, I, 4) == Subset{1, 3});
  CHECK_THROWS_AS(plucker_resolve({{3}, {1}}, I, 4), input_error);
  CHECK_THROWS_AS(plucker_resolve({{1}, {1, 2}}, I, 4), input_error);

  // Injectivity for fixed rank.
  for (int r = 0; r <= 2; ++r) {
    std::vector<Subset> seen;
    for (const auto& X : all_subsets(2, r))
      for (const auto& Y : all_subsets(2, r))
        seen.push_back(plucker_resolve({X, Y}, I, 4));
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
}

TEST_CASE("text and json round trips") {
  LeDiagram d = parse_le_diagram("DD\nDD");
  CHECK(d == full_diagram({1, 2}, 4));
  CHECK(parse_le_diagram(render_le_diagram(d)) == d);
  CHECK(parse_le_diagram("2 5\nDD\n.D") ==
        le_diagram_from_json(le_diagram_to_json(parse_le_diagram("2 5\nDD\n.D"))));
  CHECK_THROWS_WITH_AS(parse_le_diagram("DX\nDD"),
                       "parse error at line 1, col 2: expected 'D' or '.', got 'X'",
                       input_error);

  DecoratedPermutation dp = parse_decperm("1 3 2\ncol: {1:-1}");
  CHECK(dp.pi == Perm{1, 3, 2});
  CHECK(dp.col.at(1) == -1);
  CHECK(parse_decperm(render_decperm(dp)) == dp);
  CHECK(decperm_from_json(decperm_to_json(dp)) == dp);
  CHECK_THROWS_AS(parse_decperm("1 3 2"), input_error);  // missing color
  CHECK_THROWS_AS(parse_decperm("1 1 2"), input_error);

  GrassmannNecklace neck = parse_necklace("{1,2} {2,3} {3,4} {1,4}");
  CHECK(neck.I[1] == Subset{2, 3});
  CHECK(parse_necklace(render_necklace(neck)) == neck);
  CHECK(necklace_from_json(necklace_to_json(neck)) == neck);
  CHECK_THROWS_AS(parse_necklace("{1,2} {1,3}"), structure_error);
}
