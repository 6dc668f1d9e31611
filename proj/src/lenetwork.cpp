#include "tng/lenetwork.hpp"

#include <functional>

namespace tng {

LeNetwork::LeNetwork(const LeDiagram& d) : d_(d) {
  validate_le(d);
  I_ = boundary_I(d);
  for (int x = 1; x <= d.k; ++x)
    for (int y = 1; y <= d.rows[x - 1]; ++y)
      if (d.has_dot(x, y)) {
        dot_id_[{x, y}] = (int)dots_.size();
        dots_.push_back({x, y});
      }
  int nd = (int)dots_.size();
  for (int i = 0; i < nd; ++i) {
    auto [x, y] = dots_[i];
    if (nd <= 26) {
      sym_names_.push_back(std::string(1, (char)('a' + i)));
    } else {
      sym_names_.push_back("x(" + std::to_string(x) + "," + std::to_string(y) +
                           ")");
    }
  }
  out_.assign(nd + d.n, {});
  for (int i = 0; i < nd; ++i) {
    auto [x, y] = dots_[i];
    // Horizontal in-edge from the east, weighted by this dot's symbol.
    int east = -1;
    for (int y2 = y + 1; y2 <= d.rows[x - 1]; ++y2)
      if (d.has_dot(x, y2)) {
        east = dot_id_.at({x, y2});
        break;
      }
    int from = east >= 0 ? east : vertex_of_boundary(row_label(d, x));
    out_[from].push_back({i, i});
    // Vertical out-edge to the south, weight 1.
    int south = -1;
    for (int x2 = x + 1; x2 <= d.k; ++x2)
      if (d.has_dot(x2, y)) {
        south = dot_id_.at({x2, y});
        break;
      }
    int to = south >= 0 ? south : vertex_of_boundary(col_label(d, y));
    out_[i].push_back({to, -1});
  }
  for (int x = 1; x <= d.k; ++x) sources_.push_back(row_label(d, x));
  for (int y = 1; y <= d.n - d.k; ++y) sinks_.push_back(col_label(d, y));
}

int LeNetwork::symbol_of_dot(int x, int y) const {
  auto it = dot_id_.find({x, y});
  if (it == dot_id_.end())
    throw input_error("symbol_of_dot: no dot at (" + std::to_string(x) + "," +
                      std::to_string(y) + ")");
  return it->second;
}

namespace {

struct FamilyEnum {
  const std::vector<std::vector<LeNetwork::Edge>>* out;
  int nsyms;
  std::vector<int> source_vs;
  std::vector<char> is_sink;  // by vertex
  std::vector<char> used;
  // When counting, `poly` stays null and `count` accumulates up to cap.
  LaurentPoly* poly = nullptr;
  long long count = 0;
  long long cap = -1;

  bool done() const { return cap >= 0 && count >= cap; }

  void run(size_t si, LaurentPoly::Expo& expo) {
    if (done()) return;
    if (si == source_vs.size()) {
      if (poly)
        *poly = *poly + LaurentPoly::monomial(nsyms, expo, 1);
      ++count;
      return;
    }
    walk(source_vs[si], si, expo);
  }

  void walk(int v, size_t si, LaurentPoly::Expo& expo) {
    if (done()) return;
    used[v] = 1;
    if (is_sink[v]) {
      is_sink[v] = 0;
      run(si + 1, expo);
      is_sink[v] = 1;
    } else {
      for (const auto& e : (*out)[v]) {
        if (used[e.to]) continue;
        if (e.sym >= 0) ++expo[e.sym];
        walk(e.to, si, expo);
        if (e.sym >= 0) --expo[e.sym];
      }
    }
    used[v] = 0;
  }
};

}  // namespace

const LaurentPoly& LeNetwork::plucker(const PluckerIndex& idx) const {
  auto it = cache_.find(idx);
  if (it != cache_.end()) return it->second;
  if (idx.X.size() != idx.Y.size())
    throw input_error("plucker: |X| != |Y| in " + plucker_str(idx));
  // Resolution validity check (throws on out-of-range indices).
  plucker_resolve(idx, I_, d_.n);
  LaurentPoly poly(num_symbols());
  FamilyEnum fe;
  fe.out = &out_;
  fe.nsyms = num_symbols();
  for (int x : idx.X) fe.source_vs.push_back(vertex_of_boundary(row_label(d_, x)));
  fe.is_sink.assign(out_.size(), 0);
  for (int y : idx.Y) fe.is_sink[vertex_of_boundary(col_label(d_, y))] = 1;
  fe.used.assign(out_.size(), 0);
  fe.poly = &poly;
  LaurentPoly::Expo expo(num_symbols(), 0);
  fe.run(0, expo);
  return cache_.emplace(idx, std::move(poly)).first->second;
}

long long LeNetwork::family_count(const PluckerIndex& idx,
                                  long long cap) const {
  FamilyEnum fe;
  fe.out = &out_;
  fe.nsyms = num_symbols();
  for (int x : idx.X) fe.source_vs.push_back(vertex_of_boundary(row_label(d_, x)));
  fe.is_sink.assign(out_.size(), 0);
  for (int y : idx.Y) fe.is_sink[vertex_of_boundary(col_label(d_, y))] = 1;
  fe.used.assign(out_.size(), 0);
  fe.cap = cap;
  LaurentPoly::Expo expo(num_symbols(), 0);
  fe.run(0, expo);
  return fe.count;
}

bool LeNetwork::is_nonzero(const PluckerIndex& idx) const {
  auto it = cache_.find(idx);
  if (it != cache_.end()) return !it->second.is_zero();
  return family_count(idx, 1) > 0;
}

bool LeNetwork::is_unique_path(const PluckerIndex& idx) const {
  return family_count(idx, 2) == 1;
}

int LeNetwork::rank_of_cell() const {
  int best = 0;
  for (int r = std::min(d_.k, d_.n - d_.k); r >= 1; --r) {
    bool found = false;
    for (const auto& X : all_subsets(d_.k, r)) {
      for (const auto& Y : all_subsets(d_.n - d_.k, r))
        if (is_nonzero({X, Y})) {
          found = true;
          break;
        }
      if (found) break;
    }
    if (found) {
      best = r;
      break;
    }
  }
  return best;
}

std::vector<PluckerIndex> LeNetwork::all_indices() const {
  return all_plucker_indices(d_.k, d_.n - d_.k);
}

std::vector<Subset> LeNetwork::nonzero_subsets() const {
  std::vector<Subset> out;
  for (const auto& idx : all_indices())
    if (is_nonzero(idx)) out.push_back(plucker_resolve(idx, I_, d_.n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<LaurentPoly>> LeNetwork::boundary_matrix() const {
  int k = d_.k, n = d_.n, ns = num_symbols();
  std::vector<std::vector<LaurentPoly>> A(
      k, std::vector<LaurentPoly>(n, LaurentPoly(ns)));
  for (int r = 0; r < k; ++r) A[r][I_[r] - 1] = LaurentPoly::constant(ns, 1);
  // M_{ij}: sums over single paths from boundary i to boundary j.
  for (int r = 0; r < k; ++r) {
    int i = I_[r];
    std::function<void(int, LaurentPoly::Expo&)> dfs =
        [&](int v, LaurentPoly::Expo& expo) {
          if (v >= (int)dots_.size()) {
            int label = v - (int)dots_.size() + 1;
            if (label != i && !contains(I_, label)) {
              int s = 0;
              for (int e : I_)
                if ((i < e && e < label) || (label < e && e < i)) ++s;
              LaurentPoly m = LaurentPoly::monomial(ns, expo, 1);
              A[r][label - 1] =
                  A[r][label - 1] + (s % 2 ? -m : m);
            }
            if (v != vertex_of_boundary(i)) return;
          }
          for (const auto& e : out_[v]) {
            if (e.sym >= 0) ++expo[e.sym];
            dfs(e.to, expo);
            if (e.sym >= 0) --expo[e.sym];
          }
        };
    LaurentPoly::Expo expo(ns, 0);
    dfs(vertex_of_boundary(i), expo);
  }
  return A;
}

LaurentPoly LeNetwork::boundary_minor(const Subset& K) const {
  auto A = boundary_matrix();
  int k = d_.k, ns = num_symbols();
  if ((int)K.size() != k) throw input_error("boundary_minor: |K| != k");
  // det over permutations; the identity block keeps this small.
  std::vector<int> rows(k);
  std::iota(rows.begin(), rows.end(), 0);
  LaurentPoly det(ns);
  std::vector<int> perm(rows);
  std::sort(perm.begin(), perm.end());
  do {
    int sgn = 1;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) sgn = -sgn;
    LaurentPoly term = LaurentPoly::constant(ns, sgn);
    bool zero = false;
    for (int a = 0; a < k && !zero; ++a) {
      const LaurentPoly& entry = A[perm[a]][K[a] - 1];
      if (entry.is_zero())
        zero = true;
      else
        term = term * entry;
    }
    if (!zero) det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

nlohmann::json LeNetwork::to_json() const {
  nlohmann::json verts = nlohmann::json::array();
  for (size_t i = 0; i < dots_.size(); ++i)
    verts.push_back({{"id", i},
                     {"kind", "dot"},
                     {"x", dots_[i].first},
                     {"y", dots_[i].second}});
  for (int b = 1; b <= d_.n; ++b)
    verts.push_back({{"id", dots_.size() + b - 1},
                     {"kind", "boundary"},
                     {"label", b}});
  nlohmann::json edges = nlohmann::json::array();
  for (size_t v = 0; v < out_.size(); ++v)
    for (const auto& e : out_[v])
      edges.push_back({{"from", v},
                       {"to", e.to},
                       {"weight", e.sym >= 0 ? sym_names_[e.sym] : "1"}});
  return nlohmann::json{{"type", "le-network"},
                        {"k", d_.k},
                        {"n", d_.n},
                        {"symbols", sym_names_},
                        {"vertices", verts},
                        {"edges", edges}};
}

WeightSolution solve_weights_from_basis(const std::vector<PluckerIndex>& basis,
                                        const LeNetwork& net) {
  int d = net.num_symbols();
  if ((int)basis.size() != d + 1)
    throw verify_error("solve_weights_from_basis: basis size " +
                       std::to_string(basis.size()) + ", need d+1 = " +
                       std::to_string(d + 1));
  std::vector<std::vector<int>> rows;
  for (const auto& idx : basis) {
    if (!net.is_unique_path(idx))
      throw verify_error("solve_weights_from_basis: " + plucker_str(idx) +
                         " is not a unique-path variable");
    const LaurentPoly& p = net.plucker(idx);
    const auto& [e, c] = *p.terms().begin();
    if (c != 1)
      throw verify_error("solve_weights_from_basis: unexpected coefficient");
    rows.push_back(e);
  }
  WeightSolution sol;
  sol.basis = basis;
  auto coeffs = solve_monomial_exponents(rows, d);
  sol.expo = std::move(coeffs);
  return sol;
}

LaurentPoly expand_in_basis(const PluckerIndex& idx, const WeightSolution& sol,
                            const LeNetwork& net) {
  int d = net.num_symbols();
  int nb = (int)sol.basis.size();
  std::vector<LaurentPoly> values;
  for (int s = 0; s < d; ++s) {
    LaurentPoly::Expo e(nb, 0);
    for (int j = 0; j < nb; ++j) e[j] = (int)sol.expo[s][j];
    values.push_back(LaurentPoly::monomial(nb, e, 1));
  }
  return net.plucker(idx).substitute(values, nb);
}

std::vector<std::string> basis_symbol_names(const WeightSolution& sol) {
  std::vector<std::string> names;
  for (const auto& idx : sol.basis) names.push_back(plucker_str(idx));
  return names;
}

}  // namespace tng
