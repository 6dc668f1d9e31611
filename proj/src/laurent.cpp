#include "tng/laurent.hpp"

#include <sstream>

namespace tng {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw verify_error("integer overflow in polynomial arithmetic");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw verify_error("integer overflow in polynomial arithmetic");
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nsyms, long long c) {
  LaurentPoly p(nsyms);
  if (c != 0) p.terms_[Expo(nsyms, 0)] = c;
  return p;
}

LaurentPoly LaurentPoly::monomial(int nsyms, const Expo& e, long long c) {
  LaurentPoly p(nsyms);
  if ((int)e.size() != nsyms) throw input_error("monomial: bad exponent size");
  if (c != 0) p.terms_[e] = c;
  return p;
}

LaurentPoly LaurentPoly::symbol(int nsyms, int idx) {
  Expo e(nsyms, 0);
  e[idx] = 1;
  return monomial(nsyms, e, 1);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         terms_.begin()->first == Expo(nsyms_, 0);
}

bool LaurentPoly::subtraction_free() const {
  for (const auto& [e, c] : terms_)
    if (c <= 0) return false;
  return true;
}

void LaurentPoly::add_term(const Expo& e, long long c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_[e] = c;
  } else {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (nsyms_ != o.nsyms_) throw input_error("polynomial symbol tables differ");
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (nsyms_ != o.nsyms_) throw input_error("polynomial symbol tables differ");
  LaurentPoly r(nsyms_);
  Expo e(nsyms_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < nsyms_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, checked_mul(c1, c2));
    }
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divided_by(const LaurentPoly& o) const {
  if (nsyms_ != o.nsyms_) throw input_error("polynomial symbol tables differ");
  if (o.is_zero()) throw input_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly(nsyms_);
  // Strip monomial factors so both are honest polynomials with no common
  // monomial divisor, divide, then reattach the exponent shift.
  auto min_expo = [&](const LaurentPoly& p) {
    Expo m = p.terms_.begin()->first;
    for (const auto& [e, c] : p.terms_)
      for (int i = 0; i < p.nsyms_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
  };
  Expo mp = min_expo(*this), mq = min_expo(o);
  std::map<Expo, long long> P, Q;
  for (const auto& [e, c] : terms_) {
    Expo f = e;
    for (int i = 0; i < nsyms_; ++i) f[i] -= mp[i];
    P[f] = c;
  }
  for (const auto& [e, c] : o.terms_) {
    Expo f = e;
    for (int i = 0; i < nsyms_; ++i) f[i] -= mq[i];
    Q[f] = c;
  }
  LaurentPoly quot(nsyms_);
  // Repeated leading-term (lex order) elimination.
  std::map<Expo, long long> R = P;
  const auto& [qe, qc] = *Q.rbegin();
  while (!R.empty()) {
    const auto& [re, rc] = *R.rbegin();
    Expo d(nsyms_);
    for (int i = 0; i < nsyms_; ++i) {
      d[i] = re[i] - qe[i];
      if (d[i] < 0) return std::nullopt;
    }
    if (rc % qc != 0) return std::nullopt;
    long long cc = rc / qc;
    quot.add_term(d, cc);
    for (const auto& [e2, c2] : Q) {
      Expo f(nsyms_);
      for (int i = 0; i < nsyms_; ++i) f[i] = e2[i] + d[i];
      auto it = R.find(f);
      long long nv = checked_add(it == R.end() ? 0 : it->second,
                                 -checked_mul(cc, c2));
      if (nv == 0) {
        if (it != R.end()) R.erase(it);
      } else {
        R[f] = nv;
      }
    }
  }
  // Shift by mp - mq.
  LaurentPoly out(nsyms_);
  for (const auto& [e, c] : quot.terms_) {
    Expo f = e;
    for (int i = 0; i < nsyms_; ++i) f[i] += mp[i] - mq[i];
    out.terms_[f] = c;
  }
  return out;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& values,
                                    int out_nsyms) const {
  if ((int)values.size() != nsyms_)
    throw input_error("substitute: wrong number of values");
  LaurentPoly out(out_nsyms);
  for (const auto& [e, c] : terms_) {
    LaurentPoly term = LaurentPoly::constant(out_nsyms, c);
    for (int i = 0; i < nsyms_; ++i) {
      if (e[i] == 0) continue;
      LaurentPoly v = values[i];
      int p = e[i];
      if (p < 0) {
        if (!v.is_monomial())
          throw verify_error(
              "substitute: negative power of a non-monomial value");
        const auto& [ve, vc] = *v.terms_.begin();
        if (vc != 1 && vc != -1)
          throw verify_error("substitute: cannot invert coefficient " +
                             std::to_string(vc));
        Expo inv = ve;
        for (auto& x : inv) x = -x;
        v = LaurentPoly::monomial(out_nsyms, inv, vc);
        p = -p;
      }
      for (int j = 0; j < p; ++j) term = term * v;
    }
    out = out + term;
  }
  return out;
}

boost::multiprecision::cpp_rational LaurentPoly::eval_rational(
    const std::vector<boost::multiprecision::cpp_rational>& vals) const {
  using boost::multiprecision::cpp_rational;
  if ((int)vals.size() != nsyms_)
    throw input_error("eval_rational: wrong number of values");
  cpp_rational total = 0;
  for (const auto& [e, c] : terms_) {
    cpp_rational t = c;
    for (int i = 0; i < nsyms_; ++i) {
      if (e[i] == 0) continue;
      if (vals[i] == 0) throw input_error("eval_rational: zero value");
      cpp_rational base = vals[i];
      int p = e[i];
      if (p < 0) {
        base = 1 / base;
        p = -p;
      }
      for (int j = 0; j < p; ++j) t *= base;
    }
    total += t;
  }
  return total;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Canonical order: descending lex over exponent vectors.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    long long cc = c;
    if (first) {
      if (cc < 0) {
        os << '-';
        cc = -cc;
      }
    } else {
      os << (cc < 0 ? " - " : " + ");
      if (cc < 0) cc = -cc;
    }
    bool any = false;
    std::ostringstream mono;
    for (int i = 0; i < nsyms_; ++i) {
      if (e[i] == 0) continue;
      if (any) mono << '*';
      mono << names[i];
      if (e[i] != 1) mono << '^' << e[i];
      any = true;
    }
    if (!any) {
      os << cc;
    } else {
      if (cc != 1) os << cc << '*';
      os << mono.str();
    }
    first = false;
  }
  return os.str();
}

int integer_rank(std::vector<std::vector<long long>> m) {
  if (m.empty()) return 0;
  int rows = (int)m.size(), cols = (int)m[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      // Integer elimination via lcm scaling.
      long long a = m[rank][c], b = m[r][c];
      if (b == 0) continue;
      long long g = std::__gcd(std::abs(a), std::abs(b));
      long long fa = b / g, fb = a / g;
      for (int cc = 0; cc < cols; ++cc)
        m[r][cc] = checked_add(checked_mul(m[r][cc], fb),
                               -checked_mul(m[rank][cc], fa));
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<long long>> solve_monomial_exponents(
    const std::vector<std::vector<int>>& expo_rows, int nsyms) {
  // Solve, for each symbol s, sum_j c_j * expo_rows[j] = e_s with integer
  // c_j. Hermite-style: reduce the row lattice keeping the unimodular
  // transform, then back-substitute.
  int rows = (int)expo_rows.size();
  std::vector<std::vector<long long>> A(rows, std::vector<long long>(nsyms));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < nsyms; ++c) A[r][c] = expo_rows[r][c];
  // U tracks row operations: current A = U * original.
  std::vector<std::vector<long long>> U(rows, std::vector<long long>(rows, 0));
  for (int r = 0; r < rows; ++r) U[r][r] = 1;

  auto row_sub = [&](int dst, int src, long long f) {
    for (int c = 0; c < nsyms; ++c)
      A[dst][c] = checked_add(A[dst][c], -checked_mul(f, A[src][c]));
    for (int c = 0; c < rows; ++c)
      U[dst][c] = checked_add(U[dst][c], -checked_mul(f, U[src][c]));
  };

  int h = 0;  // current pivot row
  std::vector<int> pivot_col;
  for (int c = 0; c < nsyms && h < rows; ++c) {
    // Euclidean reduction within column c over rows h..end.
    while (true) {
      int nz = 0, idx = -1;
      long long best = 0;
      for (int r = h; r < rows; ++r)
        if (A[r][c] != 0) {
          ++nz;
          if (idx < 0 || std::abs(A[r][c]) < std::abs(best)) {
            idx = r;
            best = A[r][c];
          }
        }
      if (nz == 0) {
        idx = -1;
        break;
      }
      std::swap(A[h], A[idx]);
      std::swap(U[h], U[idx]);
      bool done = true;
      for (int r = h + 1; r < rows; ++r)
        if (A[r][c] != 0) {
          row_sub(r, h, A[r][c] / A[h][c]);
          if (A[r][c] != 0) done = false;
        }
      if (done) break;
    }
    if (h < rows && A[h][c] != 0) {
      pivot_col.push_back(c);
      ++h;
    }
  }
  int rank = h;
  if (rank != nsyms)
    throw verify_error("monomial solve: exponent matrix has integer rank " +
                       std::to_string(rank) + ", need " +
                       std::to_string(nsyms));

  std::vector<std::vector<long long>> out;
  for (int s = 0; s < nsyms; ++s) {
    // Solve sum_j y_j * A[j] = e_s over the triangularized rows, then map
    // back through U.
    std::vector<long long> target(nsyms, 0);
    target[s] = 1;
    std::vector<long long> y(rows, 0);
    for (int r = 0; r < rank; ++r) {
      int c = pivot_col[r];
      if (target[c] % A[r][c] != 0)
        throw verify_error(
            "monomial solve: no integral solution for symbol index " +
            std::to_string(s));
      long long f = target[c] / A[r][c];
      y[r] = f;
      for (int cc = 0; cc < nsyms; ++cc)
        target[cc] = checked_add(target[cc], -checked_mul(f, A[r][cc]));
    }
    for (int c = 0; c < nsyms; ++c)
      if (target[c] != 0)
        throw verify_error(
            "monomial solve: no integral solution for symbol index " +
            std::to_string(s));
    std::vector<long long> coeffs(rows, 0);
    for (int r = 0; r < rows; ++r)
      for (int j = 0; j < rows; ++j)
        coeffs[j] = checked_add(coeffs[j], checked_mul(y[r], U[r][j]));
    out.push_back(coeffs);
  }
  return out;
}

}  // namespace tng
