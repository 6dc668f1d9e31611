#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>

#include "tng/base.hpp"

namespace tng {

// Multivariate Laurent polynomial with exact integer coefficients over a
// frozen list of symbols. Exponent vectors are dense, one slot per symbol.
class LaurentPoly {
 public:
  using Expo = std::vector<int>;

  LaurentPoly() = default;
  explicit LaurentPoly(int nsyms) : nsyms_(nsyms) {}
  static LaurentPoly constant(int nsyms, long long c);
  static LaurentPoly monomial(int nsyms, const Expo& e, long long c = 1);
  static LaurentPoly symbol(int nsyms, int idx);

  int nsyms() const { return nsyms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool subtraction_free() const;  // all coefficients > 0
  size_t num_terms() const { return terms_.size(); }
  const std::map<Expo, long long>& terms() const { return terms_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const {
    return nsyms_ == o.nsyms_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Exact division; nullopt if the quotient is not a Laurent polynomial.
  std::optional<LaurentPoly> divided_by(const LaurentPoly& o) const;

  // Substitute symbol i by values[i] (a Laurent polynomial over another
  // symbol table); requires every symbol with a negative exponent to get a
  // monomial value.
  LaurentPoly substitute(const std::vector<LaurentPoly>& values,
                         int out_nsyms) const;

  // Evaluate at exact rationals.
  boost::multiprecision::cpp_rational eval_rational(
      const std::vector<boost::multiprecision::cpp_rational>& vals) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  void add_term(const Expo& e, long long c);
  int nsyms_ = 0;
  std::map<Expo, long long> terms_;
};

// Solve x1^a1 ... , expressing each of nsyms symbols as an integer-exponent
// monomial in the given monomials (rows of expo matrix). Returns for symbol i
// the vector of exponents over the input monomials, or throws verify_error if
// the exponent lattice does not allow an integral solution or is rank
// deficient.
std::vector<std::vector<long long>> solve_monomial_exponents(
    const std::vector<std::vector<int>>& expo_rows, int nsyms);

// Exact integer rank of a matrix (fraction-free elimination).
int integer_rank(std::vector<std::vector<long long>> m);

}  // namespace tng
