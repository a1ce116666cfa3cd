#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tancone {

using Coeff = boost::multiprecision::cpp_int;
using Exponents = std::array<std::uint32_t, 4>;

std::uint64_t total_degree(const Exponents& e);

// Descending graded-lex with x1 > x2 > x3 > x4.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class Poly {
 public:
  using Terms = std::map<Exponents, Coeff, GrlexGreater>;

  Poly() = default;
  static Poly constant(const Coeff& c);
  static Poly monomial(const Exponents& e, const Coeff& c = 1);
  // x_index^power with index in 1..4.
  static Poly variable(int index, std::uint32_t power = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  void add_term(const Exponents& e, const Coeff& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Coeff& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Coeff& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(std::uint32_t k) const;

  std::uint64_t min_degree() const;
  std::uint64_t max_degree() const;
  // Degree when every term shares it; nullopt for inhomogeneous (and for zero).
  std::optional<std::uint64_t> homogeneous_degree() const;
  bool has_constant_term() const;
  // Coefficient of the grlex-leading term (0 for the zero polynomial).
  Coeff leading_coefficient() const;

  // Image under x_j -> t^{w_j}, as exponent -> coefficient (zero entries dropped).
  std::map<std::int64_t, Coeff> substitute_weights(const std::array<std::int64_t, 4>& w) const;

  // Canonical rendering, e.g. "-x1*x3 + x2^2"; "0" for zero.
  std::string to_string() const;

 private:
  Terms terms_;
};

// Lowest-degree homogeneous summand; throws DomainError on zero.
Poly lowest_degree_form(const Poly& f);
std::optional<std::uint64_t> is_homogeneous(const Poly& f);

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  // Keeps the listed rows and columns (0-based, in the given order).
  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

Poly determinant(const PolyMatrix& m);
// Determinant of the submatrix on the kept rows/cols (0-based, equal sizes).
Poly minor(const PolyMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);
bool all_minors_vanish(const PolyMatrix& m, std::size_t k);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);
// Complement of `removed` in {0..n-1}.
std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> removed);

// Signed product of monomials and primitive binomials x^plus - x^minus.
struct Factor {
  enum class Kind { Monomial, Binomial };
  Kind kind = Kind::Monomial;
  Exponents plus{};
  Exponents minus{};
  std::uint32_t power = 1;

  Poly base() const;
};

class FactoredPoly {
 public:
  FactoredPoly() = default;
  // Throws InputError when a binomial factor is not primitive.
  FactoredPoly(int sign, std::vector<Factor> factors);

  int sign() const { return sign_; }
  const std::vector<Factor>& factors() const { return factors_; }
  Poly expand() const;
  std::string to_string() const;

 private:
  int sign_ = 1;
  std::vector<Factor> factors_;
};

struct CoprimeVerdict {
  bool coprime = true;
  // Distinct binomials sharing variables: non-proportional, irreducibility not claimed.
  bool flagged = false;
  std::string detail;
};

CoprimeVerdict structurally_coprime(const FactoredPoly& a, const FactoredPoly& b);

}  // namespace tancone
