#include "tancone/poly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "tancone/errors.hpp"

namespace tancone {

std::uint64_t total_degree(const Exponents& e) {
  return std::uint64_t{e[0]} + e[1] + e[2] + e[3];
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Poly Poly::constant(const Coeff& c) { return monomial(Exponents{}, c); }

Poly Poly::monomial(const Exponents& e, const Coeff& c) {
  Poly p;
  p.add_term(e, c);
  return p;
}

Poly Poly::variable(int index, std::uint32_t power) {
  if (index < 1 || index > 4) throw Error(Reason::InputError, "variable index out of range");
  Exponents e{};
  e[index - 1] = power;
  return monomial(e);
}

void Poly::add_term(const Exponents& e, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Coeff& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::pow(std::uint32_t k) const {
  Poly r = constant(1), base = *this;
  while (k) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

std::uint64_t Poly::min_degree() const {
  if (is_zero()) throw Error(Reason::DomainError, "degree of zero polynomial");
  return total_degree(terms_.rbegin()->first);
}

std::uint64_t Poly::max_degree() const {
  if (is_zero()) throw Error(Reason::DomainError, "degree of zero polynomial");
  return total_degree(terms_.begin()->first);
}

std::optional<std::uint64_t> Poly::homogeneous_degree() const {
  if (is_zero()) return std::nullopt;
  auto hi = max_degree();
  if (hi != min_degree()) return std::nullopt;
  return hi;
}

bool Poly::has_constant_term() const {
  return !is_zero() && total_degree(terms_.rbegin()->first) == 0;
}

Coeff Poly::leading_coefficient() const {
  return is_zero() ? Coeff{0} : terms_.begin()->second;
}

std::map<std::int64_t, Coeff> Poly::substitute_weights(const std::array<std::int64_t, 4>& w) const {
  std::map<std::int64_t, Coeff> out;
  for (const auto& [e, c] : terms_) {
    std::int64_t d = 0;
    for (int i = 0; i < 4; ++i) d += static_cast<std::int64_t>(e[i]) * w[i];
    auto& slot = out[d];
    slot += c;
    if (slot == 0) out.erase(d);
  }
  return out;
}

static std::string monomial_text(const Exponents& e) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coeff mag = c < 0 ? Coeff(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    std::string mono = monomial_text(e);
    if (mono.empty())
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + "*" + mono;
  }
  return out;
}

Poly lowest_degree_form(const Poly& f) {
  if (f.is_zero()) throw Error(Reason::DomainError, "lowest form of zero polynomial");
  auto d = f.min_degree();
  Poly r;
  for (const auto& [e, c] : f.terms())
    if (total_degree(e) == d) r.add_term(e, c);
  return r;
}

std::optional<std::uint64_t> is_homogeneous(const Poly& f) {
  if (f.is_zero()) throw Error(Reason::DomainError, "homogeneity of zero polynomial");
  return f.homogeneous_degree();
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  PolyMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= rows_ || cols[j] >= cols_)
        throw Error(Reason::InputError, "submatrix index out of range");
      m(i, j) = (*this)(rows[i], cols[j]);
    }
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(Reason::DimensionMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  PolyMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Poly acc;
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k) * b(k, j);
      r(i, j) = std::move(acc);
    }
  return r;
}

// Laplace expansion along successive rows, memoized over column subsets.
Poly determinant(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(Reason::DimensionMismatch, "determinant of non-square matrix");
  if (n == 0) return Poly::constant(1);
  if (n > 16) throw Error(Reason::InputError, "matrix too large for cofactor expansion");
  std::vector<Poly> det(std::size_t{1} << n);
  det[0] = Poly::constant(1);
  for (std::uint32_t mask = 1; mask < det.size(); ++mask) {
    const std::size_t row = std::popcount(mask) - 1;
    Poly acc;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      const Poly& a = m(row, j);
      const Poly& sub = det[mask & ~(1u << j)];
      if (!a.is_zero() && !sub.is_zero()) {
        Poly t = a * sub;
        if ((row + pos) % 2) acc -= t; else acc += t;
      }
      ++pos;
    }
    det[mask] = std::move(acc);
  }
  return det.back();
}

Poly minor(const PolyMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw Error(Reason::InputError, "minor needs equal index set sizes");
  auto check = [](std::span<const std::size_t> idx, std::size_t bound) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= bound) throw Error(Reason::InputError, "minor index out of range");
      for (std::size_t j = 0; j < i; ++j)
        if (idx[j] == idx[i]) throw Error(Reason::InputError, "repeated minor index");
    }
  };
  check(rows, m.rows());
  check(cols, m.cols());
  return determinant(m.submatrix(rows, cols));
}

bool all_minors_vanish(const PolyMatrix& m, std::size_t k) {
  if (k > std::min(m.rows(), m.cols())) return true;
  for (const auto& rs : combinations(m.rows(), k))
    for (const auto& cs : combinations(m.cols(), k))
      if (!minor(m, rs, cs).is_zero()) return false;
  return true;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> removed) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) out.push_back(i);
  return out;
}

Poly Factor::base() const {
  Poly p = Poly::monomial(plus);
  if (kind == Kind::Binomial) p -= Poly::monomial(minus);
  return p;
}

FactoredPoly::FactoredPoly(int sign, std::vector<Factor> factors)
    : sign_(sign < 0 ? -1 : 1), factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (f.kind != Factor::Kind::Binomial) continue;
    if (f.plus == f.minus) throw Error(Reason::InputError, "binomial factor is zero");
    for (int i = 0; i < 4; ++i)
      if (f.plus[i] && f.minus[i])
        throw Error(Reason::InputError, "binomial factor " + f.base().to_string() + " is not primitive");
  }
}

Poly FactoredPoly::expand() const {
  Poly p = Poly::constant(sign_);
  for (const auto& f : factors_) p *= f.base().pow(f.power);
  return p;
}

std::string FactoredPoly::to_string() const {
  std::string out = sign_ < 0 ? "-" : "";
  bool first = true;
  for (const auto& f : factors_) {
    if (!first) out += "*";
    first = false;
    std::string b = f.base().to_string();
    if (f.kind == Factor::Kind::Binomial || (f.power > 1 && b.find('*') != std::string::npos))
      b = "(" + b + ")";
    out += b;
    if (f.power > 1) out += "^" + std::to_string(f.power);
  }
  if (first) out += "1";
  return out;
}

static std::array<bool, 4> monomial_support(const FactoredPoly& p) {
  std::array<bool, 4> s{};
  for (const auto& f : p.factors())
    if (f.kind == Factor::Kind::Monomial && f.power > 0)
      for (int i = 0; i < 4; ++i) s[i] = s[i] || f.plus[i] > 0;
  return s;
}

CoprimeVerdict structurally_coprime(const FactoredPoly& a, const FactoredPoly& b) {
  CoprimeVerdict v;
  auto sa = monomial_support(a), sb = monomial_support(b);
  for (int i = 0; i < 4; ++i)
    if (sa[i] && sb[i]) {
      v.coprime = false;
      v.detail = "x" + std::to_string(i + 1) + " divides both";
      return v;
    }
  for (const auto& fa : a.factors()) {
    if (fa.kind != Factor::Kind::Binomial || fa.power == 0) continue;
    for (const auto& fb : b.factors()) {
      if (fb.kind != Factor::Kind::Binomial || fb.power == 0) continue;
      bool same = fa.plus == fb.plus && fa.minus == fb.minus;
      bool opposite = fa.plus == fb.minus && fa.minus == fb.plus;
      if (same || opposite) {
        v.coprime = false;
        v.detail = "common binomial factor " + fa.base().to_string();
        return v;
      }
      bool share = false;
      for (int i = 0; i < 4; ++i) {
        bool in_a = fa.plus[i] || fa.minus[i];
        bool in_b = fb.plus[i] || fb.minus[i];
        share = share || (in_a && in_b);
      }
      if (share) {
        v.flagged = true;
        if (!v.detail.empty()) v.detail += "; ";
        v.detail += "binomials " + fa.base().to_string() + " and " + fb.base().to_string() +
                    " share variables (non-proportional)";
      }
    }
  }
  return v;
}

}  // namespace tancone
