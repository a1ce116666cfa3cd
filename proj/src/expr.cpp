#include "tancone/expr.hpp"

#include <cctype>
#include <vector>

#include "tancone/errors.hpp"

namespace tancone {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const AlphaValues& alphas) : s_(text), a_(alphas) {}

  Poly parse_sum() {
    Poly acc;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      Poly t = parse_product();
      acc += sign < 0 ? -t : t;
      first = false;
      skip();
      if (peek() != '+' && peek() != '-') break;
    }
    return acc;
  }

  // Top level of a factored form: optional sign, then factors joined by '*'.
  FactoredPoly parse_factored() {
    // A bare sum such as "x3^a3-x2^a32*x4^a34" is one binomial factor.
    const std::size_t start = pos_;
    parse_sum();
    skip();
    bool single_product = true;
    {
      Parser probe(s_.substr(start), a_);
      probe.skip();
      if (probe.peek() == '-' || probe.peek() == '+') probe.get();
      probe.parse_product();
      probe.skip();
      single_product = probe.pos_ == probe.s_.size();
    }
    pos_ = start;
    if (!single_product) {
      std::vector<Factor> factors;
      int sign = 1;
      classify(parse_sum(), 1, sign, factors);
      return FactoredPoly(sign, std::move(factors));
    }
    skip();
    int sign = 1;
    if (peek() == '-' || peek() == '+') sign = get() == '-' ? -1 : 1;
    std::vector<Factor> factors;
    while (true) {
      auto [base, power] = parse_factor_parts();
      classify(base, power, sign, factors);
      skip();
      if (peek() != '*') break;
      get();
    }
    return FactoredPoly(sign, std::move(factors));
  }

  void expect_end() {
    skip();
    if (pos_ != s_.size()) fail("trailing input");
  }

 private:
  Poly parse_product() {
    Poly p = parse_factor();
    while (true) {
      skip();
      if (peek() != '*') break;
      get();
      p *= parse_factor();
    }
    return p;
  }

  Poly parse_factor() {
    auto [base, power] = parse_factor_parts();
    return base.pow(power);
  }

  std::pair<Poly, std::uint32_t> parse_factor_parts() {
    skip();
    Poly base;
    char c = peek();
    if (c == 'x') {
      get();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
      int idx = get() - '0';
      if (idx < 1 || idx > 4) fail("variable index out of range");
      base = Poly::variable(idx);
    } else if (c == '(') {
      get();
      base = parse_sum();
      skip();
      if (get() != ')') fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = Poly::constant(Coeff(number()));
    } else {
      fail("unexpected character");
    }
    skip();
    std::uint32_t power = 1;
    if (peek() == '^') {
      get();
      std::int64_t e = exponent();
      if (e < 0) fail("negative exponent " + std::to_string(e));
      power = static_cast<std::uint32_t>(e);
    }
    return {base, power};
  }

  std::int64_t exponent() {
    skip();
    if (peek() == '(') {
      get();
      std::int64_t v = linear();
      skip();
      if (get() != ')') fail("expected ')' in exponent");
      return v;
    }
    return atom_value();
  }

  std::int64_t linear() {
    std::int64_t acc = 0;
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') sign = get() == '-' ? -1 : 1;
      else if (!first) break;
      std::int64_t v = atom_value();
      skip();
      if (peek() == '*') {
        get();
        v *= atom_value();
      }
      acc += sign * v;
      first = false;
      skip();
      if (peek() != '+' && peek() != '-') break;
    }
    return acc;
  }

  std::int64_t atom_value() {
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) return number();
    if (peek() != 'a') fail("expected exponent symbol");
    std::string name(1, get());
    while (std::isdigit(static_cast<unsigned char>(peek()))) name += get();
    auto it = a_.find(name);
    if (it == a_.end()) fail("unknown symbol " + name);
    return it->second;
  }

  std::int64_t number() {
    std::int64_t v = 0;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected number");
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
    return v;
  }

  void classify(const Poly& base, std::uint32_t power, int& sign, std::vector<Factor>& out) {
    const auto& t = base.terms();
    if (t.size() == 1) {
      const auto& [e, c] = *t.begin();
      if (c != 1 && c != -1) fail("factor coefficient must be +-1");
      if (c == -1 && power % 2) sign = -sign;
      Factor f;
      f.plus = e;
      for (auto& x : f.plus) x *= power;
      f.power = 1;
      out.push_back(f);
      return;
    }
    if (t.size() == 2) {
      auto it = t.begin();
      auto first = *it++;
      auto second = *it;
      if (first.second == -second.second && (first.second == 1 || first.second == -1)) {
        Factor f;
        f.kind = Factor::Kind::Binomial;
        // Keep the written orientation: the +1 term is `plus`.
        f.plus = first.second == 1 ? first.first : second.first;
        f.minus = first.second == 1 ? second.first : first.first;
        f.power = power;
        out.push_back(f);
        return;
      }
    }
    fail("factor is neither a monomial nor a +-1 binomial");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() {
    if (pos_ >= s_.size()) fail("unexpected end");
    return s_[pos_++];
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Reason::InputError, "template \"" + std::string(s_) + "\": " + why);
  }

  std::string_view s_;
  const AlphaValues& a_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || seps.find(s[i]) != std::string_view::npos) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Poly instantiate_entry(std::string_view text, const AlphaValues& alphas) {
  Parser p(text, alphas);
  Poly r = p.parse_sum();
  p.expect_end();
  return r;
}

FactoredPoly instantiate_factored(std::string_view text, const AlphaValues& alphas) {
  Parser p(text, alphas);
  FactoredPoly r = p.parse_factored();
  p.expect_end();
  return r;
}

PolyMatrix instantiate_matrix(std::string_view text, const AlphaValues& alphas) {
  std::vector<std::vector<std::string_view>> rows;
  for (auto line : split(text, "\n;"))
    if (!blank(line)) rows.push_back(split(line, ","));
  if (rows.empty()) throw Error(Reason::InputError, "empty matrix template");
  PolyMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error(Reason::InputError, "ragged matrix template");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = instantiate_entry(rows[i][j], alphas);
  }
  return m;
}

Poly parse_poly(std::string_view text) { return instantiate_entry(text, AlphaValues{}); }

}  // namespace tancone
