#include "heckekit/laurent.hpp"

#include "heckekit/errors.hpp"

#include <algorithm>
#include <cctype>

namespace heckekit {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace_back(0, Integer(constant));
}

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) terms_.emplace_back(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(Integer coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exponent, std::move(coeff));
  return p;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = rhs.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Integer c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const int lo = lhs.min_degree() + rhs.min_degree();
  const int hi = lhs.max_degree() + rhs.max_degree();
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
  LaurentPoly out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.terms_.emplace_back(lo + static_cast<int>(i), std::move(dense[i]));
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

void LaurentPoly::add_term(const Integer& coeff, int exponent) {
  if (coeff == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.emplace(it, exponent, coeff);
  }
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
  return p;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) throw DomainError("substitute_power: exponent must be non-zero");
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first *= k;
  if (k < 0) std::reverse(p.terms_.begin(), p.terms_.end());
  return p;
}

LaurentPoly LaurentPoly::contract_power(int k) const {
  if (k <= 0) throw DomainError("contract_power: factor must be positive");
  LaurentPoly p = *this;
  for (auto& t : p.terms_) {
    if (t.first % k != 0) throw DomainError("contract_power: exponent " + std::to_string(t.first) +
                                            " not divisible by " + std::to_string(k));
    t.first /= k;
  }
  return p;
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

Integer LaurentPoly::evaluate(const Integer& x) const {
  if (is_zero()) return 0;
  if (min_degree() < 0) {
    if (x == 1) return at_one();
    if (x == -1) {
      Integer s = 0;
      for (const auto& [e, c] : terms_) s += (e % 2 == 0) ? c : Integer(-c);
      return s;
    }
    throw DomainError("evaluate: negative exponents need x = ±1 for an integer value");
  }
  Integer s = 0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    // Horner over sparse exponents.
    const int next = (it + 1 == terms_.rend()) ? 0 : (it + 1)->first;
    s += it->second;
    for (int i = next; i < it->first; ++i) s *= x;
  }
  return s;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::string_view var) : s_(text), var_(var) {}

  LaurentPoly run() {
    LaurentPoly out;
    skip();
    if (done()) throw ParseError("empty polynomial");
    bool first = true;
    while (!done()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coeff, exp] = term();
      out.add_term(sign * coeff, exp);
      skip();
    }
    return out;
  }

 private:
  std::pair<Integer, int> term() {
    if (done()) fail("expected term");
    Integer coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = digits();
      have_coeff = true;
      skip();
      if (!done() && peek() == '*') {
        ++pos_;
        skip();
      } else {
        return {coeff, 0};
      }
    }
    if (s_.substr(pos_, var_.size()) != var_) fail(have_coeff ? "expected variable after '*'" : "expected term");
    pos_ += var_.size();
    int exp = 1;
    skip();
    if (!done() && peek() == '^') {
      ++pos_;
      skip();
      int sign = 1;
      if (!done() && (peek() == '-' || peek() == '+')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      exp = sign * static_cast<int>(digits());
    }
    return {coeff, exp};
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, std::string_view var) {
  if (text == "0") return {};
  return PolyParser(text, var).run();
}

}  // namespace heckekit
