#include "heckekit/affine_weyl.hpp"

#include "heckekit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <set>
#include <unordered_set>

namespace heckekit {

ResourceBudget ResourceBudget::from_environment() {
  ResourceBudget b;
  if (const char* env = std::getenv("HECKEKIT_MAX_LENGTH")) {
    int v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v >= 0) b.max_length = v;
  }
  return b;
}

std::shared_ptr<const AffineWeylGroup> AffineWeylGroup::create(std::shared_ptr<const RootDatum> datum,
                                                               ResourceBudget budget) {
  return std::shared_ptr<const AffineWeylGroup>(new AffineWeylGroup(std::move(datum), budget));
}

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const RootDatum> datum, ResourceBudget budget)
    : datum_(std::move(datum)), budget_(budget) {
  const auto& rd = *datum_;
  const auto& W = rd.weyl();
  const int n = rd.rank();
  const std::size_t k = rd.short_dominant_root();
  affine_root_ = rd.positive_roots()[k].weight;
  affine_reflection_ = W.reflection(k);

  // Length-zero elements t_λ u need ⟨λ, α_i∨⟩ ∈ {0, 1}.
  std::vector<AffineWeylElement> found;
  Weight lambda(n);
  std::function<void(int)> scan = [&](int i) {
    if (i == n) {
      if (!rd.in_lattice(lambda)) return;
      for (FiniteWeylGroup::Index u = 0; u < W.order(); ++u) {
        AffineWeylElement w{lambda, u};
        if (length(w) == 0) found.push_back(w);
      }
      return;
    }
    for (int c = -1; c <= 1; ++c) {
      lambda[i] = c;
      scan(i + 1);
    }
  };
  scan(0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  // Exactly one length-zero element per class of Λ/Q.
  long long index = 0;
  {
    std::set<Weight> classes;
    for (const auto& w : found) {
      bool fresh = true;
      for (const auto& c : classes)
        if (rd.root_coordinates(w.translation - c)) fresh = false;
      if (fresh) classes.insert(w.translation);
    }
    index = static_cast<long long>(classes.size());
  }
  if (static_cast<long long>(found.size()) != index)
    throw std::logic_error("length-zero elements do not match Λ/Q for " + rd.label());

  const auto e = identity();
  auto order_of = [&](const AffineWeylElement& x) {
    std::size_t ord = 1;
    for (AffineWeylElement y = x; y != e; y = multiply(y, x)) ++ord;
    return ord;
  };
  omega_.clear();
  omega_.push_back(e);
  const AffineWeylElement* gen = nullptr;
  for (const auto& w : found)
    if (order_of(w) == found.size()) {
      gen = &w;
      break;
    }
  if (gen) {
    omega_cyclic_ = true;
    for (AffineWeylElement y = multiply(*gen, e); y != e; y = multiply(y, *gen)) omega_.push_back(y);
  } else {
    for (const auto& w : found)
      if (w != e) omega_.push_back(w);
  }
}

AffineWeylElement AffineWeylGroup::identity() const { return {Weight(rank()), FiniteWeylGroup::identity()}; }

AffineWeylElement AffineWeylGroup::translation(const Weight& lambda) const {
  if (!datum_->in_lattice(lambda))
    throw DomainError("weight " + lambda.to_string() + " is not in the " + std::string(heckekit::to_string(datum_->lattice_kind())) +
                      " lattice");
  return {lambda, FiniteWeylGroup::identity()};
}

AffineWeylElement AffineWeylGroup::finite(FiniteWeylGroup::Index u) const {
  if (u >= finite_group().order()) throw DatumMismatch("finite Weyl group index out of range");
  return {Weight(rank()), u};
}

AffineWeylElement AffineWeylGroup::simple(int g) const {
  if (g < 0 || g > rank()) throw DomainError("simple reflection index " + std::to_string(g) + " out of range");
  if (g == 0) return {affine_root_, affine_reflection_};
  return {Weight(rank()), finite_group().left_simple(g, FiniteWeylGroup::identity())};
}

void AffineWeylGroup::check(const AffineWeylElement& w) const {
  if (w.translation.rank() != rank() || w.finite >= finite_group().order())
    throw DatumMismatch("element does not belong to the affine Weyl group of " + datum_->label());
}

std::size_t AffineWeylGroup::omega_index(const AffineWeylElement& w) const {
  for (std::size_t k = 0; k < omega_.size(); ++k)
    if (datum_->root_coordinates(w.translation - omega_[k].translation)) return k;
  throw DatumMismatch("translation " + w.translation.to_string() + " is not in the lattice");
}

AffineWeylElement AffineWeylGroup::multiply(const AffineWeylElement& x, const AffineWeylElement& y) const {
  check(x);
  check(y);
  const auto& W = finite_group();
  return {x.translation + W.act(x.finite, y.translation), W.multiply(x.finite, y.finite)};
}

AffineWeylElement AffineWeylGroup::inverse(const AffineWeylElement& w) const {
  const auto& W = finite_group();
  const auto ui = W.inverse(w.finite);
  return {-W.act(ui, w.translation), ui};
}

AffineWeylElement AffineWeylGroup::left_simple(int g, const AffineWeylElement& w) const {
  const auto& W = finite_group();
  if (g == 0) {
    // t_β s_β t_λ u = t_{β + s_β λ} s_β u
    return {affine_root_ + W.act(affine_reflection_, w.translation), W.multiply(affine_reflection_, w.finite)};
  }
  return {datum_->reflect(w.translation, g - 1), W.left_simple(g, w.finite)};
}

AffineWeylElement AffineWeylGroup::right_simple(const AffineWeylElement& w, int g) const {
  const auto& W = finite_group();
  if (g == 0) {
    // t_λ u t_β s_β = t_{λ + u β} u s_β
    return {w.translation + W.act(w.finite, affine_root_), W.multiply(w.finite, affine_reflection_)};
  }
  return {w.translation, W.right_simple(w.finite, g)};
}

AffineWeylElement AffineWeylGroup::from_word(std::size_t omega, std::span<const int> word) const {
  if (omega >= omega_.size()) throw DomainError("Ω index out of range");
  AffineWeylElement w = omega_[omega];
  for (int g : word) {
    if (g < 0 || g > rank()) throw DomainError("simple reflection index " + std::to_string(g) + " out of range");
    w = right_simple(w, g);
  }
  return w;
}

int AffineWeylGroup::length(const AffineWeylElement& w) const {
  const auto& rd = *datum_;
  const std::uint64_t mask = finite_group().inverted_roots_of_inverse(w.finite);
  int len = 0;
  for (std::size_t k = 0; k < rd.positive_roots().size(); ++k) {
    const int p = rd.pairing(w.translation, k);
    len += (mask >> k & 1u) ? std::abs(p - 1) : std::abs(p);
  }
  return len;
}

int AffineWeylGroup::first_left_descent(const AffineWeylElement& w) const {
  const int len = length(w);
  if (len == 0) return -1;
  for (int g = 0; g <= rank(); ++g)
    if (length(left_simple(g, w)) < len) return g;
  throw std::logic_error("element of positive length without a left descent");
}

ReducedWord AffineWeylGroup::reduced_word(const AffineWeylElement& w) const {
  check(w);
  ReducedWord out;
  out.omega = omega_index(w);
  AffineWeylElement rest = multiply(inverse(omega_[out.omega]), w);
  for (int g = first_left_descent(rest); g >= 0; g = first_left_descent(rest)) {
    out.word.push_back(g);
    rest = left_simple(g, rest);
  }
  if (rest != identity()) throw std::logic_error("reduced word did not reach the identity");
  return out;
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& w) const {
  check(x);
  check(w);
  const std::size_t k = omega_index(w);
  if (omega_index(x) != k) return false;
  const AffineWeylElement pi_inv = inverse(omega_[k]);
  AffineWeylElement a = multiply(pi_inv, x);
  AffineWeylElement b = multiply(pi_inv, w);
  // For s with sb < b: a ≤ b ⟺ min(a, sa) ≤ sb.
  for (;;) {
    const int la = length(a), lb = length(b);
    if (la > lb) return false;
    if (lb == 0) return a == b;
    const int g = first_left_descent(b);
    const AffineWeylElement sa = left_simple(g, a);
    if (length(sa) < la) a = sa;
    b = left_simple(g, b);
  }
}

bool AffineWeylGroup::is_f_minimal(const AffineWeylElement& w) const {
  check(w);
  const int len = length(w);
  for (int g = 1; g <= rank(); ++g)
    if (length(left_simple(g, w)) < len) return false;
  return true;
}

AffineWeylElement AffineWeylGroup::kappa(const Weight& lambda) const {
  translation(lambda);  // lattice check
  const auto& W = finite_group();
  AffineWeylElement best;
  int best_len = -1;
  bool unique = true;
  for (FiniteWeylGroup::Index u = 0; u < W.order(); ++u) {
    // u · t_λ = t_{u(λ)} u
    AffineWeylElement x{W.act(u, lambda), u};
    const int len = length(x);
    if (best_len < 0 || len < best_len) {
      best = x;
      best_len = len;
      unique = true;
    } else if (len == best_len) {
      unique = false;
    }
  }
  if (!unique) throw std::logic_error("coset W_f·t_λ has no unique minimal element");
  return best;
}

Weight AffineWeylGroup::coset_weight(const AffineWeylElement& w) const {
  check(w);
  const auto& W = finite_group();
  // t_ν u = u · t_{u⁻¹ν}
  return W.act(W.inverse(w.finite), w.translation);
}

std::vector<AffineWeylElement> AffineWeylGroup::enumerate_up_to_length(int max_length) const {
  if (max_length < 0) throw DomainError("length bound must be non-negative");
  if (max_length > budget_.max_length)
    throw ResourceError("length bound " + std::to_string(max_length) + " exceeds the budget " +
                        std::to_string(budget_.max_length));
  std::vector<AffineWeylElement> all(omega_.begin(), omega_.end());
  std::sort(all.begin(), all.end());
  std::vector<AffineWeylElement> level = all;
  for (int len = 1; len <= max_length; ++len) {
    std::unordered_set<AffineWeylElement, AffineWeylElementHash> next;
    for (const auto& w : level)
      for (int g = 0; g <= rank(); ++g) {
        AffineWeylElement x = right_simple(w, g);
        if (length(x) == len) next.insert(x);
      }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

std::string AffineWeylGroup::to_string(const AffineWeylElement& w) const {
  check(w);
  std::string out;
  if (!w.translation.is_zero()) out = "t" + w.translation.to_string();
  for (int g : finite_group().word(w.finite)) {
    if (!out.empty()) out += "*";
    out += "s" + std::to_string(g);
  }
  return out.empty() ? "e" : out;
}

AffineWeylElement AffineWeylGroup::parse(std::string_view text) const {
  auto fail = [&](const std::string& why) -> AffineWeylElement {
    throw ParseError("element '" + std::string(text) + "': " + why);
  };
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.empty()) fail("empty");
  AffineWeylElement acc = identity();
  std::string_view rest(compact);
  while (!rest.empty()) {
    const auto star = rest.find('*');
    const std::string_view tok = rest.substr(0, star);
    rest = star == std::string_view::npos ? std::string_view{} : rest.substr(star + 1);
    if (star != std::string_view::npos && rest.empty()) fail("trailing '*'");
    AffineWeylElement factor;
    if (tok == "e") {
      factor = identity();
    } else if (tok.size() > 1 && tok[0] == 't') {
      Weight lambda = Weight::parse(tok.substr(1));
      datum_->check_weight(lambda);
      factor = translation(lambda);
    } else if (tok.size() > 1 && tok[0] == 's') {
      int g = -1;
      auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), g);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || g < 0 || g > rank()) fail("bad generator");
      factor = simple(g);
    } else if (tok.substr(0, 2) == "pi") {
      if (!omega_cyclic_) fail("pi notation needs a cyclic Ω");
      long long k = 1;
      if (tok.size() > 2) {
        if (tok[2] != '^') fail("expected pi^k");
        std::string_view num = tok.substr(3);
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
        if (num.empty() || ec != std::errc() || ptr != num.data() + num.size()) fail("bad exponent");
      }
      const auto m = static_cast<long long>(omega_.size());
      factor = omega_[static_cast<std::size_t>(((k % m) + m) % m)];
    } else {
      fail("unknown token '" + std::string(tok) + "'");
    }
    acc = multiply(acc, factor);
  }
  return acc;
}

}  // namespace heckekit
