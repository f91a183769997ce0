#include "heckekit/hecke.hpp"

#include "heckekit/errors.hpp"

#include <algorithm>

namespace heckekit {

bool same_group(const AffineWeylGroup& a, const AffineWeylGroup& b) {
  if (&a == &b) return true;
  const auto& x = a.datum();
  const auto& y = b.datum();
  return x.label() == y.label() && x.lattice_kind() == y.lattice_kind() && x.lattice_basis() == y.lattice_basis();
}

namespace {

void accumulate(HeckeElement::Terms& terms, const AffineWeylElement& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

}  // namespace

// ---------------------------------------------------------------------------
// HeckeElement

HeckeElement HeckeElement::basis(GroupPtr group, const AffineWeylElement& w, LaurentPoly coeff) {
  group->check(w);
  HeckeElement h(std::move(group));
  h.add_term(w, coeff);
  return h;
}

const AffineWeylGroup& HeckeElement::group() const {
  if (!group_) throw DatumMismatch("Hecke element has no group");
  return *group_;
}

LaurentPoly HeckeElement::coefficient(const AffineWeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add_term(const AffineWeylElement& w, const LaurentPoly& coeff) {
  group().check(w);
  accumulate(terms_, w, coeff);
}

std::vector<std::pair<AffineWeylElement, LaurentPoly>> HeckeElement::sorted_terms() const {
  std::vector<std::pair<int, const Terms::value_type*>> keyed;
  keyed.reserve(terms_.size());
  for (const auto& t : terms_) keyed.emplace_back(group().length(t.first), &t);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second->first < b.second->first;
  });
  std::vector<std::pair<AffineWeylElement, LaurentPoly>> out;
  out.reserve(keyed.size());
  for (const auto& [len, t] : keyed) out.emplace_back(t->first, t->second);
  return out;
}

void HeckeElement::require_compatible(const HeckeElement& other) const {
  if (!group_ || !other.group_) throw DatumMismatch("Hecke element has no group");
  if (!same_group(*group_, *other.group_)) throw DatumMismatch("Hecke elements belong to different groups");
}

HeckeElement HeckeElement::left_simple(int g) const {
  const auto& G = group();
  HeckeElement out(group_);
  out.terms_.reserve(terms_.size() * 2);
  for (const auto& [w, c] : terms_) {
    const AffineWeylElement sw = G.left_simple(g, w);
    if (G.length(sw) > G.length(w)) {
      accumulate(out.terms_, sw, c);
    } else {
      const LaurentPoly qc = c.shifted(2);
      accumulate(out.terms_, w, qc - c);
      accumulate(out.terms_, sw, qc);
    }
  }
  return out;
}

HeckeElement HeckeElement::left_simple_inverse(int g) const {
  // T_s⁻¹ = v⁻² T_s + (v⁻² − 1)
  const auto& G = group();
  HeckeElement out(group_);
  out.terms_.reserve(terms_.size() * 2);
  for (const auto& [w, c] : terms_) {
    const AffineWeylElement sw = G.left_simple(g, w);
    if (G.length(sw) > G.length(w)) {
      const LaurentPoly qc = c.shifted(-2);
      accumulate(out.terms_, sw, qc);
      accumulate(out.terms_, w, qc - c);
    } else {
      accumulate(out.terms_, sw, c);
    }
  }
  return out;
}

HeckeElement HeckeElement::left_omega(const AffineWeylElement& pi) const {
  const auto& G = group();
  if (G.length(pi) != 0) throw DomainError("left_omega needs an element of length zero");
  HeckeElement out(group_);
  out.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.terms_.emplace(G.multiply(pi, w), c);
  return out;
}

HeckeElement HeckeElement::left_basis(const AffineWeylElement& w) const {
  const auto& G = group();
  const ReducedWord rw = G.reduced_word(w);
  HeckeElement out = *this;
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) out = out.left_simple(*it);
  if (rw.omega != 0) out = out.left_omega(G.omega()[rw.omega]);
  return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  if (other.is_zero()) return *this;
  if (!group_) group_ = other.group_;
  require_compatible(other);
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  if (other.is_zero()) return *this;
  if (!group_) group_ = other.group_;
  require_compatible(other);
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  a.require_compatible(b);
  HeckeElement out(a.group_);
  for (const auto& [x, c] : a.terms_) {
    HeckeElement part = b.left_basis(x);
    for (const auto& [w, d] : part.terms_) accumulate(out.terms_, w, c * d);
  }
  return out;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.is_zero()) return true;
  return same_group(*a.group_, *b.group_);
}

std::string HeckeElement::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : sorted_terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*T[" + group().to_string(w) + "]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// GroupAlgebraElement

GroupAlgebraElement GroupAlgebraElement::basis(GroupPtr group, const AffineWeylElement& w, Integer coeff) {
  group->check(w);
  GroupAlgebraElement g(std::move(group));
  g.add_term(w, coeff);
  return g;
}

const AffineWeylGroup& GroupAlgebraElement::group() const {
  if (!group_) throw DatumMismatch("group algebra element has no group");
  return *group_;
}

Integer GroupAlgebraElement::coefficient(const AffineWeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void GroupAlgebraElement::add_term(const AffineWeylElement& w, const Integer& coeff) {
  group().check(w);
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  if (other.is_zero()) return *this;
  if (!group_) group_ = other.group_;
  if (!same_group(group(), other.group())) throw DatumMismatch("group algebra elements belong to different groups");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  if (other.is_zero()) return *this;
  if (!group_) group_ = other.group_;
  if (!same_group(group(), other.group())) throw DatumMismatch("group algebra elements belong to different groups");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.is_zero() || b.is_zero()) return GroupAlgebraElement(a.group_ ? a.group_ : b.group_);
  if (!same_group(a.group(), b.group())) throw DatumMismatch("group algebra elements belong to different groups");
  GroupAlgebraElement out(a.group_);
  for (const auto& [x, c] : a.terms_)
    for (const auto& [y, d] : b.terms_) out.add_term(a.group().multiply(x, y), c * d);
  return out;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.is_zero()) return true;
  return same_group(*a.group_, *b.group_);
}

std::string GroupAlgebraElement::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.str() + "*";
    out += "[" + group().to_string(w) + "]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// HeckeAlgebra

std::shared_ptr<const HeckeAlgebra> HeckeAlgebra::create(GroupPtr group) {
  return std::shared_ptr<const HeckeAlgebra>(new HeckeAlgebra(std::move(group)));
}

HeckeAlgebra::HeckeAlgebra(GroupPtr group) : group_(std::move(group)) {
  if (!group_) throw DatumMismatch("Hecke algebra needs a group");
}

HeckeAlgebra::~HeckeAlgebra() = default;

HeckeElement HeckeAlgebra::T(const AffineWeylElement& w, LaurentPoly coeff) const {
  return HeckeElement::basis(group_, w, std::move(coeff));
}

HeckeElement HeckeAlgebra::t_inverse(const ReducedWord& word) const {
  const auto& G = *group_;
  const AffineWeylElement w = G.from_word(word.omega, word.word);
  if (G.length(w) != static_cast<int>(word.word.size())) throw DomainError("word is not reduced");
  // T_w = T_π T_{s_1} ··· T_{s_k}, so T_w⁻¹ = T_{s_k}⁻¹ ··· T_{s_1}⁻¹ T_{π⁻¹}.
  HeckeElement out = T(G.inverse(G.omega()[word.omega]));
  for (int g : word.word) out = out.left_simple_inverse(g);
  return out;
}

const HeckeElement& HeckeAlgebra::t_inverse(const AffineWeylElement& w) const {
  group_->check(w);
  {
    std::lock_guard lock(inverse_mutex_);
    if (auto it = inverse_cache_.find(w); it != inverse_cache_.end()) return it->second;
  }
  HeckeElement out = t_inverse(group_->reduced_word(w));
  std::lock_guard lock(inverse_mutex_);
  return inverse_cache_.try_emplace(w, std::move(out)).first->second;
}

HeckeElement HeckeAlgebra::theta(const Weight& mu, const Weight& nu) const {
  const auto& rd = group_->datum();
  rd.check_weight(mu);
  rd.check_weight(nu);
  if (!rd.is_dominant(mu) || !rd.is_dominant(nu)) throw DomainError("theta decomposition needs dominant weights");
  const auto tm = group_->translation(mu);
  const auto tn = group_->translation(nu);
  HeckeElement inv = t_inverse(tn);
  inv *= LaurentPoly::variable(group_->length(tn));
  HeckeElement out = inv.left_basis(tm);
  out *= LaurentPoly::variable(-group_->length(tm));
  return out;
}

const HeckeElement& HeckeAlgebra::theta(const Weight& lambda) const {
  const auto& rd = group_->datum();
  rd.check_weight(lambda);
  group_->translation(lambda);  // lattice check
  {
    std::lock_guard lock(theta_mutex_);
    if (auto it = theta_cache_.find(lambda); it != theta_cache_.end()) return it->second;
  }
  const int n = rd.rank();
  Weight mu(n), nu(n);
  if (rd.lattice_kind() == LatticeKind::weight) {
    for (int i = 0; i < n; ++i) {
      mu[i] = std::max(lambda[i], 0);
      nu[i] = std::max(-lambda[i], 0);
    }
  } else {
    // ν = k·2ρ lies in the root lattice.
    int k = 0;
    for (int i = 0; i < n; ++i) k = std::max(k, (-lambda[i] + 1) / 2);
    for (int i = 0; i < n; ++i) nu[i] = 2 * k;
    mu = lambda + nu;
  }
  HeckeElement out = theta(mu, nu);
  std::lock_guard lock(theta_mutex_);
  return theta_cache_.try_emplace(lambda, std::move(out)).first->second;
}

HeckeElement HeckeAlgebra::bar(const HeckeElement& h) const {
  if (h.is_zero()) return zero();
  if (!same_group(h.group(), *group_)) throw DatumMismatch("element belongs to a different group");
  HeckeElement out = zero();
  for (const auto& [w, c] : h.terms()) {
    HeckeElement part = t_inverse(group_->inverse(w));
    part *= c.bar();
    out += part;
  }
  return out;
}

const HeckeElement& HeckeAlgebra::kl_basis(const AffineWeylElement& w) const {
  group_->check(w);
  const int len = group_->length(w);
  if (len > group_->budget().max_length)
    throw ResourceError("KL basis element of length " + std::to_string(len) + " exceeds the budget " +
                        std::to_string(group_->budget().max_length));
  std::lock_guard lock(kl_mutex_);
  return kl_basis_locked(w);
}

const HeckeElement& HeckeAlgebra::kl_basis_locked(const AffineWeylElement& w) const {
  if (auto it = kl_cache_.find(w); it != kl_cache_.end()) return it->second;
  const auto& G = *group_;
  HeckeElement out;
  const std::size_t k = G.omega_index(w);
  if (k != 0) {
    const auto& pi = G.omega()[k];
    out = kl_basis_locked(G.multiply(G.inverse(pi), w)).left_omega(pi);
  } else if (G.length(w) == 0) {
    out = one();
  } else {
    // C′_s C′_u = C′_{su} + Σ_{z < u, sz < z} μ(z, u) C′_z
    const int s = G.first_left_descent(w);
    const AffineWeylElement u = G.left_simple(s, w);
    const HeckeElement& cu = kl_basis_locked(u);
    out = cu.left_simple(s) + cu;
    out *= LaurentPoly::variable(-1);
    for (const auto& [z, c] : cu.terms()) {
      if (z == u) continue;
      const int lz = G.length(z);
      if (G.length(G.left_simple(s, z)) > lz) continue;
      const Integer mu = c.coefficient(-lz - 1);
      if (mu == 0) continue;
      HeckeElement cz = kl_basis_locked(z);
      cz *= LaurentPoly(mu);
      out -= cz;
    }
  }
  return kl_cache_.try_emplace(w, std::move(out)).first->second;
}

LaurentPoly HeckeAlgebra::kl_polynomial(const AffineWeylElement& x, const AffineWeylElement& w) const {
  group_->check(x);
  const LaurentPoly c = kl_basis(w).coefficient(x).shifted(group_->length(w));
  if (!c.is_polynomial()) throw std::logic_error("KL polynomial with negative powers");
  return c.contract_power(2);
}

Integer HeckeAlgebra::kl_mu(const AffineWeylElement& x, const AffineWeylElement& w) const {
  const int d = group_->length(w) - group_->length(x) - 1;
  if (d < 0 || d % 2 != 0) return 0;
  return kl_polynomial(x, w).coefficient(d / 2);
}

HeckeElement HeckeAlgebra::center_element(const Weight& lambda) const {
  const auto& rd = group_->datum();
  rd.check_weight(lambda);
  if (!rd.is_dominant(lambda)) throw DomainError("center element needs a dominant weight, got " + lambda.to_string());
  HeckeElement out = zero();
  for (const auto& [mu, mult] : rd.weights_of(lambda)) {
    HeckeElement t = theta(mu);
    t *= LaurentPoly(static_cast<long long>(mult));
    out += t;
  }
  return out;
}

GroupAlgebraElement HeckeAlgebra::specialize_v1(const HeckeElement& h) const {
  GroupAlgebraElement out(group_);
  if (h.is_zero()) return out;
  if (!same_group(h.group(), *group_)) throw DatumMismatch("element belongs to a different group");
  for (const auto& [w, c] : h.terms()) out.add_term(w, c.at_one());
  return out;
}

GroupAlgebraElement HeckeAlgebra::wakimoto_class(const AffineWeylElement& w) const {
  group_->check(w);
  const HeckeElement tu = T(group_->finite(w.finite));
  return specialize_v1(theta(w.translation) * tu);
}

Integer HeckeAlgebra::euler_pairing(const AffineWeylElement& w, const AffineWeylElement& w_prime) const {
  const Integer c = wakimoto_class(w_prime).coefficient(w);
  return group_->length(w) % 2 == 0 ? c : Integer(-c);
}

}  // namespace heckekit
