#include "heckekit/antispherical.hpp"

#include "heckekit/errors.hpp"

#include <algorithm>

namespace heckekit {

namespace {

void accumulate(AntisphericalElement::Terms& terms, const AffineWeylElement& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

LaurentPoly unit_inverse(const LaurentPoly& u) {
  const auto& [e, c] = u.terms().front();
  return LaurentPoly::monomial(c, -e);
}

}  // namespace

AntisphericalElement AntisphericalElement::basis(GroupPtr group, const AffineWeylElement& w, LaurentPoly coeff) {
  AntisphericalElement m(std::move(group));
  m.add_term(w, coeff);
  return m;
}

const AffineWeylGroup& AntisphericalElement::group() const {
  if (!group_) throw DatumMismatch("anti-spherical element has no group");
  return *group_;
}

LaurentPoly AntisphericalElement::coefficient(const AffineWeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void AntisphericalElement::add_term(const AffineWeylElement& w, const LaurentPoly& coeff) {
  if (!group().is_f_minimal(w)) throw DomainError("m_w needs w in the minimal coset representatives, got " + group().to_string(w));
  accumulate(terms_, w, coeff);
}

std::vector<std::pair<AffineWeylElement, LaurentPoly>> AntisphericalElement::sorted_terms() const {
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

void AntisphericalElement::require_compatible(const AntisphericalElement& other) const {
  if (!group_ || !other.group_) throw DatumMismatch("anti-spherical element has no group");
  if (!same_group(*group_, *other.group_)) throw DatumMismatch("anti-spherical elements belong to different groups");
}

AntisphericalElement AntisphericalElement::right_simple(int g) const {
  const auto& G = group();
  AntisphericalElement out(group_);
  out.terms_.reserve(terms_.size() * 2);
  for (const auto& [w, c] : terms_) {
    const AffineWeylElement ws = G.right_simple(w, g);
    if (G.length(ws) < G.length(w)) {
      const LaurentPoly qc = c.shifted(2);
      accumulate(out.terms_, w, qc - c);
      accumulate(out.terms_, ws, qc);
    } else if (G.is_f_minimal(ws)) {
      accumulate(out.terms_, ws, c);
    } else {
      accumulate(out.terms_, w, -c);
    }
  }
  return out;
}

AntisphericalElement AntisphericalElement::right_omega(const AffineWeylElement& pi) const {
  const auto& G = group();
  if (G.length(pi) != 0) throw DomainError("right_omega needs an element of length zero");
  AntisphericalElement out(group_);
  out.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.terms_.emplace(G.multiply(w, pi), c);
  return out;
}

AntisphericalElement AntisphericalElement::right_basis(const AffineWeylElement& w) const {
  const auto& G = group();
  const ReducedWord rw = G.reduced_word(w);
  AntisphericalElement out = rw.omega == 0 ? *this : right_omega(G.omega()[rw.omega]);
  for (int g : rw.word) out = out.right_simple(g);
  return out;
}

AntisphericalElement& AntisphericalElement::operator+=(const AntisphericalElement& other) {
  if (other.is_zero()) return *this;
  if (!group_) group_ = other.group_;
  require_compatible(other);
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, c);
  return *this;
}

AntisphericalElement& AntisphericalElement::operator-=(const AntisphericalElement& other) {
  if (other.is_zero()) return *this;
  if (!group_) group_ = other.group_;
  require_compatible(other);
  for (const auto& [w, c] : other.terms_) accumulate(terms_, w, -c);
  return *this;
}

AntisphericalElement& AntisphericalElement::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const AntisphericalElement& a, const AntisphericalElement& b) {
  if (a.terms_ != b.terms_) return false;
  if (a.is_zero()) return true;
  return same_group(*a.group_, *b.group_);
}

std::string AntisphericalElement::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : sorted_terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*m[" + group().to_string(w) + "]";
  }
  return out;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const AntisphericalModule> AntisphericalModule::create(std::shared_ptr<const HeckeAlgebra> hecke) {
  if (!hecke) throw DatumMismatch("anti-spherical module needs a Hecke algebra");
  return std::shared_ptr<const AntisphericalModule>(new AntisphericalModule(std::move(hecke)));
}

AntisphericalElement AntisphericalModule::m(const AffineWeylElement& w, LaurentPoly coeff) const {
  group().check(w);
  return AntisphericalElement::basis(group_ptr(), w, std::move(coeff));
}

AntisphericalElement AntisphericalModule::act(const AntisphericalElement& m, const HeckeElement& h) const {
  AntisphericalElement out = zero();
  if (m.is_zero() || h.is_zero()) return out;
  if (!same_group(m.group(), group()) || !same_group(h.group(), group()))
    throw DatumMismatch("anti-spherical action across different groups");
  for (const auto& [x, c] : h.terms()) {
    AntisphericalElement part = m.right_basis(x);
    part *= c;
    out += part;
  }
  return out;
}

AntisphericalElement AntisphericalModule::project_from_hecke(const HeckeElement& h) const {
  AntisphericalElement out = zero();
  if (h.is_zero()) return out;
  if (!same_group(h.group(), group())) throw DatumMismatch("element belongs to a different group");
  const auto& G = group();
  HeckeElement rest = h;
  for (;;) {
    // Longest term outside ᶠW, ties broken by the canonical order.
    const AffineWeylElement* top = nullptr;
    int top_len = -1;
    for (const auto& [x, c] : rest.terms()) {
      if (G.is_f_minimal(x)) continue;
      const int len = G.length(x);
      if (len > top_len || (len == top_len && *top < x)) {
        top = &x;
        top_len = len;
      }
    }
    if (!top) break;
    // C′_x has leading term v^{−ℓ(x)} T_x.
    HeckeElement kill = hecke_->kl_basis(*top);
    kill *= rest.coefficient(*top).shifted(top_len);
    rest -= kill;
  }
  for (const auto& [x, c] : rest.terms()) out.add_term(x, c);
  return out;
}

AntisphericalElement AntisphericalModule::theta_basis(const Weight& lambda) const {
  return act(unit(), hecke_->theta(lambda));
}

FreenessMatrix AntisphericalModule::a_freeness_matrix(int max_length) const {
  const auto& G = group();
  FreenessMatrix fm;
  fm.max_length = max_length;
  for (const auto& w : G.enumerate_up_to_length(max_length))
    if (G.is_f_minimal(w)) {
      fm.columns.push_back(w);
      fm.weights.push_back(G.coset_weight(w));
    }
  const std::size_t n = fm.columns.size();
  std::unordered_map<AffineWeylElement, std::size_t, AffineWeylElementHash> index;
  for (std::size_t j = 0; j < n; ++j) index.emplace(fm.columns[j], j);

  fm.entries.assign(n, std::vector<LaurentPoly>(n));
  fm.closed = fm.triangular = fm.unit_diagonal = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (G.kappa(fm.weights[i]) != fm.columns[i]) throw std::logic_error("κ does not invert the coset weight");
    const AntisphericalElement row = theta_basis(fm.weights[i]);
    for (const auto& [w, c] : row.terms()) {
      auto it = index.find(w);
      if (it == index.end()) {
        fm.closed = false;
        continue;
      }
      fm.entries[i][it->second] = c;
      if (!G.bruhat_leq(w, fm.columns[i])) fm.triangular = false;
    }
    if (!fm.entries[i][i].is_unit()) fm.unit_diagonal = false;
  }
  if (!fm.closed || !fm.triangular || !fm.unit_diagonal) return fm;

  // Columns are sorted by length and Bruhat-smaller elements are shorter, so
  // the matrix is lower triangular in this order.
  auto& inv = fm.inverse;
  inv.assign(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const LaurentPoly d = unit_inverse(fm.entries[i][i]);
    inv[i][i] = d;
    for (std::size_t j = 0; j < i; ++j) {
      LaurentPoly acc;
      for (std::size_t k = j; k < i; ++k)
        if (!fm.entries[i][k].is_zero() && !inv[k][j].is_zero()) acc += fm.entries[i][k] * inv[k][j];
      if (!acc.is_zero()) inv[i][j] = -(d * acc);
    }
  }
  fm.inverse_verified = true;
  for (std::size_t i = 0; i < n && fm.inverse_verified; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly acc;
      for (std::size_t k = 0; k < n; ++k)
        if (!fm.entries[i][k].is_zero() && !inv[k][j].is_zero()) acc += fm.entries[i][k] * inv[k][j];
      if (acc != LaurentPoly(i == j ? 1 : 0)) {
        fm.inverse_verified = false;
        break;
      }
    }
  return fm;
}

}  // namespace heckekit
