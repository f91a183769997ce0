#pragma once

#include "heckekit/hecke.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace heckekit {

/// Σ c_w m_w over w ∈ ᶠW, with m_w = m_e · T_w.
class AntisphericalElement {
 public:
  using Terms = std::unordered_map<AffineWeylElement, LaurentPoly, AffineWeylElementHash>;

  AntisphericalElement() = default;
  explicit AntisphericalElement(GroupPtr group) : group_(std::move(group)) {}
  /// c·m_w; w must lie in ᶠW.
  static AntisphericalElement basis(GroupPtr group, const AffineWeylElement& w, LaurentPoly coeff = LaurentPoly(1));

  const AffineWeylGroup& group() const;
  const GroupPtr& group_ptr() const { return group_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coefficient(const AffineWeylElement& w) const;
  void add_term(const AffineWeylElement& w, const LaurentPoly& coeff);
  std::vector<std::pair<AffineWeylElement, LaurentPoly>> sorted_terms() const;

  /// this · T_{s_g}, this · T_π, this · T_w.
  AntisphericalElement right_simple(int g) const;
  AntisphericalElement right_omega(const AffineWeylElement& pi) const;
  AntisphericalElement right_basis(const AffineWeylElement& w) const;

  AntisphericalElement& operator+=(const AntisphericalElement& other);
  AntisphericalElement& operator-=(const AntisphericalElement& other);
  AntisphericalElement& operator*=(const LaurentPoly& scalar);
  friend AntisphericalElement operator+(AntisphericalElement a, const AntisphericalElement& b) { return a += b; }
  friend AntisphericalElement operator-(AntisphericalElement a, const AntisphericalElement& b) { return a -= b; }
  friend AntisphericalElement operator*(const LaurentPoly& c, AntisphericalElement a) { return a *= c; }
  friend bool operator==(const AntisphericalElement& a, const AntisphericalElement& b);

  /// "(-v)*m[t[1]*s1]", or "0".
  std::string to_string() const;

 private:
  void require_compatible(const AntisphericalElement& other) const;

  GroupPtr group_;
  Terms terms_;
};

/// Expansion of m_e θ_λ in the standard basis for every λ with ℓ(κ(λ)) ≤ L.
/// Rows and columns share the index set: row i is λ = weights[i], column j
/// is m_{columns[j]}, and columns[i] = κ(weights[i]).
struct FreenessMatrix {
  int max_length = 0;
  std::vector<Weight> weights;
  std::vector<AffineWeylElement> columns;
  std::vector<std::vector<LaurentPoly>> entries;
  std::vector<std::vector<LaurentPoly>> inverse;
  /// Every m_e θ_λ is supported on the index set.
  bool closed = false;
  /// entries[i][j] ≠ 0 only when columns[j] ≤ columns[i] in the Bruhat order.
  bool triangular = false;
  /// Every diagonal entry is ±v^k.
  bool unit_diagonal = false;
  /// entries · inverse is the identity matrix.
  bool inverse_verified = false;

  bool certifies_freeness() const { return closed && triangular && unit_diagonal && inverse_verified; }
};

/// The anti-spherical right module m_e · ℍ, where m_e T_s = −m_e for the
/// finite simple reflections.
class AntisphericalModule {
 public:
  static std::shared_ptr<const AntisphericalModule> create(std::shared_ptr<const HeckeAlgebra> hecke);

  const HeckeAlgebra& hecke() const { return *hecke_; }
  const AffineWeylGroup& group() const { return hecke_->group(); }
  const GroupPtr& group_ptr() const { return hecke_->group_ptr(); }

  AntisphericalElement zero() const { return AntisphericalElement(group_ptr()); }
  AntisphericalElement unit() const { return m(group().identity()); }
  AntisphericalElement m(const AffineWeylElement& w, LaurentPoly coeff = LaurentPoly(1)) const;

  /// m · h.
  AntisphericalElement act(const AntisphericalElement& m, const HeckeElement& h) const;
  /// Image of h in ℍ / span{C′_w : w ∉ ᶠW}, reducing the longest offending term first.
  AntisphericalElement project_from_hecke(const HeckeElement& h) const;
  /// m_e θ_λ.
  AntisphericalElement theta_basis(const Weight& lambda) const;
  FreenessMatrix a_freeness_matrix(int max_length) const;

 private:
  explicit AntisphericalModule(std::shared_ptr<const HeckeAlgebra> hecke) : hecke_(std::move(hecke)) {}

  std::shared_ptr<const HeckeAlgebra> hecke_;
};

}  // namespace heckekit
