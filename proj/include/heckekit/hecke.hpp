#pragma once

#include "heckekit/affine_weyl.hpp"
#include "heckekit/laurent.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace heckekit {

using GroupPtr = std::shared_ptr<const AffineWeylGroup>;

/// True when both pointers describe the same extended affine Weyl group.
bool same_group(const AffineWeylGroup& a, const AffineWeylGroup& b);

/// Σ c_w T_w with c_w ∈ ℤ[v, v⁻¹]; the quadratic relation is
/// T_s² = (v² − 1) T_s + v².
class HeckeElement {
 public:
  using Terms = std::unordered_map<AffineWeylElement, LaurentPoly, AffineWeylElementHash>;

  HeckeElement() = default;
  explicit HeckeElement(GroupPtr group) : group_(std::move(group)) {}
  static HeckeElement basis(GroupPtr group, const AffineWeylElement& w, LaurentPoly coeff = LaurentPoly(1));

  const AffineWeylGroup& group() const;
  const GroupPtr& group_ptr() const { return group_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coefficient(const AffineWeylElement& w) const;
  void add_term(const AffineWeylElement& w, const LaurentPoly& coeff);
  /// Terms ordered by (length, canonical element order).
  std::vector<std::pair<AffineWeylElement, LaurentPoly>> sorted_terms() const;

  /// T_{s_g} · h and T_{s_g}⁻¹ · h.
  HeckeElement left_simple(int g) const;
  HeckeElement left_simple_inverse(int g) const;
  /// T_π · h for π of length zero.
  HeckeElement left_omega(const AffineWeylElement& pi) const;
  /// T_w · h.
  HeckeElement left_basis(const AffineWeylElement& w) const;

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  HeckeElement& operator*=(const LaurentPoly& scalar);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator-(HeckeElement a) { return a *= LaurentPoly(-1); }
  friend HeckeElement operator*(const LaurentPoly& c, HeckeElement a) { return a *= c; }
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

  /// "(v^-1)*T[t[1]] + (1)*T[e]", or "0".
  std::string to_string() const;

 private:
  void require_compatible(const HeckeElement& other) const;

  GroupPtr group_;
  Terms terms_;
};

/// Element of the group ring ℤ[W].
class GroupAlgebraElement {
 public:
  using Terms = std::map<AffineWeylElement, Integer>;

  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(GroupPtr group) : group_(std::move(group)) {}
  static GroupAlgebraElement basis(GroupPtr group, const AffineWeylElement& w, Integer coeff = 1);

  const AffineWeylGroup& group() const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const AffineWeylElement& w) const;
  void add_term(const AffineWeylElement& w, const Integer& coeff);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

  /// "3*[t[1]] - [e]", or "0".
  std::string to_string() const;

 private:
  GroupPtr group_;
  Terms terms_;
};

/// The affine Hecke algebra of an extended affine Weyl group, with the
/// Bernstein elements, the Kazhdan–Lusztig basis C′ and the center.
/// Memo tables are internally synchronized.
class HeckeAlgebra {
 public:
  static std::shared_ptr<const HeckeAlgebra> create(GroupPtr group);
  ~HeckeAlgebra();

  const AffineWeylGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  HeckeElement zero() const { return HeckeElement(group_); }
  HeckeElement one() const { return T(group_->identity()); }
  HeckeElement T(const AffineWeylElement& w, LaurentPoly coeff = LaurentPoly(1)) const;

  /// T_w⁻¹. Memoized results stay valid for the lifetime of the algebra.
  const HeckeElement& t_inverse(const AffineWeylElement& w) const;
  /// T_w⁻¹ computed along the given word, which must be reduced.
  HeckeElement t_inverse(const ReducedWord& word) const;

  /// θ_λ; independent of the decomposition used.
  const HeckeElement& theta(const Weight& lambda) const;
  /// v^{−ℓ(t_μ)} T_{t_μ} · (v^{−ℓ(t_ν)} T_{t_ν})⁻¹ for dominant μ, ν.
  HeckeElement theta(const Weight& mu, const Weight& nu) const;

  /// v ↦ v⁻¹, T_w ↦ T_{w⁻¹}⁻¹.
  HeckeElement bar(const HeckeElement& h) const;

  /// C′_w = v^{−ℓ(w)} Σ_{x ≤ w} P_{x,w}(v²) T_x.
  const HeckeElement& kl_basis(const AffineWeylElement& w) const;
  /// P_{x,w} as a polynomial in q.
  LaurentPoly kl_polynomial(const AffineWeylElement& x, const AffineWeylElement& w) const;
  /// Coefficient of q^{(ℓ(w) − ℓ(x) − 1)/2} in P_{x,w}.
  Integer kl_mu(const AffineWeylElement& x, const AffineWeylElement& w) const;

  /// z_λ = Σ_μ [μ : V_λ] θ_μ for dominant λ.
  HeckeElement center_element(const Weight& lambda) const;

  /// The ring map v ↦ 1, T_w ↦ w.
  GroupAlgebraElement specialize_v1(const HeckeElement& h) const;
  /// [J_w] = specialize_v1(θ_λ T_u) for w = t_λ u.
  GroupAlgebraElement wakimoto_class(const AffineWeylElement& w) const;
  /// (−1)^{ℓ(w)} · coefficient of w in [J_{w'}].
  Integer euler_pairing(const AffineWeylElement& w, const AffineWeylElement& w_prime) const;

 private:
  explicit HeckeAlgebra(GroupPtr group);
  const HeckeElement& kl_basis_locked(const AffineWeylElement& w) const;

  GroupPtr group_;
  mutable std::mutex theta_mutex_;
  mutable std::unordered_map<Weight, HeckeElement, WeightHash> theta_cache_;
  mutable std::mutex inverse_mutex_;
  mutable std::unordered_map<AffineWeylElement, HeckeElement, AffineWeylElementHash> inverse_cache_;
  mutable std::recursive_mutex kl_mutex_;
  mutable std::unordered_map<AffineWeylElement, HeckeElement, AffineWeylElementHash> kl_cache_;
};

}  // namespace heckekit
