#pragma once

#include "heckekit/root_datum.hpp"

#include <cstdlib>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace heckekit {

/// Resource limits shared by the expensive operations (KL basis,
/// enumeration, verification suites).
struct ResourceBudget {
  int max_length = 10;

  /// Default budget, overridden by the HECKEKIT_MAX_LENGTH environment variable.
  static ResourceBudget from_environment();
};

/// t_λ · w_f in the extended affine Weyl group Λ ⋊ W_f.
struct AffineWeylElement {
  Weight translation;
  FiniteWeylGroup::Index finite = 0;

  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;
  friend std::strong_ordering operator<=>(const AffineWeylElement& a, const AffineWeylElement& b) {
    if (auto c = a.translation <=> b.translation; c != 0) return c;
    return a.finite <=> b.finite;
  }
};

struct AffineWeylElementHash {
  std::size_t operator()(const AffineWeylElement& w) const {
    return w.translation.hash() * 31u + static_cast<std::size_t>(w.finite);
  }
};

/// w = Ω[omega] · s_{word[0]} ··· s_{word[k-1]}, k = ℓ(w).
struct ReducedWord {
  std::size_t omega = 0;
  std::vector<int> word;
};

/// The extended affine Weyl group W = Λ ⋊ W_f with Coxeter generators
/// s_0 (affine), s_1..s_n (finite) and the length-zero subgroup Ω ≅ Λ/Q.
///
/// Length is the Iwahori–Matsumoto formula
///   ℓ(t_λ u) = Σ_{α>0, u⁻¹α>0} |⟨λ,α∨⟩| + Σ_{α>0, u⁻¹α<0} |⟨λ,α∨⟩ − 1|,
/// so ℓ(t_λ) = ⟨λ, 2ρ∨⟩ for dominant λ, and s_0 = t_β s_β for β the short
/// dominant root.
class AffineWeylGroup {
 public:
  static std::shared_ptr<const AffineWeylGroup> create(std::shared_ptr<const RootDatum> datum,
                                                       ResourceBudget budget = ResourceBudget::from_environment());

  const RootDatum& datum() const { return *datum_; }
  const std::shared_ptr<const RootDatum>& datum_ptr() const { return datum_; }
  const FiniteWeylGroup& finite_group() const { return datum_->weyl(); }
  const ResourceBudget& budget() const { return budget_; }
  int rank() const { return datum_->rank(); }

  AffineWeylElement identity() const;
  /// t_λ; λ must lie in Λ.
  AffineWeylElement translation(const Weight& lambda) const;
  AffineWeylElement finite(FiniteWeylGroup::Index u) const;
  /// s_g for g in 0..rank.
  AffineWeylElement simple(int g) const;

  /// Ω with Ω[0] = e. When Ω is cyclic, Ω[k] = π^k for the chosen generator π.
  const std::vector<AffineWeylElement>& omega() const { return omega_; }
  bool omega_is_cyclic() const { return omega_cyclic_; }
  /// Index in omega() of the Ω-component of w (w ∈ Ω[k]·W').
  std::size_t omega_index(const AffineWeylElement& w) const;

  void check(const AffineWeylElement& w) const;
  AffineWeylElement multiply(const AffineWeylElement& x, const AffineWeylElement& y) const;
  AffineWeylElement inverse(const AffineWeylElement& w) const;
  AffineWeylElement left_simple(int g, const AffineWeylElement& w) const;
  AffineWeylElement right_simple(const AffineWeylElement& w, int g) const;
  AffineWeylElement from_word(std::size_t omega, std::span<const int> word) const;

  int length(const AffineWeylElement& w) const;
  /// Reduced word with the lexicographically smallest letter chosen at each step.
  ReducedWord reduced_word(const AffineWeylElement& w) const;
  /// Smallest g with ℓ(s_g w) < ℓ(w), or -1 when ℓ(w) = 0.
  int first_left_descent(const AffineWeylElement& w) const;

  /// Bruhat order; elements in different Ω-cosets are incomparable.
  bool bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& w) const;
  /// Membership in ᶠW: ℓ(s w) > ℓ(w) for every finite simple reflection s.
  bool is_f_minimal(const AffineWeylElement& w) const;
  /// The element of W_f · t_λ lying in ᶠW.
  AffineWeylElement kappa(const Weight& lambda) const;
  /// λ with w ∈ W_f · t_λ (inverse of kappa on ᶠW).
  Weight coset_weight(const AffineWeylElement& w) const;

  /// Every element of length ≤ L, sorted by (length, canonical order).
  std::vector<AffineWeylElement> enumerate_up_to_length(int max_length) const;

  /// "e", "t[1,-1]*s1*s2"; accepts also s0 and pi / pi^k on input.
  std::string to_string(const AffineWeylElement& w) const;
  AffineWeylElement parse(std::string_view text) const;

 private:
  AffineWeylGroup(std::shared_ptr<const RootDatum> datum, ResourceBudget budget);

  std::shared_ptr<const RootDatum> datum_;
  ResourceBudget budget_;
  Weight affine_root_;  // β, s_0 = t_β s_β
  FiniteWeylGroup::Index affine_reflection_ = 0;
  std::vector<AffineWeylElement> omega_;
  bool omega_cyclic_ = false;
};

}  // namespace heckekit
