#pragma once

#include "heckekit/hecke.hpp"

#include <cstdint>
#include <vector>

namespace heckekit {

/// P_{λ,μ}(q) = Σ_{w∈W_f} (−1)^{ℓ(w)} 𝒫_q(w(λ+ρ) − (μ+ρ)), with μ taken as
/// given. λ must be dominant.
LaurentPoly lusztig_q_analogue(const RootDatum& rd, const Weight& lambda, const Weight& mu);

/// The exponent ℓ(λ) + ℓ(w₀) in Q_{λ,μ} = t^{ℓ(λ)+ℓ(w₀)} P_{λ,μ}(t²), with
/// ℓ(λ) read as ℓ(t_λ) = ⟨λ, 2ρ∨⟩.
int whittaker_shift(const RootDatum& rd, const Weight& lambda);

/// Q_{λ,μ}(t), computed at the dominant representative of μ.
LaurentPoly whittaker_trace(const RootDatum& rd, const Weight& lambda, const Weight& mu);

struct WhittakerRow {
  Weight mu;
  AffineWeylElement kappa_mu;
  LaurentPoly p_q;  // P_{λ,μ⁺}(q)
  LaurentPoly q_t;  // Q_{λ,μ}(t)
  Integer q_at_1;
  std::int64_t freudenthal_mult = 0;
  bool match = false;
};

/// One row per weight of V_λ, ordered by κ(μ) (length, then canonical order).
/// Weights outside V_λ have Q_{λ,μ} = 0 and get no row.
struct WhittakerTable {
  Weight lambda;
  std::vector<WhittakerRow> rows;

  bool all_match() const;
};

WhittakerTable whittaker_table(const AffineWeylGroup& group, const Weight& lambda);

/// Compares P_{λ,μ} with the affine KL polynomial P_{x,w} for user-chosen x, w.
bool matches_kl_polynomial(const HeckeAlgebra& hecke, const Weight& lambda, const Weight& mu,
                           const AffineWeylElement& x, const AffineWeylElement& w);

}  // namespace heckekit
