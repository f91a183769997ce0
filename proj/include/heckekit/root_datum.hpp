#pragma once

#include "heckekit/laurent.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace heckekit {

inline constexpr int kMaxRank = 8;

/// Integer vector of fixed small rank. Weights are always written in the
/// basis of fundamental weights, so coordinate i is ⟨λ, α_i∨⟩.
class Weight {
 public:
  Weight() = default;
  explicit Weight(int rank);
  Weight(std::initializer_list<int> coords);
  static Weight from_span(std::span<const int> coords);

  int rank() const { return rank_; }
  int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const int* begin() const { return c_.data(); }
  const int* end() const { return c_.data() + rank_; }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  friend Weight operator*(int k, Weight a);

  friend bool operator==(const Weight& a, const Weight& b);
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  /// "[1,-1]"
  std::string to_string() const;
  static Weight parse(std::string_view text);

  std::size_t hash() const;

 private:
  std::array<int, kMaxRank> c_{};
  int rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

enum class LatticeKind { weight, root, intermediate };

std::string_view to_string(LatticeKind kind);
LatticeKind parse_lattice_kind(std::string_view text);

struct PositiveRoot {
  Weight weight;        // fundamental-weight coordinates
  Weight root_coords;   // coefficients on simple roots
  Weight coroot_coords; // coefficients of α∨ on simple coroots
  int height = 0;
};

class RootDatum;

/// The finite Weyl group W_f, tabulated. Element 0 is the identity; elements
/// are ordered by length, then by their lexicographically smallest reduced
/// word. Generators are numbered 1..rank to match the affine numbering.
class FiniteWeylGroup {
 public:
  using Index = std::uint32_t;

  explicit FiniteWeylGroup(const RootDatum& rd);

  std::size_t order() const { return lengths_.size(); }
  int rank() const { return rank_; }
  static constexpr Index identity() { return 0; }
  Index longest() const { return static_cast<Index>(order() - 1); }

  int length(Index w) const { return lengths_[w]; }
  const std::vector<int>& word(Index w) const { return words_[w]; }
  Index left_simple(int g, Index w) const { return left_[w * rank_ + static_cast<Index>(g - 1)]; }
  Index right_simple(Index w, int g) const { return right_[w * rank_ + static_cast<Index>(g - 1)]; }
  Index multiply(Index a, Index b) const;
  Index inverse(Index w) const { return inverse_[w]; }
  Index reflection(std::size_t root_index) const { return reflections_[root_index]; }
  Index from_word(std::span<const int> word) const;

  Weight act(Index w, const Weight& x) const;
  /// Bit k set iff w⁻¹(α_k) is a negative root.
  std::uint64_t inverted_roots_of_inverse(Index w) const { return neg_inverse_[w]; }

 private:
  int rank_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::vector<Index> left_;
  std::vector<Index> right_;
  std::vector<Index> inverse_;
  std::vector<Index> reflections_;
  std::vector<int> matrices_;  // order * rank * rank, row-major, acting on column vectors
  std::vector<std::uint64_t> neg_inverse_;
};

using WeightMultiset = std::map<Weight, std::int64_t>;

/// A finite root system with a chosen lattice Q ⊆ Λ ⊆ P.
///
/// Everything is immutable after build(); the multiplicity and partition
/// function memo tables are internally synchronized.
class RootDatum {
 public:
  /// label: "A1".."A8", "B2".., "C2".., "D4".., "E6", "F4", "G2".
  /// lattice_basis is required (and only allowed) for LatticeKind::intermediate.
  static std::shared_ptr<const RootDatum> build(std::string_view label, LatticeKind kind = LatticeKind::weight,
                                                std::vector<Weight> lattice_basis = {});

  RootDatum(const RootDatum&) = delete;
  RootDatum& operator=(const RootDatum&) = delete;
  ~RootDatum();

  const std::string& label() const { return label_; }
  char family() const { return family_; }
  int rank() const { return rank_; }
  LatticeKind lattice_kind() const { return kind_; }
  const std::vector<Weight>& lattice_basis() const { return lattice_basis_; }

  /// ⟨α_i, α_j∨⟩, 0-based.
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
  /// (α_i, α_i)/2, normalized so short roots have 1.
  int symmetrizer(int i) const { return sym_[static_cast<std::size_t>(i)]; }
  const Weight& simple_root(int i) const { return positive_roots_[static_cast<std::size_t>(simple_index_[static_cast<std::size_t>(i)])].weight; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
  /// ρ in fundamental-weight coordinates: (1, ..., 1).
  Weight rho() const;
  const FiniteWeylGroup& weyl() const { return *weyl_; }
  std::size_t finite_weyl_order() const { return weyl_->order(); }
  int longest_length() const { return static_cast<int>(positive_roots_.size()); }

  /// Index of the positive root whose coroot is the highest coroot (the short dominant root).
  std::size_t short_dominant_root() const { return short_dominant_; }

  /// ⟨λ, α_k∨⟩ for the k-th positive root.
  int pairing(const Weight& lambda, std::size_t k) const;
  /// ⟨λ, 2ρ∨⟩.
  int two_rho_check(const Weight& lambda) const;
  /// (λ, α) for λ in weight coordinates and α given by root coordinates.
  long long inner_with_root(const Weight& lambda, const Weight& root_coords) const;

  Weight make_weight(std::initializer_list<int> coords) const;
  void check_weight(const Weight& lambda) const;
  bool in_lattice(const Weight& lambda) const;
  /// Root coordinates if λ lies in the root lattice.
  std::optional<Weight> root_coordinates(const Weight& lambda) const;
  Weight from_root_coordinates(const Weight& coeffs) const;

  bool is_dominant(const Weight& lambda) const;
  /// λ ⪯ μ: μ − λ is a non-negative integer combination of simple roots.
  bool dominance_leq(const Weight& lambda, const Weight& mu) const;
  Weight dominant_representative(const Weight& lambda) const;
  /// s_i(λ), 0-based simple root index.
  Weight reflect(const Weight& lambda, int i) const;

  /// Weyl dimension formula.
  Integer weyl_dimension(const Weight& lambda) const;
  /// Freudenthal recursion. Precondition: λ dominant (DomainError otherwise).
  std::int64_t weight_multiplicity(const Weight& lambda, const Weight& mu) const;
  /// All weights of V_λ with multiplicities.
  WeightMultiset weights_of(const Weight& lambda) const;
  /// Multiplicities of the dominant weights of V_λ only.
  const WeightMultiset& dominant_weights_of(const Weight& lambda) const;

  /// q-Kostant partition function as a polynomial in q.
  LaurentPoly kostant_partition_q(const Weight& nu) const;

 private:
  RootDatum() = default;
  void finish_build();

  std::string label_;
  char family_ = 'A';
  int rank_ = 0;
  LatticeKind kind_ = LatticeKind::weight;
  std::vector<Weight> lattice_basis_;
  std::vector<int> cartan_;
  std::vector<int> sym_;
  std::vector<PositiveRoot> positive_roots_;
  std::vector<int> simple_index_;
  std::size_t short_dominant_ = 0;
  std::vector<long long> root_adj_;   // adjugate of Cᵀ, row-major
  long long root_det_ = 1;
  std::vector<long long> lattice_adj_;
  long long lattice_det_ = 1;
  std::unique_ptr<FiniteWeylGroup> weyl_;

  struct Memo;
  std::unique_ptr<Memo> memo_;
};

/// Character (weight multiset) of V_a ⊗ V_b.
WeightMultiset character_product(const WeightMultiset& a, const WeightMultiset& b);
/// Decomposes a W_f-invariant character into irreducibles: highest weight → multiplicity.
std::map<Weight, std::int64_t> decompose_character(const RootDatum& rd, WeightMultiset character);

}  // namespace heckekit
