// Weight multiplicities (Freudenthal), characters and the q-Kostant
// partition function.

#include "heckekit/errors.hpp"
#include "heckekit/root_datum.hpp"
#include "root_datum_memo.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace heckekit {

namespace {

int height_of(const Weight& root_coords) { return std::accumulate(root_coords.begin(), root_coords.end(), 0); }

}  // namespace

const WeightMultiset& RootDatum::dominant_weights_of(const Weight& lambda) const {
  if (!is_dominant(lambda)) throw DomainError("weight " + lambda.to_string() + " is not dominant");
  if (!memo_) throw std::logic_error("root datum memo not initialized");
  std::lock_guard lock(memo_->mutex);
  if (auto it = memo_->dominant.find(lambda); it != memo_->dominant.end()) return it->second;

  // Dominant weights below λ: walk down by positive roots staying dominant.
  std::vector<Weight> dom{lambda};
  std::unordered_set<Weight, WeightHash> seen{lambda};
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (const auto& r : positive_roots_) {
      Weight mu = dom[i] - r.weight;
      if (std::all_of(mu.begin(), mu.end(), [](int x) { return x >= 0; }) && seen.insert(mu).second)
        dom.push_back(mu);
    }
  }
  std::vector<std::pair<int, Weight>> order;
  for (const auto& mu : dom) order.emplace_back(height_of(*root_coordinates(lambda - mu)), mu);
  std::sort(order.begin(), order.end());

  WeightMultiset mult;
  mult[lambda] = 1;
  const Weight two_rho = 2 * rho();
  auto lookup = [&](const Weight& nu) -> std::int64_t {
    auto it = mult.find(dominant_representative(nu));
    return it == mult.end() ? 0 : it->second;
  };
  for (const auto& [h, mu] : order) {
    if (h == 0) continue;
    long long num = 0;
    for (const auto& r : positive_roots_) {
      Weight nu = mu + r.weight;
      for (;;) {
        const std::int64_t m = lookup(nu);
        if (m == 0) break;
        num += m * inner_with_root(nu, r.root_coords);
        nu += r.weight;
      }
    }
    num *= 2;
    // (λ+ρ,λ+ρ) − (μ+ρ,μ+ρ) = (λ−μ, λ+μ+2ρ)
    const Weight diff = *root_coordinates(lambda - mu);
    const long long den = inner_with_root(lambda + mu + two_rho, diff);
    if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion produced a non-integer");
    const long long m = num / den;
    if (m > 0) mult[mu] = m;
  }
  return memo_->dominant.emplace(lambda, std::move(mult)).first->second;
}

std::int64_t RootDatum::weight_multiplicity(const Weight& lambda, const Weight& mu) const {
  check_weight(mu);
  const auto& dom = dominant_weights_of(lambda);
  auto it = dom.find(dominant_representative(mu));
  return it == dom.end() ? 0 : it->second;
}

WeightMultiset RootDatum::weights_of(const Weight& lambda) const {
  WeightMultiset out;
  for (const auto& [mu, m] : dominant_weights_of(lambda)) {
    std::vector<Weight> orbit{mu};
    std::unordered_set<Weight, WeightHash> seen{mu};
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int j = 0; j < rank_; ++j) {
        Weight x = reflect(orbit[i], j);
        if (seen.insert(x).second) orbit.push_back(x);
      }
    for (const auto& x : orbit) out[x] = m;
  }
  return out;
}

LaurentPoly RootDatum::kostant_partition_q(const Weight& nu) const {
  auto coords = root_coordinates(nu);
  if (!coords || std::any_of(coords->begin(), coords->end(), [](int x) { return x < 0; })) return {};
  if (!memo_) throw std::logic_error("root datum memo not initialized");
  std::lock_guard lock(memo_->mutex);
  auto& tables = memo_->kostant;
  tables.resize(positive_roots_.size() + 1);

  // P_k(ν) counts multisets of the first k positive roots (ordered by height)
  // summing to ν, graded by size: P_k(ν) = Σ_j q^j P_{k−1}(ν − j α_k).
  auto rec = [&](auto&& self, std::size_t k, const Weight& x) -> LaurentPoly {
    if (k == 0) return x.is_zero() ? LaurentPoly(1) : LaurentPoly();
    if (auto it = tables[k].find(x); it != tables[k].end()) return it->second;
    const Weight& a = positive_roots_[k - 1].root_coords;
    LaurentPoly total;
    Weight rest = x;
    for (int j = 0;; ++j) {
      total += self(self, k - 1, rest).shifted(j);
      rest -= a;
      if (std::any_of(rest.begin(), rest.end(), [](int c) { return c < 0; })) break;
    }
    tables[k].emplace(x, total);
    return total;
  };
  return rec(rec, positive_roots_.size(), *coords);
}

WeightMultiset character_product(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset out;
  for (const auto& [x, mx] : a)
    for (const auto& [y, my] : b) out[x + y] += mx * my;
  return out;
}

std::map<Weight, std::int64_t> decompose_character(const RootDatum& rd, WeightMultiset character) {
  std::map<Weight, std::int64_t> out;
  for (;;) {
    std::erase_if(character, [](const auto& kv) { return kv.second == 0; });
    if (character.empty()) return out;
    const Weight* top = nullptr;
    int best = 0;
    for (const auto& [mu, m] : character) {
      if (!rd.is_dominant(mu)) continue;
      const int h = rd.two_rho_check(mu);
      if (!top || h > best) {
        top = &mu;
        best = h;
      }
    }
    if (!top) throw DomainError("character has no dominant weight");
    const Weight lambda = *top;
    const std::int64_t c = character.at(lambda);
    if (c < 0) throw DomainError("virtual character: negative multiplicity at " + lambda.to_string());
    out[lambda] += c;
    for (const auto& [mu, m] : rd.weights_of(lambda)) character[mu] -= c * m;
  }
}

}  // namespace heckekit
