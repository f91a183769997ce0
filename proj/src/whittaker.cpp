#include "heckekit/whittaker.hpp"

#include "heckekit/errors.hpp"

#include <algorithm>

namespace heckekit {

namespace {

void require_dominant(const RootDatum& rd, const Weight& lambda) {
  rd.check_weight(lambda);
  if (!rd.is_dominant(lambda)) throw DomainError("weight " + lambda.to_string() + " is not dominant");
}

}  // namespace

LaurentPoly lusztig_q_analogue(const RootDatum& rd, const Weight& lambda, const Weight& mu) {
  require_dominant(rd, lambda);
  rd.check_weight(mu);
  const auto& W = rd.weyl();
  const Weight lr = lambda + rd.rho();
  const Weight mr = mu + rd.rho();
  LaurentPoly out;
  for (FiniteWeylGroup::Index w = 0; w < W.order(); ++w) {
    const LaurentPoly k = rd.kostant_partition_q(W.act(w, lr) - mr);
    if (k.is_zero()) continue;
    if (W.length(w) % 2 == 0)
      out += k;
    else
      out -= k;
  }
  return out;
}

int whittaker_shift(const RootDatum& rd, const Weight& lambda) { return rd.two_rho_check(lambda) + rd.longest_length(); }

LaurentPoly whittaker_trace(const RootDatum& rd, const Weight& lambda, const Weight& mu) {
  require_dominant(rd, lambda);
  rd.check_weight(mu);
  const LaurentPoly p = lusztig_q_analogue(rd, lambda, rd.dominant_representative(mu));
  return p.substitute_power(2).shifted(whittaker_shift(rd, lambda));
}

bool WhittakerTable::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const WhittakerRow& r) { return r.match; });
}

WhittakerTable whittaker_table(const AffineWeylGroup& group, const Weight& lambda) {
  const auto& rd = group.datum();
  require_dominant(rd, lambda);
  WhittakerTable table;
  table.lambda = lambda;
  std::vector<std::pair<int, WhittakerRow>> keyed;
  for (const auto& [mu, mult] : rd.weights_of(lambda)) {
    WhittakerRow row;
    row.mu = mu;
    row.kappa_mu = group.kappa(mu);
    row.p_q = lusztig_q_analogue(rd, lambda, rd.dominant_representative(mu));
    row.q_t = row.p_q.substitute_power(2).shifted(whittaker_shift(rd, lambda));
    row.q_at_1 = row.q_t.at_one();
    row.freudenthal_mult = mult;
    row.match = row.q_at_1 == Integer(mult);
    keyed.emplace_back(group.length(row.kappa_mu), std::move(row));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.kappa_mu < b.second.kappa_mu;
  });
  for (auto& [len, row] : keyed) table.rows.push_back(std::move(row));
  return table;
}

bool matches_kl_polynomial(const HeckeAlgebra& hecke, const Weight& lambda, const Weight& mu,
                           const AffineWeylElement& x, const AffineWeylElement& w) {
  return lusztig_q_analogue(hecke.group().datum(), lambda, mu) == hecke.kl_polynomial(x, w);
}

}  // namespace heckekit
