#pragma once

#include "heckekit/antispherical.hpp"
#include "heckekit/hecke.hpp"
#include "heckekit/whittaker.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace heckekit {

using Json = nlohmann::ordered_json;

/// [{"coords": [..], "mult": n}, ...] in weight order.
Json to_json(const WeightMultiset& weights);
WeightMultiset weight_multiset_from_json(const Json& j);

/// [{"element": "t[1]*s1", "coeff": "v^-1 - v"}, ...] ordered by (length, element).
Json to_json(const HeckeElement& h);
HeckeElement hecke_from_json(const GroupPtr& group, const Json& j);
/// Inverse of HeckeElement::to_string.
HeckeElement parse_hecke(const GroupPtr& group, std::string_view text);

/// [{"basis": "m", "element": ..., "coeff": ...}, ...].
Json to_json(const AntisphericalElement& m);
AntisphericalElement antispherical_from_json(const GroupPtr& group, const Json& j);
AntisphericalElement parse_antispherical(const GroupPtr& group, std::string_view text);

/// [{"element": ..., "coeff": "3"}, ...].
Json to_json(const GroupAlgebraElement& g);

/// Rows with keys lambda, mu, kappa_mu, P_q, Q_t, Q_at_1, freudenthal_mult, match.
Json to_json(const AffineWeylGroup& group, const WhittakerTable& table);
std::string to_csv(const AffineWeylGroup& group, const WhittakerTable& table);

}  // namespace heckekit
