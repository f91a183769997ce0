#include "heckekit/serialize.hpp"

#include "heckekit/errors.hpp"

#include <sstream>

namespace heckekit {

namespace {

Weight weight_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("weight coordinates must be a JSON array");
  std::vector<int> coords;
  for (const auto& c : j) coords.push_back(c.get<int>());
  return Weight::from_span(coords);
}

Json weight_to_json(const Weight& w) {
  Json j = Json::array();
  for (int c : w) j.push_back(c);
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename Element>
void parse_terms(std::string_view text, char tag, Element& out, const GroupPtr& group) {
  // (coeff)*X[element] + (coeff)*X[element] ...
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  auto fail = [&](const std::string& why) {
    throw ParseError("term list '" + std::string(text) + "': " + why);
  };
  skip_space();
  if (text.substr(i) == "0") return;
  while (true) {
    skip_space();
    if (i >= text.size() || text[i] != '(') fail("expected '('");
    int depth = 0;
    const std::size_t open = i;
    for (; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')' && --depth == 0) break;
    }
    if (i >= text.size()) fail("unbalanced parentheses");
    const LaurentPoly coeff = LaurentPoly::parse(text.substr(open + 1, i - open - 1));
    ++i;
    const std::string head = std::string("*") + tag + "[";
    if (text.substr(i, head.size()) != head) fail("expected '" + head + "'");
    i += head.size();
    const std::size_t start = i;
    depth = 1;
    for (; i < text.size(); ++i) {
      if (text[i] == '[') ++depth;
      if (text[i] == ']' && --depth == 0) break;
    }
    if (i >= text.size()) fail("unbalanced brackets");
    out.add_term(group->parse(text.substr(start, i - start)), coeff);
    ++i;
    skip_space();
    if (i == text.size()) return;
    if (text[i] != '+') fail("expected '+'");
    ++i;
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const WeightMultiset& weights) {
  Json j = Json::array();
  for (const auto& [w, m] : weights) j.push_back({{"coords", weight_to_json(w)}, {"mult", m}});
  return j;
}

WeightMultiset weight_multiset_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("weight multiset must be a JSON array");
  WeightMultiset out;
  for (const auto& e : j) out[weight_from_json(field(e, "coords"))] += field(e, "mult").get<std::int64_t>();
  return out;
}

Json to_json(const HeckeElement& h) {
  Json j = Json::array();
  if (h.is_zero()) return j;
  for (const auto& [w, c] : h.sorted_terms()) j.push_back({{"element", h.group().to_string(w)}, {"coeff", c.to_string()}});
  return j;
}

HeckeElement hecke_from_json(const GroupPtr& group, const Json& j) {
  if (!j.is_array()) throw ParseError("Hecke element must be a JSON array");
  HeckeElement h(group);
  for (const auto& e : j)
    h.add_term(group->parse(field(e, "element").get<std::string>()), LaurentPoly::parse(field(e, "coeff").get<std::string>()));
  return h;
}

HeckeElement parse_hecke(const GroupPtr& group, std::string_view text) {
  HeckeElement h(group);
  parse_terms(text, 'T', h, group);
  return h;
}

Json to_json(const AntisphericalElement& m) {
  Json j = Json::array();
  if (m.is_zero()) return j;
  for (const auto& [w, c] : m.sorted_terms())
    j.push_back({{"basis", "m"}, {"element", m.group().to_string(w)}, {"coeff", c.to_string()}});
  return j;
}

AntisphericalElement antispherical_from_json(const GroupPtr& group, const Json& j) {
  if (!j.is_array()) throw ParseError("anti-spherical element must be a JSON array");
  AntisphericalElement m(group);
  for (const auto& e : j) {
    if (field(e, "basis") != "m") throw ParseError("anti-spherical terms need basis \"m\"");
    m.add_term(group->parse(field(e, "element").get<std::string>()), LaurentPoly::parse(field(e, "coeff").get<std::string>()));
  }
  return m;
}

AntisphericalElement parse_antispherical(const GroupPtr& group, std::string_view text) {
  AntisphericalElement m(group);
  parse_terms(text, 'm', m, group);
  return m;
}

Json to_json(const GroupAlgebraElement& g) {
  Json j = Json::array();
  if (g.is_zero()) return j;
  for (const auto& [w, c] : g.terms()) j.push_back({{"element", g.group().to_string(w)}, {"coeff", c.str()}});
  return j;
}

Json to_json(const AffineWeylGroup& group, const WhittakerTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows)
    rows.push_back({{"lambda", table.lambda.to_string()},
                    {"mu", r.mu.to_string()},
                    {"kappa_mu", group.to_string(r.kappa_mu)},
                    {"P_q", r.p_q.to_string("q")},
                    {"Q_t", r.q_t.to_string("t")},
                    {"Q_at_1", r.q_at_1.str()},
                    {"freudenthal_mult", r.freudenthal_mult},
                    {"match", r.match}});
  return {{"type", group.datum().label()}, {"lambda", table.lambda.to_string()}, {"rows", rows}};
}

std::string to_csv(const AffineWeylGroup& group, const WhittakerTable& table) {
  std::ostringstream out;
  out << "lambda,mu,kappa_mu,P_q,Q_t,Q_at_1,freudenthal_mult,match\n";
  for (const auto& r : table.rows) {
    out << csv_field(table.lambda.to_string()) << ',' << csv_field(r.mu.to_string()) << ','
        << csv_field(group.to_string(r.kappa_mu)) << ',' << csv_field(r.p_q.to_string("q")) << ','
        << csv_field(r.q_t.to_string("t")) << ',' << r.q_at_1.str() << ',' << r.freudenthal_mult << ','
        << (r.match ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace heckekit
