#include "heckekit/errors.hpp"
#include "heckekit/serialize.hpp"
#include "heckekit/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace heckekit;

namespace {

struct Common {
  std::string type;
  std::string lattice = "weight";
  std::vector<std::string> lattice_basis;
  std::optional<int> budget;
  std::string format;
  bool timing = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void add_common(CLI::App& sub, Common& c) {
  sub.add_option("--type", c.type, "Root datum label, e.g. A2, B3, G2")->required();
  sub.add_option("--lattice", c.lattice, "weight, root or intermediate")->capture_default_str();
  sub.add_option("--lattice-basis", c.lattice_basis, "Generators of an intermediate lattice, e.g. [2,0] [0,1]");
  sub.add_option("--budget", c.budget, "Maximal element length (overrides HECKEKIT_MAX_LENGTH)");
  sub.add_option("--format", c.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  sub.add_flag("--timing", c.timing, "Include wall-clock duration in reports");
}

struct Session {
  ResourceBudget budget;
  std::shared_ptr<const RootDatum> datum;
  std::shared_ptr<const AffineWeylGroup> group;
  std::shared_ptr<const HeckeAlgebra> hecke;
  std::shared_ptr<const AntisphericalModule> module;

  explicit Session(const Common& c) {
    budget = ResourceBudget::from_environment();
    if (c.budget) budget.max_length = *c.budget;
    std::vector<Weight> basis;
    for (const auto& b : c.lattice_basis) basis.push_back(Weight::parse(b));
    datum = RootDatum::build(c.type, parse_lattice_kind(c.lattice), basis);
    group = AffineWeylGroup::create(datum, budget);
    hecke = HeckeAlgebra::create(group);
    module = AntisphericalModule::create(hecke);
  }
};

std::string format_of(const Common& c, const char* fallback, std::initializer_list<const char*> allowed) {
  const std::string f = c.format.empty() ? fallback : c.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("format '" + f + "' is not available for this command");
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int run_kl(const Common& c, const std::string& x_text, const std::string& w_text) {
  Session s(c);
  const auto fmt = format_of(c, "text", {"text", "json"});
  const auto w = s.group->parse(w_text);
  if (!x_text.empty()) {
    const auto x = s.group->parse(x_text);
    const auto p = s.hecke->kl_polynomial(x, w);
    if (fmt == "json")
      emit({{"type", s.datum->label()},
            {"x", s.group->to_string(x)},
            {"w", s.group->to_string(w)},
            {"P", p.to_string("q")},
            {"mu", s.hecke->kl_mu(x, w).str()}});
    else
      std::cout << p.to_string("q") << '\n';
    return 0;
  }
  const HeckeElement& cw = s.hecke->kl_basis(w);
  if (fmt == "json")
    emit({{"type", s.datum->label()}, {"w", s.group->to_string(w)}, {"C_prime", to_json(cw)}});
  else
    std::cout << cw.to_string() << '\n';
  return 0;
}

int run_theta(const Common& c, const std::string& lambda_text, bool center) {
  Session s(c);
  const auto fmt = format_of(c, "text", {"text", "json"});
  const Weight lambda = Weight::parse(lambda_text);
  s.datum->check_weight(lambda);
  const HeckeElement h = center ? s.hecke->center_element(lambda) : s.hecke->theta(lambda);
  if (fmt == "json")
    emit({{"type", s.datum->label()}, {"lambda", lambda.to_string()}, {center ? "z" : "theta", to_json(h)}});
  else
    std::cout << h.to_string() << '\n';
  return 0;
}

int run_masp(const Common& c, const std::string& m_text, const std::string& h_text, const std::string& w_text) {
  Session s(c);
  const auto fmt = format_of(c, "text", {"text", "json"});
  if (h_text.empty() == w_text.empty()) throw UsageError("masp-act needs exactly one of --hecke or --w");
  const AntisphericalElement m = m_text.empty() ? s.module->unit() : parse_antispherical(s.group, m_text);
  const HeckeElement h = w_text.empty() ? parse_hecke(s.group, h_text) : s.hecke->T(s.group->parse(w_text));
  const AntisphericalElement out = s.module->act(m, h);
  if (fmt == "json")
    emit({{"type", s.datum->label()}, {"m", to_json(m)}, {"h", to_json(h)}, {"result", to_json(out)}});
  else
    std::cout << out.to_string() << '\n';
  return 0;
}

int run_qweight(const Common& c, const std::string& lambda_text, const std::string& mu_text) {
  Session s(c);
  const auto fmt = format_of(c, "text", {"text", "json"});
  const Weight lambda = Weight::parse(lambda_text);
  const Weight mu = Weight::parse(mu_text);
  const auto& rd = *s.datum;
  rd.check_weight(lambda);
  if (!rd.is_dominant(lambda)) throw DomainError("weight " + lambda.to_string() + " is not dominant");
  const LaurentPoly p = lusztig_q_analogue(rd, lambda, rd.dominant_representative(mu));
  const LaurentPoly q = whittaker_trace(rd, lambda, mu);
  const auto mult = rd.weight_multiplicity(lambda, mu);
  if (fmt == "json") {
    emit({{"type", rd.label()},
          {"lambda", lambda.to_string()},
          {"mu", mu.to_string()},
          {"P_q", p.to_string("q")},
          {"Q_t", q.to_string("t")},
          {"Q_at_1", q.at_one().str()},
          {"freudenthal_mult", mult}});
  } else {
    std::cout << "P_q = " << p.to_string("q") << '\n'
              << "Q_t = " << q.to_string("t") << '\n'
              << "Q_at_1 = " << q.at_one().str() << '\n'
              << "freudenthal_mult = " << mult << '\n';
  }
  return 0;
}

int run_table(const Common& c, const std::string& lambda_text) {
  Session s(c);
  const auto fmt = format_of(c, "csv", {"text", "json", "csv"});
  const Weight lambda = Weight::parse(lambda_text);
  const auto table = whittaker_table(*s.group, lambda);
  if (fmt == "json") {
    emit(to_json(*s.group, table));
  } else if (fmt == "csv") {
    std::cout << to_csv(*s.group, table);
  } else {
    for (const auto& r : table.rows)
      std::cout << r.mu.to_string() << "  " << s.group->to_string(r.kappa_mu) << "  Q = " << r.q_t.to_string("t")
                << "  Q(1) = " << r.q_at_1.str() << "  mult = " << r.freudenthal_mult << (r.match ? "" : "  MISMATCH")
                << '\n';
  }
  return table.all_match() ? 0 : 1;
}

int run_verify(const Common& c, const std::string& suite, int bound, std::uint64_t seed) {
  const auto fmt = format_of(c, "text", {"text", "json"});
  ResourceBudget budget = ResourceBudget::from_environment();
  if (c.budget) budget.max_length = *c.budget;
  std::vector<Weight> basis;
  for (const auto& b : c.lattice_basis) basis.push_back(Weight::parse(b));
  const auto datum = RootDatum::build(c.type, parse_lattice_kind(c.lattice), basis);
  const SuiteReport report = run_suite(suite, datum, bound, seed, budget);
  if (fmt == "json") {
    emit(report.to_json(c.timing));
  } else {
    std::cout << report.to_text();
    if (c.timing) std::cout << "duration " << report.duration_seconds << " s\n";
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in extended affine Weyl groups and affine Hecke algebras"};
  app.require_subcommand(1);

  Common common;
  std::string x_text, w_text, m_text, h_text, lambda_text, mu_text, suite;
  int bound = 4;
  std::uint64_t seed = 0;
  std::function<int()> action;

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,w}, or C'_w without --x");
  add_common(*kl, common);
  kl->add_option("--x", x_text, "Lower element");
  kl->add_option("--w", w_text, "Upper element")->required();
  kl->callback([&] { action = [&] { return run_kl(common, x_text, w_text); }; });

  auto* theta = app.add_subcommand("theta", "Bernstein element theta_lambda in the T basis");
  add_common(*theta, common);
  theta->add_option("lambda", lambda_text, "Weight, e.g. [1,-1]")->required();
  theta->callback([&] { action = [&] { return run_theta(common, lambda_text, false); }; });

  auto* center = app.add_subcommand("center", "Central element z_lambda for dominant lambda");
  add_common(*center, common);
  center->add_option("lambda", lambda_text, "Dominant weight")->required();
  center->callback([&] { action = [&] { return run_theta(common, lambda_text, true); }; });

  auto* masp = app.add_subcommand("masp-act", "Right action on the anti-spherical module");
  add_common(*masp, common);
  masp->add_option("--module", m_text, "Module element, e.g. \"(1)*m[e]\" (default m_e)");
  masp->add_option("--hecke", h_text, "Hecke element, e.g. \"(v)*T[s0]\"");
  masp->add_option("--w", w_text, "Act by T_w");
  masp->callback([&] { action = [&] { return run_masp(common, m_text, h_text, w_text); }; });

  auto* qweight = app.add_subcommand("qweight", "q-analogue of the multiplicity of mu in V_lambda");
  add_common(*qweight, common);
  qweight->add_option("lambda", lambda_text, "Dominant weight")->required();
  qweight->add_option("mu", mu_text, "Weight")->required();
  qweight->callback([&] { action = [&] { return run_qweight(common, lambda_text, mu_text); }; });

  auto* table = app.add_subcommand("whittaker-table", "Whittaker traces for every weight of V_lambda");
  add_common(*table, common);
  table->add_option("lambda", lambda_text, "Dominant weight")->required();
  table->callback([&] { action = [&] { return run_table(common, lambda_text); }; });

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(*verify, common);
  verify->add_option("suite", suite, "braid, theta, center, kgroup, masp, euler, whittaker or all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--bound", bound, "Length / weight bound")->capture_default_str();
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->callback([&] { action = [&] { return run_verify(common, suite, bound, seed); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const ResourceError& e) {
    std::cerr << "resource refusal: " << e.what() << '\n';
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const DatumMismatch& e) {
    std::cerr << "datum mismatch: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
