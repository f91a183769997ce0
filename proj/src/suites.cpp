#include "heckekit/suites.hpp"

#include "heckekit/errors.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace heckekit {

namespace {

class Recorder {
 public:
  template <typename Detail>
  void check(const std::string& name, bool ok, Detail&& detail) {
    CheckResult& c = entry(name);
    ++c.instances;
    if (!ok && c.failures++ == 0) c.counterexample = detail();
  }
  CheckResult& entry(const std::string& name) {
    CheckResult& c = checks_[name];
    c.name = name;
    return c;
  }
  std::vector<CheckResult> take() {
    std::vector<CheckResult> out;
    for (auto& [name, c] : checks_) out.push_back(std::move(c));
    return out;
  }

 private:
  std::map<std::string, CheckResult> checks_;
};

struct Context {
  std::shared_ptr<const AffineWeylGroup> group;
  std::shared_ptr<const HeckeAlgebra> hecke;
  std::shared_ptr<const AntisphericalModule> module;
  int bound;
  std::mt19937_64 rng;
  Recorder rec;

  const AffineWeylGroup& G() const { return *group; }
  const HeckeAlgebra& H() const { return *hecke; }
  const RootDatum& rd() const { return group->datum(); }

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng() % n); }

  std::string str(const AffineWeylElement& w) const { return G().to_string(w); }

  AffineWeylElement random_element(int max_word) {
    const auto len = static_cast<int>(pick(static_cast<std::size_t>(max_word + 1)));
    std::vector<int> word;
    for (int i = 0; i < len; ++i) word.push_back(static_cast<int>(pick(static_cast<std::size_t>(G().rank() + 1))));
    return G().from_word(pick(G().omega().size()), word);
  }

  LaurentPoly random_coeff() {
    return LaurentPoly::monomial(static_cast<long long>(pick(7)) - 3, static_cast<int>(pick(5)) - 2);
  }

  HeckeElement random_hecke(int max_word) {
    HeckeElement h = H().zero();
    const std::size_t terms = 1 + pick(3);
    for (std::size_t i = 0; i < terms; ++i) h += H().T(random_element(max_word), random_coeff());
    return h;
  }

  /// Dominant λ ∈ Λ with ⟨λ, 2ρ∨⟩ ≤ bound.
  std::vector<Weight> dominant_weights() const {
    std::vector<Weight> out;
    Weight w(rd().rank());
    std::function<void(int)> go = [&](int i) {
      if (rd().two_rho_check(w) > bound) return;
      if (i == rd().rank()) {
        if (rd().in_lattice(w)) out.push_back(w);
        return;
      }
      for (int c = 0; c <= bound; ++c) {
        w[i] = c;
        if (rd().two_rho_check(w) > bound) break;
        go(i + 1);
      }
      w[i] = 0;
    };
    go(0);
    return out;
  }

  /// λ ∈ Λ with ⟨λ⁺, 2ρ∨⟩ ≤ bound.
  std::vector<Weight> all_weights() const {
    std::set<Weight> out;
    const auto& W = rd().weyl();
    for (const auto& lambda : dominant_weights())
      for (FiniteWeylGroup::Index u = 0; u < W.order(); ++u) out.insert(W.act(u, lambda));
    return {out.begin(), out.end()};
  }
};

Json weight_json(const Weight& w) { return w.to_string(); }

HeckeElement word_product(const Context& cx, const std::vector<int>& word) {
  HeckeElement h = cx.H().one();
  for (int g : word) h = h * cx.H().T(cx.G().simple(g));
  return h;
}

void braid_suite(Context& cx) {
  const auto& G = cx.G();
  const auto& H = cx.H();
  const int n = G.rank();
  const LaurentPoly v2 = LaurentPoly::monomial(1, 2);

  for (int g = 0; g <= n; ++g) {
    const HeckeElement Ts = H.T(G.simple(g));
    cx.rec.check("braid.quadratic", Ts * Ts == (v2 - LaurentPoly(1)) * Ts + v2 * H.one(),
                 [&] { return Json{{"generator", g}}; });
  }

  cx.rec.entry("braid.relations");
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const auto st = G.multiply(G.simple(i), G.simple(j));
      int m = 0;
      for (auto x = st; m < 12; x = G.multiply(x, st)) {
        ++m;
        if (x == G.identity()) break;
      }
      if (m >= 12) continue;  // infinite order: no relation
      std::vector<int> a, b;
      for (int k = 0; k < m; ++k) {
        a.push_back(k % 2 == 0 ? i : j);
        b.push_back(k % 2 == 0 ? j : i);
      }
      cx.rec.check("braid.relations", word_product(cx, a) == word_product(cx, b),
                   [&] { return Json{{"i", i}, {"j", j}, {"m", m}}; });
    }

  for (std::size_t k = 0; k < G.omega().size(); ++k)
    for (int g = 0; g <= n; ++g) {
      // π T_s π⁻¹ = T_{π s π⁻¹}, a simple reflection again.
      const auto& pi = G.omega()[k];
      const auto conj = G.multiply(G.multiply(pi, G.simple(g)), G.inverse(pi));
      cx.rec.check("braid.omega_conjugation", H.T(pi) * H.T(G.simple(g)) == H.T(conj) * H.T(pi) && G.length(conj) == 1,
                   [&] { return Json{{"omega", cx.str(pi)}, {"generator", g}}; });
    }

  for (int k = 0; k < 100; ++k) {
    const auto a = cx.random_hecke(cx.bound), b = cx.random_hecke(cx.bound), c = cx.random_hecke(cx.bound);
    cx.rec.check("braid.associativity", (a * b) * c == a * (b * c),
                 [&] { return Json{{"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()}}; });
  }

  for (int k = 0; k < 100; ++k) {
    const auto w = cx.random_element(cx.bound);
    const HeckeElement& inv = H.t_inverse(w);
    cx.rec.check("braid.inverse", H.T(w) * inv == H.one() && inv * H.T(w) == H.one(),
                 [&] { return Json{{"w", cx.str(w)}}; });
  }

  for (int k = 0; k < 30; ++k) {
    const auto a = cx.random_hecke(cx.bound), b = cx.random_hecke(cx.bound);
    cx.rec.check("braid.bar_involution", H.bar(H.bar(a)) == a && H.bar(a * b) == H.bar(a) * H.bar(b),
                 [&] { return Json{{"a", a.to_string()}, {"b", b.to_string()}}; });
  }

  for (const auto& w : G.enumerate_up_to_length(cx.bound)) {
    const HeckeElement& c = H.kl_basis(w);
    cx.rec.check("braid.kl_self_dual", H.bar(c) == c, [&] { return Json{{"w", cx.str(w)}}; });
    for (const auto& [x, coeff] : c.sorted_terms()) {
      const LaurentPoly p = H.kl_polynomial(x, w);
      const int gap = G.length(w) - G.length(x);
      const bool ok = p.has_nonnegative_coefficients() && p.coefficient(0) == 1 &&
                      (gap == 0 ? p == LaurentPoly(1) : 2 * p.max_degree() <= gap - 1) && G.bruhat_leq(x, w);
      cx.rec.check("braid.kl_positivity", ok,
                   [&] { return Json{{"x", cx.str(x)}, {"w", cx.str(w)}, {"P", p.to_string("q")}}; });
    }
  }
}

void theta_suite(Context& cx) {
  const auto& G = cx.G();
  const auto& H = cx.H();
  const auto dominant = cx.dominant_weights();
  const auto weights = cx.all_weights();

  cx.rec.check("theta.zero", H.theta(Weight(G.rank())) == H.one(), [] { return Json(nullptr); });

  for (const auto& lambda : dominant) {
    const auto t = G.translation(lambda);
    cx.rec.check("theta.dominant", H.theta(lambda) == H.T(t, LaurentPoly::monomial(1, -G.length(t))),
                 [&] { return Json{{"lambda", weight_json(lambda)}}; });
  }

  for (int k = 0; k < 50; ++k) {
    const Weight mu = dominant[cx.pick(dominant.size())];
    const Weight nu = dominant[cx.pick(dominant.size())];
    const Weight eta = dominant[cx.pick(dominant.size())];
    const HeckeElement a = H.theta(mu, nu);
    cx.rec.check("theta.decomposition", a == H.theta(mu + eta, nu + eta) && a == H.theta(mu - nu), [&] {
      return Json{{"mu", weight_json(mu)}, {"nu", weight_json(nu)}, {"eta", weight_json(eta)}};
    });
  }

  for (int k = 0; k < 30; ++k) {
    const Weight a = weights[cx.pick(weights.size())];
    const Weight b = weights[cx.pick(weights.size())];
    const HeckeElement ab = H.theta(a) * H.theta(b);
    cx.rec.check("theta.multiplicative", ab == H.theta(a + b) && ab == H.theta(b) * H.theta(a),
                 [&] { return Json{{"lambda", weight_json(a)}, {"mu", weight_json(b)}}; });
  }

  for (const auto& lambda : weights)
    cx.rec.check("theta.inverse", H.theta(lambda) * H.theta(-lambda) == H.one(),
                 [&] { return Json{{"lambda", weight_json(lambda)}}; });
}

void center_suite(Context& cx) {
  const auto& G = cx.G();
  const auto& H = cx.H();
  const auto& rd = cx.rd();
  const auto dominant = cx.dominant_weights();
  std::map<Weight, HeckeElement> z;
  for (const auto& lambda : dominant) z.emplace(lambda, H.center_element(lambda));

  cx.rec.check("center.zero", z.at(Weight(G.rank())) == H.one(), [] { return Json(nullptr); });

  for (const auto& [lambda, zl] : z) {
    HeckeElement expect = H.zero();
    for (const auto& [mu, mult] : rd.weights_of(lambda)) expect += LaurentPoly(mult) * H.theta(mu);
    cx.rec.check("center.expansion", zl == expect, [&] { return Json{{"lambda", weight_json(lambda)}}; });

    for (int g = 0; g <= G.rank(); ++g) {
      const HeckeElement Ts = H.T(G.simple(g));
      cx.rec.check("center.commutes_simple", zl * Ts == Ts * zl,
                   [&] { return Json{{"lambda", weight_json(lambda)}, {"generator", g}}; });
    }
    for (const auto& pi : G.omega()) {
      const HeckeElement Tp = H.T(pi);
      cx.rec.check("center.commutes_omega", zl * Tp == Tp * zl,
                   [&] { return Json{{"lambda", weight_json(lambda)}, {"omega", cx.str(pi)}}; });
    }
  }

  for (const auto& [a, za] : z)
    for (const auto& [b, zb] : z) {
      if (b < a || !z.contains(a + b)) continue;
      const auto parts = decompose_character(rd, character_product(rd.weights_of(a), rd.weights_of(b)));
      HeckeElement expect = H.zero();
      for (const auto& [nu, mult] : parts) expect += LaurentPoly(mult) * H.center_element(nu);
      const HeckeElement ab = za * zb;
      cx.rec.check("center.product", ab == expect && ab == zb * za,
                   [&] { return Json{{"lambda", weight_json(a)}, {"mu", weight_json(b)}}; });
    }
}

void kgroup_suite(Context& cx) {
  const auto& G = cx.G();
  const auto& H = cx.H();
  const auto& gp = cx.group;

  for (const auto& lambda : cx.all_weights())
    cx.rec.check("kgroup.theta",
                 H.specialize_v1(H.theta(lambda)) == GroupAlgebraElement::basis(gp, G.translation(lambda)),
                 [&] { return Json{{"lambda", weight_json(lambda)}}; });

  for (const auto& lambda : cx.dominant_weights()) {
    GroupAlgebraElement expect(gp);
    for (const auto& [mu, mult] : cx.rd().weights_of(lambda)) expect.add_term(G.translation(mu), Integer(mult));
    cx.rec.check("kgroup.center", H.specialize_v1(H.center_element(lambda)) == expect,
                 [&] { return Json{{"lambda", weight_json(lambda)}}; });
  }

  for (const auto& w : G.enumerate_up_to_length(cx.bound))
    cx.rec.check("kgroup.wakimoto", H.wakimoto_class(w) == GroupAlgebraElement::basis(gp, w),
                 [&] { return Json{{"w", cx.str(w)}}; });

  for (int k = 0; k < 30; ++k) {
    const auto a = cx.random_hecke(cx.bound), b = cx.random_hecke(cx.bound);
    cx.rec.check("kgroup.ring_map", H.specialize_v1(a * b) == H.specialize_v1(a) * H.specialize_v1(b),
                 [&] { return Json{{"a", a.to_string()}, {"b", b.to_string()}}; });
  }
}

void masp_suite(Context& cx) {
  const auto& G = cx.G();
  const auto& H = cx.H();
  const auto& M = *cx.module;
  const auto elements = G.enumerate_up_to_length(cx.bound);
  std::vector<AffineWeylElement> minimal;
  for (const auto& w : elements)
    if (G.is_f_minimal(w)) minimal.push_back(w);

  for (int g = 1; g <= G.rank(); ++g)
    cx.rec.check("masp.sign", M.act(M.unit(), H.T(G.simple(g))) == LaurentPoly(-1) * M.unit(),
                 [&] { return Json{{"generator", g}}; });

  for (const auto& w : elements) {
    const auto via_action = M.act(M.unit(), H.T(w));
    cx.rec.check("masp.realization", via_action == M.project_from_hecke(H.T(w)), [&] {
      return Json{{"w", cx.str(w)}, {"action", via_action.to_string()}};
    });
    cx.rec.check("masp.kernel", M.project_from_hecke(H.kl_basis(w)).is_zero() == !G.is_f_minimal(w),
                 [&] { return Json{{"w", cx.str(w)}}; });
  }

  for (int k = 0; k < 30; ++k) {
    AntisphericalElement m = M.zero();
    for (int i = 0; i < 2; ++i) m += M.m(minimal[cx.pick(minimal.size())], cx.random_coeff());
    const auto a = cx.random_hecke(cx.bound / 2), b = cx.random_hecke(cx.bound / 2);
    cx.rec.check("masp.module_axioms", M.act(M.act(m, a), b) == M.act(m, a * b) && M.act(m, H.one()) == m, [&] {
      return Json{{"m", m.to_string()}, {"a", a.to_string()}, {"b", b.to_string()}};
    });
  }

  for (const auto& lambda : cx.dominant_weights()) {
    AntisphericalElement expect = M.zero();
    for (const auto& [mu, mult] : cx.rd().weights_of(lambda)) expect += LaurentPoly(mult) * M.theta_basis(mu);
    cx.rec.check("masp.central", M.act(M.unit(), H.center_element(lambda)) == expect,
                 [&] { return Json{{"lambda", weight_json(lambda)}}; });
  }

  const FreenessMatrix fm = M.a_freeness_matrix(cx.bound);
  cx.rec.check("masp.freeness", fm.certifies_freeness(), [&] {
    return Json{{"closed", fm.closed},
                {"triangular", fm.triangular},
                {"unit_diagonal", fm.unit_diagonal},
                {"inverse_verified", fm.inverse_verified}};
  });
}

void euler_suite(Context& cx) {
  const auto& G = cx.G();
  const auto& H = cx.H();
  const auto elements = G.enumerate_up_to_length(cx.bound);
  std::vector<GroupAlgebraElement> classes;
  classes.reserve(elements.size());
  for (const auto& w : elements) {
    classes.push_back(H.wakimoto_class(w));
    cx.rec.check("euler.wakimoto", classes.back() == GroupAlgebraElement::basis(cx.group, w),
                 [&] { return Json{{"w", cx.str(w)}}; });
  }
  // Eul_w(J_{w'}) = (−1)^{ℓ(w)} · (coefficient of w in [J_{w'}]).
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      Integer e = classes[j].coefficient(elements[i]);
      if (G.length(elements[i]) % 2 != 0) e = -e;
      const Integer expect = i == j ? Integer(G.length(elements[i]) % 2 == 0 ? 1 : -1) : Integer(0);
      cx.rec.check("euler.pairing", e == expect, [&] {
        return Json{{"w", cx.str(elements[i])}, {"w_prime", cx.str(elements[j])}, {"value", e.str()}};
      });
    }
  for (int k = 0; k < 20; ++k) {
    const auto& w = elements[cx.pick(elements.size())];
    const auto& wp = elements[cx.pick(elements.size())];
    const Integer expect = w == wp ? Integer(G.length(w) % 2 == 0 ? 1 : -1) : Integer(0);
    cx.rec.check("euler.pairing_api", H.euler_pairing(w, wp) == expect,
                 [&] { return Json{{"w", cx.str(w)}, {"w_prime", cx.str(wp)}}; });
  }
}

void whittaker_suite(Context& cx) {
  const auto& rd = cx.rd();
  const auto& W = rd.weyl();
  for (const auto& lambda : cx.dominant_weights()) {
    const auto weights = rd.weights_of(lambda);
    for (const auto& [mu, mult] : weights) {
      const LaurentPoly Q = whittaker_trace(rd, lambda, mu);
      const auto where = [&] { return Json{{"lambda", weight_json(lambda)}, {"mu", weight_json(mu)}}; };
      cx.rec.check("whittaker.dimension", Q.at_one() == mult, where);

      bool invariant = true;
      for (FiniteWeylGroup::Index u = 0; u < W.order() && invariant; ++u) {
        const Weight wmu = W.act(u, mu);
        invariant = whittaker_trace(rd, lambda, wmu) == Q && lusztig_q_analogue(rd, lambda, wmu).at_one() == mult;
      }
      cx.rec.check("whittaker.invariance", invariant, where);

      const Weight dom = rd.dominant_representative(mu);
      const LaurentPoly p = lusztig_q_analogue(rd, lambda, dom);
      const auto h = rd.root_coordinates(lambda - dom);
      int height = 0;
      if (h)
        for (int x : *h) height += x;
      cx.rec.check("whittaker.positivity", h && p.has_nonnegative_coefficients() && p.max_degree() <= height, where);
    }
    cx.rec.check("whittaker.top", lusztig_q_analogue(rd, lambda, lambda) == LaurentPoly(1),
                 [&] { return Json{{"lambda", weight_json(lambda)}}; });
    for (int i = 0; i < rd.rank(); ++i) {
      const Weight above = lambda + rd.simple_root(i);
      cx.rec.check("whittaker.vanishing", whittaker_trace(rd, lambda, above).is_zero(),
                   [&] { return Json{{"lambda", weight_json(lambda)}, {"mu", weight_json(above)}}; });
    }
    const auto table = whittaker_table(cx.G(), lambda);
    cx.rec.check("whittaker.table", table.all_match() && table.rows.size() == weights.size(),
                 [&] { return Json{{"lambda", weight_json(lambda)}}; });
  }
}

using SuiteFn = void (*)(Context&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"braid", braid_suite}, {"theta", theta_suite}, {"center", center_suite},       {"kgroup", kgroup_suite},
      {"masp", masp_suite},   {"euler", euler_suite}, {"whittaker", whittaker_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

Json SuiteReport::to_json(bool include_duration) const {
  Json list = Json::array();
  for (const auto& c : checks) {
    Json j = {{"name", c.name}, {"passed", c.passed()}, {"instances", c.instances}, {"failures", c.failures}};
    if (!c.passed()) j["counterexample"] = c.counterexample;
    list.push_back(std::move(j));
  }
  Json out = {{"schema", 1},   {"suite", suite}, {"datum", datum},       {"lattice", lattice},
              {"bound", bound}, {"seed", seed},  {"passed", passed()}, {"checks", std::move(list)}};
  if (include_duration) out["duration_seconds"] = duration_seconds;
  return out;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << "  datum " << datum << " (" << lattice << ")  bound " << bound << "  seed " << seed
      << '\n';
  for (const auto& c : checks) {
    out << "  " << (c.passed() ? "PASS" : "FAIL") << "  " << c.name << "  " << c.instances << " instances";
    if (!c.passed()) out << ", " << c.failures << " failed; first: " << c.counterexample.dump();
    out << '\n';
  }
  out << (passed() ? "PASS" : "FAIL") << " (" << checks.size() << " checks)\n";
  return out.str();
}

SuiteReport run_suite(std::string_view name, std::shared_ptr<const RootDatum> datum, int bound, std::uint64_t seed,
                      ResourceBudget budget) {
  std::vector<SuiteFn> selected;
  for (const auto& [n, fn] : registry())
    if (name == "all" || name == n) selected.push_back(fn);
  if (selected.empty()) throw ParseError("unknown suite '" + std::string(name) + "'");
  if (bound < 0) throw DomainError("bound must be non-negative");
  if (bound > budget.max_length)
    throw ResourceError("bound " + std::to_string(bound) + " exceeds the resource budget (max length " +
                        std::to_string(budget.max_length) + ")");

  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::string(name);
  report.datum = datum->label();
  report.lattice = std::string(to_string(datum->lattice_kind()));
  report.bound = bound;
  report.seed = seed;

  Context cx{.group = AffineWeylGroup::create(datum, budget), .bound = bound, .rng = std::mt19937_64(seed)};
  cx.hecke = HeckeAlgebra::create(cx.group);
  cx.module = AntisphericalModule::create(cx.hecke);
  for (SuiteFn fn : selected) fn(cx);
  report.checks = cx.rec.take();
  report.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace heckekit
