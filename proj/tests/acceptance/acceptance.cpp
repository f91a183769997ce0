// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "heckekit/antispherical.hpp"
#include "heckekit/hecke.hpp"
#include "heckekit/whittaker.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace heckekit;

namespace {

struct Tally {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& where) {
    ++instances;
    if (!ok && failures++ == 0) first = where();
  }
};

std::shared_ptr<const HeckeAlgebra> algebra(const char* label) {
  ResourceBudget budget;
  budget.max_length = 10;
  return HeckeAlgebra::create(AffineWeylGroup::create(RootDatum::build(label), budget));
}

std::vector<Weight> dominant_up_to(const RootDatum& rd, int bound) {
  std::vector<Weight> out;
  Weight w(rd.rank());
  std::function<void(int)> go = [&](int i) {
    if (i == rd.rank()) {
      if (rd.two_rho_check(w) <= bound) out.push_back(w);
      return;
    }
    for (int c = 0; c <= bound; ++c) {
      w[i] = c;
      go(i + 1);
    }
    w[i] = 0;
  };
  go(0);
  return out;
}

std::vector<Weight> box(int rank, int radius) {
  std::vector<Weight> out;
  Weight w(rank);
  std::function<void(int)> go = [&](int i) {
    if (i == rank) {
      out.push_back(w);
      return;
    }
    for (int c = -radius; c <= radius; ++c) {
      w[i] = c;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

AffineWeylElement random_element(const AffineWeylGroup& G, std::mt19937_64& rng, int max_word) {
  const auto len = static_cast<int>(rng() % static_cast<unsigned>(max_word + 1));
  std::vector<int> word;
  for (int i = 0; i < len; ++i) word.push_back(static_cast<int>(rng() % static_cast<unsigned>(G.rank() + 1)));
  return G.from_word(rng() % G.omega().size(), word);
}

HeckeElement random_hecke(const HeckeAlgebra& H, std::mt19937_64& rng, int max_word) {
  HeckeElement h = H.zero();
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < terms; ++i) {
    LaurentPoly c = LaurentPoly::monomial(static_cast<long long>(rng() % 7) - 3, static_cast<int>(rng() % 5) - 2);
    h += H.T(random_element(H.group(), rng, max_word), c);
  }
  return h;
}

Tally criterion_center() {
  Tally t;
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    auto H = algebra(label);
    const auto& G = H->group();
    for (const auto& lambda : dominant_up_to(G.datum(), 6)) {
      const HeckeElement z = H->center_element(lambda);
      const auto where = [&] { return std::string(label) + " lambda=" + lambda.to_string(); };
      for (int g = 0; g <= G.rank(); ++g) {
        const HeckeElement Ts = H->T(G.simple(g));
        t.check((z * Ts - Ts * z).is_zero(), where);
      }
      for (const auto& pi : G.omega()) {
        const HeckeElement Tp = H->T(pi);
        t.check((z * Tp - Tp * z).is_zero(), where);
      }
    }
  }
  return t;
}

Tally criterion_kgroup() {
  Tally t;
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    auto H = algebra(label);
    const auto& G = H->group();
    const auto& rd = G.datum();
    for (const auto& lambda : box(G.rank(), 4)) {
      t.check(H->specialize_v1(H->theta(lambda)) == GroupAlgebraElement::basis(H->group_ptr(), G.translation(lambda)),
              [&] { return std::string(label) + " theta " + lambda.to_string(); });
      if (!rd.is_dominant(lambda)) continue;
      GroupAlgebraElement expect(H->group_ptr());
      for (const auto& [mu, mult] : rd.weights_of(lambda)) expect.add_term(G.translation(mu), Integer(mult));
      t.check(H->specialize_v1(H->center_element(lambda)) == expect,
              [&] { return std::string(label) + " z " + lambda.to_string(); });
    }
  }
  return t;
}

Tally criterion_euler() {
  Tally t;
  for (const char* label : {"A1", "A2"}) {
    auto H = algebra(label);
    const auto& G = H->group();
    const auto elements = G.enumerate_up_to_length(6);
    for (const auto& w : elements)
      for (const auto& wp : elements) {
        const Integer expect = w == wp ? Integer(G.length(w) % 2 == 0 ? 1 : -1) : Integer(0);
        t.check(H->euler_pairing(w, wp) == expect,
                [&] { return std::string(label) + " w=" + G.to_string(w) + " w'=" + G.to_string(wp); });
      }
  }
  return t;
}

Tally criterion_masp() {
  Tally t;
  for (const char* label : {"A1", "A2"}) {
    auto H = algebra(label);
    auto M = AntisphericalModule::create(H);
    const auto& G = H->group();
    for (const auto& w : G.enumerate_up_to_length(8)) {
      const auto where = [&] { return std::string(label) + " w=" + G.to_string(w); };
      t.check(M->act(M->unit(), H->T(w)) == M->project_from_hecke(H->T(w)), where);
      t.check(M->project_from_hecke(H->kl_basis(w)).is_zero() == !G.is_f_minimal(w), where);
    }
  }
  return t;
}

Tally criterion_freeness() {
  Tally t;
  for (const char* label : {"A1", "A2"}) {
    auto M = AntisphericalModule::create(algebra(label));
    const FreenessMatrix fm = M->a_freeness_matrix(6);
    t.check(fm.certifies_freeness() && !fm.columns.empty(), [&] { return std::string(label); });
  }
  return t;
}

Tally criterion_whittaker() {
  Tally t;
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    auto rd = RootDatum::build(label);
    const auto& W = rd->weyl();
    for (const auto& lambda : dominant_up_to(*rd, 8))
      for (const auto& [mu, mult] : rd->weights_of(lambda)) {
        const auto where = [&] { return std::string(label) + " lambda=" + lambda.to_string() + " mu=" + mu.to_string(); };
        const LaurentPoly Q = whittaker_trace(*rd, lambda, mu);
        t.check(Q.at_one() == mult, where);
        for (FiniteWeylGroup::Index u = 0; u < W.order(); ++u) {
          const Weight wmu = W.act(u, mu);
          t.check(lusztig_q_analogue(*rd, lambda, wmu).at_one() == mult && whittaker_trace(*rd, lambda, wmu) == Q,
                  where);
        }
      }
  }
  return t;
}

Tally criterion_bar() {
  Tally t;
  for (const auto& [label, bound] : {std::pair{"A1", 8}, std::pair{"A2", 6}}) {
    auto H = algebra(label);
    const auto& G = H->group();
    for (const auto& w : G.enumerate_up_to_length(bound)) {
      const HeckeElement& c = H->kl_basis(w);
      const auto where = [&] { return std::string(label) + " w=" + G.to_string(w); };
      t.check(H->bar(c) == c, where);
      for (const auto& [x, coeff] : c.sorted_terms()) t.check(H->kl_polynomial(x, w).has_nonnegative_coefficients(), where);
    }
  }
  return t;
}

Tally criterion_sanity() {
  Tally t;
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    auto H = algebra(label);
    const auto& G = H->group();
    std::mt19937_64 rng(20240601);
    const auto word_product = [&](const std::vector<int>& word) {
      HeckeElement h = H->one();
      for (int g : word) h = h * H->T(G.simple(g));
      return h;
    };
    for (int i = 0; i <= G.rank(); ++i)
      for (int j = i + 1; j <= G.rank(); ++j) {
        const auto st = G.multiply(G.simple(i), G.simple(j));
        int m = 1;
        for (auto x = st; x != G.identity() && m <= 12; x = G.multiply(x, st)) ++m;
        if (m > 12) continue;
        std::vector<int> a, b;
        for (int k = 0; k < m; ++k) {
          a.push_back(k % 2 == 0 ? i : j);
          b.push_back(k % 2 == 0 ? j : i);
        }
        t.check(word_product(a) == word_product(b), [&] { return std::string(label) + " braid"; });
      }
    for (int k = 0; k < 500; ++k) {
      const auto a = random_hecke(*H, rng, 5), b = random_hecke(*H, rng, 5), c = random_hecke(*H, rng, 5);
      t.check((a * b) * c == a * (b * c), [&] { return std::string(label) + " associativity"; });
    }
    for (int k = 0; k < 100; ++k) {
      const auto w = random_element(G, rng, 8);
      t.check(H->T(w) * H->t_inverse(w) == H->one(), [&] { return std::string(label) + " inverse " + G.to_string(w); });
    }
    const auto dominant = dominant_up_to(G.datum(), 6);
    for (int k = 0; k < 50; ++k) {
      const Weight mu = dominant[rng() % dominant.size()];
      const Weight nu = dominant[rng() % dominant.size()];
      const Weight eta = dominant[rng() % dominant.size()];
      t.check(H->theta(mu, nu) == H->theta(mu + eta, nu + eta) && H->theta(mu, nu) == H->theta(mu - nu),
              [&] { return std::string(label) + " theta " + mu.to_string() + " " + nu.to_string(); });
    }
  }
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    Tally (*run)();
  };
  const Criterion criteria[] = {
      {1, "center: z_lambda commutes with every T_s and T_pi (A1 A2 B2 G2, <lambda,2rho> <= 6)", criterion_center},
      {2, "K-group: specialize(theta_lambda) = t_lambda, specialize(z_lambda) = sum of t_mu (|coords| <= 4)",
       criterion_kgroup},
      {3, "Euler pairing = (-1)^l(w) delta for l <= 6 (A1 A2)", criterion_euler},
      {4, "anti-spherical realizations agree and kernel is spanned by C'_w, w not minimal (l <= 8, A1 A2)",
       criterion_masp},
      {5, "rank-one freeness: a_freeness_matrix(6) unitriangular and inverted (A1 A2)", criterion_freeness},
      {6, "Whittaker: Q(1) = [mu:V_lambda] and W-translates agree (A1 A2 B2 G2, <lambda,2rho> <= 8)",
       criterion_whittaker},
      {7, "KL: bar(C'_w) = C'_w and P non-negative (A1 l <= 8, A2 l <= 6)", criterion_bar},
      {8, "sanity: braids, 500 associativity triples, 100 inverses, 50 theta decompositions", criterion_sanity},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Tally t = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.failures == 0 && t.instances > 0;
    all = all && ok;
    std::ostringstream line;
    line << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  [" << t.instances
         << " checks";
    if (!ok) line << ", " << t.failures << " failed, first: " << t.first;
    line.precision(2);
    line << std::fixed << ", " << secs << " s]";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
