#include "heckekit/antispherical.hpp"
#include "heckekit/errors.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace heckekit;

namespace {

std::shared_ptr<const AntisphericalModule> module(const std::string& label) {
  return AntisphericalModule::create(HeckeAlgebra::create(AffineWeylGroup::create(RootDatum::build(label))));
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

}  // namespace

TEST_CASE("sign representation on the finite part") {
  auto M = module("A2");
  const auto& G = M->group();
  const auto& H = M->hecke();
  for (int g = 1; g <= G.rank(); ++g) {
    CHECK(M->act(M->unit(), H.T(G.simple(g))) == M->m(G.identity(), -1));
    CHECK(M->act(M->unit(), H.kl_basis(G.simple(g))).is_zero());
  }
}

TEST_CASE("A1 action examples") {
  auto M = module("A1");
  const auto& G = M->group();
  const auto& H = M->hecke();
  const auto s0 = G.simple(0);
  const auto m_s0 = M->act(M->unit(), H.T(s0));
  CHECK(m_s0 == M->m(s0));
  CHECK(M->act(m_s0, H.T(s0)) == M->m(s0, LaurentPoly::parse("-1 + v^2")) + M->m(G.identity(), LaurentPoly::parse("v^2")));
  CHECK_THROWS_AS(M->m(G.simple(1)), DomainError);
  const auto pi = G.omega()[1];
  CHECK(M->act(M->unit(), H.T(pi)) == M->m(pi));
}

TEST_CASE("theta_basis golden values in A1") {
  auto M = module("A1");
  const auto& G = M->group();
  CHECK(M->theta_basis(Weight{0}) == M->unit());
  const auto pi = G.omega()[1];
  CHECK(G.kappa(Weight{-1}) == pi);
  CHECK(M->theta_basis(Weight{-1}) == M->m(pi, LaurentPoly::parse("-v")));
  CHECK(M->theta_basis(Weight{-1}).to_string() == "(-v)*m[t[1]*s1]");
  CHECK(M->theta_basis(Weight{1}) == M->m(G.translation(Weight{1}), LaurentPoly::parse("v^-1")));
}

TEST_CASE("module axioms") {
  std::mt19937_64 rng(47);
  for (const char* label : {"A1", "A2", "B2"}) {
    auto M = module(label);
    const auto& H = M->hecke();
    for (int i = 0; i < 30; ++i) {
      const auto a = random_hecke(H, rng, 4), b = random_hecke(H, rng, 4);
      const auto m = M->act(M->unit(), random_hecke(H, rng, 3));
      CHECK(M->act(M->act(m, a), b) == M->act(m, a * b));
    }
  }
}

TEST_CASE("the two realizations agree") {
  for (const std::string label : {"A1", "A2", "B2"}) {
    CAPTURE(label);
    auto M = module(label);
    const auto& G = M->group();
    const auto& H = M->hecke();
    const int L = label[1] == '1' ? 8 : 5;
    for (const auto& w : G.enumerate_up_to_length(L)) {
      const auto via_action = M->act(M->unit(), H.T(w));
      CHECK(M->project_from_hecke(H.T(w)) == via_action);
      if (G.is_f_minimal(w)) CHECK(via_action == M->m(w));
      CHECK(M->project_from_hecke(H.kl_basis(w)).is_zero() == !G.is_f_minimal(w));
    }
    CHECK(M->project_from_hecke(H.one()) == M->unit());
    std::mt19937_64 rng(53);
    for (int i = 0; i < 20; ++i) {
      const auto h = random_hecke(H, rng, 5);
      CHECK(M->project_from_hecke(h) == M->act(M->unit(), h));
    }
  }
}

TEST_CASE("central elements act through the theta basis") {
  for (const char* label : {"A1", "A2"}) {
    auto M = module(label);
    const auto& H = M->hecke();
    const auto& rd = M->group().datum();
    for (const Weight& lambda : {rd.rho(), Weight(rd.rank())}) {
      auto expect = M->zero();
      for (const auto& [mu, mult] : rd.weights_of(lambda)) expect += LaurentPoly(static_cast<long long>(mult)) * M->theta_basis(mu);
      CHECK(M->act(M->unit(), H.center_element(lambda)) == expect);
    }
  }
}

TEST_CASE("freeness over the Bernstein subalgebra") {
  for (const std::string label : {"A1", "A2", "B2"}) {
    CAPTURE(label);
    auto M = module(label);
    const auto fm = M->a_freeness_matrix(label[1] == '1' ? 6 : 4);
    CHECK(fm.closed);
    CHECK(fm.triangular);
    CHECK(fm.unit_diagonal);
    CHECK(fm.inverse_verified);
    CHECK(fm.certifies_freeness());
    CHECK(fm.columns.size() == fm.weights.size());
    for (std::size_t i = 0; i < fm.columns.size(); ++i) CHECK(M->group().kappa(fm.weights[i]) == fm.columns[i]);
  }
  // In A1, ℓ(κ(λ)) ≤ 2 exactly for λ ∈ {−3, −2, −1, 0, 1, 2}.
  CHECK(module("A1")->a_freeness_matrix(2).columns.size() == 6);
}
