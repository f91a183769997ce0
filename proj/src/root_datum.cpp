#include "heckekit/root_datum.hpp"

#include "heckekit/errors.hpp"
#include "root_datum_memo.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace heckekit {

namespace {

constexpr std::size_t kMaxWeylOrder = 60000;

using Rational = boost::multiprecision::cpp_rational;

// Adjugate and determinant of an n×n integer matrix (row-major).
std::pair<std::vector<long long>, long long> adjugate(const std::vector<long long>& m, int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<Rational> a(un * 2 * un);
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) a[i * 2 * un + j] = m[i * un + j];
    a[i * 2 * un + un + i] = 1;
  }
  Rational det = 1;
  for (std::size_t col = 0; col < un; ++col) {
    std::size_t piv = col;
    while (piv < un && a[piv * 2 * un + col] == 0) ++piv;
    if (piv == un) return {{}, 0};
    if (piv != col) {
      for (std::size_t j = 0; j < 2 * un; ++j) std::swap(a[piv * 2 * un + j], a[col * 2 * un + j]);
      det = -det;
    }
    const Rational p = a[col * 2 * un + col];
    det *= p;
    for (std::size_t j = 0; j < 2 * un; ++j) a[col * 2 * un + j] /= p;
    for (std::size_t i = 0; i < un; ++i) {
      if (i == col || a[i * 2 * un + col] == 0) continue;
      const Rational f = a[i * 2 * un + col];
      for (std::size_t j = 0; j < 2 * un; ++j) a[i * 2 * un + j] -= f * a[col * 2 * un + j];
    }
  }
  std::vector<long long> adj(un * un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      Rational v = a[i * 2 * un + un + j] * det;
      adj[i * un + j] = static_cast<long long>(boost::multiprecision::numerator(v));
    }
  return {adj, static_cast<long long>(boost::multiprecision::numerator(det))};
}

// Symmetric Gram matrix of simple roots, scaled so that short roots have length² 2.
std::vector<int> gram_matrix(char family, int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> b(un * un, 0);
  auto set = [&](int i, int j, int v) {  // 1-based
    b[static_cast<std::size_t>((i - 1) * n + (j - 1))] = v;
    b[static_cast<std::size_t>((j - 1) * n + (i - 1))] = v;
  };
  for (int i = 1; i <= n; ++i) set(i, i, 2);
  switch (family) {
    case 'A':
      for (int i = 1; i < n; ++i) set(i, i + 1, -1);
      break;
    case 'B':  // α_n short
      for (int i = 1; i < n; ++i) set(i, i, 4);
      for (int i = 1; i < n; ++i) set(i, i + 1, -2);
      break;
    case 'C':  // α_n long
      set(n, n, 4);
      for (int i = 1; i < n - 1; ++i) set(i, i + 1, -1);
      set(n - 1, n, -2);
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) set(i, i + 1, -1);
      set(n - 2, n, -1);
      break;
    case 'E':
      set(1, 3, -1);
      set(2, 4, -1);
      for (int i = 3; i < n; ++i) set(i, i + 1, -1);
      break;
    case 'F':
      set(1, 1, 4);
      set(2, 2, 4);
      set(1, 2, -2);
      set(2, 3, -2);
      set(3, 4, -1);
      break;
    case 'G':  // α_1 short
      set(2, 2, 6);
      set(1, 2, -3);
      break;
    default:
      throw ParseError(std::string("unknown Cartan type family '") + family + "'");
  }
  return b;
}

std::pair<char, int> parse_label(std::string_view label) {
  if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
    throw ParseError("unknown type label '" + std::string(label) + "'");
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  int n = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), n);
  if (ec != std::errc() || ptr != label.data() + label.size())
    throw ParseError("unknown type label '" + std::string(label) + "'");
  const bool ok = (family == 'A' && n >= 1) || (family == 'B' && n >= 2) || (family == 'C' && n >= 2) ||
                  (family == 'D' && n >= 4) || (family == 'E' && n >= 6 && n <= 8) ||
                  (family == 'F' && n == 4) || (family == 'G' && n == 2);
  if (!ok) throw ParseError("unknown type label '" + std::string(label) + "'");
  if (n > kMaxRank) throw ParseError("rank above " + std::to_string(kMaxRank) + " is not supported");
  return {family, n};
}

}  // namespace

// ---------------------------------------------------------------------------
// Weight

Weight::Weight(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxRank) throw DomainError("weight rank out of range");
}

Weight::Weight(std::initializer_list<int> coords) : rank_(static_cast<int>(coords.size())) {
  if (rank_ > kMaxRank) throw DomainError("weight rank out of range");
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Weight Weight::from_span(std::span<const int> coords) {
  Weight w(static_cast<int>(coords.size()));
  std::copy(coords.begin(), coords.end(), w.c_.begin());
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(begin(), end(), [](int x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank_ != rank_) throw DatumMismatch("weight rank mismatch");
  for (int i = 0; i < rank_; ++i) (*this)[i] += o[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank_ != rank_) throw DatumMismatch("weight rank mismatch");
  for (int i = 0; i < rank_; ++i) (*this)[i] -= o[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (int i = 0; i < rank_; ++i) w[i] = -w[i];
  return w;
}

Weight operator*(int k, Weight a) {
  for (int i = 0; i < a.rank_; ++i) a[i] *= k;
  return a;
}

bool operator==(const Weight& a, const Weight& b) {
  return a.rank_ == b.rank_ && std::equal(a.begin(), a.end(), b.begin());
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string Weight::to_string() const {
  std::string s = "[";
  for (int i = 0; i < rank_; ++i) {
    if (i) s += ",";
    s += std::to_string((*this)[i]);
  }
  return s + "]";
}

Weight Weight::parse(std::string_view text) {
  auto fail = [&] { throw ParseError("malformed weight '" + std::string(text) + "'"); };
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']') fail();
  std::vector<int> coords;
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view tok = body.substr(0, comma);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) fail();
    coords.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) fail();
  }
  if (coords.empty() || coords.size() > static_cast<std::size_t>(kMaxRank)) fail();
  return from_span(coords);
}

std::size_t Weight::hash() const {
  std::size_t h = static_cast<std::size_t>(rank_);
  for (int x : *this) h = h * 1000003u ^ static_cast<std::size_t>(static_cast<unsigned>(x) * 2654435761u);
  return h;
}

std::string_view to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::weight: return "weight";
    case LatticeKind::root: return "root";
    case LatticeKind::intermediate: return "intermediate";
  }
  return "weight";
}

LatticeKind parse_lattice_kind(std::string_view text) {
  if (text == "weight") return LatticeKind::weight;
  if (text == "root") return LatticeKind::root;
  if (text == "intermediate") return LatticeKind::intermediate;
  throw ParseError("unknown lattice kind '" + std::string(text) + "' (weight|root|intermediate)");
}

// ---------------------------------------------------------------------------
// FiniteWeylGroup

FiniteWeylGroup::FiniteWeylGroup(const RootDatum& rd) : rank_(rd.rank()) {
  const int n = rank_;
  const auto un = static_cast<std::size_t>(n);
  const Weight rho = rd.rho();

  // Elements are identified by the image of ρ, which has trivial stabilizer.
  std::unordered_map<Weight, Index, WeightHash> by_rho;
  std::vector<Weight> images;
  auto add = [&](const Weight& img, std::vector<int> word, const int* matrix) {
    const auto idx = static_cast<Index>(images.size());
    by_rho.emplace(img, idx);
    images.push_back(img);
    lengths_.push_back(static_cast<int>(word.size()));
    words_.push_back(std::move(word));
    matrices_.insert(matrices_.end(), matrix, matrix + un * un);
    return idx;
  };

  std::vector<int> ident(un * un, 0);
  for (std::size_t i = 0; i < un; ++i) ident[i * un + i] = 1;
  add(rho, {}, ident.data());

  // Breadth-first by length; within a level, discovery order is the
  // lexicographic order of the smallest reduced words.
  std::vector<Index> level{0};
  std::vector<int> m(un * un);
  while (!level.empty()) {
    std::vector<Index> next;
    for (Index u : level) {
      for (int g = 1; g <= n; ++g) {
        // u·s_g acts as M_u ∘ s_g; column k of s_g is e_k − δ_{k,g−1} α_{g−1}.
        const int* mu = &matrices_[u * un * un];
        for (std::size_t r = 0; r < un; ++r)
          for (std::size_t k = 0; k < un; ++k) {
            int v = mu[r * un + k];
            if (k == static_cast<std::size_t>(g - 1)) {
              v = 0;
              for (std::size_t t = 0; t < un; ++t) v += mu[r * un + t] * ((t == k ? 1 : 0) - rd.cartan(g - 1, static_cast<int>(t)));
            }
            m[r * un + k] = v;
          }
        Weight img(n);
        for (std::size_t r = 0; r < un; ++r) {
          int v = 0;
          for (std::size_t k = 0; k < un; ++k) v += m[r * un + k] * rho[static_cast<int>(k)];
          img[static_cast<int>(r)] = v;
        }
        if (by_rho.count(img)) continue;
        if (images.size() >= kMaxWeylOrder)
          throw ResourceError("finite Weyl group of " + rd.label() + " exceeds " + std::to_string(kMaxWeylOrder) +
                              " elements");
        std::vector<int> word = words_[u];
        word.push_back(g);
        next.push_back(add(img, std::move(word), m.data()));
      }
    }
    level = std::move(next);
  }

  const std::size_t order = images.size();
  left_.resize(order * un);
  right_.resize(order * un);
  for (Index w = 0; w < order; ++w) {
    for (int g = 1; g <= n; ++g) {
      // s_g(x) = x − x_{g−1} α_{g−1}; w·s_g(ρ) = w(ρ − α_{g−1}).
      right_[w * un + static_cast<Index>(g - 1)] = by_rho.at(act(w, rho - rd.simple_root(g - 1)));
      left_[w * un + static_cast<Index>(g - 1)] = by_rho.at(rd.reflect(images[w], g - 1));
    }
  }
  inverse_.resize(order);
  for (Index w = 0; w < order; ++w) {
    Index x = identity();
    const auto& wd = words_[w];
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) x = right_simple(x, *it);
    inverse_[w] = x;
  }

  // Positive-root table for the inversion masks and reflections.
  const auto& roots = rd.positive_roots();
  std::unordered_map<Weight, int, WeightHash> root_sign;
  for (const auto& r : roots) {
    root_sign.emplace(r.weight, 1);
    root_sign.emplace(-r.weight, -1);
  }
  neg_inverse_.assign(order, 0);
  for (Index w = 0; w < order; ++w) {
    const Index wi = inverse_[w];
    for (std::size_t k = 0; k < roots.size(); ++k)
      if (root_sign.at(act(wi, roots[k].weight)) < 0) neg_inverse_[w] |= (std::uint64_t{1} << k);
  }
  reflections_.resize(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    // s_β(ρ) = ρ − ⟨ρ, β∨⟩β
    const int c = rd.pairing(rho, k);
    reflections_[k] = by_rho.at(rho - c * roots[k].weight);
  }
}

FiniteWeylGroup::Index FiniteWeylGroup::multiply(Index a, Index b) const {
  for (int g : words_[b]) a = right_simple(a, g);
  return a;
}

FiniteWeylGroup::Index FiniteWeylGroup::from_word(std::span<const int> word) const {
  Index w = identity();
  for (int g : word) {
    if (g < 1 || g > rank_) throw DomainError("finite generator index out of range");
    w = right_simple(w, g);
  }
  return w;
}

Weight FiniteWeylGroup::act(Index w, const Weight& x) const {
  const auto un = static_cast<std::size_t>(rank_);
  const int* m = &matrices_[w * un * un];
  Weight y(rank_);
  for (std::size_t r = 0; r < un; ++r) {
    int v = 0;
    for (std::size_t k = 0; k < un; ++k) v += m[r * un + k] * x[static_cast<int>(k)];
    y[static_cast<int>(r)] = v;
  }
  return y;
}

// ---------------------------------------------------------------------------
// RootDatum

RootDatum::~RootDatum() = default;

std::shared_ptr<const RootDatum> RootDatum::build(std::string_view label, LatticeKind kind,
                                                  std::vector<Weight> lattice_basis) {
  auto [family, n] = parse_label(label);
  std::shared_ptr<RootDatum> rd(new RootDatum());
  rd->label_ = std::string(1, family) + std::to_string(n);
  rd->family_ = family;
  rd->rank_ = n;
  rd->kind_ = kind;

  const auto un = static_cast<std::size_t>(n);
  const std::vector<int> b = gram_matrix(family, n);
  rd->cartan_.resize(un * un);
  rd->sym_.resize(un);
  for (std::size_t i = 0; i < un; ++i) {
    rd->sym_[i] = b[i * un + i] / 2;
    for (std::size_t j = 0; j < un; ++j) rd->cartan_[i * un + j] = 2 * b[i * un + j] / b[j * un + j];
  }

  if (kind == LatticeKind::intermediate) {
    if (lattice_basis.size() != un) throw DomainError("intermediate lattice needs exactly rank basis vectors");
    for (const auto& v : lattice_basis)
      if (v.rank() != n) throw DomainError("lattice basis vector has wrong rank");
  } else if (!lattice_basis.empty()) {
    throw DomainError("lattice basis is only accepted for the intermediate lattice kind");
  }
  rd->lattice_basis_ = std::move(lattice_basis);
  rd->memo_ = std::make_unique<Memo>();
  rd->finish_build();
  return rd;
}

void RootDatum::finish_build() {
  const int n = rank_;
  const auto un = static_cast<std::size_t>(n);

  // Positive roots by closure of the simple roots under simple reflections,
  // tracked in root coordinates.
  std::vector<Weight> found;
  std::unordered_set<Weight, WeightHash> seen;
  std::deque<Weight> queue;
  for (int i = 0; i < n; ++i) {
    Weight e(n);
    e[i] = 1;
    seen.insert(e);
    found.push_back(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Weight beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int c = 0;  // ⟨β, α_i∨⟩
      for (int j = 0; j < n; ++j) c += beta[j] * cartan(j, i);
      Weight r = beta;
      r[i] -= c;
      if (std::any_of(r.begin(), r.end(), [](int x) { return x < 0; }) || r.is_zero()) continue;
      if (seen.insert(r).second) {
        found.push_back(r);
        queue.push_back(r);
      }
    }
  }
  auto height = [](const Weight& w) { return std::accumulate(w.begin(), w.end(), 0); };
  std::sort(found.begin(), found.end(), [&](const Weight& a, const Weight& b) {
    const int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : b < a;
  });
  if (found.size() > 64) throw ResourceError("more than 64 positive roots are not supported");

  positive_roots_.clear();
  simple_index_.assign(un, 0);
  for (const auto& a : found) {
    PositiveRoot pr;
    pr.root_coords = a;
    pr.height = height(a);
    pr.weight = Weight(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) pr.weight[j] += a[i] * cartan(i, j);
    long long norm2 = 0;  // (α, α) with short simple roots of length² 2
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm2 += static_cast<long long>(a[i]) * a[j] * cartan(i, j) * sym_[static_cast<std::size_t>(j)];
    const long long d_alpha = norm2 / 2;
    pr.coroot_coords = Weight(n);
    for (int i = 0; i < n; ++i) {
      const long long num = static_cast<long long>(a[i]) * sym_[static_cast<std::size_t>(i)];
      if (num % d_alpha != 0) throw std::logic_error("non-integral coroot");
      pr.coroot_coords[i] = static_cast<int>(num / d_alpha);
    }
    if (pr.height == 1)
      for (int i = 0; i < n; ++i)
        if (a[i] == 1) simple_index_[static_cast<std::size_t>(i)] = static_cast<int>(positive_roots_.size());
    positive_roots_.push_back(std::move(pr));
  }
  short_dominant_ = 0;
  int best = -1;
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    const auto& c = positive_roots_[k].coroot_coords;
    const int h = std::accumulate(c.begin(), c.end(), 0);
    if (h > best) {
      best = h;
      short_dominant_ = k;
    }
  }

  // λ = Cᵀ a in weight coordinates.
  std::vector<long long> ct(un * un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) ct[j * un + i] = cartan_[i * un + j];
  std::tie(root_adj_, root_det_) = adjugate(ct, n);

  switch (kind_) {
    case LatticeKind::weight:
      lattice_basis_.clear();
      for (int i = 0; i < n; ++i) {
        Weight e(n);
        e[i] = 1;
        lattice_basis_.push_back(e);
      }
      break;
    case LatticeKind::root:
      lattice_basis_.clear();
      for (int i = 0; i < n; ++i) lattice_basis_.push_back(simple_root(i));
      break;
    case LatticeKind::intermediate:
      break;
  }
  std::vector<long long> lb(un * un);
  for (std::size_t k = 0; k < un; ++k)
    for (std::size_t r = 0; r < un; ++r) lb[r * un + k] = lattice_basis_[k][static_cast<int>(r)];
  std::tie(lattice_adj_, lattice_det_) = adjugate(lb, n);
  if (lattice_det_ == 0) throw DomainError("lattice basis is not of full rank");
  for (int i = 0; i < n; ++i)
    if (!in_lattice(simple_root(i))) throw DomainError("intermediate lattice basis does not contain the root lattice");

  weyl_ = std::make_unique<FiniteWeylGroup>(*this);
}

Weight RootDatum::rho() const {
  Weight r(rank_);
  for (int i = 0; i < rank_; ++i) r[i] = 1;
  return r;
}

int RootDatum::pairing(const Weight& lambda, std::size_t k) const {
  const auto& c = positive_roots_[k].coroot_coords;
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += lambda[i] * c[i];
  return s;
}

int RootDatum::two_rho_check(const Weight& lambda) const {
  int s = 0;
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) s += pairing(lambda, k);
  return s;
}

long long RootDatum::inner_with_root(const Weight& lambda, const Weight& root_coords) const {
  long long s = 0;
  for (int j = 0; j < rank_; ++j) s += static_cast<long long>(lambda[j]) * root_coords[j] * sym_[static_cast<std::size_t>(j)];
  return s;
}

Weight RootDatum::make_weight(std::initializer_list<int> coords) const {
  Weight w(coords);
  check_weight(w);
  return w;
}

void RootDatum::check_weight(const Weight& lambda) const {
  if (lambda.rank() != rank_)
    throw DatumMismatch("weight " + lambda.to_string() + " has rank " + std::to_string(lambda.rank()) + ", datum " +
                        label_ + " has rank " + std::to_string(rank_));
}

bool RootDatum::in_lattice(const Weight& lambda) const {
  check_weight(lambda);
  const auto un = static_cast<std::size_t>(rank_);
  for (std::size_t i = 0; i < un; ++i) {
    long long s = 0;
    for (std::size_t j = 0; j < un; ++j) s += lattice_adj_[i * un + j] * lambda[static_cast<int>(j)];
    if (s % lattice_det_ != 0) return false;
  }
  return true;
}

std::optional<Weight> RootDatum::root_coordinates(const Weight& lambda) const {
  check_weight(lambda);
  const auto un = static_cast<std::size_t>(rank_);
  Weight a(rank_);
  for (std::size_t i = 0; i < un; ++i) {
    long long s = 0;
    for (std::size_t j = 0; j < un; ++j) s += root_adj_[i * un + j] * lambda[static_cast<int>(j)];
    if (s % root_det_ != 0) return std::nullopt;
    a[static_cast<int>(i)] = static_cast<int>(s / root_det_);
  }
  return a;
}

Weight RootDatum::from_root_coordinates(const Weight& coeffs) const {
  check_weight(coeffs);
  Weight w(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w[j] += coeffs[i] * cartan(i, j);
  return w;
}

bool RootDatum::is_dominant(const Weight& lambda) const {
  check_weight(lambda);
  return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x >= 0; });
}

bool RootDatum::dominance_leq(const Weight& lambda, const Weight& mu) const {
  auto a = root_coordinates(mu - lambda);
  return a && std::all_of(a->begin(), a->end(), [](int x) { return x >= 0; });
}

Weight RootDatum::reflect(const Weight& lambda, int i) const {
  Weight w = lambda;
  const int c = lambda[i];
  for (int j = 0; j < rank_; ++j) w[j] -= c * cartan(i, j);
  return w;
}

Weight RootDatum::dominant_representative(const Weight& lambda) const {
  check_weight(lambda);
  Weight w = lambda;
  for (;;) {
    int i = 0;
    while (i < rank_ && w[i] >= 0) ++i;
    if (i == rank_) return w;
    w = reflect(w, i);
  }
}

Integer RootDatum::weyl_dimension(const Weight& lambda) const {
  if (!is_dominant(lambda)) throw DomainError("weyl_dimension needs a dominant weight, got " + lambda.to_string());
  Integer num = 1, den = 1;
  const Weight shifted = lambda + rho();
  const Weight r = rho();
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    num *= pairing(shifted, k);
    den *= pairing(r, k);
  }
  return num / den;
}

}  // namespace heckekit
