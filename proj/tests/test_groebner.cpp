#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace kreg;
using namespace kreg::testing;

namespace {

FreeVector vec(const Ring& r, const Polynomial& f) { return FreeVector::from_components(r, {f}); }

Polynomial nf(const Polynomial& f, const GroebnerBasis& G) { return normal_form(vec(f.ring(), f), G).component(0); }

/// 1 x l map S(-d_1) ⊕ ... -> S given by the polynomials.
GradedMap row_map(const Ring& r, const std::vector<Polynomial>& fs) {
  GradedMap m{{}, {{0}}, {}};
  for (const auto& f : fs) {
    m.source.twists.push_back(*f.homogeneous_degree());
    m.columns.push_back(vec(r, f));
  }
  return m;
}

std::vector<Polynomial> random_ideal(Sampler& s, const Ring& r, int count, int max_deg) {
  std::vector<Polynomial> out;
  for (int i = 0; i < count; ++i) out.push_back(s.nonzero_form(r, static_cast<int>(s.between(1, max_deg)), 3));
  return out;
}

/// Random homogeneous submodule generators of ⊕ S(-a_i).
std::vector<FreeVector> random_vectors(Sampler& s, const Ring& r, const GradedFreeModule& F, int count) {
  std::vector<FreeVector> out;
  while (static_cast<int>(out.size()) < count) {
    int deg = static_cast<int>(s.between(*F.mindeg() + 1, *F.mindeg() + 3));
    std::vector<Polynomial> comps;
    for (int a : F.twists) comps.push_back(deg - a >= 0 && s.coin() ? s.form(r, deg - a, 2) : Polynomial(r));
    auto v = FreeVector::from_components(r, comps);
    if (!v.is_zero()) out.push_back(v);
  }
  return out;
}

GradedMap map_from(const Ring& r, const GradedFreeModule& target, const std::vector<FreeVector>& cols) {
  GradedMap m{{}, target, cols};
  for (const auto& c : cols) m.source.twists.push_back(*c.degree_in(target));
  return m;
}

void check_syzygies(const GradedMap& m, std::size_t n, int d_hi) {
  auto Z = syzygy_generators(m);
  CHECK(Z.target == m.source);
  for (const auto& c : compose(m, Z).columns) CHECK(c.is_zero());
  for (const auto& c : Z.columns) CHECK_FALSE(c.is_zero());
  ModulePresentation coker(m.columns.front().ring(), m.source, Z);
  auto hf = hilbert_function(coker, 0, d_hi);
  for (int d = 0; d <= d_hi; ++d)
    CHECK(m.source.dim_in_degree(n, d) - hf.at(d) == naive_kernel_dim(m, n, d));
}

}  // namespace

TEST_CASE("normal form examples") {
  auto r = ring_xy();
  auto G = buchberger(r, polys(r, {"x^2", "x*y"}));
  CHECK(nf(P(r, "x^2*y"), G).is_zero());
  CHECK(nf(P(r, "y^3"), G) == P(r, "y^3"));
  auto r3 = ring_xyz();
  GroebnerBasis H{r3, {{0}}, {vec(r3, P(r3, "x^2 - y*z")), vec(r3, P(r3, "y^2"))}, false};
  auto rem = nf(P(r3, "x^2"), H);
  CHECK(rem == P(r3, "y*z"));
  // v - r lies in the module.
  CHECK(nf(P(r3, "x^2") - rem, buchberger(r3, polys(r3, {"x^2 - y*z", "y^2"}))).is_zero());
}

TEST_CASE("buchberger examples") {
  auto r = ring_xy();
  auto G = buchberger(r, polys(r, {"x^2", "x*y"}));
  REQUIRE(G.generators.size() == 2);
  CHECK(G.reduced);

  auto H = buchberger(r, polys(r, {"x^2 - y^2", "x*y"}));
  std::vector<std::string> got;
  for (const auto& g : H.generators) got.push_back(g.component(0).to_string());
  std::sort(got.begin(), got.end());
  std::vector<std::string> want{P(r, "x^2 - y^2").to_string(), "x*y", "y^3"};
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK(all_s_pairs_reduce_to_zero(H));

  auto X = buchberger(r, polys(r, {"x"}));
  REQUIRE(X.generators.size() == 1);
  CHECK(X.generators[0].component(0) == P(r, "x"));

  CHECK_THROWS_AS(buchberger(r, polys(r, {"x + y^2"})), NotHomogeneous);
}

TEST_CASE("reduced bases are canonical") {
  auto r = ring_xyz();
  auto a = buchberger(r, polys(r, {"x*y - z^2", "y^2 - x*z"}));
  auto b = buchberger(r, polys(r, {"y^2 - x*z", "x*y - z^2", "x*y - z^2 + y^2 - x*z"}));
  auto lt = [](const GroebnerBasis& G) {
    std::vector<std::string> s;
    for (const auto& g : G.generators) s.push_back(g.to_string());
    std::sort(s.begin(), s.end());
    return s;
  };
  CHECK(lt(a) == lt(b));
}

TEST_CASE("random ideals: S-pairs, idempotence, membership") {
  auto r = ring_xyz();
  Sampler s(101);
  for (int it = 0; it < 30; ++it) {
    auto I = random_ideal(s, r, static_cast<int>(s.between(1, 4)), 3);
    auto G = buchberger(r, I);
    CHECK(all_s_pairs_reduce_to_zero(G));
    for (const auto& f : I) CHECK(nf(f, G).is_zero());
    for (const auto& g : G.generators) CHECK(g.terms().front().coeff == 1);
    for (int j = 0; j < 5; ++j) {
      auto v = s.form(r, static_cast<int>(s.between(0, 4)), 4);
      auto once = nf(v, G);
      CHECK(nf(once, G) == once);
      // Products with ideal elements are members.
      CHECK(nf(v * I[0], G).is_zero());
    }
    auto lts = G.leading_terms();
    for (std::size_t i = 0; i < lts.size(); ++i)
      for (std::size_t j = 0; j < lts.size(); ++j)
        if (i != j) CHECK_FALSE(lts[i].mono.divides(lts[j].mono));
  }
}

TEST_CASE("random submodules: S-pairs and membership") {
  auto r = ring_xyz();
  Sampler s(202);
  for (int it = 0; it < 20; ++it) {
    GradedFreeModule F{{0, static_cast<int>(s.between(0, 1)), static_cast<int>(s.between(0, 2))}};
    auto gens = random_vectors(s, r, F, static_cast<int>(s.between(1, 4)));
    auto G = buchberger(r, F, gens);
    CHECK(all_s_pairs_reduce_to_zero(G));
    for (const auto& g : gens) CHECK(normal_form(g, G).is_zero());
  }
}

TEST_CASE("syzygy examples") {
  auto r = ring_xy();
  {
    auto m = row_map(r, polys(r, {"x", "y"}));
    auto Z = syzygy_generators(m);
    REQUIRE(Z.columns.size() == 1);
    CHECK(Z.source.twists == std::vector<int>{2});
    auto c = Z.columns[0];
    auto lead = c.component(0).leading().coeff;
    CHECK(c.scaled(r->field().inv(lead)) == FreeVector::from_components(r, polys(r, {"y", "-x"})));
    check_syzygies(m, 2, 5);
  }
  {
    auto m = row_map(r, polys(r, {"x^2", "x*y"}));
    auto Z = syzygy_generators(m);
    REQUIRE(Z.columns.size() == 1);
    CHECK(Z.source.twists == std::vector<int>{3});
    auto c = Z.columns[0];
    CHECK(c.scaled(r->field().inv(c.component(0).leading().coeff)) ==
          FreeVector::from_components(r, polys(r, {"y", "-x"})));
    check_syzygies(m, 2, 6);
  }
  {
    auto m = row_map(r, polys(r, {"x", "x"}));
    auto Z = syzygy_generators(m);
    REQUIRE(Z.columns.size() == 1);
    auto c = Z.columns[0];
    CHECK(c.scaled(r->field().inv(c.component(0).leading().coeff)) ==
          FreeVector::from_components(r, polys(r, {"1", "-1"})));
  }
}

TEST_CASE("random syzygies match degreewise kernels") {
  auto r = ring_xyz();
  Sampler s(303);
  for (int it = 0; it < 15; ++it) {
    check_syzygies(row_map(r, random_ideal(s, r, static_cast<int>(s.between(1, 4)), 2)), 3, 5);
    GradedFreeModule F{{0, static_cast<int>(s.between(0, 1))}};
    auto cols = random_vectors(s, r, F, static_cast<int>(s.between(2, 4)));
    check_syzygies(map_from(r, F, cols), 3, 5);
  }
}

TEST_CASE("syzygies modulo a submodule") {
  auto r = ring_xy();
  // ker(S -> S/(x)) generated by x, i.e. {a : a*1 in (x)}.
  GradedMap m{{{0}}, {{0}}, {vec(r, P(r, "1"))}};
  auto Z = syzygies_modulo(m, {vec(r, P(r, "x"))});
  REQUIRE(Z.columns.size() == 1);
  CHECK(Z.source.twists == std::vector<int>{1});
  CHECK(Z.columns[0].scaled(r->field().inv(Z.columns[0].component(0).leading().coeff)) == vec(r, P(r, "x")));
}

TEST_CASE("minimal generator selection") {
  auto r = ring_xy();
  std::vector<FreeVector> gens{vec(r, P(r, "x^2")), vec(r, P(r, "x")), vec(r, P(r, "y")), vec(r, P(r, "x*y"))};
  auto idx = minimal_generator_indices(r, {{0}}, gens);
  std::sort(idx.begin(), idx.end());
  CHECK(idx == std::vector<std::size_t>{1, 2});
}

TEST_CASE("dimension examples") {
  auto r = ring_xy();
  CHECK(dimension_of_quotient(r, polys(r, {"x^2", "x*y"})) == 1);
  CHECK(dimension_of_quotient(r, polys(r, {"x^2", "y^3"})) == 0);
  CHECK(dimension_of_quotient(r, {}) == 2);
  CHECK(dimension_of_quotient(r, polys(r, {"0"})) == 2);
  CHECK(dimension_of_quotient(r, polys(r, {"1"})) == -1);
  auto r4 = ring_xyzw();
  CHECK(dimension_of_quotient(r4, polys(r4, {"x*z - y^2", "x*w - y*z", "y*w - z^2"})) == 2);
  CHECK(monomial_quotient_dimension(3, {Monomial(3, std::vector<int>{1, 1, 0})}) == 2);
}

TEST_CASE("dimension agrees with Hilbert function growth") {
  // dim S/I = 0 iff the Hilbert function eventually vanishes; dim 1 iff it is eventually constant and nonzero.
  auto r = ring_xyz();
  Sampler s(404);
  for (int it = 0; it < 20; ++it) {
    auto I = random_ideal(s, r, static_cast<int>(s.between(1, 4)), 2);
    int dim = dimension_of_quotient(r, I);
    auto hf = hilbert_function(ModulePresentation::cyclic(r, I), 0, 14);
    if (dim == 0) CHECK(hf.at(14) == 0);
    if (dim == 1) CHECK((hf.at(14) == hf.at(13) && hf.at(14) > 0));
    if (dim >= 2) CHECK(hf.at(14) > hf.at(13));
  }
}

TEST_CASE("Hilbert function examples") {
  auto r = ring_xy();
  CHECK(hilbert_function(quotient(r, {"x^2", "y^3"}), 0, 4).values == std::vector<std::int64_t>{1, 2, 2, 1, 0});
  CHECK(hilbert_function(ModulePresentation::free(r, {{0}}), 0, 3).values == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(hilbert_function(quotient(r, {"x", "y"}), 0, 2).values == std::vector<std::int64_t>{1, 0, 0});
  auto hf = hilbert_function(quotient(r, {"x^2", "y^3"}), 0, 4);
  CHECK(hf.total() == 6);
  CHECK(hf.top_degree() == 3);
  CHECK(hf.bottom_degree() == 0);
  CHECK(hf.at(-3) == 0);
  CHECK(hf.at(9) == 0);
}

TEST_CASE("Hilbert function agrees with standard monomials and the oracles") {
  auto r = ring_xyz();
  Sampler s(505);
  for (int it = 0; it < 20; ++it) {
    auto I = random_ideal(s, r, static_cast<int>(s.between(1, 4)), 3);
    auto M = ModulePresentation::cyclic(r, I);
    auto hf = hilbert_function(M, 0, 6);
    CHECK(hf == standard_monomial_count(buchberger(r, I), 0, 6));
    for (int d = 0; d <= 6; ++d) CHECK(hf.at(d) == naive_hilbert(M, d));
    if (simd::isa_usable(simd::Isa::avx2, r->characteristic()))
      CHECK(hilbert_function(M, 0, 6, simd::Isa::avx2) == hilbert_function(M, 0, 6, simd::Isa::scalar));
  }
  for (int it = 0; it < 20; ++it) {
    std::vector<Monomial> ms;
    std::vector<Exps> es;
    std::vector<Polynomial> I;
    for (int j = 0; j < 4; ++j) {
      auto m = s.monomial(3, static_cast<int>(s.between(1, 3)));
      I.push_back(Polynomial::monomial(r, m));
      es.push_back(exps_of(m));
    }
    auto hf = hilbert_function(ModulePresentation::cyclic(r, I), 0, 6);
    for (int d = 0; d <= 6; ++d) CHECK(hf.at(d) == count_standard(3, es, d));
  }
}

TEST_CASE("Hilbert function of random modules matches the naive oracle") {
  auto r = ring_xyz();
  Sampler s(606);
  for (int it = 0; it < 15; ++it) {
    GradedFreeModule F{{0, static_cast<int>(s.between(0, 1))}};
    auto M = ModulePresentation::from_relations(r, F, random_vectors(s, r, F, static_cast<int>(s.between(1, 4))));
    auto hf = hilbert_function(M, -1, 5);
    for (int d = -1; d <= 5; ++d) CHECK(hf.at(d) == naive_hilbert(M, d));
    auto G = buchberger(r, F, M.relations.columns);
    CHECK(standard_monomial_count(G, -1, 5) == hf);
  }
}
