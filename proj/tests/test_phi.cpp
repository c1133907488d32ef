#include <doctest.h>

#include "positroid/errors.hpp"
#include "positroid/phi.hpp"
#include "positroid/verify.hpp"

using namespace positroid;

namespace {

Positroid dstar_positroid() { return enumerate_bases(build_graph(parse_grid("**\n**\n*"))); }

Monomial mono(std::initializer_list<std::pair<int, int>> factors) {
  Monomial m;
  for (auto [v, e] : factors) m = m.times(v, e);
  return m;
}

}  // namespace

TEST_CASE("monomial arithmetic and rendering") {
  Monomial one = Monomial::one();
  CHECK(one.degree() == 0);
  CHECK(one.to_string() == "1");

  Monomial m = mono({{3, 2}, {5, 1}});
  CHECK(m.to_string() == "x3^2*x5");
  CHECK(m.degree() == 3);
  CHECK(m.exponent(3) == 2);
  CHECK(m.exponent(4) == 0);
  CHECK(m.support() == std::vector<int>{3, 5});

  CHECK(*m.divided_by(5) == mono({{3, 2}}));
  CHECK(*m.divided_by(3) == mono({{3, 1}, {5, 1}}));
  CHECK_FALSE(m.divided_by(4).has_value());
  CHECK(one.divides(m));
  CHECK(mono({{3, 1}}).divides(m));
  CHECK_FALSE(mono({{3, 3}}).divides(m));
  CHECK(degree_lex_less(mono({{5, 1}}), mono({{3, 1}, {5, 1}})));
}

TEST_CASE("t_set on the worked example") {
  Positroid p = dstar_positroid();
  CHECK(t_set(p, LabelSet::of({2, 3, 5}), 3) == LabelSet::of({2}));
  CHECK(t_set(p, LabelSet::of({2, 3, 5}), 5).empty());
  CHECK(t_set(p, LabelSet::of({2, 3, 4}), 3) == LabelSet::of({2}));
  CHECK_THROWS_AS(t_set(p, LabelSet::of({2, 3, 5}), 2), NotASink);
  CHECK_THROWS_AS(t_set(p, LabelSet::of({1, 2, 3}), 3), NotABasis);
}

TEST_CASE("phi by the defining rule") {
  Positroid p = dstar_positroid();
  CHECK(phi_direct(p, LabelSet::of({2, 3, 5})) == mono({{3, 2}, {5, 1}}));
  CHECK(phi_direct(p, p.b0()) == Monomial::one());
  CHECK(phi_direct(p, LabelSet::of({2, 3, 4})) == mono({{3, 2}}));
  CHECK_THROWS_AS(phi_direct(p, LabelSet::of({1, 2, 3})), NotABasis);
}

TEST_CASE("phi by the product formula") {
  Positroid p = dstar_positroid();
  CHECK(phi_product(p, LabelSet::of({2, 3, 5})) == mono({{3, 2}, {5, 1}}));
  CHECK(phi_product(p, LabelSet::of({1, 4, 5})) == mono({{5, 2}}));
  CHECK(phi_product(p, p.b0()) == Monomial::one());
}

TEST_CASE("phi image of the running example") {
  Positroid p = dstar_positroid();
  MonomialSet image = phi_image(p);
  CHECK(image.size() == 9);
  std::vector<Monomial> expected = {
      Monomial::one(),         mono({{3, 1}}),          mono({{5, 1}}),
      mono({{3, 2}}),          mono({{3, 1}, {5, 1}}),  mono({{5, 2}}),
      mono({{3, 2}, {5, 1}}),  mono({{3, 1}, {5, 2}}),  mono({{5, 3}})};
  for (const Monomial& m : expected) CHECK(image.contains(m));
  // back-references form the bijection
  CHECK(*image.source_of(mono({{3, 2}, {5, 1}})) == LabelSet::of({2, 3, 5}));
  CHECK(*image.source_of(Monomial::one()) == LabelSet::of({1, 2, 4}));
  // degree multiset is the h-vector
  std::vector<int> by_degree(4, 0);
  for (const Monomial& m : image.sorted()) ++by_degree[m.degree()];
  CHECK(by_degree == std::vector<int>{1, 2, 3, 3});
}

TEST_CASE("phi image of the single box") {
  Positroid p = enumerate_bases(build_graph(parse_grid("*")));
  MonomialSet image = phi_image(p);
  CHECK(image.size() == 2);
  CHECK(image.contains(Monomial::one()));
  CHECK(image.contains(mono({{2, 1}})));
}

TEST_CASE("phi theorems hold exhaustively on small diagrams") {
  for (int n = 0; n <= 5; ++n) {
    for_each_valid_diagram(n, [](const LeDiagram& d) {
      auto [loops, coloops] = loops_coloops(d);
      if (!loops.empty() || !coloops.empty()) return;
      Positroid p = enumerate_bases(build_graph(d));
      MonomialSet image = phi_image(p);  // throws on any collision
      CHECK(image.size() == static_cast<int>(p.bases().size()));
      for (LabelSet b : p.bases()) {
        Monomial direct = phi_direct(p, b);
        CHECK(direct == phi_product(p, b));
        CHECK(direct.degree() == passive_elements(p, b).size());
        LabelSet support;
        for (int v : direct.support()) support.insert(v);
        CHECK(support == b - p.b0());
      }
    });
  }
}
