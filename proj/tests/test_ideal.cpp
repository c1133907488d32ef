#include <doctest.h>

#include <algorithm>

#include "positroid/errors.hpp"
#include "positroid/ideal.hpp"
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

TEST_CASE("the image of the running example is a pure order ideal") {
  MonomialSet image = phi_image(dstar_positroid());
  auto [ideal, witnesses] = is_order_ideal(image);
  CHECK(ideal);
  CHECK(witnesses.empty());
  auto [pure, maximal] = purity(image);
  CHECK(pure);
  CHECK(maximal == std::vector<Monomial>{mono({{3, 1}, {5, 2}}), mono({{3, 2}, {5, 1}}),
                                         mono({{5, 3}})});
  CHECK(o_sequence(image) == std::vector<std::int64_t>{1, 2, 3, 3});
}

TEST_CASE("a punctured image is not an order ideal and the witness names the hole") {
  MonomialSet image = phi_image(dstar_positroid());
  image.remove(mono({{3, 1}, {5, 1}}));
  auto [ideal, witnesses] = is_order_ideal(image);
  CHECK_FALSE(ideal);
  REQUIRE(witnesses.size() == 2);
  // both monomials directly above the hole are reported, in (degree, lex)
  // order: x3*x5^2 / x5 and x3^2*x5 / x3
  CHECK(witnesses[0].first == mono({{3, 1}, {5, 2}}));
  CHECK(witnesses[0].second == 5);
  CHECK(witnesses[1].first == mono({{3, 2}, {5, 1}}));
  CHECK(witnesses[1].second == 3);
}

TEST_CASE("degenerate monomial sets") {
  MonomialSet just_one({Monomial::one()});
  CHECK(is_order_ideal(just_one).first);
  auto [pure, maximal] = purity(just_one);
  CHECK(pure);
  CHECK(maximal == std::vector<Monomial>{Monomial::one()});
  CHECK(o_sequence(just_one) == std::vector<std::int64_t>{1});

  MonomialSet mixed({Monomial::one(), mono({{3, 1}}), mono({{3, 2}}), mono({{5, 1}})});
  auto [pure2, maximal2] = purity(mixed);
  CHECK_FALSE(pure2);
  CHECK(maximal2 == std::vector<Monomial>{mono({{5, 1}}), mono({{3, 2}})});
}

TEST_CASE("divide_witness on the worked example") {
  Positroid p = dstar_positroid();
  CHECK(divide_witness(p, LabelSet::of({2, 3, 5}), 5) == LabelSet::of({2, 3, 4}));
  CHECK(divide_witness(p, LabelSet::of({2, 3, 5}), 3) == LabelSet::of({1, 3, 5}));
  CHECK(divide_witness(p, LabelSet::of({1, 2, 5}), 5) == LabelSet::of({1, 2, 4}));
  CHECK_THROWS_AS(divide_witness(p, LabelSet::of({1, 2, 5}), 3), NotDivisible);
  CHECK_THROWS_AS(divide_witness(p, LabelSet::of({1, 2, 3}), 3), NotABasis);
}

TEST_CASE("divide_witness sheds raised outer exponents") {
  // phi(345) = x3*x5^2; removing the path into 3 first reaches 245 with
  // phi = x5^3, and the excess x5 must be shed down to 145.
  Positroid p = dstar_positroid();
  CHECK(divide_witness(p, LabelSet::of({3, 4, 5}), 3) == LabelSet::of({1, 4, 5}));
  CHECK(phi_direct(p, LabelSet::of({1, 4, 5})) == mono({{5, 2}}));
}

TEST_CASE("augment_witness on the worked example") {
  Positroid p = dstar_positroid();
  WitnessStats stats;
  auto w = augment_witness(p, LabelSet::of({1, 2, 4}), &stats);
  REQUIRE(w.has_value());
  CHECK(*w == LabelSet::of({1, 2, 5}));
  auto w2 = augment_witness(p, LabelSet::of({1, 3, 4}), &stats);
  REQUIRE(w2.has_value());
  CHECK(*w2 == LabelSet::of({1, 3, 5}));
  CHECK_FALSE(augment_witness(p, LabelSet::of({2, 3, 5}), &stats).has_value());
  CHECK(stats.augment_fallbacks == 0);
}

TEST_CASE("witnesses agree with the search oracles on all small diagrams") {
  for (int n = 0; n <= 5; ++n) {
    for_each_valid_diagram(n, [](const LeDiagram& d) {
      auto [loops, coloops] = loops_coloops(d);
      if (!loops.empty() || !coloops.empty()) return;
      Positroid p = enumerate_bases(build_graph(d));
      MonomialSet image = phi_image(p);
      WitnessStats stats;
      for (LabelSet b : p.bases()) {
        Monomial from = phi_direct(p, b);
        for (int v : from.support()) {
          LabelSet w = divide_witness(p, b, v);
          Monomial target = *from.divided_by(v);
          CHECK(phi_direct(p, w) == target);
          CHECK(*image.source_of(target) == w);
        }
        auto up = augment_witness(p, b, &stats);
        bool full = passive_elements(p, b).size() == p.rank();
        CHECK(full == !up.has_value());
        if (up) {
          Monomial to = phi_direct(p, *up);
          CHECK(from.divides(to));
          CHECK(from != to);
        }
        // iterated augmentation climbs to a maximal-degree monomial
        LabelSet cursor = b;
        for (int step = 0; step <= p.rank(); ++step) {
          auto next = augment_witness(p, cursor);
          if (!next) break;
          cursor = *next;
        }
        CHECK(phi_direct(p, cursor).degree() == p.rank());
      }
      CHECK(stats.augment_fallbacks == 0);
    });
  }
}

TEST_CASE("hasse_dot of the running example") {
  std::string dot = hasse_dot(phi_image(dstar_positroid()));
  CHECK(dot.find("digraph hasse") != std::string::npos);
  // 9 nodes m0..m8
  CHECK(dot.find("m8 [label=") != std::string::npos);
  CHECK(dot.find("m9 [label=") == std::string::npos);
  // node labels carry the source basis
  CHECK(dot.find("label=\"1\\n124\"") != std::string::npos);
  CHECK(dot.find("label=\"x3^2*x5\\n235\"") != std::string::npos);
  // covering relations 1 -> x3, 1 -> x5 and x3*x5 -> x3^2*x5
  CHECK(dot.find("m0 -> m1;") != std::string::npos);
  CHECK(dot.find("m0 -> m2;") != std::string::npos);
  // 11 covering relations in this ideal
  size_t edges = 0;
  for (size_t at = dot.find(" -> "); at != std::string::npos; at = dot.find(" -> ", at + 1))
    ++edges;
  CHECK(edges == 11);
}

TEST_CASE("hasse_dot degenerate cases") {
  std::string single = hasse_dot(MonomialSet({Monomial::one()}));
  CHECK(single.find("m0") != std::string::npos);
  CHECK(single.find("->") == std::string::npos);

  std::string pair = hasse_dot(MonomialSet({Monomial::one(), mono({{2, 1}})}));
  CHECK(pair.find("m0 -> m1;") != std::string::npos);
}

TEST_CASE("ideal_report ties the verdicts together") {
  Positroid p = dstar_positroid();
  IdealReport report = ideal_report(phi_image(p), h_vector_activity(p));
  CHECK(report.order_ideal);
  CHECK(report.pure);
  CHECK(report.matches_h_vector);
  CHECK(report.o_sequence == std::vector<std::int64_t>{1, 2, 3, 3});
  CHECK(report.maximal.size() == 3);
}
