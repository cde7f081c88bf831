#include <doctest.h>

#include <stdexcept>

#include "weylkl/schubert.hpp"

using namespace weylkl;

TEST_CASE("schubert datum") {
  auto g = WeylGroup::build(CartanType::parse("A3"));
  KLContext ctx(g);

  SchubertDatum top = schubert_datum(ctx, g->longest_element());
  CHECK(top.dim == 6);
  CHECK(top.codim == 0);
  CHECK(top.rationally_smooth);

  SchubertDatum div = schubert_datum(ctx, g->parse_element("1 2 3 2 1"));
  CHECK(div.dim == 5);
  CHECK(div.codim == 1);
  CHECK(!div.rationally_smooth);

  SchubertDatum pt = schubert_datum(ctx, g->identity());
  CHECK(pt.dim == 0);
  CHECK(pt.codim == 6);
  CHECK(pt.rationally_smooth);

  for (uint32_t id = 0; id < g->size(); ++id) {
    SchubertDatum d = schubert_datum(ctx, g->element(id));
    CHECK(d.dim + d.codim == g->max_length());
    CHECK(d.rationally_smooth == d.singular_locus_maximals.empty());
  }
}

TEST_CASE("rational smoothness and singular locus") {
  auto g = WeylGroup::build(CartanType::parse("A3"));
  KLContext ctx(g);
  Element w = g->parse_element("1 2 3 2 1");
  Element s13 = g->parse_element("1 3");

  CHECK(rationally_smooth(ctx, g->identity()));
  CHECK(rationally_smooth(ctx, g->generator(2)));
  CHECK(rationally_smooth(ctx, g->longest_element()));
  CHECK(!rationally_smooth(ctx, w));

  CHECK(singular_locus_maximals(ctx, w) == std::vector<Element>{s13});
  CHECK(singular_locus_maximals(ctx, g->longest_element()).empty());

  // defining property: members are <= w, have P != 1, and are maximal such
  for (uint32_t id = 0; id < g->size(); ++id) {
    Element y = g->element(id);
    auto maxs = singular_locus_maximals(ctx, y);
    for (Element v : maxs) {
      CHECK(ctx.bruhat().leq(v, y));
      CHECK(!ctx.kl(v, y).is_one());
      CHECK(g->length(y) - g->length(v) >= 3);
      for (uint32_t uid : ctx.bruhat().closure_ids(y)) {
        Element u = g->element(uid);
        if (ctx.kl(u, y).is_one() || u == v) continue;
        CHECK(!ctx.bruhat().leq(v, u));  // nothing singular strictly above v
      }
    }
  }
}

TEST_CASE("one-line permutations") {
  auto g = WeylGroup::build(CartanType::parse("A3"));
  CHECK(one_line_permutation(g->identity()) == std::vector<int>{1, 2, 3, 4});
  CHECK(one_line_permutation(g->generator(1)) == std::vector<int>{2, 1, 3, 4});
  CHECK(one_line_permutation(g->parse_element("1 2 3 2 1")) ==
        std::vector<int>{4, 2, 3, 1});
  CHECK(one_line_permutation(g->parse_element("2 1 3 2")) ==
        std::vector<int>{3, 4, 1, 2});
  CHECK(one_line_permutation(g->longest_element()) == std::vector<int>{4, 3, 2, 1});

  // the realization is a homomorphism
  for (uint32_t a = 0; a < g->size(); a += 5) {
    for (uint32_t b = 0; b < g->size(); b += 3) {
      Element v = g->element(a), w = g->element(b);
      auto pv = one_line_permutation(v);
      auto pw = one_line_permutation(w);
      auto pvw = one_line_permutation(g->multiply(v, w));
      for (int k = 0; k < 4; ++k) CHECK(pvw[k] == pv[pw[k] - 1]);
    }
  }
}

TEST_CASE("pattern avoidance") {
  auto g = WeylGroup::build(CartanType::parse("A3"));
  CHECK(pattern_avoidance_smooth_typeA(g->identity()));
  CHECK(!pattern_avoidance_smooth_typeA(g->parse_element("1 2 3 2 1")));  // 4231
  CHECK(!pattern_avoidance_smooth_typeA(g->parse_element("2 1 3 2")));    // 3412

  auto b2 = WeylGroup::build(CartanType::parse("B2"));
  CHECK_THROWS_AS(pattern_avoidance_smooth_typeA(b2->identity()), std::domain_error);
}

TEST_CASE("pattern oracle agrees with the KL criterion on A2 and A3") {
  for (const char* name : {"A2", "A3"}) {
    auto g = WeylGroup::build(CartanType::parse(name));
    KLContext ctx(g);
    for (uint32_t id = 0; id < g->size(); ++id) {
      Element w = g->element(id);
      CHECK(pattern_avoidance_smooth_typeA(w) == rationally_smooth(ctx, w));
    }
  }
}

TEST_CASE("codimension-one census of A3") {
  auto g = WeylGroup::build(CartanType::parse("A3"));
  KLContext ctx(g);
  auto [lo, hi] = g->length_layer(5);
  CHECK(hi - lo == 3);
  size_t singular = 0;
  for (uint32_t id = lo; id < hi; ++id)
    if (!rationally_smooth(ctx, g->element(id))) ++singular;
  CHECK(singular == 1);
}

TEST_CASE("singular locus needs length gap >= 3 (B3 as well)") {
  auto g = WeylGroup::build(CartanType::parse("B3"));
  KLContext ctx(g);
  auto data = classify_all(ctx);
  for (const auto& d : data) {
    for (Element v : d.singular_locus_maximals)
      CHECK(g->length(d.w) - g->length(v) >= 3);
  }
}

TEST_CASE("smooth counts match the classical sequence") {
  // numbers of smooth Schubert varieties in type A: 2, 6, 22, 88, 366 for
  // S2..S6 (the 3412/4231-avoiding permutations)
  const std::pair<const char*, size_t> expected[] = {
      {"A1", 2}, {"A2", 6}, {"A3", 22}, {"A4", 88}, {"A5", 366}};
  for (auto [name, count] : expected) {
    auto g = WeylGroup::build(CartanType::parse(name));
    KLContext ctx(g);
    auto data = classify_all(ctx);
    size_t smooth = 0;
    for (const auto& d : data) {
      CHECK(d.rationally_smooth == pattern_avoidance_smooth_typeA(d.w));
      smooth += d.rationally_smooth ? 1 : 0;
    }
    CHECK(smooth == count);
  }
}

TEST_CASE("classify_all parallel matches serial") {
  auto g = WeylGroup::build(CartanType::parse("B3"));
  KLContext ctx(g);
  auto serial = classify_all(ctx, ExecMode::serial);
  auto parallel = classify_all(ctx, ExecMode::parallel);
  REQUIRE(serial.size() == parallel.size());
  for (size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].w == parallel[k].w);
    CHECK(serial[k].dim == parallel[k].dim);
    CHECK(serial[k].codim == parallel[k].codim);
    CHECK(serial[k].rationally_smooth == parallel[k].rationally_smooth);
    CHECK(serial[k].singular_locus_maximals == parallel[k].singular_locus_maximals);
  }
}
