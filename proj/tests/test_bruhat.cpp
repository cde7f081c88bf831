#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "weylkl/bruhat.hpp"
#include "weylkl/weyl.hpp"

using namespace weylkl;
using weylkl::testing::subword_leq;

TEST_CASE("bruhat examples") {
  auto g = WeylGroup::build(CartanType::parse("A3"));
  Element w = g->parse_element("1 2 3 2 1");
  CHECK(g->bruhat_leq(g->parse_element("1 3"), w));
  CHECK(!g->bruhat_leq(g->parse_element("2"), g->parse_element("1 3")));
  for (uint32_t id = 0; id < g->size(); ++id) {
    CHECK(g->bruhat_leq(g->identity(), g->element(id)));
  }
}

TEST_CASE("bruhat_leq agrees with the subword oracle") {
  for (const char* name : {"A3", "B2"}) {
    auto g = WeylGroup::build(CartanType::parse(name));
    for (uint32_t a = 0; a < g->size(); ++a) {
      for (uint32_t b = 0; b < g->size(); ++b) {
        Element v = g->element(a), w = g->element(b);
        CHECK(g->bruhat_leq(v, w) == subword_leq(*g, v, w));
      }
    }
  }
}

TEST_CASE("partial order axioms on A3") {
  auto g = WeylGroup::build(CartanType::parse("A3"));
  BruhatOrder bo(*g);
  for (uint32_t a = 0; a < g->size(); ++a) {
    CHECK(bo.leq_ids(a, a));
    for (uint32_t b = 0; b < g->size(); ++b) {
      if (bo.leq_ids(a, b)) {
        CHECK(g->length(g->element(a)) <= g->length(g->element(b)));
        if (bo.leq_ids(b, a)) CHECK(a == b);
        for (uint32_t c = 0; c < g->size(); ++c) {
          if (bo.leq_ids(b, c)) CHECK(bo.leq_ids(a, c));
        }
      }
    }
  }
}

TEST_CASE("lifting property, exhaustive on A3") {
  auto g = WeylGroup::build(CartanType::parse("A3"));
  for (uint32_t wb = 0; wb < g->size(); ++wb) {
    Element w = g->element(wb);
    for (int s : g->left_descents(w)) {
      Element sw = g->left_multiply(s, w);
      for (uint32_t vb = 0; vb < g->size(); ++vb) {
        Element v = g->element(vb);
        Element sv = g->left_multiply(s, v);
        if (g->length(sv) < g->length(v)) {
          CHECK(g->bruhat_leq(v, w) == g->bruhat_leq(sv, sw));
        } else {
          CHECK(g->bruhat_leq(v, w) == g->bruhat_leq(v, sw));
        }
      }
    }
  }
}

TEST_CASE("closure matrix matches point queries; serial == parallel") {
  for (const char* name : {"A3", "B2", "B3"}) {
    auto g = WeylGroup::build(CartanType::parse(name));
    BruhatOrder serial(*g, ExecMode::serial);
    BruhatOrder parallel(*g, ExecMode::parallel);
    CHECK(serial == parallel);
    for (uint32_t a = 0; a < g->size(); ++a)
      for (uint32_t b = 0; b < g->size(); ++b)
        CHECK(serial.leq_ids(a, b) == g->bruhat_leq(g->element(a), g->element(b)));
  }
}

TEST_CASE("intervals") {
  auto g = WeylGroup::build(CartanType::parse("A3"));
  auto iv = g->interval(g->identity(), g->parse_element("1 3"));
  REQUIRE(iv.size() == 4);
  CHECK(iv[0] == g->identity());
  CHECK(iv[1] == g->parse_element("1"));
  CHECK(iv[2] == g->parse_element("3"));
  CHECK(iv[3] == g->parse_element("1 3"));

  Element w = g->parse_element("1 2 3 2 1");
  CHECK(g->interval(w, w) == std::vector<Element>{w});
  CHECK(g->interval(g->identity(), g->longest_element()).size() == 24);
  CHECK_THROWS_AS(g->interval(w, g->parse_element("1 3")), std::domain_error);

  // sorted by (length, word), no duplicates, exactly the comparable elements
  BruhatOrder bo(*g);
  for (uint32_t b = 0; b < g->size(); ++b) {
    Element y = g->element(b);
    auto full = g->interval(g->identity(), y);
    CHECK(full.size() == bo.closure(y).count());
    for (size_t k = 1; k < full.size(); ++k) {
      CHECK((full[k - 1].length() < full[k].length() ||
             (full[k - 1].length() == full[k].length() &&
              full[k - 1].word() < full[k].word())));
    }
  }
}
