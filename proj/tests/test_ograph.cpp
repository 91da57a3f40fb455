#include <doctest.h>

#include <map>
#include <set>

#include "spinecensus/ograph.hpp"
#include "spinecensus/rng.hpp"

using namespace spinecensus;

namespace {

OpenChainParams random_open_params(SplitMix64& rng, int n) {
  OpenChainParams p;
  p.alpha = ColorZ3(static_cast<int>(rng.next() % 3));
  p.delta = ColorZ3(static_cast<int>(rng.next() % 3));
  for (int i = 0; i + 1 < n; ++i)
    p.word.emplace_back(static_cast<int>(rng.next() % 3), static_cast<int>(rng.next() % 3));
  return p;
}

ClosedChainParams random_closed_params(SplitMix64& rng, int n) {
  ClosedChainParams p;
  for (int i = 0; i < n; ++i)
    p.pairs.push_back({ColorZ3(static_cast<int>(rng.next() % 3)),
                       ColorZ3(static_cast<int>(rng.next() % 3))});
  return p;
}

void check_four_valent(const OGraph& g) {
  std::set<std::pair<int, int>> seen;
  for (const OEdge& e : g.edges()) {
    CHECK(seen.emplace(e.a.vertex, e.a.port).second);
    CHECK(seen.emplace(e.b.vertex, e.b.port).second);
  }
  CHECK(seen.size() == static_cast<std::size_t>(4 * g.vertex_count()));
}

}  // namespace

TEST_CASE("colours in Z/3") {
  CHECK(ColorZ3(5).value() == 2);
  CHECK(ColorZ3(-1).value() == 2);
  CHECK(ColorZ3(0).negated() == ColorZ3(0));
  CHECK(ColorZ3(1).negated() == ColorZ3(2));
  CHECK(ColorZ3(2).negated() == ColorZ3(1));
  CHECK(ColorZ3(0).one_minus() == ColorZ3(1));
  CHECK(ColorZ3(1).one_minus() == ColorZ3(0));
  CHECK(ColorZ3(2).one_minus() == ColorZ3(2));
}

TEST_CASE("letter classes partition the alphabet") {
  std::map<int, int> sizes;
  for (int i = 0; i < kAlphabetSize; ++i) ++sizes[letter_class(letter_from_index(i))];
  CHECK(sizes[0] == 1);
  CHECK(sizes[1] == 2);
  CHECK(sizes[2] == 2);
  CHECK(sizes[3] == 4);
  CHECK(letter_class(Letter(2, 2)) == 0);
  CHECK(letter_class(Letter(0, 0)) == 1);
  CHECK(letter_class(Letter(1, 1)) == 1);
  CHECK(letter_class(Letter(1, 0)) == 2);
  CHECK(letter_class(Letter(0, 1)) == 2);
  for (const Letter l : {Letter(0, 2), Letter(1, 2), Letter(2, 0), Letter(2, 1)})
    CHECK(letter_class(l) == 3);
}

TEST_CASE("open chain structure") {
  OpenChainParams p;
  p.alpha = ColorZ3(0);
  p.delta = ColorZ3(0);
  p.word = {Letter(0, 2)};
  const OGraph g = make_open_chain(p);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 4);
  std::multiset<int> colors;
  for (const OEdge& e : g.edges()) colors.insert(e.color.value());
  CHECK(colors == std::multiset<int>{0, 0, 0, 2});
  check_four_valent(g);

  SplitMix64 rng{11};
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 7);
    const OGraph h = make_open_chain(random_open_params(rng, n));
    CHECK(h.vertex_count() == n);
    CHECK(h.edge_count() == 2 * n);
    check_four_valent(h);
  }

  CHECK_THROWS_AS(make_open_chain(OpenChainParams{}), std::invalid_argument);
}

TEST_CASE("closed chain structure") {
  ClosedChainParams one;
  one.pairs = {{ColorZ3(1), ColorZ3(2)}};
  const OGraph g1 = make_closed_chain(one);
  CHECK(g1.vertex_count() == 1);
  CHECK(g1.edge_count() == 2);
  for (const OEdge& e : g1.edges()) CHECK(e.a.vertex == e.b.vertex);
  check_four_valent(g1);

  SplitMix64 rng{12};
  const OGraph g4 = make_closed_chain(random_closed_params(rng, 4));
  CHECK(g4.vertex_count() == 4);
  CHECK(g4.edge_count() == 8);
  check_four_valent(g4);

  CHECK_THROWS_AS(make_closed_chain(ClosedChainParams{}), std::invalid_argument);
}

TEST_CASE("mirror is an involution that negates colours") {
  SplitMix64 rng{13};
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 6);
    const OGraph g = trial % 2 == 0 ? make_open_chain(random_open_params(rng, n))
                                    : make_closed_chain(random_closed_params(rng, n));
    const OGraph m = mirror(g);
    CHECK(mirror(m) == g);
    for (int e = 0; e < g.edge_count(); ++e)
      CHECK(m.edge(e).color == g.edge(e).color.negated());
  }
}

TEST_CASE("reversed-orientation colour formulas") {
  OpenChainParams p;
  p.alpha = ColorZ3(0);
  p.delta = ColorZ3(2);
  p.word = {Letter(0, 2), Letter(1, 0), Letter(2, 2)};
  const OpenChainParams m = mirror_open_chain(p);
  CHECK(m.alpha == ColorZ3(1));
  CHECK(m.delta == ColorZ3(2));
  // odd positions swap: beta'_1 = 1-gamma_1, gamma'_1 = 1-beta_1
  CHECK(m.word[0] == Letter(2, 1));
  // even positions keep components: beta'_2 = 1-beta_2
  CHECK(m.word[1] == Letter(0, 2));
  CHECK(m.word[2] == Letter(2, 2));

  SplitMix64 rng{14};
  for (int trial = 0; trial < 100; ++trial) {
    const OpenChainParams q = random_open_params(rng, 2 + static_cast<int>(rng.next() % 7));
    CHECK(mirror_open_chain(mirror_open_chain(q)) == q);
  }
}

TEST_CASE("orbits and canonical forms") {
  SplitMix64 rng{15};
  for (int trial = 0; trial < 200; ++trial) {
    const OpenChainParams p = random_open_params(rng, 2 + static_cast<int>(rng.next() % 6));
    const std::set<OpenChainParams> orbit = open_chain_orbit(p);
    CHECK(orbit.size() <= 4);
    CHECK(4 % orbit.size() == 0);
    CHECK(orbit.count(p) == 1);
    const OpenChainParams c = canonical_form(p);
    CHECK(orbit.count(c) == 1);
    CHECK(canonical_form(c) == c);
    for (const OpenChainParams& q : orbit) CHECK(canonical_form(q) == c);
  }

  // a word fixed under the beta/gamma swap has orbit size at most 2
  OpenChainParams sym;
  sym.alpha = ColorZ3(0);
  sym.delta = ColorZ3(1);
  sym.word = {Letter(1, 1), Letter(2, 2)};
  CHECK(open_chain_orbit(sym).size() <= 2);
}

TEST_CASE("serialization round-trips and rejects bad input") {
  SplitMix64 rng{16};
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 6);
    const OGraph g = trial % 2 == 0 ? make_open_chain(random_open_params(rng, n))
                                    : make_closed_chain(random_closed_params(rng, n));
    CHECK(parse_ograph(serialize_ograph(g)) == g);
    // canonical output parses back to an equivalent (possibly reordered) graph
    const OGraph sorted = parse_ograph(serialize_ograph(g, true));
    CHECK(sorted.vertex_count() == g.vertex_count());
    CHECK(sorted.edge_count() == g.edge_count());
  }

  const auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_ograph(text);
      FAIL_CHECK("expected parse error: " << needle);
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_error("ograph 1\nvertices 1\nedge 0 0 0 4 0\nedge 0 2 0 3 0\n", "port out of range");
  expect_error("ograph 1\nvertices 1\nedge 0 0 0 1 3\nedge 0 2 0 3 0\n", "color out of range");
  expect_error("ograph 1\nvertices 1\nedge 0 0 0 1 0\nedge 0 0 0 3 0\n", "duplicate port");
  expect_error("ograph 1\nvertices 1\nedge 0 0 1 1 0\nedge 0 2 0 3 0\n", "dangling endpoint");
  expect_error("ograph 2\nvertices 1\n", "ograph 1");
  expect_error("ograph 1\nvertices 1\nedge 0 0 0 1 0\n", "4-valent");
  // line numbers are reported
  expect_error("ograph 1\nvertices 1\n# fine\nedge 0 0 0 5 0\n", "line 4");
}
