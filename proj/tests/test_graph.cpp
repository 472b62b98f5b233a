#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "inducibility/labeled_graph.hpp"
#include "support.hpp"

using namespace inducibility;

namespace {

using support::from_adj;
using support::named;
using support::to_adj;

LabeledGraph random_graph(std::mt19937_64& rng, int n) { return from_adj(oracle::random_graph(rng, n, 0.5)); }

// Brute-force isomorphism: some relabeling maps one adjacency onto the other.
bool brute_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.order() != b.order()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (int i = 0; i < a.order() && same; ++i)
      for (int j = 0; j < a.order() && same; ++j) same = a.adjacent(i, j) == b.adjacent(perm[i], perm[j]);
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("named catalogue") {
  CHECK(named("K", {4}).edge_count() == 6);
  CHECK(named("A", {3}).edge_count() == 0);
  CHECK(named("C", {5}).degrees() == std::vector<int>(5, 2));
  CHECK(named("P", {4}).degrees() == std::vector<int>{1, 2, 2, 1});
  CHECK(named("loopK", {1}).has_loop(0));
  CHECK(named("Kpart", {2, 3}).edge_count() == 6);

  const LabeledGraph q17 = named("paley", {17});
  CHECK(q17.order() == 17);
  CHECK(q17.degrees() == std::vector<int>(17, 8));
  CHECK(q17.edge_count() == 68);
}

TEST_CASE("paley(17) is self-complementary") {
  const LabeledGraph q = named("paley", {17});
  // x -> 3x maps squares to non-squares mod 17.
  for (int x = 0; x < 17; ++x)
    for (int y = 0; y < 17; ++y) {
      if (x == y) continue;
      CHECK(q.adjacent(x, y) != q.adjacent(3 * x % 17, 3 * y % 17));
    }
}

TEST_CASE("cayley2 over the hypercube") {
  const LabeledGraph g = named("cayley2", {10, 1, 2, 5, 6, 9, 10});
  CHECK(g.order() == 1024);
  CHECK(g.degrees() == std::vector<int>(1024, 528));
  CHECK_FALSE(g.has_loops());
  const LabeledGraph h = named("cayley2", {10, 0, 2, 5, 6, 9, 10});
  CHECK(h.has_loop(0));
  CHECK(h.degree(7) == 518);
}

TEST_CASE("bad names and parameters are rejected") {
  CHECK_THROWS(named("paley", {7}));
  CHECK_THROWS(named("paley", {21}));
  CHECK_THROWS(named("cayley2", {4, 5}));
  CHECK_THROWS(named("cayley2", {4, 1, 1}));
  CHECK_THROWS(named("C", {2}));
  CHECK_THROWS(named("nope", {3}));
  CHECK_THROWS(named("K"));
}

TEST_CASE("complement") {
  // loops flip along with the edges
  const LabeledGraph ck4 = complement(named("K", {4}));
  CHECK(ck4.edge_count() == 0);
  for (int v = 0; v < 4; ++v) CHECK(ck4.has_loop(v));
  std::mt19937_64 rng(5);
  const LabeledGraph g = random_graph(rng, 6);
  CHECK(complement(complement(g)) == g);
  CHECK(complement(named("loopK", {2})) == named("A", {2}));
}

TEST_CASE("blow-up") {
  CHECK(blow_up(named("loopK", {1}), 5) == named("K", {5}));
  const LabeledGraph knn = blow_up(named("K", {2}), 3);
  CHECK(is_isomorphic(knn, named("Kpart", {3, 3})));
  CHECK_FALSE(knn.has_loops());
  std::mt19937_64 rng(9);
  const LabeledGraph g = random_graph(rng, 5);
  CHECK(blow_up(g, 1) == g);
}

TEST_CASE("compose and tensor agree with direct constructions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = oracle::random_graph(rng, 2 + trial % 4, 0.5);
    const auto b = oracle::random_graph(rng, 1 + trial % 3, 0.5);
    CHECK(compose(from_adj(a), from_adj(b)) == from_adj(oracle::compose(a, b)));
    CHECK(tensor(from_adj(a), from_adj(b)) == from_adj(oracle::tensor(a, b)));
  }
}

TEST_CASE("compose examples") {
  const LabeledGraph k2 = named("K", {2}), a2 = named("A", {2});
  CHECK(is_isomorphic(compose(k2, a2), named("C", {4})));
  CHECK(is_isomorphic(compose(a2, k2), named("M4")));
  const LabeledGraph g18 = compose(tensor(named("K", {3}), named("K", {3})), k2);
  CHECK(g18.order() == 18);
  CHECK(g18.degrees() == std::vector<int>(18, 9));
  CHECK(compose(named("C", {5}), named("A", {1})) == named("C", {5}));
  CHECK_THROWS(compose(named("loopK", {1}), k2));
}

TEST_CASE("tensor examples") {
  const LabeledGraph k3 = named("K", {3});
  CHECK(is_isomorphic(tensor(k3, named("A", {2})), blow_up(k3, 2)));
  CHECK(canonical_form(tensor(k3, k3)) == canonical_form(named("paley", {9})));
  // (g, h) -> (h, g) carries one product onto the other
  const LabeledGraph k4 = named("K", {4}), m4 = named("M4");
  const LabeledGraph km = tensor(k4, m4), mk = tensor(m4, k4);
  bool swapped = true;
  for (int u = 0; u < 16; ++u)
    for (int v = 0; v < 16; ++v) swapped &= km.adjacent(u, v) == mk.adjacent((u % 4) * 4 + u / 4, (v % 4) * 4 + v / 4);
  CHECK(swapped);
  // the diagonal follows the same rule: loop xor loop
  CHECK(tensor(named("loopK", {1}), named("loopK", {1})) == named("A", {1}));
}

TEST_CASE("disjoint union") {
  CHECK(is_isomorphic(disjoint_union(named("K", {2}), named("K", {2})), named("M4")));
  const LabeledGraph c5 = named("C", {5});
  CHECK(disjoint_union(c5, c5) == compose(named("A", {2}), c5));
  CHECK(disjoint_union(c5, named("K", {3})).order() == 8);
}

TEST_CASE("canonical form") {
  CHECK(canonical_form(named("P", {4})).aut_count == 2);
  CHECK(canonical_form(named("K", {4})).aut_count == 24);
  CHECK(canonical_form(named("C", {5})).aut_count == 10);
  CHECK_THROWS(canonical_form(named("K", {11})));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 4;
    const LabeledGraph a = random_graph(rng, n);
    const LabeledGraph b = random_graph(rng, n);
    CHECK((canonical_form(a) == canonical_form(b)) == brute_isomorphic(a, b));
    // relabel a and compare
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    LabeledGraph c(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (a.adjacent(i, j)) c.set_edge(perm[i], perm[j], true);
    CHECK(canonical_form(a) == canonical_form(c));
    std::uint64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(fact % canonical_form(a).aut_count == 0);
  }
}

TEST_CASE("operators are commutative and associative up to isomorphism") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    const LabeledGraph a = random_graph(rng, 2), b = random_graph(rng, 2), c = random_graph(rng, 2);
    CHECK(is_isomorphic(tensor(a, b), tensor(b, a)));
    CHECK(is_isomorphic(tensor(tensor(a, b), c), tensor(a, tensor(b, c))));
    CHECK(is_isomorphic(compose(compose(a, b), c), compose(a, compose(b, c))));
    CHECK(is_isomorphic(disjoint_union(a, named("P", {3})), disjoint_union(named("P", {3}), a)));
  }
}

TEST_CASE("twins") {
  CHECK(is_twin_free(named("P", {4})));
  CHECK_FALSE(is_twin_free(named("C", {4})));
  CHECK_FALSE(is_twin_free(named("K", {3})));
  CHECK(is_twin_free(named("C", {5})));
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 5; ++trial) CHECK_FALSE(is_twin_free(blow_up(random_graph(rng, 4), 2)));
  CHECK_THROWS(is_twin_free(named("loopK", {2})));
}

TEST_CASE("graph6") {
  CHECK(graph6_encode(named("A", {1})) == "@");
  CHECK(graph6_encode(named("K", {2})) == "A_");
  CHECK(graph6_encode(named("C", {5})) == "Dhc");
  CHECK(graph6_decode("Dhc") == named("C", {5}));
  std::mt19937_64 rng(31);
  for (int n : {1, 2, 7, 12, 30, 62, 63, 100}) {
    const LabeledGraph g = random_graph(rng, n);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
  CHECK_THROWS(graph6_encode(named("loopK", {2})));
  CHECK_THROWS(graph6_decode(""));
  CHECK_THROWS(graph6_decode("A"));
  CHECK_THROWS(graph6_decode("A~~"));
}

TEST_CASE("symmetry is enforced") {
  AdjacencyMatrix m = AdjacencyMatrix::Zero(2, 2);
  m(0, 1) = 1;
  CHECK_THROWS(LabeledGraph{m});
  CHECK(to_adj(named("C", {4})) == oracle::cycle(4));
}
