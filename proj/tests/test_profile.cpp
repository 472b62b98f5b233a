#include <doctest.h>

#include <random>

#include "inducibility/errors.hpp"
#include "inducibility/profile.hpp"
#include "inducibility/step_model.hpp"
#include "support.hpp"

using namespace inducibility;
using support::by_table;
using support::from_adj;
using support::named;

TEST_CASE("iso tables") {
  const int sizes[] = {0, 0, 2, 4, 11, 34};
  for (int t = 2; t <= 5; ++t) {
    const IsoTable& table = iso_table(t);
    CHECK(table.size() == sizes[t]);
    int total = 0;
    int factorial = 1;
    for (int k = 2; k <= t; ++k) factorial *= k;
    for (const auto& e : table.entries()) {
      total += e.orbit_size;
      CHECK(e.orbit_size * e.aut_count == factorial);
    }
    CHECK(total == static_cast<int>(labeled_count(t)));
  }
  CHECK_THROWS(iso_table(1));
  CHECK_THROWS(iso_table(6));
}

TEST_CASE("t = 4 basis order and orbits") {
  const IsoTable& table = iso_table(4);
  const std::vector<std::string> basis{"K4", "A4", "T4", "S4", "M4", "C4", "Q4", "V4", "D4", "E4", "P4"};
  CHECK(table.names() == basis);
  const int orbits[] = {1, 1, 4, 4, 3, 3, 12, 12, 6, 6, 12};
  for (int i = 0; i < 11; ++i) CHECK(table[i].orbit_size == orbits[i]);

  // orbit sizes from brute force over all 64 labeled graphs
  std::map<std::uint32_t, int> counts;
  for (std::uint32_t m = 0; m < 64; ++m) ++counts[oracle::mask_key(m, 4)];
  for (int i = 0; i < 11; ++i) CHECK(counts[oracle::mask_key(table[i].representative, 4)] == orbits[i]);

  for (const auto& name : basis) {
    if (is_fixed_name(name)) CHECK(table.find(build_named(name)) == table.find(name));
  }
  CHECK(table.find(named("P", {4})) == table.find("P4"));
  CHECK(table.find(named("C", {4})) == table.find("C4"));
  CHECK(table.find("nope") == -1);
}

TEST_CASE("t = 5 names") {
  const IsoTable& table = iso_table(5);
  for (auto name : {"K5", "A5", "C5", "P5", "bull"}) CHECK(table.find(name) >= 0);
  CHECK(table.find(build_named("bull")) == table.find("bull"));
  CHECK(table.find(named("C", {5})) == table.find("C5"));
}

TEST_CASE("type_of agrees with the brute-force key") {
  for (int t = 3; t <= 5; ++t) {
    const IsoTable& table = iso_table(t);
    for (LabeledMask m = 0; m < labeled_count(t); ++m) {
      CHECK(oracle::mask_key(m, t) == oracle::mask_key(table[table.type_of(m)].representative, t));
    }
  }
}

TEST_CASE("induced profiles") {
  const auto c5 = induced_profile(named("C", {5}), 4);
  CHECK(c5.at("P4") == 1);
  CHECK(c5.values.sum() == 1);
  CHECK(induced_profile(named("K", {4}), 4).at("K4") == 1);
  CHECK(induced_profile(named("paley", {17}), 3).at("K3") == Rational(1, 10));
  CHECK_THROWS_AS(induced_profile(named("paley", {17}), 5, 100), BudgetExceeded);
  CHECK_THROWS(induced_profile(named("loopK", {5}), 3));
  CHECK_THROWS(induced_profile(named("K", {3}), 4));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = oracle::random_graph(rng, 5 + trial % 5, 0.5);
    const int t = 3 + trial % 3;
    CHECK(induced_profile(from_adj(a), t).values == by_table(oracle::induced(a, t), t));
  }
}

TEST_CASE("labeled induced profile spreads over orbits") {
  const auto p = labeled_induced_profile(named("C", {5}), 4);
  const IsoTable& table = iso_table(4);
  for (LabeledMask m = 0; m < 64; ++m) {
    CHECK(p[m] == (table.type_of(m) == table.find("P4") ? Rational(1, 12) : Rational(0)));
  }
}

TEST_CASE("repetitive profiles") {
  const auto c5 = repetitive_profile(from_graph<Rational>(named("C", {5})), 4);
  CHECK(c5.at("P4") == Rational(24, 125));
  CHECK(c5.values == by_table(oracle::repetitive(oracle::cycle(5), 4), 4));

  const auto k2 = repetitive_profile(from_graph<Rational>(named("K", {2})), 3);
  CHECK(k2.at("K3") + k2.at("A3") == Rational(1, 4));

  const auto k4 = repetitive_profile(from_graph<Rational>(named("K", {4})), 4);
  CHECK(k4.at("K4") == Rational(24, 256));
  CHECK(k4.at("D4") == Rational(144, 256));
  CHECK(k4.at("C4") == Rational(36, 256));
  CHECK(k4.at("T4") == 0);

  CHECK_THROWS_AS(repetitive_profile(from_graph<Rational>(named("C", {5})), 4, 10), BudgetExceeded);
}

TEST_CASE("repetitive profile of weighted models matches the oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(1, 5);
  for (int trial = 0; trial < 6; ++trial) {
    const int k = 1 + trial % 3;
    std::vector<Rational> mass(k);
    Rational total(0);
    for (auto& m : mass) {
      m = num(rng);
      total += m;
    }
    for (auto& m : mass) m /= total;
    std::vector<std::vector<Rational>> w(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) w[i][j] = w[j][i] = Rational(num(rng) - 1, 4);
    Vector<Rational> mv(k);
    Matrix<Rational> wm(k, k);
    for (int i = 0; i < k; ++i) {
      mv(i) = mass[i];
      for (int j = 0; j < k; ++j) wm(i, j) = w[i][j];
    }
    const ExactModel model(mv, wm);
    for (int t = 3; t <= 4; ++t) {
      CHECK(repetitive_profile(model, t).values == by_table(oracle::repetitive(mass, w, t), t));
    }
  }
}

TEST_CASE("loops act on repeated positions") {
  const auto r = repetitive_profile(from_graph<Rational>(named("loopK", {1})), 4);
  CHECK(r.at("K4") == 1);
  const auto s = repetitive_profile(from_graph<Rational>(blow_up(named("P", {3}), 3)), 4);
  CHECK(s.values == repetitive_profile(from_graph<Rational>(named("P", {3})), 4).values);
}

TEST_CASE("repetitive_from_induced") {
  const LabeledGraph c5 = named("C", {5});
  CHECK(repetitive_from_induced(induced_profile(c5, 4), 5, 4).values ==
        repetitive_profile(from_graph<Rational>(c5), 4).values);
  const auto k4 = repetitive_from_induced(induced_profile(named("K", {4}), 4), 4, 4);
  CHECK(k4.at("K4") == Rational(24, 256));
  CHECK(k4.at("C4") == Rational(36, 256));

  std::mt19937_64 rng(13);
  for (int s = 3; s <= 8; ++s) {
    const LabeledGraph g = from_adj(oracle::random_graph(rng, s, 0.5));
    const auto p2 = induced_profile(g, 2);
    const auto r2 = repetitive_from_induced(p2, s, 2);
    CHECK(r2.at("K2") == p2.at("K2") * Rational(s - 1, s));
  }
  CHECK_THROWS(repetitive_from_induced(induced_profile(c5, 4), 3, 4));
}

TEST_CASE("labeled and unlabeled views") {
  const auto r = labeled_repetitive_profile(from_graph<Rational>(named("C", {5})), 4);
  const auto R = to_unlabeled(r);
  CHECK(to_labeled(R).values == r.values);
  CHECK(R.values == by_table(support::oracle_unlabeled(r.values, 4), 4));
}

TEST_CASE("complement duality") {
  const ExactModel m = from_graph<Rational>(named("bull"));
  const auto r = labeled_repetitive_profile(m, 4);
  const auto rc = labeled_repetitive_profile(model_complement(m), 4);
  for (LabeledMask h = 0; h < 64; ++h) CHECK(r[h] == rc[h ^ full_mask(4)]);
}

TEST_CASE("project_prefix marginalizes") {
  const auto r4 = labeled_repetitive_profile(from_graph<Rational>(named("C", {5})), 4);
  const auto r3 = labeled_repetitive_profile(from_graph<Rational>(named("C", {5})), 3);
  CHECK(project_prefix(r4, 3).values == r3.values);
}

TEST_CASE("quantum density") {
  const auto r4 = repetitive_profile(bernoulli<Rational>(Rational(1, 2)), 4);
  CHECK(quantum_density(QuantumGraph::sum_of(4, {"K4", "A4"}), r4) == Rational(1, 32));
  const auto k2 = repetitive_profile(from_graph<Rational>(named("K", {2})), 3);
  CHECK(quantum_density(QuantumGraph::sum_of(3, {"K3", "A3"}), k2) == Rational(1, 4));
  CHECK(quantum_density(QuantumGraph::sum_of(4, {"P4"}), induced_profile(named("C", {5}), 4)) == 1);
  CHECK_THROWS(quantum_density(QuantumGraph::sum_of(3, {"K3"}), r4));
  CHECK_THROWS(QuantumGraph::sum_of(4, {"X9"}));
}

TEST_CASE("approximate profiles sum to one") {
  const auto r = repetitive_profile(to_approx(from_graph<Rational>(named("paley", {17}))), 5);
  CHECK(std::abs(r.values.sum() - 1.0) < 1e-12);
  const auto e = repetitive_profile(from_graph<Rational>(named("paley", {17})), 5);
  for (int i = 0; i < e.values.size(); ++i) CHECK(std::abs(to_double(e[i]) - r[i]) < 1e-12);
}
