#include <doctest.h>

#include <cmath>

#include "support.hpp"

using namespace fracmeasure;
using test::line;
using test::vec;

namespace {

Matrix rotation(double a) {
  Matrix m(2, 2);
  m << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  return m;
}

Word random_word(std::mt19937_64& rng, const TransitionMatrix& a, int length) {
  const auto live = live_symbols(a);
  Word w;
  std::uniform_int_distribution<int> pick(0, a.size() - 1);
  while (static_cast<int>(w.size()) < length) {
    std::vector<int> next;
    for (int j = 0; j < a.size(); ++j) {
      if (live[j] && (w.empty() || a.allows(w.back(), j))) next.push_back(j);
    }
    w.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
  }
  return w;
}

}  // namespace

TEST_CASE("similarity validation") {
  CHECK_THROWS_AS(Similarity(1.0, Matrix::Identity(1, 1), vec({0})), ParseError);
  CHECK_THROWS_AS(Similarity(0.0, Matrix::Identity(1, 1), vec({0})), ParseError);
  Matrix skew = Matrix::Identity(2, 2);
  skew(0, 1) = 1e-6;
  CHECK_THROWS_AS(Similarity(0.5, skew, vec({0, 0})), ParseError);
  CHECK_THROWS_AS(Similarity(0.5, Matrix::Identity(2, 2), vec({0})), ParseError);
  CHECK_NOTHROW(Similarity(0.5, rotation(0.3), vec({0.3, 0.3})));
}

TEST_CASE("cube containment is checked on corners") {
  CHECK(line(0.5, 0.5).maps_unit_cube_into_itself());
  CHECK_FALSE(line(0.5, 0.6).maps_unit_cube_into_itself());
  CHECK(line(0.5, 0.5 + 1e-10).maps_unit_cube_into_itself());
  Matrix flip = Matrix::Identity(1, 1);
  flip(0, 0) = -1;
  CHECK(Similarity(0.5, flip, vec({0.5})).maps_unit_cube_into_itself());
  CHECK_FALSE(Similarity(0.5, flip, vec({0.4})).maps_unit_cube_into_itself());
  CHECK_THROWS_AS(SftSystem({line(0.5, 0.75)}, TransitionMatrix::full(1)), ParseError);
}

TEST_CASE("composition") {
  const auto q = compose(line(0.5, 0), line(0.5, 0));
  CHECK(q.ratio() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(q.translation()(0) == 0.0);
  const auto h = compose(line(0.5, 0), line(0.5, 0.5));
  CHECK(h.ratio() == doctest::Approx(0.25));
  CHECK(h.translation()(0) == doctest::Approx(0.25));

  const auto seg = fixtures::segments();
  const auto s01 = compose(seg.map(0), seg.map(1));
  CHECK(s01.ratio() == doctest::Approx(0.25));
  for (const auto& p : {vec({0, 0}), vec({1, 0}), vec({0.3, 0.9})}) {
    const Vector expect = vec({-p(0) / 4 + 0.25, p(1) / 4 + 0.25});
    CHECK((s01(p) - expect).norm() < 1e-12);
  }
  CHECK_THROWS_AS(compose(line(0.5, 0), seg.map(0)), std::domain_error);
}

TEST_CASE("composition is exact on random points") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0, 1);
  const Similarity a(0.6, rotation(0.7), vec({0.2, 0.1}));
  const Similarity b(0.3, rotation(-1.9), vec({0.5, 0.4}));
  const auto ab = compose(a, b);
  CHECK(ab.ratio() == doctest::Approx(0.18));
  for (int k = 0; k < 10; ++k) {
    const Vector x = vec({u(rng), u(rng)});
    CHECK((ab(x) - a(b(x))).norm() < 1e-12);
  }
}

TEST_CASE("word maps") {
  const auto seg = fixtures::segments();
  CHECK((word_map(seg, {2}).translation() - seg.map(2).translation()).norm() == 0.0);
  const auto iv = fixtures::interval();
  CHECK(word_map(iv, {0, 0, 0}).ratio() == 0.125);
  const auto w01 = word_map(seg, {0, 1});
  CHECK((w01(vec({0.2, 0.7})) - compose(seg.map(0), seg.map(1))(vec({0.2, 0.7}))).norm() < 1e-15);
  CHECK_THROWS_AS(word_map(iv, {}), std::domain_error);
}

TEST_CASE("word map ratio is the product of symbol ratios") {
  std::mt19937_64 rng(5);
  const auto sys = test::random_system(rng, 2, 4, false);
  for (int k = 0; k < 1000; ++k) {
    const Word w = random_word(rng, sys.transitions(), 1 + k % 30);
    double product = 1;
    for (int x : w) product *= sys.map(x).ratio();
    CHECK(std::abs(word_map(sys, w).ratio() - product) <= 1e-12 * product);
  }
}

TEST_CASE("coding points") {
  const auto c3 = fixtures::cantor3();
  const auto p = coding_point(c3, Word(10, 1));
  CHECK(std::abs(p.point(0) - 1) < std::pow(3.0, -10));
  const auto seg = fixtures::segments();
  const auto q = coding_point(seg, Word(10, 0));
  CHECK(q.point.norm() <= std::ldexp(1.0, -10) * std::sqrt(2.0));
  const auto one = coding_point(seg, {3});
  CHECK(one.error_radius == doctest::Approx(0.5 * std::sqrt(2.0) / 2));
  CHECK((one.point - seg.map(3)(vec({0.5, 0.5}))).norm() < 1e-15);
  CHECK_THROWS_AS(coding_point(seg, {0, 2}), std::domain_error);
}

TEST_CASE("deepening a word stays within the parent's error radius") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto sys = test::random_system(rng, 1 + trial % 2, 2 + trial % 3, trial % 2 == 0);
    for (int k = 0; k < 100; ++k) {
      const Word child = random_word(rng, sys.transitions(), 6 + k % 10);
      const Word parent(child.begin(), child.end() - 5);
      const auto cp = coding_point(sys, parent);
      CHECK((coding_point(sys, child).point - cp.point).norm() < cp.error_radius);
    }
  }
}

TEST_CASE("attractor points follow least successors") {
  const auto c3 = fixtures::cantor3();
  // Least successors: 1 then 0 forever, i.e. S_1(0).
  CHECK(attractor_point(c3, 1)(0) == doctest::Approx(2.0 / 3));
  CHECK(attractor_point(c3, 0)(0) == doctest::Approx(0.0));
  const auto ni = fixtures::nonirreducible();
  CHECK(attractor_point(ni, 1)(0) == doctest::Approx(0.5));
  CHECK(attractor_point(ni, Word{2, 1})(0) == doctest::Approx(0.75 + 0.125));
}

TEST_CASE("sampling the segments system") {
  const auto seg = fixtures::segments();
  const auto cells = sample_attractor(seg, {0}, 8);
  CHECK(cells.size() == 128);
  for (const auto& c : cells) {
    CHECK(std::abs(c.center(0)) <= std::ldexp(1.0, -7));
    CHECK(c.diameter == doctest::Approx(std::ldexp(1.0, -8) * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(c.word.front() == 0);
  }
  CHECK(std::is_sorted(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.word < b.word; }));
}

TEST_CASE("sampling the ternary Cantor set gives disjoint cells") {
  const auto c3 = fixtures::cantor3();
  for (int k = 1; k <= 8; ++k) {
    const auto cells = sample_cylinders(c3, {0, 1}, k);
    CHECK(cells.size() == (1u << k));
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      CHECK(cells[i].diameter == doctest::Approx(std::pow(3.0, -k)));
      CHECK(cells[i].box.hi(0) < cells[i + 1].box.lo(0));
    }
  }
}

TEST_CASE("the non-irreducible system has two cells below symbol 2") {
  const auto ni = fixtures::nonirreducible();
  CHECK(sample_attractor(ni, {2}, 3).size() == 2);
  CHECK(sample_attractor(ni, {2}, 12).size() == 2);
}

TEST_CASE("sampling errors") {
  const auto seg = fixtures::segments();
  CHECK_THROWS_AS(sample_attractor(seg, {0, 2}, 4), std::domain_error);
  CHECK_THROWS_AS(sample_attractor(seg, {0, 1}, 1), std::domain_error);
  try {
    sample_attractor(fixtures::cantor_dust(), {0}, 14);
    FAIL("expected a budget error");
  } catch (const BudgetError& e) {
    CHECK(std::string(e.what()).find("depth") != std::string::npos);
  }
}

TEST_CASE("cell count matches admissible word counts") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto sys = test::random_system(rng, 1, 2 + trial % 3, false);
    const auto live = live_symbols(sys.transitions());
    for (int i = 0; i < sys.alphabet_size(); ++i) {
      if (!live[i]) continue;
      const auto cells = sample_attractor(sys, {i}, 6);
      std::size_t expect = 0;
      for (const auto& w : admissible_words(sys.transitions(), 6)) expect += w.front() == i;
      CHECK(cells.size() == expect);
    }
  }
}

TEST_CASE("child boxes nest in parent boxes") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sys = test::random_system(rng, 2, 3, trial % 2 == 0);
    const auto roots = live_symbols(sys.transitions());
    for (int i = 0; i < sys.alphabet_size(); ++i) {
      if (!roots[i]) continue;
      for (const auto& child : sample_attractor(sys, {i}, 4)) {
        const Word parent(child.word.begin(), child.word.end() - 1);
        CHECK(unit_cube_image_box(word_map(sys, parent)).contains(child.box, 1e-9));
        CHECK(child.diameter == doctest::Approx(sys.ratio(child.word) * std::sqrt(2.0)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("set diameter brackets") {
  const auto seg = fixtures::segments();
  const auto b = set_diameter(sample_cylinders(seg, {0, 1, 2, 3}, 10));
  CHECK(b.contains(std::sqrt(2.0)));
  CHECK(b.width() <= std::ldexp(1.0, -8));

  const auto single = set_diameter(sample_attractor(seg, {0}, 1));
  CHECK(single.lower == 0.0);
  CHECK(single.upper == doctest::Approx(2 * 0.5 * std::sqrt(2.0)));

  CHECK(set_diameter(sample_cylinders(fixtures::cantor3(), {0, 1}, 10)).contains(1.0));
  CHECK_THROWS_AS(set_diameter({}), std::domain_error);
}

TEST_CASE("point set diameter matches brute force") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> g;
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Vector> pts(1 + trial);
      for (auto& p : pts) {
        p.resize(n);
        for (int k = 0; k < n; ++k) p(k) = g(rng);
      }
      double brute = 0;
      for (const auto& p : pts)
        for (const auto& q : pts) brute = std::max(brute, (p - q).norm());
      CHECK(point_set_diameter(pts) == doctest::Approx(brute).epsilon(1e-12));
    }
  }
}
