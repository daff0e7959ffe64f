#include <doctest.h>

#include <map>

#include "support/fuzz.hpp"
#include "tcomb/errors.hpp"
#include "tcomb/logic.hpp"
#include "tcomb/models.hpp"

using namespace tcomb;

namespace {
Term x = Term::var("x"), y = Term::var("y"), z = Term::var("z");
Term a = Term::constant("a");

std::size_t bell(std::size_t n) {
  static const std::size_t b[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  return b[n];
}
}  // namespace

TEST_SUITE("logic") {
  TEST_CASE("cardinals order finite below aleph0") {
    CHECK(Card(3) < Card(4));
    CHECK(Card(1000) < Card::aleph0());
    CHECK(Card::aleph0() == Card::aleph0());
    CHECK(Card::aleph0().str() == "ℵ0");
    CHECK(Card(7).str() == "7");
  }

  TEST_CASE("terms") {
    Term t = Term::iterate("t", 2, a);
    CHECK(t.depth() == 2);
    CHECK(t.prefix(1) == Term::iterate("t", 1, a));
    CHECK(x.applied("s").apps == std::vector<std::string>{"s"});
    CHECK(x.is_variable());
    CHECK_FALSE(x.applied("s").is_variable());
  }

  TEST_CASE("distinct") {
    CHECK(build_distinct({"x"}).empty());
    CHECK(build_distinct({"x", "y"}) == Cube{Literal::neq(x, y)});
    CHECK(build_distinct({"x", "y", "z"}) == Cube{Literal::neq(x, y), Literal::neq(x, z), Literal::neq(y, z)});
  }

  TEST_CASE("fixpoint counts") {
    Term x1 = Term::var("x1"), x2 = Term::var("x2");
    CHECK(build_fixpoint_count(1, "s") == Cube{Literal::eq(x1.applied("s"), x1)});
    Cube two = build_fixpoint_count(2, "s");
    CHECK(two.size() == 3);
    for (const auto& l : {Literal::neq(x1, x2), Literal::eq(x1.applied("s"), x1), Literal::eq(x2.applied("s"), x2)})
      CHECK(std::find(two.literals.begin(), two.literals.end(), l) != two.literals.end());
    Cube three = build_fixpoint_count(3, "t");
    CHECK(three.size() == 6);
  }

  TEST_CASE("orbit formulas") {
    CHECK(build_orbit_formula(OrbitKind::Orb, 1, a) == Formula::lit(Literal::eq(a.applied("t"), a)));
    CHECK(build_orbit_formula(OrbitKind::Dif, 2, a) == Formula::lit(Literal::neq(a, a.applied("t"))));
    Formula dif3 = Formula::from_cube(
        {Literal::neq(a, a.applied("t")), Literal::neq(a, Term::iterate("t", 2, a)),
         Literal::neq(a.applied("t"), Term::iterate("t", 2, a))});
    CHECK(build_orbit_formula(OrbitKind::Orb, 2, a) ==
          Formula::conj({Formula::lit(Literal::neq(a, a.applied("t"))), Formula::negate(dif3)}));
  }

  TEST_CASE("orbit formulas hold exactly on orbits of that length") {
    for (int k = 1; k <= 4; ++k)
      for (int len = 1; len <= k; ++len) {
        FiniteInterpretation m;
        m.size = static_cast<std::size_t>(k);
        m.functions["t"] = std::vector<int>(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < len; ++i) m.functions["t"][static_cast<std::size_t>(i)] = (i + 1) % len;
        m.constants["a"] = 0;
        for (unsigned n = 1; n <= 5; ++n)
          CHECK(eval(m, build_orbit_formula(OrbitKind::Orb, n, a)) == (static_cast<int>(n) == len));
      }
  }

  TEST_CASE("partitions are counted by the Bell numbers") {
    for (std::size_t n = 0; n <= 6; ++n) {
      std::set<std::vector<unsigned>> seen;
      for_each_partition(n, [&](const std::vector<unsigned>& rgs) {
        seen.insert(rgs);
        return true;
      });
      CHECK(seen.size() == bell(n));
    }
    std::size_t two_blocks = 0;
    for_each_partition(
        4, [&](const std::vector<unsigned>&) { return ++two_blocks, true; }, 2);
    CHECK(two_blocks == 8);  // S(4,1) + S(4,2)
  }

  TEST_CASE("arrangements") {
    CHECK(enumerate_arrangements({"x"}).size() == 1);
    CHECK(enumerate_arrangements({"x", "y"}).size() == 2);
    CHECK(enumerate_arrangements({"x", "y", "z"}).size() == 5);
    CHECK(enumerate_arrangements({}).size() == 1);
    std::vector<std::string> nine{"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9"};
    CHECK_THROWS_AS(enumerate_arrangements(nine), LimitError);

    CHECK(arrangement_to_cube(Arrangement({"x", "y"}, {0, 0})) == Cube{Literal::eq(x, y)});
    CHECK(arrangement_to_cube(Arrangement({"x", "y"}, {0, 1})) == Cube{Literal::neq(x, y)});
    CHECK(arrangement_to_cube(Arrangement({"x", "y", "z"}, {0, 0, 1})) ==
          Cube{Literal::eq(x, y), Literal::neq(x, z), Literal::neq(y, z)});
  }

  TEST_CASE("an arrangement cube holds exactly when the assignment induces its partition") {
    std::vector<std::string> vars{"x", "y", "z", "w"};
    auto arrs = enumerate_arrangements(vars);
    for (int k = 1; k <= 4; ++k) {
      std::vector<int> v(4, 0);
      for (;;) {
        FiniteInterpretation m;
        m.size = static_cast<std::size_t>(k);
        for (std::size_t i = 0; i < 4; ++i) m.variables[vars[i]] = v[i];
        int holding = 0;
        for (const auto& arr : arrs) {
          bool induced = true;
          for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) induced = induced && (arr.same_block(i, j) == (v[i] == v[j]));
          bool sat = eval(m, arrangement_to_cube(arr));
          CHECK(sat == induced);
          holding += sat;
        }
        CHECK(holding == 1);
        std::size_t i = 0;
        while (i < 4 && ++v[i] == k) v[i++] = 0;
        if (i == 4) break;
      }
    }
  }

  TEST_CASE("dnf") {
    Formula f = Formula::conj({Formula::lit(Literal::eq(x, y)),
                               Formula::disj({Formula::lit(Literal::pred("P", 2)), Formula::lit(Literal::pred("P", 3))})});
    auto cubes = to_dnf(f);
    REQUIRE(cubes.size() == 2);
    CHECK(cubes[0] == Cube{Literal::eq(x, y), Literal::pred("P", 2)});
    CHECK(cubes[1] == Cube{Literal::eq(x, y), Literal::pred("P", 3)});
    auto neg = to_dnf(Formula::negate(Formula::from_cube({Literal::eq(x, y), Literal::pred("P", 1)})));
    REQUIRE(neg.size() == 2);
    CHECK(neg[0] == Cube{Literal::neq(x, y)});
    CHECK(neg[1] == Cube{Literal::pred("P", 1, false)});
  }

  TEST_CASE("dnf preserves truth") {
    testing::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      Cube c1 = testing::fuzz_s_cube(rng), c2 = testing::fuzz_s_cube(rng);
      Formula f = Formula::disj({Formula::negate(Formula::from_cube(c1)), Formula::from_cube(c2)});
      for (int s0 = 0; s0 < 2; ++s0)
        for (int s1 = 0; s1 < 2; ++s1)
          for (int xv = 0; xv < 2; ++xv)
            for (int yv = 0; yv < 2; ++yv) {
              FiniteInterpretation m;
              m.size = 2;
              m.functions["s"] = {s0, s1};
              m.variables = {{"x", xv}, {"y", yv}, {"z", xv}};
              bool dnf = false;
              for (const auto& c : to_dnf(f)) dnf = dnf || eval(m, c);
              CHECK(dnf == eval(m, f));
              CHECK(eval(m, Formula::negate(f)) == !eval(m, f));
            }
    }
  }

  TEST_CASE("variables in order of first occurrence") {
    Cube c{Literal::eq(y.applied("s"), x), Literal::neq(z, y)};
    CHECK(variables(c) == std::vector<std::string>{"y", "x", "z"});
  }

  TEST_CASE("fresh names avoid the given set and parsed identifiers") {
    FreshNames fresh("w", {"_w1"});
    CHECK(fresh.next() == "_w2");
    CHECK(fresh.next() == "_w3");
  }

  TEST_CASE("purification of already pure cubes") {
    Signature sp = signatures::predicates(), ss = signatures::successor(), so = signatures::orbit();
    auto p1 = purify({Literal::pred("P", 2), Literal::eq(x.applied("s"), x)}, sp, ss);
    CHECK(p1.first == Cube{Literal::pred("P", 2)});
    CHECK(p1.second == Cube{Literal::eq(x.applied("s"), x)});
    CHECK(p1.shared.empty());

    auto p2 = purify({Literal::eq(x, y)}, sp, ss);
    CHECK(p2.first == Cube{Literal::eq(x, y)});
    CHECK(p2.second.empty());

    auto p3 = purify({Literal::eq(x.applied("t"), x), Literal::pred("P", 3)}, sp, so);
    CHECK(p3.first == Cube{Literal::pred("P", 3)});
    CHECK(p3.second == Cube{Literal::eq(x.applied("t"), x)});
  }

  TEST_CASE("purification keeps models") {
    Signature ss = signatures::successor(), so = signatures::orbit();
    testing::Rng rng(12);
    auto term = [&] {
      std::uniform_int_distribution<int> d(0, 3);
      Term t = d(rng) == 0 ? a : Term::var(d(rng) % 2 ? "x" : "y");
      for (int i = d(rng) % 3; i > 0; --i) t = t.applied(d(rng) % 2 ? "s" : "t");
      return t;
    };
    for (int round = 0; round < 50; ++round) {
      Cube mixed;
      for (int i = 0; i < 2; ++i) mixed.add(round % 3 ? Literal::eq(term(), term()) : Literal::neq(term(), term()));
      Purified p = purify(mixed, ss, so);
      check_symbols(p.first, ss);
      check_symbols(p.second, so);
      Cube joint = p.first.conjoined(p.second);
      auto mixed_vars = variables(mixed);
      std::vector<std::string> fresh;
      for (const auto& v : variables(joint))
        if (std::find(mixed_vars.begin(), mixed_vars.end(), v) == mixed_vars.end()) fresh.push_back(v);
      for (int k = 1; k <= 3; ++k) {
        // every interpretation of size k over s, t, a and the mixed variables
        std::size_t slots = 2 * static_cast<std::size_t>(k) + 1 + mixed_vars.size();
        std::vector<int> d(slots, 0);
        for (;;) {
          FiniteInterpretation m;
          m.size = static_cast<std::size_t>(k);
          m.functions["s"] = std::vector<int>(d.begin(), d.begin() + k);
          m.functions["t"] = std::vector<int>(d.begin() + k, d.begin() + 2 * k);
          m.constants["a"] = d[2 * static_cast<std::size_t>(k)];
          for (std::size_t i = 0; i < mixed_vars.size(); ++i) m.variables[mixed_vars[i]] = d[2 * k + 1 + i];
          bool want = eval(m, mixed);
          bool got = false;
          std::vector<int> e(fresh.size(), 0);
          for (;;) {
            for (std::size_t i = 0; i < fresh.size(); ++i) m.variables[fresh[i]] = e[i];
            if (eval(m, joint)) got = true;
            std::size_t i = 0;
            while (i < e.size() && ++e[i] == k) e[i++] = 0;
            if (got || i == e.size()) break;
          }
          CHECK_MESSAGE(got == want, to_string(mixed));
          std::size_t i = 0;
          while (i < d.size() && ++d[i] == k) d[i++] = 0;
          if (i == d.size()) break;
        }
      }
    }
  }

  TEST_CASE("variable elimination") {
    Cube c{Literal::eq(x, a.applied("t")), Literal::neq(x.applied("t"), y), Literal::eq(y, z)};
    Cube e = eliminate_defined_variables(c);
    CHECK(variables(e) == std::vector<std::string>{"z"});
    CHECK(e == Cube{Literal::neq(Term::iterate("t", 2, a), z)});
    Cube loop{Literal::eq(x, x.applied("s"))};
    CHECK(eliminate_defined_variables(loop) == loop);
  }
}
