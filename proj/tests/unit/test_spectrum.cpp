#include <doctest.h>

#include <random>

#include "tcomb/errors.hpp"
#include "tcomb/spectrum.hpp"

using namespace tcomb;

namespace {
const Card inf = Card::aleph0();

Spectrum random_spectrum(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> shape(0, 6), member(1, 12), count(0, 4);
  std::set<std::uint64_t> s;
  for (int i = count(rng); i > 0; --i) s.insert(static_cast<std::uint64_t>(member(rng)));
  int sh = shape(rng);
  if (sh == 0) return Spectrum::infinity_only();
  return sh <= 3 ? Spectrum::finite(s) : Spectrum::cofinite(s);
}

// Members of a spectrum as written down by hand: k in [1,20] plus 0 for ℵ0.
std::set<std::uint64_t> members(const Spectrum& s) {
  std::set<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= 20; ++k) {
    bool in = s.shape() == Spectrum::Shape::Finite     ? s.set().count(k) > 0
              : s.shape() == Spectrum::Shape::CoFinite ? s.set().count(k) == 0
                                                       : false;
    if (in) out.insert(k);
  }
  if (s.shape() != Spectrum::Shape::Finite) out.insert(0);
  return out;
}

std::vector<IntervalPiece> pieces_of(const Spectrum& s) {
  std::vector<IntervalPiece> out;
  if (s.shape() == Spectrum::Shape::Finite) {
    for (auto n : s.set()) out.push_back(IntervalPiece::closed(n, n));
  } else {
    std::uint64_t k = tail_start(s);
    for (std::uint64_t n = 1; n < k; ++n)
      if (!s.set().count(n)) out.push_back(IntervalPiece::closed(n, n));
    out.push_back(IntervalPiece::tail(k));
  }
  return out;
}
}  // namespace

TEST_SUITE("spectrum") {
  TEST_CASE("normalize examples") {
    CHECK(normalize({}) == Spectrum::finite({}));
    CHECK(normalize({IntervalPiece::closed(2, 4)}) == Spectrum::finite({2, 3, 4}));
    CHECK(normalize({IntervalPiece::closed(1, 2), IntervalPiece::tail(5)}) == Spectrum::cofinite({3, 4}));
    CHECK(normalize({IntervalPiece::closed(3, 6), IntervalPiece::tail(5)}) == Spectrum::cofinite({1, 2}));
    CHECK_THROWS_AS(IntervalPiece::closed(4, 2), Error);
  }

  TEST_CASE("contains examples") {
    CHECK(Spectrum::finite({3}).contains(Card(3)));
    CHECK_FALSE(Spectrum::finite({3}).contains(inf));
    CHECK(Spectrum::cofinite({1, 2}).contains(inf));
    CHECK_FALSE(Spectrum::cofinite({1, 2}).contains(Card(2)));
    CHECK(Spectrum::infinity_only().contains(inf));
    CHECK_FALSE(Spectrum::infinity_only().contains(Card(5)));
  }

  TEST_CASE("printing") {
    CHECK(Spectrum::finite({2, 3, 4}).str() == "{2,3,4}");
    CHECK(Spectrum::cofinite({1, 2}).str() == "co{1,2}");
    CHECK(Spectrum::infinity_only().str() == "{ℵ0}");
    CHECK(Spectrum::empty().str() == "{}");
  }

  TEST_CASE("intersect examples") {
    CHECK(intersect_empty(Spectrum::finite({3}), Spectrum::finite({4})));
    CHECK(intersect_empty(Spectrum::finite({3}), Spectrum::cofinite({3})));
    CHECK_FALSE(intersect_empty(Spectrum::cofinite({}), Spectrum::cofinite({1})));
    CHECK_FALSE(intersect_empty(Spectrum::infinity_only(), Spectrum::cofinite({1})));
    CHECK(intersect_empty(Spectrum::infinity_only(), Spectrum::finite({1, 2})));
  }

  TEST_CASE("intersect against a theory known only by probes") {
    auto never = [](std::uint64_t) { return false; };
    auto always = [](std::uint64_t) { return true; };
    auto only3 = [](std::uint64_t n) { return n == 3; };
    CHECK(intersect_empty_vs_cfs(Spectrum::finite({3}), never, nullptr));
    CHECK_FALSE(intersect_empty_vs_cfs(Spectrum::finite({3}), only3, nullptr));
    CHECK_FALSE(intersect_empty_vs_cfs(Spectrum::cofinite({}), never, always));
    CHECK_THROWS_AS(intersect_empty_vs_cfs(Spectrum::cofinite({}), never, nullptr), CapabilityError);
    CHECK_THROWS_AS(intersect_empty_vs_cfs(Spectrum::infinity_only(), never, always), CapabilityError);
    CHECK(tail_start(Spectrum::cofinite({})) == 1);
    CHECK(tail_start(Spectrum::cofinite({2, 7})) == 8);
  }

  TEST_CASE("membership matches set semantics") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 500; ++i) {
      Spectrum s = random_spectrum(rng);
      auto m = members(s);
      for (std::uint64_t k = 1; k <= 20; ++k) CHECK(s.contains(Card(k)) == (m.count(k) > 0));
      CHECK(s.contains(inf) == (m.count(0) > 0));
      auto fp = finite_part(s, 20);
      for (std::uint64_t k = 1; k <= 20; ++k) CHECK(fp.count(k) == m.count(k));
    }
  }

  TEST_CASE("intersection emptiness is pointwise and symmetric") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
      Spectrum a = random_spectrum(rng), b = random_spectrum(rng);
      auto ma = members(a), mb = members(b);
      bool disjoint = std::none_of(ma.begin(), ma.end(), [&](auto k) { return mb.count(k) > 0; });
      CHECK(intersect_empty(a, b) == disjoint);
      CHECK(intersect_empty(a, b) == intersect_empty(b, a));
    }
  }

  TEST_CASE("normalize is idempotent through pieces") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 500; ++i) {
      Spectrum s = random_spectrum(rng);
      if (s.shape() == Spectrum::Shape::InfinityOnly) continue;
      Spectrum n = normalize(pieces_of(s));
      CHECK(n == s);
      CHECK(normalize(pieces_of(n)) == n);
    }
  }

  TEST_CASE("normalize is the union of its pieces") {
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<int> lo(1, 10), len(0, 4), count(0, 4), coin(0, 3);
    for (int i = 0; i < 500; ++i) {
      std::vector<IntervalPiece> ps;
      for (int j = count(rng); j > 0; --j) {
        auto l = static_cast<std::uint64_t>(lo(rng));
        ps.push_back(coin(rng) == 0 ? IntervalPiece::tail(l) : IntervalPiece::closed(l, l + static_cast<std::uint64_t>(len(rng))));
      }
      Spectrum s = normalize(ps);
      bool has_tail = false;
      for (std::uint64_t k = 1; k <= 20; ++k) {
        bool in = false;
        for (const auto& p : ps) {
          in = in || (k >= p.lo && (!p.hi || k <= *p.hi));
          has_tail = has_tail || !p.hi;
        }
        CHECK(s.contains(Card(k)) == in);
      }
      CHECK(s.contains(inf) == has_tail);
      CHECK((s.shape() == Spectrum::Shape::CoFinite) == has_tail);
    }
  }

  TEST_CASE("union") {
    CHECK(spectrum_union(Spectrum::finite({1}), Spectrum::finite({3})) == Spectrum::finite({1, 3}));
    CHECK(spectrum_union(Spectrum::finite({1, 2}), Spectrum::cofinite({2, 3})) == Spectrum::cofinite({3}));
    CHECK(spectrum_union(Spectrum::infinity_only(), Spectrum::empty()) == Spectrum::infinity_only());
    CHECK_THROWS_AS(spectrum_union(Spectrum::infinity_only(), Spectrum::finite({2})), Error);
    std::mt19937_64 rng(45);
    for (int i = 0; i < 500; ++i) {
      Spectrum a = random_spectrum(rng), b = random_spectrum(rng);
      bool lone_inf = (a.shape() == Spectrum::Shape::InfinityOnly && b.shape() == Spectrum::Shape::Finite) ||
                      (b.shape() == Spectrum::Shape::InfinityOnly && a.shape() == Spectrum::Shape::Finite);
      if (lone_inf) continue;
      Spectrum u = spectrum_union(a, b);
      for (std::uint64_t k = 1; k <= 20; ++k)
        CHECK(u.contains(Card(k)) == (a.contains(Card(k)) || b.contains(Card(k))));
      CHECK(u.contains(inf) == (a.contains(inf) || b.contains(inf)));
    }
  }

  TEST_CASE("the probe-based test matches the plain one and never probes the tail") {
    std::mt19937_64 rng(46);
    for (int i = 0; i < 1000; ++i) {
      Spectrum a = random_spectrum(rng), b = random_spectrum(rng);
      if (a.shape() == Spectrum::Shape::InfinityOnly) continue;
      std::uint64_t limit = a.shape() == Spectrum::Shape::CoFinite ? tail_start(a) : UINT64_MAX;
      bool guard_ok = true;
      auto probe = [&](std::uint64_t n) {
        if (n >= limit) guard_ok = false;
        return b.contains(Card(n));
      };
      auto tail = [&](std::uint64_t n) {
        if (b.shape() != Spectrum::Shape::Finite) return true;
        return !b.set().empty() && *b.set().rbegin() >= n;
      };
      CHECK(intersect_empty_vs_cfs(a, probe, tail) == intersect_empty(a, b));
      CHECK(guard_ok);
    }
  }
}
