#include "tcomb/spectrum.hpp"

#include <algorithm>

#include "tcomb/errors.hpp"

namespace tcomb {

namespace {
void check_positive(const std::set<std::uint64_t>& s) {
  if (!s.empty() && *s.begin() == 0) throw Error("spectrum: cardinalities must be positive");
}
}  // namespace

Spectrum Spectrum::finite(std::set<std::uint64_t> members) {
  check_positive(members);
  return Spectrum(Shape::Finite, std::move(members));
}

Spectrum Spectrum::cofinite(std::set<std::uint64_t> excluded) {
  check_positive(excluded);
  return Spectrum(Shape::CoFinite, std::move(excluded));
}

bool Spectrum::contains(Card k) const {
  switch (shape_) {
    case Shape::Finite: return k.is_finite() && set_.count(k.value()) > 0;
    case Shape::CoFinite: return k.is_infinite() || set_.count(k.value()) == 0;
    case Shape::InfinityOnly: return k.is_infinite();
  }
  return false;
}

std::string Spectrum::str() const {
  if (shape_ == Shape::InfinityOnly) return "{ℵ0}";
  std::string out = shape_ == Shape::CoFinite ? "co{" : "{";
  bool first = true;
  for (auto n : set_) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(n);
  }
  return out + "}";
}

IntervalPiece IntervalPiece::closed(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 1 || hi < lo) throw Error("interval piece: need 1 <= lo <= hi");
  return IntervalPiece{lo, hi};
}

IntervalPiece IntervalPiece::tail(std::uint64_t lo) {
  if (lo < 1) throw Error("interval piece: need lo >= 1");
  return IntervalPiece{lo, std::nullopt};
}

Spectrum normalize(const std::vector<IntervalPiece>& pieces) {
  std::optional<std::uint64_t> tail;
  for (const auto& p : pieces)
    if (!p.hi) tail = tail ? std::min(*tail, p.lo) : p.lo;
  std::set<std::uint64_t> covered;
  for (const auto& p : pieces) {
    if (!p.hi) continue;
    std::uint64_t hi = tail ? std::min(*p.hi, *tail - 1) : *p.hi;
    for (std::uint64_t n = p.lo; n <= hi; ++n) covered.insert(n);
  }
  if (!tail) return Spectrum::finite(std::move(covered));
  std::set<std::uint64_t> excluded;
  for (std::uint64_t n = 1; n < *tail; ++n)
    if (!covered.count(n)) excluded.insert(n);
  return Spectrum::cofinite(std::move(excluded));
}

Spectrum spectrum_union(const Spectrum& a, const Spectrum& b) {
  using S = Spectrum::Shape;
  if (a.shape() == S::InfinityOnly || b.shape() == S::InfinityOnly) {
    const Spectrum& other = a.shape() == S::InfinityOnly ? b : a;
    if (other.shape() != S::Finite) return other;
    if (other.is_empty()) return Spectrum::infinity_only();
    throw Error("spectrum union of {ℵ0} with a nonempty finite set is not representable");
  }
  if (a.shape() == S::Finite && b.shape() == S::Finite) {
    auto s = a.set();
    s.insert(b.set().begin(), b.set().end());
    return Spectrum::finite(std::move(s));
  }
  if (a.shape() == S::CoFinite && b.shape() == S::CoFinite) {
    std::set<std::uint64_t> s;
    std::set_intersection(a.set().begin(), a.set().end(), b.set().begin(), b.set().end(),
                          std::inserter(s, s.end()));
    return Spectrum::cofinite(std::move(s));
  }
  const Spectrum& co = a.shape() == S::CoFinite ? a : b;
  const Spectrum& fin = a.shape() == S::CoFinite ? b : a;
  std::set<std::uint64_t> s;
  std::set_difference(co.set().begin(), co.set().end(), fin.set().begin(), fin.set().end(),
                      std::inserter(s, s.end()));
  return Spectrum::cofinite(std::move(s));
}

std::set<std::uint64_t> finite_part(const Spectrum& s, std::uint64_t max) {
  std::set<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= max; ++n)
    if (s.contains(Card(n))) out.insert(n);
  return out;
}

bool intersect_empty(const Spectrum& a, const Spectrum& b) {
  using S = Spectrum::Shape;
  if (a.shape() != S::Finite && b.shape() != S::Finite) return false;  // both contain ℵ0
  const Spectrum& fin = a.shape() == S::Finite ? a : b;
  const Spectrum& other = a.shape() == S::Finite ? b : a;
  return std::none_of(fin.set().begin(), fin.set().end(),
                      [&](std::uint64_t n) { return other.contains(Card(n)); });
}

std::uint64_t tail_start(const Spectrum& cofinite) {
  if (cofinite.shape() != Spectrum::Shape::CoFinite) throw Error("tail_start: spectrum is not cofinite");
  return cofinite.set().empty() ? 1 : *cofinite.set().rbegin() + 1;
}

bool intersect_empty_vs_cfs(const Spectrum& a, const std::function<bool(std::uint64_t)>& probe,
                            const std::function<bool(std::uint64_t)>& inf_tail) {
  switch (a.shape()) {
    case Spectrum::Shape::Finite:
      return std::none_of(a.set().begin(), a.set().end(), probe);
    case Spectrum::Shape::CoFinite: {
      if (!inf_tail) throw CapabilityError("intersect_empty_vs_cfs: a cofinite spectrum needs the tail test");
      std::uint64_t k = tail_start(a);
      for (std::uint64_t n = 1; n < k; ++n)
        if (!a.set().count(n) && probe(n)) return false;
      return !inf_tail(k);
    }
    case Spectrum::Shape::InfinityOnly:
      throw CapabilityError("intersect_empty_vs_cfs: {ℵ0} is not a gentle spectrum");
  }
  return false;
}

}  // namespace tcomb
