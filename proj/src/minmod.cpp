#include "tcomb/minmod.hpp"

#include "tcomb/errors.hpp"

namespace tcomb {

std::optional<MinmodResult> extract_minmod(const TheoryHandle& h, const Cube& phi, std::size_t var_limit) {
  if (!h.witness || !h.strong_witness) throw CapabilityError(h.name + ": minmod needs a strong witness");
  check_symbols(phi, h.sig);
  Cube wit = h.witness(phi);
  auto vars = variables(wit);
  if (vars.empty()) throw CapabilityError(h.name + ": witness mentions no variables");
  if (vars.size() > var_limit)
    throw LimitError("minmod: " + std::to_string(vars.size()) + " witness variables exceed the limit of " +
                     std::to_string(var_limit));

  for (std::size_t b = 1; b <= vars.size(); ++b) {
    std::optional<MinmodResult> hit;
    for_each_partition(
        vars.size(),
        [&](const std::vector<unsigned>& rgs) {
          Arrangement arr(vars, rgs);
          if (arr.block_count() != b) return true;
          if (!is_sat(h.decide(wit.conjoined(arrangement_to_cube(arr))))) return true;
          hit = MinmodResult{Card(b), arr};
          return false;
        },
        b);
    if (hit) return hit;
  }
  return std::nullopt;
}

std::optional<MinmodResult> minmod(const TheoryHandle& h, const Cube& phi) {
  if (h.minmod) {
    check_symbols(phi, h.sig);
    if (!is_sat(h.decide(phi))) return std::nullopt;
    return MinmodResult{h.minmod(phi), std::nullopt};
  }
  return extract_minmod(h, phi);
}

}  // namespace tcomb
