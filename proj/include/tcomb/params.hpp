#pragma once

// Computable stand-ins for the parameter functions f, g, F and h.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcomb/logic.hpp"

namespace tcomb {

/// Finite prefix of a 0/1 function on N*, 1-based. Lookups past the prefix
/// raise RangeError.
class BitTable {
 public:
  BitTable() = default;
  BitTable(std::string name, std::vector<int> bits);

  const std::string& name() const { return name_; }
  std::size_t length() const { return bits_.size(); }
  const std::vector<int>& bits() const { return bits_; }
  int at(std::size_t n) const;
  /// Number of m in [1, n] mapped to 1.
  std::size_t ones(std::size_t n) const;
  std::size_t zeros(std::size_t n) const { return n - ones(n); }

 protected:
  /// 0/1 entries, value at 1 is 1, half-balance at every power of two.
  void validate_balanced() const;

  std::string name_;
  std::vector<int> bits_;
};

class FTable : public BitTable {
 public:
  FTable() = default;
  /// Validates; throws TableError naming the first violated constraint.
  explicit FTable(std::vector<int> bits);
  static FTable standard();
};

class GTable : public BitTable {
 public:
  GTable() = default;
  explicit GTable(std::vector<int> bits);
  /// g(1..4) = 1,0,1,0 and g(2n+1) = g(2n+2) = f(n+1) for n >= 2.
  static GTable from_f(const FTable& f, std::size_t length);
  static GTable standard();
};

/// F : N* -> N* ∪ {ℵ0}, accessed through geq(m, n) meaning F(m) >= n.
class FRelation {
 public:
  FRelation() = default;
  explicit FRelation(std::map<std::uint64_t, Card> table);
  /// Only the decidable relation; aleph-zero probes are unavailable.
  explicit FRelation(std::function<bool(std::uint64_t, std::uint64_t)> geq);
  static FRelation standard();

  bool geq(std::uint64_t m, std::uint64_t n) const;
  bool has_table() const { return !table_.empty(); }
  const std::map<std::uint64_t, Card>& table() const { return table_; }
  /// Requires an explicit row for m.
  Card value(std::uint64_t m) const;
  bool is_infinite(std::uint64_t m) const { return value(m).is_infinite(); }

 private:
  std::map<std::uint64_t, Card> table_;
  std::function<bool(std::uint64_t, std::uint64_t)> geq_;
};

/// h : N* -> {0,1}; zero beyond the stored prefix.
class HTable {
 public:
  HTable() = default;
  explicit HTable(std::vector<int> bits);
  static HTable standard();

  int at(std::size_t n) const;
  const std::vector<int>& bits() const { return bits_; }

 private:
  std::vector<int> bits_;
};

struct TheoryParams {
  FTable f = FTable::standard();
  GTable g = GTable::standard();
  FRelation F = FRelation::standard();
  HTable h = HTable::standard();

  static TheoryParams standard() { return {}; }
};

/// Line format: `f: 1 0 0 1 ...`, `g: ...`, `F: 1=inf 2=3 ...`, `h: 0 1 ...`.
/// Blank lines and `#` comments are ignored; tables not mentioned keep
/// their standard values.
TheoryParams parse_params(std::string_view text);
TheoryParams load_params_file(const std::string& path);

}  // namespace tcomb
