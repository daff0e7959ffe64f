#include "tcomb/params.hpp"

#include <fstream>
#include <sstream>

#include "tcomb/errors.hpp"

namespace tcomb {

BitTable::BitTable(std::string name, std::vector<int> bits) : name_(std::move(name)), bits_(std::move(bits)) {}

int BitTable::at(std::size_t n) const {
  if (n < 1 || n > bits_.size())
    throw RangeError(name_ + "(" + std::to_string(n) + ") is outside the stored prefix of length " +
                     std::to_string(bits_.size()));
  return bits_[n - 1];
}

std::size_t BitTable::ones(std::size_t n) const {
  if (n > bits_.size())
    throw RangeError(name_ + "1(" + std::to_string(n) + ") is outside the stored prefix of length " +
                     std::to_string(bits_.size()));
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(bits_[i]);
  return c;
}

void BitTable::validate_balanced() const {
  if (bits_.empty()) throw TableError(name_ + ": empty table");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] != 0 && bits_[i] != 1)
      throw TableError(name_ + ": value at position " + std::to_string(i + 1) + " is " + std::to_string(bits_[i]) +
                       "; entries must be 0 or 1");
  if (bits_[0] != 1) throw TableError(name_ + "(1) must be 1, got " + std::to_string(bits_[0]));
  for (std::size_t p = 2, k = 1; p <= bits_.size(); p *= 2, ++k) {
    std::size_t got = ones(p);
    if (got != p / 2)
      throw TableError(name_ + ": balance violated at 2^" + std::to_string(k) + " = " + std::to_string(p) + ": " +
                       name_ + "1(" + std::to_string(p) + ") = " + std::to_string(got) + ", expected " +
                       std::to_string(p / 2));
  }
}

FTable::FTable(std::vector<int> bits) : BitTable("f", std::move(bits)) { validate_balanced(); }

FTable FTable::standard() { return FTable({1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1}); }

GTable::GTable(std::vector<int> bits) : BitTable("g", std::move(bits)) {
  validate_balanced();
  static const int seeds[] = {1, 0, 1, 0};
  for (std::size_t n = 1; n <= 4 && n <= bits_.size(); ++n)
    if (bits_[n - 1] != seeds[n - 1])
      throw TableError("g: seed violated: g(" + std::to_string(n) + ") must be " + std::to_string(seeds[n - 1]) +
                       ", got " + std::to_string(bits_[n - 1]));
  for (std::size_t n = 2; 2 * n + 2 <= bits_.size(); ++n)
    if (bits_[2 * n] != bits_[2 * n + 1])
      throw TableError("g: pairing violated: g(" + std::to_string(2 * n + 1) + ")=" + std::to_string(bits_[2 * n]) +
                       " but g(" + std::to_string(2 * n + 2) + ")=" + std::to_string(bits_[2 * n + 1]));
}

GTable GTable::from_f(const FTable& f, std::size_t length) {
  if (length < 4 || length % 2 != 0) throw TableError("g: length must be even and at least 4");
  std::vector<int> bits{1, 0, 1, 0};
  for (std::size_t n = 2; 2 * n + 2 <= length; ++n) {
    int b = f.at(n + 1);
    bits.push_back(b);
    bits.push_back(b);
  }
  return GTable(std::move(bits));
}

GTable GTable::standard() { return from_f(FTable::standard(), 12); }

FRelation::FRelation(std::map<std::uint64_t, Card> table) : table_(std::move(table)) {
  for (const auto& [m, v] : table_) {
    if (m < 1) throw TableError("F: row index must be positive");
    if (v.is_finite() && v.value() < 1)
      throw TableError("F: row " + std::to_string(m) + " has value 0; values must be positive or inf");
  }
}

FRelation::FRelation(std::function<bool(std::uint64_t, std::uint64_t)> geq) : geq_(std::move(geq)) {}

FRelation FRelation::standard() {
  const Card inf = Card::aleph0();
  return FRelation(std::map<std::uint64_t, Card>{{1, inf},
                                                 {2, Card(3)},
                                                 {3, inf},
                                                 {4, Card(2)},
                                                 {5, Card(2)},
                                                 {6, inf},
                                                 {7, Card(5)},
                                                 {8, Card(1)},
                                                 {9, inf},
                                                 {10, Card(4)}});
}

bool FRelation::geq(std::uint64_t m, std::uint64_t n) const {
  if (n <= 1) return true;
  if (geq_) return geq_(m, n);
  Card v = value(m);
  return v.is_infinite() || v.value() >= n;
}

Card FRelation::value(std::uint64_t m) const {
  auto it = table_.find(m);
  if (it == table_.end()) throw RangeError("F(" + std::to_string(m) + ") has no explicit row");
  return it->second;
}

HTable::HTable(std::vector<int> bits) : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] != 0 && bits_[i] != 1)
      throw TableError("h: value at position " + std::to_string(i + 1) + " is " + std::to_string(bits_[i]) +
                       "; entries must be 0 or 1");
}

HTable HTable::standard() { return HTable({0, 1, 0, 1, 1, 0}); }

int HTable::at(std::size_t n) const {
  if (n < 1) throw RangeError("h: index must be positive");
  return n <= bits_.size() ? bits_[n - 1] : 0;
}

namespace {

std::vector<int> parse_bits(const std::string& key, std::istringstream& in, std::size_t line) {
  std::vector<int> bits;
  std::string tok;
  while (in >> tok) {
    if (tok != "0" && tok != "1")
      throw TableError(key + ": line " + std::to_string(line) + ": expected 0 or 1, got '" + tok + "'");
    bits.push_back(tok == "1" ? 1 : 0);
  }
  return bits;
}

std::map<std::uint64_t, Card> parse_rows(std::istringstream& in, std::size_t line) {
  std::map<std::uint64_t, Card> rows;
  std::string tok;
  auto bad = [&](const std::string& why) {
    return TableError("F: line " + std::to_string(line) + ": " + why + " in '" + tok + "'");
  };
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw bad("expected m=value");
    std::string lhs = tok.substr(0, eq), rhs = tok.substr(eq + 1);
    std::uint64_t m;
    try {
      std::size_t used = 0;
      m = std::stoull(lhs, &used);
      if (used != lhs.size()) throw bad("malformed row index");
    } catch (const std::logic_error&) {
      throw bad("malformed row index");
    }
    Card v;
    if (rhs == "inf" || rhs == "ℵ0") {
      v = Card::aleph0();
    } else {
      try {
        std::size_t used = 0;
        v = Card(std::stoull(rhs, &used));
        if (used != rhs.size()) throw bad("malformed value");
      } catch (const std::logic_error&) {
        throw bad("malformed value");
      }
    }
    if (!rows.emplace(m, v).second) throw bad("duplicate row");
  }
  return rows;
}

}  // namespace

TheoryParams parse_params(std::string_view text) {
  TheoryParams p;
  std::istringstream all{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(all, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto colon = raw.find(':');
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (colon == std::string::npos) throw TableError("params: line " + std::to_string(line) + ": missing ':'");
    std::string key = raw.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    std::istringstream in(raw.substr(colon + 1));
    if (key == "f")
      p.f = FTable(parse_bits(key, in, line));
    else if (key == "g")
      p.g = GTable(parse_bits(key, in, line));
    else if (key == "h")
      p.h = HTable(parse_bits(key, in, line));
    else if (key == "F")
      p.F = FRelation(parse_rows(in, line));
    else
      throw TableError("params: line " + std::to_string(line) + ": unknown table '" + key + "'");
  }
  return p;
}

TheoryParams load_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read parameter file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_params(buf.str());
}

}  // namespace tcomb
