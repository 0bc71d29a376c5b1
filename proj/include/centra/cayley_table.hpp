#ifndef CENTRA_CAYLEY_TABLE_HPP
#define CENTRA_CAYLEY_TABLE_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centra/errors.hpp"
#include "centra/permutation.hpp"

namespace centra {

// A finite binary operation on {0..n-1}, stored row-major: cell(x, y) = x*y.
// Quasigroup-ness and the two-sided identity (if any) are detected at
// construction, never assumed.
class CayleyTable {
 public:
  CayleyTable(int order, std::vector<int> cells)
      : order_(order), cells_(std::move(cells)) {
    if (order_ < 1 || order_ > kMaxDegree)
      throw Error("order " + std::to_string(order_) + " outside [1, " +
                  std::to_string(kMaxDegree) + "]");
    if (cells_.size() != static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_))
      throw Error("cell array has " + std::to_string(cells_.size()) +
                  " entries, expected " + std::to_string(order_ * order_));
    for (int v : cells_)
      if (v < 0 || v >= order_)
        throw ElementOutOfRange("cell value " + std::to_string(v) +
                                " not in {0.." + std::to_string(order_ - 1) + "}");
    detect_structure();
  }

  static CayleyTable from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> cells;
    cells.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
      if (row.size() != rows.size())
        throw Error("row length " + std::to_string(row.size()) +
                    " does not match order " + std::to_string(rows.size()));
      cells.insert(cells.end(), row.begin(), row.end());
    }
    return CayleyTable(static_cast<int>(rows.size()), std::move(cells));
  }

  int order() const noexcept { return order_; }

  int cell(int x, int y) const {
    check_element(x);
    check_element(y);
    return cells_[static_cast<std::size_t>(x) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(y)];
  }

  // Unchecked product, for inner loops that already validated their ranges.
  int mul(int x, int y) const noexcept {
    return cells_[static_cast<std::size_t>(x) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(y)];
  }

  bool is_quasigroup() const noexcept { return quasigroup_; }

  std::optional<int> identity() const noexcept { return identity_; }

  bool is_loop() const noexcept { return quasigroup_ && identity_.has_value(); }

  // Identity element, or NotALoop.
  int require_loop() const {
    if (!quasigroup_) throw NotALoop("table is not a quasigroup");
    if (!identity_) throw NotALoop("quasigroup has no two-sided identity");
    return *identity_;
  }

  void require_quasigroup() const {
    if (!quasigroup_) throw NotAQuasigroup("table is not a quasigroup");
  }

  // y -> x*y, i.e. row x read as an image array.
  Permutation left_translation(int x) const {
    require_quasigroup();
    check_element(x);
    std::vector<int> images(cells_.begin() + static_cast<std::ptrdiff_t>(x) * order_,
                            cells_.begin() + static_cast<std::ptrdiff_t>(x + 1) * order_);
    return Permutation(std::move(images));
  }

  // y -> y*x, i.e. column x read as an image array.
  Permutation right_translation(int x) const {
    require_quasigroup();
    check_element(x);
    std::vector<int> images(static_cast<std::size_t>(order_));
    for (int y = 0; y < order_; ++y)
      images[static_cast<std::size_t>(y)] = mul(y, x);
    return Permutation(std::move(images));
  }

  // Transpose; the opposite operation x*y = y.x.
  CayleyTable opposite() const {
    std::vector<int> cells(cells_.size());
    for (int x = 0; x < order_; ++x)
      for (int y = 0; y < order_; ++y)
        cells[static_cast<std::size_t>(y) * static_cast<std::size_t>(order_) +
              static_cast<std::size_t>(x)] = mul(x, y);
    return CayleyTable(order_, std::move(cells));
  }

  // Table file format: '#' comment lines and blank lines anywhere, then the
  // order n on its own line, then n rows of n whitespace-separated integers.
  // A first line holding more than one integer is taken as row 0 of a
  // headerless table, with the order inferred from its length.
  static CayleyTable parse(std::istream& in) {
    std::string line;
    int lineno = 0;
    int order = -1;
    std::vector<int> cells;
    int rows_seen = 0;
    auto read_row = [&](std::istringstream& fields) {
      if (rows_seen == order)
        throw MalformedInput("unexpected extra row after " + std::to_string(order) +
                                 " table rows",
                             lineno);
      std::string tok;
      int in_row = 0;
      while (fields >> tok) {
        int v = parse_int(tok, lineno);
        if (v >= order)
          throw MalformedInput("value " + std::to_string(v) + " >= order " +
                                   std::to_string(order),
                               lineno);
        if (v < 0)
          throw MalformedInput("negative value " + std::to_string(v), lineno);
        cells.push_back(v);
        ++in_row;
      }
      if (in_row != order)
        throw MalformedInput("row has " + std::to_string(in_row) + " values, expected " +
                                 std::to_string(order),
                             lineno);
      ++rows_seen;
    };
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream fields(line);
      if (order < 0) {
        std::vector<std::string> toks;
        std::string tok;
        while (fields >> tok) toks.push_back(tok);
        if (toks.size() == 1) {
          order = parse_int(toks[0], lineno);
        } else {
          order = static_cast<int>(toks.size());
        }
        if (order < 1 || order > kMaxDegree)
          throw MalformedInput("order " + std::to_string(order) + " outside [1, " +
                                   std::to_string(kMaxDegree) + "]",
                               lineno);
        cells.reserve(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
        if (toks.size() > 1) {
          std::istringstream row0(line);
          read_row(row0);
        }
        continue;
      }
      read_row(fields);
    }
    if (order < 0) throw MalformedInput("empty input, expected a table");
    if (rows_seen != order)
      throw MalformedInput("table has " + std::to_string(rows_seen) +
                           " rows, expected " + std::to_string(order));
    return CayleyTable(order, std::move(cells));
  }

  static CayleyTable parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
  }

  // Canonical serialization: order line, then the n rows. parse() inverts it.
  std::string serialize() const {
    std::string out = std::to_string(order_);
    out += '\n';
    for (int x = 0; x < order_; ++x) {
      for (int y = 0; y < order_; ++y) {
        if (y) out += ' ';
        out += std::to_string(mul(x, y));
      }
      out += '\n';
    }
    return out;
  }

  // FNV-1a over the canonical serialization, as 16 hex digits.
  std::string digest() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : serialize()) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
      out[static_cast<std::size_t>(i)] = hex[h & 0xf];
      h >>= 4;
    }
    return out;
  }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  void check_element(int x) const {
    if (x < 0 || x >= order_)
      throw ElementOutOfRange("element " + std::to_string(x) + " not in {0.." +
                              std::to_string(order_ - 1) + "}");
  }

  static int parse_int(const std::string& tok, int lineno) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw MalformedInput("non-integer token \"" + tok + "\"", lineno);
    }
  }

  void detect_structure() {
    // Latin-square check: every row and column a permutation of {0..n-1}.
    quasigroup_ = true;
    std::vector<char> seen(static_cast<std::size_t>(order_));
    for (int x = 0; x < order_ && quasigroup_; ++x) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int y = 0; y < order_; ++y) {
        if (seen[static_cast<std::size_t>(mul(x, y))]) {
          quasigroup_ = false;
          break;
        }
        seen[static_cast<std::size_t>(mul(x, y))] = 1;
      }
    }
    for (int y = 0; y < order_ && quasigroup_; ++y) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int x = 0; x < order_; ++x) {
        if (seen[static_cast<std::size_t>(mul(x, y))]) {
          quasigroup_ = false;
          break;
        }
        seen[static_cast<std::size_t>(mul(x, y))] = 1;
      }
    }
    // A two-sided identity is unique whenever it exists, quasigroup or not.
    identity_.reset();
    for (int e = 0; e < order_; ++e) {
      bool ok = true;
      for (int x = 0; x < order_ && ok; ++x)
        ok = mul(e, x) == x && mul(x, e) == x;
      if (ok) {
        identity_ = e;
        break;
      }
    }
  }

  int order_;
  std::vector<int> cells_;
  bool quasigroup_ = false;
  std::optional<int> identity_;
};

inline bool is_quasigroup(const CayleyTable& t) { return t.is_quasigroup(); }

inline std::optional<int> find_identity(const CayleyTable& t) {
  t.require_quasigroup();
  return t.identity();
}

inline Permutation left_translation(const CayleyTable& t, int x) {
  return t.left_translation(x);
}

inline Permutation right_translation(const CayleyTable& t, int x) {
  return t.right_translation(x);
}

inline CayleyTable parse_table(std::istream& in) { return CayleyTable::parse(in); }
inline CayleyTable parse_table(std::string_view text) { return CayleyTable::parse(text); }

}  // namespace centra

#endif  // CENTRA_CAYLEY_TABLE_HPP
