#ifndef CENTRA_PERMUTATION_HPP
#define CENTRA_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centra/errors.hpp"

namespace centra {

// Everything in this library lives on point sets {0..n-1} with n <= kMaxDegree.
inline constexpr int kMaxDegree = 64;

// A bijection of {0..n-1}. Points act on the right: the image of x under s
// is s[x], and compose(a, b) maps x to b[a[x]] ("x, then a, then b"), so a
// product of translations reads left to right.
class Permutation {
 public:
  // Identity on `degree` points.
  explicit Permutation(int degree) : images_(check_degree(degree)) {
    for (int i = 0; i < degree; ++i) images_[static_cast<std::size_t>(i)] = i;
  }

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    check_degree(static_cast<int>(images_.size()));
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
        throw Error("image array is not a bijection of {0.." +
                    std::to_string(degree() - 1) + "}");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static Permutation identity(int degree) { return Permutation(degree); }

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  int operator[](int point) const {
    if (point < 0 || point >= degree())
      throw ElementOutOfRange("point " + std::to_string(point) +
                              " not in {0.." + std::to_string(degree() - 1) + "}");
    return images_[static_cast<std::size_t>(point)];
  }

  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i)
      inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  static int check_degree(int degree) {
    if (degree < 1 || degree > kMaxDegree)
      throw Error("degree " + std::to_string(degree) + " outside [1, " +
                  std::to_string(kMaxDegree) + "]");
    return degree;
  }

  std::vector<int> images_;
};

// x(ab) = (xa)b.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw OrderMismatch("cannot compose permutations of degree " +
                        std::to_string(a.degree()) + " and " +
                        std::to_string(b.degree()));
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int i = 0; i < a.degree(); ++i)
    images[static_cast<std::size_t>(i)] = b[a[i]];
  return Permutation(std::move(images));
}

// k-fold product; k may be negative or zero (zero yields the identity).
inline Permutation power(const Permutation& a, int k) {
  Permutation base = k < 0 ? a.inverse() : a;
  Permutation result = Permutation::identity(a.degree());
  for (int i = 0, reps = k < 0 ? -k : k; i < reps; ++i)
    result = compose(result, base);
  return result;
}

// Cycle notation. Input accepts spaces and/or commas between points and any
// number of cycles; fixed points may be omitted. "()" is the identity.
inline Permutation parse_cycles(std::string_view text, int degree) {
  Permutation result = Permutation::identity(degree);
  std::vector<int> images(result.images());
  std::vector<char> seen(static_cast<std::size_t>(degree), 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ','))
      ++i;
  };
  skip_ws();
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw MalformedCycle("expected '(' in cycle notation near \"" +
                           std::string(text.substr(i)) + "\"");
    ++i;
    any_cycle = true;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (text[i] < '0' || text[i] > '9')
        throw MalformedCycle("unexpected character '" + std::string(1, text[i]) +
                             "' in cycle");
      int value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + (text[i] - '0');
        if (value > kMaxDegree) throw MalformedCycle("point value too large");
        ++i;
      }
      if (value >= degree)
        throw MalformedCycle("point " + std::to_string(value) +
                             " not in {0.." + std::to_string(degree - 1) + "}");
      if (seen[static_cast<std::size_t>(value)])
        throw MalformedCycle("point " + std::to_string(value) + " repeated");
      seen[static_cast<std::size_t>(value)] = 1;
      cycle.push_back(value);
      skip_ws();
    }
    if (i >= text.size()) throw MalformedCycle("unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  if (!any_cycle) throw MalformedCycle("empty cycle expression");
  return Permutation(std::move(images));
}

// Canonical form: cycles ordered by smallest moved point, each cycle starting
// at its smallest point, fixed points omitted. The identity prints as "()".
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> done(static_cast<std::size_t>(p.degree()), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (done[static_cast<std::size_t>(start)] || p[start] == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(x);
      done[static_cast<std::size_t>(x)] = 1;
      x = p[x];
      first = false;
    } while (x != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

// Permutation file format: first line "n=<int>", then one permutation per
// line in cycle notation. '#' lines and blank lines are skipped.
inline std::pair<int, std::vector<Permutation>> read_permutation_file(
    std::istream& in) {
  std::string line;
  int degree = -1;
  std::vector<Permutation> perms;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::size_t last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);
    if (degree < 0) {
      if (body.rfind("n=", 0) != 0)
        throw MalformedInput("expected \"n=<int>\" header", lineno);
      try {
        std::size_t used = 0;
        degree = std::stoi(body.substr(2), &used);
        if (used != body.size() - 2) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw MalformedInput("bad integer in \"" + body + "\"", lineno);
      }
      if (degree < 1 || degree > kMaxDegree)
        throw MalformedInput("order " + std::to_string(degree) +
                                 " outside [1, " + std::to_string(kMaxDegree) + "]",
                             lineno);
      continue;
    }
    try {
      perms.push_back(parse_cycles(body, degree));
    } catch (const MalformedCycle& e) {
      throw MalformedInput(e.what(), lineno);
    }
  }
  if (degree < 0) throw MalformedInput("missing \"n=<int>\" header");
  return {degree, std::move(perms)};
}

inline void write_permutation_file(std::ostream& out, int degree,
                                   const std::vector<Permutation>& perms) {
  out << "n=" << degree << "\n";
  for (const Permutation& p : perms) out << format_cycles(p) << "\n";
}

inline std::ostream& operator<<(std::ostream& out, const Permutation& p) {
  return out << format_cycles(p);
}

}  // namespace centra

#endif  // CENTRA_PERMUTATION_HPP
