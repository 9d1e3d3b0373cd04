#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace satake {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer point of a character or cocharacter lattice, in a fixed basis.
/// The tag keeps weights and coweights from being mixed up by accident;
/// crossing sides (e.g. for the dual datum) goes through explicit helpers.
template <class Tag>
struct LatticePoint {
  std::vector<Int> coords;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<Int> c) : coords(std::move(c)) {}
  LatticePoint(std::initializer_list<Int> c) : coords(c) {}

  static LatticePoint zero(std::size_t n) { return LatticePoint(std::vector<Int>(n, 0)); }

  std::size_t size() const { return coords.size(); }
  Int operator[](std::size_t i) const { return coords[i]; }
  Int& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const {
    for (Int c : coords)
      if (c != 0) return false;
    return true;
  }

  LatticePoint& operator+=(const LatticePoint& o) {
    check_same_length(o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  LatticePoint& operator-=(const LatticePoint& o) {
    check_same_length(o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
  friend LatticePoint operator-(LatticePoint a) {
    for (Int& c : a.coords) c = -c;
    return a;
  }
  friend LatticePoint operator*(Int s, LatticePoint a) {
    for (Int& c : a.coords) c *= s;
    return a;
  }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint& a, const LatticePoint& b) { return a.coords <=> b.coords; }

  friend std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
    os << '(';
    for (std::size_t i = 0; i < p.coords.size(); ++i) os << (i ? "," : "") << p.coords[i];
    return os << ')';
  }

 private:
  void check_same_length(const LatticePoint& o) const {
    if (o.coords.size() != coords.size()) throw std::invalid_argument("lattice point length mismatch");
  }
};

struct WeightTag {};
struct CoweightTag {};
using Weight = LatticePoint<WeightTag>;
using Coweight = LatticePoint<CoweightTag>;

/// Same coordinates, other side of the pairing (used when a datum is dualized).
inline Weight as_weight(const Coweight& c) { return Weight(c.coords); }
inline Coweight as_coweight(const Weight& w) { return Coweight(w.coords); }

using IntMatrix = std::vector<std::vector<Int>>;
using BigMatrix = std::vector<std::vector<BigInt>>;

std::string to_string(const Weight& w);
std::string to_string(const Coweight& w);

/// A documented precondition failed (non-dominant input, wrong lengths...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed; indicates a bug or corrupted data.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace satake
