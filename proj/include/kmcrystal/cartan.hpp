#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "kmcrystal/error.hpp"

namespace boost {

// Under C++20 rewritten comparisons, rational<int64_t> == integer resolves
// back to boost's own reversed template and recurses. Exact-match overloads win.
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }

}  // namespace boost

namespace kmcrystal {

using Rational = boost::rational<std::int64_t>;
using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<int>>;

enum class CartanKind { Finite, Affine, Indefinite };

std::string to_string(CartanKind kind);
std::string to_string(const Rational& q);

/// Validated generalized Cartan matrix, a_ij = <h_i, alpha_j>.
///
/// Immutable once built by validate_gcm(). For affine kinds the realization
/// carries one extra coordinate <d, .>, with <d, alpha_k> = 1 for the
/// distinguished node k and 0 otherwise.
struct CartanData {
  int index_count = 0;
  IntMatrix matrix;
  std::vector<int> symmetrizer;
  CartanKind kind = CartanKind::Indefinite;
  std::vector<int> dual_marks;       ///< left null vector (affine only)
  std::vector<int> marks;            ///< right null vector, delta = sum marks_i alpha_i (affine only)
  std::optional<int> affine_node;    ///< node whose simple root has delta-coordinate 1
  std::string name;                  ///< "A2", "A1~", or "custom"
  int label_base = 1;                ///< index printed for node 0 (1 finite, 0 affine)

  int rank() const noexcept { return index_count; }
  bool is_finite() const noexcept { return kind == CartanKind::Finite; }
  bool is_affine() const noexcept { return kind == CartanKind::Affine; }
  int label(int i) const noexcept { return i + label_base; }
  bool operator==(const CartanData&) const = default;
};

/// Element of the weight lattice (or its rational span): coefficients over
/// the fundamental weights plus the delta coordinate.
struct WeightVector {
  std::vector<Rational> lambda;
  Rational delta{0};

  WeightVector() = default;
  explicit WeightVector(int rank) : lambda(static_cast<std::size_t>(rank), Rational{0}) {}
  WeightVector(std::vector<Rational> coords, Rational d) : lambda(std::move(coords)), delta(d) {}

  static WeightVector from_ints(const std::vector<std::int64_t>& coords, std::int64_t d = 0);

  int rank() const noexcept { return static_cast<int>(lambda.size()); }
  bool is_integral() const;
  bool is_zero() const;

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);
  WeightVector& operator*=(const Rational& s);

  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(const Rational& s, WeightVector a) { return a *= s; }
  friend WeightVector operator-(WeightVector a) { return a *= Rational{-1}; }

  bool operator==(const WeightVector& o) const { return lambda == o.lambda && delta == o.delta; }
  bool operator<(const WeightVector& o) const;

  /// "(1,-1)" or "(1,-1;2)" when delta is nonzero.
  std::string str() const;
};

/// Element of the root lattice in simple-root coordinates.
struct RootVector {
  std::vector<std::int64_t> coords;

  RootVector() = default;
  explicit RootVector(int rank) : coords(static_cast<std::size_t>(rank), 0) {}
  explicit RootVector(std::vector<std::int64_t> c) : coords(std::move(c)) {}

  std::int64_t height() const;
  bool is_nonnegative() const;
  bool operator==(const RootVector&) const = default;
  auto operator<=>(const RootVector&) const = default;
};

CartanData validate_gcm(const IntMatrix& matrix);

/// Built-in types: "A3", "B2", "C3", "D4", "E6", "F4", "G2" and affine
/// "A1~", "A2~", "C2~", "D4~".
CartanData cartan_from_name(const std::string& name);

/// Named type or a JSON integer matrix such as "[[2,-1],[-1,2]]".
CartanData parse_cartan(const std::string& text);

WeightVector fundamental_weight(const CartanData& cd, int i);
WeightVector simple_root(const CartanData& cd, int i);
WeightVector null_root(const CartanData& cd);
WeightVector rho(const CartanData& cd);

/// Integer vector view of a lattice weight, rank+1 entries (delta last).
std::vector<std::int64_t> weight_to_ints(const WeightVector& w);
WeightVector weight_from_ints(const std::vector<std::int64_t>& v);

/// Simple root as a rank+1 integer vector, same layout as weight_to_ints().
std::vector<std::int64_t> simple_root_ints(const CartanData& cd, int i);

Rational pairing(const CartanData& cd, int i, const WeightVector& w);
std::int64_t integral_pairing(const CartanData& cd, int i, const WeightVector& w);

RootVector root_coordinates(const CartanData& cd, const WeightVector& v);
WeightVector root_to_weight(const CartanData& cd, const RootVector& r);

Rational level(const CartanData& cd, const WeightVector& w);

bool is_dominant(const CartanData& cd, const WeightVector& w);
bool is_antidominant(const CartanData& cd, const WeightVector& w);

/// xi >= phi in the partial order: xi - phi lies in Q+.
bool weight_geq(const CartanData& cd, const WeightVector& xi, const WeightVector& phi);

WeightVector simple_reflection(const CartanData& cd, int i, const WeightVector& w);

/// Symmetric form with (alpha_i, w) = d_i <h_i, w>, restricted to a root
/// argument.
Rational form_with_root(const CartanData& cd, const RootVector& alpha, const WeightVector& w);

std::vector<RootVector> positive_roots(const CartanData& cd);

BigInt weyl_dimension(const CartanData& cd, const WeightVector& lambda);
BigInt weight_multiplicity(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu);

/// Human-readable form such as "2Λ1+Λ2" (labels follow cd.label_base).
std::string weight_name(const CartanData& cd, const WeightVector& w);

}  // namespace kmcrystal
