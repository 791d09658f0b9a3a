#include "kmcrystal/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"

namespace kmcrystal {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct Elimination {
  RationalMatrix reduced;      // reduced row echelon form
  std::vector<int> pivot_cols;
};

Elimination row_reduce(RationalMatrix m) {
  Elimination out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = Rational{1} / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][c] == 0) continue;
      const Rational f = m[k][c];
      for (std::size_t j = 0; j < cols; ++j) m[k][j] -= f * m[r][j];
    }
    out.pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

// Basis of {x : M x = 0}.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  Elimination e = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational{0});
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      v[static_cast<std::size_t>(e.pivot_cols[r])] = -e.reduced[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Scales a rational vector to coprime integers with a positive first nonzero
// entry.
std::vector<std::int64_t> primitive_integer_vector(const std::vector<Rational>& v) {
  std::int64_t l = 1;
  for (const auto& x : v) l = std::lcm(l, x.denominator());
  std::vector<std::int64_t> out;
  std::int64_t g = 0;
  for (const auto& x : v) {
    out.push_back(x.numerator() * (l / x.denominator()));
    g = std::gcd(g, out.back());
  }
  if (g == 0) return out;
  for (auto& x : out) x /= g;
  auto first = std::find_if(out.begin(), out.end(), [](std::int64_t x) { return x != 0; });
  if (first != out.end() && *first < 0) {
    for (auto& x : out) x = -x;
  }
  return out;
}

RationalMatrix to_rational(const IntMatrix& a) {
  RationalMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int x : a[i]) m[i].emplace_back(x);
  }
  return m;
}

RationalMatrix transpose(const RationalMatrix& m) {
  if (m.empty()) return m;
  RationalMatrix t(m[0].size(), std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

std::vector<int> compute_symmetrizer(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> d(static_cast<std::size_t>(n), Rational{0});
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  int components = 0;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    d[start] = 1;
    component[start] = components;
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty()) {
      const int i = todo.front();
      todo.pop();
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        // d_i a_ij = d_j a_ji
        const Rational dj = d[i] * Rational(a[i][j], a[j][i]);
        if (component[j] < 0) {
          component[j] = components;
          d[j] = dj;
          todo.push(j);
        } else if (d[j] != dj) {
          throw Error(ErrorKind::NotSymmetrizable, "no diagonal D makes DA symmetric");
        }
      }
    }
    ++components;
  }
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < components; ++c) {
    std::vector<Rational> part;
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      if (component[i] == c) {
        part.push_back(d[i]);
        idx.push_back(i);
      }
    }
    auto ints = primitive_integer_vector(part);
    for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = static_cast<int>(ints[k]);
  }
  return out;
}

bool positive_definite(const RationalMatrix& s) {
  // Gaussian elimination without pivoting: all pivots positive iff all
  // leading principal minors positive.
  RationalMatrix m = s;
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      const Rational f = m[r][k] / m[k][k];
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  return true;
}

IntMatrix zeros(int n) { return IntMatrix(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0)); }

IntMatrix chain(int n) {
  IntMatrix a = zeros(n);
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

IntMatrix finite_matrix(char letter, int n) {
  IntMatrix a;
  switch (letter) {
    case 'A':
      if (n < 1) break;
      return chain(n);
    case 'B':
      if (n < 2) break;
      a = chain(n);
      a[n - 1][n - 2] = -2;
      return a;
    case 'C':
      if (n < 2) break;
      a = chain(n);
      a[n - 2][n - 1] = -2;
      return a;
    case 'D':
      if (n < 4) break;
      a = chain(n);
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      return a;
    case 'E':
      if (n < 6 || n > 8) break;
      // Bourbaki labels: 1-3-4-5-..., 2 attached to 4.
      a = zeros(n);
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      {
        auto link = [&a](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
        link(1, 3);
        link(3, 4);
        link(2, 4);
        for (int k = 4; k < n; ++k) link(k, k + 1);
      }
      return a;
    case 'F':
      if (n != 4) break;
      return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    case 'G':
      if (n != 2) break;
      return {{2, -1}, {-3, 2}};
    default:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, std::string("unknown Cartan type ") + letter + std::to_string(n));
}

IntMatrix affine_matrix(char letter, int n) {
  IntMatrix a;
  switch (letter) {
    case 'A':
      if (n < 1) break;
      if (n == 1) return {{2, -2}, {-2, 2}};
      a = zeros(n + 1);
      for (int i = 0; i <= n; ++i) {
        a[i][i] = 2;
        const int j = (i + 1) % (n + 1);
        a[i][j] = a[j][i] = -1;
      }
      return a;
    case 'C':
      if (n < 2) break;
      a = chain(n + 1);
      a[1][0] = -2;
      a[n - 1][n] = -2;
      return a;
    case 'D':
      if (n < 4) break;
      a = zeros(n + 1);
      for (int i = 0; i <= n; ++i) a[i][i] = 2;
      {
        auto link = [&a](int i, int j) { a[i][j] = a[j][i] = -1; };
        link(0, 2);
        for (int k = 1; k + 1 <= n - 2; ++k) link(k, k + 1);
        link(n - 2, n - 1);
        link(n - 2, n);
      }
      return a;
    default:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, std::string("unknown affine type ") + letter + std::to_string(n) + "~");
}

Rational rational_sum_product(const std::vector<std::int64_t>& c, const std::vector<int>& d,
                              const std::vector<Rational>& w) {
  Rational s{0};
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] != 0) s += Rational(c[j] * d[j]) * w[j];
  }
  return s;
}

BigInt to_big(const Rational& q) {
  if (q.denominator() != 1) throw Error(ErrorKind::InvalidArgument, "expected an integer, got " + to_string(q));
  return BigInt(q.numerator());
}

}  // namespace

std::string to_string(CartanKind kind) {
  switch (kind) {
    case CartanKind::Finite: return "finite";
    case CartanKind::Affine: return "affine";
    case CartanKind::Indefinite: return "indefinite";
  }
  return "indefinite";
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// ---------------------------------------------------------------------------
// WeightVector / RootVector

WeightVector WeightVector::from_ints(const std::vector<std::int64_t>& coords, std::int64_t d) {
  WeightVector w;
  for (auto c : coords) w.lambda.emplace_back(c);
  w.delta = d;
  return w;
}

bool WeightVector::is_integral() const {
  return delta.denominator() == 1 &&
         std::all_of(lambda.begin(), lambda.end(), [](const Rational& q) { return q.denominator() == 1; });
}

bool WeightVector::is_zero() const {
  return delta == 0 && std::all_of(lambda.begin(), lambda.end(), [](const Rational& q) { return q == 0; });
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] += o.lambda[i];
  delta += o.delta;
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] -= o.lambda[i];
  delta -= o.delta;
  return *this;
}

WeightVector& WeightVector::operator*=(const Rational& s) {
  for (auto& x : lambda) x *= s;
  delta *= s;
  return *this;
}

bool WeightVector::operator<(const WeightVector& o) const {
  if (lambda != o.lambda) {
    return std::lexicographical_compare(lambda.begin(), lambda.end(), o.lambda.begin(), o.lambda.end());
  }
  return delta < o.delta;
}

std::string WeightVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) os << ',';
    os << to_string(lambda[i]);
  }
  if (delta != 0) os << ';' << to_string(delta);
  os << ')';
  return os.str();
}

std::int64_t RootVector::height() const { return std::accumulate(coords.begin(), coords.end(), std::int64_t{0}); }

bool RootVector::is_nonnegative() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c >= 0; });
}

// ---------------------------------------------------------------------------
// Validation and named types

CartanData validate_gcm(const IntMatrix& matrix) {
  const int n = static_cast<int>(matrix.size());
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty Cartan matrix");
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InvalidArgument, "Cartan matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    if (matrix[i][i] != 2) throw Error(ErrorKind::DiagonalNotTwo, "a_" + std::to_string(i) + std::to_string(i) + " != 2");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix[i][j] > 0) throw Error(ErrorKind::PositiveOffDiagonal, "positive off-diagonal entry");
      if ((matrix[i][j] == 0) != (matrix[j][i] == 0)) {
        throw Error(ErrorKind::ZeroPatternAsymmetric, "a_ij = 0 but a_ji != 0");
      }
    }
  }

  CartanData cd;
  cd.index_count = n;
  cd.matrix = matrix;
  cd.symmetrizer = compute_symmetrizer(matrix);
  cd.name = "custom";

  RationalMatrix a = to_rational(matrix);
  RationalMatrix s = a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] *= cd.symmetrizer[i];

  if (positive_definite(s)) {
    cd.kind = CartanKind::Finite;
    return cd;
  }
  auto right = null_space(a);
  auto left = null_space(transpose(a));
  if (right.size() == 1 && left.size() == 1) {
    auto r = primitive_integer_vector(right[0]);
    auto l = primitive_integer_vector(left[0]);
    const bool positive = std::all_of(r.begin(), r.end(), [](auto x) { return x > 0; }) &&
                          std::all_of(l.begin(), l.end(), [](auto x) { return x > 0; });
    if (positive) {
      cd.kind = CartanKind::Affine;
      cd.marks.assign(r.begin(), r.end());
      cd.dual_marks.assign(l.begin(), l.end());
      auto it = std::find(cd.marks.begin(), cd.marks.end(), 1);
      cd.affine_node = it == cd.marks.end() ? 0 : static_cast<int>(it - cd.marks.begin());
      cd.label_base = 0;
      return cd;
    }
  }
  cd.kind = CartanKind::Indefinite;
  return cd;
}

CartanData cartan_from_name(const std::string& name) {
  static const std::regex pattern(R"(^([A-Ga-g])(\d+)(~?)$)");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) throw Error(ErrorKind::InvalidArgument, "unknown Cartan type '" + name + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(m[1].str()[0])));
  const int n = std::stoi(m[2].str());
  const bool affine = !m[3].str().empty();
  CartanData cd = validate_gcm(affine ? affine_matrix(letter, n) : finite_matrix(letter, n));
  cd.name = std::string(1, letter) + std::to_string(n) + (affine ? "~" : "");
  if (affine) cd.affine_node = 0;
  return cd;
}

CartanData parse_cartan(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    IntMatrix m;
    try {
      m = nlohmann::json::parse(text).get<IntMatrix>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::InvalidArgument, std::string("malformed Cartan matrix JSON: ") + e.what());
    }
    return validate_gcm(m);
  }
  return cartan_from_name(text);
}

// ---------------------------------------------------------------------------
// Lattice arithmetic

WeightVector fundamental_weight(const CartanData& cd, int i) {
  WeightVector w(cd.rank());
  w.lambda[i] = 1;
  return w;
}

WeightVector simple_root(const CartanData& cd, int i) {
  WeightVector w(cd.rank());
  for (int j = 0; j < cd.rank(); ++j) w.lambda[j] = cd.matrix[j][i];
  if (cd.affine_node && *cd.affine_node == i) w.delta = 1;
  return w;
}

WeightVector null_root(const CartanData& cd) {
  if (!cd.is_affine()) throw Error(ErrorKind::NotAffine, "null root requires an affine type");
  WeightVector w(cd.rank());
  for (int i = 0; i < cd.rank(); ++i) w += Rational(cd.marks[i]) * simple_root(cd, i);
  return w;
}

WeightVector rho(const CartanData& cd) {
  WeightVector w(cd.rank());
  for (auto& x : w.lambda) x = 1;
  return w;
}

std::vector<std::int64_t> weight_to_ints(const WeightVector& w) {
  if (!w.is_integral()) throw Error(ErrorKind::InvalidArgument, "weight " + w.str() + " is not integral");
  std::vector<std::int64_t> out;
  out.reserve(w.lambda.size() + 1);
  for (const auto& q : w.lambda) out.push_back(q.numerator());
  out.push_back(w.delta.numerator());
  return out;
}

WeightVector weight_from_ints(const std::vector<std::int64_t>& v) {
  WeightVector w;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) w.lambda.emplace_back(v[i]);
  w.delta = v.back();
  return w;
}

std::vector<std::int64_t> simple_root_ints(const CartanData& cd, int i) {
  return weight_to_ints(simple_root(cd, i));
}

Rational pairing(const CartanData& cd, int i, const WeightVector& w) {
  if (i < 0 || i >= cd.rank()) throw Error(ErrorKind::InvalidArgument, "index out of range");
  return w.lambda[i];
}

std::int64_t integral_pairing(const CartanData& cd, int i, const WeightVector& w) {
  const Rational p = pairing(cd, i, w);
  if (p.denominator() != 1) throw Error(ErrorKind::InvalidArgument, "weight " + w.str() + " is not integral");
  return p.numerator();
}

RootVector root_coordinates(const CartanData& cd, const WeightVector& v) {
  const int n = cd.rank();
  // Unknowns m_0..m_{n-1}; equations sum_i m_i a_ji = v_j, plus the delta row.
  RationalMatrix sys;
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> row;
    for (int i = 0; i < n; ++i) row.emplace_back(cd.matrix[j][i]);
    row.push_back(v.lambda[j]);
    sys.push_back(std::move(row));
  }
  if (cd.affine_node) {
    std::vector<Rational> row(static_cast<std::size_t>(n + 1), Rational{0});
    row[*cd.affine_node] = 1;
    row[n] = v.delta;
    sys.push_back(std::move(row));
  } else if (v.delta != 0) {
    throw Error(ErrorKind::NotInRootLattice, v.str() + " has a delta component in a non-affine realization");
  }
  Elimination e = row_reduce(sys);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == n) {
    throw Error(ErrorKind::NotInRootLattice, v.str() + " is not in the span of the simple roots");
  }
  if (static_cast<int>(e.pivot_cols.size()) < n) {
    throw Error(ErrorKind::NotInRootLattice, "root coordinates of " + v.str() + " are not unique in this realization");
  }
  RootVector r(n);
  for (int k = 0; k < n; ++k) {
    const Rational x = e.reduced[k][n];
    if (x.denominator() != 1) throw Error(ErrorKind::NotInRootLattice, v.str() + " has non-integral root coordinates");
    r.coords[e.pivot_cols[k]] = x.numerator();
  }
  return r;
}

WeightVector root_to_weight(const CartanData& cd, const RootVector& r) {
  WeightVector w(cd.rank());
  for (int i = 0; i < cd.rank(); ++i) {
    if (r.coords[i] != 0) w += Rational(r.coords[i]) * simple_root(cd, i);
  }
  return w;
}

Rational level(const CartanData& cd, const WeightVector& w) {
  if (!cd.is_affine()) throw Error(ErrorKind::NotAffine, "level is defined for affine types only");
  Rational s{0};
  for (int i = 0; i < cd.rank(); ++i) s += Rational(cd.dual_marks[i]) * w.lambda[i];
  return s;
}

bool is_dominant(const CartanData& cd, const WeightVector& w) {
  if (!w.is_integral()) return false;
  for (int i = 0; i < cd.rank(); ++i)
    if (w.lambda[i] < 0) return false;
  return true;
}

bool is_antidominant(const CartanData& cd, const WeightVector& w) { return is_dominant(cd, -w); }

bool weight_geq(const CartanData& cd, const WeightVector& xi, const WeightVector& phi) {
  try {
    return root_coordinates(cd, xi - phi).is_nonnegative();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotInRootLattice) return false;
    throw;
  }
}

WeightVector simple_reflection(const CartanData& cd, int i, const WeightVector& w) {
  const Rational p = pairing(cd, i, w);
  if (p == 0) return w;
  return w - p * simple_root(cd, i);
}

Rational form_with_root(const CartanData& cd, const RootVector& alpha, const WeightVector& w) {
  return rational_sum_product(alpha.coords, cd.symmetrizer, w.lambda);
}

// ---------------------------------------------------------------------------
// Finite-type oracles

std::vector<RootVector> positive_roots(const CartanData& cd) {
  if (!cd.is_finite()) throw Error(ErrorKind::NotFinite, "positive roots are enumerated for finite types only");
  const int n = cd.rank();
  std::set<RootVector> seen;
  std::queue<RootVector> todo;
  for (int i = 0; i < n; ++i) {
    RootVector e(n);
    e.coords[i] = 1;
    seen.insert(e);
    todo.push(e);
  }
  while (!todo.empty()) {
    RootVector beta = todo.front();
    todo.pop();
    for (int i = 0; i < n; ++i) {
      std::int64_t p = 0;
      for (int j = 0; j < n; ++j) p += static_cast<std::int64_t>(cd.matrix[i][j]) * beta.coords[j];
      if (p == 0) continue;
      RootVector s = beta;
      s.coords[i] -= p;
      if (!s.is_nonnegative() || s.height() == 0) continue;
      if (seen.insert(s).second) todo.push(s);
    }
  }
  std::vector<RootVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords < b.coords;
  });
  return out;
}

BigInt weyl_dimension(const CartanData& cd, const WeightVector& lambda) {
  if (!cd.is_finite()) throw Error(ErrorKind::NotFinite, "Weyl dimension formula requires a finite type");
  if (!is_dominant(cd, lambda)) throw Error(ErrorKind::NotDominant, lambda.str() + " is not dominant integral");
  const WeightVector r = rho(cd);
  const WeightVector lr = lambda + r;
  BigInt num = 1, den = 1;
  for (const auto& alpha : positive_roots(cd)) {
    num *= to_big(form_with_root(cd, alpha, lr));
    den *= to_big(form_with_root(cd, alpha, r));
  }
  return num / den;
}

namespace {

WeightVector dominant_conjugate(const CartanData& cd, WeightVector w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < cd.rank(); ++i) {
      if (w.lambda[i] < 0) {
        w = simple_reflection(cd, i, w);
        changed = true;
      }
    }
  }
  return w;
}

class Freudenthal {
 public:
  Freudenthal(const CartanData& cd, const WeightVector& lambda)
      : cd_(cd), lambda_(lambda), roots_(positive_roots(cd)), lambda_rho2_(lambda + Rational(2) * rho(cd)) {}

  BigInt multiplicity(const WeightVector& mu) {
    if (!weight_geq(cd_, lambda_, mu)) return 0;
    const WeightVector dom = dominant_conjugate(cd_, mu);
    if (dom == lambda_) return 1;
    if (!weight_geq(cd_, lambda_, dom)) return 0;
    if (auto it = memo_.find(dom); it != memo_.end()) return it->second;

    BigInt sum = 0;
    for (const auto& alpha : roots_) {
      const WeightVector a = root_to_weight(cd_, alpha);
      WeightVector shifted = dom + a;
      while (weight_geq(cd_, lambda_, shifted)) {
        const BigInt m = multiplicity(shifted);
        if (m != 0) sum += to_big(form_with_root(cd_, alpha, shifted)) * m;
        shifted += a;
      }
    }
    sum *= 2;
    // (lambda+rho)^2 - (mu+rho)^2 = (lambda - mu, lambda + mu + 2 rho)
    const RootVector diff = root_coordinates(cd_, lambda_ - dom);
    const BigInt denom = to_big(form_with_root(cd_, diff, lambda_rho2_ + dom));
    if (denom <= 0 || sum % denom != 0) {
      throw Error(ErrorKind::InvalidArgument, "Freudenthal recursion produced a non-integral multiplicity");
    }
    const BigInt result = sum / denom;
    memo_.emplace(dom, result);
    return result;
  }

 private:
  const CartanData& cd_;
  WeightVector lambda_;
  std::vector<RootVector> roots_;
  WeightVector lambda_rho2_;
  std::map<WeightVector, BigInt> memo_;
};

}  // namespace

BigInt weight_multiplicity(const CartanData& cd, const WeightVector& lambda, const WeightVector& mu) {
  if (!cd.is_finite()) throw Error(ErrorKind::NotFinite, "Freudenthal recursion requires a finite type");
  if (!is_dominant(cd, lambda)) throw Error(ErrorKind::NotDominant, lambda.str() + " is not dominant integral");
  if (!mu.is_integral()) return 0;
  Freudenthal f(cd, lambda);
  return f.multiplicity(mu);
}

std::string weight_name(const CartanData& cd, const WeightVector& w) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& c, const std::string& symbol) {
    if (c == 0) return;
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    const Rational a = c < 0 ? -c : c;
    if (a != 1) os << to_string(a);
    os << symbol;
    first = false;
  };
  for (int i = 0; i < w.rank(); ++i) term(w.lambda[i], "Λ" + std::to_string(cd.label(i)));
  term(w.delta, "δ");
  if (first) return "0";
  return os.str();
}

}  // namespace kmcrystal
