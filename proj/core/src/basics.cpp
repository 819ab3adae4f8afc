#include <sstream>

#include "weylkit/error.hpp"
#include "weylkit/matrix.hpp"
#include "weylkit/rational.hpp"
#include "weylkit/vectors.hpp"

namespace weylkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::InvalidCartan: return "InvalidCartan";
    case ErrorKind::UnrecognizedDiagram: return "UnrecognizedDiagram";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonTerminating: return "NonTerminating";
    case ErrorKind::NotDiagramSymmetry: return "NotDiagramSymmetry";
    case ErrorKind::NotARealRoot: return "NotARealRoot";
    case ErrorKind::NotALatticeTranslation: return "NotALatticeTranslation";
    case ErrorKind::NotQuasiWithinCap: return "NotQuasiWithinCap";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::IncompleteVerification: return "IncompleteVerification";
    case ErrorKind::FixtureVerificationFailed: return "FixtureVerificationFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// ---- matrices ---------------------------------------------------------------

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const Rational lead = m(row, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) /= lead;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const auto inv = inverse(to_rational(m));
  if (!inv) throw Error(ErrorKind::InvalidArgument, "matrix is singular");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = (*inv)(r, c);
      if (!is_integer(q)) throw Error(ErrorKind::InvalidArgument, "matrix is not unimodular");
      out(r, c) = q.numerator();
    }
  return out;
}

Rational determinant(const RationalMatrix& input) {
  if (!input.square()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  RationalMatrix m = input;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m(r, col) / m(col, col);
      if (f == 0) continue;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::vector<std::vector<Rational>> null_space(const RationalMatrix& input) {
  RationalMatrix m = input;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& input) {
  RationalMatrix m = input;
  return rref(m).size();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {
inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}
}  // namespace

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const noexcept {
  std::size_t h = m.rows();
  for (auto x : m.data()) hash_combine(h, std::hash<std::int64_t>{}(x));
  return h;
}

// ---- vectors ----------------------------------------------------------------

bool RootVec::is_zero() const {
  for (auto x : coords_)
    if (x != 0) return false;
  return true;
}

RootVec& RootVec::operator+=(const RootVec& o) {
  if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "root vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RootVec& RootVec::operator-=(const RootVec& o) {
  if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "root vector sizes differ");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RootVec& RootVec::operator*=(std::int64_t k) {
  for (auto& x : coords_) x *= k;
  return *this;
}

std::size_t RootVecHash::operator()(const RootVec& v) const noexcept {
  std::size_t h = v.size();
  for (auto x : v.coords()) hash_combine(h, std::hash<std::int64_t>{}(x));
  return h;
}

CoweightVec CoweightVec::from_weights(std::span<const std::int64_t> weights) {
  CoweightVec f(weights.size() + 1);
  for (std::size_t i = 0; i < weights.size(); ++i) f.coords_[i] = weights[i];
  return f;
}

CoweightVec CoweightVec::fundamental(std::size_t size, std::size_t i) {
  if (i == 0 || i >= size) throw Error(ErrorKind::InvalidArgument, "fundamental weight index out of range");
  CoweightVec f(size);
  f.h(i) = 1;
  return f;
}

CoweightVec CoweightVec::h_delta_vector(std::size_t size) {
  CoweightVec f(size);
  f.h_delta() = 1;
  return f;
}

bool CoweightVec::is_zero() const {
  for (const auto& x : coords_)
    if (x != 0) return false;
  return true;
}

bool CoweightVec::is_integral() const {
  for (const auto& x : coords_)
    if (!is_integer(x)) return false;
  return true;
}

CoweightVec& CoweightVec::operator+=(const CoweightVec& o) {
  if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "coweight sizes differ");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

CoweightVec& CoweightVec::operator-=(const CoweightVec& o) {
  if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "coweight sizes differ");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

CoweightVec& CoweightVec::operator*=(const Rational& k) {
  for (auto& x : coords_) x *= k;
  return *this;
}

}  // namespace weylkit
