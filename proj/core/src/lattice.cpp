#include "latsec/lattice.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "latsec/error.hpp"
#include "latsec/matrix.hpp"

namespace latsec {

namespace {

// sqrt of a nonnegative rational when exact.
std::optional<Rational> exact_sqrt(const Rational& v) {
  if (v < 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace

Lattice::Lattice(RationalMatrix basis, int scale2, std::string name)
    : basis_(std::move(basis)), scale2_(scale2), name_(std::move(name)) {
  if (basis_.empty() || basis_[0].empty()) throw Error(ErrorKind::unsupported_rank, "empty basis");
  const std::size_t n = basis_[0].size();
  for (const auto& row : basis_)
    if (row.size() != n) throw Error(ErrorKind::unsupported_rank, "ragged basis");
  if (basis_.size() > n || mat::rank(basis_) != basis_.size())
    throw Error(ErrorKind::unsupported_rank, "basis rows are linearly dependent");

  gram_ = mat::scale(mat::gram(basis_), pow2(scale2_));
  volume_squared_ = mat::determinant(gram_);

  BigInt den = 1;
  for (const auto& row : gram_)
    for (const auto& v : row) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
  gram_den_ = den.convert_to<std::int64_t>();
  gram_num_ = *mat::to_int(mat::scale(gram_, Rational(den)));
  gram_double_ = mat::to_double(gram_);
  cholesky_ = mat::cholesky_upper(gram_double_);

  const double s = std::pow(2.0, 0.5 * scale2_);
  basis_true_double_ = mat::to_double(basis_);
  for (auto& row : basis_true_double_)
    for (auto& v : row) v *= s;

  // coords = ambient * B^T G^{-1}
  if (is_square()) basis_inverse_ = mat::inverse(basis_);
  const RationalMatrix solver = is_square() ? basis_inverse_
                                            : mat::multiply(mat::transpose(basis_), mat::inverse(mat::gram(basis_)));
  coord_solver_ = mat::to_double(solver);
  for (auto& row : coord_solver_)
    for (auto& v : row) v /= s;
}

Lattice Lattice::from_int(const IntMatrix& basis, int scale2, std::string name) {
  return Lattice(mat::from_int(basis), scale2, std::move(name));
}

double Lattice::volume() const { return std::sqrt(to_double(volume_squared_)); }

std::optional<Rational> Lattice::exact_volume() const { return exact_sqrt(volume_squared_); }

bool Lattice::is_integral() const {
  for (const auto& row : gram_)
    for (const auto& v : row)
      if (!is_integer(v)) return false;
  return true;
}

bool Lattice::is_cubic() const {
  const Rational c = gram_[0][0];
  for (std::size_t i = 0; i < gram_.size(); ++i)
    for (std::size_t j = 0; j < gram_.size(); ++j)
      if (gram_[i][j] != (i == j ? c : Rational(0))) return false;
  return true;
}

bool Lattice::is_even_unimodular() const {
  if (!is_square() || !is_integral() || volume_squared_ != 1) return false;
  for (std::size_t i = 0; i < gram_.size(); ++i)
    if (to_int64(gram_[i][i]) % 2 != 0) return false;
  return true;
}

Lattice Lattice::scaled(const Rational& factor, int extra_scale2, std::string name) const {
  if (factor <= 0) throw Error(ErrorKind::invalid_argument, "scale factor must be positive");
  Lattice out(mat::scale(basis_, factor), scale2_ + extra_scale2, name.empty() ? name_ : std::move(name));
  if (construction_a_) {
    out.construction_a_ = ConstructionAForm{construction_a_->code, construction_a_->factor * factor};
  }
  return out;
}

Lattice Lattice::renamed(std::string name) const {
  Lattice out = *this;
  out.name_ = std::move(name);
  return out;
}

Rational Lattice::norm(std::span<const std::int64_t> coords) const {
  return Rational(norm_numerator(coords), gram_den_);
}

std::int64_t Lattice::norm_numerator(std::span<const std::int64_t> coords) const {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < coords.size(); ++j) row += gram_num_[i][j] * coords[j];
    acc += coords[i] * row;
  }
  return acc;
}

RationalVector Lattice::frame_vector(std::span<const std::int64_t> coords) const {
  RationalVector c(coords.begin(), coords.end());
  return mat::row_times(c, basis_);
}

std::vector<double> Lattice::ambient(std::span<const std::int64_t> coords) const {
  std::vector<double> out(dimension(), 0.0);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    const double c = static_cast<double>(coords[i]);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * basis_true_double_[i][j];
  }
  return out;
}

std::optional<IntVector> Lattice::coords_of(std::span<const Rational> frame_vec, int frame_scale2) const {
  if (frame_vec.size() != dimension()) return std::nullopt;
  const int diff = frame_scale2 - scale2_;
  if (diff % 2 != 0) {
    // sqrt(2) times a nonzero rational vector is never rational.
    for (const auto& v : frame_vec)
      if (v != 0) return std::nullopt;
    return IntVector(rank(), 0);
  }
  RationalVector target(frame_vec.begin(), frame_vec.end());
  const Rational f = pow2(diff / 2);
  for (auto& v : target) v *= f;
  // Solve u * basis = target; exact when the basis is square.
  RationalVector u;
  if (is_square()) {
    u = mat::row_times(target, basis_inverse_);
  } else {
    const RationalMatrix g = mat::gram(basis_);
    u = mat::row_times(mat::row_times(target, mat::transpose(basis_)), mat::inverse(g));
    if (mat::row_times(u, basis_) != target) return std::nullopt;
  }
  IntVector out;
  out.reserve(u.size());
  for (const auto& v : u) {
    if (!is_integer(v)) return std::nullopt;
    out.push_back(to_int64(v));
  }
  return out;
}

std::vector<double> Lattice::real_coords(std::span<const double> ambient_vec) const {
  std::vector<double> out(rank(), 0.0);
  for (std::size_t j = 0; j < ambient_vec.size(); ++j) {
    if (ambient_vec[j] == 0.0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += ambient_vec[j] * coord_solver_[j][i];
  }
  return out;
}

LatticePoint make_point(const Lattice& lattice, IntVector coords) {
  LatticePoint p;
  p.ambient = lattice.ambient(coords);
  p.coords = std::move(coords);
  return p;
}

double volume(const Lattice& lattice) { return lattice.volume(); }

Lattice dual(const Lattice& lattice) {
  if (!lattice.is_square()) throw Error(ErrorKind::unsupported_rank, "dual needs a square basis");
  const std::string name = lattice.name().empty() ? std::string{} : lattice.name() + "*";
  return Lattice(mat::transpose(mat::inverse(lattice.basis())), -lattice.scale2(), name);
}

Lattice construction_a(const BinaryCode& code) {
  const std::size_t n = code.length();
  IntMatrix rows;
  for (const auto& g : code.generator()) rows.emplace_back(g.begin(), g.end());
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 2;
    rows.push_back(std::move(e));
  }
  Lattice out = Lattice::from_int(mat::hermite_normal_form(std::move(rows)), 0);
  out.attach_construction_a(ConstructionAForm{code, Rational(1)});
  return out;
}

std::optional<IntMatrix> sublattice_matrix(const Lattice& fine, const Lattice& coarse) {
  if (fine.dimension() != coarse.dimension()) return std::nullopt;
  IntMatrix t;
  for (std::size_t i = 0; i < coarse.rank(); ++i) {
    auto c = fine.coords_of(coarse.basis()[i], coarse.scale2());
    if (!c) return std::nullopt;
    t.push_back(std::move(*c));
  }
  return t;
}

bool contains(const Lattice& fine, const Lattice& coarse) { return sublattice_matrix(fine, coarse).has_value(); }

}  // namespace latsec
