#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latsec/binary_code.hpp"
#include "latsec/rational.hpp"

namespace latsec {

/// Records that a lattice equals factor * 2^{scale2/2} * (2Z^n + C); lets the
/// closest-point search decode the code coset first.
struct ConstructionAForm {
  BinaryCode code;
  Rational factor;
};

/// Lattice generated by the rows of `basis`, with true coordinates
/// basis * 2^{scale2/2}. Keeping the sqrt(2) power separate keeps every Gram
/// entry, and therefore every squared norm, an exact rational.
class Lattice {
 public:
  /// Rows must be linearly independent. Throws Error{unsupported_rank}.
  Lattice(RationalMatrix basis, int scale2 = 0, std::string name = {});
  static Lattice from_int(const IntMatrix& basis, int scale2 = 0, std::string name = {});

  std::size_t rank() const noexcept { return basis_.size(); }
  std::size_t dimension() const noexcept { return basis_.empty() ? 0 : basis_[0].size(); }
  bool is_square() const noexcept { return rank() == dimension(); }

  const RationalMatrix& basis() const noexcept { return basis_; }
  int scale2() const noexcept { return scale2_; }
  const std::string& name() const noexcept { return name_; }

  /// Exact Gram matrix of the true basis vectors.
  const RationalMatrix& gram() const noexcept { return gram_; }
  /// Integer Gram numerators and their common denominator.
  const IntMatrix& gram_numerators() const noexcept { return gram_num_; }
  std::int64_t gram_denominator() const noexcept { return gram_den_; }
  const std::vector<std::vector<double>>& gram_double() const noexcept { return gram_double_; }
  /// Upper triangular R with gram = R^T R.
  const std::vector<std::vector<double>>& cholesky() const noexcept { return cholesky_; }

  /// det(gram) = vol^2, exact.
  const Rational& volume_squared() const noexcept { return volume_squared_; }
  double volume() const;
  /// The volume as a rational when det(gram) is a perfect square.
  std::optional<Rational> exact_volume() const;

  /// Gram is integral.
  bool is_integral() const;
  /// Gram is a positive multiple of the identity.
  bool is_cubic() const;
  /// Integral, unimodular and every squared norm even.
  bool is_even_unimodular() const;

  const std::optional<ConstructionAForm>& construction_a() const noexcept { return construction_a_; }

  /// factor * 2^{extra_scale2/2} * this lattice.
  Lattice scaled(const Rational& factor, int extra_scale2 = 0, std::string name = {}) const;
  Lattice renamed(std::string name) const;

  /// Exact squared norm of coords * basis.
  Rational norm(std::span<const std::int64_t> coords) const;
  /// Numerator of the squared norm over gram_denominator().
  std::int64_t norm_numerator(std::span<const std::int64_t> coords) const;

  /// coords * basis, without the 2^{scale2/2} factor.
  RationalVector frame_vector(std::span<const std::int64_t> coords) const;
  std::vector<double> ambient(std::span<const std::int64_t> coords) const;
  /// Basis coordinates of a vector given in a frame with true scale
  /// 2^{frame_scale2/2}; nullopt when the vector is not in the lattice.
  std::optional<IntVector> coords_of(std::span<const Rational> frame_vec, int frame_scale2) const;

  /// Real-valued basis coordinates of an ambient vector (least squares when
  /// the lattice is not full rank).
  std::vector<double> real_coords(std::span<const double> ambient_vec) const;

 private:
  friend Lattice construction_a(const BinaryCode& code);
  void attach_construction_a(ConstructionAForm form) { construction_a_ = std::move(form); }

  RationalMatrix basis_;
  int scale2_;
  std::string name_;
  RationalMatrix basis_inverse_;  // square bases only
  RationalMatrix gram_;
  IntMatrix gram_num_;
  std::int64_t gram_den_ = 1;
  std::vector<std::vector<double>> gram_double_;
  std::vector<std::vector<double>> cholesky_;
  std::vector<std::vector<double>> basis_true_double_;
  std::vector<std::vector<double>> coord_solver_;  // n x m, ambient -> coords
  Rational volume_squared_;
  std::optional<ConstructionAForm> construction_a_;
};

/// Lattice point with its basis coordinates and true ambient vector.
struct LatticePoint {
  IntVector coords;
  std::vector<double> ambient;
};

LatticePoint make_point(const Lattice& lattice, IntVector coords);

double volume(const Lattice& lattice);

/// Basis (M^{-1})^T with scale2 negated. Throws Error{unsupported_rank} for
/// non-square bases.
Lattice dual(const Lattice& lattice);

/// 2Z^n + C, reduced to an n x n Hermite-normal-form basis.
Lattice construction_a(const BinaryCode& code);

/// Integer matrix T with coarse basis = T * fine basis, or nullopt when the
/// coarse lattice is not contained in the fine one.
std::optional<IntMatrix> sublattice_matrix(const Lattice& fine, const Lattice& coarse);
bool contains(const Lattice& fine, const Lattice& coarse);

}  // namespace latsec
