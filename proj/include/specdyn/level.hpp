#pragma once

#include <Eigen/Dense>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "specdyn/projective.hpp"
#include "specdyn/scaled.hpp"
#include "specdyn/wreath.hpp"

namespace specdyn::selfsim {

using Matrix = Eigen::MatrixXcd;

inline constexpr int kMaxLevel = 12;      // 4096^2 complex doubles
inline constexpr double kEpsPivot = 1e-12;

struct LevelTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 2^n x 2^n matrix of a word in the level-n Koopman representation.
/// Level 0 is the 1x1 identity for every generator; level n is built by the
/// 2x2 block recursion (diagonal blocks without swap, antidiagonal with).
Matrix level_matrix(const WreathSpec& spec, const GroupWord& word, int n,
                    int n_max = kMaxLevel);

/// One term of a pencil: coeff * (word matrix); empty word = identity.
struct PencilTerm {
  Complex coeff;
  GroupWord word;
};

Matrix pencil_matrix(const WreathSpec& spec,
                     const std::vector<PencilTerm>& terms, int n,
                     int n_max = kMaxLevel);

/// z0 + z1 a + z2 t + z3 (a t)
std::vector<PencilTerm> dihedral_pencil(const Vec4c& z);

/// z0 + z1 (a^-1 b) + z2 (a + b) + z3 (a^-1 + b^-1)
std::vector<PencilTerm> lamplighter_pencil(const Vec4c& z);

/// Sum of the pencil's coefficients weighted by word multiplicity; equals the
/// 1x1 level-0 pencil.  For a scaled lift the template is linear in z, so the
/// scale factors straight out.
Vec4c pencil_weights(const std::function<std::vector<PencilTerm>(const Vec4c&)>&
                         pencil_template);

/// Determinant via LU with partial pivoting, as a ScaledValue.
/// nullopt = singular: some pivot modulus <= eps_pivot * max|entry|.
std::optional<ScaledValue> log_det(const Matrix& m,
                                   double eps_pivot = kEpsPivot);

/// Smallest singular value.
double min_singular(const Matrix& m);

struct CommutationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchurReport {
  std::optional<ScaledValue> block_det;    // det [[A,B],[C,D]]
  std::optional<ScaledValue> product_det;  // det (AD - CB)
  double rel_deviation = 0.0;
  bool both_singular = false;
};

/// Compares det[[A,B],[C,D]] with det(AD - CB); requires AC = CA.
SchurReport schur_det_check(const Matrix& a, const Matrix& b, const Matrix& c,
                            const Matrix& d, double commute_tol = 1e-10);

struct RecursionReport {
  std::optional<ScaledValue> det_level_np1;  // level n+1 pencil at z
  std::optional<ScaledValue> det_level_n;    // level n pencil at F(z)
  double rel_deviation = 0.0;
  bool both_singular = false;
  bool agree(double tol) const {
    return both_singular || rel_deviation < tol;
  }
};

/// Checks det(pencil_{n+1}(z)) == det(pencil_n(F z)) for the exact lift F z.
RecursionReport verify_det_recursion(
    const WreathSpec& spec,
    const std::function<std::vector<PencilTerm>(const Vec4c&)>& pencil_template,
    const HomogMap& map, const Vec4c& z, int n, int n_max = kMaxLevel);

/// Row-major CSV, each complex entry as a "re,im" pair.
void write_matrix_csv(const Matrix& m, std::ostream& os);

}  // namespace specdyn::selfsim
