#include "specdyn/level.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <cstdio>
#include <ostream>
#include <unordered_map>

namespace specdyn::selfsim {

namespace {

using Memo = std::unordered_map<std::string, Matrix>;

Matrix generator_level(const WreathSpec& spec, const std::string& name, int n,
                       Memo& memo) {
  const long dim = 1L << n;
  if (name == "e") return Matrix::Identity(dim, dim);
  if (n == 0) return Matrix::Identity(1, 1);

  std::string key = name + "#" + std::to_string(n);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const Generator& g = spec.at(name);
  Matrix s0 = generator_level(spec, g.sec0, n - 1, memo);
  Matrix s1 = generator_level(spec, g.sec1, n - 1, memo);
  const long half = dim / 2;
  Matrix m = Matrix::Zero(dim, dim);
  if (g.swap) {
    m.topRightCorner(half, half) = s0;
    m.bottomLeftCorner(half, half) = s1;
  } else {
    m.topLeftCorner(half, half) = s0;
    m.bottomRightCorner(half, half) = s1;
  }
  memo.emplace(std::move(key), m);
  return m;
}

Matrix word_matrix(const WreathSpec& spec, const GroupWord& word, int n,
                   Memo& memo) {
  const long dim = 1L << n;
  Matrix m = Matrix::Identity(dim, dim);
  for (const WordLetter& l : word) {
    std::string name = (l.exp < 0) ? WreathSpec::inverse_name(l.gen) : l.gen;
    if (!spec.has(name))
      throw ValidationError("word uses unknown generator '" + name + "'");
    m = m * generator_level(spec, name, n, memo);
  }
  return m;
}

void check_level(int n, int n_max) {
  if (n < 0) throw std::invalid_argument("level must be >= 0");
  if (n > n_max)
    throw LevelTooLarge("level " + std::to_string(n) + " exceeds maximum " +
                        std::to_string(n_max));
}

}  // namespace

Matrix level_matrix(const WreathSpec& spec, const GroupWord& word, int n,
                    int n_max) {
  check_level(n, n_max);
  Memo memo;
  return word_matrix(spec, word, n, memo);
}

Matrix pencil_matrix(const WreathSpec& spec,
                     const std::vector<PencilTerm>& terms, int n, int n_max) {
  check_level(n, n_max);
  const long dim = 1L << n;
  Memo memo;
  Matrix acc = Matrix::Zero(dim, dim);
  for (const PencilTerm& t : terms)
    acc += t.coeff * word_matrix(spec, t.word, n, memo);
  return acc;
}

std::vector<PencilTerm> dihedral_pencil(const Vec4c& z) {
  return {{z[0], {}},
          {z[1], {{"a", 1}}},
          {z[2], {{"t", 1}}},
          {z[3], {{"a", 1}, {"t", 1}}}};
}

std::vector<PencilTerm> lamplighter_pencil(const Vec4c& z) {
  return {{z[0], {}},
          {z[1], {{"a", -1}, {"b", 1}}},
          {z[2], {{"a", 1}}},
          {z[2], {{"b", 1}}},
          {z[3], {{"a", -1}}},
          {z[3], {{"b", -1}}}};
}

Vec4c pencil_weights(
    const std::function<std::vector<PencilTerm>(const Vec4c&)>& tmpl) {
  Vec4c w = Vec4c::Zero();
  for (int i = 0; i < 4; ++i) {
    Vec4c unit = Vec4c::Zero();
    unit[i] = Complex(1.0, 0.0);
    for (const PencilTerm& t : tmpl(unit)) w[i] += t.coeff;
  }
  return w;
}

std::optional<ScaledValue> log_det(const Matrix& m, double eps_pivot) {
  Eigen::PartialPivLU<Matrix> lu(m);
  const double threshold = eps_pivot * m.cwiseAbs().maxCoeff();
  ScaledValue det =
      ScaledValue::of(static_cast<double>(lu.permutationP().determinant()));
  for (long i = 0; i < m.rows(); ++i) {
    Complex piv = lu.matrixLU()(i, i);
    if (std::abs(piv) <= threshold) return std::nullopt;
    det = det * ScaledValue::of(piv);
  }
  return det;
}

double min_singular(const Matrix& m) {
  if (m.rows() <= 16) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(m.rows() - 1);
  }
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues()(m.rows() - 1);
}

namespace {

double deviation(const std::optional<ScaledValue>& a,
                 const std::optional<ScaledValue>& b, bool& both_singular) {
  both_singular = !a && !b;
  if (both_singular) return 0.0;
  if (!a || !b) return std::numeric_limits<double>::infinity();
  return ScaledValue::relative_diff(*a, *b);
}

}  // namespace

SchurReport schur_det_check(const Matrix& a, const Matrix& b, const Matrix& c,
                            const Matrix& d, double commute_tol) {
  const long n = a.rows();
  double comm = (a * c - c * a).cwiseAbs().maxCoeff();
  double scale = std::max(1.0, a.cwiseAbs().maxCoeff() * c.cwiseAbs().maxCoeff());
  if (comm > commute_tol * scale)
    throw CommutationError("blocks A and C do not commute (|AC-CA| = " +
                           std::to_string(comm) + ")");
  Matrix block(2 * n, 2 * n);
  block.topLeftCorner(n, n) = a;
  block.topRightCorner(n, n) = b;
  block.bottomLeftCorner(n, n) = c;
  block.bottomRightCorner(n, n) = d;

  SchurReport rep;
  rep.block_det = log_det(block);
  rep.product_det = log_det(a * d - c * b);
  rep.rel_deviation = deviation(rep.block_det, rep.product_det,
                                rep.both_singular);
  return rep;
}

RecursionReport verify_det_recursion(
    const WreathSpec& spec,
    const std::function<std::vector<PencilTerm>(const Vec4c&)>& pencil_template,
    const HomogMap& map, const Vec4c& z, int n, int n_max) {
  check_level(n + 1, n_max);
  RecursionReport rep;
  rep.det_level_np1 = log_det(pencil_matrix(spec, pencil_template(z), n + 1));
  rep.det_level_n = log_det(pencil_matrix(spec, pencil_template(map.lift(z)), n));
  rep.rel_deviation =
      deviation(rep.det_level_np1, rep.det_level_n, rep.both_singular);
  return rep;
}

void write_matrix_csv(const Matrix& m, std::ostream& os) {
  char buf[64];
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g", m(i, j).real(),
                    m(i, j).imag());
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace specdyn::selfsim
