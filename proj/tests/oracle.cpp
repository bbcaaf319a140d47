#include "oracle.hpp"

#include <cmath>
#include <cstdint>
#include <map>

namespace oracle {

Eigen::MatrixXi laplacian(const std::string& bits) {
  const int n = static_cast<int>(bits.size());
  Eigen::MatrixXi lap = Eigen::MatrixXi::Zero(n, n);
  for (int j = 1; j < n; ++j) {
    if (bits[j] != '1') continue;
    for (int i = 0; i < j; ++i) {
      lap(i, j) = lap(j, i) = -1;
      ++lap(i, i);
      ++lap(j, j);
    }
  }
  return lap;
}

Eigen::VectorXd eigenvalues(const Eigen::MatrixXi& lap) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap.cast<double>(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Eigen::MatrixXcd walk(const Eigen::MatrixXi& lap, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap.cast<double>());
  const Eigen::MatrixXcd v = es.eigenvectors().cast<std::complex<double>>();
  Eigen::VectorXcd phases(lap.rows());
  for (int i = 0; i < lap.rows(); ++i) phases(i) = std::polar(1.0, es.eigenvalues()(i) * t);
  return v * phases.asDiagonal() * v.adjoint();
}

double transfer_fidelity(const Eigen::MatrixXi& lap, const Eigen::VectorXd& src,
                         const Eigen::VectorXd& dst, double t) {
  const Eigen::VectorXcd u = src.normalized().cast<std::complex<double>>();
  const Eigen::VectorXcd v = dst.normalized().cast<std::complex<double>>();
  return std::abs(v.dot(walk(lap, t) * u));
}

Eigen::VectorXd pair_state(int n, int a, int b) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  x(a - 1) = 1.0 / std::sqrt(2.0);
  x(b - 1) = -1.0 / std::sqrt(2.0);
  return x;
}

namespace {

// Rank of a set of integer vectors by Gaussian elimination in doubles; the
// entries stay tiny for n <= 8 so rounding is not an issue.
int numeric_rank(const std::vector<Eigen::VectorXi>& vs, int n) {
  if (vs.empty()) return 0;
  Eigen::MatrixXd m(n, static_cast<int>(vs.size()));
  for (int j = 0; j < static_cast<int>(vs.size()); ++j) m.col(j) = vs[j].cast<double>();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

}  // namespace

bool ternary_basis_exists(const Eigen::MatrixXi& lap) {
  const int n = static_cast<int>(lap.rows());
  std::map<int, std::vector<Eigen::VectorXi>> by_value;
  Eigen::VectorXi v(n);
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long long code = 1; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < n; ++i, c /= 3) v(i) = static_cast<int>(c % 3) - 1;
    const Eigen::VectorXi lv = lap * v;
    int i0 = 0;
    while (v(i0) == 0) ++i0;
    const int mu = lv(i0) / v(i0);
    if (lv(i0) % v(i0) != 0 || lv != mu * v) continue;
    by_value[mu].push_back(v);
  }
  const Eigen::VectorXd ev = eigenvalues(lap);
  std::map<long, int> multiplicity;
  for (int i = 0; i < n; ++i) ++multiplicity[std::lround(ev(i))];
  for (const auto& [mu, m] : multiplicity) {
    const auto it = by_value.find(static_cast<int>(mu));
    if (it == by_value.end() || numeric_rank(it->second, n) != m) return false;
  }
  return true;
}

std::vector<std::string> sequences(int n) {
  std::vector<std::string> out;
  if (n == 2) return {"01"};
  const std::uint64_t count = std::uint64_t{1} << (n - 2);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::string s(n, '0');
    for (int i = 0; i < n - 2; ++i)
      if (k >> (n - 3 - i) & 1) s[1 + i] = '1';
    s[n - 1] = '1';
    out.push_back(s);
  }
  return out;
}

std::string random_sequence(int n, std::mt19937_64& rng) {
  std::string s(n, '0');
  std::bernoulli_distribution coin(0.5);
  for (int i = 1; i < n - 1; ++i) s[i] = coin(rng) ? '1' : '0';
  s[n - 1] = '1';
  return s;
}

int valuation(long long m) {
  if (m == 0) return -1;
  int k = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++k;
  }
  return k;
}

}  // namespace oracle
