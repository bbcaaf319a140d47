#include "threshold/quantum_walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "threshold/error.hpp"

namespace threshold {

PureState PureState::vertex(int a) { return PureState(Kind::kVertex, a, 0); }

PureState PureState::pair(int a, int b) {
  if (a == b) throw Error(ErrorCode::kPrecondition, "pair state needs two distinct vertices");
  return PureState(Kind::kPair, a, b);
}

IntVector PureState::representative(int n) const {
  auto in_range = [n](int v) { return v >= 1 && v <= n; };
  if (!in_range(a_) || (kind_ == Kind::kPair && !in_range(b_)))
    throw Error(ErrorCode::kPrecondition, text() + " is out of range for n = " + std::to_string(n));
  IntVector x(n, 0);
  x[a_ - 1] = 1;
  if (kind_ == Kind::kPair) x[b_ - 1] = -1;
  return x;
}

Eigen::VectorXd PureState::normalized(int n) const {
  const auto x = representative(n);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = static_cast<double>(x[i]);
  return v.normalized();
}

std::string PureState::text() const {
  if (kind_ == Kind::kVertex) return "e" + std::to_string(a_);
  return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

int nu2(Int m) {
  if (m == 0) return kInfiniteValuation;
  int k = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++k;
  }
  return k;
}

namespace {

std::string nu2_text(int v) { return v == kInfiniteValuation ? "inf" : std::to_string(v); }

std::vector<Int> support_from(const SpectralDecomposition& d, const IntVector& coords) {
  std::vector<Int> out;
  for (Int mu : d.eigenvalues()) {
    const auto& idx = d.indices(mu);
    if (std::any_of(idx.begin(), idx.end(), [&](int l) { return coords[l - 1] != 0; }))
      out.push_back(mu);
  }
  return out;
}

Cospectrality compare(const SpectralDecomposition& d, const IntVector& cu, const IntVector& cv) {
  Cospectrality out;
  const auto su = support_from(d, cu);
  const auto sv = support_from(d, cv);
  if (su.size() <= 1 || sv.size() <= 1) {
    out.reason = "fixed state";
    return out;
  }
  SupportPartition p;
  for (Int mu : d.eigenvalues()) {
    int sign = 0;
    bool ok = true;
    for (int l : d.indices(mu)) {
      const Int x = cu[l - 1], y = cv[l - 1];
      if (x == 0 && y == 0) continue;
      const int s = x == y ? 1 : (x == -y ? -1 : 0);
      if (s == 0 || (sign != 0 && s != sign)) {
        ok = false;
        break;
      }
      sign = s;
    }
    if (!ok) {
      out.witness = mu;
      out.reason = "E_mu u != +-E_mu v at mu = " + std::to_string(mu);
      return out;
    }
    if (sign == 0) continue;
    p.support.push_back(mu);
    (sign > 0 ? p.plus : p.minus).push_back(mu);
  }
  out.strongly_cospectral = true;
  out.partition = std::move(p);
  return out;
}

// Block-form theta: 2 + t_2 + ... + t_r when s_1 = t_1 = 1, t_1 + ... + t_r when s_1 = 2.
std::optional<Int> block_theta(const ThresholdGraph& g) {
  const auto blocks = g.blocks();
  Int tail = 0;
  for (std::size_t j = 1; j < blocks.size(); ++j) tail += blocks[j].ones;
  if (blocks[0] == Block{1, 1}) return 2 + tail;
  if (blocks[0].zeros == 2) return blocks[0].ones + tail;
  return std::nullopt;
}

void check_block_prediction(const SpectralDecomposition& d, const PureState& u,
                            const PureState& v, const Cospectrality& exact) {
  if (u.kind() != PureState::Kind::kPair || v.kind() != PureState::Kind::kPair) return;
  if (u.a() != 1 || v.a() != 2 || u.b() != v.b() || u.b() < 3) return;
  const auto& g = d.graph();
  const auto theta = block_theta(g);
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kVerifyFailed,
                g.sequence() + " " + u.text() + "/" + v.text() + ": " + what);
  };
  if (theta.has_value() != exact.strongly_cospectral)
    fail("block-form strong cospectrality prediction disagrees with exact comparison");
  if (!theta) return;
  if (*theta != structural_theta(d)) fail("block-form theta differs from the x^1 eigenvalue");
  const auto& p = *exact.partition;
  if (p.minus != std::vector<Int>{*theta}) fail("minus part is not {theta}");
  for (Int mu : p.plus)
    if (mu == 0 || mu == *theta) fail("plus part contains 0 or theta");
}

Int gcd_of_gaps(const SupportPartition& p) {
  const Int top = *std::max_element(p.plus.begin(), p.plus.end());
  Int g = 0;
  for (Int alpha : p.support) g = std::gcd(g, top - alpha);
  return g;
}

Rational reduce_turns(Rational q) {
  const mpz_class twice_den = 2 * q.get_den();
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), q.get_num_mpz_t(), twice_den.get_mpz_t());
  q -= Rational(2 * k);
  q.canonicalize();
  return q;
}

void require_independent(const IntVector& x, const IntVector& y) {
  IntVector neg(y.size());
  std::transform(y.begin(), y.end(), neg.begin(), [](Int v) { return -v; });
  if (x == y || x == neg) throw Error(ErrorCode::kPrecondition, "states must satisfy u != +-v");
}

}  // namespace

std::vector<Int> support(const SpectralDecomposition& d, const PureState& u) {
  return support_from(d, shared_coordinates(u.representative(d.order())));
}

Int structural_theta(const SpectralDecomposition& d) { return d.assignment().at(1); }

Cospectrality strong_cospectral(const SpectralDecomposition& d, const PureState& u,
                                const PureState& v) {
  const int n = d.order();
  const auto ru = u.representative(n), rv = v.representative(n);
  require_independent(ru, rv);
  auto exact = compare(d, shared_coordinates(ru), shared_coordinates(rv));
  check_block_prediction(d, u, v, exact);
  return exact;
}

PstResult state_transfer(const SpectralDecomposition& d, const PureState& u, const PureState& v) {
  PstResult out;
  const int n = d.order();
  const auto ru = u.representative(n), rv = v.representative(n);
  require_independent(ru, rv);
  const auto cu = shared_coordinates(ru), cv = shared_coordinates(rv);
  if (support_from(d, cu).size() <= 1 || support_from(d, cv).size() <= 1) {
    out.verdict = PstResult::Verdict::kFixed;
    out.reason = "fixed state";
    return out;
  }
  auto sc = compare(d, cu, cv);
  check_block_prediction(d, u, v, sc);
  if (!sc.strongly_cospectral) {
    out.reason = "not strongly cospectral: " + sc.reason;
    return out;
  }
  const auto& p = *sc.partition;
  out.partition = p;
  if (p.support.size() >= 3) {
    for (Int mu : p.plus) {
      const int k = nu2(p.minus.front() - mu);
      for (Int lambda : p.minus)
        if (nu2(lambda - mu) != k) {
          out.reason = "nu2(" + std::to_string(lambda) + "-" + std::to_string(mu) + ") = " +
                       nu2_text(nu2(lambda - mu)) + " != nu2(" + std::to_string(p.minus.front()) +
                       "-" + std::to_string(mu) + ") = " + nu2_text(k);
          return out;
        }
      for (Int sigma : p.plus)
        if (nu2(sigma - mu) <= k) {
          out.reason = "nu2(" + std::to_string(sigma) + "-" + std::to_string(mu) + ") = " +
                       nu2_text(nu2(sigma - mu)) + " <= " + nu2_text(k);
          return out;
        }
    }
  }
  out.verdict = PstResult::Verdict::kPst;
  out.g = gcd_of_gaps(p);
  out.tau = Rational(1, out.g);
  out.tau.canonicalize();
  const Int top = *std::max_element(p.plus.begin(), p.plus.end());
  out.phase = reduce_turns(Rational(top, out.g));
  out.reason = p.support.size() == 2 ? "strongly cospectral with two eigenvalues"
                                     : "strongly cospectral, 2-adic condition holds";
  return out;
}

PstResult pair_pst(const SpectralDecomposition& d, const PureState& u, const PureState& v) {
  if (u.kind() != PureState::Kind::kPair || v.kind() != PureState::Kind::kPair)
    throw Error(ErrorCode::kPrecondition, "pair_pst needs pair states");
  auto out = state_transfer(d, u, v);
  if (out.verdict == PstResult::Verdict::kFixed)
    throw Error(ErrorCode::kFixed, u.text() + " or " + v.text() + " is fixed in " +
                                       d.graph().sequence());
  if (out.pst()) {
    const double t = times_pi(out.tau);
    const int n = d.order();
    const auto evolved = evolve(d, u, t);
    const Eigen::VectorXcd target = v.normalized(n).cast<std::complex<double>>();
    out.fidelity = std::abs(target.dot(evolved));
    const std::complex<double> eta = std::polar(1.0, times_pi(out.phase));
    out.phase_error = (evolved - eta * target).norm();
  }
  return out;
}

bool pair_conditions_hold(const ThresholdGraph& g) {
  const auto blocks = g.blocks();
  const int r = static_cast<int>(blocks.size());
  if (g.order() < 3) return false;
  if (r == 1) return blocks[0].zeros == 2;
  auto mod4 = [](int x) { return x % 4; };
  bool tail_ok = true;
  for (int j = 2; j <= r; ++j) {
    if (mod4(blocks[j - 1].ones) != 0) tail_ok = false;
    if (j >= 3 && mod4(blocks[j - 1].zeros) != 0) tail_ok = false;
  }
  if (!tail_ok) return false;
  if (blocks[0] == Block{1, 1}) return mod4(blocks[1].zeros) == 2;
  if (blocks[0].zeros == 2) return mod4(blocks[0].ones) == 2 && mod4(blocks[1].zeros) == 0;
  return false;
}

Int shared_eigenvalue(const ThresholdGraph& g, int l) {
  const int n = g.order();
  if (l < 1 || l >= n) throw Error(ErrorCode::kPrecondition, "x^l needs 1 <= l < n");
  const auto blocks = g.blocks();
  int end = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const int zeros_end = end + blocks[k].zeros;
    end = zeros_end + blocks[k].ones;
    if (l + 1 > end) continue;
    Int value = 0;
    if (l + 1 <= zeros_end) {
      for (std::size_t j = k; j < blocks.size(); ++j) value += blocks[j].ones;
    } else {
      value = n;
      for (std::size_t j = k + 1; j < blocks.size(); ++j) value -= blocks[j].zeros;
    }
    return value;
  }
  throw Error(ErrorCode::kVerifyFailed, "position beyond the sequence");
}

std::optional<Rational> pair_transfer_from_blocks(const ThresholdGraph& g, int b) {
  if (b < 3 || b > g.order()) throw Error(ErrorCode::kPrecondition, "pair(1,b) needs 3 <= b <= n");
  if (!block_theta(g)) return std::nullopt;
  const Int theta = shared_eigenvalue(g, 1);
  std::set<Int> plus;
  for (int l = 2; l < b; ++l) plus.insert(shared_eigenvalue(g, l));
  plus.erase(theta);
  if (plus.empty()) return std::nullopt;
  const int k = nu2(theta - *plus.begin());
  for (Int mu : plus)
    if (nu2(theta - mu) != k) return std::nullopt;
  Int gap = 0;
  const Int top = *plus.rbegin();
  for (Int mu : plus) gap = std::gcd(gap, top - mu);
  gap = std::gcd(gap, top - theta);
  Rational tau(1, gap);
  tau.canonicalize();
  return tau;
}

std::vector<PairTransfer> threshold_pst_pairs(const SpectralDecomposition& d) {
  std::vector<PairTransfer> out;
  if (!pair_conditions_hold(d.graph())) return out;
  for (int b = 3; b <= d.order(); ++b) {
    const auto u = PureState::pair(1, b), v = PureState::pair(2, b);
    auto res = pair_pst(d, u, v);
    if (!res.pst())
      throw Error(ErrorCode::kVerifyFailed, d.graph().sequence() + " " + u.text() + "/" +
                                                v.text() + ": block-form conditions hold but " +
                                                res.reason);
    out.push_back({b, u, v, std::move(res)});
  }
  return out;
}

std::vector<PairTransfer> exact_pst_pairs(const SpectralDecomposition& d) {
  std::vector<PairTransfer> out;
  for (int b = 3; b <= d.order(); ++b) {
    const auto u = PureState::pair(1, b), v = PureState::pair(2, b);
    if (support(d, u).size() <= 1 || support(d, v).size() <= 1) continue;
    auto res = pair_pst(d, u, v);
    if (res.pst()) out.push_back({b, u, v, std::move(res)});
  }
  return out;
}

VertexPst vertex_pst(const SpectralDecomposition& d) {
  const auto& g = d.graph();
  if (g.order() < 3)
    throw Error(ErrorCode::kTooSmall, "vertex transfer analysis needs n >= 3");
  const auto blocks = g.blocks();
  const bool predicted = blocks.size() == 1
                             ? blocks[0].zeros == 2 && blocks[0].ones % 4 == 2
                             : pair_conditions_hold(g);
  const auto exact = state_transfer(d, PureState::vertex(1), PureState::vertex(2));
  if (exact.pst() != predicted)
    throw Error(ErrorCode::kVerifyFailed,
                g.sequence() + ": block-form vertex transfer prediction disagrees with exact "
                               "criterion (" + exact.reason + ")");
  VertexPst out;
  out.present = predicted;
  out.reason = exact.reason;
  if (!out.present) return out;
  out.tau = exact.tau;
  const double t = times_pi(out.tau);
  out.fidelity = fidelity(d, PureState::vertex(1), PureState::vertex(2), t);
  for (int b = 3; b <= g.order(); ++b)
    out.periodicity.emplace_back(b, fidelity(d, PureState::vertex(b), PureState::vertex(b), t));
  return out;
}

double times_pi(const Rational& q) { return q.get_d() * std::numbers::pi; }

Eigen::MatrixXcd walk_operator(const SpectralDecomposition& d, double t) {
  const int n = d.order();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
  for (Int mu : d.eigenvalues()) {
    const auto& e = d.projection(mu);
    const std::complex<double> phase = std::polar(1.0, static_cast<double>(mu) * t);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) u(i, j) += phase * e(i, j).get_d();
  }
  return u;
}

Eigen::VectorXcd evolve(const SpectralDecomposition& d, const PureState& u, double t) {
  const int n = d.order();
  const auto rep = u.representative(n);
  const auto coords = shared_coordinates(rep);
  const double norm = std::sqrt(static_cast<double>(dot(rep, rep)));
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (Int mu : d.eigenvalues()) {
    Eigen::VectorXd part = Eigen::VectorXd::Zero(n);
    for (int l : d.indices(mu)) {
      if (coords[l - 1] == 0) continue;
      const auto x = shared_eigenvector(n, l);
      const double scale = static_cast<double>(coords[l - 1]) / static_cast<double>(dot(x, x));
      for (int i = 0; i < n; ++i) part[i] += scale * static_cast<double>(x[i]);
    }
    out += std::polar(1.0, static_cast<double>(mu) * t) * (part / norm).cast<std::complex<double>>();
  }
  return out;
}

double fidelity(const SpectralDecomposition& d, const PureState& src, const PureState& dst,
                double t) {
  const Eigen::VectorXcd target = dst.normalized(d.order()).cast<std::complex<double>>();
  return std::abs(target.dot(evolve(d, src, t)));
}

}  // namespace threshold
