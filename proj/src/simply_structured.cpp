#include "threshold/simply_structured.hpp"

#include <algorithm>
#include <numeric>

#include "threshold/error.hpp"
#include "threshold/spectral.hpp"

namespace threshold {

std::vector<int> GroupBoundaries::starts() const {
  std::vector<int> s;
  for (const auto& grp : groups) s.push_back(grp.first);
  return s;
}

GroupBoundaries group_boundaries(const ThresholdGraph& g) {
  const auto mu = assign_eigenvalues(g);
  const int n = g.order();
  GroupBoundaries out;
  out.kernel_index = n;
  std::vector<EigenGroup> ascending;
  for (int l = 1; l <= n - 1; ++l) {
    if (!ascending.empty() && ascending.back().eigenvalue == mu.at(l))
      ascending.back().last = l;
    else
      ascending.push_back({mu.at(l), l, l});
  }
  for (std::size_t i = 0; i < ascending.size(); ++i)
    for (std::size_t j = i + 1; j < ascending.size(); ++j)
      if (ascending[i].eigenvalue == ascending[j].eigenvalue)
        throw Error(ErrorCode::kVerifyFailed,
                    "eigenvalue " + std::to_string(ascending[i].eigenvalue) +
                        " occupies non-contiguous indices in " + g.sequence());
  out.groups.assign(ascending.rbegin(), ascending.rend());
  return out;
}

std::string SsViolation::describe() const {
  const auto range = "[" + std::to_string(lower) + ", " + std::to_string(upper) + "]";
  switch (constraint) {
    case Constraint::kBlockCount:
      return "r = " + std::to_string(actual) + " outside " + range;
    case Constraint::kOnesBlock:
      return "t_" + std::to_string(index) + " = " + std::to_string(actual) + " outside " + range;
    case Constraint::kZerosBlock:
      return "s_" + std::to_string(index) + " = " + std::to_string(actual) + " outside " + range;
    case Constraint::kFirstBlockIdentity:
      return "s_1 = " + std::to_string(actual) + " but the remaining blocks leave " +
             std::to_string(lower);
  }
  return {};
}

namespace {

int floor_log2(int n) {
  int k = 0;
  while ((n >> (k + 1)) > 0) ++k;
  return k;
}

Int ceil_half(Int x) { return (x + 1) / 2; }

Int pow2(int e) { return e >= 62 ? INT64_MAX : (Int{1} << e); }

}  // namespace

SsVerdict is_simply_structured(const ThresholdGraph& g) {
  using C = SsViolation::Constraint;
  const auto blocks = g.blocks();
  const Int n = g.order();
  const int r = static_cast<int>(blocks.size());

  const int max_r = (floor_log2(static_cast<int>(n)) + 1) / 2;
  if (r < 1 || r > max_r) return {false, SsViolation{C::kBlockCount, 0, 1, max_r, r}};

  // tail[i] = sum_{j > i} (s_j + t_j), 1-based i.
  std::vector<Int> tail(r + 2, 0);
  for (int i = r; i >= 1; --i) tail[i - 1] = tail[i] + blocks[i - 1].zeros + blocks[i - 1].ones;

  for (int i = 1; i <= r; ++i) {
    const Int t = blocks[i - 1].ones;
    const Int room = n - tail[i];
    const Int t_lo = ceil_half(room), t_hi = room - pow2(2 * i - 2);
    if (t < t_lo || t > t_hi) return {false, SsViolation{C::kOnesBlock, i, t_lo, t_hi, t}};
    if (i >= 2) {
      const Int s = blocks[i - 1].zeros;
      const Int s_room = n - t - tail[i];
      const Int s_lo = ceil_half(s_room), s_hi = s_room - pow2(2 * i - 3);
      if (s < s_lo || s > s_hi) return {false, SsViolation{C::kZerosBlock, i, s_lo, s_hi, s}};
    }
  }
  const Int s1_expected = n - blocks[0].ones - tail[1];
  if (blocks[0].zeros != s1_expected)
    return {false, SsViolation{C::kFirstBlockIdentity, 1, s1_expected, s1_expected,
                               blocks[0].zeros}};
  return {true, std::nullopt};
}

std::vector<IntVector> ss_group_basis(int p, int q, int n) {
  if (p < 1 || q <= p || q > n)
    throw Error(ErrorCode::kPrecondition, "need 1 <= p < q <= n");
  if (p >= 2 && 2 * p > q)
    throw Error(ErrorCode::kNotSsGroup, "group [" + std::to_string(p) + ", " +
                                            std::to_string(q - 1) + "] has no {-1,0,1} basis");
  std::vector<IntVector> out;
  const int chain_start = p == 1 ? 1 : p + 1;
  for (int i = chain_start; i <= q - 1; ++i) {
    IntVector v(n, 0);
    v[i - 1] = 1;
    v[i] = -1;
    out.push_back(std::move(v));
  }
  if (p >= 2) {
    IntVector v(n, 0);
    for (int i = 0; i < p; ++i) v[i] = 1;
    for (int i = p; i < 2 * p; ++i) v[i] = -1;
    out.push_back(std::move(v));
  }
  return out;
}

SsBasis ss_eigenbasis(const ThresholdGraph& g) {
  const auto verdict = is_simply_structured(g);
  if (!verdict.simply_structured)
    throw Error(ErrorCode::kNotSs, g.sequence() + ": " + verdict.violation->describe());

  const int n = g.order();
  auto bounds = group_boundaries(g);
  SsBasis basis;
  for (auto it = bounds.groups.rbegin(); it != bounds.groups.rend(); ++it)
    for (auto& v : ss_group_basis(it->first, it->last + 1, n)) {
      basis.vectors.push_back(std::move(v));
      basis.eigenvalues.push_back(it->eigenvalue);
    }
  basis.vectors.emplace_back(n, 1);
  basis.eigenvalues.push_back(0);

  const IntMatrix lap = laplacian(g);
  for (std::size_t k = 0; k < basis.vectors.size(); ++k) {
    const auto& v = basis.vectors[k];
    if (!std::all_of(v.begin(), v.end(), [](Int x) { return x >= -1 && x <= 1; }))
      throw Error(ErrorCode::kVerifyFailed, "basis entry outside {-1,0,1}");
    const IntVector lv = multiply(lap, v);
    for (int i = 0; i < n; ++i)
      if (lv[i] != basis.eigenvalues[k] * v[i])
        throw Error(ErrorCode::kVerifyFailed, "constructed vector is not an eigenvector");
  }
  if (basis.vectors.size() != static_cast<std::size_t>(n) || rank(basis.matrix()) != std::size_t(n))
    throw Error(ErrorCode::kVerifyFailed, "constructed basis is not of full rank");
  return basis;
}

namespace {

struct Enumerator {
  std::vector<IntVector> scaled_rows;  // D * basis rows
  Int scale = 1;
  std::size_t n = 0;
  std::size_t node_limit = SIZE_MAX;
  std::size_t* visited = nullptr;
  std::vector<IntVector>* found = nullptr;

  void run(std::size_t k, IntVector& acc, bool nonzero) {
    if (++*visited > node_limit)
      throw Error(ErrorCode::kBudget, "ternary enumeration exceeded its node budget");
    if (k == scaled_rows.size()) {
      if (nonzero) emit(acc);
      return;
    }
    run(k + 1, acc, nonzero);
    for (Int c : {Int{1}, Int{-1}}) {
      for (std::size_t i = 0; i < n; ++i) acc[i] += c * scaled_rows[k][i];
      run(k + 1, acc, true);
      for (std::size_t i = 0; i < n; ++i) acc[i] -= c * scaled_rows[k][i];
    }
  }

  void emit(const IntVector& acc) {
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (acc[i] == 0)
        v[i] = 0;
      else if (acc[i] == scale)
        v[i] = 1;
      else if (acc[i] == -scale)
        v[i] = -1;
      else
        return;
    }
    const auto first = std::find_if(v.begin(), v.end(), [](Int x) { return x != 0; });
    if (*first < 0) return;
    found->push_back(std::move(v));
  }
};

}  // namespace

TernaryEnumeration enumerate_ternary_eigenvectors(const IntMatrix& lap, std::size_t node_limit) {
  const std::size_t n = lap.rows();
  TernaryEnumeration out;
  int total_dimension = 0;
  for (Int mu = static_cast<Int>(n); mu >= 0; --mu) {
    IntMatrix shifted = lap;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= mu;
    const auto null = nullspace(shifted);
    if (null.dimension() == 0) continue;
    total_dimension += static_cast<int>(null.dimension());

    Enumerator e;
    e.n = n;
    e.node_limit = node_limit;
    e.visited = &out.visited;
    mpz_class denom = 1;
    for (std::size_t k = 0; k < null.dimension(); ++k)
      for (std::size_t i = 0; i < n; ++i) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(),
                                                    null.basis(k, i).get_den_mpz_t());
    if (!denom.fits_slong_p()) throw Error(ErrorCode::kTooLarge, "null-space denominators overflow");
    e.scale = denom.get_si();
    for (std::size_t k = 0; k < null.dimension(); ++k) {
      IntVector row(n);
      for (std::size_t i = 0; i < n; ++i) {
        const mpq_class scaled = null.basis(k, i) * denom;
        row[i] = mpz_class(scaled.get_num()).get_si();
      }
      e.scaled_rows.push_back(std::move(row));
    }

    TernaryEigenspace space;
    space.eigenvalue = mu;
    space.dimension = static_cast<int>(null.dimension());
    e.found = &space.vectors;
    IntVector acc(n, 0);
    e.run(0, acc, false);
    RankAccumulator acc_rank(n);
    for (const auto& v : space.vectors) {
      acc_rank.insert(v);
      if (acc_rank.rank() == static_cast<std::size_t>(space.dimension)) break;
    }
    space.rank = static_cast<int>(acc_rank.rank());
    out.eigenspaces.push_back(std::move(space));
  }
  out.integral = total_dimension == static_cast<int>(n);
  return out;
}

bool ss_oracle(const ThresholdGraph& g) {
  if (g.order() > kOracleMaxOrder)
    throw Error(ErrorCode::kTooLarge, "oracle is limited to " + std::to_string(kOracleMaxOrder) +
                                          " vertices");
  const auto e = enumerate_ternary_eigenvectors(laplacian(g));
  if (!e.integral) return false;
  return std::all_of(e.eigenspaces.begin(), e.eigenspaces.end(),
                     [](const TernaryEigenspace& s) { return s.spanned(); });
}

}  // namespace threshold
