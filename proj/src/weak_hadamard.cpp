#include "threshold/weak_hadamard.hpp"

#include <algorithm>
#include <numeric>

#include "threshold/error.hpp"
#include "threshold/simply_structured.hpp"

namespace threshold {

std::string WeakHadamardVerdict::describe() const {
  const auto at = "(" + std::to_string(row + 1) + ", " + std::to_string(col + 1) + ")";
  switch (violation) {
    case Violation::kNone:
      return "weak Hadamard";
    case Violation::kNotSquare:
      return "matrix is not square";
    case Violation::kEntryRange:
      return "entry " + at + " is outside {-1, 0, 1}";
    case Violation::kNotTridiagonal:
      return "W^T W has a nonzero entry at " + at;
    case Violation::kSingular:
      return "W is singular";
  }
  return {};
}

WeakHadamardVerdict is_weak_hadamard(const IntMatrix& w) {
  using V = WeakHadamardVerdict::Violation;
  if (!w.square()) return {V::kNotSquare};
  const std::size_t n = w.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (w(i, j) < -1 || w(i, j) > 1) return {V::kEntryRange, i, j};
  const auto gram = w.transpose() * w;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j)
      if (gram(i, j) != 0) return {V::kNotTridiagonal, i, j};
  if (determinant(w) == 0) return {V::kSingular};
  return {};
}

std::optional<std::vector<Int>> diagonalizes(const IntMatrix& w, const IntMatrix& lap) {
  if (!w.square() || !lap.square() || w.rows() != lap.rows()) return std::nullopt;
  const auto lw = lap * w;
  std::vector<Int> lambda(w.cols());
  for (std::size_t j = 0; j < w.cols(); ++j) {
    std::size_t pivot = w.rows();
    for (std::size_t i = 0; i < w.rows(); ++i)
      if (w(i, j) != 0) {
        pivot = i;
        break;
      }
    if (pivot == w.rows() || lw(pivot, j) % w(pivot, j) != 0) return std::nullopt;
    lambda[j] = lw(pivot, j) / w(pivot, j);
    for (std::size_t i = 0; i < w.rows(); ++i)
      if (lw(i, j) != lambda[j] * w(i, j)) return std::nullopt;
  }
  return lambda;
}

std::optional<std::vector<Int>> diagonalizes(const IntMatrix& w, const ThresholdGraph& g) {
  return diagonalizes(w, laplacian(g));
}

WhdCertificate WhdCertificate::certify(IntMatrix w, IntMatrix lap,
                                       std::vector<std::string> provenance) {
  const auto verdict = is_weak_hadamard(w);
  if (!verdict.ok()) throw Error(ErrorCode::kVerifyFailed, verdict.describe());
  auto lambda = diagonalizes(w, lap);
  if (!lambda) throw Error(ErrorCode::kVerifyFailed, "L W != W Lambda");
  return WhdCertificate(std::move(w), std::move(lap), std::move(*lambda), std::move(provenance));
}

namespace {

Int pow2(int e) { return Int{1} << e; }

// Largest e >= 0 with 2^e * s <= n, i.e. floor(log2(n / s)).
int floor_log2_ratio(Int n, Int s) {
  int e = 0;
  while ((s << (e + 1)) <= n) ++e;
  return e;
}

std::optional<JoinDecomposition> clique_join_conditions(const ThresholdGraph& g) {
  if (!is_simply_structured(g).simply_structured) return std::nullopt;
  const auto blocks = g.blocks();
  const Int n = g.order();
  const Int s1 = blocks[0].zeros;
  const int top = floor_log2_ratio(n, s1);

  JoinDecomposition d;
  d.route = WhdRoute::kCliqueJoins;
  if (s1 >= 3) {
    for (int l = 1; l <= top && !d.base; ++l) {
      const Int m = blocks[0].ones - (pow2(l) - 1) * s1;
      if (m >= 0 && m <= 2 * (pow2(l) - 1)) d.base = JoinParams{l, static_cast<int>(m)};
    }
    if (!d.base) return std::nullopt;
  }

  Int prefix = blocks[0].zeros + blocks[0].ones;
  for (std::size_t k = 2; k <= blocks.size(); ++k) {
    const auto& b = blocks[k - 1];
    // 2^{k-1} grows past any realistic top quickly; stop before it overflows.
    const Int upper = k - 1 >= 62 ? -1 : top - pow2(static_cast<int>(k - 1));
    std::optional<JoinParams> found;
    for (int l = 1; l <= upper && !found; ++l) {
      const Int f = pow2(l) - 1;
      const Int m = b.zeros - f * prefix;
      if (m < 0 || m > 2 * f) continue;
      if (b.ones - f * (prefix + b.zeros) == m) found = JoinParams{l, static_cast<int>(m)};
    }
    if (!found) return std::nullopt;
    d.steps.push_back(*found);
    prefix += b.zeros + b.ones;
  }
  return d;
}

}  // namespace

std::string JoinDecomposition::describe() const {
  switch (route) {
    case WhdRoute::kSplitComplete:
      return "K_s^c v K_t with t - s in {0,1,2}";
    case WhdRoute::kSplitPlusEdge:
      return "(K_2 u K_{k-2}^c) v K_t with t - k in {0,1,2}";
    case WhdRoute::kCliqueJoins:
      break;
  }
  std::string out = "join conditions";
  if (base) out += "; t_1: l=" + std::to_string(base->l) + " m=" + std::to_string(base->m);
  for (std::size_t i = 0; i < steps.size(); ++i)
    out += "; block " + std::to_string(i + 2) + ": l=" + std::to_string(steps[i].l) +
           " m=" + std::to_string(steps[i].m);
  return out;
}

std::optional<JoinDecomposition> whd_sufficient(const ThresholdGraph& g) {
  const auto blocks = g.blocks();
  if (blocks.size() == 1) {
    const int gap = blocks[0].ones - blocks[0].zeros;
    if (gap >= 0 && gap <= 2) return JoinDecomposition{WhdRoute::kSplitComplete, {}, {}};
  }
  if (auto d = clique_join_conditions(g)) return d;
  if (blocks.size() == 2 && blocks[0] == Block{1, 1}) {
    const int k = blocks[1].zeros + 2;
    const int gap = blocks[1].ones - k;
    if (k >= 4 && gap >= 0 && gap <= 2) return JoinDecomposition{WhdRoute::kSplitPlusEdge, {}, {}};
  }
  return std::nullopt;
}

namespace {

IntVector difference(int n, int i) {
  IntVector v(n, 0);
  v[i - 1] = 1;
  v[i] = -1;
  return v;
}

IntMatrix clique_laplacian(int n) {
  IntMatrix l(n, n, -1);
  for (int i = 0; i < n; ++i) l(i, i) = n - 1;
  return l;
}

}  // namespace

WhdCertificate clique_certificate(int n) {
  if (n < 1) throw Error(ErrorCode::kPrecondition, "clique order must be positive");
  std::vector<IntVector> cols;
  for (int i = 1; i < n; ++i) cols.push_back(difference(n, i));
  cols.emplace_back(n, 1);
  return WhdCertificate::certify(IntMatrix::from_columns(cols), clique_laplacian(n),
                                 {"clique K_" + std::to_string(n)});
}

WhdCertificate split_certificate(int s, int t) {
  if (s < 2 || t < 1) throw Error(ErrorCode::kPrecondition, "split base needs s >= 2, t >= 1");
  if (t - s < 0 || t - s > 2)
    throw Error(ErrorCode::kJoinGap, "t - s = " + std::to_string(t - s) + " not in {0, 1, 2}");
  const int n = s + t;
  std::vector<IntVector> cols;
  for (int i = 1; i < s; ++i) cols.push_back(difference(n, i));
  for (int i = s + 1; i < n; ++i) cols.push_back(difference(n, i));
  IntVector v(n, -1);
  std::fill(v.begin(), v.begin() + s, 1);
  v[n - 1] = t - s - 1;
  cols.push_back(v);
  cols.emplace_back(n, 1);

  IntMatrix lap(n, n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && (i >= s || j >= s)) lap(i, j) = -1;
  for (int i = 0; i < n; ++i) lap(i, i) = i < s ? t : n - 1;
  return WhdCertificate::certify(
      IntMatrix::from_columns(cols), std::move(lap),
      {"split K_" + std::to_string(s) + "^c v K_" + std::to_string(t)});
}

WhdCertificate join_step(const WhdCertificate& h, int clique) {
  const int k = h.order();
  const int gap = clique - k;
  if (gap < 0 || gap > 2)
    throw Error(ErrorCode::kJoinGap, "n - k = " + std::to_string(gap) + " not in {0, 1, 2}");
  const int n = k + clique;

  std::vector<IntVector> cols;
  int kernel_columns = 0;
  for (std::size_t j = 0; j < h.matrix().cols(); ++j) {
    if (h.lambda()[j] == 0) {
      ++kernel_columns;
      continue;
    }
    auto c = h.matrix().column(j);
    c.resize(n, 0);
    cols.push_back(std::move(c));
  }
  if (kernel_columns != 1)
    throw Error(ErrorCode::kPrecondition, "H must be connected (one kernel column)");
  for (int i = k + 1; i < n; ++i) cols.push_back(difference(n, i));
  IntVector v(n, -1);
  std::fill(v.begin(), v.begin() + k, 1);
  v[n - 1] = clique - k - 1;
  cols.push_back(v);
  cols.emplace_back(n, 1);

  // L(H v K_a) = [[L_H + aI, -J], [-J, (a + k)I - J]].
  IntMatrix lap(n, n, -1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) lap(i, j) = h.laplacian()(i, j) + (i == j ? clique : 0);
  for (int i = k; i < n; ++i) lap(i, i) = n - 1;

  auto provenance = h.provenance();
  provenance.push_back("join K_" + std::to_string(clique));
  return WhdCertificate::certify(IntMatrix::from_columns(cols), std::move(lap),
                                 std::move(provenance));
}

std::optional<std::vector<int>> split_into_joins(int size, int prefix) {
  if (size < 1 || prefix < 1) return std::nullopt;
  for (int l = 1; l < 31; ++l) {
    const Int f = pow2(l) - 1;
    if (f * prefix > size) break;
    const Int m = size - f * prefix;
    if (m > 2 * f) continue;
    std::vector<int> sizes;
    Int rest = m;
    Int order = prefix;
    for (int j = 1; j <= l; ++j) {
      const Int weight = pow2(l - j);
      const Int digit = std::min<Int>(2, rest / weight);
      rest -= digit * weight;
      sizes.push_back(static_cast<int>(order + digit));
      order += order + digit;
    }
    if (rest == 0) return sizes;
  }
  return std::nullopt;
}

namespace {

// Certificate built from joins of cliques whose eigenvector groups follow the
// blocks of g; nullopt when a block cannot be split.
std::optional<WhdCertificate> join_certificate(const ThresholdGraph& g,
                                               std::vector<std::string>& trace) {
  const auto blocks = g.blocks();
  std::optional<WhdCertificate> cert;
  int order = 0;
  auto extend = [&](int size) {
    const auto sizes = split_into_joins(size, order);
    if (!sizes) {
      trace.push_back("block of size " + std::to_string(size) + " after " +
                      std::to_string(order) + " vertices has no join split");
      return false;
    }
    for (int a : *sizes) cert = join_step(*cert, a);
    order += size;
    return true;
  };

  if (blocks[0].zeros == 1) {
    cert = clique_certificate(blocks[0].ones + 1);
    order = blocks[0].ones + 1;
  } else {
    const int s = blocks[0].zeros;
    const auto sizes = split_into_joins(blocks[0].ones, s);
    if (!sizes) {
      trace.push_back("t_1 = " + std::to_string(blocks[0].ones) + " has no join split over s_1 = " +
                      std::to_string(s));
      return std::nullopt;
    }
    cert = split_certificate(s, sizes->front());
    for (std::size_t i = 1; i < sizes->size(); ++i) cert = join_step(*cert, (*sizes)[i]);
    order = s + blocks[0].ones;
  }
  for (std::size_t k = 1; k < blocks.size(); ++k)
    if (!extend(blocks[k].zeros) || !extend(blocks[k].ones)) return std::nullopt;

  auto provenance = cert->provenance();
  provenance.push_back("shared eigenbasis transfer to " + g.sequence());
  return WhdCertificate::certify(cert->matrix(), laplacian(g), std::move(provenance));
}

}  // namespace

WhdConstruction whd_construct(const ThresholdGraph& g, std::size_t search_budget) {
  WhdConstruction out;
  const auto ss = is_simply_structured(g);
  if (!ss.simply_structured) {
    out.proven_absent = true;
    out.trace.push_back("not simply structured: " + ss.violation->describe());
    return out;
  }
  out.witness = whd_sufficient(g);
  try {
    out.certificate = join_certificate(g, out.trace);
    if (out.certificate) return out;
  } catch (const Error& e) {
    out.trace.push_back(std::string("join construction: ") + e.what());
  }
  try {
    auto found = whd_search(g, search_budget);
    out.certificate = std::move(found.certificate);
    out.proven_absent = !out.certificate;
    out.trace.push_back((out.certificate ? "search found a certificate after "
                                         : "search exhausted after ") +
                        std::to_string(found.nodes) + " nodes");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudget) throw;
    out.trace.push_back(e.what());
  }
  return out;
}

namespace {

// Finds `dim` independent vectors from `pool` whose non-orthogonality graph is
// a disjoint union of paths.
class ForestSearch {
 public:
  ForestSearch(const std::vector<IntVector>& pool, int dim, std::size_t n, std::size_t& nodes,
               std::size_t budget)
      : pool_(pool), dim_(dim), nodes_(nodes), budget_(budget) {
    ranks_.emplace_back(n);
  }

  bool run() { return descend(0); }

  /// Chosen vectors ordered along each path.
  std::vector<IntVector> ordered() const {
    const std::size_t c = chosen_.size();
    std::vector<std::vector<std::size_t>> adj(c);
    for (std::size_t a = 0; a < c; ++a)
      for (std::size_t b = a + 1; b < c; ++b)
        if (dot(pool_[chosen_[a]], pool_[chosen_[b]]) != 0) {
          adj[a].push_back(b);
          adj[b].push_back(a);
        }
    std::vector<bool> seen(c, false);
    std::vector<IntVector> out;
    for (std::size_t start = 0; start < c; ++start) {
      if (seen[start] || adj[start].size() > 1) continue;
      std::size_t prev = c, cur = start;
      while (cur != c) {
        seen[cur] = true;
        out.push_back(pool_[chosen_[cur]]);
        std::size_t next = c;
        for (auto x : adj[cur])
          if (x != prev) next = x;
        prev = cur;
        cur = next;
      }
    }
    return out;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) throw Error(ErrorCode::kBudget, "search budget exhausted");
  }

  // Chosen vectors that pool_[j] is not orthogonal to, if adding it keeps a
  // linear forest.
  std::optional<std::vector<std::size_t>> attachments(std::size_t j) const {
    std::vector<std::size_t> touch;
    for (std::size_t a = 0; a < chosen_.size(); ++a) {
      if (dot(pool_[j], pool_[chosen_[a]]) == 0) continue;
      if (degree_[a] >= 2 || touch.size() == 2) return std::nullopt;
      touch.push_back(a);
    }
    if (touch.size() == 2 && component_[touch[0]] == component_[touch[1]]) return std::nullopt;
    return touch;
  }

  // Forward check: the candidates still attachable must reach full rank.
  bool completable(std::size_t start) {
    auto rank = ranks_.back();
    for (std::size_t j = start; j < pool_.size(); ++j) {
      tick();
      if (!attachments(j)) continue;
      if (rank.insert(pool_[j]) && static_cast<int>(rank.rank()) == dim_) return true;
    }
    return false;
  }

  bool descend(std::size_t start) {
    if (static_cast<int>(chosen_.size()) == dim_) return true;
    if (!completable(start)) return false;
    const std::size_t need = dim_ - chosen_.size();
    for (std::size_t j = start; j + need <= pool_.size(); ++j) {
      tick();
      const auto touch = attachments(j);
      if (!touch) continue;
      const auto& v = pool_[j];
      if (!ranks_.back().independent(v)) continue;

      auto rank = ranks_.back();
      rank.insert(v);
      ranks_.push_back(std::move(rank));
      const auto saved_components = component_;
      const std::size_t label = touch->empty() ? chosen_.size() : component_[touch->front()];
      if (touch->size() == 2) {
        const auto other = component_[(*touch)[1]];
        for (auto& c : component_)
          if (c == other) c = label;
      }
      for (auto a : *touch) ++degree_[a];
      chosen_.push_back(j);
      degree_.push_back(touch->size());
      component_.push_back(label);

      if (descend(j + 1)) return true;

      chosen_.pop_back();
      degree_.pop_back();
      component_ = saved_components;
      for (auto a : *touch) --degree_[a];
      ranks_.pop_back();
    }
    return false;
  }

  const std::vector<IntVector>& pool_;
  int dim_;
  std::size_t& nodes_;
  std::size_t budget_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> component_;
  std::vector<RankAccumulator> ranks_;
};

std::size_t support(const IntVector& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Int x) { return x != 0; }));
}

}  // namespace

namespace {

// {-1,0,1} vectors of span{x^p, ..., x^{q-1}}, which is
// {v : v_1 = ... = v_p, v_i = 0 for i > q, v_1 + ... + v_q = 0},
// with at most `max_support` nonzeros and first nonzero entry +1.
class GroupVectors {
 public:
  GroupVectors(int p, int q, int n, int max_support, std::size_t& nodes, std::size_t budget)
      : p_(p), q_(q), max_support_(max_support), nodes_(nodes), budget_(budget), v_(n, 0) {}

  std::vector<IntVector> run() {
    for (int c : {0, 1}) {
      if (c == 1 && p_ > max_support_) continue;
      std::fill(v_.begin(), v_.end(), 0);
      for (int i = 0; i < p_; ++i) v_[i] = c;
      fill(p_, -c * p_, c == 1 ? p_ : 0, c == 1);
    }
    std::stable_sort(out_.begin(), out_.end(), [](const IntVector& a, const IntVector& b) {
      const auto sa = support(a), sb = support(b);
      if (sa != sb) return sa < sb;
      return a > b;
    });
    return std::move(out_);
  }

 private:
  // Positions pos..q-1 (0-based) still open; they must add up to `need`.
  void fill(int pos, Int need, int nonzeros, bool signed_already) {
    if (++nodes_ > budget_) throw Error(ErrorCode::kBudget, "search budget exhausted");
    const Int gap = need < 0 ? -need : need;
    if (gap > q_ - pos || nonzeros + gap > max_support_) return;
    if (pos == q_) {
      if (nonzeros > 0) out_.push_back(v_);
      return;
    }
    for (int x : {0, 1, -1}) {
      if (x == -1 && !signed_already) continue;
      if (x != 0 && nonzeros == max_support_) continue;
      v_[pos] = x;
      fill(pos + 1, need - x, nonzeros + (x != 0), signed_already || x != 0);
    }
    v_[pos] = 0;
  }

  int p_;
  int q_;
  int max_support_;
  std::size_t& nodes_;
  std::size_t budget_;
  IntVector v_;
  std::vector<IntVector> out_;
};

}  // namespace

WhdSearchResult whd_search(const ThresholdGraph& g, std::size_t budget) {
  const auto ss = is_simply_structured(g);
  if (!ss.simply_structured)
    throw Error(ErrorCode::kPrecondition, "whd_search needs a simply structured graph");
  const int n = g.order();
  const auto bounds = group_boundaries(g);

  WhdSearchResult out;
  std::vector<IntVector> columns;
  // Eigenvalue groups are searched independently: vectors from different
  // eigenspaces are orthogonal, so only within-group adjacency matters.
  // Candidates are admitted by increasing support; only a failure with the
  // support cap at its maximum proves that no diagonalizer exists.
  for (const auto& group : bounds.groups) {
    const int p = group.first, q = group.last + 1;
    bool found = false;
    for (int cap = 2; cap <= q && !found; ++cap) {
      // Capped passes get a slice of what is left; only the uncapped pass may
      // spend the rest and prove absence.
      const bool last = cap == q;
      if (out.nodes >= budget) throw Error(ErrorCode::kBudget, "search budget exhausted");
      const std::size_t limit =
          last ? budget : out.nodes + std::max<std::size_t>(1, (budget - out.nodes) / 4);
      try {
        const auto pool = GroupVectors(p, q, n, cap, out.nodes, limit).run();
        RankAccumulator span(static_cast<std::size_t>(n));
        for (const auto& v : pool)
          if (span.insert(v) && static_cast<int>(span.rank()) == group.size()) break;
        if (static_cast<int>(span.rank()) < group.size()) continue;
        ForestSearch search(pool, group.size(), static_cast<std::size_t>(n), out.nodes, limit);
        if (search.run()) {
          for (auto& c : search.ordered()) columns.push_back(std::move(c));
          found = true;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBudget || last) throw;
        out.nodes = std::min(out.nodes, limit);
      }
    }
    if (!found) return out;
  }
  columns.emplace_back(n, 1);
  out.certificate = WhdCertificate::certify(IntMatrix::from_columns(columns), laplacian(g),
                                            {"search (" + std::to_string(out.nodes) + " nodes)"});
  return out;
}

}  // namespace threshold
