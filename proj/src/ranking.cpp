#include "aces/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace aces {

double WeightVector::sum() const {
  double s = 0.0;
  for (double w : values) s += w;
  return s;
}

void WeightVector::validate(std::size_t m) const {
  if (values.size() != m) {
    throw ValidationError("weight vector length " + std::to_string(values.size()) +
                          " does not match m = " + std::to_string(m));
  }
  bool any_positive = false;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] < 0.0 || std::isnan(values[j])) {
      throw ValidationError("negative weight at test " + std::to_string(j));
    }
    any_positive |= values[j] > 0.0;
  }
  if (!any_positive) throw ValidationError("weight vector is all zero");
}

WeightVector WeightVector::normalized() const {
  const double s = sum();
  WeightVector out;
  out.values.reserve(values.size());
  for (double w : values) out.values.push_back(w / s);
  return out;
}

WeightVector WeightVector::uniform(std::size_t m) {
  WeightVector w;
  w.values.assign(m, 1.0 / static_cast<double>(m));
  return w;
}

double auc(const std::vector<double>& scores, const std::vector<std::uint8_t>& labels) {
  const std::size_t n = scores.size();
  if (labels.size() != n) throw ValidationError("auc: scores and labels differ in length");

  std::size_t n_pos = 0;
  for (std::uint8_t y : labels) n_pos += y;
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0) throw ValidationError("AUC undefined: single-class labels");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // rank_x2[i] = twice the 1-based midrank, an exact integer.
  std::vector<double> rank_x2(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t k = i;
    while (k + 1 < n && scores[order[k + 1]] == scores[order[i]]) ++k;
    const double r2 = static_cast<double>(i + 1 + k + 1);
    for (std::size_t t = i; t <= k; ++t) rank_x2[order[t]] = r2;
    i = k + 1;
  }

  double u2 = 0.0;  // 2 * (rank-sum U statistic); exact in double
  for (std::size_t t = 0; t < n; ++t)
    if (labels[t]) u2 += rank_x2[t];
  u2 -= static_cast<double>(n_pos) * static_cast<double>(n_pos + 1);
  return u2 / (2.0 * static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

namespace {

// Compensated dot of a binary row with the weights. The products are exact
// (entries are 0/1), so the compensation only tracks addition error; under
// uniform weights the result is the correctly rounded fl(k * w) for a row
// with k passes, which keeps equal vote counts exactly tied.
double compensated_row_score(const PassMatrix& matrix, std::size_t i,
                             const std::vector<double>& w) {
  double sum = 0.0, comp = 0.0;
  const std::uint8_t* row = matrix.entries.data() + i * matrix.m;
  for (std::size_t j = 0; j < matrix.m; ++j) {
    if (!row[j]) continue;
    const double y = w[j] - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

ScoreVector weighted_scores(const PassMatrix& matrix, const WeightVector& weights) {
  weights.validate(matrix.m);
  ScoreVector s;
  s.values.resize(matrix.n);
  for (std::size_t i = 0; i < matrix.n; ++i)
    s.values[i] = compensated_row_score(matrix, i, weights.values);
  return s;
}

ScoreVector loo_scores(const PassMatrix& matrix, const WeightVector& weights, std::size_t j) {
  weights.validate(matrix.m);
  if (j >= matrix.m) throw ValidationError("test index out of range: " + std::to_string(j));
  // Direct compensated sum over the remaining tests. Under uniform weights two
  // rows with equal remaining vote counts land on the same double, so ties
  // stay exact; the statistical verifiers rely on that.
  ScoreVector s;
  s.values.resize(matrix.n);
  for (std::size_t i = 0; i < matrix.n; ++i) {
    double sum = 0.0, comp = 0.0;
    const std::uint8_t* row = matrix.entries.data() + i * matrix.m;
    for (std::size_t r = 0; r < matrix.m; ++r) {
      if (r == j || !row[r]) continue;
      const double y = weights.values[r] - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    s.values[i] = sum;
  }
  return s;
}

LooAucVector loo_auc_all(const PassMatrix& matrix, const WeightVector& weights) {
  weights.validate(matrix.m);
  const ScoreVector full = weighted_scores(matrix, weights);

  LooAucVector out;
  out.values.assign(matrix.m, 0.0);
  out.defined.assign(matrix.m, 0);

  // Single-pass sweep: each S^(-j) is the full score minus the held-out
  // contribution. The closed-form weighting is defined against exactly these
  // subtracted scores.
  std::vector<double> loo(matrix.n);
  std::vector<std::uint8_t> column(matrix.n);
  for (std::size_t j = 0; j < matrix.m; ++j) {
    if (matrix.column_constant(j)) continue;
    for (std::size_t i = 0; i < matrix.n; ++i) {
      column[i] = matrix.at(i, j);
      loo[i] = full.values[i] - weights.values[j] * column[i];
    }
    out.values[j] = auc(loo, column);
    out.defined[j] = 1;
  }
  return out;
}

Ranking rank(const ScoreVector& scores) {
  Ranking r;
  r.order.resize(scores.values.size());
  std::iota(r.order.begin(), r.order.end(), 0);
  std::stable_sort(r.order.begin(), r.order.end(), [&](std::size_t a, std::size_t b) {
    return scores.values[a] > scores.values[b];
  });
  std::size_t i = 0;
  while (i < r.order.size()) {
    std::size_t k = i;
    while (k + 1 < r.order.size() &&
           scores.values[r.order[k + 1]] == scores.values[r.order[i]])
      ++k;
    r.group_sizes.push_back(k - i + 1);
    i = k + 1;
  }
  return r;
}

double pass_at_k_rerank(const Ranking& ranking, const LabelVector& labels, std::size_t k) {
  const std::size_t n = ranking.order.size();
  if (labels.values.size() != n) throw ValidationError("labels length does not match ranking");
  if (k < 1 || k > n) throw ValidationError("k out of range: " + std::to_string(k));

  double fail = 1.0;
  std::size_t remaining = k;
  std::size_t pos = 0;
  for (std::size_t g : ranking.group_sizes) {
    if (remaining == 0) break;
    std::size_t correct = 0;
    for (std::size_t t = pos; t < pos + g; ++t) correct += labels.values[ranking.order[t]];
    pos += g;

    const std::size_t slots = std::min(remaining, g);
    if (g - correct < slots) {
      fail = 0.0;
      break;
    }
    for (std::size_t i = 0; i < slots; ++i)
      fail *= static_cast<double>(g - correct - i) / static_cast<double>(g - i);
    if (fail == 0.0) break;
    remaining -= slots;
  }
  return 1.0 - fail;
}

double pass_at_k_unbiased(std::size_t n, std::size_t correct, std::size_t k) {
  if (correct > n) throw ValidationError("correct count exceeds n");
  if (k < 1 || k > n) throw ValidationError("k out of range: " + std::to_string(k));
  if (n - correct < k) return 1.0;
  double fail = 1.0;
  for (std::size_t i = 0; i < k; ++i)
    fail *= static_cast<double>(n - correct - i) / static_cast<double>(n - i);
  return 1.0 - fail;
}

}  // namespace aces
