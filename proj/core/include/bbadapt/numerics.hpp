#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace bbadapt {

using Vec = std::vector<double>;

/// Dense row-major matrix of 64-bit reals.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vec values;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), values(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }

  std::span<double> row(std::size_t r) {
    return std::span<double>(values.data() + r * cols, cols);
  }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(values.data() + r * cols, cols);
  }

  Vec row_copy(std::size_t r) const {
    return Vec(values.begin() + static_cast<std::ptrdiff_t>(r * cols),
               values.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
  }

  bool all_finite() const;
};

/// Discrete probability distribution: entries in [0,1], sum within 1e-9 of 1.
struct ProbVector {
  Vec values;

  ProbVector() = default;
  explicit ProbVector(Vec v) : values(std::move(v)) {}

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }

  bool is_valid() const;
  /// Throws InvalidInput if the invariant does not hold.
  void validate() const;
};

bool all_finite(std::span<const double> xs);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> xs);
double squared_distance(std::span<const double> a, std::span<const double> b);

/// Numerically stable softmax (max subtraction). Throws InvalidInput on an
/// empty or non-finite input.
ProbVector softmax(std::span<const double> v);

/// Shannon entropy in nats, with 0*ln(0) := 0. Result is in [0, ln(len)].
double entropy(const ProbVector& p);

/// -sum(target_k * ln(pred_k)), pred clamped below at 1e-12 before the log.
/// cross_entropy(p, p) == entropy(p).
double cross_entropy(const ProbVector& target, const ProbVector& pred);

/// Inner-product cosine in [-1, 1]. Throws DegenerateInput on zero norm.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

/// Clamp used before every log of a probability.
inline constexpr double kLogClampEpsilon = 1e-12;

struct KmeansResult {
  Matrix centers;                        // m x d
  std::vector<std::size_t> assignments;  // point -> center
  double objective = 0.0;                // sum of squared distances
  std::vector<double> objective_history; // per Lloyd iteration
};

/// Lloyd's algorithm with k-means++ seeding from the seeded PRNG.
/// Empty clusters are re-seeded at the point currently farthest from its
/// assigned center (lowest index on ties). Stops at max_iter or when the
/// objective improves by less than tol.
KmeansResult kmeans(const Matrix& points, std::size_t m, std::uint64_t seed,
                    std::size_t max_iter = 100, double tol = 1e-6);

/// A differentiable scalar function: value and analytic gradient at params.
using LossFn = std::function<std::pair<double, Vec>(const Vec&)>;

/// Central finite differences per coordinate; returns the max relative error
/// |g_a - g_fd| / max(1, |g_a|, |g_fd|) over all coordinates.
double grad_check(const LossFn& loss_fn, const Vec& params, double h = 1e-5);

}  // namespace bbadapt
