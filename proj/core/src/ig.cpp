// SPDX-License-Identifier: Apache-2.0
#include "driftshap/ig.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "parallel.hpp"

namespace driftshap {

AttributionReport group_ig(const ValueFunctionContext& ctx, const GroupSpec& spec,
                           const PathConfig& cfg) {
  if (cfg.steps < 1) throw InputError("path integration needs at least 1 step");
  if (cfg.fd_epsilon <= 0.0) throw InputError("finite-difference epsilon must be positive");
  const auto caps = capabilities(ctx.metric());
  if (!caps.differentiable) {
    throw InputError(std::string("metric '") + std::string(to_string(ctx.metric())) +
                     "' is not differentiable in the sample points; path attribution supports "
                     "w1 and evd only");
  }
  if (spec.m() != ctx.explicand().m() || spec.n() != ctx.explicand().n()) {
    throw InputError("group spec shape does not match the samples");
  }

  const Matrix& explicand = ctx.explicand().values();
  const Matrix& baseline = ctx.aligned_baseline().values();
  const int m = explicand.rows();
  const int n = explicand.cols();

  // Per-cell step and delta, fixed along the path.
  Matrix epsilon(m, n);
  Matrix delta(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const double scale = std::max(std::abs(explicand(i, j)), std::abs(baseline(i, j)));
      epsilon(i, j) = std::max(cfg.fd_epsilon * scale, 1e-8);
      delta(i, j) = explicand(i, j) - baseline(i, j);
    }
  }

  struct QuadraturePoint {
    double alpha;
    double weight;
  };
  std::vector<QuadraturePoint> points;
  double weight_sum = 0.0;
  if (cfg.rule == QuadratureRule::midpoint) {
    points.reserve(cfg.steps);
    for (int k = 0; k < cfg.steps; ++k) points.push_back({(k + 0.5) / cfg.steps, 1.0});
  } else {
    points.reserve(cfg.steps + 1);
    for (int k = 0; k <= cfg.steps; ++k) {
      points.push_back({static_cast<double>(k) / cfg.steps,
                        (k == 0 || k == cfg.steps) ? 0.5 : 1.0});
    }
  }
  for (const auto& p : points) weight_sum += p.weight;

  // One gradient panel per quadrature point, reduced in point order so the
  // result is identical for any worker count.
  std::vector<std::vector<double>> panels(points.size());
  detail::parallel_for_index(points.size(), cfg.threads, [&](size_t pi) {
    const double alpha = points[pi].alpha;
    Matrix path_point(m, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        path_point(i, j) = baseline(i, j) + alpha * delta(i, j);
      }
    }
    const std::vector<double> path_outputs_raw = ctx.model()(path_point);

    std::vector<double> panel(static_cast<size_t>(m) * n, 0.0);
    Matrix probe_row(1, n);
    std::vector<double> outputs = path_outputs_raw;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        if (delta(i, j) == 0.0) continue;  // the (x - x') factor vanishes
        const double eps = epsilon(i, j);
        double plus, minus;
        // Only row i's prediction moves; evaluate the two probes on that row
        // and splice them into the shared output vector.
        std::copy(path_point.row(i).begin(), path_point.row(i).end(), probe_row.row(0).begin());
        probe_row(0, j) = path_point(i, j) + eps;
        outputs[i] = ctx.model()(probe_row)[0];
        {
          std::vector<double> transformed = outputs;
          ctx.transforms().apply(transformed);
          plus = drift(ctx.metric(), transformed, ctx.baseline_outputs(), ctx.histogram());
        }
        probe_row(0, j) = path_point(i, j) - eps;
        outputs[i] = ctx.model()(probe_row)[0];
        {
          std::vector<double> transformed = outputs;
          ctx.transforms().apply(transformed);
          minus = drift(ctx.metric(), transformed, ctx.baseline_outputs(), ctx.histogram());
        }
        outputs[i] = path_outputs_raw[i];
        panel[static_cast<size_t>(i) * n + j] = (plus - minus) / (2.0 * eps);
      }
    }
    panels[pi] = std::move(panel);
  });

  std::vector<double> cell_attribution(static_cast<size_t>(m) * n, 0.0);
  for (size_t p = 0; p < panels.size(); ++p) {
    const double w = points[p].weight;
    for (size_t c = 0; c < panels[p].size(); ++c) cell_attribution[c] += w * panels[p][c];
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      cell_attribution[static_cast<size_t>(i) * n + j] *= delta(i, j) / weight_sum;
    }
  }

  AttributionReport report;
  report.metric = ctx.metric();
  report.method = AttributionMethod::group_ig;
  report.total_drift = ctx.total_drift();
  report.estimator.steps = cfg.steps;
  report.estimator.fd_epsilon = cfg.fd_epsilon;
  report.per_group.reserve(spec.size());
  for (const Group& group : spec.groups()) {
    double sum = 0.0;
    for (int r : group.rows) {
      for (int f : group.features) sum += cell_attribution[static_cast<size_t>(r) * n + f];
    }
    report.per_group.push_back(GroupAttribution{group.name, sum, {}, {}});
  }
  return report;
}

double completeness_check(const AttributionReport& report, const ValueFunctionContext& ctx) {
  return std::abs(report.attribution_sum() - ctx.total_drift());
}

}  // namespace driftshap
