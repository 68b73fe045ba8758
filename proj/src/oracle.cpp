#include "islog/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "islog/errors.hpp"
#include "islog/tolerances.hpp"

namespace islog::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// C(n, k) in exact integer arithmetic; desk-scale arguments only.
std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return static_cast<std::size_t>(r);
}

void check_vertices(const std::vector<Distribution>& k_vertices) {
  if (k_vertices.empty()) fail(Errc::DimensionMismatch, "empty vertex set");
  for (const auto& v : k_vertices)
    if (v.size() != k_vertices.front().size())
      fail(Errc::DimensionMismatch, "vertices have different dimensions");
}

// Mixture of the vertices under grid weights c / resolution.
void mix_point(const std::vector<Distribution>& verts, const std::vector<std::size_t>& c,
               double resolution, std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const double w = static_cast<double>(c[v]) / resolution;
    if (w == 0.0) continue;
    for (std::size_t e = 0; e < out.size(); ++e) out[e] += w * verts[v][e];
  }
}

GridMinResult finish_result(const std::vector<Distribution>& verts, std::size_t resolution,
                            std::size_t rank, double value) {
  SimplexGrid grid(verts.size(), resolution);
  std::vector<std::size_t> c;
  grid.composition(rank, c);
  std::vector<double> weights(verts.size());
  for (std::size_t v = 0; v < verts.size(); ++v)
    weights[v] = static_cast<double>(c[v]) / static_cast<double>(resolution);
  std::vector<double> p(verts.front().size());
  mix_point(verts, c, static_cast<double>(resolution), p);
  return GridMinResult{std::move(weights), Distribution(std::move(p)), value, rank};
}

}  // namespace

SimplexGrid::SimplexGrid(std::size_t dimension, std::size_t resolution)
    : dim_(dimension), res_(resolution) {
  if (dim_ < 1) fail(Errc::EmptyAxis, "grid needs at least one dimension");
  if (res_ < 1) fail(Errc::EmptyAxis, "grid needs a positive resolution");
  size_ = binom(res_ + dim_ - 1, dim_ - 1);
}

void SimplexGrid::composition(std::size_t rank, std::vector<std::size_t>& out) const {
  out.assign(dim_, 0);
  std::size_t left = res_;
  for (std::size_t pos = 0; pos + 1 < dim_; ++pos) {
    // Entries at this position run 0,1,...; each choice a leaves
    // binom(left-a+rem-1, rem-1) completions, rem = dim-pos-1.
    const std::size_t rem = dim_ - pos - 1;
    for (std::size_t a = 0; a <= left; ++a) {
      const std::size_t cnt = binom(left - a + rem - 1, rem - 1);
      if (rank < cnt) {
        out[pos] = a;
        left -= a;
        break;
      }
      rank -= cnt;
    }
  }
  out[dim_ - 1] = left;
}

bool SimplexGrid::next_composition(std::vector<std::size_t>& c) {
  const std::size_t k = c.size();
  std::size_t i = k;
  for (std::size_t pos = k; pos-- > 0;) {
    if (c[pos] > 0) {
      i = pos;
      break;
    }
  }
  if (i == k || i == 0) return false;
  if (i == k - 1) {
    c[k - 2] += 1;
    c[k - 1] -= 1;
  } else {
    const std::size_t v = c[i];
    c[i] = 0;
    c[i - 1] += 1;
    c[k - 1] = v - 1;
  }
  return true;
}

std::vector<Distribution> SimplexGrid::points() const {
  std::vector<Distribution> out;
  out.reserve(size_);
  std::vector<std::size_t> c(dim_, 0);
  c[dim_ - 1] = res_;
  do {
    std::vector<double> p(dim_);
    for (std::size_t e = 0; e < dim_; ++e)
      p[e] = static_cast<double>(c[e]) / static_cast<double>(res_);
    out.push_back(Distribution(std::move(p)));
  } while (next_composition(c));
  return out;
}

GridMinResult grid_min_g_serial(const ScoreRule& s, const std::vector<Distribution>& k_vertices,
                                std::size_t resolution) {
  check_vertices(k_vertices);
  const std::size_t d = k_vertices.front().size();
  SimplexGrid grid(k_vertices.size(), resolution);
  std::vector<std::size_t> c;
  grid.composition(0, c);
  std::vector<double> p(d);
  double best = kInf;
  std::size_t best_rank = 0;
  for (std::size_t rank = 0; rank < grid.size(); ++rank) {
    mix_point(k_vertices, c, static_cast<double>(resolution), p);
    const double g = g_value_raw(s, p.data(), d);
    if (g < best) {  // strict: ties keep the lexicographically smallest weights
      best = g;
      best_rank = rank;
    }
    SimplexGrid::next_composition(c);
  }
  return finish_result(k_vertices, resolution, best_rank, best);
}

GridMinResult grid_min_g(const ScoreRule& s, const std::vector<Distribution>& k_vertices,
                         std::size_t resolution) {
  check_vertices(k_vertices);
  const std::size_t d = k_vertices.front().size();
  SimplexGrid grid(k_vertices.size(), resolution);
  const std::size_t total = grid.size();

#ifdef _OPENMP
  const int max_threads = omp_get_max_threads();
#else
  const int max_threads = 1;
#endif
  const std::size_t n_chunks = static_cast<std::size_t>(max_threads);
  std::vector<double> chunk_best(n_chunks, kInf);
  std::vector<std::size_t> chunk_rank(n_chunks, 0);

#pragma omp parallel num_threads(max_threads)
  {
#ifdef _OPENMP
    const std::size_t tid = static_cast<std::size_t>(omp_get_thread_num());
#else
    const std::size_t tid = 0;
#endif
    const std::size_t lo = total * tid / n_chunks;
    const std::size_t hi = total * (tid + 1) / n_chunks;
    if (lo < hi) {
      std::vector<std::size_t> c;
      grid.composition(lo, c);
      std::vector<double> p(d);
      double best = kInf;
      std::size_t best_rank = lo;
      for (std::size_t rank = lo; rank < hi; ++rank) {
        mix_point(k_vertices, c, static_cast<double>(resolution), p);
        const double g = g_value_raw(s, p.data(), d);
        if (g < best) {
          best = g;
          best_rank = rank;
        }
        SimplexGrid::next_composition(c);
      }
      chunk_best[tid] = best;
      chunk_rank[tid] = best_rank;
    }
  }

  // Merge in chunk order: identical tie handling to the serial scan.
  double best = kInf;
  std::size_t best_rank = 0;
  for (std::size_t k = 0; k < n_chunks; ++k) {
    if (chunk_best[k] < best) {
      best = chunk_best[k];
      best_rank = chunk_rank[k];
    }
  }
  return finish_result(k_vertices, resolution, best_rank, best);
}

namespace {

// Euclidean projection onto the probability simplex.
void project_simplex(std::vector<double>& w) {
  std::vector<double> u = w;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, theta = 0.0;
  std::size_t rho = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    const double t = (css - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) {
      rho = i + 1;
      theta = t;
    }
  }
  (void)rho;
  for (double& v : w) v = std::max(v - theta, 0.0);
}

// Projected-gradient polish of min G(V w) over the weight simplex, for the
// smooth scores. Terminates on the simplex optimality gap
// <g, w> - min_v g_v, which equals the worst-case corollary slack over the
// whole polytope with the opposite sign.
std::vector<double> polish_weights(const ScoreRule& s, const std::vector<Distribution>& verts,
                                   std::vector<double> w) {
  const std::size_t k = verts.size();
  const std::size_t d = verts.front().size();
  std::vector<double> q(d), grad_q(d), g(k), trial(k), q_trial(d);

  auto mix = [&](const std::vector<double>& weights, std::vector<double>& out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t v = 0; v < k; ++v)
      for (std::size_t e = 0; e < d; ++e) out[e] += weights[v] * verts[v][e];
  };

  mix(w, q);
  double value = g_value_raw(s, q.data(), d);
  for (int iter = 0; iter < 5000; ++iter) {
    for (std::size_t e = 0; e < d; ++e) {
      if (s.kind() == ScoreKind::Quadratic) grad_q[e] = 2.0 * q[e];
      else {
        if (q[e] <= 0.0) return w;  // boundary: leave the grid answer alone
        grad_q[e] = std::log(q[e]) + 1.0;
      }
    }
    double gw = 0.0, gmin = kInf;
    for (std::size_t v = 0; v < k; ++v) {
      g[v] = 0.0;
      for (std::size_t e = 0; e < d; ++e) g[v] += grad_q[e] * verts[v][e];
      gw += g[v] * w[v];
      gmin = std::min(gmin, g[v]);
    }
    if (gw - gmin <= 1e-10) break;  // certified: slack >= -(gw - gmin) for all P in K

    double step = 1.0;
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt, step *= 0.5) {
      for (std::size_t v = 0; v < k; ++v) trial[v] = w[v] - step * g[v];
      project_simplex(trial);
      mix(trial, q_trial);
      const double tv = g_value_raw(s, q_trial.data(), d);
      if (tv < value) {
        w = trial;
        q = q_trial;
        value = tv;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return w;
}

}  // namespace

CorollaryReport corollary_check(const ScoreRule& s, const std::vector<Distribution>& k_vertices,
                                std::size_t resolution, std::size_t n_samples,
                                std::uint64_t seed) {
  GridMinResult grid = grid_min_g(s, k_vertices, resolution);
  const std::size_t d = k_vertices.front().size();

  const bool smooth = s.kind() != ScoreKind::Decision;
  std::vector<double> weights = grid.weights;
  if (smooth) weights = polish_weights(s, k_vertices, std::move(weights));
  std::vector<double> qp(d, 0.0);
  for (std::size_t v = 0; v < k_vertices.size(); ++v)
    for (std::size_t e = 0; e < d; ++e) qp[e] += weights[v] * k_vertices[v][e];
  Distribution q(std::move(qp));
  const double gq = g_value(s, q);

  CorollaryReport rep{std::move(grid), std::move(q), gq, smooth, 0.0, n_samples, false};

  Rng rng(Rng::derive(seed, 0xC0));
  double min_slack = kInf;
  std::vector<double> w(k_vertices.size()), p(d);
  for (std::size_t t = 0; t < n_samples; ++t) {
    double ws = 0.0;
    for (double& v : w) {
      v = rng.expo();
      ws += v;
    }
    std::fill(p.begin(), p.end(), 0.0);
    for (std::size_t v = 0; v < k_vertices.size(); ++v)
      for (std::size_t e = 0; e < d; ++e) p[e] += (w[v] / ws) * k_vertices[v][e];
    const double slack = g_cross_raw(s, p.data(), rep.q.probs().data(), d) - gq;
    min_slack = std::min(min_slack, slack);
  }
  rep.min_slack = n_samples ? min_slack : 0.0;
  rep.holds = rep.min_slack >= -1e-6;
  return rep;
}

Theorem1Report theorem1_check(const ScoreRule& s, const Distribution& p, const Distribution& q,
                              std::size_t a_steps) {
  if (p.size() != q.size()) fail(Errc::DimensionMismatch, "distributions differ in dimension");
  if (a_steps < 2) fail(Errc::EmptyAxis, "need at least two grid points");
  const std::size_t d = p.size();
  Theorem1Report rep;
  rep.a_steps = a_steps;
  const double gq = g_value(s, q);

  double max_err = 0.0;
  double min_premise = kInf;
  double min_conclusion = kInf;
  std::vector<double> r(d);
  std::vector<double> gpr(a_steps);
  for (std::size_t j = 0; j < a_steps; ++j) {
    const double a = static_cast<double>(j) / static_cast<double>(a_steps - 1);
    for (std::size_t e = 0; e < d; ++e) r[e] = a * p[e] + (1.0 - a) * q[e];
    const double gr = g_value_raw(s, r.data(), d);
    const double gp_r = g_cross_raw(s, p.probs().data(), r.data(), d);
    const double gq_r = g_cross_raw(s, q.probs().data(), r.data(), d);
    gpr[j] = gp_r;
    // a=0 / a=1 endpoints: a weight of zero contributes nothing even when
    // the other factor is -infinity.
    const double rhs = (a > 0.0 ? a * gp_r : 0.0) + (a < 1.0 ? (1.0 - a) * gq_r : 0.0);
    max_err = std::max(max_err, std::abs(gr - rhs));
    min_premise = std::min(min_premise, gr - gq);
    min_conclusion = std::min(min_conclusion, gp_r - gq);
  }
  rep.max_decomposition_error = max_err;
  rep.decomposition_ok = max_err <= kScoreTol;
  rep.premise_holds = min_premise >= -kScoreTol;
  rep.min_conclusion_slack = rep.premise_holds ? min_conclusion : 0.0;
  rep.value_at_smallest_a = gpr[1];
  rep.value_at_zero = gpr[0];
  return rep;
}

CanonicalCurve random_concave_curve(Rng& rng, std::size_t max_interior_points) {
  const std::size_t k = 1 + rng.index(max_interior_points);
  std::vector<Point> pts{{0.0, 0.0}, {1.0, 1.0}};
  for (std::size_t t = 0; t < k; ++t) {
    const double x = rng.u01();
    const double y = rng.uniform(x, 1.0);  // above the diagonal
    pts.push_back({x, y});
  }
  return CanonicalCurve::from_vertices(std::move(pts));
}

LubReport lub_minimality_check(const InfoSystem& p, const InfoSystem& q,
                               std::size_t n_dominators, std::uint64_t seed) {
  if (!p.binary() || !q.binary()) fail(Errc::NotBinary, "binary systems required");
  if (!priors_match(p, q, kProbTol)) fail(Errc::PriorMismatch, "priors differ beyond tolerance");
  const CanonicalCurve ca = canonicalize(p);
  const CanonicalCurve cb = canonicalize(q);
  const CanonicalCurve joined = join(ca, cb);

  Rng rng(Rng::derive(seed, 0x10B));
  LubReport rep;
  rep.n_dominators = n_dominators;
  for (std::size_t t = 0; t < n_dominators; ++t) {
    const CanonicalCurve dominator = join(join(random_concave_curve(rng), ca), cb);
    if (!dominates(dominator, joined)) ++rep.violations;
  }
  rep.holds = rep.violations == 0;
  return rep;
}

}  // namespace islog::oracle
