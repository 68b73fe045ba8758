#include "islog/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "islog/errors.hpp"
#include "islog/rng.hpp"
#include "islog/simplex_lp.hpp"
#include "islog/tolerances.hpp"

namespace islog {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_compatible(const InfoSystem& p, const InfoSystem& q) {
  if (p.hypothesis_labels() != q.hypothesis_labels())
    fail(Errc::LabelMismatch, "hypothesis labels differ");
  if (!priors_match(p, q, kProbTol)) fail(Errc::PriorMismatch, "priors differ beyond tolerance");
}

// Northwest-corner transportation solution under the given row/column
// visiting orders; every vertex of the polytope arises this way for some
// pair of orders.
std::vector<double> nw_corner(const std::vector<double>& u, const std::vector<double>& v,
                              const std::vector<std::size_t>& row_order,
                              const std::vector<std::size_t>& col_order) {
  const std::size_t m = u.size(), n = v.size();
  std::vector<double> cell(m * n, 0.0);
  std::vector<double> a = u, b = v;
  std::size_t i = 0, j = 0;
  while (i < m && j < n) {
    const std::size_t r = row_order[i], c = col_order[j];
    const double t = std::min(a[r], b[c]);
    cell[r * n + c] = t;
    a[r] -= t;
    b[c] -= t;
    if (a[r] <= 1e-15) ++i;
    else ++j;
  }
  return cell;
}

bool next_permutation_of(std::vector<std::size_t>& p) {
  return std::next_permutation(p.begin(), p.end());
}

std::vector<std::vector<double>> transport_extremes(const std::vector<double>& u,
                                                    const std::vector<double>& v, Rng& rng) {
  constexpr std::size_t kMaxExact = 20160;  // full ordering enumeration up to m! n! pairs
  constexpr std::size_t kMaxKept = 96;      // cap on distinct vertices kept (desk scale)
  constexpr std::size_t kSampled = 768;     // random orderings beyond the exact range
  const std::size_t m = u.size(), n = v.size();

  std::vector<std::vector<double>> out;
  std::set<std::vector<long long>> seen;
  auto add = [&](std::vector<double> cand) {
    std::vector<long long> key(cand.size());
    for (std::size_t k = 0; k < cand.size(); ++k) key[k] = std::llround(cand[k] * 1e12);
    if (seen.insert(std::move(key)).second) out.push_back(std::move(cand));
  };

  std::size_t orderings = 1;
  for (std::size_t k = 2; k <= m && orderings <= kMaxExact; ++k) orderings *= k;
  for (std::size_t k = 2; k <= n && orderings <= kMaxExact; ++k) orderings *= k;

  std::vector<std::size_t> rp(m), cp(n);
  if (orderings <= kMaxExact) {
    std::iota(rp.begin(), rp.end(), 0);
    do {
      std::iota(cp.begin(), cp.end(), 0);
      do {
        add(nw_corner(u, v, rp, cp));
        if (out.size() >= kMaxKept) return out;
      } while (next_permutation_of(cp));
    } while (next_permutation_of(rp));
  } else {
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    add(nw_corner(u, v, rp, cp));
    for (std::size_t trial = 0; trial < kSampled && out.size() < kMaxKept; ++trial) {
      for (std::size_t k = m; k > 1; --k) std::swap(rp[k - 1], rp[rng.index(k)]);
      for (std::size_t k = n; k > 1; --k) std::swap(cp[k - 1], cp[rng.index(k)]);
      add(nw_corner(u, v, rp, cp));
    }
  }
  return out;
}

struct FusedSegments {
  std::vector<double> mass;                // segment probabilities, ratio-sorted
  std::vector<std::vector<double>> post;   // segment posteriors
};

FusedSegments fused_segments(const InfoSystem& fused) {
  const auto prior = fused.joint().row_sums();
  const std::size_t k = fused.n_observations();
  std::vector<double> slope(k);
  FusedSegments out;
  out.mass.resize(k);
  out.post.resize(k);
  for (std::size_t t = 0; t < k; ++t) {
    const double ce = fused.joint()(0, t) / prior[0];
    const double cn = fused.joint()(1, t) / prior[1];
    slope[t] = cn > 0.0 ? ce / cn : kInf;
    const double m = fused.joint()(0, t) + fused.joint()(1, t);
    out.mass[t] = m;
    out.post[t] = {fused.joint()(0, t) / m, fused.joint()(1, t) / m};
  }
  // fuse() emits segments in decreasing-ratio order already; re-sort
  // defensively so hand-fed systems behave.
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return slope[a] > slope[b]; });
  FusedSegments sorted;
  for (std::size_t t : idx) {
    sorted.mass.push_back(out.mass[t]);
    sorted.post.push_back(std::move(out.post[t]));
  }
  return sorted;
}

struct RatioCell {
  double ratio;
  double mass;
  double post[2];
};

double realized_value_impl(const ScoreRule& s, const Coupling& r, const FusedSegments& seg) {
  const double prior0 = [&] {
    double v = 0.0;
    for (std::size_t i = 0; i < r.n_obs_p(); ++i)
      for (std::size_t j = 0; j < r.n_obs_q(); ++j) v += r.at(0, i, j);
    return v;
  }();
  const double prior1 = [&] {
    double v = 0.0;
    for (std::size_t i = 0; i < r.n_obs_p(); ++i)
      for (std::size_t j = 0; j < r.n_obs_q(); ++j) v += r.at(1, i, j);
    return v;
  }();

  std::vector<RatioCell> cells;
  cells.reserve(r.n_obs_p() * r.n_obs_q());
  for (std::size_t i = 0; i < r.n_obs_p(); ++i) {
    for (std::size_t j = 0; j < r.n_obs_q(); ++j) {
      const double r0 = r.at(0, i, j), r1 = r.at(1, i, j);
      const double w = r0 + r1;
      if (w <= 0.0) continue;
      const double lam = r1 > 0.0 ? (r0 / prior0) / (r1 / prior1) : kInf;
      cells.push_back({lam, w, {r0 / w, r1 / w}});
    }
  }
  // The announced posterior depends on the cell only through its ratio, so
  // tie order among equal ratios cannot change the value.
  std::stable_sort(cells.begin(), cells.end(),
                   [](const RatioCell& a, const RatioCell& b) { return a.ratio > b.ratio; });

  // Walk the cumulative-mass axis: fused segment t spans seg.mass[t] of it.
  // A cell straddling a boundary splits its announcement between the two
  // adjacent fused posteriors.
  double h = 0.0;
  std::size_t t = 0;
  double rem = seg.mass.empty() ? 0.0 : seg.mass[0];
  const std::size_t last = seg.mass.size() - 1;
  for (const RatioCell& c : cells) {
    double left = c.mass;
    while (left > 0.0) {
      const double take = (t == last) ? left : std::min(left, rem);
      h += take * g_cross_raw(s, c.post, seg.post[t].data(), 2);
      left -= take;
      rem -= take;
      if (t < last && rem <= 1e-15) {
        ++t;
        rem = seg.mass[t];
      }
    }
  }
  return h;
}

}  // namespace

Coupling::Coupling(std::vector<std::string> hypothesis_labels,
                   std::vector<std::string> obs_p_labels,
                   std::vector<std::string> obs_q_labels, std::vector<double> data)
    : hyp_labels_(std::move(hypothesis_labels)),
      obs_p_labels_(std::move(obs_p_labels)),
      obs_q_labels_(std::move(obs_q_labels)),
      data_(std::move(data)) {
  if (hyp_labels_.empty() || obs_p_labels_.empty() || obs_q_labels_.empty())
    fail(Errc::EmptyAxis, "coupling needs hypotheses and observations on both axes");
  if (data_.size() != hyp_labels_.size() * obs_p_labels_.size() * obs_q_labels_.size())
    fail(Errc::DimensionMismatch, "coupling data size does not match axes");
  double total = 0.0;
  for (double v : data_) {
    if (v < 0.0) fail(Errc::NegativeEntry, "coupling entry is negative");
    total += v;
  }
  if (std::abs(total - 1.0) > kProbTol)
    fail(Errc::SumNotOne, "coupling sums to " + std::to_string(total));
}

bool coupling_matches(const Coupling& r, const InfoSystem& p, const InfoSystem& q, double tol) {
  if (r.n_hypotheses() != p.n_hypotheses() || r.n_hypotheses() != q.n_hypotheses() ||
      r.n_obs_p() != p.n_observations() || r.n_obs_q() != q.n_observations())
    return false;
  for (std::size_t e = 0; e < r.n_hypotheses(); ++e) {
    for (std::size_t i = 0; i < r.n_obs_p(); ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < r.n_obs_q(); ++j) s += r.at(e, i, j);
      if (std::abs(s - p.joint()(e, i)) > tol) return false;
    }
    for (std::size_t j = 0; j < r.n_obs_q(); ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.n_obs_p(); ++i) s += r.at(e, i, j);
      if (std::abs(s - q.joint()(e, j)) > tol) return false;
    }
  }
  return true;
}

bool ValueReport::all_hold() const {
  for (const auto& row : rows)
    if (!row.guarantee_holds) return false;
  return true;
}

InfoSystem fuse(const InfoSystem& p, const InfoSystem& q) {
  if (!p.binary() || !q.binary()) fail(Errc::NotBinary, "fuse needs binary systems");
  check_compatible(p, q);
  const CanonicalCurve joined = join(canonicalize(p), canonicalize(q));
  return reconstruct(joined, p.prior(), p.hypothesis_labels());
}

std::vector<Coupling> sample_couplings(const InfoSystem& p, const InfoSystem& q, std::size_t n,
                                       std::uint64_t seed) {
  check_compatible(p, q);
  const std::size_t d = p.n_hypotheses();
  const std::size_t mp = p.n_observations(), mq = q.n_observations();
  const auto prior = p.joint().row_sums();

  std::vector<std::vector<double>> cond_p(d, std::vector<double>(mp));
  std::vector<std::vector<double>> cond_q(d, std::vector<double>(mq));
  for (std::size_t e = 0; e < d; ++e) {
    for (std::size_t i = 0; i < mp; ++i) cond_p[e][i] = p.joint()(e, i) / prior[e];
    for (std::size_t j = 0; j < mq; ++j) cond_q[e][j] = q.joint()(e, j) / prior[e];
  }

  Rng rng(Rng::derive(seed, 0x15C0));
  std::vector<std::vector<std::vector<double>>> extremes(d);
  for (std::size_t e = 0; e < d; ++e) extremes[e] = transport_extremes(cond_p[e], cond_q[e], rng);

  auto assemble = [&](const std::vector<const std::vector<double>*>& per_hyp) {
    std::vector<double> data(d * mp * mq);
    for (std::size_t e = 0; e < d; ++e)
      for (std::size_t c = 0; c < mp * mq; ++c) data[e * mp * mq + c] = prior[e] * (*per_hyp[e])[c];
    return Coupling(p.hypothesis_labels(), p.observation_labels(), q.observation_labels(),
                    std::move(data));
  };

  std::vector<Coupling> out;
  out.reserve(n);
  if (n == 0) return out;

  // Slot 0: independence, R(e,i,j) = P(e) P(i|e) Q(j|e).
  {
    std::vector<std::vector<double>> ind(d, std::vector<double>(mp * mq));
    std::vector<const std::vector<double>*> per(d);
    for (std::size_t e = 0; e < d; ++e) {
      for (std::size_t i = 0; i < mp; ++i)
        for (std::size_t j = 0; j < mq; ++j) ind[e][i * mq + j] = cond_p[e][i] * cond_q[e][j];
      per[e] = &ind[e];
    }
    out.push_back(assemble(per));
  }

  // Products of per-hypothesis extreme couplings, mixed-radix order.
  std::size_t combos = 1;
  bool overflow = false;
  for (std::size_t e = 0; e < d && !overflow; ++e) {
    if (extremes[e].size() > 0 && combos > (1u << 20) / extremes[e].size()) overflow = true;
    else combos *= extremes[e].size();
  }
  for (std::size_t c = 0; out.size() < n && !overflow && c < combos; ++c) {
    std::vector<const std::vector<double>*> per(d);
    std::size_t rest = c;
    for (std::size_t e = 0; e < d; ++e) {
      per[e] = &extremes[e][rest % extremes[e].size()];
      rest /= extremes[e].size();
    }
    out.push_back(assemble(per));
  }

  // Remainder: random convex mixtures of extremes, independently per
  // hypothesis, so every sample stays inside the transportation polytope.
  std::vector<std::vector<double>> mix(d, std::vector<double>(mp * mq));
  while (out.size() < n) {
    std::vector<const std::vector<double>*> per(d);
    for (std::size_t e = 0; e < d; ++e) {
      const auto& ext = extremes[e];
      std::vector<double> w(ext.size());
      double ws = 0.0;
      for (double& v : w) {
        v = rng.expo();
        ws += v;
      }
      std::fill(mix[e].begin(), mix[e].end(), 0.0);
      for (std::size_t v = 0; v < ext.size(); ++v)
        for (std::size_t cix = 0; cix < mp * mq; ++cix) mix[e][cix] += (w[v] / ws) * ext[v][cix];
      per[e] = &mix[e];
    }
    out.push_back(assemble(per));
  }
  return out;
}

InfoSystem coupling_as_is(const Coupling& r) {
  const std::size_t d = r.n_hypotheses(), mp = r.n_obs_p(), mq = r.n_obs_q();
  Matrix joint(d, mp * mq);
  std::vector<std::string> obs;
  obs.reserve(mp * mq);
  for (std::size_t i = 0; i < mp; ++i)
    for (std::size_t j = 0; j < mq; ++j)
      obs.push_back(r.obs_p_labels()[i] + "×" + r.obs_q_labels()[j]);
  for (std::size_t e = 0; e < d; ++e)
    for (std::size_t i = 0; i < mp; ++i)
      for (std::size_t j = 0; j < mq; ++j) joint(e, i * mq + j) = r.at(e, i, j);
  return InfoSystem(r.hypothesis_labels(), std::move(obs), std::move(joint));
}

double realized_value(const ScoreRule& s, const Coupling& r, const InfoSystem& fused) {
  return realized_value_impl(s, r, fused_segments(fused));
}

std::vector<double> realized_values_serial(const ScoreRule& s, const std::vector<Coupling>& rs,
                                           const InfoSystem& fused) {
  const FusedSegments seg = fused_segments(fused);
  std::vector<double> out(rs.size());
  for (std::size_t k = 0; k < rs.size(); ++k) out[k] = realized_value_impl(s, rs[k], seg);
  return out;
}

std::vector<double> realized_values(const ScoreRule& s, const std::vector<Coupling>& rs,
                                    const InfoSystem& fused) {
  const FusedSegments seg = fused_segments(fused);
  std::vector<double> out(rs.size());
  const std::int64_t n = static_cast<std::int64_t>(rs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < n; ++k)
    out[static_cast<std::size_t>(k)] = realized_value_impl(s, rs[static_cast<std::size_t>(k)], seg);
  return out;
}

ValueReport verify_guarantee(const InfoSystem& p, const InfoSystem& q,
                             const std::vector<ScoreRule>& scores, std::size_t n,
                             std::uint64_t seed) {
  const InfoSystem fused = fuse(p, q);
  const auto couplings = sample_couplings(p, q, n, seed);
  ValueReport report;
  for (const ScoreRule& s : scores) {
    ValueReport::Row row;
    row.score = std::string(s.name());
    row.h_p = h_value(s, p);
    row.h_q = h_value(s, q);
    row.h_fused = h_value(s, fused);
    row.realized = realized_values(s, couplings, fused);
    double min_realized = kInf;
    for (double v : row.realized) min_realized = std::min(min_realized, v);
    const bool left = row.realized.empty() || min_realized >= row.h_fused - kGeomTol;
    const bool right = row.h_fused >= std::max(row.h_p, row.h_q) - kGeomTol;
    row.guarantee_holds = left && right;
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool garbling_dominates(const InfoSystem& p, const InfoSystem& q) {
  check_compatible(p, q);
  const std::size_t d = p.n_hypotheses();
  const std::size_t mp = p.n_observations(), mq = q.n_observations();
  // Variables: M(i,j) row-major, i over P's observations. Constraints:
  // sum_i P(e,i) M(i,j) = Q(e,j) for all e,j; sum_j M(i,j) = 1 for all i.
  const std::size_t nvars = mp * mq;
  const std::size_t nrows = d * mq + mp;
  Matrix a(nrows, nvars, 0.0);
  std::vector<double> b(nrows, 0.0);
  std::size_t r = 0;
  for (std::size_t e = 0; e < d; ++e) {
    for (std::size_t j = 0; j < mq; ++j, ++r) {
      for (std::size_t i = 0; i < mp; ++i) a(r, i * mq + j) = p.joint()(e, i);
      b[r] = q.joint()(e, j);
    }
  }
  for (std::size_t i = 0; i < mp; ++i, ++r) {
    for (std::size_t j = 0; j < mq; ++j) a(r, i * mq + j) = 1.0;
    b[r] = 1.0;
  }
  return lp_feasible(a, std::move(b), 1e-9).feasible;
}

std::vector<std::size_t> fallback_compare(const ScoreRule& s,
                                          const std::vector<InfoSystem>& systems) {
  for (std::size_t k = 1; k < systems.size(); ++k)
    if (systems[k].hypothesis_labels() != systems[0].hypothesis_labels())
      fail(Errc::LabelMismatch, "systems must share hypothesis labels");
  std::vector<double> h(systems.size());
  for (std::size_t k = 0; k < systems.size(); ++k) h[k] = h_value(s, systems[k]);
  std::vector<std::size_t> order(systems.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return h[a] > h[b]; });
  return order;
}

std::vector<std::size_t> minimal_dominators(const std::vector<InfoSystem>& candidates,
                                            const InfoSystem& p, const InfoSystem& q) {
  std::vector<std::size_t> common;
  for (std::size_t k = 0; k < candidates.size(); ++k)
    if (garbling_dominates(candidates[k], p) && garbling_dominates(candidates[k], q))
      common.push_back(k);
  // Keep the minimal elements: drop a common dominator that strictly
  // dominates another one (it asserts more than needed).
  std::vector<std::size_t> out;
  for (std::size_t a : common) {
    bool minimal = true;
    for (std::size_t b : common) {
      if (a == b) continue;
      if (garbling_dominates(candidates[a], candidates[b]) &&
          !garbling_dominates(candidates[b], candidates[a])) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

}  // namespace islog
