#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "islog/canonical.hpp"
#include "islog/info_system.hpp"
#include "islog/score.hpp"

namespace islog {

/// A compatible composition R of two information systems: a joint
/// distribution over (hypothesis, observation-of-P, observation-of-Q) whose
/// per-axis marginalizations reproduce both components. Instances produced
/// by sample_couplings satisfy that by construction; coupling_matches checks
/// it explicitly.
class Coupling {
 public:
  Coupling(std::vector<std::string> hypothesis_labels,
           std::vector<std::string> obs_p_labels,
           std::vector<std::string> obs_q_labels, std::vector<double> data);

  std::size_t n_hypotheses() const { return hyp_labels_.size(); }
  std::size_t n_obs_p() const { return obs_p_labels_.size(); }
  std::size_t n_obs_q() const { return obs_q_labels_.size(); }

  double at(std::size_t e, std::size_t i, std::size_t j) const {
    return data_[(e * n_obs_p() + i) * n_obs_q() + j];
  }

  const std::vector<std::string>& hypothesis_labels() const { return hyp_labels_; }
  const std::vector<std::string>& obs_p_labels() const { return obs_p_labels_; }
  const std::vector<std::string>& obs_q_labels() const { return obs_q_labels_; }

 private:
  std::vector<std::string> hyp_labels_, obs_p_labels_, obs_q_labels_;
  std::vector<double> data_;  // e-major, then i, then j
};

/// True iff R's marginalizations reproduce P and Q within tol.
bool coupling_matches(const Coupling& r, const InfoSystem& p, const InfoSystem& q,
                      double tol);

/// Per-score outcome of a guarantee run: the component values, the fused
/// value, and the realized H(R, P+Q) for every sampled composition R.
struct ValueReport {
  struct Row {
    std::string score;
    double h_p = 0;
    double h_q = 0;
    double h_fused = 0;
    std::vector<double> realized;
    bool guarantee_holds = false;
  };
  std::vector<Row> rows;
  bool all_hold() const;
};

/// Minimal composition of two binary systems with equal hypothesis labels
/// and equal priors (within kProbTol): the reconstruction of the join of
/// their canonical curves on the shared prior, carrying P's labels and
/// P's prior verbatim.
InfoSystem fuse(const InfoSystem& p, const InfoSystem& q);

/// n compatible compositions. Slot 0 is always the independence coupling
/// R(e,i,j) = P(e) P(i|e) Q(j|e); the next slots enumerate products of
/// per-hypothesis transportation-polytope vertices (northwest-corner
/// solutions over row/column orderings, deduplicated, capped at desk
/// scale); the remainder are seeded random convex mixtures of those
/// vertices, independently per hypothesis.
std::vector<Coupling> sample_couplings(const InfoSystem& p, const InfoSystem& q,
                                       std::size_t n, std::uint64_t seed);

/// Flattens a composition into an information system on the product
/// observation space, labels "i×j".
InfoSystem coupling_as_is(const Coupling& r);

/// H(R, P+Q) for one sampled composition. The fused system is re-expressed
/// on R's product observation space by likelihood-ratio quantization:
/// R's observations are sorted by decreasing ratio and matched to fused
/// segments along the cumulative-mass axis, an observation straddling a
/// segment boundary splitting its mass between the two announcements.
/// `fused` must be a fuse() result (one observation per segment, in
/// decreasing-ratio order).
double realized_value(const ScoreRule& s, const Coupling& r, const InfoSystem& fused);

/// H(R, P+Q) for every composition. The parallel version distributes the
/// couplings across OpenMP threads; each entry is computed independently so
/// results are identical to the serial reference.
std::vector<double> realized_values(const ScoreRule& s,
                                    const std::vector<Coupling>& rs,
                                    const InfoSystem& fused);
std::vector<double> realized_values_serial(const ScoreRule& s,
                                           const std::vector<Coupling>& rs,
                                           const InfoSystem& fused);

/// Runs the full guarantee check: computes H(P), H(Q), H(P+Q) and the
/// realized values over n sampled couplings for each score. guarantee_holds
/// per row means min realized >= H(P+Q) - 1e-9 and
/// H(P+Q) >= max(H(P), H(Q)) - 1e-9.
ValueReport verify_guarantee(const InfoSystem& p, const InfoSystem& q,
                             const std::vector<ScoreRule>& scores, std::size_t n,
                             std::uint64_t seed);

/// Multi-hypothesis dominance via garbling feasibility: true iff some
/// stochastic matrix M (rows = P's observations) satisfies
/// P_joint * M = Q_joint within 1e-9. Requires equal hypothesis labels and
/// equal priors.
bool garbling_dominates(const InfoSystem& p, const InfoSystem& q);

/// Indices of `systems` sorted by descending H under the given score,
/// ties keeping input order. All systems must share hypothesis labels.
std::vector<std::size_t> fallback_compare(const ScoreRule& s,
                                          const std::vector<InfoSystem>& systems);

/// Indices of the candidates that dominate both P and Q (garbling sense)
/// and do not strictly dominate another such candidate - the minimal
/// common dominators within the supplied finite set.
std::vector<std::size_t> minimal_dominators(const std::vector<InfoSystem>& candidates,
                                            const InfoSystem& p, const InfoSystem& q);

}  // namespace islog
