#include "mopuc/moments.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "mopuc/quadrature.hpp"

namespace mopuc {

MomentEngine::MomentEngine(MeasureSystem system, int nodes_per_panel,
                           int panel_factor)
    : system_(std::move(system)),
      nodes_(nodes_per_panel),
      panel_factor_(panel_factor),
      cache_(static_cast<size_t>(system_.r())) {
  if (nodes_ < 2) fail(errc::precondition, "need at least 2 nodes per panel");
  if (panel_factor_ < 1) fail(errc::precondition, "panel factor must be >= 1");
}

cplx MomentEngine::integrate(int j, int two_t) const {
  const Component& comp = system_.component(j);
  const double t = 0.5 * two_t;
  const Arc& arc = comp.arc;

  // Panels scaled to the oscillation frequency.
  const double max_len = kPi / (4.0 * (std::abs(t) + 1.0));
  const int panels =
      panel_factor_ *
      std::max(1, static_cast<int>(std::ceil(arc.length() / max_len)));
  const GaussLegendre& gl = gauss_legendre(nodes_);

  cplx acc(0.0, 0.0);
  const double h = arc.length() / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = arc.alpha + p * h;
    const double mid = a + 0.5 * h;
    const double half = 0.5 * h;
    cplx local(0.0, 0.0);
    for (size_t i = 0; i < gl.nodes.size(); ++i) {
      const double theta = mid + half * gl.nodes[i];
      local += gl.weights[i] * comp.weight(theta, arc) *
               std::polar(1.0, t * theta);
    }
    acc += half * local;
  }
  for (const PointMass& pm : comp.masses) {
    acc += pm.mass * std::polar(1.0, t * pm.theta);
  }
  return acc;
}

cplx MomentEngine::moment(int j, int two_t) const {
  if (j < 0 || j >= system_.r()) fail(errc::precondition, "component out of range");
  auto& slot = cache_[static_cast<size_t>(j)];
  {
    std::shared_lock lock(mutex_);
    auto it = slot.find(two_t);
    if (it != slot.end()) return it->second;
  }
  const cplx value = integrate(j, two_t);
  std::unique_lock lock(mutex_);
  return slot.emplace(two_t, value).first->second;
}

std::vector<MomentEngine::CacheEntry> MomentEngine::cache_snapshot() const {
  std::shared_lock lock(mutex_);
  std::vector<CacheEntry> out;
  for (int j = 0; j < system_.r(); ++j) {
    for (const auto& [two_t, value] : cache_[static_cast<size_t>(j)]) {
      out.push_back(CacheEntry{j, two_t, value});
    }
  }
  return out;
}

void MomentEngine::check_index(const MultiIndex& n) const {
  if (n.size() != system_.r()) fail(errc::precondition, "index size != r");
}

MomentMatrix MomentEngine::build_T(const MultiIndex& n) const {
  check_index(n);
  const int N = n.total();
  if (N == 0) fail(errc::empty_index, "|n| = 0 has no moment matrix");

  MomentMatrix M;
  for (int j = 0; j < system_.r(); ++j) {
    // s = n_j/2 down to -n_j/2 + 1
    for (int two_s = n[j]; two_s >= -n[j] + 2; two_s -= 2) {
      M.row_component.push_back(j);
      M.row_two.push_back(two_s);
    }
  }
  for (int two_q = -N; two_q <= N - 2; two_q += 2) M.col_two.push_back(two_q);

  M.entries.resize(N, N);
  for (int i = 0; i < N; ++i) {
    for (int k = 0; k < N; ++k) {
      M.entries(i, k) = moment(M.row_component[static_cast<size_t>(i)],
                               M.row_two[static_cast<size_t>(i)] +
                                   M.col_two[static_cast<size_t>(k)]);
    }
  }
  return M;
}

MomentMatrix MomentEngine::build_HP(const MultiIndex& n,
                                    const MultiIndex& m) const {
  check_index(n);
  check_index(m);
  const int N = n.total() + m.total();
  if (N == 0) fail(errc::empty_index, "|n| + |m| = 0 has no moment matrix");

  MomentMatrix M;
  for (int j = 0; j < system_.r(); ++j) {
    // p = -m_j .. n_j - 1; rows store the condition as -2p.
    for (int p = -m[j]; p <= n[j] - 1; ++p) {
      M.row_component.push_back(j);
      M.row_two.push_back(-2 * p);
    }
  }
  for (int p = -m.total(); p <= n.total() - 1; ++p) M.col_two.push_back(2 * p);

  M.entries.resize(N, N);
  for (int i = 0; i < N; ++i) {
    for (int k = 0; k < N; ++k) {
      M.entries(i, k) = moment(M.row_component[static_cast<size_t>(i)],
                               M.row_two[static_cast<size_t>(i)] +
                                   M.col_two[static_cast<size_t>(k)]);
    }
  }
  return M;
}

MomentMatrix MomentEngine::build_HP_star(const MultiIndex& n,
                                         const MultiIndex& m) const {
  check_index(n);
  check_index(m);
  const int N = n.total() + m.total();
  if (N == 0) fail(errc::empty_index, "|n| + |m| = 0 has no moment matrix");

  MomentMatrix M;
  for (int j = 0; j < system_.r(); ++j) {
    // p = -m_j + 1 .. n_j
    for (int p = -m[j] + 1; p <= n[j]; ++p) {
      M.row_component.push_back(j);
      M.row_two.push_back(-2 * p);
    }
  }
  for (int p = -m.total() + 1; p <= n.total(); ++p) M.col_two.push_back(2 * p);

  M.entries.resize(N, N);
  for (int i = 0; i < N; ++i) {
    for (int k = 0; k < N; ++k) {
      M.entries(i, k) = moment(M.row_component[static_cast<size_t>(i)],
                               M.row_two[static_cast<size_t>(i)] +
                                   M.col_two[static_cast<size_t>(k)]);
    }
  }
  return M;
}

}  // namespace mopuc
