#include "noma/cluster_formation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "noma/assignment.hpp"
#include "noma/errors.hpp"

namespace noma {

int cluster_count(const std::vector<int>& sorted_capacities, int num_ues) {
  if (num_ues <= 0) return 0;
  long long sum = 0;
  for (size_t i = 0; i < sorted_capacities.size(); ++i) {
    sum += sorted_capacities[i];
    if (sum >= num_ues) return static_cast<int>(i + 1);
  }
  return num_ues;
}

double edge_weight(const std::vector<double>& member_gains, double cand) {
  double nearest_above = std::numeric_limits<double>::infinity();
  double nearest_below = 0.0;
  for (double g : member_gains) {
    if (g >= cand) nearest_above = std::min(nearest_above, g);
    if (g <= cand) nearest_below = std::max(nearest_below, g);
  }
  double w = 0.0;
  if (std::isfinite(nearest_above)) w += nearest_above / cand;
  if (nearest_below > 0.0) w += cand / nearest_below;
  return w;
}

namespace {

// Insert keeping gains descending; equals keep insertion order.
void insert_member(Cluster& c, int ue, double gain, double qos) {
  size_t pos = 0;
  while (pos < c.gains.size() && c.gains[pos] >= gain) ++pos;
  c.members.insert(c.members.begin() + pos, ue);
  c.gains.insert(c.gains.begin() + pos, gain);
  c.qos.insert(c.qos.begin() + pos, qos);
}

}  // namespace

std::vector<Cluster> form_clusters(const std::vector<int>& ue_ids,
                                   const std::vector<double>& gains,
                                   const std::vector<double>& qos,
                                   const std::vector<int>& capacities, int kbar,
                                   std::vector<int>* limits_out) {
  size_t n = ue_ids.size();
  if (gains.size() != n || qos.size() != n || capacities.size() != n) {
    throw error("form_clusters: misaligned inputs");
  }
  if (limits_out) limits_out->clear();
  if (n == 0) return {};

  std::vector<int> cap(n);
  for (size_t i = 0; i < n; ++i) cap[i] = std::clamp(capacities[i], 1, std::max(1, kbar));

  // Capacity-descending, id-ascending order picks the seeds.
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (cap[a] != cap[b]) return cap[a] > cap[b];
    return ue_ids[a] < ue_ids[b];
  });

  std::vector<int> caps_sorted(n);
  for (size_t i = 0; i < n; ++i) caps_sorted[i] = cap[order[i]];
  int num_clusters = std::min<int>(cluster_count(caps_sorted, static_cast<int>(n)),
                                   static_cast<int>(n));

  std::vector<Cluster> clusters;
  std::vector<int> limit;
  std::vector<char> seeded(n, 0);
  for (int c = 0; c < num_clusters; ++c) {
    size_t i = order[c];
    Cluster cl;
    insert_member(cl, ue_ids[i], gains[i], qos[i]);
    clusters.push_back(std::move(cl));
    limit.push_back(cap[i]);
    seeded[i] = 1;
  }

  // Unplaced users, id-ascending so matrix columns are reproducible.
  std::vector<size_t> remaining;
  for (size_t i = 0; i < n; ++i) {
    if (!seeded[i]) remaining.push_back(i);
  }
  std::sort(remaining.begin(), remaining.end(),
            [&](size_t a, size_t b) { return ue_ids[a] < ue_ids[b]; });

  while (!remaining.empty()) {
    std::vector<int> open;
    for (size_t c = 0; c < clusters.size(); ++c) {
      if (static_cast<int>(clusters[c].members.size()) < limit[c]) {
        open.push_back(static_cast<int>(c));
      }
    }

    bool placed_any = false;
    if (!open.empty()) {
      std::vector<std::vector<double>> cost(open.size(),
                                            std::vector<double>(remaining.size()));
      for (size_t r = 0; r < open.size(); ++r) {
        for (size_t c = 0; c < remaining.size(); ++c) {
          cost[r][c] = edge_weight(clusters[open[r]].gains, gains[remaining[c]]);
        }
      }
      std::vector<int> match = min_cost_assignment(cost);
      std::vector<char> taken(remaining.size(), 0);
      for (size_t r = 0; r < open.size(); ++r) {
        if (match[r] < 0) continue;
        size_t i = remaining[match[r]];
        insert_member(clusters[open[r]], ue_ids[i], gains[i], qos[i]);
        taken[match[r]] = 1;
        placed_any = true;
      }
      std::vector<size_t> rest;
      for (size_t c = 0; c < remaining.size(); ++c) {
        if (!taken[c]) rest.push_back(remaining[c]);
      }
      remaining.swap(rest);
    }

    if (!placed_any) {
      // No cluster can legally take anyone; leftovers go solo.
      for (size_t i : remaining) {
        Cluster cl;
        insert_member(cl, ue_ids[i], gains[i], qos[i]);
        clusters.push_back(std::move(cl));
        limit.push_back(cap[i]);
      }
      remaining.clear();
    }
  }
  if (limits_out) *limits_out = std::move(limit);
  return clusters;
}

}  // namespace noma
