#pragma once

#include <vector>

#include "noma/noma_core.hpp"

namespace noma {

// Smallest prefix of capacities (already sorted descending) whose sum covers
// num_ues. If even the full sum falls short, returns num_ues and the surplus
// users end up as singletons during formation.
int cluster_count(const std::vector<int>& sorted_capacities, int num_ues);

// Channel-disparity edge weight of adding a user with gain cand to a cluster
// with the given member gains: nearest-above / cand + cand / nearest-below,
// each term dropped when no member lies on that side.
double edge_weight(const std::vector<double>& member_gains, double cand);

// Distributed round-based formation for one BS. ue_ids/gains/capacities are
// aligned; capacities are clamped into [1, kbar]. Seeds are the cluster_count
// largest-capacity users (capacity ties: lowest UE id), each opening a cluster
// whose size limit is the seed's own capacity. Each round solves an exact
// min-cost matching of open clusters against unplaced users on edge_weight;
// when no cluster is open, the rest become singletons. Members come back
// sorted by descending gain; the returned clusters are in creation order.
// When limits_out is given it receives each cluster's size limit (the seed's
// clamped capacity; a singleton fallback gets its own).
std::vector<Cluster> form_clusters(const std::vector<int>& ue_ids,
                                   const std::vector<double>& gains,
                                   const std::vector<double>& qos,
                                   const std::vector<int>& capacities, int kbar,
                                   std::vector<int>* limits_out = nullptr);

}  // namespace noma
