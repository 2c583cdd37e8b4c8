#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "truemper/detectors.hpp"
#include "truemper/graph.hpp"

namespace truemper {

// Hard size limits; larger inputs throw std::length_error.
inline constexpr int kChiLimit = 16;
inline constexpr int kCliqueLimit = 20;
inline constexpr int kScanLimit = 12;
inline constexpr int kRingLimit = 9;

int brute_chi(const Graph& g, int limit = kChiLimit);

struct WeightedOptimum {
    VertexSet set;
    double value = 0;
};

WeightedOptimum brute_omega_w(const WeightedGraph& g);
WeightedOptimum brute_alpha_w(const WeightedGraph& g);
int brute_omega(const Graph& g);

/// Least (by vertex-subset bitmask, then kind) induced configuration among `forbid`.
std::optional<Certificate> truemper_scan(const Graph& g, std::span<const ConfigKind> forbid);
/// Every Truemper configuration kind and Cap present as an induced subgraph.
std::set<ConfigKind> truemper_kinds(const Graph& g);

/// All holes, each in cyclic order.
std::vector<std::vector<int>> brute_holes(const Graph& g);

bool brute_is_ring(const Graph& g);
bool brute_has_clique_cutset(const Graph& g);

/// Optimal number of colors for C_k (k >= 3) where position i needs mult[i] colors.
int brute_weighted_cycle_chi(int k, std::span<const int> mult);

}  // namespace truemper
