#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tunekit/cache.hpp"

namespace tunekit {

// Census of point types under the strict minimum definition: a point is a
// local minimum iff every neighbour has strictly greater fitness. Failed
// points are never minima.
struct PointCensus {
    NeighbourhoodKind kind = NeighbourhoodKind::Adjacent;
    std::uint64_t total = 0;
    std::uint64_t fail_points = 0;
    std::uint64_t local_minima = 0;
    std::uint64_t interior = 0;  // ok points that are not minima
    std::vector<std::uint64_t> minima_ranks;
};

PointCensus classify_points(const SearchSpaceCache& cache, NeighbourhoodKind kind);

// Directed graph over all configurations with an edge u -> v whenever v is
// a neighbour of u with strictly lower fitness. Acyclic by construction;
// sinks are the points a first-improvement descent terminates in. The
// minima set exposed to reports is the ok sinks (fail plateaus excluded).
struct FitnessFlowGraph {
    NeighbourhoodKind kind = NeighbourhoodKind::Adjacent;
    std::uint32_t node_count = 0;
    std::vector<std::uint64_t> offsets;   // CSR, size node_count + 1
    std::vector<std::uint32_t> targets;
    std::vector<double> fitness;
    std::vector<std::uint8_t> is_sink;
    std::vector<std::uint32_t> minima;    // ok sinks, ascending rank

    std::uint32_t out_degree(std::uint32_t u) const {
        return static_cast<std::uint32_t>(offsets[u + 1] - offsets[u]);
    }
};

FitnessFlowGraph build_ffg(const SearchSpaceCache& cache, NeighbourhoodKind kind,
                           std::uint64_t node_limit = 1'000'000);

// PageRank over the column-stochastic adjacency: each node distributes its
// mass uniformly over its out-neighbours; sinks distribute uniformly over
// all nodes; teleportation with the given damping. Power iteration until
// the L1 change drops below tol. Result sums to 1.
std::vector<double> pagerank(const FitnessFlowGraph& g, double damping = 0.85,
                             double tol = 1e-10, int max_iter = 100000);

// PageRank mass of minima with fitness below (1+p)*f_opt, relative to the
// mass of all minima; p = 0 means exactly the global minima.
double proportion_of_centrality(const FitnessFlowGraph& g,
                                const std::vector<double>& pr, double f_opt,
                                double p);

struct MinimumInfo {
    std::uint64_t rank;
    double fitness;
    double fraction_of_optimum;
    double pagerank;
};

struct CentralityReport {
    NeighbourhoodKind kind;
    double damping;
    double f_opt;
    std::vector<MinimumInfo> minima;
    std::vector<std::pair<int, double>> c_p_curve;  // (p percent, C_p)
    int pagerank_iterations;
    double pagerank_sum;
};

CentralityReport analyze_landscape(const SearchSpaceCache& cache,
                                   NeighbourhoodKind kind, double damping = 0.85,
                                   int p_max_percent = 15);

Json centrality_report_to_json(const CentralityReport& report,
                               const SearchSpaceCache& cache);
void write_minima_csv(const CentralityReport& report, const SearchSpaceCache& cache,
                      std::ostream& out);
void write_cp_curve_csv(const CentralityReport& report, std::ostream& out);

// Distribution of f_opt / f over the minima (the naive difficulty metric).
struct MinimaFractionReport {
    std::vector<double> fractions;  // ascending
    double median = 0.0;
    double mean = 0.0;
};
MinimaFractionReport minima_fraction_report(const SearchSpaceCache& cache,
                                            NeighbourhoodKind kind);

enum class GraphFormat { Dot, GraphML, EdgeCsv };
GraphFormat graph_format_from_string(const std::string& s);

// Nodes coloured by fraction of optimum: below 0.75 a single flood colour,
// the global minimum green, minima drawn larger.
void export_graph(const FitnessFlowGraph& g, const SearchSpaceCache& cache,
                  GraphFormat format, std::ostream& out);

}  // namespace tunekit
