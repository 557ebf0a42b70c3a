#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterembed/align.hpp"
#include "clusterembed/embed.hpp"
#include "clusterembed/metrics.hpp"
#include "clusterembed/types.hpp"

#include <nlohmann/json_fwd.hpp>

namespace clusterembed::pipeline {

struct DissimilaritySpec {
    enum class Kind { euclidean, geodesic, precomputed };
    Kind kind = Kind::euclidean;
    int k = 10;                       // geodesic neighbor count
    std::string path;                 // precomputed CSV
    DissimilarityKind precomputed_as = DissimilarityKind::euclidean;
    std::optional<std::string> save_path; // persist the computed matrix
};

struct ClusteringSpec {
    enum class Method { kmeans, dbscan };
    Method method = Method::kmeans;
    int k = 2;
    std::optional<std::uint64_t> seed; // defaults to the run seed
    double eps = 0.5;
    int min_pts = 5;
};

struct EmbeddingSpec {
    embed::Method method = embed::Method::pca;
    int loe_k = 10;
    double loe_nu = 1e-6;
    double loe_learning_rate = 1e-2;
    int loe_epochs = 500;
};

struct AlignmentSpec {
    bool auto_alpha = true;
    double alpha = 1.0;
    int theta_grid = 64;
    int sweeps = 50;
    double tol = 1e-6;
};

struct PipelineConfig {
    std::string input;
    std::optional<std::string> label_column;
    DissimilaritySpec dissimilarity;
    ClusteringSpec clustering;
    EmbeddingSpec embedding;
    AlignmentSpec alignment;
    std::vector<std::uint64_t> seeds = {0};
    std::vector<int> metrics_k = {10};
    std::string out_dir = ".";
};

/// Parses and validates a config, reporting offending field paths.
PipelineConfig parse_config(const nlohmann::json& j);
PipelineConfig load_config(const std::string& path);

struct SeedRunResult {
    std::uint64_t seed = 0;
    align::GlobalEmbedding global;
    std::vector<int> clusters;          // per kept point
    std::vector<int> original_indices;  // per kept point
    metrics::MetricsReport report;
};

/// Runs cluster -> embed -> align -> metrics for one seed.
SeedRunResult run_seed(const PipelineConfig& config, const DataMatrix& input,
                       const DissimilarityMatrix& delta, std::uint64_t seed);

/// Runs every seed and writes, per seed, the embedding CSV, transforms JSON
/// and metrics JSON, plus an aggregate JSON with mean and standard deviation
/// per metric. Returns the paths written.
std::vector<std::string> run_pipeline(const PipelineConfig& config);

/// Reads the `index,cluster,y1,y2` format written by the pipeline.
struct LoadedEmbedding {
    Coords coords;
    std::vector<int> clusters;
    std::vector<int> indices;
};
LoadedEmbedding load_embedding_csv(const std::string& path);

} // namespace clusterembed::pipeline
