#include "clusterembed/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <queue>
#include <random>

namespace clusterembed::cluster {

namespace {

std::vector<int> kept_from_assignment(const std::vector<int>& assignment) {
    std::vector<int> kept;
    for (std::size_t i = 0; i < assignment.size(); ++i)
        if (assignment[i] != kNoise) kept.push_back(static_cast<int>(i));
    return kept;
}

double sq_dist(const Matrix& points, Eigen::Index i, const Eigen::RowVectorXd& c) {
    return (points.row(i) - c).squaredNorm();
}

} // namespace

ClusterAssignment ClusterAssignment::from_labels(const std::vector<int>& labels) {
    ClusterAssignment out;
    out.assignment.resize(labels.size());
    std::vector<int> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0) {
            out.assignment[i] = kNoise;
            continue;
        }
        auto it = std::find(seen.begin(), seen.end(), labels[i]);
        if (it == seen.end()) {
            seen.push_back(labels[i]);
            it = std::prev(seen.end());
        }
        out.assignment[i] = static_cast<int>(it - seen.begin());
    }
    out.kappa = static_cast<int>(seen.size());
    out.kept_indices = kept_from_assignment(out.assignment);
    return out;
}

ClusterAssignment kmeans(const DataMatrix& data, int k, std::uint64_t seed) {
    data.validate();
    const Eigen::Index n = data.n();
    if (k < 1 || k > n) throw ParameterError("kmeans requires 1 <= k <= n");

    std::mt19937_64 rng(seed);
    Matrix centroids(k, data.dim());

    // k-means++ seeding.
    {
        std::uniform_int_distribution<Eigen::Index> first(0, n - 1);
        centroids.row(0) = data.points.row(first(rng));
        Vector d2 = Vector::Constant(n, std::numeric_limits<double>::infinity());
        for (int c = 1; c < k; ++c) {
            for (Eigen::Index i = 0; i < n; ++i)
                d2[i] = std::min(d2[i], sq_dist(data.points, i, centroids.row(c - 1)));
            const double total = d2.sum();
            Eigen::Index chosen = 0;
            if (total > 0.0) {
                std::uniform_real_distribution<double> u(0.0, total);
                double r = u(rng);
                for (Eigen::Index i = 0; i < n; ++i) {
                    r -= d2[i];
                    if (r <= 0.0) {
                        chosen = i;
                        break;
                    }
                    chosen = i;
                }
            } else {
                // All remaining points coincide with a centroid; any index works.
                std::uniform_int_distribution<Eigen::Index> any(0, n - 1);
                chosen = any(rng);
            }
            centroids.row(c) = data.points.row(chosen);
        }
    }

    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    std::vector<int> counts(static_cast<std::size_t>(k), 0);

    auto assign_all = [&]() {
        bool changed = false;
        std::fill(counts.begin(), counts.end(), 0);
        for (Eigen::Index i = 0; i < n; ++i) {
            int best = 0;
            double best_d = sq_dist(data.points, i, centroids.row(0));
            for (int c = 1; c < k; ++c) {
                const double d = sq_dist(data.points, i, centroids.row(c));
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            if (assignment[static_cast<std::size_t>(i)] != best) changed = true;
            assignment[static_cast<std::size_t>(i)] = best;
            ++counts[static_cast<std::size_t>(best)];
        }
        return changed;
    };

    constexpr int kMaxIterations = 300;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        const bool changed = assign_all();

        // Repair empty clusters: move the point farthest from its centroid.
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] > 0) continue;
            Eigen::Index farthest = 0;
            double far_d = -1.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (counts[static_cast<std::size_t>(assignment[static_cast<std::size_t>(i)])] <= 1) continue;
                const double d = sq_dist(data.points, i, centroids.row(assignment[static_cast<std::size_t>(i)]));
                if (d > far_d) {
                    far_d = d;
                    farthest = i;
                }
            }
            --counts[static_cast<std::size_t>(assignment[static_cast<std::size_t>(farthest)])];
            assignment[static_cast<std::size_t>(farthest)] = c;
            counts[static_cast<std::size_t>(c)] = 1;
            centroids.row(c) = data.points.row(farthest);
        }

        Matrix sums = Matrix::Zero(k, data.dim());
        for (Eigen::Index i = 0; i < n; ++i)
            sums.row(assignment[static_cast<std::size_t>(i)]) += data.points.row(i);
        for (int c = 0; c < k; ++c) centroids.row(c) = sums.row(c) / counts[static_cast<std::size_t>(c)];

        if (!changed && iter > 0) break;
    }

    ClusterAssignment out;
    out.assignment = std::move(assignment);
    out.kappa = k;
    out.kept_indices = kept_from_assignment(out.assignment);
    return out;
}

ClusterAssignment dbscan(const DataMatrix& data, double eps, int min_pts) {
    data.validate();
    if (eps <= 0.0) throw ParameterError("dbscan eps must be positive");
    if (min_pts < 1) throw ParameterError("dbscan min_pts must be at least 1");
    const Eigen::Index n = data.n();

    constexpr int kUnvisited = -2;
    std::vector<int> label(static_cast<std::size_t>(n), kUnvisited);
    const double eps2 = eps * eps;

    auto region_query = [&](Eigen::Index p) {
        std::vector<int> neighbors;
        for (Eigen::Index j = 0; j < n; ++j)
            if ((data.points.row(p) - data.points.row(j)).squaredNorm() <= eps2)
                neighbors.push_back(static_cast<int>(j));
        return neighbors; // includes p itself
    };

    int next_cluster = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (label[static_cast<std::size_t>(i)] != kUnvisited) continue;
        auto seeds = region_query(i);
        if (static_cast<int>(seeds.size()) < min_pts) {
            label[static_cast<std::size_t>(i)] = kNoise;
            continue;
        }
        const int cid = next_cluster++;
        label[static_cast<std::size_t>(i)] = cid;
        std::queue<int> frontier;
        for (int s : seeds)
            if (s != i) frontier.push(s);
        while (!frontier.empty()) {
            const int q = frontier.front();
            frontier.pop();
            if (label[static_cast<std::size_t>(q)] == kNoise) label[static_cast<std::size_t>(q)] = cid;
            if (label[static_cast<std::size_t>(q)] != kUnvisited) continue;
            label[static_cast<std::size_t>(q)] = cid;
            auto q_neighbors = region_query(q);
            if (static_cast<int>(q_neighbors.size()) >= min_pts)
                for (int s : q_neighbors)
                    if (label[static_cast<std::size_t>(s)] == kUnvisited || label[static_cast<std::size_t>(s)] == kNoise)
                        frontier.push(s);
        }
    }

    ClusterAssignment out;
    out.assignment = std::move(label);
    out.kappa = next_cluster;
    out.kept_indices = kept_from_assignment(out.assignment);
    return out;
}

RestrictResult restrict(const DataMatrix& data, const DissimilarityMatrix& delta,
                        const ClusterAssignment& assignment) {
    const Eigen::Index n = data.n();
    if (static_cast<Eigen::Index>(assignment.assignment.size()) != n || delta.n() != n)
        throw InvalidInputError("restrict: inconsistent input sizes");
    const auto& kept = assignment.kept_indices;
    if (kept.empty()) throw ComputationError("restrict: every point is marked noise");

    const Eigen::Index m = static_cast<Eigen::Index>(kept.size());
    RestrictResult out;
    out.data.points.resize(m, data.dim());
    if (data.labels) out.data.labels.emplace(static_cast<std::size_t>(m));
    out.delta.kind = delta.kind;
    out.delta.delta.resize(m, m);
    out.assignment.assignment.resize(static_cast<std::size_t>(m));
    out.assignment.kappa = assignment.kappa;
    out.original_indices = kept;

    for (Eigen::Index a = 0; a < m; ++a) {
        const int i = kept[static_cast<std::size_t>(a)];
        out.data.points.row(a) = data.points.row(i);
        if (data.labels) (*out.data.labels)[static_cast<std::size_t>(a)] = (*data.labels)[static_cast<std::size_t>(i)];
        out.assignment.assignment[static_cast<std::size_t>(a)] = assignment.assignment[static_cast<std::size_t>(i)];
        for (Eigen::Index b = 0; b < m; ++b)
            out.delta.delta(a, b) = delta.delta(i, kept[static_cast<std::size_t>(b)]);
    }
    out.assignment.kept_indices.resize(static_cast<std::size_t>(m));
    std::iota(out.assignment.kept_indices.begin(), out.assignment.kept_indices.end(), 0);
    return out;
}

std::vector<std::vector<int>> members_by_cluster(const ClusterAssignment& assignment) {
    std::vector<std::vector<int>> members(static_cast<std::size_t>(assignment.kappa));
    for (std::size_t i = 0; i < assignment.assignment.size(); ++i) {
        const int c = assignment.assignment[i];
        if (c != kNoise) members[static_cast<std::size_t>(c)].push_back(static_cast<int>(i));
    }
    return members;
}

void save_assignment_csv(const ClusterAssignment& assignment, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot open for writing: " + path);
    out << "index,cluster\n";
    for (std::size_t i = 0; i < assignment.assignment.size(); ++i)
        out << i << ',' << assignment.assignment[i] << '\n';
}

} // namespace clusterembed::cluster
