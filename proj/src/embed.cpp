#include "clusterembed/embed.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "clusterembed/dissim.hpp"

namespace clusterembed::embed {

namespace {

// Flip each column so its largest-magnitude entry is positive (first
// occurrence wins on magnitude ties).
void fix_signs(Matrix& directions) {
    for (Eigen::Index c = 0; c < directions.cols(); ++c) {
        Eigen::Index arg = 0;
        double best = -1.0;
        for (Eigen::Index r = 0; r < directions.rows(); ++r) {
            const double mag = std::abs(directions(r, c));
            if (mag > best) {
                best = mag;
                arg = r;
            }
        }
        if (directions(arg, c) < 0.0) directions.col(c) = -directions.col(c);
    }
}

std::vector<std::vector<int>> neighbor_sets_for(const Matrix& points, int k) {
    DataMatrix data{points, std::nullopt};
    const auto graph = dissim::build_knn_graph(data, k);
    std::vector<std::vector<int>> sets(graph.neighbors.size());
    for (std::size_t i = 0; i < graph.neighbors.size(); ++i)
        for (const auto& e : graph.neighbors[i]) sets[i].push_back(e.index);
    return sets;
}

} // namespace

void LoeConfig::validate() const {
    if (k < 1) throw ParameterError("loe: k must be at least 1");
    if (nu <= 0.0) throw ParameterError("loe: nu must be positive");
    if (learning_rate <= 0.0) throw ParameterError("loe: learning rate must be positive");
    if (epochs < 1) throw ParameterError("loe: epochs must be at least 1");
}

Coords pca_embed(const Matrix& cluster_points) {
    const Eigen::Index m = cluster_points.rows();
    const Eigen::Index d = cluster_points.cols();
    Coords out = Coords::Zero(m, 2);
    if (m <= 1) return out;

    const Eigen::RowVectorXd mean = cluster_points.colwise().mean();
    const Matrix centered = cluster_points.rowwise() - mean;
    const Matrix cov = centered.transpose() * centered / static_cast<double>(m);

    Eigen::SelfAdjointEigenSolver<Matrix> solver(cov);
    Matrix directions(d, 2);
    const Eigen::Index top = d - 1;
    directions.col(0) = solver.eigenvectors().col(top);
    if (d >= 2)
        directions.col(1) = solver.eigenvectors().col(top - 1);
    else
        directions.col(1).setZero();
    fix_signs(directions);
    out = centered * directions;
    return out;
}

Coords classical_scaling_embed(const Matrix& cluster_delta) {
    if (cluster_delta.rows() != cluster_delta.cols())
        throw InvalidInputError("classical scaling: dissimilarity block must be square");
    const Eigen::Index m = cluster_delta.rows();
    Coords out = Coords::Zero(m, 2);
    if (m <= 1) return out;

    const Matrix sq = cluster_delta.array().square();
    const Vector row_mean = sq.rowwise().mean();
    const double total_mean = sq.mean();
    Matrix gram(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            gram(i, j) = -0.5 * (sq(i, j) - row_mean[i] - row_mean[j] + total_mean);

    Eigen::SelfAdjointEigenSolver<Matrix> solver(gram);
    Matrix directions(m, 2);
    directions.col(0) = solver.eigenvectors().col(m - 1);
    directions.col(1) = solver.eigenvectors().col(m - 2);
    fix_signs(directions);
    const double l0 = std::max(solver.eigenvalues()[m - 1], 0.0);
    const double l1 = std::max(solver.eigenvalues()[m - 2], 0.0);
    out.col(0) = directions.col(0) * std::sqrt(l0);
    out.col(1) = directions.col(1) * std::sqrt(l1);
    return out;
}

double loe_loss(const Coords& coords, const std::vector<std::vector<int>>& neighbor_sets,
                double nu) {
    const Eigen::Index m = coords.rows();
    std::vector<char> is_neighbor(static_cast<std::size_t>(m), 0);
    double loss = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto& nbrs = neighbor_sets[static_cast<std::size_t>(i)];
        for (int j : nbrs) is_neighbor[static_cast<std::size_t>(j)] = 1;
        for (int j : nbrs) {
            const double dij = (coords.row(i) - coords.row(j)).norm();
            for (Eigen::Index l = 0; l < m; ++l) {
                if (l == i || is_neighbor[static_cast<std::size_t>(l)]) continue;
                const double dil = (coords.row(i) - coords.row(l)).norm();
                const double margin = dij + nu - dil;
                if (margin > 0.0) loss += margin * margin;
            }
        }
        for (int j : nbrs) is_neighbor[static_cast<std::size_t>(j)] = 0;
    }
    return loss;
}

Matrix loe_gradient(const Coords& coords, const std::vector<std::vector<int>>& neighbor_sets,
                    double nu) {
    const Eigen::Index m = coords.rows();
    Matrix grad = Matrix::Zero(m, 2);
    std::vector<char> is_neighbor(static_cast<std::size_t>(m), 0);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto& nbrs = neighbor_sets[static_cast<std::size_t>(i)];
        for (int j : nbrs) is_neighbor[static_cast<std::size_t>(j)] = 1;
        for (int j : nbrs) {
            const Eigen::RowVector2d diff_ij = coords.row(i) - coords.row(j);
            const double dij = diff_ij.norm();
            const Eigen::RowVector2d unit_ij =
                dij > 0.0 ? (diff_ij / dij).eval() : Eigen::RowVector2d::Zero().eval();
            for (Eigen::Index l = 0; l < m; ++l) {
                if (l == i || is_neighbor[static_cast<std::size_t>(l)]) continue;
                const Eigen::RowVector2d diff_il = coords.row(i) - coords.row(l);
                const double dil = diff_il.norm();
                const double margin = dij + nu - dil;
                if (margin <= 0.0) continue;
                const Eigen::RowVector2d unit_il =
                    dil > 0.0 ? (diff_il / dil).eval() : Eigen::RowVector2d::Zero().eval();
                grad.row(i) += 2.0 * margin * (unit_ij - unit_il);
                grad.row(j) -= 2.0 * margin * unit_ij;
                grad.row(l) += 2.0 * margin * unit_il;
            }
        }
        for (int j : nbrs) is_neighbor[static_cast<std::size_t>(j)] = 0;
    }
    return grad;
}

Coords loe_embed(const Matrix& cluster_points, const LoeConfig& config) {
    config.validate();
    const Eigen::Index m = cluster_points.rows();
    if (m < config.k + 2)
        throw ParameterError("loe: cluster of size " + std::to_string(m) +
                             " needs at least k+2 = " + std::to_string(config.k + 2) + " points");

    const auto neighbor_sets = neighbor_sets_for(cluster_points, config.k);

    Coords coords = pca_embed(cluster_points);
    const double rms = std::sqrt(coords.squaredNorm() / static_cast<double>(m));
    if (rms > 0.0) coords /= rms;
    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> jitter(0.0, 1e-4);
    for (Eigen::Index i = 0; i < m; ++i) {
        coords(i, 0) += jitter(rng);
        coords(i, 1) += jitter(rng);
    }

    double lr = config.learning_rate;
    double loss = loe_loss(coords, neighbor_sets, config.nu);
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        if (loss == 0.0) break;
        const Matrix grad = loe_gradient(coords, neighbor_sets, config.nu);
        if (!grad.allFinite())
            throw ComputationError("loe: diverged (non-finite gradient) at epoch " +
                                   std::to_string(epoch));
        if (grad.squaredNorm() == 0.0) break;
        for (;;) {
            const Coords trial = coords - lr * grad;
            const double trial_loss = loe_loss(trial, neighbor_sets, config.nu);
            if (std::isfinite(trial_loss) && trial_loss <= loss + 1e-12) {
                coords = trial;
                loss = trial_loss;
                break;
            }
            lr *= 0.5;
            if (lr < 1e-18) break;
        }
        if (lr < 1e-18) break;
        if (!std::isfinite(loss))
            throw ComputationError("loe: diverged (non-finite loss) at epoch " +
                                   std::to_string(epoch));
    }
    return coords;
}

double scale_sync(const Matrix& cluster_delta, const Coords& coords) {
    const Eigen::Index m = coords.rows();
    double num = 0.0, den = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i + 1; j < m; ++j) {
            const double d = (coords.row(i) - coords.row(j)).norm();
            num += cluster_delta(i, j) * d;
            den += d * d;
        }
    }
    if (den == 0.0)
        throw ComputationError("scale_sync: all embedded points coincide, scale is degenerate");
    return num / den;
}

ClusterEmbedding embed_all_clusters(const DataMatrix& data, const DissimilarityMatrix& delta,
                                    const cluster::ClusterAssignment& assignment, Method method,
                                    const LoeConfig& loe_config) {
    if (assignment.kappa < 1) throw InvalidInputError("embed: assignment has no clusters");
    if (static_cast<Eigen::Index>(assignment.assignment.size()) != data.n() || delta.n() != data.n())
        throw InvalidInputError("embed: inconsistent input sizes");

    const auto members = cluster::members_by_cluster(assignment);
    ClusterEmbedding out;
    out.method = method;
    out.coords.resize(members.size());

    for (std::size_t c = 0; c < members.size(); ++c) {
        const auto& idx = members[c];
        const Eigen::Index mc = static_cast<Eigen::Index>(idx.size());
        try {
            if (method == Method::pca) {
                Matrix block(mc, data.dim());
                for (Eigen::Index r = 0; r < mc; ++r) block.row(r) = data.points.row(idx[static_cast<std::size_t>(r)]);
                out.coords[c] = pca_embed(block);
            } else {
                Matrix sub(mc, mc);
                for (Eigen::Index a = 0; a < mc; ++a)
                    for (Eigen::Index b = 0; b < mc; ++b)
                        sub(a, b) = delta.delta(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
                if (method == Method::classical_scaling) {
                    out.coords[c] = classical_scaling_embed(sub);
                } else {
                    Matrix block(mc, data.dim());
                    for (Eigen::Index r = 0; r < mc; ++r) block.row(r) = data.points.row(idx[static_cast<std::size_t>(r)]);
                    LoeConfig cfg = loe_config;
                    cfg.seed = loe_config.seed + c;
                    Coords coords = loe_embed(block, cfg);
                    coords *= scale_sync(sub, coords);
                    out.coords[c] = coords;
                }
            }
        } catch (const std::exception& e) {
            throw ComputationError("cluster " + std::to_string(c) + ": " + e.what());
        }
    }
    return out;
}

void save_embedding_csv(const std::string& path, const Coords& coords,
                        const std::vector<int>& clusters,
                        const std::vector<int>& original_indices) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot open for writing: " + path);
    out << "index,cluster,y1,y2\n";
    char buf[128];
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g", original_indices[static_cast<std::size_t>(i)],
                      clusters[static_cast<std::size_t>(i)], coords(i, 0), coords(i, 1));
        out << buf << '\n';
    }
}

} // namespace clusterembed::embed
