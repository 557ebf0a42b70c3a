#include "clusterembed/dissim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "clusterembed/parallel.hpp"

namespace clusterembed::dissim {

namespace {

double row_distance(const Matrix& points, Eigen::Index i, Eigen::Index j) {
    return (points.row(i) - points.row(j)).norm();
}

// Union-find over graph vertices.
struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

DissimilarityMatrix euclidean_pairwise(const DataMatrix& data) {
    data.validate();
    const Eigen::Index n = data.n();
    DissimilarityMatrix out;
    out.kind = DissimilarityKind::euclidean;
    out.delta = Matrix::Zero(n, n);
    parallel_for_chunks(n, 16, [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                if (i != j) out.delta(i, j) = row_distance(data.points, i, j);
    });
    return out;
}

KnnGraph build_knn_graph(const DataMatrix& data, int k) {
    data.validate();
    const Eigen::Index n = data.n();
    if (k < 1 || k > n - 1)
        throw ParameterError("knn neighbor count must satisfy 1 <= k <= n-1");

    KnnGraph graph;
    graph.points = data.points;
    graph.k = k;
    graph.neighbors.assign(static_cast<std::size_t>(n), {});

    parallel_for_chunks(n, 8, [&](std::int64_t begin, std::int64_t end) {
        std::vector<KnnEdge> candidates;
        for (std::int64_t i = begin; i < end; ++i) {
            candidates.clear();
            candidates.reserve(static_cast<std::size_t>(n) - 1);
            for (Eigen::Index j = 0; j < n; ++j)
                if (j != i) candidates.push_back({static_cast<int>(j), row_distance(data.points, i, j)});
            std::partial_sort(candidates.begin(), candidates.begin() + k, candidates.end(),
                              [](const KnnEdge& a, const KnnEdge& b) {
                                  return a.weight != b.weight ? a.weight < b.weight
                                                              : a.index < b.index;
                              });
            candidates.resize(static_cast<std::size_t>(k));
            graph.neighbors[static_cast<std::size_t>(i)] = candidates;
        }
    });
    return graph;
}

DissimilarityMatrix geodesic_pairwise(const KnnGraph& graph) {
    const Eigen::Index n = graph.n();
    if (n == 0 || graph.neighbors.empty()) throw InvalidInputError("knn graph is empty");

    // Union-symmetrized adjacency.
    std::vector<std::vector<KnnEdge>> adj(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (const KnnEdge& e : graph.neighbors[static_cast<std::size_t>(i)]) {
            adj[static_cast<std::size_t>(i)].push_back(e);
            adj[static_cast<std::size_t>(e.index)].push_back({static_cast<int>(i), e.weight});
        }
    }

    DisjointSet components(static_cast<int>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        for (const KnnEdge& e : adj[static_cast<std::size_t>(i)]) components.unite(static_cast<int>(i), e.index);

    std::vector<int> roots;
    for (int i = 0; i < n; ++i)
        if (components.find(i) == i) roots.push_back(i);

    if (roots.size() > 1) {
        // Bridge every component pair by its closest point pair so all
        // shortest paths stay finite.
        std::vector<std::vector<int>> member_lists(roots.size());
        for (int i = 0; i < n; ++i) {
            const int r = components.find(i);
            const auto it = std::lower_bound(roots.begin(), roots.end(), r);
            member_lists[static_cast<std::size_t>(it - roots.begin())].push_back(i);
        }
        int added = 0;
        for (std::size_t a = 0; a < member_lists.size(); ++a) {
            for (std::size_t b = a + 1; b < member_lists.size(); ++b) {
                int best_i = -1, best_j = -1;
                double best = std::numeric_limits<double>::infinity();
                for (int i : member_lists[a]) {
                    for (int j : member_lists[b]) {
                        const double d = row_distance(graph.points, i, j);
                        if (d < best) {
                            best = d;
                            best_i = i;
                            best_j = j;
                        }
                    }
                }
                adj[static_cast<std::size_t>(best_i)].push_back({best_j, best});
                adj[static_cast<std::size_t>(best_j)].push_back({best_i, best});
                ++added;
            }
        }
        std::cerr << "[dissim] knn graph had " << roots.size() << " components; bridged with "
                  << added << " minimum cross edges\n";
    }

    DissimilarityMatrix out;
    out.kind = DissimilarityKind::geodesic;
    out.delta = Matrix::Zero(n, n);

    parallel_for_chunks(n, 4, [&](std::int64_t begin, std::int64_t end) {
        std::vector<double> dist(static_cast<std::size_t>(n));
        using Item = std::pair<double, int>;
        for (std::int64_t source = begin; source < end; ++source) {
            std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
            dist[static_cast<std::size_t>(source)] = 0.0;
            std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
            heap.push({0.0, static_cast<int>(source)});
            while (!heap.empty()) {
                const auto [d, u] = heap.top();
                heap.pop();
                if (d > dist[static_cast<std::size_t>(u)]) continue;
                for (const KnnEdge& e : adj[static_cast<std::size_t>(u)]) {
                    const double nd = d + e.weight;
                    if (nd < dist[static_cast<std::size_t>(e.index)]) {
                        dist[static_cast<std::size_t>(e.index)] = nd;
                        heap.push({nd, e.index});
                    }
                }
            }
            for (Eigen::Index j = 0; j < n; ++j) out.delta(source, j) = dist[static_cast<std::size_t>(j)];
        }
    });

    // Dijkstra runs per source can disagree in the last ulp between (i, j)
    // and (j, i); enforce exact symmetry from the lower triangle.
    for (Eigen::Index i = 0; i < n; ++i) {
        out.delta(i, i) = 0.0;
        for (Eigen::Index j = 0; j < i; ++j) out.delta(j, i) = out.delta(i, j);
    }
    return out;
}

void save_dissimilarity_csv(const DissimilarityMatrix& delta, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot open for writing: " + path);
    char buf[64];
    const Eigen::Index n = delta.n();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", delta.delta(i, j));
            if (j) out << ',';
            out << buf;
        }
        out << '\n';
    }
}

DissimilarityMatrix load_dissimilarity_csv(const std::string& path, DissimilarityKind kind) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t pos = 0;
                const double v = std::stod(cell, &pos);
                if (pos != cell.size()) throw std::invalid_argument(cell);
                row.push_back(v);
            } catch (const std::exception&) {
                throw InvalidInputError("row " + std::to_string(rows.size() + 1) +
                                        ": non-numeric cell '" + cell + "' in " + path);
            }
        }
        rows.push_back(std::move(row));
    }
    const std::size_t n = rows.size();
    if (n == 0) throw InvalidInputError("empty dissimilarity CSV: " + path);
    DissimilarityMatrix out;
    out.kind = kind;
    out.delta = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw InvalidInputError("row " + std::to_string(i + 1) + ": expected " +
                                    std::to_string(n) + " values in " + path);
        for (std::size_t j = 0; j < n; ++j) out.delta(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    out.validate();
    return out;
}

} // namespace clusterembed::dissim
