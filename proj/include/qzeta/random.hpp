#ifndef QZETA_RANDOM_HPP
#define QZETA_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "qzeta/graph.hpp"

namespace qzeta {

// Counter-based seed splitting: one master seed plus a trial index yields an
// independent, reproducible stream per trial regardless of scheduling.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
    return splitmix64(splitmix64(master) ^ splitmix64(counter * 0xd1b54a32d192ed03ULL + 1));
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Uniform over the solid ball of the given radius (rejection from the cube).
inline Quaternion random_quaternion_in_ball(std::mt19937_64& rng,
                                            double radius) {
    while (true) {
        Quaternion q(uniform_real(rng, -1.0, 1.0), uniform_real(rng, -1.0, 1.0),
                     uniform_real(rng, -1.0, 1.0), uniform_real(rng, -1.0, 1.0));
        if (q.norm_sq() <= 1.0) return radius * q;
    }
}

// Random spanning tree plus extra random edges; always connected.
inline Graph random_connected_graph(std::mt19937_64& rng, int n_min, int n_max,
                                    bool force_tree = false) {
    const int n = uniform_int(rng, n_min, n_max);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        edges.push_back({uniform_int(rng, 0, v - 1), v});
    }
    if (!force_tree && n >= 3) {
        std::vector<std::pair<int, int>> candidates;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                bool present = false;
                for (auto [a, b] : edges) {
                    if ((a == u && b == v) || (a == v && b == u)) {
                        present = true;
                        break;
                    }
                }
                if (!present) candidates.push_back({u, v});
            }
        }
        std::shuffle(candidates.begin(), candidates.end(), rng);
        const int extra =
            uniform_int(rng, 0, std::min<int>(n, static_cast<int>(candidates.size())));
        edges.insert(edges.end(), candidates.begin(), candidates.begin() + extra);
    }
    return Graph(n, std::move(edges));
}

inline WeightAssignment random_weights(std::mt19937_64& rng, const Graph& g,
                                       double max_weight_norm) {
    std::vector<Quaternion> per_arc;
    per_arc.reserve(static_cast<std::size_t>(g.arc_count()));
    for (int e = 0; e < g.arc_count(); ++e) {
        per_arc.push_back(random_quaternion_in_ball(rng, max_weight_norm));
    }
    return WeightAssignment(g, std::move(per_arc));
}

} // namespace qzeta

#endif // QZETA_RANDOM_HPP
