#ifndef QZETA_EULER_HPP
#define QZETA_EULER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qzeta/graph.hpp"

namespace qzeta {

// All Lyndon words of length <= max_len over {0..alphabet_size-1}, emitted
// in lexicographic order via successor stepping. Throws CapacityError when
// the projected word count exceeds cap.
void lyndon_generate(int alphabet_size, int max_len,
                     const std::function<void(std::span<const int>)>& emit,
                     std::uint64_t cap = 100'000'000);
std::vector<std::vector<int>> lyndon_words(int alphabet_size, int max_len,
                                           std::uint64_t cap = 100'000'000);

// Unique factorization into a lexicographically nonincreasing sequence of
// Lyndon words (Chen-Fox-Lyndon, computed by Duval's algorithm).
std::vector<std::vector<int>> lyndon_factorize(std::span<const int> word);

// How the local factor is evaluated. The interleaved form multiplies
// t * edge_weight step by step around the cycle; the real-factored form
// pulls a real t out as t^d. Both give |1 - q|^2 per word.
enum class FactorForm { interleaved, real_factored };

struct EulerTruncation {
    int max_len = 0;
    // partial_products[L] = product of factors over words of length <= L.
    std::vector<double> partial_products;
    // Contributing (closed, nonzero-weight) Lyndon words of each length.
    std::vector<std::uint64_t> cycle_counts;
    std::uint64_t words_generated = 0;
    double guard_value = 0.0; // |t| * max edge weight
    double guard_bound = 0.0; // 1/(8 m^2)
    bool guard_ok = false;

    double value() const { return partial_products.back(); }
};

// Truncated reciprocal: the product over Lyndon words i1..id over the arc
// alphabet of |1 - t*w~(e_i1,e_i2) * t*w~(e_i2,e_i3) * ... * t*w~(e_id,e_i1)|^2,
// words longer than max_len dropped. Words with any vanishing transition
// weight contribute factor 1 and are pruned during generation. A violated
// convergence guard is reported in the result, not fatal.
EulerTruncation euler_reciprocal_truncated(const Graph& g,
                                           const WeightAssignment& w,
                                           Quaternion t, int max_len,
                                           FactorForm form = FactorForm::interleaved,
                                           std::uint64_t cap = 1'000'000'000);

struct ConvergenceRow {
    int length = 0;
    std::uint64_t cycles = 0;
    double partial = 1.0;
    double delta = 0.0; // |partial(L)/partial(L-1) - 1|
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    double final_value = 1.0;
    std::optional<double> bass_value;
    std::optional<double> bass_gap; // relative, vs final_value
    double guard_value = 0.0;
    double guard_bound = 0.0;
    bool guard_ok = false;
};

ConvergenceReport euler_convergence_report(const Graph& g,
                                           const WeightAssignment& w,
                                           Quaternion t, int max_len,
                                           bool compare_bass = false);

} // namespace qzeta

#endif // QZETA_EULER_HPP
