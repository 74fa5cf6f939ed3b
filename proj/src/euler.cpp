#include "qzeta/euler.hpp"

#include <algorithm>
#include <cmath>

#include "qzeta/zeta.hpp"

namespace qzeta {

namespace {

// Projected count of Lyndon words of length <= max_len over N letters,
// overestimated by sum N^d / d; saturates at infinity for huge inputs.
double projected_lyndon_count(int n_letters, int max_len) {
    double total = 0.0;
    double power = 1.0;
    for (int d = 1; d <= max_len; ++d) {
        power *= static_cast<double>(n_letters);
        total += power / static_cast<double>(d);
        if (!std::isfinite(total)) break;
    }
    return total;
}

} // namespace

void lyndon_generate(int alphabet_size, int max_len,
                     const std::function<void(std::span<const int>)>& emit,
                     std::uint64_t cap) {
    if (alphabet_size < 1) throw DomainError("lyndon_generate: alphabet size must be >= 1");
    if (max_len < 1) throw DomainError("lyndon_generate: max_len must be >= 1");
    if (projected_lyndon_count(alphabet_size, max_len) >
        static_cast<double>(cap)) {
        throw CapacityError("lyndon_generate: projected word count exceeds cap");
    }

    // Duval successor stepping: emit, extend periodically to max_len, strip
    // trailing maximal letters, increment.
    std::vector<int> w{0};
    while (true) {
        emit(std::span<const int>(w.data(), w.size()));
        const std::size_t period = w.size();
        w.resize(static_cast<std::size_t>(max_len));
        for (std::size_t i = period; i < w.size(); ++i) w[i] = w[i - period];
        while (!w.empty() && w.back() == alphabet_size - 1) w.pop_back();
        if (w.empty()) return;
        ++w.back();
    }
}

std::vector<std::vector<int>> lyndon_words(int alphabet_size, int max_len,
                                           std::uint64_t cap) {
    std::vector<std::vector<int>> out;
    lyndon_generate(
        alphabet_size, max_len,
        [&out](std::span<const int> w) { out.emplace_back(w.begin(), w.end()); },
        cap);
    return out;
}

std::vector<std::vector<int>> lyndon_factorize(std::span<const int> word) {
    if (word.empty()) throw EmptyWordError("lyndon_factorize: empty word");
    std::vector<std::vector<int>> factors;
    std::size_t i = 0;
    const std::size_t n = word.size();
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && word[k] <= word[j]) {
            if (word[k] < word[j])
                k = i;
            else
                ++k;
            ++j;
        }
        const std::size_t len = j - k; // length of the Lyndon factor
        while (i <= k) {
            factors.emplace_back(word.begin() + static_cast<std::ptrdiff_t>(i),
                                 word.begin() + static_cast<std::ptrdiff_t>(i + len));
            i += len;
        }
    }
    return factors;
}

namespace {

// Depth-first generation of Lyndon words over the arc alphabet, restricted
// to words whose consecutive transitions all carry a nonzero edge weight
// (any zero transition forces factor 1, so such words are skipped wholesale).
// Standard pre-necklace recursion: the prefix of length t with longest
// Lyndon-prefix period p is a Lyndon word exactly when t == p.
class PrunedLyndonScan {
  public:
    PrunedLyndonScan(QMatrix wtilde, Quaternion t, int max_len,
                     bool real_factored, std::uint64_t cap)
        : wt_(std::move(wtilde)), t_(t), max_len_(max_len),
          real_factored_(real_factored), cap_(cap),
          n_letters_(static_cast<int>(wtilde.rows())) {
        succ_.resize(static_cast<std::size_t>(n_letters_));
        for (int a = 0; a < n_letters_; ++a)
            for (int b = 0; b < n_letters_; ++b)
                if (!wt_(static_cast<std::size_t>(a), static_cast<std::size_t>(b))
                         .is_zero())
                    succ_[static_cast<std::size_t>(a)].push_back(b);
        word_.reserve(static_cast<std::size_t>(max_len));
        // step_[i]: running product of per-transition terms for transitions
        // word_[0]->word_[1], ..., word_[i-1]->word_[i].
        step_.assign(1, Quaternion(1.0));
        factor_by_len_.assign(static_cast<std::size_t>(max_len) + 1, 1.0);
        count_by_len_.assign(static_cast<std::size_t>(max_len) + 1, 0);
    }

    void run() {
        for (int a = 0; a < n_letters_; ++a) {
            word_.assign(1, a);
            step_.assign(1, Quaternion(1.0));
            descend(1);
        }
    }

    std::vector<double> factor_by_len_;
    std::vector<std::uint64_t> count_by_len_;
    std::uint64_t words_ = 0; // Lyndon words seen (contributing or not)
    std::uint64_t nodes_ = 0; // DFS nodes, the actual work bound

  private:
    Quaternion step_term(int a, int b) const {
        const Quaternion& ww =
            wt_(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        return real_factored_ ? ww : t_ * ww;
    }

    void contribute() {
        const std::size_t d = word_.size();
        const Quaternion& closing =
            wt_(static_cast<std::size_t>(word_.back()),
                static_cast<std::size_t>(word_.front()));
        if (closing.is_zero()) return;
        Quaternion q = step_.back() * step_term(word_.back(), word_.front());
        if (real_factored_) {
            double td = 1.0;
            for (std::size_t i = 0; i < d; ++i) td *= t_.x0;
            q = q * td;
        }
        factor_by_len_[d] *= (Quaternion(1.0) - q).norm_sq();
        ++count_by_len_[d];
    }

    // word_[0..len-1] is a pre-necklace with Lyndon-prefix period p.
    void descend(std::size_t period) {
        if (++nodes_ > cap_) {
            throw CapacityError("euler truncation: cycle enumeration exceeds cap");
        }
        const std::size_t len = word_.size();
        if (len == period) { // Lyndon word
            ++words_;
            contribute();
        }
        if (len == static_cast<std::size_t>(max_len_)) return;

        const int last = word_.back();
        const int floor_letter = word_[len - period];
        for (int c : succ_[static_cast<std::size_t>(last)]) {
            if (c < floor_letter) continue;
            word_.push_back(c);
            step_.push_back(step_.back() * step_term(last, c));
            descend(c == floor_letter ? period : len + 1);
            step_.pop_back();
            word_.pop_back();
        }
    }

    QMatrix wt_;
    Quaternion t_;
    int max_len_;
    bool real_factored_;
    std::uint64_t cap_;
    int n_letters_;
    std::vector<std::vector<int>> succ_;
    std::vector<int> word_;
    std::vector<Quaternion> step_;
};

} // namespace

EulerTruncation euler_reciprocal_truncated(const Graph& g,
                                           const WeightAssignment& w,
                                           Quaternion t, int max_len,
                                           FactorForm form, std::uint64_t cap) {
    if (max_len < 1) throw DomainError("euler truncation: max_len must be >= 1");
    if (!t.is_finite()) throw DomainError("euler truncation: t not finite");
    if (form == FactorForm::real_factored && !t.is_real()) {
        throw DomainError("euler truncation: real-factored form needs real t");
    }

    EulerTruncation out;
    out.max_len = max_len;
    out.guard_value = t.norm() * max_edge_weight_norm(g, w);
    out.guard_bound = convergence_guard_bound(g);
    out.guard_ok = out.guard_value < out.guard_bound;

    PrunedLyndonScan scan(edge_matrix(g, w), t, max_len,
                          form == FactorForm::real_factored, cap);
    scan.run();

    out.words_generated = scan.words_;
    out.cycle_counts.assign(scan.count_by_len_.begin() + 1,
                            scan.count_by_len_.end());
    out.partial_products.assign(static_cast<std::size_t>(max_len) + 1, 1.0);
    for (int len = 1; len <= max_len; ++len) {
        out.partial_products[static_cast<std::size_t>(len)] =
            out.partial_products[static_cast<std::size_t>(len) - 1] *
            scan.factor_by_len_[static_cast<std::size_t>(len)];
    }
    return out;
}

ConvergenceReport euler_convergence_report(const Graph& g,
                                           const WeightAssignment& w,
                                           Quaternion t, int max_len,
                                           bool compare_bass) {
    const EulerTruncation trunc =
        euler_reciprocal_truncated(g, w, t, max_len);
    ConvergenceReport out;
    out.guard_value = trunc.guard_value;
    out.guard_bound = trunc.guard_bound;
    out.guard_ok = trunc.guard_ok;
    out.final_value = trunc.value();
    for (int len = 1; len <= max_len; ++len) {
        ConvergenceRow row;
        row.length = len;
        row.cycles = trunc.cycle_counts[static_cast<std::size_t>(len) - 1];
        row.partial = trunc.partial_products[static_cast<std::size_t>(len)];
        const double prev =
            trunc.partial_products[static_cast<std::size_t>(len) - 1];
        row.delta = std::abs(row.partial / prev - 1.0);
        out.rows.push_back(row);
    }
    if (compare_bass) {
        const double bass = reciprocal_bass(g, w, t);
        out.bass_value = bass;
        out.bass_gap = std::abs(out.final_value - bass) /
                       std::max({1.0, out.final_value, bass});
    }
    return out;
}

} // namespace qzeta
