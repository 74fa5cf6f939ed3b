#include "qzeta/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace qzeta::oracle {

namespace {

CMatrix minor_matrix(const CMatrix& m, std::size_t drop_row,
                     std::size_t drop_col) {
    CMatrix out(m.rows() - 1, m.cols() - 1);
    std::size_t rr = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r == drop_row) continue;
        std::size_t cc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c == drop_col) continue;
            out(rr, cc) = m(r, c);
            ++cc;
        }
        ++rr;
    }
    return out;
}

cplx cofactor_det(const CMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1.0;
    if (n == 1) return m(0, 0);
    cplx acc = 0.0;
    double sign = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) != cplx{}) {
            acc += sign * m(0, c) * cofactor_det(minor_matrix(m, 0, c));
        }
        sign = -sign;
    }
    return acc;
}

std::vector<int> least_rotation(const std::vector<int>& word) {
    std::vector<int> best = word;
    std::vector<int> rot = word;
    for (std::size_t s = 1; s < word.size(); ++s) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

bool is_primitive(const std::vector<int>& word) {
    const std::size_t n = word.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i)
            periodic = (word[i] == word[i - p]);
        if (periodic) return false;
    }
    return true;
}

bool cycle_is_reduced(const Graph& g, const std::vector<int>& arcs) {
    const ArcTable& table = g.arc_table();
    const std::size_t n = arcs.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (arcs[(i + 1) % n] == table.inverse(arcs[i])) return false;
    }
    return true;
}

} // namespace

cplx naive_det(const CMatrix& m) {
    if (!m.square()) throw ShapeError("naive_det: need square matrix");
    if (m.rows() > 10) throw SizeError("naive_det: size capped at 10");
    return cofactor_det(m);
}

std::vector<PrimeCycleClass> enumerate_prime_cycles(const Graph& g,
                                                    int max_len,
                                                    bool reduced_only) {
    if (max_len > 14) {
        throw CapacityError("enumerate_prime_cycles: max_len capped at 14");
    }
    const ArcTable& arcs = g.arc_table();
    std::vector<std::vector<int>> out_arcs; // successor arcs per arc
    out_arcs.resize(static_cast<std::size_t>(arcs.size()));
    for (int e = 0; e < arcs.size(); ++e)
        for (int f = 0; f < arcs.size(); ++f)
            if (arcs.terminal(e) == arcs.origin(f))
                out_arcs[static_cast<std::size_t>(e)].push_back(f);

    std::vector<PrimeCycleClass> classes;
    std::vector<int> walk;

    // DFS keeping every arc >= the start arc. The least rotation of a word
    // begins with its minimal letter, so each class's canonical
    // representative is generated exactly once, from its own first arc; the
    // least-rotation equality filters every other sequence.
    auto extend = [&](auto&& self, int start) -> void {
        if (arcs.terminal(walk.back()) == arcs.origin(start) &&
            walk == least_rotation(walk) && is_primitive(walk)) {
            PrimeCycleClass cls;
            cls.arcs = walk;
            cls.reduced = cycle_is_reduced(g, walk);
            if (!reduced_only || cls.reduced) classes.push_back(std::move(cls));
        }
        if (static_cast<int>(walk.size()) >= max_len) return;
        const int last = walk.back();
        for (int f : out_arcs[static_cast<std::size_t>(last)]) {
            if (f < start) continue;
            walk.push_back(f);
            self(self, start);
            walk.pop_back();
        }
    };
    for (int start = 0; start < arcs.size(); ++start) {
        walk.assign(1, start);
        extend(extend, start);
    }

    std::sort(classes.begin(), classes.end(),
              [](const PrimeCycleClass& a, const PrimeCycleClass& b) {
                  if (a.arcs.size() != b.arcs.size())
                      return a.arcs.size() < b.arcs.size();
                  return a.arcs < b.arcs;
              });
    return classes;
}

cplx mizuno_sato_truncated(const Graph& g, const WeightAssignment& w, cplx t,
                           int max_len) {
    if (!w.all_complex()) {
        throw DomainError("mizuno_sato_truncated: weights must be complex");
    }
    const auto classes = enumerate_prime_cycles(g, max_len, false);
    cplx product = 1.0;
    for (const PrimeCycleClass& cls : classes) {
        cplx wc = 1.0;
        const std::size_t len = cls.arcs.size();
        for (std::size_t i = 0; i < len; ++i) {
            wc *= edge_weight(g, w, cls.arcs[i], cls.arcs[(i + 1) % len])
                      .simplex();
        }
        cplx tl = 1.0;
        for (std::size_t i = 0; i < len; ++i) tl *= t;
        product *= (1.0 - wc * tl);
    }
    return product;
}

std::vector<std::vector<int>> lyndon_bruteforce(int alphabet_size,
                                                int max_len) {
    if (alphabet_size < 1 || max_len < 1) {
        throw DomainError("lyndon_bruteforce: need alphabet and max_len >= 1");
    }
    double total = 0.0, power = 1.0;
    for (int d = 1; d <= max_len; ++d) {
        power *= alphabet_size;
        total += power;
    }
    if (total > 1e7) {
        throw CapacityError("lyndon_bruteforce: word count exceeds 10^7");
    }

    std::vector<std::vector<int>> found;
    std::vector<int> word;
    for (int len = 1; len <= max_len; ++len) {
        word.assign(static_cast<std::size_t>(len), 0);
        while (true) {
            // Lyndon iff strictly smaller than every proper rotation.
            bool lyndon = true;
            std::vector<int> rot = word;
            for (int s = 1; s < len && lyndon; ++s) {
                std::rotate(rot.begin(), rot.begin() + 1, rot.end());
                if (!(word < rot)) lyndon = false;
            }
            if (lyndon) found.push_back(word);
            // next word in base-alphabet_size counting
            int pos = len - 1;
            while (pos >= 0 && word[static_cast<std::size_t>(pos)] ==
                                   alphabet_size - 1) {
                word[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++word[static_cast<std::size_t>(pos)];
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace qzeta::oracle
