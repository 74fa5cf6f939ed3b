#ifndef QZETA_ORACLE_HPP
#define QZETA_ORACLE_HPP

#include <vector>

#include "qzeta/graph.hpp"

// Deliberately naive reference computations used as ground truth in tests.
// Nothing here calls the LU determinant, the Study determinant, or the fast
// Lyndon generator; single-threaded, capped sizes, correctness over speed.
namespace qzeta::oracle {

// Cofactor-expansion determinant; SizeError above 10x10.
cplx naive_det(const CMatrix& m);

// Equivalence class of a prime cycle: the representative is the
// lexicographically least rotation of the arc sequence.
struct PrimeCycleClass {
    std::vector<int> arcs;
    bool prime = true;    // enumeration only ever emits prime classes
    bool reduced = false; // neither the cycle nor its square backtracks

    int length() const { return static_cast<int>(arcs.size()); }
};

// Exhaustive census of prime cycle classes of length <= max_len, one
// canonical representative each; reduced_only keeps backtracking-free
// classes. CapacityError beyond desk scale (max_len > 14).
std::vector<PrimeCycleClass> enumerate_prime_cycles(const Graph& g,
                                                    int max_len,
                                                    bool reduced_only);

// Truncated product over prime cycle classes of (1 - w~(C) t^|C|) with
// complex weights, where w~(C) multiplies the edge weights of every cyclic
// transition including the closing one. This is the reciprocal of the
// truncated zeta.
cplx mizuno_sato_truncated(const Graph& g, const WeightAssignment& w, cplx t,
                           int max_len);

// Definitional Lyndon enumeration: every word of length <= max_len, kept if
// strictly minimal among its rotations. CapacityError when the total word
// count would exceed 10^7.
std::vector<std::vector<int>> lyndon_bruteforce(int alphabet_size, int max_len);

} // namespace qzeta::oracle

#endif // QZETA_ORACLE_HPP
