#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "pncode/exact.hpp"
#include "pncode/finite_field.hpp"
#include "pncode/weight_dist.hpp"

namespace pncode {

enum class PredictionSource { DoOddFull, DoEvenFull, CmOddFull, CmEvenFull, DoPunctured, CmPunctured };
const char* prediction_source_name(PredictionSource s);

/*
 * Closed-form weight distribution of the code, expanded into explicit
 * (weight, count) pairs.  Rows whose instantiated weights collide are merged
 * by summation and zero-count rows dropped; the total is always checked to
 * be p^{2m+1}.
 */
struct Prediction {
    PredictionSource source;
    WeightDistribution distribution;
    std::uint32_t p = 0, m = 0;
    std::optional<int> epsilon;
    std::optional<CodeParams> dual_params;  // claimed parameters of the dual
    std::optional<Int> dual_a4;             // claimed number of dual weight-4 words
    bool dual_degenerate = false;           // punctured p=3, m=1: dual is the zero code
};

// Full-length code from a planar DO function (weights depend on epsilon for
// even m; odd m needs no epsilon and ignores one if passed).
Prediction predict_pn_do(std::uint32_t p, std::uint32_t m, std::optional<int> epsilon);

// Full-length code from a Coulter-Matthews function over F_{3^m}.
Prediction predict_cm(std::uint32_t m);

enum class PuncturedKind { PnDo, Cm };
Prediction predict_punctured(std::uint32_t p, std::uint32_t m, PuncturedKind kind);

/*
 * First five power-moment identities linking the primal moments
 * sum_i i^j A_i (j = 0..4) to the dual low-weight counts A1..A4. Residuals
 * are the multiplied-through integer differences q^j * S_j - q^k * rhs_j,
 * zero exactly when the identity holds.
 */
struct PlessCheck {
    bool ok = false;
    std::array<Int, 5> residuals;
};
PlessCheck pless_verify(const WeightDistribution& primal, const std::array<Int, 4>& dual_a);

enum class BoundVerdict { Optimal, RuledOut, Inconclusive };
const char* verdict_name(BoundVerdict v);

struct BoundReport {
    std::uint32_t n = 0, k = 0, d = 0, q = 0;
    BoundVerdict verdict = BoundVerdict::Inconclusive;
    Int space;          // q^n
    Int packed;         // q^k * ball volume at the claimed d
    std::uint32_t best_d = 0;  // largest d' such that [n,k,d'] passes the bound
};

// q^n >= q^k sum_{i<=floor((d-1)/2)} C(n,i)(q-1)^i, evaluated exactly.
BoundReport sphere_packing_check(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint32_t q);

// Graph-theory bound on A_q(n,d) for q >= 3: with t = n-d+1 and
// r = floor(min((n-t)/2, (t-1)/(q-2))), A_q(n,d) <= q^{t+2r} / ball(t+2r, r).
Rat graph_bound(std::uint32_t q, std::uint32_t n, std::uint32_t d);
// True iff q^k codewords already exceed the bound, i.e. no [n,k,d] code exists.
bool graph_bound_rules_out(std::uint32_t q, std::uint32_t n, std::uint32_t k, std::uint32_t d);

// Number of (x,y,z) with x+y+z = 0 and f(x)+f(y)+f(z)+u = 0 for the
// Coulter-Matthews f over F_{3^m}; brute force, asserted against the
// closed form {3^m, 2*3^m, 0} by square class of u.
std::uint64_t nu_count(const FieldCtx& F, std::uint32_t k, Fe u);

}  // namespace pncode
