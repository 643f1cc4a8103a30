#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pncode/finite_field.hpp"
#include "pncode/pn_function.hpp"

namespace pncode {

/*
 * Symmetric m x m matrix A over F_p with Q(x) = X A X^T in the polynomial
 * basis. Construction from a trace form validates the representation
 * pointwise against Tr(a f(x)) over the whole field.
 */
struct QuadraticForm {
    std::uint32_t p = 0, m = 0;
    std::vector<std::uint32_t> a;  // row-major, entries in [0, p)
    std::string source;

    std::uint32_t at(std::uint32_t r, std::uint32_t c) const { return a[std::size_t(r) * m + c]; }
    // Q evaluated on base-p digit coordinates.
    std::uint32_t eval_digits(const std::uint32_t* d) const;
    // Q on an element encoding (digits derived from p alone; basis-free).
    std::uint32_t eval_encoding(Fe x) const;
};

struct RankDetReport {
    std::uint32_t rank = 0;
    int det_class = 0;           // eta_0(det A), 0 iff degenerate
    int type = 0;                // eta_0 of the product of nonzero diagonal entries after congruent diagonalization
    std::uint32_t det_mod_p = 0; // raw determinant in the fixed basis (basis-dependent)
};

// A[k][l] from the polarization identity; rejects Coulter-Matthews input and
// anything whose reconstructed Q fails to match Tr(a f(x)) pointwise.
QuadraticForm trace_form_matrix(const FieldCtx& F, const PnFunction& f, Fe a);

// Rank through three routes (Gaussian elimination, radical dimension from Q
// itself, congruent diagonalization), cross-checked.
RankDetReport rank_and_det(const QuadraticForm& qf);

// det(Tr(af)) = a^{(p^m-1)/(p-1)} det(Tr(f)) for every a != 0: the exact
// scalar identity in the fixed polynomial basis plus its square-class
// consequence. Returns false on any violation.
bool check_det_relation(const FieldCtx& F, const PnFunction& f);

// N_{b,c} = |{x : Q(x) + Tr(bx) = c}| by brute force, cross-checked against
// the closed form obtained by diagonalizing and completing the square.
std::uint64_t count_solutions(const FieldCtx& F, const QuadraticForm& qf, Fe b, std::uint32_t c);

// Histogram value -> multiplicity of N_{b,c} over all (b,c) pairs.
std::map<std::uint64_t, std::uint64_t> nbc_histogram(const FieldCtx& F, const QuadraticForm& qf);

// (-1)^{m(p-1)/4} * eta_0(det(Tr(f))), defined for even m only.
int epsilon_of(const FieldCtx& F, const PnFunction& f);

}  // namespace pncode
