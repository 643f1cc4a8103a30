#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "pncode/errors.hpp"

namespace pncode {

// Field element encoding: an integer in [0, p^m) whose base-p digits are the
// coordinates in the polynomial basis {1, alpha, ..., alpha^{m-1}}, alpha a
// root of the modulus. Digit i is the coefficient of alpha^i.
using Fe = std::uint32_t;

/*
 * An explicit, fully deterministic model of F_{p^m} for odd prime p.
 *
 * The modulus is the lexicographically smallest monic irreducible polynomial
 * of degree m over F_p, coefficients compared as the tuple
 * (c_{m-1}, ..., c_1, c_0) with each digit scanned 0..p-1.  Multiplication
 * runs through log/antilog tables built on the smallest primitive element,
 * with a table-free polynomial route kept for cross-checks.  Immutable after
 * construction; every operation is a pure function of (ctx, inputs).
 */
class FieldCtx {
public:
    static constexpr std::uint64_t kDefaultMaxOrder = 2187;  // 3^7
    static constexpr std::uint64_t kTableLimit = 1u << 20;

    FieldCtx(std::uint32_t p, std::uint32_t m, std::uint64_t max_order = kDefaultMaxOrder);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;
    FieldCtx(FieldCtx&&) = default;
    FieldCtx& operator=(FieldCtx&&) = default;

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t order() const { return q_; }

    // Monic modulus of degree m, coefficients ascending (constant term first).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    std::uint32_t digit(Fe x, std::uint32_t i) const { return digits_[std::size_t(x) * m_ + i]; }
    Fe element_from_digits(const std::vector<std::uint32_t>& d) const;
    // alpha^i for i < m (the polynomial basis vector v_i).
    Fe basis_element(std::uint32_t i) const { return pw_[i]; }

    Fe add(Fe a, Fe b) const {
        Fe r = 0;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint32_t d = digits_[std::size_t(a) * m_ + i] + digits_[std::size_t(b) * m_ + i];
            if (d >= p_) d -= p_;
            r += d * pw_[i];
        }
        return r;
    }
    Fe neg(Fe a) const {
        Fe r = 0;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint32_t d = digits_[std::size_t(a) * m_ + i];
            if (d) d = p_ - d;
            r += d * pw_[i];
        }
        return r;
    }
    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

    Fe mul(Fe a, Fe b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    Fe inv(Fe a) const;
    Fe pow(Fe a, std::uint64_t e) const;

    // x^{p^j}; j reduced mod m.
    Fe frobenius(Fe x, std::uint32_t j = 1) const;

    // Absolute trace to F_p, returned as an integer in [0, p).
    std::uint32_t trace(Fe x) const { return trace_[x]; }

    // Quadratic character eta: 0 iff x = 0, +1 on nonzero squares, -1 otherwise.
    int quadratic_character(Fe x) const;

    // Smallest encoding of multiplicative order p^m - 1.
    Fe primitive_element() const { return prim_; }
    std::uint64_t mul_order(Fe x) const;

    std::uint32_t log_of(Fe x) const;                       // x != 0
    Fe exp_of(std::uint32_t i) const { return exp_[i % (q_ - 1)]; }

    // Table-free multiplication through polynomial arithmetic mod the
    // modulus. Slow; exists so tests can cross-check the log tables.
    Fe mul_poly(Fe a, Fe b) const;

private:
    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> pw_;       // p^0 .. p^m
    std::vector<std::uint16_t> digits_;   // q*m base-p digits
    std::vector<Fe> exp_;                 // exp_[i] = g^i, i < q-1
    std::vector<std::uint32_t> log_;      // inverse of exp_ (log_[0] unused)
    std::vector<std::uint16_t> trace_;
    std::vector<std::uint32_t> qm1_primes_;
    Fe prim_ = 0;
};

FieldCtx make_field(std::uint32_t p, std::uint32_t m,
                    std::uint64_t max_order = FieldCtx::kDefaultMaxOrder);

/*
 * Quadratic Gauss sum G(eta, chi) of the field, kept in two forms: the
 * closed two-case expression (sign * i^delta * p^{m/2}) and the direct
 * character sum. Construction fails if the two disagree beyond 1e-9
 * relative error, which would indicate broken field arithmetic.
 */
struct GaussSumValue {
    int sign = 1;        // +1 or -1
    int i_power = 0;     // delta in {0,1,2,3}
    std::uint32_t p = 0;
    std::uint32_t m = 0;                   // magnitude is p^{m/2}
    std::complex<double> numeric;          // direct summation
    std::complex<double> symbolic_value() const;
};

GaussSumValue gauss_sum(const FieldCtx& field);

}  // namespace pncode
