#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pncode/finite_field.hpp"

namespace pncode {

enum class PnFamily { F1, F2CM, F3, F4, F5, F6, F7, F8, Raw };

const char* family_name(PnFamily f);

/*
 * A member of one of the known planar-function families, validated against
 * the family's side conditions at construction.  Evaluation is a cached
 * table over the whole field.  raw_polynomial() bypasses validation and is
 * flagged unverified; it exists so tests can exercise the planarity checker
 * negatively and never feeds the closed-form predictors.
 *
 * The field context must outlive the function.
 */
class PnFunction {
public:
    // x^{p^k+1}, k >= 0, m/gcd(m,k) odd (gcd(m,0) = m).
    static PnFunction f1(const FieldCtx& F, std::uint32_t k, Fe scale = 1);
    // Coulter-Matthews x^{(3^k+1)/2}, p = 3, k odd, gcd(m,k) = 1.
    static PnFunction coulter_matthews(const FieldCtx& F, std::uint32_t k);
    // x^10 - beta x^6 - beta^2 x^2, p = 3, m odd, beta != 0.
    static PnFunction f3(const FieldCtx& F, Fe beta, Fe scale = 1);
    // beta x^{p^k+1} - beta^{p^s} x^{p^{ls}+p^{-ls+k}}, m = 3s; beta primitive.
    static PnFunction f4(const FieldCtx& F, std::uint32_t k, std::optional<Fe> beta = std::nullopt,
                         Fe scale = 1);
    // (beta x)^{p^k+1} - ((beta x)^{p^k+1})^{p^s} + sum c_i x^{p^i(p^s+1)}, m = 2s.
    static PnFunction f5(const FieldCtx& F, std::uint32_t k, Fe beta, const std::vector<Fe>& c,
                         Fe scale = 1);
    // beta x^{p^s+1} + z x^{p^k+p^t} + z^{p^s} x^{p^{k+s}+p^{s+t}} + sum w_i x^{p^i(p^s+1)},
    // m = 2s, z = alpha^r for alpha the primitive element.
    static PnFunction f6(const FieldCtx& F, std::uint32_t k, std::uint32_t t, std::uint64_t r,
                         Fe beta, const std::vector<Fe>& w, Fe scale = 1);
    // x^{p^t+1} - beta x^{p^{2s}+p^{s+t}}, m = 3s, ord(beta) = p^{2s}+p^s+1.
    static PnFunction f7(const FieldCtx& F, std::uint32_t t, std::optional<Fe> beta = std::nullopt,
                         Fe scale = 1);
    // x^{p^t+1} - beta x^{p^{3s}+p^{t+s}}, m = 4s, ord(beta) = p^{3s}+p^{2s}+p^s+1.
    static PnFunction f8(const FieldCtx& F, std::uint32_t t, std::optional<Fe> beta = std::nullopt,
                         Fe scale = 1);
    // Unvalidated escape hatch: coefficients ascending, constant term first.
    static PnFunction raw_polynomial(const FieldCtx& F, const std::vector<Fe>& coeffs);

    Fe operator()(Fe x) const { return table_[x]; }
    const FieldCtx& field() const { return *ctx_; }
    PnFamily family() const { return family_; }
    bool is_do() const { return family_ != PnFamily::F2CM && family_ != PnFamily::Raw; }
    bool unverified() const { return unverified_; }
    Fe scale() const { return scale_; }
    const std::string& label() const { return label_; }
    const std::map<std::string, std::string>& params() const { return params_; }

private:
    PnFunction(const FieldCtx& F, PnFamily fam) : ctx_(&F), family_(fam) {}

    const FieldCtx* ctx_;
    PnFamily family_;
    std::vector<Fe> table_;
    Fe scale_ = 1;
    bool unverified_ = false;
    std::string label_;
    std::map<std::string, std::string> params_;
};

// Exhaustive planarity check: every nonzero-shift difference map
// x -> f(x+a) - f(x) must be a bijection of the field. O(p^{2m}).
bool verify_pn(const PnFunction& f);

}  // namespace pncode
