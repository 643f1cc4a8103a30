#pragma once

#include <cstdint>
#include <vector>

#include "pncode/finite_field.hpp"
#include "pncode/pn_function.hpp"
#include "pncode/weight_dist.hpp"

namespace pncode {

/*
 * The p-ary code of length p^m + 1 whose codeword for (a, b, c) is
 * (Tr(a f(x) + b x) + c)_{x in F_{p^m}} followed by Tr(a), with x running
 * over encodings 0..p^m-1 ascending.  Enumeration walks every triple, so the
 * dimension 2m+1 is verified rather than assumed: a nontrivial kernel is
 * detected through the zero-weight count and the true dimension reported.
 */
class SubfieldCode {
public:
    static constexpr std::uint64_t kDefaultBudget = 100'000'000;  // codeword-symbol operations

    // The function table is copied in; the field must outlive the code.
    SubfieldCode(const FieldCtx& F, PnFunction f);
    SubfieldCode(FieldCtx&&, PnFunction) = delete;

    std::uint32_t length() const { return F_->order() + 1; }
    std::uint32_t claimed_dimension() const { return 2 * F_->m() + 1; }

    std::vector<std::uint8_t> codeword(Fe a, Fe b, std::uint32_t c) const;

    WeightDistribution weight_distribution(std::uint64_t budget = kDefaultBudget) const;
    // Weight distribution of the code with the trailing Tr(a) coordinate deleted.
    WeightDistribution punctured_distribution(std::uint64_t budget = kDefaultBudget) const;

private:
    WeightDistribution enumerate(bool punctured, std::uint64_t budget) const;

    const FieldCtx* F_;
    PnFunction f_;
};

}  // namespace pncode
