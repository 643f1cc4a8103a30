#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pncode/exact.hpp"

#include <json.hpp>

namespace pncode {

/*
 * Exact weight distribution of a q-ary [n, k] linear code: weight -> count
 * with arbitrary-precision counts. Zero-count weights are never stored.
 */
struct WeightDistribution {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    std::map<std::uint32_t, Int> counts;

    Int total() const;
    Int count_at(std::uint32_t w) const;
    void validate() const;  // throws std::invalid_argument
    bool operator==(const WeightDistribution&) const = default;

    // Text form of the enumerator polynomial, "1+18x^4+...", ascending weights.
    std::string enumerator_string() const;

    nlohmann::ordered_json to_json() const;
    static WeightDistribution from_json(const nlohmann::json& j);
};

struct CodeParams {
    std::uint32_t n = 0, k = 0, d = 0;
    bool operator==(const CodeParams&) const = default;
    std::string str() const;
};

// d = smallest positive weight, k = log_q of the codeword count (must be
// integral). Throws on the zero code.
CodeParams code_params(const WeightDistribution& wd);

// Exact MacWilliams transform W_dual(x,y) = q^{-k} W(x+(q-1)y, x-y).
// Throws if any dual coefficient comes out negative or non-integral.
WeightDistribution macwilliams_dual(const WeightDistribution& wd);

}  // namespace pncode
