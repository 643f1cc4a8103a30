#include "pncode/weight_dist.hpp"

#include <sstream>
#include <vector>

namespace pncode {

Int WeightDistribution::total() const {
    Int t = 0;
    for (const auto& [w, c] : counts) t += c;
    return t;
}

Int WeightDistribution::count_at(std::uint32_t w) const {
    auto it = counts.find(w);
    return it == counts.end() ? Int(0) : it->second;
}

void WeightDistribution::validate() const {
    if (q < 2) throw std::invalid_argument("weight distribution: alphabet size must be >= 2");
    if (n == 0) throw std::invalid_argument("weight distribution: length must be positive");
    for (const auto& [w, c] : counts) {
        if (w > n) throw std::invalid_argument("weight distribution: weight exceeds code length");
        if (c <= 0) throw std::invalid_argument("weight distribution: counts must be positive");
    }
    if (count_at(0) != 1)
        throw std::invalid_argument("weight distribution: a linear code has exactly one zero codeword");
    if (total() != ipow(q, k))
        throw std::invalid_argument("weight distribution: total codeword count is not q^k");
}

std::string WeightDistribution::enumerator_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : counts) {
        if (!first) os << "+";
        if (w == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << "x^" << w;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

nlohmann::ordered_json WeightDistribution::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["q"] = q;
    nlohmann::ordered_json cj = nlohmann::ordered_json::object();
    for (const auto& [w, c] : counts) cj[std::to_string(w)] = c.str();
    j["counts"] = cj;
    return j;
}

WeightDistribution WeightDistribution::from_json(const nlohmann::json& j) {
    WeightDistribution wd;
    wd.n = j.at("n").get<std::uint32_t>();
    wd.k = j.at("k").get<std::uint32_t>();
    wd.q = j.at("q").get<std::uint32_t>();
    for (const auto& [key, val] : j.at("counts").items())
        wd.counts[std::uint32_t(std::stoul(key))] = Int(val.get<std::string>());
    return wd;
}

std::string CodeParams::str() const {
    std::ostringstream os;
    os << "[" << n << "," << k << "," << d << "]";
    return os.str();
}

CodeParams code_params(const WeightDistribution& wd) {
    Int t = wd.total();
    std::uint32_t k = 0;
    Int acc = 1;
    while (acc < t) {
        acc *= wd.q;
        ++k;
    }
    if (acc != t)
        throw std::invalid_argument("code_params: codeword count is not a power of q");
    std::uint32_t d = 0;
    bool have_d = false;
    for (const auto& [w, c] : wd.counts)
        if (w > 0 && c > 0) {
            d = w;
            have_d = true;
            break;
        }
    if (!have_d)
        throw std::invalid_argument("code_params: zero code has no minimum distance");
    return CodeParams{wd.n, k, d};
}

WeightDistribution macwilliams_dual(const WeightDistribution& wd) {
    wd.validate();
    const std::uint32_t n = wd.n, q = wd.q;
    const Int qk = ipow(q, wd.k);

    // D(y) = sum_i A_i (1+(q-1)y)^{n-i} (1-y)^i, expanded exactly; the dual
    // counts are D / q^k coefficientwise.
    std::vector<Int> D(n + 1, Int(0));
    std::vector<Int> u, v;
    for (const auto& [i, Ai] : wd.counts) {
        const std::uint32_t ni = n - i;
        u.assign(ni + 1, Int(0));
        u[0] = 1;
        for (std::uint32_t l = 1; l <= ni; ++l) {
            u[l] = u[l - 1] * Int(ni - l + 1) * Int(q - 1);
            u[l] /= Int(l);
        }
        v.assign(i + 1, Int(0));
        v[0] = 1;
        for (std::uint32_t l = 1; l <= i; ++l) {
            v[l] = v[l - 1] * Int(i - l + 1) * Int(-1);
            v[l] /= Int(l);
        }
        for (std::uint32_t l1 = 0; l1 <= ni; ++l1) {
            if (u[l1] == 0) continue;
            Int f = Ai * u[l1];
            for (std::uint32_t l2 = 0; l2 <= i; ++l2) D[l1 + l2] += f * v[l2];
        }
    }

    WeightDistribution dual;
    dual.n = n;
    dual.k = n - wd.k;
    dual.q = q;
    for (std::uint32_t j = 0; j <= n; ++j) {
        if (D[j] == 0) continue;
        if (D[j] < 0 || D[j] % qk != 0)
            throw std::invalid_argument(
                "macwilliams_dual: transform is not a valid distribution (input was not a linear code)");
        dual.counts[j] = D[j] / qk;
    }
    dual.validate();
    return dual;
}

}  // namespace pncode
