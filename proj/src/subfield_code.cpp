#include "pncode/subfield_code.hpp"

#include <algorithm>
#include <thread>

namespace pncode {

SubfieldCode::SubfieldCode(const FieldCtx& F, PnFunction f) : F_(&F), f_(std::move(f)) {
    if (&f_.field() != &F)
        throw std::invalid_argument("subfield code: function was built over a different field");
}

std::vector<std::uint8_t> SubfieldCode::codeword(Fe a, Fe b, std::uint32_t c) const {
    const FieldCtx& F = *F_;
    const std::uint32_t p = F.p(), q = F.order();
    c %= p;
    std::vector<std::uint8_t> v(q + 1);
    for (Fe x = 0; x < q; ++x) {
        std::uint32_t t = F.trace(F.add(F.mul(a, f_(x)), F.mul(b, x))) + c;
        if (t >= p) t -= p;
        v[x] = std::uint8_t(t);
    }
    v[q] = std::uint8_t(F.trace(a));
    return v;
}

namespace {

// Per-(a,b) pass: one histogram of Tr(a f(x) + b x) over x, then one weight
// per c. Walking x by discrete log turns Tr(bx) into a shifted table read.
struct EnumCtx {
    const FieldCtx* F;
    bool punctured;
    std::uint32_t p, q;
    std::vector<Fe> f_by_log;               // f(g^j)
    Fe f0;
    std::vector<std::uint16_t> trlog2;      // trace(g^{j mod (q-1)}), doubled
};

void enumerate_range(const EnumCtx& E, Fe a_begin, Fe a_end, std::vector<std::uint64_t>& acc) {
    const FieldCtx& F = *E.F;
    const std::uint32_t p = E.p, q = E.q, q1 = q - 1;
    std::vector<std::uint16_t> taf(q1);
    std::vector<std::uint32_t> cnt(p);

    for (Fe a = a_begin; a < a_end; ++a) {
        const std::uint32_t t0 = F.trace(F.mul(a, E.f0));  // x = 0 column
        for (std::uint32_t j = 0; j < q1; ++j) taf[j] = std::uint16_t(F.trace(F.mul(a, E.f_by_log[j])));
        const std::uint32_t sigma = (!E.punctured && F.trace(a) != 0) ? 1 : 0;

        // b = 0
        std::fill(cnt.begin(), cnt.end(), 0);
        ++cnt[t0];
        for (std::uint32_t j = 0; j < q1; ++j) ++cnt[taf[j]];
        for (std::uint32_t c = 0; c < p; ++c) {
            std::uint32_t zeros = cnt[(p - c) % p];
            ++acc[q - zeros + sigma];
        }
        // b = g^lb
        for (std::uint32_t lb = 0; lb < q1; ++lb) {
            std::fill(cnt.begin(), cnt.end(), 0);
            ++cnt[t0];
            const std::uint16_t* tb = E.trlog2.data() + lb;
            for (std::uint32_t j = 0; j < q1; ++j) {
                std::uint32_t t = taf[j] + tb[j];
                if (t >= p) t -= p;
                ++cnt[t];
            }
            for (std::uint32_t c = 0; c < p; ++c) {
                std::uint32_t zeros = cnt[(p - c) % p];
                ++acc[q - zeros + sigma];
            }
        }
    }
}

}  // namespace

WeightDistribution SubfieldCode::enumerate(bool punctured, std::uint64_t budget) const {
    const FieldCtx& F = *F_;
    const std::uint32_t p = F.p(), q = F.order(), m = F.m();

    // budget model: one operation per codeword symbol
    Int cost = ipow(p, 2 * std::uint64_t(m) + 1) * Int(q + 1);
    if (cost > budget)
        throw capacity_error("enumeration needs " + cost.str() +
                             " codeword-symbol operations, over the budget of " + std::to_string(budget));

    EnumCtx E;
    E.F = &F;
    E.punctured = punctured;
    E.p = p;
    E.q = q;
    E.f0 = f_(0);
    E.f_by_log.resize(q - 1);
    for (std::uint32_t j = 0; j < q - 1; ++j) E.f_by_log[j] = f_(F.exp_of(j));
    E.trlog2.resize(2 * (q - 1));
    for (std::uint32_t j = 0; j < q - 1; ++j) {
        std::uint16_t t = std::uint16_t(F.trace(F.exp_of(j)));
        E.trlog2[j] = t;
        E.trlog2[j + (q - 1)] = t;
    }

    const std::uint32_t n = punctured ? q : q + 1;
    std::vector<std::uint64_t> acc(n + 2, 0);

    unsigned workers = std::thread::hardware_concurrency();
    if (workers < 2 || q < 128) {
        enumerate_range(E, 0, q, acc);
    } else {
        workers = std::min<unsigned>(workers, 8);
        std::vector<std::vector<std::uint64_t>> parts(workers, std::vector<std::uint64_t>(n + 2, 0));
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            Fe lo = Fe(std::uint64_t(q) * w / workers);
            Fe hi = Fe(std::uint64_t(q) * (w + 1) / workers);
            pool.emplace_back(enumerate_range, std::cref(E), lo, hi, std::ref(parts[w]));
        }
        for (auto& t : pool) t.join();
        for (const auto& part : parts)
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
    }

    // Injectivity of (a,b,c) -> codeword: the zero weight counts the kernel.
    std::uint64_t kernel = acc[0];
    if (kernel == 0) throw consistency_error("enumeration lost the zero codeword");
    std::uint32_t k = 2 * m + 1;
    if (kernel > 1) {
        std::uint64_t r = kernel;
        while (r > 1) {
            if (r % p) throw consistency_error("codeword kernel size is not a power of p");
            r /= p;
            --k;
        }
    }

    WeightDistribution wd;
    wd.n = n;
    wd.k = k;
    wd.q = p;
    for (std::uint32_t w = 0; w <= n; ++w) {
        if (!acc[w]) continue;
        if (acc[w] % kernel) throw consistency_error("codeword multiplicities are not kernel-uniform");
        wd.counts[w] = Int(acc[w] / kernel);
    }
    wd.validate();
    return wd;
}

WeightDistribution SubfieldCode::weight_distribution(std::uint64_t budget) const {
    return enumerate(false, budget);
}

WeightDistribution SubfieldCode::punctured_distribution(std::uint64_t budget) const {
    return enumerate(true, budget);
}

}  // namespace pncode
