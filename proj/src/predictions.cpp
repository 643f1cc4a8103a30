#include "pncode/predictions.hpp"

#include <map>
#include <numeric>

#include "pncode/pn_function.hpp"

namespace pncode {

const char* prediction_source_name(PredictionSource s) {
    switch (s) {
        case PredictionSource::DoOddFull: return "do-odd";
        case PredictionSource::DoEvenFull: return "do-even";
        case PredictionSource::CmOddFull: return "cm-odd";
        case PredictionSource::CmEvenFull: return "cm-even";
        case PredictionSource::DoPunctured: return "do-punctured";
        case PredictionSource::CmPunctured: return "cm-punctured";
    }
    return "?";
}

const char* verdict_name(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::Optimal: return "optimal";
        case BoundVerdict::RuledOut: return "ruled_out";
        case BoundVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// Collect (weight, count) rows, merging collisions; zero-count rows are kept
// through the merge and dropped only at the end.
struct RowBuilder {
    std::map<std::int64_t, Int> rows;
    void add(std::int64_t w, Int c) {
        if (c < 0) throw consistency_error("negative predicted frequency");
        if (w < 0) throw consistency_error("negative predicted weight");
        rows[w] += c;
    }
    WeightDistribution finish(std::uint32_t n, std::uint32_t k, std::uint32_t q) {
        WeightDistribution wd;
        wd.n = n;
        wd.k = k;
        wd.q = q;
        for (auto& [w, c] : rows) {
            if (c == 0) continue;
            if (w > std::int64_t(n)) throw consistency_error("predicted weight exceeds code length");
            wd.counts[std::uint32_t(w)] = c;
        }
        wd.validate();
        return wd;
    }
};

}  // namespace

Prediction predict_pn_do(std::uint32_t p, std::uint32_t m, std::optional<int> epsilon) {
    if (m == 0) throw std::invalid_argument("predict_pn_do: m must be positive");
    const Int pm = ipow(p, m), pm1 = ipow(p, m - 1);
    const std::int64_t pm_i = std::int64_t(pm), pm1_i = std::int64_t(pm1);
    const std::int64_t w1 = (p - 1) * pm1_i;

    Prediction pred;
    pred.p = p;
    pred.m = m;
    RowBuilder rb;
    rb.add(0, 1);
    rb.add(pm_i, p - 1);

    if (m % 2 == 1) {
        pred.source = PredictionSource::DoOddFull;
        const std::int64_t r = std::int64_t(ipow(p, (m - 1) / 2));
        rb.add(w1 + 1, (pm - pm1) * pm);
        rb.add(w1 + r + 1, (pm - pm1) * (p - 1) * pm / 2);
        rb.add(w1 - r + 1, (pm - pm1) * (p - 1) * pm / 2);
        rb.add(w1, Int(p) * (pm - 1) + pm * (pm1 - 1));
        rb.add(w1 + r, (pm1 - 1) * (p - 1) * pm / 2);
        rb.add(w1 - r, (pm1 - 1) * (p - 1) * pm / 2);
    } else {
        if (!epsilon || (*epsilon != 1 && *epsilon != -1))
            throw std::invalid_argument("predict_pn_do: even m requires epsilon in {-1,+1}");
        pred.source = PredictionSource::DoEvenFull;
        pred.epsilon = *epsilon;
        const std::int64_t eps = *epsilon;
        const std::int64_t P = std::int64_t(ipow(p, (m - 2) / 2));
        const std::int64_t tau = (std::int64_t(p - 1) * m / 4) % 2 ? -1 : 1;

        rb.add(w1, Int(p) * (pm - 1));
        // counts of a != 0 split by quadratic character and trace
        const Int T0p = (pm1 - 1 - Int(p - 1) * P * tau) / 2;
        const Int T0m = (pm1 - 1 + Int(p - 1) * P * tau) / 2;
        const Int T1p = Int(p - 1) * (pm1 + Int(P) * tau) / 2;
        const Int T1m = Int(p - 1) * (pm1 - Int(P) * tau) / 2;

        rb.add(w1 - (p - 1) * eps * P, T0p * pm);
        rb.add(w1 - (p - 1) * eps * P + 1, T1p * pm);
        rb.add(w1 + (p - 1) * eps * P, T0m * pm);
        rb.add(w1 + (p - 1) * eps * P + 1, T1m * pm);
        rb.add(w1 + eps * P, T0p * (p - 1) * pm);
        rb.add(w1 + eps * P + 1, T1p * (p - 1) * pm);
        rb.add(w1 - eps * P, T0m * (p - 1) * pm);
        rb.add(w1 - eps * P + 1, T1m * (p - 1) * pm);
    }

    pred.distribution = rb.finish(std::uint32_t(pm_i) + 1, 2 * m + 1, p);
    pred.dual_params = CodeParams{std::uint32_t(pm_i) + 1, std::uint32_t(pm_i) - 2 * m, 4};
    return pred;
}

Prediction predict_cm(std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("predict_cm: m must be positive");
    const std::uint32_t p = 3;
    const Int pm = ipow(3, m), pm1 = ipow(3, m - 1), p2m1 = ipow(3, 2 * m - 1);
    const std::int64_t pm_i = std::int64_t(pm);
    const std::int64_t w1 = 2 * std::int64_t(pm1);

    Prediction pred;
    pred.p = p;
    pred.m = m;
    RowBuilder rb;
    rb.add(0, 1);
    rb.add(pm_i, 2);

    if (m % 2 == 1) {
        pred.source = PredictionSource::CmOddFull;
        const std::int64_t r = std::int64_t(ipow(3, (m - 1) / 2));
        rb.add(w1, p2m1 + 2 * pm - 3);
        rb.add(w1 + 1, (pm - pm1) * pm);
        rb.add(w1 + r, (pm1 - 1) * pm);
        rb.add(w1 - r, (pm1 - 1) * pm);
        rb.add(w1 + r + 1, (pm - pm1) * pm);
        rb.add(w1 - r + 1, (pm - pm1) * pm);
    } else {
        pred.source = PredictionSource::CmEvenFull;
        const std::int64_t P = std::int64_t(ipow(3, (m - 2) / 2));
        const Int S = ipow(3, (3 * m - 2) / 2);
        rb.add(w1, 3 * (pm - 1));
        rb.add(w1 + 2 * P, (p2m1 - pm) / 2 - S);
        rb.add(w1 - 2 * P, (p2m1 - pm) / 2 + S);
        rb.add(w1 + 2 * P + 1, p2m1 + S);
        rb.add(w1 - 2 * P + 1, p2m1 - S);
        rb.add(w1 + P, p2m1 - pm + 2 * S);
        rb.add(w1 - P, p2m1 - pm - 2 * S);
        rb.add(w1 + P + 1, 2 * (p2m1 - S));
        rb.add(w1 - P + 1, 2 * (p2m1 + S));
    }

    pred.distribution = rb.finish(std::uint32_t(pm_i) + 1, 2 * m + 1, p);
    pred.dual_params = CodeParams{std::uint32_t(pm_i) + 1, std::uint32_t(pm_i) - 2 * m, 4};
    pred.dual_a4 = m % 2 == 0 ? 4 * pm1 : 2 * pm1;
    return pred;
}

Prediction predict_punctured(std::uint32_t p, std::uint32_t m, PuncturedKind kind) {
    if (m == 0) throw std::invalid_argument("predict_punctured: m must be positive");
    if (kind == PuncturedKind::Cm && p != 3)
        throw std::invalid_argument("predict_punctured: Coulter-Matthews codes require p = 3");
    const Int pm = ipow(p, m), pm1 = ipow(p, m - 1);
    const std::int64_t pm_i = std::int64_t(pm);
    const std::int64_t w1 = (p - 1) * std::int64_t(pm1);

    Prediction pred;
    pred.p = p;
    pred.m = m;
    RowBuilder rb;
    rb.add(0, 1);

    if (kind == PuncturedKind::PnDo) {
        pred.source = PredictionSource::DoPunctured;
        if (m % 2 == 1) {
            const std::int64_t r = std::int64_t(ipow(p, (m - 1) / 2));
            rb.add(w1, (pm - 1) * (pm1 + 1) * p);
            rb.add(w1 + r, (pm - 1) * pm * (p - 1) / 2);
            rb.add(w1 - r, (pm - 1) * pm * (p - 1) / 2);
            rb.add(pm_i, p - 1);
        } else {
            const std::int64_t P = std::int64_t(ipow(p, (m - 2) / 2));
            rb.add(w1, (pm - 1) * p);
            rb.add(w1 + (p - 1) * P, (pm - 1) * pm / 2);
            rb.add(w1 - (p - 1) * P, (pm - 1) * pm / 2);
            rb.add(w1 + P, (pm - 1) * (p - 1) * pm / 2);
            rb.add(w1 - P, (pm - 1) * (p - 1) * pm / 2);
            rb.add(pm_i, p - 1);
        }
        if (p == 3) {
            if (m > 1)
                pred.dual_params = CodeParams{std::uint32_t(pm_i), std::uint32_t(pm_i) - 2 * m - 1, 5};
            else
                pred.dual_degenerate = true;  // [3,3,1] code, dual is the zero code
        } else {
            pred.dual_params = CodeParams{std::uint32_t(pm_i), std::uint32_t(pm_i) - 2 * m - 1, 4};
        }
    } else {
        pred.source = PredictionSource::CmPunctured;
        if (m % 2 == 1) {
            const std::int64_t r = std::int64_t(ipow(3, (m - 1) / 2));
            rb.add(w1, (pm - 1) * (pm + 3));
            rb.add(w1 + r, (pm - 1) * pm);
            rb.add(w1 - r, (pm - 1) * pm);
            rb.add(pm_i, 2);
        } else {
            const std::int64_t P = std::int64_t(ipow(3, (m - 2) / 2));
            rb.add(w1, 3 * pm - 3);
            rb.add(w1 + 2 * P, (pm - 1) * pm / 2);
            rb.add(w1 - 2 * P, (pm - 1) * pm / 2);
            rb.add(w1 + P, (pm - 1) * pm);
            rb.add(w1 - P, (pm - 1) * pm);
            rb.add(pm_i, 2);
        }
    }

    pred.distribution = rb.finish(std::uint32_t(pm_i), 2 * m + 1, p);
    return pred;
}

PlessCheck pless_verify(const WeightDistribution& primal, const std::array<Int, 4>& dual_a) {
    for (const Int& b : dual_a)
        if (b < 0) throw std::invalid_argument("pless_verify: dual counts must be nonnegative");
    const Int n = primal.n, q = primal.q;
    const Int B1 = dual_a[0], B2 = dual_a[1], B3 = dual_a[2], B4 = dual_a[3];
    const Int qk = ipow(q, primal.k);

    std::array<Int, 5> S{};
    for (const auto& [w, c] : primal.counts) {
        Int wi = 1;
        for (int j = 0; j < 5; ++j) {
            S[j] += wi * c;
            wi *= w;
        }
    }

    std::array<Int, 5> rhs;
    rhs[0] = 1;
    rhs[1] = q * n - n - B1;
    rhs[2] = (q - 1) * n * (q * n - n + 1) - (2 * q * n - q - 2 * n + 2) * B1 + 2 * B2;
    rhs[3] = (q - 1) * n *
                 (q * q * n * n - 2 * q * n * n + 3 * q * n - q + n * n - 3 * n + 2) -
             (3 * q * q * n * n - 3 * q * q * n - 6 * q * n * n + 12 * q * n + q * q - 6 * q +
              3 * n * n - 9 * n + 6) *
                 B1 +
             6 * (q * n - q - n + 2) * B2 - 6 * B3;
    rhs[4] = (q - 1) * n *
                 (q * q * q * n * n * n - 3 * q * q * n * n * n + 6 * q * q * n * n - 4 * q * q * n +
                  q * q + 3 * q * n * n * n - 12 * q * n * n + 15 * q * n - 6 * q - n * n * n +
                  6 * n * n - 11 * n + 6) -
             (4 * q * q * q * n * n * n - 6 * q * q * q * n * n + 4 * q * q * q * n - q * q * q -
              12 * q * q * n * n * n + 36 * q * q * n * n - 38 * q * q * n + 14 * q * q +
              12 * q * n * n * n - 54 * q * n * n + 78 * q * n - 36 * q - 4 * n * n * n +
              24 * n * n - 44 * n + 24) *
                 B1 +
             (12 * q * q * n * n - 24 * q * q * n + 14 * q * q - 24 * q * n * n + 84 * q * n -
              72 * q + 12 * n * n - 60 * n + 72) *
                 B2 -
             (24 * q * n - 36 * q - 24 * n + 72) * B3 + 24 * B4;

    PlessCheck out;
    out.ok = true;
    Int qj = 1;
    for (int j = 0; j < 5; ++j) {
        out.residuals[j] = qj * S[j] - qk * rhs[j];
        if (out.residuals[j] != 0) out.ok = false;
        qj *= q;
    }
    return out;
}

BoundReport sphere_packing_check(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint32_t q) {
    if (n == 0 || k == 0 || d == 0 || q < 2)
        throw std::invalid_argument("sphere_packing_check: n, k, d must be positive and q >= 2");
    BoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.d = d;
    rep.q = q;
    rep.space = ipow(q, n);
    const Int qk = ipow(q, k);

    // explicit return type: expression templates must not escape with
    // references to the local accumulator
    auto packed = [&](std::uint32_t dd) -> Int {
        Int ball = 0;
        for (std::uint32_t i = 0; i <= (dd - 1) / 2; ++i) ball += binomial(n, i) * ipow(q - 1, i);
        return qk * ball;
    };
    rep.packed = packed(d);

    rep.best_d = 0;
    for (std::uint32_t dd = 1; dd <= n; ++dd) {
        if (packed(dd) <= rep.space)
            rep.best_d = dd;
        else
            break;
    }

    if (rep.packed > rep.space)
        rep.verdict = BoundVerdict::RuledOut;
    else if (d >= n || packed(d + 1) > rep.space)
        rep.verdict = BoundVerdict::Optimal;
    else
        rep.verdict = BoundVerdict::Inconclusive;
    return rep;
}

Rat graph_bound(std::uint32_t q, std::uint32_t n, std::uint32_t d) {
    if (q < 3) throw std::invalid_argument("graph_bound: requires q >= 3");
    if (d > n) throw std::invalid_argument("graph_bound: requires t = n-d+1 >= 1");
    const std::uint32_t t = n - d + 1;
    const std::uint32_t r = std::min<std::uint32_t>((n - t) / 2, (t - 1) / (q - 2));
    const std::uint32_t len = t + 2 * r;
    Int denom = 0;
    for (std::uint32_t i = 0; i <= r; ++i) denom += binomial(len, i) * ipow(q - 1, i);
    return Rat(ipow(q, len), denom);
}

bool graph_bound_rules_out(std::uint32_t q, std::uint32_t n, std::uint32_t k, std::uint32_t d) {
    return Rat(ipow(q, k)) > graph_bound(q, n, d);
}

std::uint64_t nu_count(const FieldCtx& F, std::uint32_t k, Fe u) {
    if (F.p() != 3) throw std::invalid_argument("nu_count: requires p = 3");
    if (k % 2 == 0 || std::gcd(F.m(), k) != 1)
        throw std::invalid_argument("nu_count: requires odd k with gcd(m,k) = 1");
    PnFunction f = PnFunction::coulter_matthews(F, k);
    const std::uint32_t q = F.order();

    std::uint64_t count = 0;
    for (Fe x = 0; x < q; ++x) {
        Fe fx = f(x);
        for (Fe y = 0; y < q; ++y) {
            Fe z = F.neg(F.add(x, y));
            if (F.add(F.add(fx, f(y)), F.add(f(z), u)) == 0) ++count;
        }
    }

    std::uint64_t expected;
    int eta = F.quadratic_character(u);
    if (eta == 0)
        expected = q;
    else if (eta == 1)
        expected = 2ull * q;
    else
        expected = 0;
    if (count != expected)
        throw consistency_error("nu_count: brute force disagrees with the closed form");
    return count;
}

}  // namespace pncode
