#include "pncode/quad_form.hpp"

#include <algorithm>

#include "pncode/exact.hpp"

namespace pncode {

namespace {

int eta0(std::uint64_t c, std::uint32_t p) {
    c %= p;
    if (c == 0) return 0;
    return mod_pow_u64(c, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint32_t inv_mod(std::uint32_t c, std::uint32_t p) {
    return std::uint32_t(mod_pow_u64(c, p - 2, p));
}

using Mat = std::vector<std::uint32_t>;  // row-major m x m

// Plain Gaussian elimination; returns (rank, det mod p).
std::pair<std::uint32_t, std::uint32_t> gauss_rank_det(Mat w, std::uint32_t m, std::uint32_t p) {
    std::uint32_t rank = 0;
    std::uint64_t det = 1;
    int sign = 1;
    std::uint32_t row = 0;
    for (std::uint32_t col = 0; col < m && row < m; ++col) {
        std::uint32_t piv = row;
        while (piv < m && w[std::size_t(piv) * m + col] == 0) ++piv;
        if (piv == m) {
            det = 0;
            continue;
        }
        if (piv != row) {
            for (std::uint32_t j = 0; j < m; ++j)
                std::swap(w[std::size_t(piv) * m + j], w[std::size_t(row) * m + j]);
            sign = -sign;
        }
        std::uint32_t pv = w[std::size_t(row) * m + col];
        det = det * pv % p;
        std::uint32_t pvinv = inv_mod(pv, p);
        for (std::uint32_t r2 = row + 1; r2 < m; ++r2) {
            std::uint32_t f = std::uint64_t(w[std::size_t(r2) * m + col]) * pvinv % p;
            if (!f) continue;
            for (std::uint32_t j = col; j < m; ++j)
                w[std::size_t(r2) * m + j] =
                    (w[std::size_t(r2) * m + j] + std::uint64_t(p - f) * w[std::size_t(row) * m + j]) % p;
        }
        ++row;
        ++rank;
    }
    if (rank < m) det = 0;
    if (sign < 0 && det) det = p - det;
    return {rank, std::uint32_t(det)};
}

// Congruent diagonalization D = M A M^T. Returns diagonal entries and M.
struct Diagonalization {
    std::vector<std::uint32_t> diag;  // all m entries, zeros for the radical part
    Mat trans;                        // M
};

Diagonalization diagonalize(const QuadraticForm& qf) {
    const std::uint32_t m = qf.m, p = qf.p;
    Mat w = qf.a;
    Mat M(std::size_t(m) * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) M[std::size_t(i) * m + i] = 1;

    auto rowcol_swap = [&](std::uint32_t i, std::uint32_t j) {
        for (std::uint32_t c = 0; c < m; ++c) std::swap(w[std::size_t(i) * m + c], w[std::size_t(j) * m + c]);
        for (std::uint32_t r = 0; r < m; ++r) std::swap(w[std::size_t(r) * m + i], w[std::size_t(r) * m + j]);
        for (std::uint32_t c = 0; c < m; ++c) std::swap(M[std::size_t(i) * m + c], M[std::size_t(j) * m + c]);
    };
    // row_i += f*row_j and col_i += f*col_j
    auto rowcol_add = [&](std::uint32_t i, std::uint32_t j, std::uint32_t f) {
        for (std::uint32_t c = 0; c < m; ++c)
            w[std::size_t(i) * m + c] =
                (w[std::size_t(i) * m + c] + std::uint64_t(f) * w[std::size_t(j) * m + c]) % p;
        for (std::uint32_t r = 0; r < m; ++r)
            w[std::size_t(r) * m + i] =
                (w[std::size_t(r) * m + i] + std::uint64_t(f) * w[std::size_t(r) * m + j]) % p;
        for (std::uint32_t c = 0; c < m; ++c)
            M[std::size_t(i) * m + c] =
                (M[std::size_t(i) * m + c] + std::uint64_t(f) * M[std::size_t(j) * m + c]) % p;
    };

    for (std::uint32_t i = 0; i < m; ++i) {
        if (w[std::size_t(i) * m + i] == 0) {
            std::uint32_t j = i + 1;
            while (j < m && w[std::size_t(j) * m + j] == 0) ++j;
            if (j < m) {
                rowcol_swap(i, j);
            } else {
                // all remaining diagonal entries vanish; mix in an
                // off-diagonal entry (2 A[j][l] != 0 since p is odd)
                bool found = false;
                for (j = i; j < m && !found; ++j)
                    for (std::uint32_t l = j + 1; l < m && !found; ++l)
                        if (w[std::size_t(j) * m + l]) {
                            rowcol_add(j, l, 1);
                            if (j != i) rowcol_swap(i, j);
                            found = true;
                        }
                if (!found) break;  // remaining block is zero
            }
        }
        std::uint32_t piv = w[std::size_t(i) * m + i];
        std::uint32_t pivinv = inv_mod(piv, p);
        for (std::uint32_t r = i + 1; r < m; ++r) {
            std::uint32_t c = w[std::size_t(r) * m + i];
            if (!c) continue;
            rowcol_add(r, i, std::uint64_t(p - c) * pivinv % p);
        }
    }
    Diagonalization d;
    d.diag.resize(m);
    for (std::uint32_t i = 0; i < m; ++i) d.diag[i] = w[std::size_t(i) * m + i];
    d.trans = std::move(M);
    return d;
}

}  // namespace

std::uint32_t QuadraticForm::eval_digits(const std::uint32_t* d) const {
    std::uint64_t acc = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (!d[i]) continue;
        std::uint64_t row = 0;
        for (std::uint32_t j = 0; j < m; ++j) row += std::uint64_t(at(i, j)) * d[j];
        acc += d[i] * (row % p);
    }
    return std::uint32_t(acc % p);
}

std::uint32_t QuadraticForm::eval_encoding(Fe x) const {
    std::uint32_t d[64];
    for (std::uint32_t i = 0; i < m; ++i) {
        d[i] = x % p;
        x /= p;
    }
    return eval_digits(d);
}

QuadraticForm trace_form_matrix(const FieldCtx& F, const PnFunction& f, Fe a) {
    if (f.family() == PnFamily::F2CM)
        throw std::invalid_argument(
            "trace_form_matrix: Coulter-Matthews functions do not induce quadratic forms");
    const std::uint32_t p = F.p(), m = F.m(), q = F.order();

    auto Q = [&](Fe x) { return F.trace(F.mul(a, f(x))); };
    const std::uint32_t inv2 = (p + 1) / 2;

    QuadraticForm qf;
    qf.p = p;
    qf.m = m;
    qf.a.assign(std::size_t(m) * m, 0);
    qf.source = f.label() + ", a=" + std::to_string(a);

    std::vector<std::uint32_t> qdiag(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        qdiag[i] = Q(F.basis_element(i));
        qf.a[std::size_t(i) * m + i] = qdiag[i];
    }
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i + 1; j < m; ++j) {
            std::uint32_t qij = Q(F.add(F.basis_element(i), F.basis_element(j)));
            std::uint32_t v = (qij + 2 * p - qdiag[i] - qdiag[j]) % p;
            v = std::uint64_t(v) * inv2 % p;
            qf.a[std::size_t(i) * m + j] = v;
            qf.a[std::size_t(j) * m + i] = v;
        }

    // The matrix must reproduce Tr(a f(x)) everywhere, otherwise f was not a
    // quadratic (DO) polynomial.
    std::vector<std::uint32_t> d(m);
    for (Fe x = 0; x < q; ++x) {
        for (std::uint32_t i = 0; i < m; ++i) d[i] = F.digit(x, i);
        if (qf.eval_digits(d.data()) != Q(x))
            throw std::invalid_argument(
                "trace_form_matrix: Tr(a f(x)) is not a quadratic form (f is not a DO polynomial)");
    }
    return qf;
}

RankDetReport rank_and_det(const QuadraticForm& qf) {
    const std::uint32_t m = qf.m, p = qf.p;

    auto [rank1, det] = gauss_rank_det(qf.a, m, p);

    // Radical route, from Q itself: x is in the radical iff
    // B(x, v_j) = Q(x+v_j) - Q(x) - Q(v_j) vanishes for every basis vector.
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) q *= p;
    std::vector<std::uint32_t> qtab(q);
    {
        std::vector<std::uint32_t> dg(m, 0);
        for (std::uint64_t x = 0; x < q; ++x) {
            qtab[x] = qf.eval_digits(dg.data());
            // increment base-p digit counter
            for (std::uint32_t i = 0; i < m; ++i) {
                if (++dg[i] < p) break;
                dg[i] = 0;
            }
        }
    }
    std::uint64_t pw = 1;
    std::uint64_t radical = 0;
    std::vector<std::uint64_t> vj(m);
    for (std::uint32_t j = 0; j < m; ++j) {
        vj[j] = pw;
        pw *= p;
    }
    for (std::uint64_t x = 0; x < q; ++x) {
        bool in_radical = true;
        for (std::uint32_t j = 0; j < m && in_radical; ++j) {
            // x + v_j in digit space: bump digit j mod p
            std::uint64_t dj = x / vj[j] % p;
            std::uint64_t xp = dj + 1 < p ? x + vj[j] : x - vj[j] * (p - 1);
            std::uint32_t b = (qtab[xp] + 2 * p - qtab[x] - qtab[vj[j]]) % p;
            if (b) in_radical = false;
        }
        if (in_radical) ++radical;
    }
    std::uint32_t rank2 = m;
    {
        std::uint64_t r = radical;
        while (r > 1) {
            if (r % p) throw consistency_error("radical size is not a power of p");
            r /= p;
            --rank2;
        }
    }

    Diagonalization dg = diagonalize(qf);
    std::uint32_t rank3 = 0;
    std::uint64_t prod = 1;
    for (std::uint32_t v : dg.diag)
        if (v) {
            ++rank3;
            prod = prod * v % p;
        }

    if (rank1 != rank2 || rank1 != rank3)
        throw consistency_error("quadratic form rank disagreement between elimination, radical and diagonalization");

    RankDetReport rep;
    rep.rank = rank1;
    rep.det_mod_p = det;
    rep.det_class = eta0(det, p);
    rep.type = rank1 == 0 ? 0 : eta0(prod, p);
    if (rank1 == m && rep.type != rep.det_class)
        throw consistency_error("type and determinant class disagree on a non-degenerate form");
    return rep;
}

bool check_det_relation(const FieldCtx& F, const PnFunction& f) {
    const std::uint32_t p = F.p(), q = F.order();
    RankDetReport base = rank_and_det(trace_form_matrix(F, f, 1));
    if (base.rank != F.m())
        throw std::invalid_argument("check_det_relation: Tr(f(x)) must have full rank at a = 1");
    const std::uint64_t norm_exp = (std::uint64_t(q) - 1) / (p - 1);

    for (Fe a = 1; a < q; ++a) {
        RankDetReport ra = rank_and_det(trace_form_matrix(F, f, a));
        Fe na = F.pow(a, norm_exp);  // a^{(p^m-1)/(p-1)}, lands in F_p
        if (na >= p) throw consistency_error("norm left the prime subfield");
        // exact scalar identity in the fixed polynomial basis
        if (ra.det_mod_p != std::uint64_t(na) * base.det_mod_p % p) return false;
        // square-class consequence
        if (ra.det_class != eta0(na, p) * base.det_class) return false;
    }
    return true;
}

std::uint64_t count_solutions(const FieldCtx& F, const QuadraticForm& qf, Fe b, std::uint32_t c) {
    const std::uint32_t p = qf.p, m = qf.m, q = F.order();
    c %= p;

    Diagonalization dg = diagonalize(qf);
    for (std::uint32_t v : dg.diag)
        if (v == 0) throw std::invalid_argument("count_solutions: quadratic form must have rank m");

    // brute force over the field
    std::uint64_t brute = 0;
    {
        std::vector<std::uint32_t> d(m);
        for (Fe x = 0; x < q; ++x) {
            for (std::uint32_t i = 0; i < m; ++i) d[i] = F.digit(x, i);
            if ((qf.eval_digits(d.data()) + F.trace(F.mul(b, x))) % p == c) ++brute;
        }
    }

    // closed form: diagonalize, substitute X = Y M, complete the square
    std::vector<std::uint32_t> L(m), Lp(m, 0);
    for (std::uint32_t j = 0; j < m; ++j) L[j] = F.trace(F.mul(b, F.basis_element(j)));
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint64_t acc = 0;
        for (std::uint32_t j = 0; j < m; ++j)
            acc += std::uint64_t(dg.trans[std::size_t(i) * m + j]) * L[j];
        Lp[i] = std::uint32_t(acc % p);
    }
    std::uint64_t s = c;
    std::uint64_t prod = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t ai = dg.diag[i];
        prod = prod * ai % p;
        std::uint32_t inv4a = inv_mod(4 * ai % p, p);
        s = (s + std::uint64_t(Lp[i]) * Lp[i] % p * inv4a) % p;
    }
    std::uint64_t pm1 = 1;
    for (std::uint32_t i = 0; i + 1 < m; ++i) pm1 *= p;  // p^{m-1}
    std::int64_t predicted;
    if (m % 2 == 0) {
        std::uint64_t ph = 1;
        for (std::uint32_t i = 0; i + 2 < m; i += 2) ph *= p;  // p^{(m-2)/2}
        std::int64_t nu = s == 0 ? std::int64_t(p) - 1 : -1;
        std::uint64_t sgn = (m / 2) % 2 ? p - 1 : 1;
        predicted = std::int64_t(pm1) + nu * std::int64_t(ph) * eta0(sgn * prod % p, p);
    } else {
        std::uint64_t ph = 1;
        for (std::uint32_t i = 0; i + 1 < m; i += 2) ph *= p;  // p^{(m-1)/2}
        std::uint64_t sgn = ((m - 1) / 2) % 2 ? p - 1 : 1;
        predicted = std::int64_t(pm1) +
                    std::int64_t(ph) * eta0(sgn * (s % p) % p * prod % p, p);
    }
    if (predicted < 0 || brute != std::uint64_t(predicted))
        throw consistency_error("N_{b,c} brute force disagrees with the completed-square closed form");
    return brute;
}

std::map<std::uint64_t, std::uint64_t> nbc_histogram(const FieldCtx& F, const QuadraticForm& qf) {
    const std::uint32_t p = qf.p, q = F.order();
    std::vector<std::uint32_t> qtab(q);
    {
        std::vector<std::uint32_t> d(qf.m);
        for (Fe x = 0; x < q; ++x) {
            for (std::uint32_t i = 0; i < qf.m; ++i) d[i] = F.digit(x, i);
            qtab[x] = qf.eval_digits(d.data());
        }
    }
    std::map<std::uint64_t, std::uint64_t> hist;
    std::vector<std::uint64_t> cnt(p);
    for (Fe b = 0; b < q; ++b) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (Fe x = 0; x < q; ++x) {
            std::uint32_t v = qtab[x] + F.trace(F.mul(b, x));
            if (v >= p) v -= p;
            ++cnt[v];
        }
        for (std::uint32_t c = 0; c < p; ++c) ++hist[cnt[c]];
    }
    return hist;
}

int epsilon_of(const FieldCtx& F, const PnFunction& f) {
    if (F.m() % 2 != 0)
        throw std::invalid_argument("epsilon is defined for even m only (odd m uses the Table 1 path)");
    RankDetReport rep = rank_and_det(trace_form_matrix(F, f, 1));
    if (rep.rank != F.m())
        throw std::invalid_argument("epsilon_of: Tr(f(x)) must have full rank");
    int sign = (std::uint64_t(F.m()) * (F.p() - 1) / 4) % 2 ? -1 : 1;
    return sign * rep.det_class;
}

}  // namespace pncode
