#include "pncode/pn_function.hpp"

#include <numeric>
#include <sstream>

#include "pncode/exact.hpp"

namespace pncode {

const char* family_name(PnFamily f) {
    switch (f) {
        case PnFamily::F1: return "f1";
        case PnFamily::F2CM: return "cm";
        case PnFamily::F3: return "f3";
        case PnFamily::F4: return "f4";
        case PnFamily::F5: return "f5";
        case PnFamily::F6: return "f6";
        case PnFamily::F7: return "f7";
        case PnFamily::F8: return "f8";
        case PnFamily::Raw: return "raw";
    }
    return "?";
}

namespace {

[[noreturn]] void reject(PnFamily fam, const std::string& condition) {
    throw std::invalid_argument(std::string(family_name(fam)) + ": violated side condition: " + condition);
}

// gcd with the gcd(m, 0) = m convention (std::gcd already does this).
std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// p^j as a plain integer exponent, j reduced mod m (Frobenius periodicity).
std::uint64_t frob_exp(const FieldCtx& F, std::uint64_t j) {
    std::uint64_t e = 1;
    for (std::uint64_t i = 0; i < j % F.m(); ++i) e *= F.p();
    return e;
}

std::uint64_t mod_m(std::int64_t v, std::uint32_t m) {
    std::int64_t r = v % std::int64_t(m);
    if (r < 0) r += m;
    return std::uint64_t(r);
}

std::string fe_str(Fe x) { return std::to_string(x); }

}  // namespace

PnFunction PnFunction::f1(const FieldCtx& F, std::uint32_t k, Fe scale) {
    const std::uint32_t m = F.m();
    std::uint64_t g = gcd64(m, k);
    if ((m / g) % 2 == 0) reject(PnFamily::F1, "m/gcd(m,k) must be odd");
    if (scale == 0) throw std::invalid_argument("scale must be nonzero");

    PnFunction f(F, PnFamily::F1);
    std::uint64_t e = frob_exp(F, k) + 1;
    f.table_.resize(F.order());
    for (Fe x = 0; x < F.order(); ++x) f.table_[x] = F.mul(scale, F.pow(x, e));
    f.scale_ = scale;
    f.params_ = {{"k", std::to_string(k)}};
    std::ostringstream os;
    os << "f1(k=" << k << ")";
    if (scale != 1) os << "*" << fe_str(scale);
    f.label_ = os.str();
    return f;
}

PnFunction PnFunction::coulter_matthews(const FieldCtx& F, std::uint32_t k) {
    if (F.p() != 3) reject(PnFamily::F2CM, "requires p = 3");
    if (k % 2 == 0) reject(PnFamily::F2CM, "k must be odd");
    if (gcd64(F.m(), k) != 1) reject(PnFamily::F2CM, "gcd(m,k) must be 1");

    // (3^k+1)/2 reduced mod 3^m-1: with r = 3^k mod 2(3^m-1), the exponent is
    // (r+1)/2 (r is odd, and the quotient difference is a multiple of 3^m-1).
    const std::uint64_t period = 2ull * (F.order() - 1);
    std::uint64_t r = mod_pow_u64(3, k, period);
    std::uint64_t e = (r + 1) / 2;

    PnFunction f(F, PnFamily::F2CM);
    f.table_.resize(F.order());
    for (Fe x = 0; x < F.order(); ++x) f.table_[x] = F.pow(x, e);
    f.params_ = {{"k", std::to_string(k)}};
    f.label_ = "cm(k=" + std::to_string(k) + ")";
    return f;
}

PnFunction PnFunction::f3(const FieldCtx& F, Fe beta, Fe scale) {
    if (F.p() != 3) reject(PnFamily::F3, "requires p = 3");
    if (F.m() % 2 == 0) reject(PnFamily::F3, "m must be odd");
    if (beta == 0) reject(PnFamily::F3, "beta must be nonzero");
    if (scale == 0) throw std::invalid_argument("scale must be nonzero");

    Fe beta2 = F.mul(beta, beta);
    PnFunction f(F, PnFamily::F3);
    f.table_.resize(F.order());
    for (Fe x = 0; x < F.order(); ++x) {
        Fe v = F.sub(F.sub(F.pow(x, 10), F.mul(beta, F.pow(x, 6))), F.mul(beta2, F.mul(x, x)));
        f.table_[x] = F.mul(scale, v);
    }
    f.scale_ = scale;
    f.params_ = {{"beta", fe_str(beta)}};
    std::ostringstream os;
    os << "f3(beta=" << beta << ")";
    if (scale != 1) os << "*" << fe_str(scale);
    f.label_ = os.str();
    return f;
}

PnFunction PnFunction::f4(const FieldCtx& F, std::uint32_t k, std::optional<Fe> beta_opt, Fe scale) {
    const std::uint32_t m = F.m();
    if (m % 3 != 0) reject(PnFamily::F4, "m = 3s required");
    const std::uint32_t s = m / 3;
    if (gcd64(3, s) != 1) reject(PnFamily::F4, "gcd(3,s) must be 1");
    std::uint64_t g = gcd64(s, k);
    if ((s / g) % 2 == 0) reject(PnFamily::F4, "s/gcd(s,k) must be odd");
    bool l_plus = (std::int64_t(s) - std::int64_t(k)) % 3 == 0;
    bool l_minus = (std::int64_t(s) + std::int64_t(k)) % 3 == 0;
    if (l_plus && l_minus) reject(PnFamily::F4, "ambiguous l (both s-k and s+k divisible by 3)");
    if (!l_plus && !l_minus) reject(PnFamily::F4, "k must be congruent to +-s mod 3");
    const int l = l_plus ? 1 : -1;

    Fe beta = beta_opt.value_or(F.primitive_element());
    if (beta == 0 || F.mul_order(beta) != F.order() - 1)
        reject(PnFamily::F4, "beta must be a primitive element");
    if (scale == 0) throw std::invalid_argument("scale must be nonzero");

    std::uint64_t e1 = frob_exp(F, k) + 1;
    std::uint64_t e2 = frob_exp(F, mod_m(std::int64_t(l) * s, m)) +
                       frob_exp(F, mod_m(-std::int64_t(l) * s + std::int64_t(k), m));
    Fe beta_ps = F.pow(beta, frob_exp(F, s));

    PnFunction f(F, PnFamily::F4);
    f.table_.resize(F.order());
    for (Fe x = 0; x < F.order(); ++x) {
        Fe v = F.sub(F.mul(beta, F.pow(x, e1)), F.mul(beta_ps, F.pow(x, e2)));
        f.table_[x] = F.mul(scale, v);
    }
    f.scale_ = scale;
    f.params_ = {{"k", std::to_string(k)}, {"beta", fe_str(beta)}};
    std::ostringstream os;
    os << "f4(k=" << k << ",beta=" << beta << ")";
    if (scale != 1) os << "*" << fe_str(scale);
    f.label_ = os.str();
    return f;
}

PnFunction PnFunction::f5(const FieldCtx& F, std::uint32_t k, Fe beta, const std::vector<Fe>& c,
                          Fe scale) {
    const std::uint32_t m = F.m(), p = F.p();
    if (m % 2 != 0) reject(PnFamily::F5, "m = 2s required");
    const std::uint32_t s = m / 2;
    if (k == 0) reject(PnFamily::F5, "k must be positive");
    if (gcd64(s + k, 2 * s) != gcd64(s + k, s))
        reject(PnFamily::F5, "gcd(s+k,2s) must equal gcd(s+k,s)");
    {
        Int pk1 = ipow(p, k) + 1, ps1 = ipow(p, s) + 1;
        if (boost::multiprecision::gcd(pk1, ps1) == boost::multiprecision::gcd(pk1, Int(ps1 / 2)))
            reject(PnFamily::F5, "gcd(p^k+1,p^s+1) must differ from gcd(p^k+1,(p^s+1)/2)");
    }
    if (beta == 0) reject(PnFamily::F5, "beta must be nonzero");
    if (c.size() != s) reject(PnFamily::F5, "need exactly s coefficients c_0..c_{s-1}");
    if (scale == 0) throw std::invalid_argument("scale must be nonzero");

    // sum c_i x^{p^i} must permute the field; checked exhaustively.
    {
        std::vector<bool> seen(F.order(), false);
        for (Fe x = 0; x < F.order(); ++x) {
            Fe v = 0;
            for (std::uint32_t i = 0; i < s; ++i) v = F.add(v, F.mul(c[i], F.pow(x, frob_exp(F, i))));
            if (seen[v]) reject(PnFamily::F5, "sum c_i x^{p^i} is not a permutation polynomial");
            seen[v] = true;
        }
    }

    std::uint64_t e1 = frob_exp(F, k) + 1;
    std::uint64_t ps = frob_exp(F, s);
    PnFunction f(F, PnFamily::F5);
    f.table_.resize(F.order());
    for (Fe x = 0; x < F.order(); ++x) {
        Fe t = F.pow(F.mul(beta, x), e1);
        Fe v = F.sub(t, F.pow(t, ps));
        for (std::uint32_t i = 0; i < s; ++i)
            v = F.add(v, F.mul(c[i], F.pow(x, frob_exp(F, i) * (ps + 1))));
        f.table_[x] = F.mul(scale, v);
    }
    f.scale_ = scale;
    std::ostringstream cs;
    for (std::size_t i = 0; i < c.size(); ++i) cs << (i ? "," : "") << c[i];
    f.params_ = {{"k", std::to_string(k)}, {"beta", fe_str(beta)}, {"c", cs.str()}};
    std::ostringstream os;
    os << "f5(k=" << k << ",beta=" << beta << ",c=[" << cs.str() << "])";
    if (scale != 1) os << "*" << fe_str(scale);
    f.label_ = os.str();
    return f;
}

PnFunction PnFunction::f6(const FieldCtx& F, std::uint32_t k, std::uint32_t t, std::uint64_t r,
                          Fe beta, const std::vector<Fe>& w, Fe scale) {
    const std::uint32_t m = F.m();
    if (m % 2 != 0) reject(PnFamily::F6, "m = 2s required");
    const std::uint32_t s = m / 2;
    if (k == 0) reject(PnFamily::F6, "k must be positive");
    std::uint64_t ps = frob_exp(F, s);
    for (Fe wi : w)
        if (F.pow(wi, ps) != wi) reject(PnFamily::F6, "w_i must lie in the subfield F_{p^s}");
    if (w.size() != s) reject(PnFamily::F6, "need exactly s coefficients w_0..w_{s-1}");
    {
        std::uint64_t d = mod_m(std::int64_t(t) - std::int64_t(k), m);
        std::uint64_t g = d == 0 ? m : gcd64(m, d);
        if ((m / g) % 2 == 0) reject(PnFamily::F6, "m/gcd(m,t-k) must be odd");
    }
    if (F.pow(beta, ps) == beta) reject(PnFamily::F6, "beta must lie outside the subfield F_{p^s}");
    {
        std::uint64_t e = frob_exp(F, mod_m(std::int64_t(k) - std::int64_t(t), m)) + 1;
        if (r % gcd64(e, ps + 1) == 0) reject(PnFamily::F6, "gcd(p^{k-t}+1,p^s+1) must not divide r");
    }
    if (scale == 0) throw std::invalid_argument("scale must be nonzero");

    Fe z = F.pow(F.primitive_element(), r);
    Fe z_ps = F.pow(z, ps);
    std::uint64_t e_bx = ps + 1;
    std::uint64_t e_z = frob_exp(F, k) + frob_exp(F, t);
    std::uint64_t e_zs = frob_exp(F, std::uint64_t(k) + s) + frob_exp(F, std::uint64_t(s) + t);

    PnFunction f(F, PnFamily::F6);
    f.table_.resize(F.order());
    for (Fe x = 0; x < F.order(); ++x) {
        Fe v = F.mul(beta, F.pow(x, e_bx));
        v = F.add(v, F.mul(z, F.pow(x, e_z)));
        v = F.add(v, F.mul(z_ps, F.pow(x, e_zs)));
        for (std::uint32_t i = 0; i < s; ++i)
            v = F.add(v, F.mul(w[i], F.pow(x, frob_exp(F, i) * (ps + 1))));
        f.table_[x] = F.mul(scale, v);
    }
    f.scale_ = scale;
    std::ostringstream ws;
    for (std::size_t i = 0; i < w.size(); ++i) ws << (i ? "," : "") << w[i];
    f.params_ = {{"k", std::to_string(k)},
                 {"t", std::to_string(t)},
                 {"r", std::to_string(r)},
                 {"beta", fe_str(beta)},
                 {"w", ws.str()}};
    std::ostringstream os;
    os << "f6(k=" << k << ",t=" << t << ",r=" << r << ",beta=" << beta << ",w=[" << ws.str() << "])";
    if (scale != 1) os << "*" << fe_str(scale);
    f.label_ = os.str();
    return f;
}

PnFunction PnFunction::f7(const FieldCtx& F, std::uint32_t t, std::optional<Fe> beta_opt, Fe scale) {
    const std::uint32_t m = F.m(), p = F.p();
    if (m % 3 != 0) reject(PnFamily::F7, "m = 3s required");
    const std::uint32_t s = m / 3;
    std::uint64_t g = gcd64(s, t);
    std::uint64_t s1 = s / g, t1 = t / g;
    if (s1 % 2 == 0) reject(PnFamily::F7, "s/gcd(s,t) must be odd");
    bool cond = (t1 + s1) % 3 == 0 ||
                (mod_pow_u64(p, s, 3) == 1 && mod_pow_u64(p, t, 3) == 1);
    if (!cond) reject(PnFamily::F7, "need t'+s' = 0 mod 3 or p^s = p^t = 1 mod 3");

    std::uint64_t target = 1;
    for (std::uint32_t i = 0; i < 2 * s; ++i) target *= p;  // p^{2s}
    std::uint64_t ps_int = 1;
    for (std::uint32_t i = 0; i < s; ++i) ps_int *= p;
    target = target + ps_int + 1;  // p^{2s}+p^s+1, divides p^{3s}-1

    Fe beta;
    if (beta_opt) {
        beta = *beta_opt;
        if (beta == 0 || F.mul_order(beta) != target)
            reject(PnFamily::F7, "ord(beta) must equal p^{2s}+p^s+1");
    } else {
        beta = 0;
        for (Fe b = 1; b < F.order(); ++b)
            if (F.mul_order(b) == target) {
                beta = b;
                break;
            }
        if (beta == 0) reject(PnFamily::F7, "no element of order p^{2s}+p^s+1 exists");
    }
    if (scale == 0) throw std::invalid_argument("scale must be nonzero");

    std::uint64_t e1 = frob_exp(F, t) + 1;
    std::uint64_t e2 = frob_exp(F, 2 * s) + frob_exp(F, std::uint64_t(s) + t);
    PnFunction f(F, PnFamily::F7);
    f.table_.resize(F.order());
    for (Fe x = 0; x < F.order(); ++x) {
        Fe v = F.sub(F.pow(x, e1), F.mul(beta, F.pow(x, e2)));
        f.table_[x] = F.mul(scale, v);
    }
    f.scale_ = scale;
    f.params_ = {{"t", std::to_string(t)}, {"beta", fe_str(beta)}};
    std::ostringstream os;
    os << "f7(t=" << t << ",beta=" << beta << ")";
    if (scale != 1) os << "*" << fe_str(scale);
    f.label_ = os.str();
    return f;
}

PnFunction PnFunction::f8(const FieldCtx& F, std::uint32_t t, std::optional<Fe> beta_opt, Fe scale) {
    const std::uint32_t m = F.m(), p = F.p();
    if (m % 4 != 0) reject(PnFamily::F8, "m = 4s required");
    const std::uint32_t s = m / 4;
    std::uint64_t g = gcd64(2 * s, t);
    if (((2 * s) / g) % 2 == 0) reject(PnFamily::F8, "2s/gcd(2s,t) must be odd");
    if (mod_pow_u64(p, s, 4) != 1 || mod_pow_u64(p, t, 4) != 1)
        reject(PnFamily::F8, "p^s and p^t must be 1 mod 4");

    std::uint64_t ps_int = 1;
    for (std::uint32_t i = 0; i < s; ++i) ps_int *= p;
    std::uint64_t target = ps_int * ps_int * ps_int + ps_int * ps_int + ps_int + 1;

    Fe beta;
    if (beta_opt) {
        beta = *beta_opt;
        if (beta == 0 || F.mul_order(beta) != target)
            reject(PnFamily::F8, "ord(beta) must equal p^{3s}+p^{2s}+p^s+1");
    } else {
        beta = 0;
        for (Fe b = 1; b < F.order(); ++b)
            if (F.mul_order(b) == target) {
                beta = b;
                break;
            }
        if (beta == 0) reject(PnFamily::F8, "no element of order p^{3s}+p^{2s}+p^s+1 exists");
    }
    if (scale == 0) throw std::invalid_argument("scale must be nonzero");

    std::uint64_t e1 = frob_exp(F, t) + 1;
    std::uint64_t e2 = frob_exp(F, 3 * s) + frob_exp(F, std::uint64_t(t) + s);
    PnFunction f(F, PnFamily::F8);
    f.table_.resize(F.order());
    for (Fe x = 0; x < F.order(); ++x) {
        Fe v = F.sub(F.pow(x, e1), F.mul(beta, F.pow(x, e2)));
        f.table_[x] = F.mul(scale, v);
    }
    f.scale_ = scale;
    f.params_ = {{"t", std::to_string(t)}, {"beta", fe_str(beta)}};
    std::ostringstream os;
    os << "f8(t=" << t << ",beta=" << beta << ")";
    if (scale != 1) os << "*" << fe_str(scale);
    f.label_ = os.str();
    return f;
}

PnFunction PnFunction::raw_polynomial(const FieldCtx& F, const std::vector<Fe>& coeffs) {
    PnFunction f(F, PnFamily::Raw);
    f.unverified_ = true;
    f.table_.resize(F.order());
    for (Fe x = 0; x < F.order(); ++x) {
        Fe v = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) v = F.add(F.mul(v, x), coeffs[i]);
        f.table_[x] = v;
    }
    std::ostringstream cs;
    for (std::size_t i = 0; i < coeffs.size(); ++i) cs << (i ? "," : "") << coeffs[i];
    f.params_ = {{"poly", cs.str()}};
    f.label_ = "raw[" + cs.str() + "]";
    return f;
}

bool verify_pn(const PnFunction& f) {
    const FieldCtx& F = f.field();
    const std::uint32_t q = F.order();
    std::vector<std::uint32_t> seen(q, 0);
    std::uint32_t stamp = 0;
    for (Fe a = 1; a < q; ++a) {
        ++stamp;
        for (Fe x = 0; x < q; ++x) {
            Fe d = F.sub(f(F.add(x, a)), f(x));
            if (seen[d] == stamp) return false;
            seen[d] = stamp;
        }
    }
    return true;
}

}  // namespace pncode
