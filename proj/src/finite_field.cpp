#include "pncode/finite_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pncode/exact.hpp"

namespace pncode {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients ascending

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return int(f.size()) - 1; }

// r = a*b mod (f, p); f monic.
Poly polymod_mul(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    const std::size_t m = f.size() - 1;
    for (std::size_t d = r.size(); d-- > m;) {
        std::uint32_t c = r[d];
        if (!c) continue;
        r[d] = 0;
        for (std::size_t i = 0; i < m; ++i)
            r[d - m + i] = (r[d - m + i] + std::uint64_t(c) * (p - f[i] % p)) % p;
    }
    r.resize(m);
    trim(r);
    return r;
}

Poly polymod_pow(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly r{1};
    while (e) {
        if (e & 1) r = polymod_mul(r, base, f, p);
        base = polymod_mul(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        std::uint32_t lead_inv = std::uint32_t(mod_pow_u64(b.back(), p - 2, p));
        while (int(a.size()) >= int(b.size()) && !a.empty()) {
            std::uint32_t c = std::uint64_t(a.back()) * lead_inv % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (a[shift + i] + std::uint64_t(c) * (p - b[i])) % p;
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(std::uint32_t(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(std::uint32_t(n));
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Rabin irreducibility: f of degree m is irreducible over F_p iff
// x^{p^m} = x mod f and gcd(x^{p^{m/l}} - x, f) = 1 for every prime l | m.
bool irreducible(const Poly& f, std::uint32_t p, std::uint32_t m) {
    if (m == 1) return true;
    const Poly x{0, 1};
    std::vector<Poly> frob_chain(m + 1);  // frob_chain[j] = x^{p^j} mod f
    frob_chain[0] = x;
    for (std::uint32_t j = 1; j <= m; ++j)
        frob_chain[j] = polymod_pow(frob_chain[j - 1], p, f, p);
    if (frob_chain[m] != x) return false;
    for (std::uint32_t l : prime_factors(m)) {
        Poly g = poly_gcd(poly_sub(frob_chain[m / l], x, p), f, p);
        if (degree(g) > 0) return false;
    }
    return true;
}

Poly find_modulus(std::uint32_t p, std::uint32_t m, std::uint64_t q) {
    for (std::uint64_t v = 0; v < q; ++v) {
        Poly f(m + 1, 0);
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = std::uint32_t(t % p);
            t /= p;
        }
        f[m] = 1;
        if (irreducible(f, p, m)) return f;
    }
    throw consistency_error("no irreducible polynomial found (impossible)");
}

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t m, std::uint64_t max_order) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("field characteristic must be an odd prime, got " + std::to_string(p));
    if (m == 0)
        throw std::invalid_argument("extension degree m must be positive");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kTableLimit)
            throw capacity_error("p^m = " + std::to_string(p) + "^" + std::to_string(m) +
                                 " exceeds the table limit of 2^20 elements");
    }
    if (q > max_order)
        throw capacity_error("p^m = " + std::to_string(q) + " exceeds the enumeration ceiling of " +
                             std::to_string(max_order) + " elements");

    p_ = p;
    m_ = m;
    q_ = std::uint32_t(q);
    modulus_ = find_modulus(p, m, q);

    pw_.resize(m_ + 1);
    pw_[0] = 1;
    for (std::uint32_t i = 1; i <= m_; ++i) pw_[i] = pw_[i - 1] * p_;

    digits_.resize(std::size_t(q_) * m_);
    for (Fe x = 0; x < q_; ++x) {
        std::uint32_t t = x;
        for (std::uint32_t i = 0; i < m_; ++i) {
            digits_[std::size_t(x) * m_ + i] = std::uint16_t(t % p_);
            t /= p_;
        }
    }

    // Smallest primitive element, found through the table-free route, then
    // used as the generator of the log/antilog tables.
    qm1_primes_ = prime_factors(q_ - 1);
    auto pow_slow = [&](Fe a, std::uint64_t e) {
        Fe r = 1;
        while (e) {
            if (e & 1) r = mul_poly(r, a);
            a = mul_poly(a, a);
            e >>= 1;
        }
        return r;
    };
    prim_ = 0;
    for (Fe g = 2; g < q_; ++g) {
        bool ok = true;
        for (std::uint32_t l : qm1_primes_)
            if (pow_slow(g, (q_ - 1) / l) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            prim_ = g;
            break;
        }
    }
    if (prim_ == 0) throw consistency_error("no primitive element found (impossible)");

    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    exp_[0] = 1;
    for (std::uint32_t i = 1; i < q_ - 1; ++i) exp_[i] = mul_poly(exp_[i - 1], prim_);
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        if (exp_[i] == 0 || (i > 0 && exp_[i] == 1))
            throw consistency_error("antilog table collision; generator is not primitive");
        log_[exp_[i]] = i;
    }

    trace_.resize(q_);
    for (Fe x = 0; x < q_; ++x) {
        Fe acc = x, y = x;
        for (std::uint32_t i = 1; i < m_; ++i) {
            y = pow(y, p_);
            acc = add(acc, y);
        }
        if (acc >= p_)
            throw consistency_error("trace left the prime subfield; field tables are broken");
        trace_[x] = std::uint16_t(acc);
    }
}

Fe FieldCtx::mul_poly(Fe a, Fe b) const {
    if (a == 0 || b == 0) return 0;
    Poly pa(m_), pb(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        pa[i] = digit(a, i);
        pb[i] = digit(b, i);
    }
    trim(pa);
    trim(pb);
    Poly r = polymod_mul(pa, pb, modulus_, p_);
    Fe out = 0;
    for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * pw_[i];
    return out;
}

Fe FieldCtx::element_from_digits(const std::vector<std::uint32_t>& d) const {
    if (d.size() != m_) throw std::invalid_argument("digit vector has wrong length");
    Fe r = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (d[i] >= p_) throw std::invalid_argument("digit out of range");
        r += d[i] * pw_[i];
    }
    return r;
}

Fe FieldCtx::inv(Fe a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Fe FieldCtx::pow(Fe a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t r = std::uint64_t(log_[a]) * (e % (q_ - 1)) % (q_ - 1);
    return exp_[std::uint32_t(r)];
}

Fe FieldCtx::frobenius(Fe x, std::uint32_t j) const {
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < j % m_; ++i) e *= p_;
    return pow(x, e);
}

int FieldCtx::quadratic_character(Fe x) const {
    if (x == 0) return 0;
    Fe t = pow(x, (q_ - 1) / 2);
    if (t == 1) return 1;
    if (t != neg(1)) throw consistency_error("x^{(q-1)/2} outside {1,-1}");
    return -1;
}

std::uint64_t FieldCtx::mul_order(Fe x) const {
    if (x == 0) throw std::invalid_argument("multiplicative order of zero");
    std::uint64_t o = q_ - 1;
    for (std::uint32_t l : qm1_primes_)
        while (o % l == 0 && pow(x, o / l) == 1) o /= l;
    return o;
}

std::uint32_t FieldCtx::log_of(Fe x) const {
    if (x == 0) throw std::invalid_argument("log of zero");
    return log_[x];
}

std::string FieldCtx::modulus_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = int(m_); i >= 0; --i) {
        std::uint32_t c = modulus_[i];
        if (!c) continue;
        if (!first) os << "+";
        if (i == 0 || c > 1) os << c;
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::complex<double> GaussSumValue::symbolic_value() const {
    static const std::complex<double> unit[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    double mag = std::sqrt(std::pow(double(p), double(m)));
    return double(sign) * unit[i_power & 3] * mag;
}

GaussSumValue gauss_sum(const FieldCtx& field) {
    const std::uint32_t p = field.p(), m = field.m(), q = field.order();
    GaussSumValue g;
    g.p = p;
    g.m = m;
    g.sign = (m - 1) % 2 == 0 ? 1 : -1;
    g.i_power = (p % 4 == 1) ? 0 : int(m % 4);

    std::complex<double> sum = 0;
    const double twopi_over_p = 2.0 * std::numbers::pi / double(p);
    for (Fe x = 1; x < q; ++x) {
        double ang = twopi_over_p * double(field.trace(x));
        sum += double(field.quadratic_character(x)) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    g.numeric = sum;

    std::complex<double> sym = g.symbolic_value();
    if (std::abs(sum - sym) > 1e-9 * std::abs(sym))
        throw consistency_error("Gauss sum direct summation disagrees with the closed form");
    return g;
}

FieldCtx make_field(std::uint32_t p, std::uint32_t m, std::uint64_t max_order) {
    return FieldCtx(p, m, max_order);
}

}  // namespace pncode
