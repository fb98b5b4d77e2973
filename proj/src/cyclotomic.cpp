#include "qb2/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qb2 {

Rat make_rat(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rat v(num, den);
    v.canonicalize();
    return v;
}

long gcd_ll(long a, long b) { return std::gcd(a, b); }
long lcm_ll(long a, long b) { return a / std::gcd(a, b) * b; }

long euler_phi(long n) {
    long result = n;
    long p = 2;
    long m = n;
    while (p * p <= m) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
        ++p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of integer polynomials, quotient known to be integral.
// Both polynomials constant-term first; divisor monic up to sign of its
// leading coefficient being +-1.
std::vector<Int> poly_div_exact(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> rem = num;
    const size_t dn = den.size() - 1;
    const Int& lead = den[dn];
    std::vector<Int> quot(rem.size() - dn, 0);
    for (size_t i = rem.size(); i-- > dn;) {
        if (rem[i] == 0) continue;
        Int q = rem[i] / lead;
        quot[i - dn] = q;
        for (size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= q * den[j];
    }
    return quot;
}

std::vector<long> divisors_of(long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

const std::vector<Int>& cyclotomic_polynomial(long L) {
    static std::map<long, std::vector<Int>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;

    // Phi_L = (x^L - 1) / prod_{d | L, d < L} Phi_d, computed bottom-up so
    // every recursive dependency is already in the cache.
    std::function<const std::vector<Int>&(long)> get = [&](long t) -> const std::vector<Int>& {
        auto hit = cache.find(t);
        if (hit != cache.end()) return hit->second;
        std::vector<Int> num(t + 1, 0);
        num[0] = -1;
        num[t] = 1;
        for (long d : divisors_of(t)) {
            if (d == t) continue;
            num = poly_div_exact(num, get(d));
        }
        return cache.emplace(t, std::move(num)).first->second;
    };
    return get(L);
}

Cyc::Cyc(long level) : level_(level), c_(static_cast<size_t>(euler_phi(level)), Rat(0)) {
    if (level < 1) throw DegenerateParameters("cyclotomic level must be >= 1");
}

Cyc Cyc::one(long level) {
    Cyc v(level);
    v.c_[0] = 1;
    return v;
}

Cyc Cyc::from_rational(const Rat& r, long level) {
    Cyc v(level);
    v.c_[0] = r;
    return v;
}

Cyc Cyc::from_coeffs(std::vector<Rat> coeffs, long level) {
    Cyc v(level);
    if (coeffs.size() != v.c_.size())
        throw LevelMismatch("coefficient vector length does not match phi(level)");
    v.c_ = std::move(coeffs);
    return v;
}

Cyc Cyc::zeta_pow(long level, long e) {
    e %= level;
    if (e < 0) e += level;
    const long phi = static_cast<long>(euler_phi(level));
    Cyc v(level);
    if (e < phi) {
        v.c_[static_cast<size_t>(e)] = 1;
        return v;
    }
    // Reduce x^e mod Phi_L by long division on a sparse polynomial.
    std::vector<Rat> poly(static_cast<size_t>(e) + 1, Rat(0));
    poly[static_cast<size_t>(e)] = 1;
    const auto& cp = cyclotomic_polynomial(level);
    for (size_t i = poly.size(); i-- > static_cast<size_t>(phi);) {
        if (poly[i] == 0) continue;
        Rat q = poly[i];
        for (size_t j = 0; j < cp.size(); ++j) poly[i - static_cast<size_t>(phi) + j] -= q * Rat(cp[j]);
    }
    poly.resize(static_cast<size_t>(phi));
    v.c_ = std::move(poly);
    return v;
}

bool Cyc::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

bool Cyc::is_one() const {
    if (c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& x) { return x == 0; });
}

bool Cyc::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& x) { return x == 0; });
}

const Rat& Cyc::rational_value() const {
    if (!is_rational()) throw Error("rational_value on a non-rational cyclotomic");
    return c_[0];
}

void Cyc::check_same_level(const Cyc& o) const {
    if (level_ != o.level_)
        throw LevelMismatch("cyclotomic arithmetic across levels " + std::to_string(level_) +
                            " and " + std::to_string(o.level_) + "; raise levels explicitly");
}

Cyc Cyc::operator-() const {
    Cyc v = *this;
    for (auto& x : v.c_) x = -x;
    return v;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    check_same_level(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
    check_same_level(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyc& Cyc::operator*=(const Rat& v) {
    for (auto& x : c_) x *= v;
    return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
    check_same_level(o);
    if (is_zero() || o.is_zero()) {
        std::fill(c_.begin(), c_.end(), Rat(0));
        return *this;
    }
    const size_t phi = c_.size();
    std::vector<Rat> prod(2 * phi - 1, Rat(0));
    for (size_t i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < phi; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    const auto& cp = cyclotomic_polynomial(level_);
    for (size_t i = prod.size(); i-- > phi;) {
        if (prod[i] == 0) continue;
        Rat q = prod[i];
        for (size_t j = 0; j < cp.size(); ++j) prod[i - phi + j] -= q * Rat(cp[j]);
    }
    prod.resize(phi);
    c_ = std::move(prod);
    return *this;
}

Cyc Cyc::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(level_) + ")");
    // Extended Euclid in Q[x] against Phi_L (irreducible over Q): find u with
    // u*f = 1 mod Phi_L.
    using Poly = std::vector<Rat>;
    auto deg = [](const Poly& p) -> long {
        for (size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1;
    };
    auto trim = [&](Poly& p) { p.resize(static_cast<size_t>(deg(p) + 1)); };

    const auto& cpz = cyclotomic_polynomial(level_);
    Poly a(cpz.size());
    for (size_t i = 0; i < cpz.size(); ++i) a[i] = Rat(cpz[i]);
    Poly b = c_;
    trim(b);

    // Invariants: a = ua*f + va*Phi, b = ub*f + vb*Phi (v's not tracked).
    Poly ua{Rat(0)}, ub{Rat(1)};
    while (deg(b) > 0) {
        // a = q*b + r
        Poly r = a;
        Poly q(static_cast<size_t>(deg(a) - deg(b) + 1), Rat(0));
        const long db = deg(b);
        const Rat lead = b[static_cast<size_t>(db)];
        for (long i = deg(r); i >= db; --i) {
            if (r[static_cast<size_t>(i)] == 0) continue;
            Rat f = r[static_cast<size_t>(i)] / lead;
            q[static_cast<size_t>(i - db)] = f;
            for (long j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= f * b[static_cast<size_t>(j)];
        }
        trim(r);
        // ua - q*ub
        Poly nu(std::max(ua.size(), q.size() + ub.size()), Rat(0));
        for (size_t i = 0; i < ua.size(); ++i) nu[i] = ua[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < ub.size(); ++j) nu[i + j] -= q[i] * ub[j];
        }
        a = std::move(b);
        b = std::move(r);
        ua = std::move(ub);
        ub = std::move(nu);
        trim(ub);
    }
    if (deg(b) != 0)
        throw DivisionByZero("element not invertible modulo Phi_L");
    const Rat scale = Rat(1) / b[0];
    Cyc result(level_);
    // ub * scale reduced mod Phi (degree already < phi by the Euclid loop).
    for (size_t i = 0; i < ub.size() && i < result.c_.size(); ++i) result.c_[i] = ub[i] * scale;
    return result;
}

Cyc Cyc::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyc base = *this;
    Cyc acc = Cyc::one(level_);
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

Cyc Cyc::raised_to_level(long M) const {
    if (M == level_) return *this;
    if (M % level_ != 0)
        throw LevelMismatch("target level must be a multiple of the current level");
    const long k = M / level_;
    Cyc v(M);
    Cyc zk = Cyc::zeta_pow(M, k);
    Cyc zpow = Cyc::one(M);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != 0) v += zpow * c_[i];
        if (i + 1 < c_.size()) zpow *= zk;
    }
    return v;
}

bool Cyc::lex_less(const Cyc& o) const {
    if (level_ != o.level_) return level_ < o.level_;
    for (size_t i = 0; i < c_.size(); ++i) {
        int cmp = ::cmp(c_[i], o.c_[i]);
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

std::string Cyc::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (any) os << " + ";
        os << c_[i].get_str();
        if (i > 0) os << "*z^" << i;
        any = true;
    }
    if (!any) os << "0";
    os << " (z = zeta_" << level_ << ")";
    return os.str();
}

long order_of_exponent(long L, long e) {
    e %= L;
    if (e < 0) e += L;
    return L / std::gcd(e, L);
}

long order_of(const Cyc& x) {
    const long L = x.level();
    const long group = (L % 2 == 0) ? L : 2 * L;
    for (long d = 1; d <= group; ++d) {
        if (group % d != 0) continue;
        if (x.pow(d).is_one()) return d;
    }
    throw NotRootOfUnity("scalar is not a root of unity in Q(zeta_" + std::to_string(L) + ")");
}

RootConfig make_root_config(long m, long n, long k1, long k2, long level_multiplier) {
    if (m < 1 || n < 1 || level_multiplier < 1)
        throw DegenerateParameters("m, n and level multiplier must be positive");
    if (std::gcd(k1, m) != 1)
        throw NotCoprime("k1 not coprime to m");
    if (std::gcd(k2, n) != 1)
        throw NotCoprime("k2 not coprime to n");

    RootConfig c;
    c.m = m;
    c.n = n;
    c.k1 = ((k1 % m) + m) % m;
    c.k2 = ((k2 % n) + n) % n;
    const long g = std::gcd(m, n);
    c.ell = m / g * n;
    c.s1 = n / g;
    c.s2 = m / g;
    c.s1k1 = c.s1 * c.k1;
    c.s2k2 = c.s2 * c.k2;
    c.er = c.s1k1 % c.ell;
    c.es = c.s2k2 % c.ell;
    c.level = c.ell * level_multiplier;

    if ((2 * (c.er - c.es)) % c.ell == 0)
        throw DegenerateParameters("r^2 = s^2 for m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                   " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2));

    c.ord_r2s2 = order_of_exponent(c.ell, 2 * (c.er + c.es));
    c.ord_rs_inv = order_of_exponent(c.ell, c.er - c.es);
    c.ord_r2s2inv = order_of_exponent(c.ell, 2 * (c.er - c.es));
    c.ord_rs = order_of_exponent(c.ell, c.er + c.es);
    c.ord_r2 = order_of_exponent(c.ell, 2 * c.er);
    c.ord_s2 = order_of_exponent(c.ell, 2 * c.es);
    return c;
}

} // namespace qb2
