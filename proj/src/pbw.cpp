#include "qb2/pbw.hpp"

#include <sstream>

namespace qb2 {

Word word_of(const PBWMonomial& m) {
    Word w;
    w.reserve(static_cast<size_t>(m.word_length()));
    w.insert(w.end(), static_cast<size_t>(m.a), Gen::X1);
    w.insert(w.end(), static_cast<size_t>(m.b), Gen::X2);
    w.insert(w.end(), static_cast<size_t>(m.c), Gen::X3);
    w.insert(w.end(), static_cast<size_t>(m.d), Gen::X4);
    return w;
}

long e_degree(const Word& w) {
    long deg = 0;
    for (Gen g : w) deg += (g == Gen::X2) ? 2 : (g == Gen::X3) ? 3 : 1;
    return deg;
}

NCPoly NCPoly::one(const RootConfig& cfg) {
    NCPoly p(cfg);
    p.add_term({}, cfg.one());
    return p;
}

NCPoly NCPoly::monomial(const RootConfig& cfg, const PBWMonomial& m, const Cyc& coeff) {
    NCPoly p(cfg);
    p.add_term(m, coeff);
    return p;
}

NCPoly NCPoly::generator(const RootConfig& cfg, Gen g) {
    PBWMonomial m;
    switch (g) {
        case Gen::X1: m.a = 1; break;
        case Gen::X2: m.b = 1; break;
        case Gen::X3: m.c = 1; break;
        case Gen::X4: m.d = 1; break;
    }
    return monomial(cfg, m, cfg.one());
}

void NCPoly::add_term(const PBWMonomial& m, const Cyc& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NCPoly::check_config(const NCPoly& o) const {
    if (!cfg_.same_parameters(o.cfg_))
        throw ConfigMismatch("polynomials built over different root configurations");
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    check_config(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    check_config(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Cyc& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

bool NCPoly::operator==(const NCPoly& o) const {
    return cfg_.same_parameters(o.cfg_) && terms_ == o.terms_;
}

long NCPoly::max_e_degree() const {
    long deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.e_degree());
    return deg;
}

std::string NCPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (m.a) os << " X1^" << m.a;
        if (m.b) os << " X2^" << m.b;
        if (m.c) os << " X3^" << m.c;
        if (m.d) os << " X4^" << m.d;
    }
    return os.str();
}

namespace {

struct RuleTerm {
    Cyc coeff;
    Word letters; // one or two letters
};

// X_j X_i with j > i rewritten as a combination of words that are either in
// order or strictly shorter.
std::vector<RuleTerm> rewrite_pair(const RootConfig& cfg, Gen hi, Gen lo) {
    using G = Gen;
    if (hi == G::X2 && lo == G::X1) return {{cfg.s_pow(-2), {G::X1, G::X2}}};
    if (hi == G::X3 && lo == G::X1) return {{cfg.rs_pow(-2), {G::X1, G::X3}}};
    if (hi == G::X4 && lo == G::X1)
        return {{cfg.r_pow(-2), {G::X1, G::X4}}, {-cfg.r_pow(-2), {G::X2}}};
    if (hi == G::X3 && lo == G::X2) return {{cfg.rs_pow(-1), {G::X2, G::X3}}};
    if (hi == G::X4 && lo == G::X2)
        return {{cfg.s_pow(-2), {G::X2, G::X4}}, {cfg.one(), {G::X3}}};
    if (hi == G::X4 && lo == G::X3) return {{cfg.rs_pow(-1), {G::X3, G::X4}}};
    throw Error("rewrite_pair called on an ordered pair");
}

PBWMonomial monomial_of_sorted(const Word& w) {
    PBWMonomial m;
    for (Gen g : w) {
        switch (g) {
            case Gen::X1: ++m.a; break;
            case Gen::X2: ++m.b; break;
            case Gen::X3: ++m.c; break;
            case Gen::X4: ++m.d; break;
        }
    }
    return m;
}

} // namespace

NCPoly normalize(const RootConfig& cfg, const Word& w) {
    NCPoly result(cfg);
    std::map<Word, Cyc> pending;
    pending.emplace(w, cfg.one());
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& cur = node.key();
        const Cyc& coeff = node.mapped();
        if (coeff.is_zero()) continue;

        // leftmost inversion
        size_t pos = cur.size();
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] > cur[i + 1]) {
                pos = i;
                break;
            }
        }
        if (pos == cur.size()) {
            result.add_term(monomial_of_sorted(cur), coeff);
            continue;
        }
        for (const RuleTerm& t : rewrite_pair(cfg, cur[pos], cur[pos + 1])) {
            Word next;
            next.reserve(cur.size());
            next.insert(next.end(), cur.begin(), cur.begin() + static_cast<long>(pos));
            next.insert(next.end(), t.letters.begin(), t.letters.end());
            next.insert(next.end(), cur.begin() + static_cast<long>(pos) + 2, cur.end());
            Cyc add = coeff * t.coeff;
            auto [it, inserted] = pending.emplace(std::move(next), add);
            if (!inserted) {
                it->second += add;
                if (it->second.is_zero()) pending.erase(it);
            }
        }
    }
    return result;
}

NCPoly multiply(const NCPoly& p, const NCPoly& q) {
    if (!p.config().same_parameters(q.config()))
        throw ConfigMismatch("multiply across different root configurations");
    NCPoly result(p.config());
    for (const auto& [m1, c1] : p.terms()) {
        Word w1 = word_of(m1);
        for (const auto& [m2, c2] : q.terms()) {
            Word w = w1;
            Word w2 = word_of(m2);
            w.insert(w.end(), w2.begin(), w2.end());
            NCPoly part = normalize(p.config(), w);
            part *= c1 * c2;
            result += part;
        }
    }
    return result;
}

NCPoly ncpow(const NCPoly& p, long e) {
    NCPoly acc = NCPoly::one(p.config());
    for (long i = 0; i < e; ++i) acc = multiply(acc, p);
    return acc;
}

NCPoly w_tilde(const RootConfig& cfg) {
    NCPoly w = NCPoly::generator(cfg, Gen::X2);
    NCPoly x4x1 = normalize(cfg, {Gen::X4, Gen::X1});
    x4x1 *= cfg.r_pow(2) - cfg.s_pow(2);
    return w + x4x1;
}

NCPoly x_tilde(const RootConfig& cfg) {
    Cyc denom = cfg.one() - cfg.rsinv_pow(1);
    if (denom.is_zero()) throw DegenerateParameters("x_tilde requires r != s");
    NCPoly wt = w_tilde(cfg);
    NCPoly p = multiply(wt, NCPoly::generator(cfg, Gen::X2));
    NCPoly x3x1 = normalize(cfg, {Gen::X3, Gen::X1});
    x3x1 *= cfg.s_pow(2) * (cfg.r_pow(2) - cfg.s_pow(2)) * denom.inv();
    return p - x3x1;
}

bool serre_check(const RootConfig& cfg) {
    using G = Gen;
    // e1^2 e2 - (r^2 + s^2) e1 e2 e1 + r^2 s^2 e2 e1^2
    NCPoly rel1 = normalize(cfg, {G::X1, G::X1, G::X4});
    rel1 -= (cfg.r_pow(2) + cfg.s_pow(2)) * normalize(cfg, {G::X1, G::X4, G::X1});
    rel1 += cfg.r_pow(2) * cfg.s_pow(2) * normalize(cfg, {G::X4, G::X1, G::X1});
    if (!rel1.is_zero()) return false;

    // e1 e2^3 - (r^2 + rs + s^2) e2 e1 e2^2
    //   + rs (r^2 + rs + s^2) e2^2 e1 e2 - r^3 s^3 e2^3 e1
    Cyc mid = cfg.r_pow(2) + cfg.rs_pow(1) + cfg.s_pow(2);
    NCPoly rel2 = normalize(cfg, {G::X1, G::X4, G::X4, G::X4});
    rel2 -= mid * normalize(cfg, {G::X4, G::X1, G::X4, G::X4});
    rel2 += cfg.rs_pow(1) * mid * normalize(cfg, {G::X4, G::X4, G::X1, G::X4});
    rel2 -= cfg.r_pow(3) * cfg.s_pow(3) * normalize(cfg, {G::X4, G::X4, G::X4, G::X1});
    return rel2.is_zero();
}

namespace {

Word repeated(Gen g, long k) { return Word(static_cast<size_t>(k), g); }

Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace

bool lemma22_check(const RootConfig& cfg, long k_max) {
    using G = Gen;
    const Cyc one = cfg.one();
    const Cyc r2 = cfg.r_pow(2), s2 = cfg.s_pow(2);
    const Cyc dr2s2 = r2 - s2;          // r^2 - s^2
    const Cyc drs = cfg.r() - cfg.s();  // r - s
    const Cyc u = cfg.rsinv_pow(1);     // r s^-1

    for (long k = 1; k <= k_max; ++k) {
        if (k >= 2) {
            // (1) X1 X4^k = r^{2k} X4^k X1
            //      + (r^{2k} - s^{2k})/(r^2 - s^2) X4^{k-1} X2
            //      - s^2 (r^k - s^k)(r^{k-1} - s^{k-1}) / ((r - s)(r^2 - s^2)) X4^{k-2} X3
            NCPoly lhs = normalize(cfg, concat({G::X1}, repeated(G::X4, k)));
            NCPoly rhs = cfg.r_pow(2 * k) * normalize(cfg, concat(repeated(G::X4, k), {G::X1}));
            Cyc c2 = (cfg.r_pow(2 * k) - cfg.s_pow(2 * k)) / dr2s2;
            rhs += c2 * normalize(cfg, concat(repeated(G::X4, k - 1), {G::X2}));
            Cyc c3 = s2 * (cfg.r_pow(k) - cfg.s_pow(k)) * (cfg.r_pow(k - 1) - cfg.s_pow(k - 1)) /
                     (drs * dr2s2);
            rhs -= c3 * normalize(cfg, concat(repeated(G::X4, k - 2), {G::X3}));
            if (lhs != rhs) return false;

            // (2) X4^k X1 = r^{-2k} X1 X4^k
            //      - s^2 (rs)^{-2k} (r^{2k} - s^{2k})/(r^2 - s^2) X2 X4^{k-1}
            //      - r^{-2k} r^2 ((rs^-1)^k - 1)((rs^-1)^{k-1} - 1)
            //        / (((rs^-1)^2 - 1)(rs^-1 - 1)) X3 X4^{k-2}
            NCPoly lhs2 = normalize(cfg, concat(repeated(G::X4, k), {G::X1}));
            NCPoly rhs2 = NCPoly::monomial(cfg, {1, 0, 0, k}, cfg.r_pow(-2 * k));
            Cyc d2 = s2 * cfg.rs_pow(-2 * k) * (cfg.r_pow(2 * k) - cfg.s_pow(2 * k)) / dr2s2;
            rhs2.add_term({0, 1, 0, k - 1}, -d2);
            Cyc d3 = cfg.r_pow(-2 * k) * r2 * (cfg.rsinv_pow(k) - one) * (cfg.rsinv_pow(k - 1) - one) /
                     ((cfg.rsinv_pow(2) - one) * (u - one));
            rhs2.add_term({0, 0, 1, k - 2}, -d3);
            if (lhs2 != rhs2) return false;
        }

        // (3) X4^k X2 = s^{-2k} X2 X4^k
        //      + (rs)^{-(k-1)} (1 - (rs^-1)^k)/(1 - rs^-1) X3 X4^{k-1}
        NCPoly lhs3 = normalize(cfg, concat(repeated(G::X4, k), {G::X2}));
        NCPoly rhs3 = NCPoly::monomial(cfg, {0, 1, 0, k}, cfg.s_pow(-2 * k));
        Cyc e2 = cfg.rs_pow(-(k - 1)) * (one - cfg.rsinv_pow(k)) / (one - u);
        rhs3.add_term({0, 0, 1, k - 1}, e2);
        if (lhs3 != rhs3) return false;

        // (4) X2^k X4 = s^{2k} X4 X2^k
        //      - s^{2k} (1 - (rs^-1)^k)/(1 - rs^-1) X3 X2^{k-1}
        NCPoly lhs4 = normalize(cfg, concat(repeated(G::X2, k), {G::X4}));
        NCPoly rhs4 = cfg.s_pow(2 * k) * normalize(cfg, concat({G::X4}, repeated(G::X2, k)));
        Cyc f2 = cfg.s_pow(2 * k) * (one - cfg.rsinv_pow(k)) / (one - u);
        rhs4 -= f2 * normalize(cfg, concat({G::X3}, repeated(G::X2, k - 1)));
        if (lhs4 != rhs4) return false;
    }
    return true;
}

bool centrality_check(const RootConfig& cfg) {
    const long ell = cfg.ell;
    const Gen gens[] = {Gen::X1, Gen::X2, Gen::X3, Gen::X4};
    for (Gen gi : gens) {
        Word power = repeated(gi, ell);
        for (Gen gj : gens) {
            if (gi == gj) continue;
            NCPoly left = normalize(cfg, concat(power, {gj}));
            NCPoly right = normalize(cfg, concat({gj}, power));
            if (left != right) return false;
        }
    }
    return true;
}

bool b_relations_check(const RootConfig& cfg) {
    const Cyc one = cfg.one();
    NCPoly X1 = NCPoly::generator(cfg, Gen::X1);
    NCPoly X2 = NCPoly::generator(cfg, Gen::X2);
    NCPoly X3 = NCPoly::generator(cfg, Gen::X3);
    NCPoly W = w_tilde(cfg);
    NCPoly Xt = x_tilde(cfg);
    NCPoly x3x1 = multiply(X3, X1);
    const Cyc s2d = cfg.s_pow(2) * (cfg.r_pow(2) - cfg.s_pow(2)); // s^2 (r^2 - s^2)

    // W~ X1 = r^-2 X1 W~
    if (multiply(W, X1) != cfg.r_pow(-2) * multiply(X1, W)) return false;
    // X2 X1 = s^-2 X1 X2
    if (multiply(X2, X1) != cfg.s_pow(-2) * multiply(X1, X2)) return false;
    // X3 X1 = (rs)^-2 X1 X3
    if (multiply(X3, X1) != cfg.rs_pow(-2) * multiply(X1, X3)) return false;
    // X3 X2 = (rs)^-1 X2 X3
    if (multiply(X3, X2) != cfg.rs_pow(-1) * multiply(X2, X3)) return false;
    // W~ X3 = rs X3 W~
    if (multiply(W, X3) != cfg.rs_pow(1) * multiply(X3, W)) return false;
    // W~ X2 = X2 W~ + s^2 (r^2 - s^2) X3 X1
    if (multiply(W, X2) != multiply(X2, W) + s2d * x3x1) return false;

    // Power identities, a = 2..5:
    //   X2^a W~ = W~ X2^a - s^2(r^2-s^2) (1-(rs^-1)^a)/(1-rs^-1) X3 X1 X2^{a-1}
    //   W~^a X2 = X2 W~^a + s^2(r^2-s^2) (1-(r^-1 s)^a)/(1-r^-1 s) X3 X1 W~^{a-1}
    const Cyc u = cfg.rsinv_pow(1);
    const Cyc uinv = cfg.rsinv_pow(-1);
    for (long a = 2; a <= 5; ++a) {
        NCPoly x2a = ncpow(X2, a);
        NCPoly wa = ncpow(W, a);
        Cyc ca = s2d * (one - cfg.rsinv_pow(a)) / (one - u);
        NCPoly lhs = multiply(x2a, W);
        NCPoly rhs = multiply(W, x2a) - ca * multiply(x3x1, ncpow(X2, a - 1));
        if (lhs != rhs) return false;

        Cyc cb = s2d * (one - cfg.rsinv_pow(-a)) / (one - uinv);
        NCPoly lhs2 = multiply(wa, X2);
        NCPoly rhs2 = multiply(X2, wa) + cb * multiply(x3x1, ncpow(W, a - 1));
        if (lhs2 != rhs2) return false;
    }

    // X~ is central for X3 X1, W~ and X2, and skew-commutes with X3, X1.
    if (multiply(Xt, x3x1) != multiply(x3x1, Xt)) return false;
    if (multiply(Xt, W) != multiply(W, Xt)) return false;
    if (multiply(Xt, X2) != multiply(X2, Xt)) return false;
    if (multiply(Xt, X3) != cfg.r_pow(2) * cfg.s_pow(2) * multiply(X3, Xt)) return false;
    if (multiply(Xt, X1) != cfg.r_pow(-2) * cfg.s_pow(-2) * multiply(X1, Xt)) return false;
    return true;
}

} // namespace qb2
