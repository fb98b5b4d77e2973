#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qb2/cyclotomic.hpp"

namespace qb2 {

// PBW generator order: X1 < X2 < X3 < X4.
enum class Gen : unsigned char { X1 = 0, X2 = 1, X3 = 2, X4 = 3 };

using Word = std::vector<Gen>;

// Exponents of the ordered monomial X1^a X2^b X3^c X4^d.
struct PBWMonomial {
    long a = 0, b = 0, c = 0, d = 0;
    auto operator<=>(const PBWMonomial&) const = default;
    long word_length() const { return a + b + c + d; }
    // Degree in the original e-generators: X2 expands to two e-letters and
    // X3 to three.
    long e_degree() const { return a + 2 * b + 3 * c + d; }
};

Word word_of(const PBWMonomial& m);
long e_degree(const Word& w);

// Polynomial in PBW normal form: finitely many ordered monomials with
// nonzero cyclotomic coefficients, tied to one root configuration.
class NCPoly {
public:
    explicit NCPoly(const RootConfig& cfg) : cfg_(cfg) {}

    static NCPoly zero(const RootConfig& cfg) { return NCPoly(cfg); }
    static NCPoly one(const RootConfig& cfg);
    static NCPoly monomial(const RootConfig& cfg, const PBWMonomial& m, const Cyc& coeff);
    static NCPoly generator(const RootConfig& cfg, Gen g);

    const RootConfig& config() const { return cfg_; }
    const std::map<PBWMonomial, Cyc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const PBWMonomial& m, const Cyc& coeff);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Cyc& s);

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const Cyc& s, NCPoly p) { return p *= s; }

    bool operator==(const NCPoly& o) const;
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    long max_e_degree() const; // -1 for zero

    std::string to_string() const;

private:
    RootConfig cfg_;
    std::map<PBWMonomial, Cyc> terms_;
    void check_config(const NCPoly& o) const;
};

// Straightens an arbitrary word in X1..X4 to PBW normal form using the six
// commutation rules of the algebra.
NCPoly normalize(const RootConfig& cfg, const Word& w);

// Product via concatenation and straightening. ConfigMismatch if the
// operands were built over different configurations.
NCPoly multiply(const NCPoly& p, const NCPoly& q);
NCPoly ncpow(const NCPoly& p, long e);

// W~ = X2 + (r^2 - s^2) X4 X1 in normal form.
NCPoly w_tilde(const RootConfig& cfg);
// X~ = W~ X2 - s^2 (r^2 - s^2) / (1 - r s^-1) X3 X1 in normal form.
NCPoly x_tilde(const RootConfig& cfg);

// Both Serre relations with e1 = X1, e2 = X4.
bool serre_check(const RootConfig& cfg);

// The four power commutation identities for k = 1..k_max (first two start
// at k = 2; the last two are checked from k = 1, where they reduce to the
// defining relations).
bool lemma22_check(const RootConfig& cfg, long k_max);

// [Xi^ell, Xj] = 0 for all generator pairs, ell = cfg.ell.
bool centrality_check(const RootConfig& cfg);

// The six relations of the subalgebra generated by X1, X2, X3, W~, the
// power identities for a = 2..5, and the commutation behaviour of X~.
bool b_relations_check(const RootConfig& cfg);

} // namespace qb2
