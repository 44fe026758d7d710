#ifndef LINCODE_POLYSOLVE_HPP
#define LINCODE_POLYSOLVE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lincode/field.hpp"

namespace lincode {

// Exponent vector. Exponents are kept literal at construction; arithmetic
// reduces them with the field relation x^q = x (so x^e maps to x^(e') with
// e' = ((e - 1) mod (q - 1)) + 1 for e >= q), which keeps every monomial
// within exponent range 0..q-1 after any product.
struct Monomial {
    std::vector<std::uint8_t> exps;

    static Monomial one(std::size_t nvars) { return Monomial{std::vector<std::uint8_t>(nvars, 0)}; }
    static Monomial var(std::size_t nvars, std::size_t i, std::uint8_t e = 1);

    std::size_t degree() const;
    bool is_one() const { return degree() == 0; }
    bool divides(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

enum class MonomialOrderKind { Degrevlex, Lex };

// Both orders take x1 < x2 < ... (variable with the highest index dominates).
bool monomial_less(MonomialOrderKind kind, const Monomial& a, const Monomial& b);

Monomial monomial_lcm(const Monomial& a, const Monomial& b);
// Quotient a / b; requires b | a.
Monomial monomial_quotient(const Monomial& a, const Monomial& b);

struct PolyRing {
    Field field;
    std::size_t nvars;
    MonomialOrderKind order;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_poly_ring(const Field& f, std::size_t nvars,
                       MonomialOrderKind order = MonomialOrderKind::Degrevlex);

// Sparse polynomial over GF(q), terms kept sorted descending in the ring's
// monomial order with nonzero coefficients.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    // Terms are taken literally (no exponent reduction), so field equations
    // like x^q - x can be represented as written.
    Polynomial(RingPtr ring, std::vector<std::pair<Monomial, Elem>> terms);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_.front().first.is_one(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<Monomial, Elem>>& terms() const { return terms_; }
    const Monomial& leading_monomial() const { return terms_.front().first; }
    Elem leading_coefficient() const { return terms_.front().second; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;  // exponent-reduced
    Polynomial scaled(Elem s) const;
    // this * coeff * mono, exponent-reduced.
    Polynomial times_term(const Monomial& mono, Elem coeff) const;
    Polynomial pow(std::size_t e) const;
    Polynomial monic() const;
    // Copy with all exponents reduced by x^q = x (merging collisions).
    Polynomial reduced_exponents() const;

    Polynomial substituted(std::size_t var, Elem value) const;
    Elem evaluate(std::span<const Elem> point) const;

    std::string str() const;  // for diagnostics
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

private:
    RingPtr ring_;
    std::vector<std::pair<Monomial, Elem>> terms_;

    void normalize(bool reduce_exponents);
};

Polynomial poly_zero(RingPtr ring);
Polynomial poly_constant(RingPtr ring, Elem c);
Polynomial poly_variable(RingPtr ring, std::size_t i);

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> generators;
};

// Remainder of f on division by the list (scanned in order), exponents
// reduced throughout. The remainder's monomials are divisible by no leading
// monomial of the list.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

struct GroebnerBudget {
    std::uint64_t pair_reductions = 1'000'000;
    std::uint64_t max_terms = 1'000'000;  // per-polynomial term cap
};

struct GroebnerResult {
    std::vector<Polynomial> basis;  // reduced, monic, ascending leading monomials
    std::uint64_t pair_reductions = 0;

    bool contains_nonzero_constant() const;
};

// Buchberger's algorithm in GF(q)[x]/(x_i^q - x_i). The field relations are
// built in: products reduce exponents eagerly, and for every basis element g
// and variable x_i dividing lt(g) the reduction of x_i^(q-a) * g (the
// S-polynomial against x_i^q - x_i) is processed like any other pair. Pair
// selection is by minimal lcm degree, ties by generator index. Throws
// ResourceLimit when a budget is exceeded.
GroebnerResult buchberger(const Ideal& ideal, const GroebnerBudget& budget = {});

// Common zeros over GF(q)^nvars of a basis, in ascending lexicographic point
// order. Intended for zero-dimensional bases as produced by buchberger(); an
// empty basis imposes no constraint and yields every point.
std::vector<Vec> variety(std::span<const Polynomial> basis, const RingPtr& ring);

// Polynomial system whose GF(q)-solutions are exactly the admissible column
// blocks X (k x m, variables column-major: x_{j*k+i} is row i of column j):
//   for every v in jd:  prod_j ((sum_i v_i X_ij)^(q-1) - 1)
// together with x_1^2 - x_1 (first coordinate restricted to {0, 1}) and the
// field equations x_t^q - x_t for the remaining variables.
Ideal build_extension_ideal(const Field& f, std::span<const Vec> jd, std::size_t k, std::size_t m,
                            MonomialOrderKind order = MonomialOrderKind::Degrevlex);

}  // namespace lincode

#endif
