#ifndef LINCODE_FIELD_HPP
#define LINCODE_FIELD_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "lincode/errors.hpp"

namespace lincode {

// A field element is an index in 0..q-1. For prime q the index is the residue
// itself; for q = p^e the index encodes the coefficient vector of the residue
// polynomial a_0 + a_1*x + ... + a_{e-1}*x^{e-1} as a_0 + a_1*p + ... (base-p
// digits, a_0 least significant).
using Elem = std::uint8_t;
using Vec = std::vector<Elem>;

// Arithmetic in GF(q) for q in {2,3,4,5,7,8,9}, backed by full lookup tables.
// The reduction moduli for the non-prime fields are fixed:
//   GF(4): x^2 + x + 1,   GF(8): x^3 + x + 1,   GF(9): x^2 + 1.
class Field {
public:
    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }
    // Modulus coefficients c_0..c_e (ascending), empty for prime fields.
    const std::vector<int>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }

    Elem inv(Elem a) const {
        if (a == 0) throw DivisionByZero("Field::inv(): zero has no inverse");
        return inv_[a];
    }

    Elem div(Elem a, Elem b) const {
        if (b == 0) throw DivisionByZero("Field::div(): division by zero");
        return mul(a, inv_[b]);
    }

    Elem pow(Elem a, std::uint64_t e) const;

    bool operator==(const Field& o) const { return q_ == o.q_; }
    bool operator!=(const Field& o) const { return q_ != o.q_; }

    friend Field make_field(int q);

private:
    Field() = default;
    std::size_t idx(Elem a, Elem b) const { return std::size_t(a) * q_ + b; }
    void build_tables();
    void self_check() const;

    int q_ = 0, p_ = 0, e_ = 0;
    std::vector<int> modulus_;
    std::array<Elem, 81> add_{};
    std::array<Elem, 81> mul_{};
    std::array<Elem, 9> neg_{};
    std::array<Elem, 9> inv_{};
};

// Builds GF(q). Throws NotPrimePower for any q outside {2,3,4,5,7,8,9}.
Field make_field(int q);

// Scales v by the inverse of its first nonzero entry, so that entry becomes 1.
// Throws ZeroVector on the zero vector.
Vec normalize_vector(const Field& f, const Vec& v);

std::size_t hamming_weight(const Vec& v);

}  // namespace lincode

#endif
