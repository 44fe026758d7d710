#include "lincode/field.hpp"

#include <algorithm>

namespace lincode {

namespace {

std::vector<int> to_digits(int value, int p, int e) {
    std::vector<int> d(e, 0);
    for (int i = 0; i < e; ++i) {
        d[i] = value % p;
        value /= p;
    }
    return d;
}

int from_digits(const std::vector<int>& d, int p) {
    int value = 0;
    for (std::size_t i = d.size(); i-- > 0;) value = value * p + d[i];
    return value;
}

// Multiplies two residue polynomials and reduces modulo the (monic) modulus.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& modulus, int p) {
    int e = int(modulus.size()) - 1;
    std::vector<int> prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (int deg = 2 * e - 2; deg >= e; --deg) {
        int c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        // x^deg = -(c_0 + ... + c_{e-1} x^{e-1}) * x^(deg-e) since modulus is monic
        for (int i = 0; i < e; ++i) {
            int t = prod[deg - e + i] - c * modulus[i];
            t %= p;
            if (t < 0) t += p;
            prod[deg - e + i] = t;
        }
    }
    prod.resize(e);
    return prod;
}

}  // namespace

Field make_field(int q) {
    Field f;
    switch (q) {
        case 2: case 3: case 5: case 7:
            f.p_ = q; f.e_ = 1;
            break;
        case 4:
            f.p_ = 2; f.e_ = 2; f.modulus_ = {1, 1, 1};
            break;
        case 8:
            f.p_ = 2; f.e_ = 3; f.modulus_ = {1, 1, 0, 1};
            break;
        case 9:
            f.p_ = 3; f.e_ = 2; f.modulus_ = {1, 0, 1};
            break;
        default:
            throw NotPrimePower("make_field(): q = " + std::to_string(q) +
                                " is not a supported prime power");
    }
    f.q_ = q;
    f.build_tables();
    f.self_check();
    return f;
}

void Field::build_tables() {
    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            int s, m;
            if (e_ == 1) {
                s = (a + b) % p_;
                m = (a * b) % p_;
            } else {
                auto da = to_digits(a, p_, e_);
                auto db = to_digits(b, p_, e_);
                std::vector<int> ds(e_);
                for (int i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
                s = from_digits(ds, p_);
                m = from_digits(poly_mulmod(da, db, modulus_, p_), p_);
            }
            add_[idx(Elem(a), Elem(b))] = Elem(s);
            mul_[idx(Elem(a), Elem(b))] = Elem(m);
        }
    }
    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b)
            if (add_[idx(Elem(a), Elem(b))] == 0) neg_[a] = Elem(b);
        for (int b = 1; b < q_; ++b)
            if (mul_[idx(Elem(a), Elem(b))] == 1) inv_[a] = Elem(b);
    }
}

// Exhaustive verification of the field axioms over the generated tables.
void Field::self_check() const {
    auto fail = [](const char* what) {
        throw Error(std::string("Field::self_check(): ") + what);
    };
    for (int a = 0; a < q_; ++a) {
        Elem ea = Elem(a);
        if (add(ea, 0) != ea) fail("additive identity");
        if (mul(ea, 1) != ea) fail("multiplicative identity");
        if (mul(ea, 0) != 0) fail("zero absorption");
        if (add(ea, neg(ea)) != 0) fail("additive inverse");
        if (a != 0 && mul(ea, inv_[a]) != 1) fail("multiplicative inverse");
        for (int b = 0; b < q_; ++b) {
            Elem eb = Elem(b);
            if (add(ea, eb) != add(eb, ea)) fail("addition commutativity");
            if (mul(ea, eb) != mul(eb, ea)) fail("multiplication commutativity");
            for (int c = 0; c < q_; ++c) {
                Elem ec = Elem(c);
                if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) fail("addition associativity");
                if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) fail("multiplication associativity");
                if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) fail("distributivity");
            }
        }
    }
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    Elem base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Vec normalize_vector(const Field& f, const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            Elem s = f.inv(v[i]);
            Vec out(v.size());
            for (std::size_t j = 0; j < v.size(); ++j) out[j] = f.mul(s, v[j]);
            return out;
        }
    }
    throw ZeroVector("normalize_vector(): zero vector has no normal form");
}

std::size_t hamming_weight(const Vec& v) {
    std::size_t w = 0;
    for (Elem x : v)
        if (x != 0) ++w;
    return w;
}

}  // namespace lincode
