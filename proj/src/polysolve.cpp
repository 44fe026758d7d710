#include "lincode/polysolve.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace lincode {

namespace {

// x^q = x in GF(q): exponents e >= q fold back into 1..q-1.
std::uint8_t reduce_exp(int q, unsigned e) {
    if (e < unsigned(q)) return std::uint8_t(e);
    return std::uint8_t((e - 1) % unsigned(q - 1) + 1);
}

}  // namespace

Monomial Monomial::var(std::size_t nvars, std::size_t i, std::uint8_t e) {
    Monomial m = one(nvars);
    m.exps[i] = e;
    return m;
}

std::size_t Monomial::degree() const {
    std::size_t d = 0;
    for (auto e : exps) d += e;
    return d;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > o.exps[i]) return false;
    return true;
}

bool monomial_less(MonomialOrderKind kind, const Monomial& a, const Monomial& b) {
    if (kind == MonomialOrderKind::Lex) {
        for (std::size_t i = a.exps.size(); i-- > 0;)
            if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
        return false;
    }
    std::size_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // reverse-lex tie break: the monomial loaded more heavily on the least
    // variable is the smaller one
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    return false;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = std::max(m.exps[i], b.exps[i]);
    return m;
}

Monomial monomial_quotient(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = std::uint8_t(m.exps[i] - b.exps[i]);
    return m;
}

RingPtr make_poly_ring(const Field& f, std::size_t nvars, MonomialOrderKind order) {
    return std::make_shared<const PolyRing>(PolyRing{f, nvars, order});
}

Polynomial::Polynomial(RingPtr ring, std::vector<std::pair<Monomial, Elem>> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize(false);
}

void Polynomial::normalize(bool reduce_exponents) {
    if (reduce_exponents) {
        for (auto& [mono, coeff] : terms_)
            for (auto& e : mono.exps) e = reduce_exp(ring_->field.q(), e);
    }
    std::sort(terms_.begin(), terms_.end(), [this](const auto& a, const auto& b) {
        return monomial_less(ring_->order, b.first, a.first);
    });
    std::vector<std::pair<Monomial, Elem>> combined;
    combined.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!combined.empty() && combined.back().first == t.first)
            combined.back().second = ring_->field.add(combined.back().second, t.second);
        else
            combined.push_back(std::move(t));
    }
    std::erase_if(combined, [](const auto& t) { return t.second == 0; });
    terms_ = std::move(combined);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<std::pair<Monomial, Elem>> terms = terms_;
    terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
    return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::scaled(Elem s) const {
    Polynomial r(ring_);
    if (s == 0) return r;
    r.terms_ = terms_;
    for (auto& [mono, coeff] : r.terms_) coeff = ring_->field.mul(coeff, s);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + o.scaled(ring_->field.neg(1));
}

Polynomial Polynomial::times_term(const Monomial& mono, Elem coeff) const {
    Polynomial r(ring_);
    if (coeff == 0) return r;
    r.terms_.reserve(terms_.size());
    const int q = ring_->field.q();
    for (const auto& [m, c] : terms_) {
        Monomial prod = m;
        for (std::size_t i = 0; i < prod.exps.size(); ++i)
            prod.exps[i] = reduce_exp(q, unsigned(prod.exps[i]) + unsigned(mono.exps[i]));
        r.terms_.emplace_back(std::move(prod), ring_->field.mul(c, coeff));
    }
    r.normalize(false);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial acc(ring_);
    for (const auto& [m, c] : o.terms_) acc = acc + times_term(m, c);
    return acc;
}

Polynomial Polynomial::pow(std::size_t e) const {
    Polynomial r = poly_constant(ring_, 1);
    for (std::size_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field.inv(leading_coefficient()));
}

Polynomial Polynomial::reduced_exponents() const {
    Polynomial r = *this;
    r.normalize(true);
    return r;
}

Polynomial Polynomial::substituted(std::size_t var, Elem value) const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        Elem scaled = ring_->field.mul(c, ring_->field.pow(value, m.exps[var]));
        if (scaled == 0) continue;
        Monomial rest = m;
        rest.exps[var] = 0;
        r.terms_.emplace_back(std::move(rest), scaled);
    }
    r.normalize(false);
    return r;
}

Elem Polynomial::evaluate(std::span<const Elem> point) const {
    const Field& f = ring_->field;
    Elem sum = 0;
    for (const auto& [m, c] : terms_) {
        Elem prod = c;
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i] != 0) prod = f.mul(prod, f.pow(point[i], m.exps[i]));
        sum = f.add(sum, prod);
    }
    return sum;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (m.exps[i] > 1) mono += "^" + std::to_string(int(m.exps[i]));
        }
        if (mono.empty())
            out += std::to_string(int(c));
        else if (c == 1)
            out += mono;
        else
            out += std::to_string(int(c)) + "*" + mono;
    }
    return out;
}

Polynomial poly_zero(RingPtr ring) { return Polynomial(std::move(ring)); }

Polynomial poly_constant(RingPtr ring, Elem c) {
    std::size_t nvars = ring->nvars;
    return Polynomial(std::move(ring), {{Monomial::one(nvars), c}});
}

Polynomial poly_variable(RingPtr ring, std::size_t i) {
    std::size_t nvars = ring->nvars;
    return Polynomial(std::move(ring), {{Monomial::var(nvars, i), Elem(1)}});
}

namespace {

// max_terms == 0 disables the budget check.
Polynomial nf_impl(const Polynomial& f, std::span<const Polynomial> basis,
                   std::uint64_t max_terms) {
    const RingPtr& ring = f.ring();
    Polynomial p = f.reduced_exponents();
    std::vector<std::pair<Monomial, Elem>> remainder;
    while (!p.is_zero()) {
        if (max_terms != 0 && p.term_count() > max_terms)
            throw ResourceLimit("buchberger(): intermediate polynomial exceeds term budget");
        const Monomial& lm = p.leading_monomial();
        const Polynomial* reducer = nullptr;
        for (const Polynomial& g : basis) {
            if (!g.is_zero() && g.leading_monomial().divides(lm)) {
                reducer = &g;
                break;
            }
        }
        if (reducer == nullptr) {
            remainder.emplace_back(lm, p.leading_coefficient());
            p = p - Polynomial(ring, {{lm, p.leading_coefficient()}});
        } else {
            Monomial quot = monomial_quotient(lm, reducer->leading_monomial());
            Elem c = ring->field.div(p.leading_coefficient(), reducer->leading_coefficient());
            p = p - reducer->times_term(quot, c);
        }
    }
    return Polynomial(ring, std::move(remainder));
}

Polynomial spoly(const Polynomial& a, const Polynomial& b) {
    const Field& f = a.ring()->field;
    Monomial lcm = monomial_lcm(a.leading_monomial(), b.leading_monomial());
    return a.times_term(monomial_quotient(lcm, a.leading_monomial()),
                        f.inv(a.leading_coefficient())) -
           b.times_term(monomial_quotient(lcm, b.leading_monomial()),
                        f.inv(b.leading_coefficient()));
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
    return nf_impl(f, basis, 0);
}

bool GroebnerResult::contains_nonzero_constant() const {
    for (const Polynomial& p : basis)
        if (!p.is_zero() && p.is_constant()) return true;
    return false;
}

GroebnerResult buchberger(const Ideal& ideal, const GroebnerBudget& budget) {
    const RingPtr& ring = ideal.ring;
    const int q = ring->field.q();
    GroebnerResult out;

    // kind 0: S-pair of basis elements i and j (j is the newer one).
    // kind 1: S-pair of basis element i with the field equation of variable j,
    //         realizing the exponent reduction x_j^q = x_j inside the run.
    struct Pending {
        std::size_t deg;
        int kind;
        std::size_t i, j;
        bool operator<(const Pending& o) const {
            return std::tie(deg, kind, i, j) < std::tie(o.deg, o.kind, o.i, o.j);
        }
    };

    std::vector<Polynomial> basis;
    std::set<Pending> queue;
    std::set<std::pair<std::size_t, std::size_t>> treated;

    auto enqueue_for = [&](std::size_t t) {
        const Monomial& lt = basis[t].leading_monomial();
        for (std::size_t i = 0; i < t; ++i) {
            const Monomial& lti = basis[i].leading_monomial();
            bool coprime = true;
            for (std::size_t v = 0; v < lt.exps.size(); ++v)
                if (lt.exps[v] != 0 && lti.exps[v] != 0) coprime = false;
            if (coprime) {
                treated.insert({i, t});  // product criterion: S-pair reduces to 0
            } else {
                queue.insert(Pending{monomial_lcm(lt, lti).degree(), 0, i, t});
            }
        }
        for (std::size_t v = 0; v < lt.exps.size(); ++v)
            if (lt.exps[v] != 0)
                queue.insert(Pending{lt.degree() + std::size_t(q) - lt.exps[v], 1, t, v});
        if (queue.size() > budget.pair_reductions)
            throw ResourceLimit("buchberger(): pair queue exceeds budget");
    };

    auto consider = [&](const Polynomial& s) -> bool {
        Polynomial h = nf_impl(s, basis, budget.max_terms);
        if (h.is_zero()) return false;
        if (h.is_constant()) return true;
        if (budget.max_terms != 0 && h.term_count() > budget.max_terms)
            throw ResourceLimit("buchberger(): basis polynomial exceeds term budget");
        basis.push_back(h.monic());
        enqueue_for(basis.size() - 1);
        return false;
    };

    auto one_result = [&]() {
        out.basis = {poly_constant(ring, 1)};
        return out;
    };

    for (const Polynomial& g : ideal.generators) {
        Polynomial gc = g.reduced_exponents();
        if (gc.is_zero()) continue;
        if (consider(gc)) return one_result();
    }

    while (!queue.empty()) {
        Pending pair = *queue.begin();
        queue.erase(queue.begin());
        Polynomial s = poly_zero(ring);
        if (pair.kind == 0) {
            Monomial lcm =
                monomial_lcm(basis[pair.i].leading_monomial(), basis[pair.j].leading_monomial());
            bool chain = false;
            for (std::size_t l = 0; l < basis.size() && !chain; ++l) {
                if (l == pair.i || l == pair.j) continue;
                if (!basis[l].leading_monomial().divides(lcm)) continue;
                auto key = [&](std::size_t a, std::size_t b) {
                    return std::make_pair(std::min(a, b), std::max(a, b));
                };
                if (treated.count(key(pair.i, l)) && treated.count(key(pair.j, l))) chain = true;
            }
            treated.insert({pair.i, pair.j});
            if (chain) continue;
            s = spoly(basis[pair.i], basis[pair.j]);
        } else {
            const Polynomial& g = basis[pair.i];
            std::uint8_t a = g.leading_monomial().exps[pair.j];
            s = g.times_term(Monomial::var(ring->nvars, pair.j, std::uint8_t(q - a)),
                             ring->field.inv(g.leading_coefficient()));
        }
        if (++out.pair_reductions > budget.pair_reductions)
            throw ResourceLimit("buchberger(): pair reduction budget exceeded");
        if (consider(s)) return one_result();
    }

    // Minimal basis: drop any element whose leading monomial another one divides.
    std::vector<char> alive(basis.size(), 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && alive[i]; ++j) {
            if (j == i) continue;
            const Monomial& lti = basis[i].leading_monomial();
            const Monomial& ltj = basis[j].leading_monomial();
            if (ltj.divides(lti) && (!(lti == ltj) || j < i)) alive[i] = 0;
        }
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (alive[i]) reduced.push_back(basis[i]);

    // Tail reduction to the unique reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(reduced.size() - 1);
            for (std::size_t j = 0; j < reduced.size(); ++j)
                if (j != i) others.push_back(reduced[j]);
            Polynomial h = normal_form(reduced[i], others).monic();
            if (!(h == reduced[i])) {
                reduced[i] = h;
                changed = true;
            }
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return monomial_less(ring->order, a.leading_monomial(), b.leading_monomial());
    });
    out.basis = std::move(reduced);
    return out;
}

std::vector<Vec> variety(std::span<const Polynomial> basis, const RingPtr& ring) {
    const Field& f = ring->field;
    const int q = f.q();
    std::vector<Polynomial> current;
    for (const Polynomial& b : basis) {
        Polynomial c = b.reduced_exponents();
        if (c.is_zero()) continue;
        current.push_back(std::move(c));
    }
    std::vector<Vec> points;
    Vec point(ring->nvars, 0);
    std::function<void(const std::vector<Polynomial>&, std::size_t)> walk =
        [&](const std::vector<Polynomial>& polys, std::size_t var) {
            for (const Polynomial& p : polys)
                if (p.is_constant()) return;  // nonzero constant: contradiction
            if (var == ring->nvars) {
                points.push_back(point);
                return;
            }
            for (int a = 0; a < q; ++a) {
                point[var] = Elem(a);
                std::vector<Polynomial> next;
                next.reserve(polys.size());
                for (const Polynomial& p : polys) {
                    Polynomial s = p.substituted(var, Elem(a));
                    if (!s.is_zero()) next.push_back(std::move(s));
                }
                walk(next, var + 1);
            }
            point[var] = 0;
        };
    walk(current, 0);
    return points;
}

Ideal build_extension_ideal(const Field& f, std::span<const Vec> jd, std::size_t k, std::size_t m,
                            MonomialOrderKind order) {
    if (jd.empty()) throw EmptyJd("build_extension_ideal(): Jd is empty");
    std::size_t nvars = k * m;
    RingPtr ring = make_poly_ring(f, nvars, order);
    Ideal ideal{ring, {}};
    for (const Vec& v : jd) {
        if (v.size() != k)
            throw DimensionMismatch("build_extension_ideal(): vector length != k");
        Polynomial gen = poly_constant(ring, 1);
        for (std::size_t j = 0; j < m; ++j) {
            Polynomial lin = poly_zero(ring);
            for (std::size_t i = 0; i < k; ++i) {
                if (v[i] == 0) continue;
                lin = lin + Polynomial(ring, {{Monomial::var(nvars, j * k + i), v[i]}});
            }
            if (lin.is_zero())
                throw ZeroVector("build_extension_ideal(): Jd contains the zero vector");
            Polynomial block = lin.pow(std::size_t(f.q() - 1)) - poly_constant(ring, 1);
            gen = (j == 0) ? block : gen * block;
        }
        ideal.generators.push_back(gen);
    }
    // x1 restricted to {0, 1}: the canonical-form normalization of the block.
    ideal.generators.push_back(Polynomial(
        ring, {{Monomial::var(nvars, 0, 2), 1}, {Monomial::var(nvars, 0, 1), f.neg(1)}}));
    for (std::size_t t = 1; t < nvars; ++t)
        ideal.generators.push_back(
            Polynomial(ring, {{Monomial::var(nvars, t, std::uint8_t(f.q())), 1},
                              {Monomial::var(nvars, t, 1), f.neg(1)}}));
    return ideal;
}

}  // namespace lincode
