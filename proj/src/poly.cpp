/*
   Copyright 2026 The invlab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "invlab/poly.hpp"

#include <algorithm>
#include <sstream>

namespace invlab {

long total_degree(const Exponents& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exponent_sum(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponents exponent_diff(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exponents exponent_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

int monomial_compare(MonomialOrder order, const Exponents& a, const Exponents& b) {
    if (order == MonomialOrder::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db ? 1 : -1;
    // graded reverse lex: at the last index where they differ, the smaller
    // exponent wins
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

namespace {
void enumerate_rec(int m, long d, int pos, Exponents& cur, std::vector<Exponents>& out) {
    if (pos == m - 1) {
        cur[pos] = static_cast<int>(d);
        out.push_back(cur);
        return;
    }
    for (long e = d; e >= 0; --e) {
        cur[pos] = static_cast<int>(e);
        enumerate_rec(m, d - e, pos + 1, cur, out);
    }
}
} // namespace

std::vector<Exponents> monomials_of_degree(int m, long d, MonomialOrder order) {
    std::vector<Exponents> out;
    if (d < 0 || m <= 0) return out;
    Exponents cur(m, 0);
    enumerate_rec(m, d, 0, cur, out);
    std::sort(out.begin(), out.end(), [order](const Exponents& a, const Exponents& b) {
        return monomial_compare(order, a, b) > 0;
    });
    return out;
}

long monomial_count(int m, long d) {
    if (d < 0) return 0;
    // C(d + m - 1, m - 1)
    long r = 1;
    for (long i = 1; i <= m - 1; ++i) r = r * (d + i) / i;
    return r;
}

MultiPoly MultiPoly::constant(int num_vars, const FieldElement& c) {
    MultiPoly p(num_vars);
    if (!c.is_zero()) p.terms_.emplace(Exponents(num_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int num_vars, int index_zero_based) {
    if (index_zero_based < 0 || index_zero_based >= num_vars)
        throw InputError("variable index out of range");
    Exponents e(num_vars, 0);
    e[index_zero_based] = 1;
    return monomial(std::move(e), FieldElement::one());
}

MultiPoly MultiPoly::monomial(Exponents e, const FieldElement& c) {
    MultiPoly p(static_cast<int>(e.size()));
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

int MultiPoly::field_index() const {
    int idx = 1;
    for (const auto& [e, c] : terms_) idx = std::max(idx, c.cyclotomic_index());
    return idx;
}

long MultiPoly::degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = total_degree(e);
        if (d == -1) d = t;
        else if (t != d) return false;
    }
    return true;
}

FieldElement MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement::zero() : it->second;
}

void MultiPoly::add_term(const Exponents& e, const FieldElement& c) {
    if (static_cast<int>(e.size()) != num_vars_)
        throw InputError("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (num_vars_ != o.num_vars_)
        throw InputError("polynomial variable-count mismatch: " + std::to_string(num_vars_) +
                         " vs " + std::to_string(o.num_vars_));
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(num_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            r.add_term(exponent_sum(ea, eb), ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scalar_mul(const FieldElement& c) const {
    MultiPoly r(num_vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, a] : terms_) {
        FieldElement p = a * c;
        if (!p.is_zero()) r.terms_.emplace(e, p);
    }
    return r;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) throw InputError("negative polynomial power");
    MultiPoly r = constant(num_vars_, FieldElement::one());
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) > 0 ? base * base : base;
    }
    return r;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
    if (num_vars_ != o.num_vars_) return num_vars_ < o.num_vars_;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second < b->second;
    }
    return b != o.terms_.end();
}

MultiPoly MultiPoly::substitute_linear(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != num_vars_)
        throw InputError("substitution image count mismatch");
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = constant(num_vars_, c);
        for (int j = 0; j < num_vars_; ++j) {
            if (e[j] > 0) term = term * images[j].pow(e[j]);
        }
        r = r + term;
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * FieldElement(Rational(e[var])));
    }
    return r;
}

std::pair<Exponents, FieldElement> MultiPoly::leading_term(MonomialOrder order) const {
    if (terms_.empty()) throw InputError("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        if (monomial_compare(order, it->first, best->first) > 0) best = it;
    }
    return {best->first, best->second};
}

MultiPoly MultiPoly::normalized_primitive(MonomialOrder order) const {
    if (terms_.empty()) return *this;
    auto [le, lc] = leading_term(order);
    if (lc.is_rational()) {
        // clear denominators, divide by integer content, positive lead
        mpz_class denom_lcm(1), num_gcd(0);
        for (const auto& [e, c] : terms_) {
            Rational r = c.rational_value();
            mpz_class d = r.get_den();
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), d.get_mpz_t());
        }
        for (const auto& [e, c] : terms_) {
            Rational r = c.rational_value() * Rational(denom_lcm);
            mpz_class n = r.get_num();
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
        Rational scale(denom_lcm, num_gcd == 0 ? mpz_class(1) : num_gcd);
        scale.canonicalize();
        if (lc.rational_value() * scale < 0) scale = -scale;
        return scalar_mul(FieldElement(scale, field_index()));
    }
    // cyclotomic lead: make it monic
    return scalar_mul(lc.inverse());
}

std::string MultiPoly::to_string(MonomialOrder order, const std::string& var_prefix) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exponents, FieldElement>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [order](auto* a, auto* b) {
        return monomial_compare(order, a->first, b->first) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : sorted) {
        const Exponents& e = t->first;
        const FieldElement& c = t->second;
        bool is_const_term = total_degree(e) == 0;
        std::string cs;
        bool negated = false;
        if (c.is_rational()) {
            Rational r = c.rational_value();
            if (r < 0) { negated = true; r = -r; }
            cs = r.get_str();
        } else {
            cs = "(" + c.to_string() + ")";
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        bool coeff_is_unit = (cs == "1");
        if (is_const_term) {
            os << cs;
        } else {
            bool printed = false;
            if (!coeff_is_unit) { os << cs; printed = true; }
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (e[j] == 0) continue;
                if (printed) os << "*";
                os << var_prefix << (j + 1);
                if (e[j] > 1) os << "^" << e[j];
                printed = true;
            }
        }
    }
    return os.str();
}

} // namespace invlab
