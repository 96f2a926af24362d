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

#include "invlab/field.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace invlab {

int euler_phi(int n) {
    if (n < 1) throw InputError("euler_phi: n must be >= 1");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Quotient of univariate polynomials with exact division (remainder must be 0).
std::vector<Rational> poly_div_exact(std::vector<Rational> num, const std::vector<Rational>& den) {
    if (den.empty()) throw InputError("polynomial division by zero");
    std::vector<Rational> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    while (num.size() >= den.size()) {
        Rational c = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        while (!num.empty() && num.back() == 0) num.pop_back();
        if (num.empty()) break;
    }
    if (!num.empty()) throw InputError("polynomial division was not exact");
    return quot;
}

std::vector<Rational> compute_cyclotomic(int n) {
    // x^n - 1 divided by all Phi_d for proper divisors d of n.
    std::vector<Rational> result(static_cast<std::size_t>(n) + 1, Rational(0));
    result[0] = -1;
    result[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) result = poly_div_exact(std::move(result), cyclotomic_polynomial(d));
    }
    return result;
}

} // namespace

const std::vector<Rational>& cyclotomic_polynomial(int n) {
    if (n < 1) throw InputError("cyclotomic index must be >= 1");
    // recursive: computing Phi_n consults Phi_d for the proper divisors
    static std::recursive_mutex mutex;
    static std::map<int, std::vector<Rational>> cache;
    std::lock_guard<std::recursive_mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 1) return cache.emplace(1, std::vector<Rational>{Rational(-1), Rational(1)}).first->second;
    return cache.emplace(n, compute_cyclotomic(n)).first->second;
}

FieldElement::FieldElement(const Rational& r, int index) : index_(index) {
    if (index < 1) throw InputError("cyclotomic index must be >= 1");
    if (r != 0) {
        coeffs_.push_back(r);
        coeffs_.back().canonicalize();
    }
}

FieldElement FieldElement::zeta_power(int index, long k) {
    if (index <= 1) throw InputError("zeta requires a cyclotomic field (index > 1)");
    long e = k % index;
    if (e < 0) e += index;
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
    c.back() = 1;
    return from_coeffs(std::move(c), index);
}

FieldElement FieldElement::from_coeffs(std::vector<Rational> coeffs, int index) {
    FieldElement e;
    e.index_ = index;
    e.coeffs_ = std::move(coeffs);
    e.reduce();
    return e;
}

void FieldElement::reduce() {
    if (index_ > 1) {
        const auto& phi = cyclotomic_polynomial(index_);
        std::size_t deg = phi.size() - 1;
        while (coeffs_.size() > deg) {
            Rational c = coeffs_.back();
            std::size_t shift = coeffs_.size() - phi.size();
            for (std::size_t i = 0; i < phi.size(); ++i) coeffs_[shift + i] -= c * phi[i];
            coeffs_.pop_back();
            // the subtraction zeroed the top coefficient already
        }
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    for (auto& c : coeffs_) c.canonicalize();
}

int FieldElement::common_index(int a, int b) {
    if (a == b) return a;
    if (a == 1) return b;
    if (b == 1) return a;
    throw InputError("mixed cyclotomic indices " + std::to_string(a) + " and " +
                     std::to_string(b) + " have no common refinement here");
}

FieldElement FieldElement::promoted(int index) const {
    if (index == index_) return *this;
    FieldElement e;
    e.index_ = index;
    e.coeffs_ = coeffs_;
    e.reduce();
    return e;
}

bool FieldElement::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0] == 1;
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw InputError("field element is not rational: " + to_string());
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    int idx = common_index(index_, o.index_);
    FieldElement a = promoted(idx), b = o.promoted(idx);
    if (a.coeffs_.size() < b.coeffs_.size()) a.coeffs_.resize(b.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    a.reduce();
    return a;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    int idx = common_index(index_, o.index_);
    FieldElement a = promoted(idx), b = o.promoted(idx);
    if (a.coeffs_.empty() || b.coeffs_.empty()) return zero(idx);
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return from_coeffs(std::move(prod), idx);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw InputError("division by zero field element");
    if (is_rational()) {
        return FieldElement(Rational(1) / coeffs_[0], index_);
    }
    // extended Euclid in Q[x] against the cyclotomic polynomial
    std::vector<Rational> r0 = cyclotomic_polynomial(index_);
    std::vector<Rational> r1 = coeffs_;
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)}; // s tracks the coefficient of *this
    auto trim = [](std::vector<Rational>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
    trim(r1);
    while (true) {
        if (r1.empty()) throw InputError("cyclotomic inverse failed (non-unit input)");
        if (r1.size() == 1) break;
        // r0 = q*r1 + rem
        std::vector<Rational> rem = r0;
        std::vector<Rational> q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rational(0));
        while (rem.size() >= r1.size()) {
            Rational c = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            trim(rem);
            if (rem.empty()) break;
        }
        // s_new = s0 - q*s1
        std::vector<Rational> snew = s0;
        if (!q.empty() && !s1.empty()) {
            snew.resize(std::max(snew.size(), q.size() + s1.size() - 1), Rational(0));
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
            }
        }
        trim(snew);
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(snew);
    }
    // r1 is a nonzero constant: inverse = s1 / r1[0]
    Rational lead = r1[0];
    for (auto& c : s1) c /= lead;
    return from_coeffs(std::move(s1), index_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (index_ != o.index_ && !(is_rational() && o.is_rational())) {
        int idx = common_index(index_, o.index_);
        return promoted(idx).coeffs_ == o.promoted(idx).coeffs_;
    }
    return coeffs_ == o.coeffs_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        int c = cmp(coeffs_[i], o.coeffs_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string FieldElement::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = c > 0 ? c : Rational(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (!unit) os << a.get_str() << "*";
            os << "zeta";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace invlab
