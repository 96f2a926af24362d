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

#include <cctype>

namespace invlab {

namespace {

// Recursive-descent parser for the documented grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' integer]
//   atom   := rational | 'zeta' | variable | '(' expr ')'
//   variable := ('X'|'x'|'D'|'d') digits      (1-based, <= num_vars)
//   rational := digits ['/' digits]
// Whitespace is insignificant everywhere.
class PolyParser {
public:
    PolyParser(const std::string& text, int num_vars, int field_index)
        : s_(text), m_(num_vars), field_(field_index) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    int m_;
    int field_;

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("polynomial parse error at position " + std::to_string(pos_) +
                         ": " + what + " in \"" + s_ + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool consume(char c) {
        if (peek(c)) { ++pos_; return true; }
        return false;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    MultiPoly expr() {
        skip_ws();
        bool neg = false;
        if (consume('-')) neg = true;
        else consume('+');
        MultiPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (consume('+')) acc = acc + term();
            else if (consume('-')) acc = acc - term();
            else break;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (consume('*')) acc = acc * factor();
        return acc;
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        if (consume('^')) {
            long e = integer();
            base = base.pow(e);
        }
        return base;
    }

    MultiPoly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            if (consume('/')) {
                long den = integer();
                if (den == 0) fail("zero denominator");
                return MultiPoly::constant(m_, FieldElement(Rational(num, den)));
            }
            return MultiPoly::constant(m_, FieldElement(Rational(num)));
        }
        if (s_.compare(pos_, 4, "zeta") == 0) {
            pos_ += 4;
            if (field_ <= 1)
                fail("'zeta' requires a cyclotomic field, scenario field is Q");
            return MultiPoly::constant(m_, FieldElement::zeta_power(field_, 1));
        }
        if (c == 'X' || c == 'x' || c == 'D' || c == 'd') {
            ++pos_;
            long idx = integer();
            if (idx < 1 || idx > m_)
                fail("variable index " + std::to_string(idx) + " out of range 1.." +
                     std::to_string(m_));
            return MultiPoly::variable(m_, static_cast<int>(idx - 1));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, int num_vars, int field_index) {
    return PolyParser(text, num_vars, field_index).parse();
}

FieldElement parse_field_element(const std::string& text, int index) {
    MultiPoly p = parse_poly(text, 0, index);
    if (p.is_zero()) return FieldElement::zero(index);
    return p.terms().begin()->second;
}

} // namespace invlab
