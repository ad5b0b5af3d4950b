/*
   Copyright 2026 The qlucas Authors

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

/**
 * @file io.hpp
 * @brief Text and JSON forms of quaternionic polynomials.
 *
 * Term syntax, terms joined by + or -:
 *
 *     X^2 - X (0,1,1,0) + (0,0,0,1)
 *     X^3 + X 3 + 2i
 *
 * A term is a product of factors: powers `X` / `X^k` and coefficients
 * `(w,x,y,z)`, plain numbers, `2.5j`, or bare units `i`, `j`, `k`.
 * Coefficients multiply left to right; repeated degrees are summed.
 *
 * JSON syntax: `[[w,x,y,z], ...]`, index = degree.
 */

#ifndef QLUCAS_IO_HPP
#define QLUCAS_IO_HPP

#include <cctype>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "qpoly.hpp"
#include "quat.hpp"

namespace qlucas {

namespace detail {

class PolyParser {
   public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    QPoly parse() {
        skip();
        if (peek() == '[') return parse_json();
        std::vector<Quaternion> c;
        bool first = true;
        while (true) {
            skip();
            double sign = 1.0;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1.0 : 1.0;
            } else if (!first) {
                break;
            }
            first = false;
            auto [deg, coef] = term();
            if (c.size() <= deg) c.resize(deg + 1);
            c[deg] += coef * sign;
        }
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return QPoly(std::move(c));
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char ch) {
        skip();
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    bool number_start() const {
        const char ch = peek();
        return std::isdigit(static_cast<unsigned char>(ch)) || ch == '.';
    }

    double number(bool allow_sign) {
        skip();
        const std::size_t start = pos_;
        if (allow_sign && (peek() == '+' || peek() == '-')) ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') ++pos_;
        if ((peek() == 'e' || peek() == 'E') && pos_ + 1 < s_.size() &&
            (std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) || s_[pos_ + 1] == '-' || s_[pos_ + 1] == '+')) {
            ++pos_;
            if (peek() == '+' || peek() == '-') ++pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        const char* b = s_.data() + start;
        const char* e = s_.data() + pos_;
        if (b != e && *b == '+') ++b;
        double v = 0;
        auto res = std::from_chars(b, e, v);
        if (b == e || res.ec != std::errc{} || res.ptr != e) {
            pos_ = start;
            fail("malformed number");
        }
        return v;
    }

    static Quaternion unit(char ch) {
        switch (ch) {
            case 'i': return Quaternion::i();
            case 'j': return Quaternion::j();
            default: return Quaternion::k();
        }
    }
    static bool is_unit(char ch) { return ch == 'i' || ch == 'j' || ch == 'k'; }

    Quaternion tuple() {
        expect('(');
        double v[4];
        for (int n = 0; n < 4; ++n) {
            if (n > 0) expect(',');
            v[n] = number(true);
        }
        expect(')');
        return {v[0], v[1], v[2], v[3]};
    }

    std::pair<std::size_t, Quaternion> term() {
        std::size_t deg = 0;
        Quaternion coef(1.0);
        bool any = false;
        while (true) {
            skip();
            if (any && peek() == '*') {
                ++pos_;
                skip();
            }
            const char ch = peek();
            if (ch == 'X') {
                ++pos_;
                std::size_t k = 1;
                skip();
                if (peek() == '^') {
                    ++pos_;
                    skip();
                    const std::size_t start = pos_;
                    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                    if (start == pos_) fail("expected exponent");
                    std::from_chars(s_.data() + start, s_.data() + pos_, k);
                }
                deg += k;
            } else if (ch == '(') {
                coef = coef * tuple();
            } else if (number_start()) {
                const double v = number(false);
                if (is_unit(peek())) coef = coef * (unit(get()) * v);
                else coef = coef * Quaternion(v);
            } else if (is_unit(ch)) {
                coef = coef * unit(get());
            } else {
                break;
            }
            any = true;
        }
        if (!any) fail("expected a term");
        return {deg, coef};
    }

    QPoly parse_json() {
        expect('[');
        std::vector<Quaternion> c;
        skip();
        if (peek() != ']') {
            while (true) {
                expect('[');
                double v[4];
                for (int n = 0; n < 4; ++n) {
                    if (n > 0) expect(',');
                    v[n] = number(true);
                }
                expect(']');
                c.emplace_back(v[0], v[1], v[2], v[3]);
                skip();
                if (peek() != ',') break;
                ++pos_;
            }
        }
        expect(']');
        skip();
        if (pos_ != s_.size()) fail("trailing characters after JSON array");
        return QPoly(std::move(c));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline QPoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

/// Any constant expression of the polynomial syntax, e.g. `(0,1,1,0)`, `2i`.
inline Quaternion parse_quaternion(std::string_view text) {
    const QPoly p = parse_poly(text);
    if (p.deg_or_neg() > 0) throw ParseError(0, "expected a quaternion, got a polynomial");
    return p[0];
}

/// Term syntax, highest degree first, coefficients as (w,x,y,z).
inline std::string to_text(const QPoly& p) {
    if (p.is_zero()) return "(0,0,0,0)";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (k == 1) out += "X ";
        else if (k > 1) out += "X^" + std::to_string(k) + " ";
        out += to_string(c[k]);
    }
    return out;
}

inline std::string to_json_text(const QPoly& p) {
    std::string out = "[";
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) out += ",";
        out += "[" + format_real(c[k].w) + "," + format_real(c[k].x) + "," + format_real(c[k].y) + "," +
               format_real(c[k].z) + "]";
    }
    return out + "]";
}

/// Human readable form with real coefficients, e.g. `9X^4 + 12X^2 - 4X + 3`.
inline std::string to_text(const RealPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        const double a = std::abs(c[k]);
        if (out.empty()) out += c[k] < 0 ? "-" : "";
        else out += c[k] < 0 ? " - " : " + ";
        if (a != 1 || k == 0) out += format_real(a);
        if (k >= 1) out += "X";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace qlucas

#endif
