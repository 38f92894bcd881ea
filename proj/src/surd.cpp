#include "schurweyl/surd.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace schurweyl {

SurdSum::SurdSum(const Rational& value) {
    add_term(1, value);
}

void SurdSum::add_term(const Int& radicand, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(radicand);
    if (it == terms_.end()) {
        terms_.emplace(radicand, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int squarefree_part(Int v, Int& square_root_out) {
    if (v <= 0) throw std::domain_error("squarefree_part: argument must be positive");
    Int root = 1;
    Int rad = 1;
    Int d = 2;
    while (d * d <= v) {
        if (v % d == 0) {
            int count = 0;
            while (v % d == 0) {
                v /= d;
                ++count;
            }
            for (int c = 0; c < count / 2; ++c) root *= d;
            if (count % 2 != 0) rad *= d;
        }
        d += (d == 2) ? 1 : 2;
    }
    rad *= v;  // leftover prime
    square_root_out = root;
    return rad;
}

SurdSum SurdSum::sqrt_of(const Rational& x, int sign) {
    if (x < 0) throw std::domain_error("sqrt_of: negative radicand");
    SurdSum result;
    if (x == 0) return result;
    Int num = numerator(x);
    Int den = denominator(x);
    Int root;
    Int rad = squarefree_part(num * den, root);
    Rational coeff(root, den);
    if (sign < 0) coeff = -coeff;
    result.add_term(rad, coeff);
    return result;
}

SurdSum SurdSum::sqrt_of_factored(const std::map<std::int64_t, std::int64_t>& exponents,
                                  int sign) {
    Rational coeff = 1;
    Int rad = 1;
    for (const auto& [p, e] : exponents) {
        if (p <= 0) throw std::domain_error("sqrt_of_factored: factor must be positive");
        if (p == 1 || e == 0) continue;
        std::int64_t s = ((e % 2) + 2) % 2;
        std::int64_t q = (e - s) / 2;
        Int pw = boost::multiprecision::pow(Int(p), static_cast<unsigned>(q >= 0 ? q : -q));
        if (q >= 0)
            coeff *= Rational(pw);
        else
            coeff /= Rational(pw);
        if (s != 0) rad *= p;
    }
    Int root;
    rad = squarefree_part(rad, root);  // factors may repeat across keys
    coeff *= Rational(root);
    if (sign < 0) coeff = -coeff;
    SurdSum result;
    result.add_term(rad, coeff);
    return result;
}

bool SurdSum::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == 1;
}

Rational SurdSum::rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("rational_value: value has irrational terms");
    return terms_.begin()->second;
}

SurdSum SurdSum::operator-() const {
    SurdSum result;
    for (const auto& [rad, q] : terms_) result.terms_.emplace(rad, -q);
    return result;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
    for (const auto& [rad, q] : o.terms_) add_term(rad, q);
    return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
    for (const auto& [rad, q] : o.terms_) add_term(rad, -q);
    return *this;
}

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
    SurdSum result;
    for (const auto& [r1, q1] : a.terms_) {
        for (const auto& [r2, q2] : b.terms_) {
            // r1, r2 squarefree: sqrt(r1 r2) = g * sqrt((r1/g)(r2/g)), g = gcd
            Int g = boost::multiprecision::gcd(r1, r2);
            result.add_term((r1 / g) * (r2 / g), q1 * q2 * Rational(g));
        }
    }
    return result;
}

SurdSum& SurdSum::operator*=(const SurdSum& o) {
    *this = *this * o;
    return *this;
}

double SurdSum::to_double() const {
    double total = 0.0;
    for (const auto& [rad, q] : terms_)
        total += q.convert_to<double>() * std::sqrt(rad.convert_to<double>());
    return total;
}

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string SurdSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [rad, q] : terms_) {
        Rational a = q;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (rad == 1) {
            os << rational_str(a);
        } else if (a == 1) {
            os << "sqrt(" << rad << ")";
        } else if (denominator(a) == 1) {
            os << numerator(a) << "*sqrt(" << rad << ")";
        } else {
            os << "(" << rational_str(a) << ")*sqrt(" << rad << ")";
        }
    }
    return os.str();
}

}  // namespace schurweyl
