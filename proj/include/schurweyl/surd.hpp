#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace schurweyl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact number of the form sum_i q_i * sqrt(r_i), q_i rational, r_i squarefree
// positive integers. Radicand 1 carries the purely rational part. The term map
// is kept canonical (no zero coefficients), so equality is structural.
class SurdSum {
public:
    SurdSum() = default;
    SurdSum(int value) : SurdSum(Rational(value)) {}
    SurdSum(const Rational& value);

    // sign * sqrt(x), x >= 0. sqrt(a/b) is normalized to sqrt(ab)/b with a
    // squarefree radicand, extracted by trial division (operands are small).
    static SurdSum sqrt_of(const Rational& x, int sign = +1);

    // sign * sqrt(prod p^e) for a factor->exponent map; exponents may be
    // negative. Factors need not be prime but must be pairwise coprime or
    // prime; callers pass prime factorizations.
    static SurdSum sqrt_of_factored(const std::map<std::int64_t, std::int64_t>& exponents,
                                    int sign = +1);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // Coefficient of radicand 1; requires is_rational().
    Rational rational_value() const;

    const std::map<Int, Rational>& terms() const { return terms_; }

    SurdSum operator-() const;
    SurdSum& operator+=(const SurdSum& o);
    SurdSum& operator-=(const SurdSum& o);
    SurdSum& operator*=(const SurdSum& o);
    friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
    friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
    friend SurdSum operator*(const SurdSum& a, const SurdSum& b);

    bool operator==(const SurdSum& o) const { return terms_ == o.terms_; }
    bool operator!=(const SurdSum& o) const { return !(*this == o); }

    double to_double() const;
    std::string str() const;

private:
    void add_term(const Int& radicand, const Rational& coeff);

    std::map<Int, Rational> terms_;
};

// v = square * result with result squarefree; trial division.
Int squarefree_part(Int v, Int& square_root_out);

std::string rational_str(const Rational& q);

}  // namespace schurweyl
