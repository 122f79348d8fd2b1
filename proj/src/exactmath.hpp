#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace csurg {

using BigInt = boost::multiprecision::cpp_int;

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_floor(const BigInt& a, const BigInt& m);
BigInt big_gcd(BigInt a, BigInt b);
std::string to_string(const BigInt& v);
long long to_ll(const BigInt& v);

// Reduced fraction, positive denominator, zero stored as 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(const BigInt& n) : num_(n), den_(1) {}
    Rational(const BigInt& n, const BigInt& d);
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    BigInt floor() const { return floor_div(num_, den_); }
    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational reciprocal() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "p/q" always, the machine form.
    std::string str() const;
    // "p" for integers, "p/q" otherwise.
    std::string pretty() const;
    static Rational parse(const std::string& text);

private:
    void normalize();
    BigInt num_;
    BigInt den_;
};

using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& v);
IntMatrix make_int_matrix(const std::vector<std::vector<long long>>& rows);
BigInt determinant(const IntMatrix& a);

struct SnfResult {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    // diagonal of S, length min(rows, cols)
    IntVector factors() const;
};

// U*A*V = S. Pivot: smallest nonzero |entry|, ties broken row-major.
SnfResult snf(const IntMatrix& a);

std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b);
std::optional<RatVector> solve_rational(const IntMatrix& a, const IntVector& b);

// Integer solution of a*x = b, if any.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

struct SignatureTriple {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
    int signature() const { return n_plus - n_minus; }
    friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

SignatureTriple signature_congruence(const RatMatrix& a);
SignatureTriple signature_generalized(const IntMatrix& q_matrix, const IntVector& q);

// Stored entries (r_1, ..., r_n), all <= -2, with
// r = (r_1 + 1) - 1/(r_2 - 1/(... - 1/r_n)).
std::vector<BigInt> negcf(const Rational& r);
// The printed form (r_1 + 1, r_2, ..., r_n).
std::vector<BigInt> negcf_display(const Rational& r);
Rational negcf_value(const std::vector<BigInt>& entries);

}  // namespace csurg
