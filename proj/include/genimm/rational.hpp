#pragma once

// Exact arbitrary-precision arithmetic used throughout the library, backed
// by GMP. BigRational is always held in lowest terms with a positive
// denominator; no operation ever rounds.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace genimm::numthy {

using BigInt = mpz_class;

class BigRational {
  public:
    BigRational() : q_(0) {}
    BigRational(long long n) : q_(BigInt(static_cast<long>(n))) {}
    explicit BigRational(const BigInt& n) : q_(n) {}

    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::domain_error("BigRational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    BigRational operator+(const BigRational& o) const { return BigRational(q_ + o.q_); }
    BigRational operator-(const BigRational& o) const { return BigRational(q_ - o.q_); }
    BigRational operator*(const BigRational& o) const { return BigRational(q_ * o.q_); }
    BigRational operator/(const BigRational& o) const {
        if (o.q_ == 0)
            throw std::domain_error("BigRational: division by zero");
        return BigRational(q_ / o.q_);
    }
    BigRational operator-() const { return BigRational(mpq_class(-q_)); }

    BigRational abs() const { return q_ < 0 ? -*this : *this; }
    bool is_zero() const { return q_ == 0; }

    bool operator==(const BigRational& o) const { return q_ == o.q_; }
    bool operator!=(const BigRational& o) const { return q_ != o.q_; }
    bool operator<(const BigRational& o) const { return q_ < o.q_; }

    // "n/d", or just "n" for integers.
    std::string str() const {
        if (q_.get_den() == 1)
            return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

  private:
    explicit BigRational(const mpq_class& q) : q_(q) {}
    mpq_class q_;  // canonical: gcd(num, den) = 1, den > 0
};

}  // namespace genimm::numthy
