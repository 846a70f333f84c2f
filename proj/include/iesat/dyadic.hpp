#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace iesat {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with a power-of-two denominator: numerator / 2^exponent.
//
// Every probability handled by the solver is one of these: a conjunction of
// literals over n variables is satisfied by an integer multiple of 2^-n of
// the assignments. Keeping the exponent pinned at n inside a solver run turns
// all sums into plain big-integer additions and the tautology test
// P >= 1 into numerator >= 2^n.
class Dyadic {
public:
    Dyadic() = default; // 0 / 2^0

    Dyadic(BigInt numerator, unsigned exponent)
        : num_(std::move(numerator)), exp_(exponent) {}

    static Dyadic zero(unsigned exponent) { return {BigInt(0), exponent}; }

    static Dyadic one(unsigned exponent) { return {BigInt(1) << exponent, exponent}; }

    // 2^-k expressed with the given exponent; requires k <= exponent.
    static Dyadic pow2_inverse(unsigned k, unsigned exponent) {
        return {BigInt(1) << (exponent - k), exponent};
    }

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_ < 0; }

    // Sign of (value - 1).
    int compare_to_one() const { return num_.compare(BigInt(1) << exp_); }

    Dyadic& operator+=(const Dyadic& o) {
        align(o.exp_);
        num_ += o.num_ << (exp_ - o.exp_);
        return *this;
    }

    Dyadic& operator-=(const Dyadic& o) {
        align(o.exp_);
        num_ -= o.num_ << (exp_ - o.exp_);
        return *this;
    }

    friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
    friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }

    // Value comparisons are exponent-insensitive.
    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.num_ << (common_exp(a, b) - a.exp_) ==
               b.num_ << (common_exp(a, b) - b.exp_);
    }

    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        const unsigned e = common_exp(a, b);
        const int c = BigInt(a.num_ << (e - a.exp_)).compare(b.num_ << (e - b.exp_));
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    // Lowest-terms form: odd numerator or exponent 0.
    Dyadic normalized() const {
        BigInt n = num_;
        unsigned e = exp_;
        while (e > 0 && !n.is_zero() && (n & 1) == 0) {
            n >>= 1;
            --e;
        }
        if (n.is_zero()) e = 0;
        return {std::move(n), e};
    }

    // "num/2^e" in lowest terms, e.g. "3/2^2"; integers print bare.
    std::string str() const {
        const Dyadic r = normalized();
        if (r.exp_ == 0) return r.num_.str();
        return r.num_.str() + "/2^" + std::to_string(r.exp_);
    }

    double to_double() const {
        return num_.convert_to<double>() /
               boost::multiprecision::pow(BigInt(2), exp_).convert_to<double>();
    }

private:
    static unsigned common_exp(const Dyadic& a, const Dyadic& b) {
        return a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    }

    void align(unsigned e) {
        if (e > exp_) {
            num_ <<= (e - exp_);
            exp_ = e;
        }
    }

    BigInt num_ = 0;
    unsigned exp_ = 0;
};

} // namespace iesat
