#pragma once

// Truncated power series with exact integer (or rational) coefficients,
// plus the transforms needed to evaluate combinatorial constructions:
// multiset (Euler transform) and sequence for unlabeled counting,
// exponential-generating-function sets for labeled counting.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace splitenum {

using bigint = mpz_class;
using bigrat = mpq_class;

// Raised when two series of different truncation degree are combined.
struct degree_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when an exactness guarantee fails (non-integral division,
// leftover denominator, negative count). These indicate a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Integer coefficients c[0..trunc_degree]. All arithmetic is exact.
class Series {
public:
    Series() : coeffs_(1) {}
    explicit Series(int trunc_degree);

    static Series atom(int trunc_degree);  // z
    static Series one(int trunc_degree);   // 1

    int trunc_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const bigint& operator[](int n) const { return coeffs_.at(n); }
    bigint& at(int n) { return coeffs_.at(n); }

    bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;

    bool is_zero() const;
    // Smallest n with c[n] != 0, or trunc_degree()+1 if all zero.
    int valuation() const;

    std::string to_string() const;

private:
    std::vector<bigint> coeffs_;
    void check_same_degree(const Series& o) const;
};

// Rational coefficients, used for exponential generating functions and for
// the symmetric-function recurrence behind mset_exact.
class RationalSeries {
public:
    RationalSeries() : coeffs_(1) {}
    explicit RationalSeries(int trunc_degree);
    explicit RationalSeries(const Series& s);

    static RationalSeries one(int trunc_degree);

    int trunc_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const bigrat& operator[](int n) const { return coeffs_.at(n); }
    bigrat& at(int n) { return coeffs_.at(n); }

    bool operator==(const RationalSeries& o) const { return coeffs_ == o.coeffs_; }

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator-(const RationalSeries& o) const;
    RationalSeries operator*(const RationalSeries& o) const;

    // Every coefficient must have denominator 1.
    Series to_integer_series() const;

private:
    std::vector<bigrat> coeffs_;
    void check_same_degree(const RationalSeries& o) const;
};

// a(z^i). Coefficients pushed past the truncation degree are dropped.
Series substitute_power(const Series& a, int i);

// Multiset construction, all multiset sizes (Euler transform).
// Requires a[0] == 0; throws std::invalid_argument otherwise.
// M[0] = 1 and n*M[n] = sum_{k=1..n} c_k M[n-k] with c_k = sum_{d|k} d*a[d].
Series mset(const Series& a);

// Multisets of exactly k elements: h_0 = 1,
// h_k = (1/k) sum_{i=1..k} a(z^i) h_{k-i}, computed over rationals and
// converted exactly back to integers.
Series mset_exact(const Series& a, int k);

// Multisets of at least k elements: mset(a) - sum_{j<k} mset_exact(a, j).
Series mset_atleast(const Series& a, int k);

// Sequences of at least k elements: a^k / (1 - a). Requires a[0] == 0.
Series seq_atleast(const Series& a, int k);

// EGF set constructions. Requires a[0] == 0.
RationalSeries labeled_set_exact(const RationalSeries& a, int k);   // a^k / k!
RationalSeries labeled_set_atleast(const RationalSeries& a, int k); // sum_{j>=k} a^j / j!
RationalSeries labeled_seq_atleast(const RationalSeries& a, int k); // a^k / (1 - a)

}  // namespace splitenum
