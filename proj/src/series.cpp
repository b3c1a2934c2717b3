#include "splitenum/series.hpp"

#include <sstream>

namespace splitenum {

Series::Series(int trunc_degree) {
    if (trunc_degree < 0) throw std::invalid_argument("trunc_degree must be >= 0");
    coeffs_.resize(trunc_degree + 1);
}

Series Series::atom(int trunc_degree) {
    Series s(trunc_degree);
    if (trunc_degree >= 1) s.coeffs_[1] = 1;
    return s;
}

Series Series::one(int trunc_degree) {
    Series s(trunc_degree);
    s.coeffs_[0] = 1;
    return s;
}

void Series::check_same_degree(const Series& o) const {
    if (trunc_degree() != o.trunc_degree())
        throw degree_mismatch("series truncation degrees differ: " +
                              std::to_string(trunc_degree()) + " vs " +
                              std::to_string(o.trunc_degree()));
}

Series Series::operator+(const Series& o) const {
    check_same_degree(o);
    Series r(trunc_degree());
    for (int n = 0; n <= trunc_degree(); ++n) r.coeffs_[n] = coeffs_[n] + o.coeffs_[n];
    return r;
}

Series Series::operator-(const Series& o) const {
    check_same_degree(o);
    Series r(trunc_degree());
    for (int n = 0; n <= trunc_degree(); ++n) r.coeffs_[n] = coeffs_[n] - o.coeffs_[n];
    return r;
}

Series Series::operator*(const Series& o) const {
    check_same_degree(o);
    int N = trunc_degree();
    Series r(N);
    for (int i = 0; i <= N; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

bool Series::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

int Series::valuation() const {
    for (int n = 0; n <= trunc_degree(); ++n)
        if (coeffs_[n] != 0) return n;
    return trunc_degree() + 1;
}

std::string Series::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int n = 0; n <= trunc_degree(); ++n) {
        if (n) os << ", ";
        os << coeffs_[n].get_str();
    }
    os << "]";
    return os.str();
}

RationalSeries::RationalSeries(int trunc_degree) {
    if (trunc_degree < 0) throw std::invalid_argument("trunc_degree must be >= 0");
    coeffs_.resize(trunc_degree + 1);
}

RationalSeries::RationalSeries(const Series& s) {
    coeffs_.resize(s.trunc_degree() + 1);
    for (int n = 0; n <= s.trunc_degree(); ++n) coeffs_[n] = s[n];
}

RationalSeries RationalSeries::one(int trunc_degree) {
    RationalSeries s(trunc_degree);
    s.coeffs_[0] = 1;
    return s;
}

void RationalSeries::check_same_degree(const RationalSeries& o) const {
    if (trunc_degree() != o.trunc_degree())
        throw degree_mismatch("series truncation degrees differ: " +
                              std::to_string(trunc_degree()) + " vs " +
                              std::to_string(o.trunc_degree()));
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    check_same_degree(o);
    RationalSeries r(trunc_degree());
    for (int n = 0; n <= trunc_degree(); ++n) r.coeffs_[n] = coeffs_[n] + o.coeffs_[n];
    return r;
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
    check_same_degree(o);
    RationalSeries r(trunc_degree());
    for (int n = 0; n <= trunc_degree(); ++n) r.coeffs_[n] = coeffs_[n] - o.coeffs_[n];
    return r;
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    check_same_degree(o);
    int N = trunc_degree();
    RationalSeries r(N);
    for (int i = 0; i <= N; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

Series RationalSeries::to_integer_series() const {
    Series r(trunc_degree());
    for (int n = 0; n <= trunc_degree(); ++n) {
        if (coeffs_[n].get_den() != 1)
            throw internal_error("rational series has leftover denominator at degree " +
                                 std::to_string(n));
        r.at(n) = coeffs_[n].get_num();
    }
    return r;
}

Series substitute_power(const Series& a, int i) {
    if (i < 1) throw std::invalid_argument("substitute_power requires i >= 1");
    int N = a.trunc_degree();
    Series r(N);
    for (int n = 0; n * i <= N; ++n) r.at(n * i) = a[n];
    return r;
}

static void require_zero_constant(const Series& a, const char* what) {
    if (a[0] != 0)
        throw std::invalid_argument(std::string(what) + " requires zero constant term");
}

Series mset(const Series& a) {
    require_zero_constant(a, "mset");
    int N = a.trunc_degree();
    // c_k = sum_{d|k} d*a[d]
    std::vector<bigint> c(N + 1);
    for (int d = 1; d <= N; ++d) {
        if (a[d] == 0) continue;
        bigint da = d * a[d];
        for (int k = d; k <= N; k += d) c[k] += da;
    }
    Series m(N);
    m.at(0) = 1;
    for (int n = 1; n <= N; ++n) {
        bigint s = 0;
        for (int k = 1; k <= n; ++k) {
            if (c[k] == 0) continue;
            s += c[k] * m[n - k];
        }
        bigint q, r;
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(n));
        if (r != 0) throw internal_error("mset coefficient not integral at degree " + std::to_string(n));
        m.at(n) = q;
    }
    return m;
}

Series mset_exact(const Series& a, int k) {
    if (k < 0) throw std::invalid_argument("mset_exact requires k >= 0");
    require_zero_constant(a, "mset_exact");
    int N = a.trunc_degree();
    // Power sums p_i = a(z^i); h_j = (1/j) sum_{i=1..j} p_i h_{j-i}.
    std::vector<RationalSeries> p;
    p.reserve(k);
    for (int i = 1; i <= k; ++i) p.emplace_back(substitute_power(a, i));
    std::vector<RationalSeries> h;
    h.push_back(RationalSeries::one(N));
    for (int j = 1; j <= k; ++j) {
        RationalSeries s(N);
        for (int i = 1; i <= j; ++i) s = s + p[i - 1] * h[j - i];
        bigrat inv_j(1, j);
        for (int n = 0; n <= N; ++n) s.at(n) *= inv_j;
        h.push_back(s);
    }
    return h[k].to_integer_series();
}

Series mset_atleast(const Series& a, int k) {
    if (k < 0) throw std::invalid_argument("mset_atleast requires k >= 0");
    Series r = mset(a);
    for (int j = 0; j < k; ++j) r = r - mset_exact(a, j);
    return r;
}

Series seq_atleast(const Series& a, int k) {
    if (k < 0) throw std::invalid_argument("seq_atleast requires k >= 0");
    require_zero_constant(a, "seq_atleast");
    int N = a.trunc_degree();
    // g = 1/(1-a): g[n] = sum_{j>=1} a[j] g[n-j]
    Series g(N);
    g.at(0) = 1;
    for (int n = 1; n <= N; ++n) {
        bigint s = 0;
        for (int j = 1; j <= n; ++j) {
            if (a[j] == 0) continue;
            s += a[j] * g[n - j];
        }
        g.at(n) = s;
    }
    Series r = g;
    for (int t = 0; t < k; ++t) r = r * a;
    return r;
}

static void require_zero_constant_rat(const RationalSeries& a, const char* what) {
    if (a[0] != 0)
        throw std::invalid_argument(std::string(what) + " requires zero constant term");
}

RationalSeries labeled_set_exact(const RationalSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("labeled_set_exact requires k >= 0");
    require_zero_constant_rat(a, "labeled_set_exact");
    int N = a.trunc_degree();
    RationalSeries r = RationalSeries::one(N);
    for (int j = 1; j <= k; ++j) {
        r = r * a;
        bigrat inv_j(1, j);
        for (int n = 0; n <= N; ++n) r.at(n) *= inv_j;
    }
    return r;
}

RationalSeries labeled_set_atleast(const RationalSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("labeled_set_atleast requires k >= 0");
    require_zero_constant_rat(a, "labeled_set_atleast");
    int N = a.trunc_degree();
    // sum_{j=k..N} a^j / j!; a has valuation >= 1 so terms past j = N vanish.
    RationalSeries term = labeled_set_exact(a, k);
    RationalSeries r = term;
    for (int j = k + 1; j <= N; ++j) {
        term = term * a;
        bigrat inv_j(1, j);
        for (int n = 0; n <= N; ++n) term.at(n) *= inv_j;
        r = r + term;
    }
    return r;
}

RationalSeries labeled_seq_atleast(const RationalSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("labeled_seq_atleast requires k >= 0");
    require_zero_constant_rat(a, "labeled_seq_atleast");
    int N = a.trunc_degree();
    RationalSeries g(N);
    g.at(0) = 1;
    for (int n = 1; n <= N; ++n) {
        bigrat s = 0;
        for (int j = 1; j <= n; ++j) {
            if (a[j] == 0) continue;
            s += a[j] * g[n - j];
        }
        g.at(n) = s;
    }
    RationalSeries r = g;
    for (int t = 0; t < k; ++t) r = r * a;
    return r;
}

}  // namespace splitenum
