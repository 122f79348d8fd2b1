#include "exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace csurg {

BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw DomainError("division by zero");
    BigInt q = a / b;
    BigInt r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
    return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    if (m == 0) return a;
    BigInt r = a % m;
    if (r < 0) r += (m < 0 ? -m : m);
    return r;
}

BigInt big_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

std::string to_string(const BigInt& v) { return v.str(); }

long long to_ll(const BigInt& v) {
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) throw DomainError("integer out of 64-bit range");
    return v.convert_to<long long>();
}

Rational::Rational(const BigInt& n, const BigInt& d) : num_(n), den_(d) {
    if (den_ == 0) throw DomainError("zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = big_gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw DomainError("reciprocal of zero");
    return Rational(den_, num_);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw DomainError("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt l = a.num_ * b.den_;
    BigInt r = b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

std::string Rational::pretty() const { return den_ == 1 ? num_.str() : str(); }

namespace {
bool parse_int(const std::string& s, BigInt& out) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    out = BigInt(s.substr(i));
    if (neg) out = -out;
    return true;
}
}  // namespace

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    BigInt n, d(1);
    if (slash == std::string::npos) {
        if (!parse_int(text, n)) throw DomainError("not a rational: '" + text + "'");
    } else {
        if (!parse_int(text.substr(0, slash), n) || !parse_int(text.substr(slash + 1), d))
            throw DomainError("not a rational: '" + text + "'");
        if (d == 0) throw DomainError("zero denominator in '" + text + "'");
    }
    return Rational(n, d);
}

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    IntMatrix c(n, IntVector(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

IntVector multiply(const IntMatrix& a, const IntVector& v) {
    IntVector out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

IntMatrix make_int_matrix(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m;
    for (const auto& r : rows) {
        IntVector row;
        for (long long x : r) row.emplace_back(x);
        m.push_back(std::move(row));
    }
    return m;
}

BigInt determinant(const IntMatrix& a) {
    // fraction-free Bareiss elimination
    std::size_t n = a.size();
    if (n == 0) return 1;
    IntMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

IntVector SnfResult::factors() const {
    IntVector out;
    std::size_t r = S.size(), c = r ? S[0].size() : 0;
    for (std::size_t i = 0; i < std::min(r, c); ++i) out.push_back(S[i][i]);
    return out;
}

namespace {

struct SnfWork {
    IntMatrix A, U, V;
    std::size_t rows, cols;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(A[i], A[j]);
        std::swap(U[i], U[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (auto& r : A) std::swap(r[i], r[j]);
        for (auto& r : V) std::swap(r[i], r[j]);
    }
    // row_i += f * row_j
    void add_row(std::size_t i, std::size_t j, const BigInt& f) {
        for (std::size_t c = 0; c < cols; ++c) A[i][c] += f * A[j][c];
        for (std::size_t c = 0; c < rows; ++c) U[i][c] += f * U[j][c];
    }
    void add_col(std::size_t i, std::size_t j, const BigInt& f) {
        for (std::size_t r = 0; r < rows; ++r) A[r][i] += f * A[r][j];
        for (std::size_t r = 0; r < cols; ++r) V[r][i] += f * V[r][j];
    }
    void negate_row(std::size_t i) {
        for (auto& x : A[i]) x = -x;
        for (auto& x : U[i]) x = -x;
    }

    bool find_pivot(std::size_t k, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        BigInt best;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                if (A[i][j] == 0) continue;
                BigInt v = abs(A[i][j]);
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

}  // namespace

SnfResult snf(const IntMatrix& a) {
    SnfWork w;
    w.rows = a.size();
    w.cols = w.rows ? a[0].size() : 0;
    for (const auto& r : a)
        if (r.size() != w.cols) throw DomainError("snf: ragged matrix");
    w.A = a;
    w.U = identity_matrix(w.rows);
    w.V = identity_matrix(w.cols);

    std::size_t n = std::min(w.rows, w.cols);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pi = 0, pj = 0;
        if (!w.find_pivot(k, pi, pj)) break;
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);
        for (;;) {
            bool dirty = false;
            for (std::size_t i = k + 1; i < w.rows; ++i) {
                if (w.A[i][k] == 0) continue;
                BigInt q = floor_div(w.A[i][k], w.A[k][k]);
                w.add_row(i, k, -q);
                if (w.A[i][k] != 0) dirty = true;
            }
            for (std::size_t j = k + 1; j < w.cols; ++j) {
                if (w.A[k][j] == 0) continue;
                BigInt q = floor_div(w.A[k][j], w.A[k][k]);
                w.add_col(j, k, -q);
                if (w.A[k][j] != 0) dirty = true;
            }
            if (!dirty) {
                // divisibility of the remaining block
                std::size_t bi = w.rows;
                for (std::size_t i = k + 1; i < w.rows && bi == w.rows; ++i)
                    for (std::size_t j = k + 1; j < w.cols; ++j)
                        if (w.A[i][j] % w.A[k][k] != 0) {
                            bi = i;
                            break;
                        }
                if (bi == w.rows) break;
                w.add_row(k, bi, 1);
            }
            // restore a minimal pivot in row k / column k
            std::size_t mi = k, mj = k;
            BigInt best = abs(w.A[k][k]);
            for (std::size_t i = k; i < w.rows; ++i)
                if (w.A[i][k] != 0 && abs(w.A[i][k]) < best) {
                    best = abs(w.A[i][k]);
                    mi = i;
                    mj = k;
                }
            for (std::size_t j = k; j < w.cols; ++j)
                if (w.A[k][j] != 0 && abs(w.A[k][j]) < best) {
                    best = abs(w.A[k][j]);
                    mi = k;
                    mj = j;
                }
            w.swap_rows(k, mi);
            w.swap_cols(k, mj);
        }
        if (w.A[k][k] < 0) w.negate_row(k);
    }
    return SnfResult{std::move(w.U), std::move(w.A), std::move(w.V)};
}

std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b) {
    std::size_t rows = a.size();
    if (b.size() != rows) throw DomainError("solve_rational: dimension mismatch");
    std::size_t cols = rows ? a[0].size() : 0;
    RatMatrix m(rows, RatVector(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols) throw DomainError("solve_rational: ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = m[r][c].reciprocal();
        for (std::size_t j = c; j <= cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!m[i][cols].is_zero()) return std::nullopt;
    RatVector x(cols);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
    return x;
}

std::optional<RatVector> solve_rational(const IntMatrix& a, const IntVector& b) {
    RatMatrix ra;
    for (const auto& row : a) {
        RatVector rr;
        for (const auto& x : row) rr.emplace_back(x);
        ra.push_back(std::move(rr));
    }
    RatVector rb;
    for (const auto& x : b) rb.emplace_back(x);
    return solve_rational(ra, rb);
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    SnfResult s = snf(a);
    IntVector ub = multiply(s.U, b);
    IntVector y(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        BigInt d = i < cols ? s.S[i][i] : BigInt(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
            continue;
        }
        if (ub[i] % d != 0) return std::nullopt;
        y[i] = ub[i] / d;
    }
    return multiply(s.V, y);
}

SignatureTriple signature_congruence(const RatMatrix& a) {
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw DomainError("signature: matrix not square");
        for (std::size_t j = 0; j < i; ++j)
            if (a[i][j] != a[j][i]) throw DomainError("signature: matrix not symmetric");
    }
    RatMatrix m = a;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < n; ++i) active.push_back(i);
    SignatureTriple out;

    auto drop = [&](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };

    while (!active.empty()) {
        std::size_t k = active.front();
        // nonzero diagonal pivot anywhere in the active block
        std::size_t piv = n;
        for (std::size_t i : active)
            if (!m[i][i].is_zero()) {
                piv = i;
                break;
            }
        if (piv != n) {
            Rational d = m[piv][piv];
            for (std::size_t i : active) {
                if (i == piv || m[i][piv].is_zero()) continue;
                Rational f = m[i][piv] / d;
                for (std::size_t j : active) m[i][j] -= f * m[piv][j];
            }
            for (std::size_t i : active)
                if (i != piv) m[piv][i] = m[i][piv] = 0;
            (d.sign() > 0 ? out.n_plus : out.n_minus) += 1;
            drop(piv);
            continue;
        }
        // all active diagonal entries vanish: look for a hyperbolic pair
        std::size_t pj = n;
        for (std::size_t j : active)
            if (j != k && !m[k][j].is_zero()) {
                pj = j;
                break;
            }
        if (pj == n) {
            out.n_zero += 1;
            drop(k);
            continue;
        }
        // block [[0,b],[b,0]] has inverse [[0,1/b],[1/b,0]]; clear the other rows against it
        Rational binv = m[k][pj].reciprocal();
        for (std::size_t i : active) {
            if (i == k || i == pj) continue;
            Rational fk = m[i][pj] * binv;  // coefficient of row k
            Rational fj = m[i][k] * binv;   // coefficient of row pj
            if (fk.is_zero() && fj.is_zero()) continue;
            for (std::size_t j : active) m[i][j] -= fk * m[k][j] + fj * m[pj][j];
            for (std::size_t j : active) m[j][i] = m[i][j];
        }
        out.n_plus += 1;
        out.n_minus += 1;
        drop(k);
        drop(pj);
    }
    return out;
}

SignatureTriple signature_generalized(const IntMatrix& q_matrix, const IntVector& q) {
    std::size_t n = q_matrix.size();
    if (q.size() != n) throw DomainError("signature_generalized: dimension mismatch");
    for (const auto& x : q)
        if (x <= 0) throw DomainError("signature_generalized: non-positive denominator");
    RatMatrix a(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (q_matrix[i].size() != n) throw DomainError("signature_generalized: matrix not square");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(q_matrix[i][j], q[j]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (a[i][j] != a[j][i])
                throw DomainError("signature_generalized: column scaling is not symmetric");
    return signature_congruence(a);
}

std::vector<BigInt> negcf(const Rational& r) {
    if (r.sign() >= 0) throw DomainError("negcf: argument must be negative");
    std::vector<BigInt> out;
    if (r.is_integer()) {
        out.push_back(r.num() - 1);
        return out;
    }
    BigInt fl = r.floor();
    out.push_back(fl - 1);
    Rational tail = (r - Rational(fl)).reciprocal() * Rational(-1);
    for (;;) {
        BigInt f = tail.floor();
        if (tail.is_integer()) {
            out.push_back(f);
            return out;
        }
        out.push_back(f);
        tail = -(tail - Rational(f)).reciprocal();
    }
}

std::vector<BigInt> negcf_display(const Rational& r) {
    auto e = negcf(r);
    e[0] += 1;
    return e;
}

Rational negcf_value(const std::vector<BigInt>& entries) {
    if (entries.empty()) throw DomainError("negcf_value: empty expansion");
    if (entries.size() == 1) return Rational(entries[0] + 1);
    Rational v(entries.back());
    for (std::size_t i = entries.size() - 1; i-- > 1;) v = Rational(entries[i]) - v.reciprocal();
    return Rational(entries[0] + 1) - v.reciprocal();
}

}  // namespace csurg
