#include "poshom/matrix.hpp"

#include "poshom/ring.hpp"

#include <algorithm>
#include <sstream>

#include "poshom/errors.hpp"

namespace poshom {

void IntMat::swap_rows(long a, long b) {
    if (a == b) return;
    for (long c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMat::swap_cols(long a, long b) {
    if (a == b) return;
    for (long r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

bool IntMat::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

IntMat IntMat::mul(const IntMat& rhs) const {
    if (cols_ != rhs.rows_) fail(Errc::InputError, "matrix shape mismatch in mul");
    IntMat out(rows_, rhs.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const mpz_class& v = at(i, k);
            if (v == 0) continue;
            for (long j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
        }
    return out;
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    for (long i = 0; i < rows_; ++i) {
        for (long j = 0; j < cols_; ++j) os << at(i, j).get_str() << (j + 1 == cols_ ? "" : " ");
        os << "\n";
    }
    return os.str();
}

namespace {

// Locate the entry of minimal nonzero absolute value in the trailing
// submatrix; small pivots keep intermediate growth down.
bool find_pivot(const IntMat& m, long s, long& pr, long& pc) {
    bool found = false;
    mpz_class best;
    for (long i = s; i < m.rows(); ++i)
        for (long j = s; j < m.cols(); ++j) {
            if (m.at(i, j) == 0) continue;
            mpz_class a = abs(m.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(IntMat m) {
    const long nmin = std::min(m.rows(), m.cols());
    std::vector<mpz_class> diag;

    for (long s = 0; s < nmin; ++s) {
        long pr = 0, pc = 0;
        if (!find_pivot(m, s, pr, pc)) break;
        m.swap_rows(s, pr);
        m.swap_cols(s, pc);

        for (;;) {
            // Euclidean sweeps; the pivot shrinks each time a remainder
            // survives, so this terminates.
            bool cleared = true;
            for (long i = s + 1; i < m.rows(); ++i) {
                if (m.at(i, s) == 0) continue;
                mpz_class q = m.at(i, s) / m.at(s, s);  // truncated division
                if (q != 0)
                    for (long j = s; j < m.cols(); ++j) m.at(i, j) -= q * m.at(s, j);
                if (m.at(i, s) != 0) {
                    m.swap_rows(s, i);
                    cleared = false;
                }
            }
            if (!cleared) continue;
            for (long j = s + 1; j < m.cols(); ++j) {
                if (m.at(s, j) == 0) continue;
                mpz_class q = m.at(s, j) / m.at(s, s);
                if (q != 0)
                    for (long i = s; i < m.rows(); ++i) m.at(i, j) -= q * m.at(i, s);
                if (m.at(s, j) != 0) {
                    m.swap_cols(s, j);
                    cleared = false;
                }
            }
            if (!cleared) continue;

            // Pivot must divide the whole trailing block before moving on.
            bool divides = true;
            for (long i = s + 1; i < m.rows() && divides; ++i)
                for (long j = s + 1; j < m.cols() && divides; ++j)
                    if (m.at(i, j) % m.at(s, s) != 0) {
                        for (long c = s; c < m.cols(); ++c) m.at(s, c) += m.at(i, c);
                        divides = false;
                    }
            if (divides) break;
        }
        diag.push_back(abs(m.at(s, s)));
    }

    // The divisibility sweep already makes the diagonal a chain, but a
    // normalization pass costs nothing and guards the invariant.
    for (size_t i = 0; i + 1 < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j)
            if (diag[j] % diag[i] != 0) {
                mpz_class g = gcd(diag[i], diag[j]);
                mpz_class l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
            }
    std::sort(diag.begin(), diag.end());
    return SmithResult{std::move(diag)};
}

long rank_over_rationals(const IntMat& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);

    long rank = 0;
    for (long col = 0; col < m.cols() && rank < m.rows(); ++col) {
        long pivot = -1;
        for (long i = rank; i < m.rows(); ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (long i = rank + 1; i < m.rows(); ++i) {
            if (a[i][col] == 0) continue;
            mpq_class f = a[i][col] / a[rank][col];
            for (long j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

long rank_mod_p(const IntMat& m, long p) {
    if (!is_prime(p)) fail(Errc::NotPrime, "rank_mod_p needs a prime modulus");
    std::vector<std::vector<long>> a(m.rows(), std::vector<long>(m.cols()));
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) {
            mpz_class r = m.at(i, j) % p;
            long v = r.get_si();
            a[i][j] = ((v % p) + p) % p;
        }

    auto inv_mod = [&](long x) {
        long r = 1, base = ((x % p) + p) % p, e = p - 2;  // Fermat
        while (e > 0) {
            if (e & 1) r = (r * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        return r;
    };

    long rank = 0;
    for (long col = 0; col < m.cols() && rank < m.rows(); ++col) {
        long pivot = -1;
        for (long i = rank; i < m.rows(); ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        long inv = inv_mod(a[rank][col]);
        for (long i = rank + 1; i < m.rows(); ++i) {
            if (a[i][col] == 0) continue;
            long f = (a[i][col] * inv) % p;
            for (long j = col; j < m.cols(); ++j)
                a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

bool solve_rational(const IntMat& a_in, const std::vector<mpq_class>& b,
                    std::vector<mpq_class>& x) {
    const long rows = a_in.rows(), cols = a_in.cols();
    if (static_cast<long>(b.size()) != rows) fail(Errc::InputError, "rhs size mismatch");
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols + 1));
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < cols; ++j) a[i][j] = a_in.at(i, j);
        a[i][cols] = b[i];
    }

    std::vector<long> pivot_col;
    long row = 0;
    for (long col = 0; col < cols && row < rows; ++col) {
        long pivot = -1;
        for (long i = row; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[row], a[pivot]);
        mpq_class d = a[row][col];
        for (long j = col; j <= cols; ++j) a[row][j] /= d;
        for (long i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            mpq_class f = a[i][col];
            for (long j = col; j <= cols; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (long i = row; i < rows; ++i)
        if (a[i][cols] != 0) return false;

    x.assign(cols, mpq_class(0));
    for (long r = 0; r < row; ++r) x[pivot_col[r]] = a[r][cols];
    return true;
}

}  // namespace poshom
