#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace poshom {

// Dense matrix over arbitrary-precision integers.  Sizes here are tiny
// (order complexes of desk-scale posets), so no sparsity games.
class IntMat {
public:
    IntMat() = default;
    IntMat(long rows, long cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    mpz_class& at(long r, long c) { return data_[r * cols_ + c]; }
    const mpz_class& at(long r, long c) const { return data_[r * cols_ + c]; }

    void swap_rows(long a, long b);
    void swap_cols(long a, long b);

    bool is_zero() const;
    IntMat mul(const IntMat& rhs) const;

    bool operator==(const IntMat&) const = default;

    std::string to_string() const;

private:
    long rows_ = 0, cols_ = 0;
    std::vector<mpz_class> data_;
};

// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix, all positive
// and including any factors equal to 1.  rank() is the count of nonzero
// factors, i.e. all of them.
struct SmithResult {
    std::vector<mpz_class> factors;
    long rank() const { return static_cast<long>(factors.size()); }
};

SmithResult smith_normal_form(IntMat m);

// Field-side rank routes, independent of the SNF code path.
long rank_over_rationals(const IntMat& m);
long rank_mod_p(const IntMat& m, long p);

// Solves A x = b over the rationals if possible (free variables pinned to
// zero).  Returns false when the system is inconsistent.
bool solve_rational(const IntMat& a, const std::vector<mpq_class>& b, std::vector<mpq_class>& x);

}  // namespace poshom
