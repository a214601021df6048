#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace graphjac {

using Int = mpz_class;

/// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    /// Submatrix dropping one row and one column (pass -1 to keep all).
    IntMatrix minor_matrix(int drop_row, int drop_col) const;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

/// Finitely generated abelian group in canonical invariant-factor form:
/// torsion d_1 | d_2 | ... (each >= 2) plus a free rank.
struct AbelianGroup {
    std::vector<Int> torsion;
    int free_rank = 0;

    bool operator==(const AbelianGroup& rhs) const = default;

    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
    /// Order of the torsion part.
    Int torsion_order() const;
    /// Renders as "trivial", "Z/8", "Z/2 x Z/32", "Z/3 x Z", "Z^2", ...
    std::string to_string() const;
};

/// Diagonal of the Smith normal form: nonzero entries first, forming a
/// divisibility chain, then zeros. Length = min(rows, cols).
std::vector<Int> smith_normal_form(const IntMatrix& m);

/// Smith normal form with the row transform: u * m * (col ops) = diag(diag).
/// u is unimodular; enough to decide solvability of m x = b.
struct SmithRowForm {
    std::vector<Int> diag;
    IntMatrix row_transform;
};
SmithRowForm smith_normal_form_with_row_transform(const IntMatrix& m);

/// Exact determinant by Bareiss fraction-free elimination. det of a 0x0 matrix is 1.
Int determinant(const IntMatrix& m);

/// Cokernel of the column span: torsion from nonunit invariant factors,
/// free rank = rows - rank.
AbelianGroup cokernel_group(const IntMatrix& m);

/// True iff m x = b has an integer solution.
bool in_image(const IntMatrix& m, const std::vector<Int>& b);

/// Determinants of the leading principal k x k submatrices, k = 1..n.
std::vector<Int> leading_principal_minors(const IntMatrix& m);

/// Monic characteristic polynomial coefficients, highest degree first.
/// Guarded to dimension <= 12.
std::vector<Int> char_poly(const IntMatrix& m);

} // namespace graphjac
