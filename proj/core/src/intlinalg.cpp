#include "graphjac/intlinalg.hpp"

#include "graphjac/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace graphjac {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw input_error("ragged matrix initializer");
        for (long v : row) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw input_error("matrix product dimension mismatch");
    IntMatrix p(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < rhs.cols_; ++c) p.at(r, c) += v * rhs.at(k, c);
        }
    return p;
}

IntMatrix IntMatrix::minor_matrix(int drop_row, int drop_col) const {
    IntMatrix m(rows_ - (drop_row >= 0 ? 1 : 0), cols_ - (drop_col >= 0 ? 1 : 0));
    int mr = 0;
    for (int r = 0; r < rows_; ++r) {
        if (r == drop_row) continue;
        int mc = 0;
        for (int c = 0; c < cols_; ++c) {
            if (c == drop_col) continue;
            m.at(mr, mc++) = at(r, c);
        }
        ++mr;
    }
    return m;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << '\n';
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << at(r, c).get_str();
        }
        out << '\n';
    }
    return out.str();
}

Int AbelianGroup::torsion_order() const {
    Int o = 1;
    for (const Int& d : torsion) o *= d;
    return o;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "trivial";
    std::ostringstream out;
    bool first = true;
    for (const Int& d : torsion) {
        if (!first) out << " x ";
        out << "Z/" << d.get_str();
        first = false;
    }
    if (free_rank > 0) {
        if (!first) out << " x ";
        out << "Z";
        if (free_rank > 1) out << "^" << free_rank;
    }
    return out.str();
}

namespace {

struct SmithState {
    IntMatrix m;
    IntMatrix u;      // accumulated row ops, u * input = current (up to col ops)
    bool track_rows;

    int rows() const { return m.rows(); }
    int cols() const { return m.cols(); }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
        if (track_rows)
            for (int c = 0; c < u.cols(); ++c) std::swap(u.at(a, c), u.at(b, c));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
    }
    // row[a] += q * row[b]
    void add_row(int a, int b, const Int& q) {
        for (int c = 0; c < m.cols(); ++c) m.at(a, c) += q * m.at(b, c);
        if (track_rows)
            for (int c = 0; c < u.cols(); ++c) u.at(a, c) += q * u.at(b, c);
    }
    void add_col(int a, int b, const Int& q) {
        for (int r = 0; r < m.rows(); ++r) m.at(r, a) += q * m.at(r, b);
    }
    void negate_row(int r) {
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
        if (track_rows)
            for (int c = 0; c < u.cols(); ++c) u.at(r, c) = -u.at(r, c);
    }
};

// Moves the smallest-magnitude nonzero entry of the trailing submatrix to
// (t, t); returns false when the submatrix is zero.
bool pivot_to_front(SmithState& s, int t) {
    int br = -1, bc = -1;
    for (int r = t; r < s.rows(); ++r)
        for (int c = t; c < s.cols(); ++c) {
            const Int& v = s.m.at(r, c);
            if (v == 0) continue;
            if (br < 0 || mpz_cmpabs(v.get_mpz_t(), s.m.at(br, bc).get_mpz_t()) < 0) {
                br = r;
                bc = c;
            }
        }
    if (br < 0) return false;
    s.swap_rows(t, br);
    s.swap_cols(t, bc);
    return true;
}

void diagonalize(SmithState& s) {
    const int n = std::min(s.rows(), s.cols());
    for (int t = 0; t < n; ++t) {
        if (!pivot_to_front(s, t)) return;
        for (;;) {
            bool clean = true;
            for (int r = t + 1; r < s.rows(); ++r) {
                if (s.m.at(r, t) == 0) continue;
                Int q = s.m.at(r, t) / s.m.at(t, t); // truncated division
                s.add_row(r, t, -q);
                if (s.m.at(r, t) != 0) {
                    s.swap_rows(t, r); // remainder is strictly smaller
                    clean = false;
                }
            }
            for (int c = t + 1; c < s.cols(); ++c) {
                if (s.m.at(t, c) == 0) continue;
                Int q = s.m.at(t, c) / s.m.at(t, t);
                s.add_col(c, t, -q);
                if (s.m.at(t, c) != 0) {
                    s.swap_cols(t, c);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (s.m.at(t, t) < 0) s.negate_row(t);
    }
}

// On a diagonal matrix, enforce the divisibility chain with unimodular
// 2x2 updates: diag(a, b) -> diag(gcd(a, b), ab/gcd(a, b)).
void repair_chain(SmithState& s, std::vector<int>& idx) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < idx.size(); ++i)
            for (size_t j = i + 1; j < idx.size(); ++j) {
                Int& a = s.m.at(idx[i], idx[i]);
                Int& b = s.m.at(idx[j], idx[j]);
                if (a == 0 || b == 0 || b % a == 0) continue;
                Int g, x, y;
                mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                Int l = a / g * b;
                if (s.track_rows) {
                    // u2 = [[x, y], [-b/g, a/g]] applied to rows idx[i], idx[j]
                    const int ri = idx[i], rj = idx[j];
                    Int bg = b / g, ag = a / g;
                    for (int c = 0; c < s.u.cols(); ++c) {
                        Int top = x * s.u.at(ri, c) + y * s.u.at(rj, c);
                        Int bot = -bg * s.u.at(ri, c) + ag * s.u.at(rj, c);
                        s.u.at(ri, c) = top;
                        s.u.at(rj, c) = bot;
                    }
                }
                a = g;
                b = l;
                changed = true;
            }
    }
}

SmithState run_smith(const IntMatrix& m, bool track_rows) {
    SmithState s{m, track_rows ? IntMatrix::identity(m.rows()) : IntMatrix(), track_rows};
    diagonalize(s);
    const int n = std::min(m.rows(), m.cols());
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
        if (s.m.at(i, i) != 0) idx.push_back(i);
    repair_chain(s, idx);
    return s;
}

std::vector<Int> collect_diag(const SmithState& s) {
    const int n = std::min(s.rows(), s.cols());
    std::vector<Int> d;
    d.reserve(n);
    for (int i = 0; i < n; ++i)
        if (s.m.at(i, i) != 0) d.push_back(s.m.at(i, i));
    d.resize(n, Int(0));
    return d;
}

} // namespace

std::vector<Int> smith_normal_form(const IntMatrix& m) {
    SmithState s = run_smith(m, false);
    return collect_diag(s);
}

SmithRowForm smith_normal_form_with_row_transform(const IntMatrix& m) {
    SmithState s = run_smith(m, true);
    return SmithRowForm{collect_diag(s), std::move(s.u)};
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(p, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                Int num = a.at(r, c) * a.at(k, k) - a.at(r, k) * a.at(k, c);
                a.at(r, c) = num / prev; // exact by Bareiss
            }
            a.at(r, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

AbelianGroup cokernel_group(const IntMatrix& m) {
    std::vector<Int> d = smith_normal_form(m);
    AbelianGroup g;
    int rank = 0;
    for (const Int& v : d)
        if (v != 0) {
            ++rank;
            if (v != 1) g.torsion.push_back(v);
        }
    g.free_rank = m.rows() - rank;
    return g;
}

bool in_image(const IntMatrix& m, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw input_error("in_image: vector length mismatch");
    SmithRowForm f = smith_normal_form_with_row_transform(m);
    std::vector<Int> y(m.rows(), Int(0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.rows(); ++c)
            if (f.row_transform.at(r, c) != 0) y[r] += f.row_transform.at(r, c) * b[c];
    for (int r = 0; r < m.rows(); ++r) {
        Int d = r < static_cast<int>(f.diag.size()) ? f.diag[r] : Int(0);
        if (d == 0) {
            if (y[r] != 0) return false;
        } else if (y[r] % d != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Int> leading_principal_minors(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("leading_principal_minors: non-square matrix");
    std::vector<Int> out;
    out.reserve(m.rows());
    for (int k = 1; k <= m.rows(); ++k) {
        IntMatrix sub(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) sub.at(r, c) = m.at(r, c);
        out.push_back(determinant(sub));
    }
    return out;
}

std::vector<Int> char_poly(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw input_error("char_poly: non-square matrix");
    const int n = m.rows();
    if (n > 12) throw guard_error("char_poly: dimension guard exceeded (n <= 12)");
    // coefficient of x^(n-k) is (-1)^k * (sum of k x k principal minors)
    std::vector<Int> coeff(n + 1, Int(0));
    coeff[0] = 1;
    std::vector<int> pick;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        pick.clear();
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) pick.push_back(i);
        const int k = static_cast<int>(pick.size());
        IntMatrix sub(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) sub.at(r, c) = m.at(pick[r], pick[c]);
        Int d = determinant(sub);
        if (k % 2) d = -d;
        coeff[k] += d;
    }
    return coeff;
}

} // namespace graphjac
