#include "cospec/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace cospec {

namespace {

// Division-free Berkowitz iteration: grows the characteristic polynomial of
// the leading principal k x k submatrix from the (k-1) x (k-1) one via a
// Toeplitz product. Works over any exact commutative ring scalar.
template <class T>
std::vector<T> berkowitz(const std::vector<T>& m, int n) {
    std::vector<T> c{T(1)};  // descending-degree coefficients
    std::vector<T> v, vn, t;
    T tmp;
    for (int k = 1; k <= n; ++k) {
        const auto entry = [&](int r, int col) -> const T& {
            return m[static_cast<size_t>(r) * n + col];
        };
        t.assign(1, T(1));
        t.push_back(-entry(k - 1, k - 1));
        v.assign(static_cast<size_t>(k - 1), T(0));
        for (int i = 0; i < k - 1; ++i) v[static_cast<size_t>(i)] = entry(i, k - 1);
        for (int j = 0; j < k - 1; ++j) {
            T dot(0);
            for (int i = 0; i < k - 1; ++i) {
                tmp = entry(k - 1, i);
                tmp *= v[static_cast<size_t>(i)];
                dot += tmp;
            }
            t.push_back(-dot);
            if (j < k - 2) {
                vn.assign(static_cast<size_t>(k - 1), T(0));
                for (int r = 0; r < k - 1; ++r) {
                    T acc(0);
                    for (int i = 0; i < k - 1; ++i) {
                        tmp = entry(r, i);
                        tmp *= v[static_cast<size_t>(i)];
                        acc += tmp;
                    }
                    vn[static_cast<size_t>(r)] = acc;
                }
                v.swap(vn);
            }
        }
        std::vector<T> next(static_cast<size_t>(k + 1), T(0));
        for (int i = 0; i <= k; ++i) {
            int jmax = std::min<int>(i, static_cast<int>(t.size()) - 1);
            for (int j = 0; j <= jmax; ++j) {
                if (i - j >= static_cast<int>(c.size())) continue;
                tmp = t[static_cast<size_t>(j)];
                tmp *= c[static_cast<size_t>(i - j)];
                next[static_cast<size_t>(i)] += tmp;
            }
        }
        c.swap(next);
    }
    return c;
}

struct Echelon {
    std::vector<Int> rows;  // row-major, nr x nc, fraction-free row echelon
    int nr = 0, nc = 0;
    std::vector<int> pivot_cols;
    int sign = 1;
    Int last_pivot = 1;
};

// Bareiss fraction-free elimination with row swaps and column skipping.
Echelon bareiss_echelon(std::vector<Int> a, int nr, int nc) {
    Echelon e;
    e.nr = nr;
    e.nc = nc;
    auto at = [&](int r, int c) -> Int& { return a[static_cast<size_t>(r) * nc + c]; };
    Int prev = 1;
    Int t1, t2;
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int piv = -1;
        for (int r = row; r < nr; ++r)
            if (at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row) {
            for (int c = 0; c < nc; ++c) std::swap(at(piv, c), at(row, c));
            e.sign = -e.sign;
        }
        for (int r = row + 1; r < nr; ++r) {
            for (int c = col + 1; c < nc; ++c) {
                t1 = at(row, col);
                t1 *= at(r, c);
                t2 = at(r, col);
                t2 *= at(row, c);
                t1 -= t2;
                mpz_divexact(t1.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
                at(r, c) = t1;
            }
            at(r, col) = 0;
        }
        prev = at(row, col);
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.last_pivot = prev;
    e.rows = std::move(a);
    return e;
}

// Clears each row to integers; returns the product of the scaling factors.
std::vector<Int> clear_rows(const ExactMatrix& m, Int& scale) {
    scale = 1;
    std::vector<Int> out(static_cast<size_t>(m.rows()) * m.cols());
    Int l, g;
    for (int i = 0; i < m.rows(); ++i) {
        l = 1;
        for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            Rat v = m.at(i, j);
            v *= Rat(l);
            out[static_cast<size_t>(i) * m.cols() + j] = v.get_num();
        }
        scale *= l;
    }
    return out;
}

}  // namespace

Poly charpoly(const ExactMatrix& m) {
    if (!m.square()) throw ShapeError("charpoly requires a square matrix");
    int n = m.rows();
    Poly out;
    if (m.is_integral()) {
        std::vector<Int> a(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m.at(i, j).get_num();
        std::vector<Int> c = berkowitz<Int>(a, n);
        out.reserve(c.size());
        for (size_t i = c.size(); i-- > 0;) out.emplace_back(Rat(c[i]));
    } else {
        std::vector<Rat> a(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m.at(i, j);
        std::vector<Rat> c = berkowitz<Rat>(a, n);
        out.assign(c.rbegin(), c.rend());
    }
    return out;
}

Rat determinant(const ExactMatrix& m) {
    if (!m.square()) throw ShapeError("determinant requires a square matrix");
    int n = m.rows();
    if (n == 0) return Rat(1);
    Int scale;
    std::vector<Int> a = clear_rows(m, scale);
    Echelon e = bareiss_echelon(std::move(a), n, n);
    if (static_cast<int>(e.pivot_cols.size()) < n) return Rat(0);
    Rat det(e.last_pivot);
    if (e.sign < 0) det = -det;
    det /= Rat(scale);
    return det;
}

int rank(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Int scale;
    std::vector<Int> a = clear_rows(m, scale);
    Echelon e = bareiss_echelon(std::move(a), m.rows(), m.cols());
    return static_cast<int>(e.pivot_cols.size());
}

std::vector<std::vector<Rat>> nullspace(const ExactMatrix& m) {
    int nr = m.rows(), nc = m.cols();
    if (nc == 0) return {};
    if (nr == 0) {
        // Entire space is the kernel.
        std::vector<std::vector<Rat>> basis;
        for (int c = 0; c < nc; ++c) {
            std::vector<Rat> v(static_cast<size_t>(nc), Rat(0));
            v[static_cast<size_t>(c)] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    Int scale;
    std::vector<Int> a = clear_rows(m, scale);
    Echelon e = bareiss_echelon(std::move(a), nr, nc);
    int r = static_cast<int>(e.pivot_cols.size());

    std::vector<bool> is_pivot(static_cast<size_t>(nc), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

    auto ech = [&](int row, int col) -> const Int& {
        return e.rows[static_cast<size_t>(row) * nc + col];
    };

    std::vector<std::vector<Rat>> basis;
    Rat term;
    for (int fc = 0; fc < nc; ++fc) {
        if (is_pivot[static_cast<size_t>(fc)]) continue;
        std::vector<Rat> x(static_cast<size_t>(nc), Rat(0));
        x[static_cast<size_t>(fc)] = 1;
        for (int row = r - 1; row >= 0; --row) {
            int pc = e.pivot_cols[static_cast<size_t>(row)];
            if (pc > fc) continue;  // columns beyond fc are zero in x
            Rat acc(0);
            for (int c = pc + 1; c <= fc; ++c) {
                if (x[static_cast<size_t>(c)] == 0 || ech(row, c) == 0) continue;
                term = Rat(ech(row, c));
                term *= x[static_cast<size_t>(c)];
                acc += term;
            }
            acc /= Rat(ech(row, pc));
            x[static_cast<size_t>(pc)] = -acc;
        }
        // Scale to a primitive integer vector.
        Int l = 1, g = 0;
        for (const Rat& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        for (Rat& v : x) v *= Rat(l);
        for (const Rat& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
        if (g > 1)
            for (Rat& v : x) v /= Rat(g);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace cospec
