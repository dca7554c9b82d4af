#include "reach/matrix.hpp"

#include <sstream>

namespace reach {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return QMatrix();
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument("ragged matrix rows");
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    QMatrix m(rows_, cols_);
    for (size_t i = 0; i < v_.size(); ++i) m.v_[i] = v_[i] + o.v_[i];
    return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    QMatrix m(rows_, cols_);
    for (size_t i = 0; i < v_.size(); ++i) m.v_[i] = v_[i] - o.v_[i];
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
    QMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (sgn(a) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
        }
    return m;
}

QMatrix QMatrix::operator*(const Rational& s) const {
    QMatrix m(rows_, cols_);
    for (size_t i = 0; i < v_.size(); ++i) m.v_[i] = v_[i] * s;
    return m;
}

QMatrix QMatrix::pow(long e) const {
    if (!is_square()) throw std::invalid_argument("pow of non-square matrix");
    if (e < 0) throw std::invalid_argument("negative matrix power");
    QMatrix acc = identity(rows_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Rational QMatrix::trace() const {
    Rational t(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Rational QMatrix::det() const {
    if (!is_square()) throw std::invalid_argument("det of non-square matrix");
    QMatrix a = *this;
    Rational d(1);
    int n = rows_;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (sgn(a.at(r, c)) != 0) { p = r; break; }
        if (p < 0) return Rational(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
            d = -d;
        }
        d *= a.at(c, c);
        Rational inv = 1 / a.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            Rational f = a.at(r, c) * inv;
            if (sgn(f) == 0) continue;
            for (int j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
        }
    }
    return d;
}

QMatrix QMatrix::inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_;
    QMatrix a = *this, inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (sgn(a.at(r, c)) != 0) { p = r; break; }
        if (p < 0) throw std::domain_error("singular matrix");
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(p, j), a.at(c, j));
                std::swap(inv.at(p, j), inv.at(c, j));
            }
        Rational f = 1 / a.at(c, c);
        for (int j = 0; j < n; ++j) {
            a.at(c, j) *= f;
            inv.at(c, j) *= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || sgn(a.at(r, c)) == 0) continue;
            Rational g = a.at(r, c);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= g * a.at(c, j);
                inv.at(r, j) -= g * inv.at(c, j);
            }
        }
    }
    return inv;
}

int QMatrix::rank() const {
    QMatrix a = *this;
    int n = rows_, m = cols_, rank = 0;
    for (int c = 0; c < m && rank < n; ++c) {
        int p = -1;
        for (int r = rank; r < n; ++r)
            if (sgn(a.at(r, c)) != 0) { p = r; break; }
        if (p < 0) continue;
        if (p != rank)
            for (int j = 0; j < m; ++j) std::swap(a.at(p, j), a.at(rank, j));
        Rational inv = 1 / a.at(rank, c);
        for (int r = rank + 1; r < n; ++r) {
            Rational f = a.at(r, c) * inv;
            if (sgn(f) == 0) continue;
            for (int j = c; j < m; ++j) a.at(r, j) -= f * a.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

UPoly QMatrix::char_poly() const {
    if (!is_square()) throw std::invalid_argument("char_poly of non-square matrix");
    // Faddeev-LeVerrier: exact over Q, fine for the small sizes used here.
    int n = rows_;
    std::vector<Rational> c(size_t(n) + 1, Rational(0));
    c[size_t(n)] = 1;
    QMatrix m(n, n);
    QMatrix a = *this;
    for (int k = 1; k <= n; ++k) {
        if (k == 1) m = a;
        else m = a * (m + identity(n) * c[size_t(n - k + 1)]);
        c[size_t(n - k)] = -m.trace() / k;
    }
    return UPoly(std::move(c));
}

QMatrix QMatrix::kronecker(const QMatrix& a, const QMatrix& b) {
    QMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (sgn(a.at(i, j)) == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return m;
}

std::vector<Rational> QMatrix::solve_left(const std::vector<Rational>& b) const {
    // x A = b  <=>  A^T x^T = b^T
    QMatrix t = transpose();
    QMatrix inv = t.inverse();
    std::vector<Rational> x(size_t(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j) x[size_t(i)] += inv.at(i, j) * b[size_t(j)];
    return x;
}

std::vector<Rational> row_times(const std::vector<Rational>& p, const QMatrix& m) {
    if (static_cast<int>(p.size()) != m.rows()) throw std::invalid_argument("shape mismatch");
    std::vector<Rational> out(size_t(m.cols()), Rational(0));
    for (int i = 0; i < m.rows(); ++i) {
        if (sgn(p[size_t(i)]) == 0) continue;
        for (int j = 0; j < m.cols(); ++j) out[size_t(j)] += p[size_t(i)] * m.at(i, j);
    }
    return out;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("shape mismatch");
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace reach
