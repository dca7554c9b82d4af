#pragma once

// Dense matrices over Q. Sizes stay small (companion blocks, 2x2 systems);
// clarity over asymptotics.

#include <vector>

#include "reach/rational.hpp"
#include "reach/upoly.hpp"

namespace reach {

class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), v_(size_t(rows) * cols, Rational(0)) {}
    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(int i, int j) { return v_[size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return v_[size_t(i) * cols_ + j]; }

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator*(const Rational& s) const;
    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_; }

    QMatrix pow(long e) const;  // e >= 0, square matrices
    QMatrix transpose() const;

    Rational trace() const;
    Rational det() const;              // fraction-free elimination
    QMatrix inverse() const;           // throws std::domain_error when singular
    UPoly char_poly() const;           // monic characteristic polynomial det(xI - A)
    int rank() const;

    // Kronecker (tensor) product.
    static QMatrix kronecker(const QMatrix& a, const QMatrix& b);

    // Solves x * A = b for a row vector x (A square invertible).
    std::vector<Rational> solve_left(const std::vector<Rational>& b) const;

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<Rational> v_;
};

std::vector<Rational> row_times(const std::vector<Rational>& p, const QMatrix& m);
Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace reach
