/// Dense matrices over the exact scalars. Sizes here are small (at most
/// binom(N+2,2) with N <= 8), so no banded storage is used even for the
/// tridiagonal generators.
#pragma once

#include <vector>

#include "qracah/rational.hpp"

namespace qracah {

class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim) {}

    static ExactMatrix identity_matrix(int dim) {
        ExactMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = Rational(1);
        return m;
    }
    static ExactMatrix scalar_matrix(int dim, const Rational& s) {
        ExactMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = s;
        return m;
    }

    int dim() const { return dim_; }

    Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }
    const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }

    bool is_zero() const {
        for (const Rational& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        ExactMatrix r(a.dim_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        ExactMatrix r(a.dim_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend ExactMatrix operator*(const Rational& s, const ExactMatrix& a) {
        ExactMatrix r(a.dim_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = s * a.e_[i];
        return r;
    }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        ExactMatrix r(a.dim_);
        for (int i = 0; i < a.dim_; ++i)
            for (int k = 0; k < a.dim_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.dim_; ++j) {
                    const Rational& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }

private:
    int dim_ = 0;
    std::vector<Rational> e_;
};

/// [X, Y]_Q = Q X Y - Q^{-1} Y X.
inline ExactMatrix q_commutator(const Rational& Q, const ExactMatrix& x, const ExactMatrix& y) {
    return Q * (x * y) - Q.inverse() * (y * x);
}

}  // namespace qracah
