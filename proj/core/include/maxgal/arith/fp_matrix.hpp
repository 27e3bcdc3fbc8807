#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "maxgal/arith/fp_poly.hpp"

namespace maxgal {

/// Dense square matrix over F_l for a word-size prime l.
class FpMatrix {
public:
    FpMatrix(std::uint64_t l, int n);

    static FpMatrix identity(std::uint64_t l, int n);
    static FpMatrix random(std::uint64_t l, int n, std::mt19937_64& rng);
    /// Random matrix with nonzero determinant.
    static FpMatrix random_invertible(std::uint64_t l, int n, std::mt19937_64& rng);

    std::uint64_t prime() const noexcept { return l_; }
    int size() const noexcept { return n_; }
    std::uint64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    std::uint64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

    friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
    friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
    friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.l_ == b.l_ && a.n_ == b.n_ && a.a_ == b.a_;
    }

    bool is_zero() const;
    FpMatrix pow(std::uint64_t e) const;
    int rank() const;
    std::uint64_t determinant() const;
    FpMatrix inverse() const;
    /// det(x*I - A), via reduction to Hessenberg form.
    FpPoly charpoly() const;

private:
    std::uint64_t l_;
    int n_;
    std::vector<std::uint64_t> a_;
};

} // namespace maxgal
