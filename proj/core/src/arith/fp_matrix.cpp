#include "maxgal/arith/fp_matrix.hpp"

#include <utility>

#include "maxgal/error.hpp"
#include "poly_kernel.hpp"

namespace maxgal {

namespace {

void check_compatible(const FpMatrix& a, const FpMatrix& b) {
    if (a.prime() != b.prime() || a.size() != b.size()) throw PreconditionError("incompatible matrices");
}

// Row echelon form in place; returns rank and accumulates the determinant.
int eliminate(std::vector<std::vector<std::uint64_t>>& m, const detail::WordField& f, int cols,
              std::uint64_t* det) {
    const int rows = static_cast<int>(m.size());
    int rank = 0;
    std::uint64_t d = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            d = 0;
            continue;
        }
        if (pivot != rank) {
            std::swap(m[pivot], m[rank]);
            d = f.neg(d);
        }
        d = f.mul(d, m[rank][c]);
        const std::uint64_t inv = f.inv(m[rank][c]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const std::uint64_t factor = f.mul(m[r][c], inv);
            for (int k = 0; k < static_cast<int>(m[r].size()); ++k) {
                m[r][k] = f.sub(m[r][k], f.mul(factor, m[rank][k]));
            }
        }
        ++rank;
    }
    if (det) *det = rank == rows ? d : 0;
    return rank;
}

std::vector<std::vector<std::uint64_t>> rows_of(const FpMatrix& a) {
    std::vector<std::vector<std::uint64_t>> m(static_cast<std::size_t>(a.size()),
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(a.size())));
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < a.size(); ++j) m[i][j] = a.at(i, j);
    }
    return m;
}

} // namespace

FpMatrix::FpMatrix(std::uint64_t l, int n) : l_(l), n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
    if (l < 2 || l >= detail::WordField::kLimit) throw PreconditionError("matrix field must be a word-size prime");
    if (n < 0) throw PreconditionError("negative matrix size");
}

FpMatrix FpMatrix::identity(std::uint64_t l, int n) {
    FpMatrix m(l, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::random(std::uint64_t l, int n, std::mt19937_64& rng) {
    FpMatrix m(l, n);
    for (auto& x : m.a_) x = rng() % l;
    return m;
}

FpMatrix FpMatrix::random_invertible(std::uint64_t l, int n, std::mt19937_64& rng) {
    for (;;) {
        FpMatrix m = random(l, n, rng);
        if (m.determinant() != 0) return m;
    }
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
    check_compatible(a, b);
    detail::WordField f{a.l_};
    FpMatrix out(a.l_, a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = f.add(a.a_[i], b.a_[i]);
    return out;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
    check_compatible(a, b);
    detail::WordField f{a.l_};
    FpMatrix out(a.l_, a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = f.sub(a.a_[i], b.a_[i]);
    return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    check_compatible(a, b);
    detail::WordField f{a.l_};
    FpMatrix out(a.l_, a.n_);
    for (int i = 0; i < a.n_; ++i) {
        for (int k = 0; k < a.n_; ++k) {
            const std::uint64_t x = a.at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < a.n_; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(x, b.at(k, j)));
        }
    }
    return out;
}

bool FpMatrix::is_zero() const {
    for (auto x : a_) {
        if (x != 0) return false;
    }
    return true;
}

FpMatrix FpMatrix::pow(std::uint64_t e) const {
    FpMatrix result = identity(l_, n_);
    FpMatrix base = *this;
    while (e) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return result;
}

int FpMatrix::rank() const {
    auto m = rows_of(*this);
    return eliminate(m, detail::WordField{l_}, n_, nullptr);
}

std::uint64_t FpMatrix::determinant() const {
    if (n_ == 0) return 1;
    auto m = rows_of(*this);
    std::uint64_t det = 0;
    eliminate(m, detail::WordField{l_}, n_, &det);
    return det;
}

FpMatrix FpMatrix::inverse() const {
    auto m = rows_of(*this);
    for (int i = 0; i < n_; ++i) {
        m[i].resize(static_cast<std::size_t>(2 * n_), 0);
        m[i][static_cast<std::size_t>(n_ + i)] = 1;
    }
    detail::WordField f{l_};
    if (eliminate(m, f, n_, nullptr) < n_) throw PreconditionError("matrix is singular");
    FpMatrix out(l_, n_);
    for (int i = 0; i < n_; ++i) {
        const std::uint64_t inv = f.inv(m[i][i]);
        for (int j = 0; j < n_; ++j) out.at(i, j) = f.mul(inv, m[i][static_cast<std::size_t>(n_ + j)]);
    }
    return out;
}

FpPoly FpMatrix::charpoly() const {
    detail::WordField f{l_};
    const int n = n_;
    auto h = rows_of(*this);
    // Similarity transforms to upper Hessenberg form.
    for (int j = 0; j + 2 < n; ++j) {
        int pivot = -1;
        for (int i = j + 1; i < n; ++i) {
            if (h[i][j] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != j + 1) {
            std::swap(h[pivot], h[j + 1]);
            for (int r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][j + 1]);
        }
        const std::uint64_t inv = f.inv(h[j + 1][j]);
        for (int i = j + 2; i < n; ++i) {
            if (h[i][j] == 0) continue;
            const std::uint64_t u = f.mul(h[i][j], inv);
            for (int k = 0; k < n; ++k) h[i][k] = f.sub(h[i][k], f.mul(u, h[j + 1][k]));
            for (int r = 0; r < n; ++r) h[r][j + 1] = f.add(h[r][j + 1], f.mul(u, h[r][i]));
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im * (prod_{k=i+1..m} h_{k,k-1}) p_{i-1}
    using Poly = detail::Vec<detail::WordField>;
    std::vector<Poly> p(static_cast<std::size_t>(n) + 1);
    p[0] = Poly{1};
    for (int m = 1; m <= n; ++m) {
        const int mm = m - 1;
        Poly next = detail::mul(f, Poly{f.neg(h[mm][mm]), 1}, p[m - 1]);
        std::uint64_t prod = 1;
        for (int i = m - 1; i >= 1; --i) {
            prod = f.mul(prod, h[i][i - 1]);
            const std::uint64_t c = f.mul(h[i - 1][mm], prod);
            if (c == 0) continue;
            next = detail::sub(f, next, detail::scale(f, p[i - 1], c));
        }
        p[m] = std::move(next);
    }
    return FpPoly(from_u64(l_), detail::store(f, p[n]));
}

} // namespace maxgal
