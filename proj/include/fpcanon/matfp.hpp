#ifndef FPCANON_MATFP_HPP
#define FPCANON_MATFP_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fpcanon/poly.hpp"

namespace fpcanon {

/// Dense matrix over F_p, row-major bytes. Immutable in spirit: operations
/// return fresh values and never mutate their inputs.
class MatFp {
  public:
    MatFp(Prime p, int rows, int cols);
    MatFp(Prime p, int rows, int cols, std::vector<uint8_t> entries);

    static MatFp identity(Prime p, int n);
    static MatFp zero(Prime p, int n) { return MatFp(p, n, n); }

    Prime prime() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    uint8_t at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
    void set(int i, int j, uint8_t v) { e_[size_t(i) * cols_ + j] = v; }
    const std::vector<uint8_t>& entries() const { return e_; }

    MatFp operator+(const MatFp& rhs) const;
    MatFp operator-(const MatFp& rhs) const;
    MatFp operator*(const MatFp& rhs) const;
    MatFp transpose() const;

    friend bool operator==(const MatFp& a, const MatFp& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const MatFp& a, const MatFp& b) { return !(a == b); }

    /// Text form: first line "p rows cols", then rows of space-separated
    /// integers in [0, p).
    static MatFp parse(std::istream& in);
    static MatFp parse(const std::string& text);
    std::string to_text() const;

  private:
    Prime p_;
    int rows_, cols_;
    std::vector<uint8_t> e_;
};

/// Rank over F_p by Gaussian elimination with first-nonzero pivoting.
int rank(const MatFp& a);

/// Row-reduce `rows` (each a vector of length width) in place to row echelon
/// form and return the rank. Shared by the linear-system solvers.
int echelonize(std::vector<std::vector<uint8_t>>& rows, int width, uint32_t p);

/// Nullspace basis of the homogeneous system given by `rows` (n unknowns):
/// one basis vector per free column.
std::vector<std::vector<uint8_t>> nullspace_basis(std::vector<std::vector<uint8_t>> rows,
                                                  int n, uint32_t p);

/// g(A) by Horner evaluation; A square.
MatFp mat_poly_eval(const Poly& g, const MatFp& a);

/// Monic characteristic polynomial det(tI - A). Computed as the product of
/// the invariant factors of tI - A so there is exactly one elimination
/// routine to trust; the Cayley-Hamilton property test guards it
/// independently. Defined in polymat.cpp.
Poly charpoly(const MatFp& a);

bool is_invertible(const MatFp& a);

}  // namespace fpcanon

#endif  // FPCANON_MATFP_HPP
