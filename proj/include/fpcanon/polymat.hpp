#ifndef FPCANON_POLYMAT_HPP
#define FPCANON_POLYMAT_HPP

#include <iosfwd>
#include <vector>

#include "fpcanon/matfp.hpp"
#include "fpcanon/module_type.hpp"

namespace fpcanon {

/// Rectangular matrix over F_p[t], row-major.
class MatPoly {
  public:
    MatPoly(Prime p, int rows, int cols);

    static MatPoly diagonal(Prime p, const std::vector<Poly>& diag);
    /// tI - A for square A over F_p.
    static MatPoly char_matrix(const MatFp& a);

    Prime prime() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Poly& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
    void set(int i, int j, Poly v);

    /// Text form: first line "p rows cols", then entries as double-quoted
    /// coefficient lists ("1,0,1") separated by whitespace, row-major.
    static MatPoly parse(std::istream& in);
    std::string to_text() const;

  private:
    Prime p_;
    int rows_, cols_;
    std::vector<Poly> e_;
};

/// Invariant factors g_1, ..., g_n of a nonsingular square matrix over
/// F_p[t], all monic, in descending divisibility order: g_n | g_(n-1) | ... |
/// g_1. Note this is reversed from the convention that puts the smallest
/// factor first; the order here is the one used in all public output.
struct InvariantFactors {
    std::vector<Poly> factors;

    friend bool operator==(const InvariantFactors& a, const InvariantFactors& b) {
        return a.factors == b.factors;
    }
};

/// Smith normal form over the Euclidean domain F_p[t]. Deterministic:
/// minimal-degree pivoting with ties broken by lowest (row, col), pivot made
/// monic before clearing. Throws SingularMatrixError when det = 0.
InvariantFactors smith_normal_form(const MatPoly& a);

/// Type of Cok(A) = F_p[t]^n / A F_p[t]^n: for each irreducible f dividing
/// the maximal invariant factor g_1, the partition (val_f(g_1), ...,
/// val_f(g_n)) with zeros dropped.
ModuleType cokernel_type(const InvariantFactors& inv, Prime p);
ModuleType cokernel_type(const MatPoly& a);

/// Type of Cok(tI - A) at f (the partition lambda^(f) of A); zero partition
/// when f does not divide the characteristic polynomial.
Partition type_at(const MatFp& a, const IrreduciblePoly& f);

/// Full type of Cok(tI - A) over all irreducibles.
ModuleType module_type_of(const MatFp& a);

/// Independent cross-check for type_at built only on rank and polynomial
/// evaluation: the conjugate partition entries are
///   lambda'_k = (rank(f(A)^(k-1)) - rank(f(A)^k)) / deg f.
/// Throws InternalCheckError if a rank difference is not divisible by deg f.
Partition type_at_rank_oracle(const MatFp& a, const IrreduciblePoly& f);

}  // namespace fpcanon

#endif  // FPCANON_POLYMAT_HPP
