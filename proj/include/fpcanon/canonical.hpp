#ifndef FPCANON_CANONICAL_HPP
#define FPCANON_CANONICAL_HPP

#include "fpcanon/polymat.hpp"

namespace fpcanon {

/// Companion matrix of a monic polynomial of degree r >= 1: superdiagonal
/// ones, last row (-a_0, ..., -a_(r-1)).
MatFp companion(const Poly& f);

struct RcfResult {
    MatFp matrix;
    ModuleType type;
};

/// Rational canonical form: one companion(f^lambda_j) block per part, blocks
/// ordered by the canonical irreducible order and parts largest first. The
/// result is the unique similarity representative under that block order.
RcfResult rcf(const MatFp& a);

/// Similarity test via equality of invariant-factor sequences of tI - A and
/// tI - B.
bool is_similar(const MatFp& a, const MatFp& b);

}  // namespace fpcanon

#endif  // FPCANON_CANONICAL_HPP
