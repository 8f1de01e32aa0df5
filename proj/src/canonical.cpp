#include "fpcanon/canonical.hpp"

namespace fpcanon {

MatFp companion(const Poly& f) {
    if (!f.is_monic() || f.is_constant()) {
        throw DomainError("companion requires a monic polynomial of degree >= 1");
    }
    const int r = f.degree();
    const Prime p = f.prime();
    MatFp c(p, r, r);
    for (int i = 0; i + 1 < r; ++i) c.set(i, i + 1, 1);
    for (int j = 0; j < r; ++j) c.set(r - 1, j, fp_neg(f.coeff(j), p.value()));
    return c;
}

namespace {

Poly poly_power(const Poly& f, uint32_t e) {
    Poly out = Poly::one(f.prime());
    for (uint32_t i = 0; i < e; ++i) out = out * f;
    return out;
}

void place_block(MatFp& dst, const MatFp& block, int offset) {
    for (int i = 0; i < block.rows(); ++i) {
        for (int j = 0; j < block.cols(); ++j) dst.set(offset + i, offset + j, block.at(i, j));
    }
}

}  // namespace

RcfResult rcf(const MatFp& a) {
    if (!a.is_square()) throw ShapeError("rcf requires a square matrix");
    ModuleType type = module_type_of(a);
    MatFp out(a.prime(), a.rows(), a.rows());
    int offset = 0;
    // Map keys are already in the canonical irreducible order; parts are
    // stored largest first.
    for (const auto& [f, lambda] : type.entries()) {
        for (uint32_t part : lambda.parts()) {
            const MatFp block = companion(poly_power(f, part));
            place_block(out, block, offset);
            offset += block.rows();
        }
    }
    if (offset != a.rows()) {
        throw InternalCheckError("rcf blocks do not fill the matrix");
    }
    return {std::move(out), std::move(type)};
}

bool is_similar(const MatFp& a, const MatFp& b) {
    if (!a.is_square() || !b.is_square()) throw ShapeError("is_similar requires square matrices");
    require_same_prime(a.prime(), b.prime(), "is_similar");
    if (a.rows() != b.rows()) {
        throw ShapeError("is_similar: size mismatch (" + std::to_string(a.rows()) + " vs " +
                         std::to_string(b.rows()) + ")");
    }
    if (a.rows() == 0) return true;
    return smith_normal_form(MatPoly::char_matrix(a)) ==
           smith_normal_form(MatPoly::char_matrix(b));
}

}  // namespace fpcanon
