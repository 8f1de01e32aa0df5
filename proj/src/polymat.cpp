#include "fpcanon/polymat.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace fpcanon {

namespace {

// The Smith normal form loop works on raw coefficient vectors (lowest degree
// first, trimmed, empty = zero) to keep the per-sample cost of experiment
// pipelines down.
using Raw = std::vector<uint8_t>;

void raw_trim(Raw& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int raw_deg(const Raw& a) { return int(a.size()) - 1; }  // -1 for zero

// a -= q * b
void raw_submul(Raw& a, const Raw& q, const Raw& b, uint32_t p) {
    if (q.empty() || b.empty()) return;
    const size_t need = q.size() + b.size() - 1;
    if (a.size() < need) a.resize(need, 0);
    for (size_t i = 0; i < q.size(); ++i) {
        const uint32_t qi = q[i];
        if (qi == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            uint8_t& dst = a[i + j];
            dst = fp_sub(dst, uint8_t(qi * b[j] % p), p);
        }
    }
    raw_trim(a);
}

// a mod b in place; returns the quotient.
Raw raw_divrem(Raw& a, const Raw& b, uint32_t p) {
    const int db = raw_deg(b);
    Raw q;
    if (raw_deg(a) < db) return q;
    q.assign(a.size() - b.size() + 1, 0);
    const uint8_t lead_inv = fp_inv(b.back(), p);
    for (int k = raw_deg(a); k >= db; --k) {
        const uint8_t r = a[size_t(k)];
        if (r == 0) continue;
        const uint8_t f = fp_mul(r, lead_inv, p);
        q[size_t(k - db)] = f;
        for (int i = 0; i <= db; ++i) {
            a[size_t(k - db + i)] = fp_sub(a[size_t(k - db + i)], fp_mul(f, b[size_t(i)], p), p);
        }
    }
    a.resize(size_t(db) < a.size() ? size_t(db) : a.size());
    raw_trim(a);
    return q;
}

bool raw_divides(const Raw& d, const Raw& a, uint32_t p) {
    if (a.empty()) return true;
    Raw r = a;
    raw_divrem(r, d, p);
    return r.empty();
}

struct SnfWork {
    int n;
    uint32_t p;
    std::vector<Raw> w;  // row-major n*n

    Raw& at(int i, int j) { return w[size_t(i) * n + j]; }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < n; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < n; ++i) std::swap(at(i, a), at(i, b));
    }
    void scale_row(int i, uint8_t c, int from_col) {
        for (int j = from_col; j < n; ++j) {
            for (auto& x : at(i, j)) x = fp_mul(x, c, p);
        }
    }
    // row i -= q * row s (columns >= from_col)
    void row_submul(int i, int s, const Raw& q, int from_col) {
        for (int j = from_col; j < n; ++j) raw_submul(at(i, j), q, at(s, j), p);
    }
    // col j -= q * col s (rows >= from_row)
    void col_submul(int j, int s, const Raw& q, int from_row) {
        for (int i = from_row; i < n; ++i) raw_submul(at(i, j), q, at(i, s), p);
    }
};

// Smallest-degree nonzero entry in the trailing submatrix, ties by lowest
// (row, col); returns false when the submatrix is zero.
bool find_pivot(SnfWork& m, int s, int& pi, int& pj) {
    int best = -1;
    for (int i = s; i < m.n; ++i) {
        for (int j = s; j < m.n; ++j) {
            const int d = raw_deg(m.at(i, j));
            if (d < 0) continue;
            if (best < 0 || d < best) {
                best = d;
                pi = i;
                pj = j;
                if (best == 0) return true;  // cannot improve on a unit
            }
        }
    }
    return best >= 0;
}

void make_pivot_monic(SnfWork& m, int s) {
    const uint8_t lead = m.at(s, s).back();
    if (lead != 1) m.scale_row(s, fp_inv(lead, m.p), s);
}

}  // namespace

MatPoly::MatPoly(Prime p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw ShapeError("matrix dimensions must be positive");
    e_.assign(size_t(rows) * size_t(cols), Poly::zero(p));
}

void MatPoly::set(int i, int j, Poly v) {
    require_same_prime(p_, v.prime(), "MatPoly::set");
    e_[size_t(i) * cols_ + j] = std::move(v);
}

MatPoly MatPoly::diagonal(Prime p, const std::vector<Poly>& diag) {
    MatPoly m(p, int(diag.size()), int(diag.size()));
    for (size_t i = 0; i < diag.size(); ++i) m.set(int(i), int(i), diag[i]);
    return m;
}

MatPoly MatPoly::char_matrix(const MatFp& a) {
    if (!a.is_square()) throw ShapeError("char_matrix requires a square matrix");
    const Prime p = a.prime();
    MatPoly m(p, a.rows(), a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.rows(); ++j) {
            std::vector<uint8_t> c{fp_neg(a.at(i, j), p.value())};
            if (i == j) c.push_back(1);
            m.set(i, j, Poly(p, std::move(c)));
        }
    }
    return m;
}

InvariantFactors smith_normal_form(const MatPoly& a) {
    if (a.rows() != a.cols()) throw ShapeError("smith_normal_form requires a square matrix");
    const int n = a.rows();
    const uint32_t p = a.prime().value();

    SnfWork m{n, p, {}};
    m.w.reserve(size_t(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.w.push_back(a.at(i, j).coeffs());
    }

    for (int s = 0; s < n; ++s) {
        int pi = s, pj = s;
        if (!find_pivot(m, s, pi, pj)) {
            throw SingularMatrixError("singular matrix: zero invariant factor (infinite cokernel)");
        }
        m.swap_rows(s, pi);
        m.swap_cols(s, pj);
        make_pivot_monic(m, s);

        for (;;) {
            // Clear column s with row operations; remainders have strictly
            // smaller degree than the pivot and, if present, become the next
            // pivot.
            bool repivot = false;
            for (int i = s + 1; i < n; ++i) {
                if (m.at(i, s).empty()) continue;
                Raw q = raw_divrem(m.at(i, s), m.at(s, s), p);
                // The (i, s) entry already holds its remainder; apply the
                // same combination to the rest of the row.
                m.row_submul(i, s, q, s + 1);
                if (!m.at(i, s).empty()) repivot = true;
            }
            if (repivot) {
                int bi = -1, bd = -1;
                for (int i = s; i < n; ++i) {
                    const int d = raw_deg(m.at(i, s));
                    if (d >= 0 && (bd < 0 || d < bd)) {
                        bd = d;
                        bi = i;
                    }
                }
                m.swap_rows(s, bi);
                make_pivot_monic(m, s);
                continue;
            }
            bool col_repivot = false;
            for (int j = s + 1; j < n; ++j) {
                if (m.at(s, j).empty()) continue;
                Raw q = raw_divrem(m.at(s, j), m.at(s, s), p);
                m.col_submul(j, s, q, s + 1);
                if (!m.at(s, j).empty()) col_repivot = true;
            }
            if (col_repivot) {
                int bj = -1, bd = -1;
                for (int j = s; j < n; ++j) {
                    const int d = raw_deg(m.at(s, j));
                    if (d >= 0 && (bd < 0 || d < bd)) {
                        bd = d;
                        bj = j;
                    }
                }
                m.swap_cols(s, bj);
                make_pivot_monic(m, s);
                continue;
            }

            // Row and column are clear. Enforce that the pivot divides the
            // remaining submatrix; a violating row is folded into row s,
            // which strictly decreases the pivot degree on the next pass.
            int vi = -1, vj = -1;
            for (int i = s + 1; i < n && vi < 0; ++i) {
                for (int j = s + 1; j < n; ++j) {
                    if (!raw_divides(m.at(s, s), m.at(i, j), p)) {
                        vi = i;
                        vj = j;
                        break;
                    }
                }
            }
            if (vi < 0) break;
            for (int j = s + 1; j < n; ++j) {
                Raw& dst = m.at(s, j);
                const Raw& src = m.at(vi, j);
                if (src.empty()) continue;
                if (dst.size() < src.size()) dst.resize(src.size(), 0);
                for (size_t k = 0; k < src.size(); ++k) dst[k] = fp_add(dst[k], src[k], p);
                raw_trim(dst);
            }
        }
    }

    InvariantFactors out;
    out.factors.reserve(size_t(n));
    // The elimination produces the ascending chain d_1 | d_2 | ...; public
    // order is the descending one, g_1 = d_n.
    for (int i = n - 1; i >= 0; --i) {
        out.factors.emplace_back(a.prime(), m.at(i, i));
    }
    return out;
}

namespace {
// Fixed seed for the factorizations performed inside cokernel_type; any value
// works, determinism is what matters.
constexpr uint64_t kCokernelFactorSeed = 0xc0cec0de5eedULL;
}  // namespace

ModuleType cokernel_type(const InvariantFactors& inv, Prime p) {
    ModuleType out(p);
    if (inv.factors.empty()) return out;
    const Poly& top = inv.factors.front();
    if (top.degree() <= 0) return out;  // unit cokernel
    for (const auto& [f, e] : factor(top, kCokernelFactorSeed)) {
        (void)e;
        std::vector<uint32_t> parts;
        for (const Poly& g : inv.factors) {
            if (g.degree() <= 0) break;
            const int v = val_of(g, f);
            if (v == 0) break;  // descending chain: later factors have v = 0 too
            parts.push_back(uint32_t(v));
        }
        out.set(f, Partition(std::move(parts)));
    }
    return out;
}

ModuleType cokernel_type(const MatPoly& a) {
    return cokernel_type(smith_normal_form(a), a.prime());
}

Partition type_at(const MatFp& a, const IrreduciblePoly& f) {
    require_same_prime(a.prime(), f.prime(), "type_at");
    if (!a.is_square()) throw ShapeError("type_at requires a square matrix");
    if (a.rows() == 0) return {};
    auto inv = smith_normal_form(MatPoly::char_matrix(a));
    std::vector<uint32_t> parts;
    for (const Poly& g : inv.factors) {
        const int v = g.degree() > 0 ? val_of(g, f) : 0;
        if (v == 0) break;
        parts.push_back(uint32_t(v));
    }
    return Partition(std::move(parts));
}

ModuleType module_type_of(const MatFp& a) {
    if (!a.is_square()) throw ShapeError("module_type_of requires a square matrix");
    if (a.rows() == 0) return ModuleType(a.prime());
    return cokernel_type(smith_normal_form(MatPoly::char_matrix(a)), a.prime());
}

Poly charpoly(const MatFp& a) {
    if (!a.is_square()) throw ShapeError("charpoly requires a square matrix");
    if (a.rows() == 0) return Poly::one(a.prime());
    auto inv = smith_normal_form(MatPoly::char_matrix(a));
    Poly out = Poly::one(a.prime());
    for (const Poly& g : inv.factors) out = out * g;
    return out;
}

Partition type_at_rank_oracle(const MatFp& a, const IrreduciblePoly& f) {
    require_same_prime(a.prime(), f.prime(), "type_at_rank_oracle");
    if (!a.is_square()) throw ShapeError("type_at_rank_oracle requires a square matrix");
    const int degf = f.degree();
    const MatFp b = mat_poly_eval(f.poly(), a);
    std::vector<uint32_t> conj;
    int prev_rank = a.rows();
    MatFp power = b;
    for (;;) {
        const int r = rank(power);
        const int drop = prev_rank - r;
        if (drop == 0) break;
        if (drop % degf != 0) {
            throw InternalCheckError("rank oracle: rank drop not divisible by deg f");
        }
        conj.push_back(uint32_t(drop / degf));
        prev_rank = r;
        if (r == 0) break;
        power = power * b;
    }
    return Partition(std::move(conj)).conjugate();
}

MatPoly MatPoly::parse(std::istream& in) {
    uint32_t p = 0;
    int rows = 0, cols = 0;
    if (!(in >> p >> rows >> cols)) throw ParseError("matrix header must be 'p rows cols'");
    if (rows <= 0 || cols <= 0 || rows > 1024 || cols > 1024) {
        throw ParseError("unreasonable matrix dimensions");
    }
    Prime prime(p);
    MatPoly m(prime, rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            char ch = 0;
            if (!(in >> ch) || ch != '"') {
                throw ParseError("expected '\"' before polynomial entry");
            }
            std::string body;
            while (in.get(ch) && ch != '"') body.push_back(ch);
            if (ch != '"') throw ParseError("unterminated polynomial entry");
            m.set(i, j, Poly::parse_coeffs(prime, body));
        }
    }
    return m;
}

std::string MatPoly::to_text() const {
    std::ostringstream os;
    os << p_.value() << ' ' << rows_ << ' ' << cols_ << '\n';
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << '"' << at(i, j).to_coeff_string() << '"';
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace fpcanon
