#include "fpcanon/matfp.hpp"

#include <istream>
#include <sstream>

namespace fpcanon {

MatFp::MatFp(Prime p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    e_.assign(size_t(rows) * size_t(cols), 0);
}

MatFp::MatFp(Prime p, int rows, int cols, std::vector<uint8_t> entries)
    : p_(p), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    if (e_.size() != size_t(rows) * size_t(cols)) {
        throw ShapeError("entry count does not match dimensions");
    }
    for (uint8_t x : e_) {
        if (x >= p.value()) throw DomainError("matrix entry out of range");
    }
}

MatFp MatFp::identity(Prime p, int n) {
    MatFp m(p, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatFp MatFp::operator+(const MatFp& rhs) const {
    require_same_prime(p_, rhs.p_, "matrix add");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix add: shape mismatch");
    MatFp out(p_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = fp_add(e_[i], rhs.e_[i], p_.value());
    return out;
}

MatFp MatFp::operator-(const MatFp& rhs) const {
    require_same_prime(p_, rhs.p_, "matrix sub");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix sub: shape mismatch");
    MatFp out(p_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = fp_sub(e_[i], rhs.e_[i], p_.value());
    return out;
}

MatFp MatFp::operator*(const MatFp& rhs) const {
    require_same_prime(p_, rhs.p_, "matrix mul");
    if (cols_ != rhs.rows_) throw ShapeError("matrix mul: inner dimension mismatch");
    MatFp out(p_, rows_, rhs.cols_);
    const uint32_t p = p_.value();
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const uint8_t aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                out.set(i, j, fp_add(out.at(i, j), fp_mul(aik, rhs.at(k, j), p), p));
            }
        }
    }
    return out;
}

MatFp MatFp::transpose() const {
    MatFp out(p_, cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    }
    return out;
}

int echelonize(std::vector<std::vector<uint8_t>>& rows, int width, uint32_t p) {
    int rank = 0;
    for (int col = 0; col < width && rank < int(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < int(rows.size()); ++r) {
            if (rows[size_t(r)][size_t(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[size_t(pivot)], rows[size_t(rank)]);
        auto& prow = rows[size_t(rank)];
        const uint8_t inv = fp_inv(prow[size_t(col)], p);
        if (inv != 1) {
            for (int j = col; j < width; ++j) prow[size_t(j)] = fp_mul(prow[size_t(j)], inv, p);
        }
        for (int r = 0; r < int(rows.size()); ++r) {
            if (r == rank) continue;
            const uint8_t f = rows[size_t(r)][size_t(col)];
            if (f == 0) continue;
            auto& row = rows[size_t(r)];
            for (int j = col; j < width; ++j) {
                row[size_t(j)] = fp_sub(row[size_t(j)], fp_mul(f, prow[size_t(j)], p), p);
            }
        }
        ++rank;
    }
    return rank;
}

int rank(const MatFp& a) {
    std::vector<std::vector<uint8_t>> rows(size_t(a.rows()));
    for (int i = 0; i < a.rows(); ++i) {
        rows[size_t(i)].assign(a.entries().begin() + size_t(i) * a.cols(),
                               a.entries().begin() + size_t(i + 1) * a.cols());
    }
    return echelonize(rows, a.cols(), a.prime().value());
}

std::vector<std::vector<uint8_t>> nullspace_basis(std::vector<std::vector<uint8_t>> rows,
                                                  int n, uint32_t p) {
    echelonize(rows, n, p);
    // Identify pivot columns of the reduced form.
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot(size_t(n), false);
    for (const auto& row : rows) {
        int col = -1;
        for (int j = 0; j < n; ++j) {
            if (row[size_t(j)] != 0) {
                col = j;
                break;
            }
        }
        if (col >= 0) {
            pivot_col_of_row.push_back(col);
            is_pivot[size_t(col)] = true;
        }
    }
    std::vector<std::vector<uint8_t>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[size_t(free)]) continue;
        std::vector<uint8_t> v(size_t(n), 0);
        v[size_t(free)] = 1;
        // Back-substitute: rows are fully reduced, so pivot rows read off
        // directly.
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            const int pc = pivot_col_of_row[r];
            const uint8_t coeff = rows[r][size_t(free)];
            if (coeff != 0) v[size_t(pc)] = fp_neg(coeff, p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

MatFp mat_poly_eval(const Poly& g, const MatFp& a) {
    require_same_prime(g.prime(), a.prime(), "mat_poly_eval");
    if (!a.is_square()) throw ShapeError("mat_poly_eval requires a square matrix");
    const int n = a.rows();
    MatFp acc(a.prime(), n, n);
    for (int i = g.degree(); i >= 0; --i) {
        acc = acc * a;
        const uint8_t c = g.coeff(i);
        if (c != 0) {
            for (int d = 0; d < n; ++d) acc.set(d, d, fp_add(acc.at(d, d), c, a.prime().value()));
        }
    }
    return acc;
}

bool is_invertible(const MatFp& a) { return a.is_square() && rank(a) == a.rows(); }

MatFp MatFp::parse(std::istream& in) {
    uint32_t p = 0;
    int rows = 0, cols = 0;
    if (!(in >> p >> rows >> cols)) throw ParseError("matrix header must be 'p rows cols'");
    if (rows < 0 || cols < 0 || rows > 4096 || cols > 4096) {
        throw ParseError("unreasonable matrix dimensions");
    }
    Prime prime(p);
    std::vector<uint8_t> e;
    e.reserve(size_t(rows) * size_t(cols));
    for (long k = 0; k < long(rows) * cols; ++k) {
        long v = 0;
        if (!(in >> v)) throw ParseError("matrix body ended early");
        if (v < 0 || v >= long(p)) {
            throw ParseError("matrix entry " + std::to_string(v) + " out of range for F_" +
                             std::to_string(p));
        }
        e.push_back(uint8_t(v));
    }
    return MatFp(prime, rows, cols, std::move(e));
}

MatFp MatFp::parse(const std::string& text) {
    std::istringstream is(text);
    return parse(is);
}

std::string MatFp::to_text() const {
    std::ostringstream os;
    os << p_.value() << ' ' << rows_ << ' ' << cols_ << '\n';
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << int(at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace fpcanon
