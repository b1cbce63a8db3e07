#include "flagcodes/linalg.hpp"

#include <algorithm>

#include "flagcodes/errors.hpp"

namespace flagcodes {

namespace {

void rref_inplace(const Field& F, std::vector<std::vector<FieldElement>>& rows) {
    if (rows.empty()) return;
    std::size_t nr = rows.size(), nc = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i) {
            if (rows[i][c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == nr) continue;
        std::swap(rows[r], rows[piv]);
        FieldElement s = F.inv(rows[r][c]);
        if (s != 1) {
            for (auto& x : rows[r]) x = F.mul(x, s);
        }
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            FieldElement f = rows[i][c];
            for (std::size_t j = c; j < nc; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
}

std::size_t rank_packed(std::uint64_t* rows, std::size_t n) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t x = rows[i];
        for (std::size_t j = 0; j < r; ++j) {
            std::uint64_t lead = rows[j] & (~rows[j] + 1);
            if (x & lead) x ^= rows[j];
        }
        if (x) rows[r++] = x;
    }
    return r;
}

std::size_t rank_general(const Field& F, std::vector<std::vector<FieldElement>> rows) {
    rref_inplace(F, rows);
    return rows.size();
}

std::size_t pivot_of(const std::vector<FieldElement>& row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) return j;
    return row.size();
}

}  // namespace

MatrixFq MatrixFq::identity(Field field, std::size_t n) {
    MatrixFq m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

MatrixFq MatrixFq::operator*(const MatrixFq& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeMismatch("matrix product shape mismatch");
    MatrixFq out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            FieldElement a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                FieldElement prod = field_.mul(a, rhs.at(k, j));
                out.set(i, j, field_.add(out.at(i, j), prod));
            }
        }
    }
    return out;
}

std::size_t MatrixFq::rank() const {
    std::vector<std::vector<FieldElement>> rows(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        rows[i].assign(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    return rank_general(field_, std::move(rows));
}

Subspace::Subspace(Field field, std::uint32_t ambient) : field_(field), ambient_(ambient) {}

Subspace::Subspace(Field field, std::uint32_t ambient,
                   std::vector<std::vector<FieldElement>> rref_rows)
    : field_(field), ambient_(ambient), rows_(std::move(rref_rows)) {
    pack();
}

void Subspace::pack() {
    bits_.clear();
    if (field_.q() != 2) return;
    bits_.reserve(rows_.size());
    for (const auto& r : rows_) {
        std::uint64_t w = 0;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[j]) w |= std::uint64_t(1) << j;
        bits_.push_back(w);
    }
}

bool Subspace::operator<(const Subspace& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    if (rows_.size() != o.rows_.size()) return rows_.size() < o.rows_.size();
    return rows_ < o.rows_;
}

std::string Subspace::to_text() const {
    if (rows_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ';';
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) s += ',';
            s += std::to_string(rows_[i][j]);
        }
    }
    return s;
}

Subspace rref_rows(Field field, std::uint32_t ambient, std::vector<std::vector<FieldElement>> rows) {
    rref_inplace(field, rows);
    return Subspace(field, ambient, std::move(rows));
}

Subspace rref(const MatrixFq& m) {
    std::vector<std::vector<FieldElement>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rows[i].resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    }
    return rref_rows(m.field(), static_cast<std::uint32_t>(m.cols()), std::move(rows));
}

static void check_compatible(const Subspace& u, const Subspace& w) {
    if (u.ambient() != w.ambient() || u.field() != w.field())
        throw AmbientMismatch("subspaces live in different ambient spaces");
}

std::size_t sum_dim(const Subspace& u, const Subspace& w) {
    check_compatible(u, w);
    if (u.field().q() == 2) {
        std::uint64_t buf[128];
        std::size_t n = 0;
        for (auto b : u.packed()) buf[n++] = b;
        for (auto b : w.packed()) buf[n++] = b;
        return rank_packed(buf, n);
    }
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(u.dim() + w.dim());
    rows.insert(rows.end(), u.rows().begin(), u.rows().end());
    rows.insert(rows.end(), w.rows().begin(), w.rows().end());
    return rank_general(u.field(), std::move(rows));
}

std::size_t intersection_dim(const Subspace& u, const Subspace& w) {
    return u.dim() + w.dim() - sum_dim(u, w);
}

std::size_t injection_distance(const Subspace& u, const Subspace& w) {
    return std::max(u.dim(), w.dim()) - intersection_dim(u, w);
}

std::size_t subspace_distance(const Subspace& u, const Subspace& w) {
    return u.dim() + w.dim() - 2 * intersection_dim(u, w);
}

bool is_subspace_of(const Subspace& u, const Subspace& w) {
    check_compatible(u, w);
    if (u.dim() > w.dim()) return false;
    if (u.field().q() == 2) {
        for (std::uint64_t x : u.packed()) {
            for (std::uint64_t wr : w.packed()) {
                std::uint64_t lead = wr & (~wr + 1);
                if (x & lead) x ^= wr;
            }
            if (x) return false;
        }
        return true;
    }
    const Field& F = u.field();
    for (auto row : u.rows()) {
        for (const auto& wr : w.rows()) {
            std::size_t p = pivot_of(wr);
            if (row[p] != 0) {
                FieldElement f = row[p];
                for (std::size_t j = 0; j < row.size(); ++j) row[j] = F.sub(row[j], F.mul(f, wr[j]));
            }
        }
        for (auto x : row)
            if (x != 0) return false;
    }
    return true;
}

bool is_incident(const Subspace& u, const Subspace& w) {
    check_compatible(u, w);
    return intersection_dim(u, w) == std::min(u.dim(), w.dim());
}

Subspace dual(const Subspace& u) {
    const Field& F = u.field();
    std::uint32_t v = u.ambient();
    std::vector<std::size_t> pivots;
    pivots.reserve(u.dim());
    for (const auto& r : u.rows()) pivots.push_back(pivot_of(r));
    std::vector<std::vector<FieldElement>> kernel;
    for (std::size_t f = 0; f < v; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        std::vector<FieldElement> x(v, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < u.dim(); ++i) x[pivots[i]] = F.neg(u.rows()[i][f]);
        kernel.push_back(std::move(x));
    }
    return rref_rows(F, v, std::move(kernel));
}

Subspace apply(const MatrixFq& g, const Subspace& u) {
    if (g.rows() != u.ambient() || g.cols() != u.ambient())
        throw AmbientMismatch("group element has wrong shape");
    if (!g.invertible()) throw SingularMatrix("group element is singular");
    const Field& F = u.field();
    std::vector<std::vector<FieldElement>> rows(u.dim(), std::vector<FieldElement>(u.ambient(), 0));
    for (std::size_t i = 0; i < u.dim(); ++i) {
        for (std::size_t k = 0; k < u.ambient(); ++k) {
            FieldElement a = u.rows()[i][k];
            if (a == 0) continue;
            for (std::size_t j = 0; j < u.ambient(); ++j)
                rows[i][j] = F.add(rows[i][j], F.mul(a, g.at(k, j)));
        }
    }
    return rref_rows(F, u.ambient(), std::move(rows));
}

void for_each_subspace(const Field& field, std::uint32_t v, std::uint32_t k,
                       const std::function<void(const Subspace&)>& fn) {
    if (k > v) throw InvalidRange("k exceeds ambient dimension");
    if (k == 0) {
        fn(Subspace(field, v));
        return;
    }
    std::uint32_t q = field.q();
    std::vector<std::uint32_t> piv(k);
    for (std::uint32_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        // Free RREF cells for this pivot set, row-major.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> free_cells;
        for (std::uint32_t i = 0; i < k; ++i) {
            for (std::uint32_t j = piv[i] + 1; j < v; ++j) {
                if (std::find(piv.begin(), piv.end(), j) == piv.end())
                    free_cells.emplace_back(i, j);
            }
        }
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < free_cells.size(); ++i) total *= q;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<std::vector<FieldElement>> rows(k, std::vector<FieldElement>(v, 0));
            for (std::uint32_t i = 0; i < k; ++i) rows[i][piv[i]] = 1;
            std::uint64_t c = code;
            for (std::size_t t = free_cells.size(); t-- > 0;) {
                rows[free_cells[t].first][free_cells[t].second] = static_cast<FieldElement>(c % q);
                c /= q;
            }
            fn(Subspace(field, v, std::move(rows)));
        }
        // Next pivot combination in lexicographic order.
        std::int64_t i = k - 1;
        while (i >= 0 && piv[i] == v - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
}

std::vector<Subspace> enumerate_grassmannian(std::uint32_t v, std::uint32_t k, const Field& field) {
    std::vector<Subspace> out;
    for_each_subspace(field, v, k, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

namespace {

// Coordinates of the rows of u in the RREF basis of w; requires u <= w.
std::vector<std::vector<FieldElement>> coords_in(const Subspace& u, const Subspace& w) {
    const Field& F = u.field();
    std::vector<std::size_t> pivots;
    for (const auto& r : w.rows()) pivots.push_back(pivot_of(r));
    std::vector<std::vector<FieldElement>> out;
    for (auto row : u.rows()) {
        std::vector<FieldElement> coord(w.dim(), 0);
        for (std::size_t i = 0; i < w.dim(); ++i) {
            FieldElement f = row[pivots[i]];
            coord[i] = f;
            if (f != 0) {
                for (std::size_t j = 0; j < row.size(); ++j)
                    row[j] = F.sub(row[j], F.mul(f, w.rows()[i][j]));
            }
        }
        for (auto x : row)
            if (x != 0) throw ShapeMismatch("subspace is not contained in the carrier");
        out.push_back(std::move(coord));
    }
    return out;
}

}  // namespace

void for_each_between(Subspace lo, const Subspace* hi, std::uint32_t d,
                      const std::function<void(const Subspace&)>& fn) {
    const Field F = lo.field();
    std::uint32_t v = lo.ambient();
    std::uint32_t m = hi ? hi->dim() : v;
    if (d < lo.dim() || d > m) return;
    if (hi && !is_subspace_of(lo, *hi)) return;

    // Work in coordinates of the carrier (hi or the full space).
    std::vector<std::vector<FieldElement>> lo_coords =
        hi ? coords_in(lo, *hi) : lo.rows();
    Subspace lo_c = rref_rows(F, m, lo_coords);
    std::uint32_t l = lo_c.dim();

    // Complement positions: non-pivot coordinates of lo_c span the quotient.
    std::vector<std::size_t> pivots;
    for (const auto& r : lo_c.rows()) pivots.push_back(pivot_of(r));
    std::vector<std::size_t> complement;
    for (std::size_t j = 0; j < m; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) complement.push_back(j);

    for_each_subspace(F, m - l, d - l, [&](const Subspace& qsub) {
        std::vector<std::vector<FieldElement>> rows = lo_c.rows();
        for (const auto& qr : qsub.rows()) {
            std::vector<FieldElement> lifted(m, 0);
            for (std::size_t t = 0; t < complement.size(); ++t) lifted[complement[t]] = qr[t];
            rows.push_back(std::move(lifted));
        }
        if (hi) {
            // Map carrier coordinates back to ambient coordinates.
            std::vector<std::vector<FieldElement>> amb;
            for (const auto& r : rows) {
                std::vector<FieldElement> x(v, 0);
                for (std::size_t i = 0; i < m; ++i) {
                    if (r[i] == 0) continue;
                    for (std::size_t j = 0; j < v; ++j)
                        x[j] = F.add(x[j], F.mul(r[i], hi->rows()[i][j]));
                }
                amb.push_back(std::move(x));
            }
            fn(rref_rows(F, v, std::move(amb)));
        } else {
            fn(rref_rows(F, v, std::move(rows)));
        }
    });
}

std::vector<Subspace> superspaces(const Subspace& lo, std::uint32_t d) {
    std::vector<Subspace> out;
    for_each_between(lo, nullptr, d, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

std::vector<Subspace> subspaces_between(const Subspace& lo, const Subspace& hi, std::uint32_t d) {
    std::vector<Subspace> out;
    for_each_between(lo, &hi, d, [&](const Subspace& s) { out.push_back(s); });
    return out;
}

}  // namespace flagcodes
