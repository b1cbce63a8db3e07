#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "flagcodes/qfield.hpp"

namespace flagcodes {

/// Dense row-major matrix over F_q. Immutable by convention once built.
class MatrixFq {
  public:
    MatrixFq(Field field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static MatrixFq identity(Field field, std::size_t n);

    FieldElement at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, FieldElement v) { a_[i * cols_ + j] = v; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }
    const std::vector<FieldElement>& data() const { return a_; }

    MatrixFq operator*(const MatrixFq& rhs) const;
    bool operator==(const MatrixFq& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_ && field_ == rhs.field_;
    }

    std::size_t rank() const;
    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

/// A k-dimensional subspace of F_q^v held as its reduced row echelon basis.
/// Two Subspace values are equal exactly when their RREF matrices agree, so
/// equality, ordering and hashing are structural.
class Subspace {
  public:
    Subspace(Field field, std::uint32_t ambient);  // zero space
    Subspace(Field field, std::uint32_t ambient, std::vector<std::vector<FieldElement>> rref_rows);

    std::uint32_t ambient() const { return ambient_; }
    std::uint32_t dim() const { return static_cast<std::uint32_t>(rows_.size()); }
    const Field& field() const { return field_; }
    const std::vector<std::vector<FieldElement>>& rows() const { return rows_; }
    /// Bit-packed rows, only populated for q = 2.
    const std::vector<std::uint64_t>& packed() const { return bits_; }

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && rows_ == o.rows_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const;

    /// "1,0,0,1;0,1,1,0" row/entry text form; dim-0 space prints "0".
    std::string to_text() const;

  private:
    Field field_;
    std::uint32_t ambient_;
    std::vector<std::vector<FieldElement>> rows_;
    std::vector<std::uint64_t> bits_;
    void pack();
    friend Subspace rref_rows_unchecked(Field, std::uint32_t, std::vector<std::vector<FieldElement>>);
};

/// Canonicalizes the row space of m.
Subspace rref(const MatrixFq& m);
Subspace rref_rows(Field field, std::uint32_t ambient, std::vector<std::vector<FieldElement>> rows);

std::size_t sum_dim(const Subspace& u, const Subspace& w);
std::size_t intersection_dim(const Subspace& u, const Subspace& w);
std::size_t injection_distance(const Subspace& u, const Subspace& w);
std::size_t subspace_distance(const Subspace& u, const Subspace& w);

/// U <= W as sets.
bool is_subspace_of(const Subspace& u, const Subspace& w);
/// U <= W or W <= U.
bool is_incident(const Subspace& u, const Subspace& w);

/// Orthogonal complement w.r.t. the standard dot product.
Subspace dual(const Subspace& u);

/// Row-space image of U under g (row-vector convention, right action).
Subspace apply(const MatrixFq& g, const Subspace& u);

/// Streams every k-space of F_q^v exactly once in a fixed canonical order
/// (pivot-column sets lexicographically, then free RREF entries counted up).
void for_each_subspace(const Field& field, std::uint32_t v, std::uint32_t k,
                       const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> enumerate_grassmannian(std::uint32_t v, std::uint32_t k, const Field& field);

/// All d-dimensional X with lo <= X (and X <= hi when hi is non-null).
/// lo is taken by value: callbacks may safely invalidate the caller's storage.
void for_each_between(Subspace lo, const Subspace* hi, std::uint32_t d,
                      const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> superspaces(const Subspace& lo, std::uint32_t d);
std::vector<Subspace> subspaces_between(const Subspace& lo, const Subspace& hi, std::uint32_t d);

}  // namespace flagcodes
