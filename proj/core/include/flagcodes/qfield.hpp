#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "flagcodes/errors.hpp"

namespace flagcodes {

/// Element of F_q, encoded as an integer in [0, q): the base-p digits of the
/// representative are the coordinates in the polynomial basis 1, x, ..., x^{e-1}.
using FieldElement = std::uint32_t;

/// Immutable description of a finite field F_q, q = p^e <= 2^16, with
/// precomputed log/antilog tables. Copies are cheap handles onto shared state;
/// safe for unrestricted concurrent reads.
class Field {
  public:
    /// Builds (or fetches from the process-wide cache) the field with q elements.
    /// The modulus is the monic primitive polynomial of degree e over F_p whose
    /// coefficient vector (c_0,...,c_{e-1}) is greatest as a base-p integer; this
    /// fixed choice makes companion matrices and orbit codes reproducible, and it
    /// matches the degree-5 binary Singer generator used by the code fixtures.
    static Field make(std::uint32_t q);

    std::uint32_t p() const { return impl_->p; }
    std::uint32_t e() const { return impl_->e; }
    std::uint32_t q() const { return impl_->q; }

    /// Coefficients c_0..c_{e-1} of the monic modulus x^e + c_{e-1}x^{e-1} + ... + c_0,
    /// empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, long long n) const;

    /// A generator of the multiplicative group (order q-1).
    FieldElement primitive_element() const { return impl_->primitive; }

    bool operator==(const Field& other) const { return impl_ == other.impl_ || q() == other.q(); }
    bool operator!=(const Field& other) const { return !(*this == other); }

  private:
    struct Impl {
        std::uint32_t p = 0, e = 0, q = 0;
        std::vector<std::uint32_t> modulus;  // c_0..c_{e-1}, monic part implicit
        FieldElement primitive = 0;
        std::vector<std::uint32_t> exp;  // exp[i] = primitive^i, length q-1
        std::vector<std::uint32_t> log;  // log[exp[i]] = i, log[0] unused
        std::vector<std::uint32_t> negs;
    };
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    static std::shared_ptr<const Impl> build(std::uint32_t q);
    std::shared_ptr<const Impl> impl_;
};

/// Factorizes q as p^e; throws NotPrimePower unless q is a prime power >= 2.
void factor_prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& e);

inline Field make_field(std::uint32_t q) { return Field::make(q); }

/// Coefficients c_0..c_{degree-1} of the deterministically selected monic
/// primitive polynomial x^degree + sum c_i x^i over the given base field
/// (greatest base-q coefficient encoding among the primitive ones).
std::vector<FieldElement> primitive_polynomial(const Field& base, std::uint32_t degree,
                                               std::uint64_t order_cap = (1u << 22));

}  // namespace flagcodes
