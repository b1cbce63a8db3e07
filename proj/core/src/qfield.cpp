#include "flagcodes/qfield.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace flagcodes {

namespace {

// Polynomials over F_p as coefficient vectors, lowest degree first, no
// trailing zeros. Plain modular arithmetic: these only run at field setup.

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    // m is monic in all uses here.
    while (a.size() >= m.size()) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint32_t sub = static_cast<std::uint64_t>(lead) * m[i] % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
        }
    }
    return poly_mod(std::move(prod), m, p);
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    // Trial division against all monic polynomials of degree <= deg(f)/2.
    std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            Poly r = poly_mod(f, g, p);
            if (r.empty()) return false;
        }
    }
    return true;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

Poly decode(std::uint32_t v, std::uint32_t p) {
    Poly a;
    while (v) {
        a.push_back(v % p);
        v /= p;
    }
    return a;
}

std::uint32_t least_primitive_root(std::uint32_t p) {
    if (p == 2) return 1;
    for (std::uint32_t g = 2; g < p; ++g) {
        std::uint32_t x = g;
        std::uint32_t order = 1;
        while (x != 1) {
            x = static_cast<std::uint64_t>(x) * g % p;
            ++order;
        }
        if (order == p - 1) return g;
    }
    throw Error("no primitive root found");  // unreachable for prime p
}

}  // namespace

void factor_prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& e) {
    if (q < 2) throw NotPrimePower("q must be at least 2");
    std::uint32_t n = q;
    std::uint32_t base = 0;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            base = d;
            break;
        }
    }
    if (base == 0) {
        p = q;
        e = 1;
        return;
    }
    e = 0;
    while (n % base == 0) {
        n /= base;
        ++e;
    }
    if (n != 1) throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power");
    p = base;
}

std::shared_ptr<const Field::Impl> Field::build(std::uint32_t q) {
    if (q > (1u << 16)) throw TooLarge("field size exceeds 2^16");
    std::uint32_t p = 0, e = 0;
    factor_prime_power(q, p, e);

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->e = e;
    impl->q = q;
    impl->exp.assign(q - 1, 0);
    impl->log.assign(q, 0);
    impl->negs.assign(q, 0);

    if (e == 1) {
        impl->primitive = least_primitive_root(p);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < q - 1; ++i) {
            impl->exp[i] = x;
            impl->log[x] = i;
            x = static_cast<std::uint64_t>(x) * impl->primitive % p;
        }
        for (std::uint32_t a = 0; a < q; ++a) impl->negs[a] = (p - a) % p;
        return impl;
    }

    // Scan monic degree-e coefficient vectors from the greatest base-p encoding
    // downwards for the first primitive one; x is then a generator and the exp
    // table falls out of the primitivity walk itself.
    std::uint64_t space = 1;
    for (std::uint32_t i = 0; i < e; ++i) space *= p;
    for (std::uint64_t code = space; code-- > 0;) {
        Poly f = decode(static_cast<std::uint32_t>(code), p);
        f.resize(e, 0);
        f.push_back(1);
        if (f[0] == 0) continue;  // x | f, reducible
        if (!is_irreducible(f, p)) continue;

        Poly x = {0, 1};
        Poly y = {1};
        bool primitive = true;
        std::vector<std::uint32_t> exps(q - 1, 0);
        std::vector<char> seen(q, 0);
        for (std::uint32_t i = 0; i < q - 1; ++i) {
            std::uint32_t rep = encode(y, p);
            if (rep == 0 || seen[rep]) {
                primitive = false;
                break;
            }
            seen[rep] = 1;
            exps[i] = rep;
            y = poly_mul_mod(y, x, f, p);
        }
        if (!primitive || encode(y, p) != 1) continue;

        impl->modulus.assign(f.begin(), f.begin() + e);
        impl->primitive = p;  // rep of x: digits (0,1,0,...) = p
        impl->exp = std::move(exps);
        for (std::uint32_t i = 0; i < q - 1; ++i) impl->log[impl->exp[i]] = i;
        for (std::uint32_t a = 0; a < q; ++a) {
            Poly da = decode(a, p);
            for (auto& c : da) c = (p - c) % p;
            impl->negs[a] = encode(da, p);
        }
        return impl;
    }
    throw Error("no primitive polynomial found");  // unreachable
}

Field Field::make(std::uint32_t q) {
    static std::mutex mu;
    static std::map<std::uint32_t, std::shared_ptr<const Impl>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, build(q)).first;
    return Field(it->second);
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    const auto& f = *impl_;
    if (f.e == 1) return (a + b) % f.p;
    if (f.p == 2) return a ^ b;
    FieldElement r = 0, scale = 1;
    while (a || b) {
        r += (a % f.p + b % f.p) % f.p * scale;
        a /= f.p;
        b /= f.p;
        scale *= f.p;
    }
    return r;
}

FieldElement Field::neg(FieldElement a) const { return impl_->negs[a]; }

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (a == 0 || b == 0) return 0;
    const auto& f = *impl_;
    std::uint32_t s = f.log[a] + f.log[b];
    if (s >= f.q - 1) s -= f.q - 1;
    return f.exp[s];
}

FieldElement Field::inv(FieldElement a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    const auto& f = *impl_;
    return f.exp[(f.q - 1 - f.log[a]) % (f.q - 1)];
}

FieldElement Field::pow(FieldElement a, long long n) const {
    const auto& f = *impl_;
    if (a == 0) {
        if (n < 0) throw DivisionByZero("inverse of zero");
        return n == 0 ? 1 : 0;
    }
    long long m = static_cast<long long>(f.q) - 1;
    long long k = (static_cast<long long>(f.log[a]) * (n % m)) % m;
    if (k < 0) k += m;
    return f.exp[k];
}

std::vector<FieldElement> primitive_polynomial(const Field& base, std::uint32_t degree,
                                               std::uint64_t order_cap) {
    if (degree < 1) throw InvalidRange("primitive polynomial needs degree >= 1");
    std::uint64_t q = base.q();
    std::uint64_t space = 1;
    for (std::uint32_t i = 0; i < degree; ++i) {
        space *= q;
        if (space > order_cap) throw TooLarge("extension order exceeds cap");
    }
    for (std::uint64_t code = space; code-- > 0;) {
        std::vector<FieldElement> c(degree);
        std::uint64_t t = code;
        for (std::uint32_t i = 0; i < degree; ++i) {
            c[i] = static_cast<FieldElement>(t % q);
            t /= q;
        }
        if (c[0] == 0) continue;  // x divides f
        // x must have multiplicative order exactly q^degree - 1 in F_q[x]/(f).
        std::vector<FieldElement> y(degree, 0);
        y[0] = 1;
        std::uint64_t order = 0;
        for (std::uint64_t i = 1; i < space; ++i) {
            FieldElement lead = y[degree - 1];
            for (std::uint32_t j = degree - 1; j > 0; --j) y[j] = y[j - 1];
            y[0] = 0;
            if (lead != 0)
                for (std::uint32_t j = 0; j < degree; ++j) y[j] = base.sub(y[j], base.mul(lead, c[j]));
            bool is_one = (y[0] == 1);
            for (std::uint32_t j = 1; j < degree && is_one; ++j) is_one = (y[j] == 0);
            if (is_one) {
                order = i;
                break;
            }
        }
        if (order == space - 1) return c;
    }
    throw Error("no primitive polynomial of the requested degree");
}

}  // namespace flagcodes
