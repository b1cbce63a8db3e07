#include "flagcodes/qcombin.hpp"

#include <map>
#include <mutex>

namespace flagcodes {

namespace mp = boost::multiprecision;

QPolynomial::QPolynomial(std::initializer_list<long long> ascending) {
    for (auto v : ascending) c_.emplace_back(v);
    trim();
}

QPolynomial::QPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

QPolynomial QPolynomial::constant(BigInt c) {
    QPolynomial p;
    p.c_.push_back(std::move(c));
    p.trim();
    return p;
}

QPolynomial QPolynomial::monomial(BigInt c, std::size_t d) {
    QPolynomial p;
    if (c != 0) {
        p.c_.assign(d + 1, BigInt(0));
        p.c_[d] = std::move(c);
    }
    return p;
}

void QPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return QPolynomial(std::move(r));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return QPolynomial(std::move(r));
}

BigInt QPolynomial::evaluate(const BigInt& q) const {
    BigInt r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * q + c_[i];
    return r;
}

std::string QPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const BigInt& c = c_[i];
        if (c == 0) continue;
        BigInt a = mp::abs(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        bool unit = (a == 1);
        if (i == 0) {
            s += a.str();
        } else {
            if (!unit) s += a.str();
            s += "q";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

namespace {

// Division over Q with exactness tracking: returns true and the quotient when
// b | a with an integer-coefficient quotient.
bool try_divide(const QPolynomial& a, const QPolynomial& b, QPolynomial& quotient) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) {
        quotient = QPolynomial();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<BigRational> rem(a.coeffs().size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = BigRational(a.coeffs()[i]);
    std::size_t qdeg = a.degree() - b.degree();
    std::vector<BigRational> quot(qdeg + 1);
    BigRational lead(b.leading());
    for (std::size_t i = qdeg + 1; i-- > 0;) {
        BigRational c = rem[i + b.degree()] / lead;
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= b.degree(); ++j) rem[i + j] -= c * BigRational(b.coeffs()[j]);
    }
    for (const auto& r : rem)
        if (r != 0) return false;
    std::vector<BigInt> qi(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (mp::denominator(quot[i]) != 1) return false;
        qi[i] = mp::numerator(quot[i]);
    }
    quotient = QPolynomial(std::move(qi));
    return true;
}

BigInt content(const QPolynomial& p) {
    BigInt g = 0;
    for (const auto& c : p.coeffs()) g = mp::gcd(g, c);
    return g;
}

QPolynomial scale(const QPolynomial& p, const BigInt& s) {
    std::vector<BigInt> c = p.coeffs();
    for (auto& x : c) x *= s;
    return QPolynomial(std::move(c));
}

QPolynomial divide_content(const QPolynomial& p, const BigInt& s) {
    std::vector<BigInt> c = p.coeffs();
    for (auto& x : c) x /= s;
    return QPolynomial(std::move(c));
}

QPolynomial primitive_part(const QPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    QPolynomial out = divide_content(p, g);
    if (out.leading() < 0) out = scale(out, BigInt(-1));
    return out;
}

// Pseudo-remainder of a by b (both nonzero, deg a >= deg b).
QPolynomial pseudo_rem(QPolynomial a, const QPolynomial& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        std::size_t shift = a.degree() - b.degree();
        QPolynomial t = QPolynomial::monomial(a.leading(), shift) * b;
        a = scale(a, b.leading()) - t;
    }
    return a;
}

}  // namespace

QPolynomial divide_exact(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial q;
    if (!try_divide(a, b, q)) throw InexactDivision("polynomial division leaves a remainder");
    return q;
}

QPolynomial poly_gcd(QPolynomial a, QPolynomial b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        if (a.degree() < b.degree()) std::swap(a, b);
        QPolynomial r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(a);
}

QRational::QRational(QPolynomial num, QPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DenominatorZero("rational with zero denominator");
    if (num_.is_zero()) {
        den_ = QPolynomial::constant(1);
        return;
    }
    QPolynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0 || g.leading() != 1) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    BigInt cn = content(num_), cd = content(den_);
    BigInt c = mp::gcd(cn, cd);
    if (c > 1) {
        num_ = divide_content(num_, c);
        den_ = divide_content(den_, c);
    }
    if (den_.leading() < 0) {
        num_ = scale(num_, BigInt(-1));
        den_ = scale(den_, BigInt(-1));
    }
}

bool QRational::is_polynomial() const { return den_.degree() == 0 && den_.leading() == 1; }

QRational QRational::operator*(const QRational& o) const {
    return QRational(num_ * o.num_, den_ * o.den_);
}

QRational QRational::operator/(const QRational& o) const {
    if (o.num_.is_zero()) throw DivisionByZero("division by zero rational");
    return QRational(num_ * o.den_, den_ * o.num_);
}

QRational QRational::operator+(const QRational& o) const {
    return QRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

BigRational QRational::evaluate(const BigInt& q) const {
    BigInt d = den_.evaluate(q);
    if (d == 0) throw DenominatorZero("denominator vanishes at q");
    return BigRational(num_.evaluate(q), d);
}

BigInt QRational::evaluate_floor(const BigInt& q) const {
    BigRational r = evaluate(q);
    BigInt n = mp::numerator(r), d = mp::denominator(r);
    BigInt fl = n / d;
    if (n < 0 && n % d != 0) --fl;
    return fl;
}

std::string QRational::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

const QPolynomial& gaussian_binomial(std::uint32_t v, std::uint32_t k) {
    if (k > v) throw InvalidRange("gaussian binomial with k > v");
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, QPolynomial> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({v, k});
    if (it != cache.end()) return it->second;
    // Fill the whole triangle up to v via [n j] = [n-1 j-1] + q^j [n-1 j].
    for (std::uint32_t n = 0; n <= v; ++n) {
        for (std::uint32_t j = 0; j <= n; ++j) {
            if (cache.count({n, j})) continue;
            QPolynomial val;
            if (j == 0 || j == n) {
                val = QPolynomial::constant(1);
            } else {
                val = cache.at({n - 1, j - 1}) +
                      QPolynomial::monomial(1, j) * cache.at({n - 1, j});
            }
            cache.emplace(std::make_pair(n, j), std::move(val));
        }
    }
    return cache.at({v, k});
}

QPolynomial count_flags_symbolic(std::uint32_t v, const FlagType& type) {
    QPolynomial p = gaussian_binomial(v, type.dims[0]);
    for (std::size_t i = 1; i < type.dims.size(); ++i)
        p = p * gaussian_binomial(v - type.dims[i - 1], type.dims[i] - type.dims[i - 1]);
    return p;
}

BigInt evaluate(const QPolynomial& p, std::uint32_t q) { return p.evaluate(BigInt(q)); }

BigRational evaluate(const QRational& r, std::uint32_t q) { return r.evaluate(BigInt(q)); }

}  // namespace flagcodes
