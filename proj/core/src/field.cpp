#include "fdrc/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fdrc {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 32;
constexpr std::uint64_t kTableMax = 1024;

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Arithmetic in the coefficient field of a Field under construction: either
// an existing base Field or the prime field Z_p.
struct COps {
    const Field* base;
    std::uint64_t p;

    std::uint64_t size() const { return base ? base->size() : p; }
    felt add(felt a, felt b) const {
        return base ? base->add(a, b) : felt((std::uint64_t{a} + b) % p);
    }
    felt neg(felt a) const {
        return base ? base->neg(a) : (a == 0 ? felt{0} : felt(p - a));
    }
    felt sub(felt a, felt b) const { return add(a, neg(b)); }
    felt mul(felt a, felt b) const {
        return base ? base->mul(a, b) : felt((std::uint64_t{a} * b) % p);
    }
};

// Dense polynomials over the coefficient field, low degree first.
using Poly = std::vector<felt>;

std::size_t poly_deg(const Poly& f) {
    std::size_t d = f.size();
    while (d > 0 && f[d - 1] == 0) --d;
    return d;  // number of coefficients up to the leading one; 0 means f == 0
}

// Remainder of f modulo a monic divisor g.
Poly poly_rem_monic(Poly f, const Poly& g, const COps& ops) {
    const std::size_t dg = poly_deg(g);
    for (std::size_t df = poly_deg(f); df >= dg && dg > 0; df = poly_deg(f)) {
        const felt c = f[df - 1];
        const std::size_t shift = df - dg;
        for (std::size_t t = 0; t < dg; ++t)
            f[shift + t] = ops.sub(f[shift + t], ops.mul(c, g[t]));
        if (df == dg) break;
    }
    return f;
}

Poly decode_digits(std::uint64_t value, std::size_t count, std::uint64_t radix) {
    Poly out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = felt(value % radix);
        value /= radix;
    }
    return out;
}

bool is_irreducible(const Poly& f, const COps& ops) {
    const std::size_t d = poly_deg(f) - 1;  // f monic, degree d >= 1
    if (d <= 1) return true;
    const std::uint64_t radix = ops.size();
    for (std::size_t dd = 1; dd <= d / 2; ++dd) {
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < dd; ++i) combos *= radix;
        for (std::uint64_t low = 0; low < combos; ++low) {
            Poly g = decode_digits(low, dd, radix);
            g.push_back(1);
            if (poly_deg(poly_rem_monic(f, g, ops)) == 0) return false;
        }
    }
    return true;
}

// Monic irreducible of the given degree with the smallest integer encoding.
Poly canonical_modulus(std::uint32_t deg, const COps& ops) {
    const std::uint64_t radix = ops.size();
    std::uint64_t combos = 1;
    for (std::uint32_t i = 0; i < deg; ++i) combos *= radix;
    for (std::uint64_t low = 0; low < combos; ++low) {
        Poly f = decode_digits(low, deg, radix);
        f.push_back(1);
        if (is_irreducible(f, ops)) return f;
    }
    throw PreconditionError("no irreducible modulus found");  // unreachable
}

}  // namespace

FieldPtr Field::make(FieldPtr base, std::uint32_t p, std::uint32_t deg,
                     std::vector<felt> modulus) {
    if (deg == 0) throw PreconditionError("field degree must be positive");
    const COps ops{base.get(), p};
    const std::uint64_t csize = ops.size();

    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < deg; ++i) {
        size *= csize;
        if (size > kMaxFieldSize)
            throw PreconditionError("field size exceeds the supported 2^32 range");
    }

    if (modulus.empty()) {
        modulus = canonical_modulus(deg, ops);
    } else {
        if (modulus.size() != std::size_t{deg} + 1)
            throw PreconditionError("modulus must have degree equal to the extension degree");
        if (modulus.back() != 1)
            throw PreconditionError("modulus must be monic");
        for (felt c : modulus)
            if (c >= csize) throw PreconditionError("modulus coefficient out of range");
        if (!is_irreducible(modulus, ops))
            throw PreconditionError("modulus is reducible");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->deg_ = deg;
    f->size_ = size;
    f->csize_ = csize;
    f->char2_ = (p == 2);
    f->base_ = std::move(base);
    f->mod_ = std::move(modulus);
    f->init_tables();
    return f;
}

FieldPtr Field::gf(std::uint32_t p, std::uint32_t e) { return gf(p, e, {}); }

FieldPtr Field::gf(std::uint32_t p, std::uint32_t e, std::vector<felt> modulus) {
    if (!is_prime(p)) throw PreconditionError("characteristic must be prime");
    return make(nullptr, p, e, std::move(modulus));
}

FieldPtr Field::extend(FieldPtr base, std::uint32_t m) {
    return extend(std::move(base), m, {});
}

FieldPtr Field::extend(FieldPtr base, std::uint32_t m, std::vector<felt> modulus) {
    if (!base) throw PreconditionError("extension requires a base field");
    const std::uint32_t p = base->characteristic();
    return make(std::move(base), p, m, std::move(modulus));
}

FieldPtr Field::tower(std::uint32_t p, std::uint32_t e, std::uint32_t m) {
    FieldPtr b = gf(p, e);
    return m == 1 ? b : extend(std::move(b), m);
}

void Field::init_tables() {
    if (size_ > kTableMax) return;
    const std::size_t n = std::size_t(size_);
    neg_tab_.resize(n);
    for (std::size_t a = 0; a < n; ++a) neg_tab_[a] = std::uint16_t(neg_slow(felt(a)));
    add_tab_.resize(n * n);
    mul_tab_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            add_tab_[a * n + b] = std::uint16_t(add_slow(felt(a), felt(b)));
            mul_tab_[a * n + b] = std::uint16_t(mul_slow(felt(a), felt(b)));
        }
    inv_tab_.resize(n);
    inv_tab_[0] = 0;
    for (std::size_t a = 1; a < n; ++a) inv_tab_[a] = std::uint16_t(pow(felt(a), size_ - 2));
}

felt Field::cadd(felt a, felt b) const {
    return base_ ? base_->add(a, b) : felt((std::uint64_t{a} + b) % p_);
}

felt Field::cneg(felt a) const {
    return base_ ? base_->neg(a) : (a == 0 ? felt{0} : felt(p_ - a));
}

felt Field::cmul(felt a, felt b) const {
    return base_ ? base_->mul(a, b) : felt((std::uint64_t{a} * b) % p_);
}

felt Field::add_slow(felt a, felt b) const {
    if (deg_ == 1) return cadd(a, b);
    felt out = 0;
    std::uint64_t mult = 1, xa = a, xb = b;
    for (std::uint32_t i = 0; i < deg_; ++i) {
        out += felt(cadd(felt(xa % csize_), felt(xb % csize_)) * mult);
        xa /= csize_;
        xb /= csize_;
        mult *= csize_;
    }
    return out;
}

felt Field::neg_slow(felt a) const {
    if (deg_ == 1) return cneg(a);
    felt out = 0;
    std::uint64_t mult = 1, xa = a;
    for (std::uint32_t i = 0; i < deg_; ++i) {
        out += felt(cneg(felt(xa % csize_)) * mult);
        xa /= csize_;
        mult *= csize_;
    }
    return out;
}

felt Field::mul_slow(felt a, felt b) const {
    if (deg_ == 1) return cmul(a, b);
    std::vector<felt> da(deg_), db(deg_);
    std::uint64_t xa = a, xb = b;
    for (std::uint32_t i = 0; i < deg_; ++i) {
        da[i] = felt(xa % csize_);
        db[i] = felt(xb % csize_);
        xa /= csize_;
        xb /= csize_;
    }
    std::vector<felt> prod(2 * std::size_t{deg_} - 1, 0);
    for (std::uint32_t i = 0; i < deg_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < deg_; ++j)
            prod[i + j] = cadd(prod[i + j], cmul(da[i], db[j]));
    }
    for (std::size_t k = prod.size(); k-- > deg_;) {
        const felt c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::uint32_t t = 0; t < deg_; ++t)
            prod[k - deg_ + t] = cadd(prod[k - deg_ + t], cneg(cmul(c, mod_[t])));
    }
    felt out = 0;
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < deg_; ++i) {
        out += felt(prod[i] * mult);
        mult *= csize_;
    }
    return out;
}

felt Field::inv(felt a) const {
    if (a == 0) throw PreconditionError("inverse of zero");
    if (!inv_tab_.empty()) return inv_tab_[a];
    return pow(a, size_ - 2);
}

felt Field::pow(felt a, std::uint64_t k) const {
    felt r = 1;
    while (k > 0) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

felt Field::frobenius(felt a, std::uint64_t i) const {
    if (!is_extension())
        throw PreconditionError("frobenius is defined on extension fields");
    i %= deg_;
    while (i-- > 0) a = pow(a, csize_);
    return a;
}

felt Field::element(std::uint64_t index) const {
    if (index >= size_) throw PreconditionError("element index out of range");
    return felt(index);
}

felt Field::alpha() const {
    if (deg_ >= 2) return felt(csize_);
    return neg(mod_[0]);  // degree-1 modulus x + c has root -c
}

std::vector<felt> Field::coeffs(felt a) const {
    std::vector<felt> out(deg_);
    std::uint64_t x = a;
    for (std::uint32_t i = 0; i < deg_; ++i) {
        out[i] = felt(x % csize_);
        x /= csize_;
    }
    return out;
}

felt Field::from_coeffs(std::span<const felt> c) const {
    if (c.size() > deg_) throw PreconditionError("too many coefficients");
    std::uint64_t out = 0, mult = 1;
    for (felt v : c) {
        if (v >= csize_) throw PreconditionError("coefficient out of range");
        out += v * mult;
        mult *= csize_;
    }
    return felt(out);
}

std::string Field::descriptor() const {
    std::uint64_t modint = 0, mult = 1;
    for (felt c : mod_) {
        modint += c * mult;
        mult *= csize_;
    }
    std::ostringstream os;
    if (base_) {
        os << base_->descriptor() << "^" << deg_ << "/mod=" << modint;
    } else {
        os << "GF(" << p_ << "^" << deg_ << ")/mod=" << modint;
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    void expect(const std::string& lit) {
        if (s.compare(pos, lit.size(), lit) != 0)
            throw ParseError("bad field descriptor: expected '" + lit + "' in '" + s + "'");
        pos += lit.size();
    }
    bool try_consume(char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::uint64_t number() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("bad field descriptor: number expected in '" + s + "'");
        return std::stoull(s.substr(start, pos - start));
    }
    bool done() {
        skip_ws();
        return pos == s.size();
    }
};

std::vector<felt> decode_modulus(std::uint64_t modint, std::uint32_t deg, std::uint64_t radix) {
    std::vector<felt> coeffs(std::size_t{deg} + 1);
    for (auto& c : coeffs) {
        c = felt(modint % radix);
        modint /= radix;
    }
    if (modint != 0 || coeffs.back() != 1)
        throw ParseError("bad field descriptor: modulus encoding is not monic of the stated degree");
    return coeffs;
}

}  // namespace

FieldPtr Field::from_descriptor(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    c.expect("GF(");
    const std::uint64_t p = c.number();
    c.expect("^");
    const std::uint64_t e = c.number();
    c.expect(")");
    c.expect("/mod=");
    const std::uint64_t m1 = c.number();
    if (p < 2 || p > 0xffffffffull || e == 0 || e > 64)
        throw ParseError("bad field descriptor: characteristic or degree out of range");
    FieldPtr f;
    try {
        f = gf(std::uint32_t(p), std::uint32_t(e),
               decode_modulus(m1, std::uint32_t(e), p));
    } catch (const PreconditionError& err) {
        throw ParseError(std::string("bad field descriptor: ") + err.what());
    }
    while (c.try_consume('^')) {
        const std::uint64_t m = c.number();
        c.expect("/mod=");
        const std::uint64_t mi = c.number();
        if (m == 0 || m > 64)
            throw ParseError("bad field descriptor: extension degree out of range");
        try {
            f = extend(f, std::uint32_t(m),
                       decode_modulus(mi, std::uint32_t(m), f->size()));
        } catch (const PreconditionError& err) {
            throw ParseError(std::string("bad field descriptor: ") + err.what());
        }
    }
    if (!c.done()) throw ParseError("bad field descriptor: trailing input in '" + text + "'");
    return f;
}

bool Field::same(const Field& other) const {
    if (this == &other) return true;
    if (p_ != other.p_ || deg_ != other.deg_ || mod_ != other.mod_) return false;
    if (static_cast<bool>(base_) != static_cast<bool>(other.base_)) return false;
    return !base_ || base_->same(*other.base_);
}

// ---------------------------------------------------------------------------

namespace {

void check_same(const FieldPtr& a, const FieldPtr& b) {
    if (!a->same(*b)) throw PreconditionError("field mismatch");
}

}  // namespace

Scalar::Scalar(FieldPtr field, felt value) : f_(std::move(field)), v_(value) {
    if (!f_) throw PreconditionError("scalar requires a field");
    if (v_ >= f_->size()) throw PreconditionError("scalar value out of range");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(f_, o.f_);
    return Scalar(f_, f_->add(v_, o.v_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(f_, o.f_);
    return Scalar(f_, f_->sub(v_, o.v_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(f_, o.f_);
    return Scalar(f_, f_->mul(v_, o.v_));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(f_, o.f_);
    return Scalar(f_, f_->mul(v_, f_->inv(o.v_)));
}

Scalar Scalar::operator-() const { return Scalar(f_, f_->neg(v_)); }

bool Scalar::operator==(const Scalar& o) const {
    check_same(f_, o.f_);
    return v_ == o.v_;
}

Scalar Scalar::inverse() const { return Scalar(f_, f_->inv(v_)); }

Scalar Scalar::frobenius(std::uint64_t i) const { return Scalar(f_, f_->frobenius(v_, i)); }

// ---------------------------------------------------------------------------

Basis Basis::polynomial(const FieldPtr& ext) {
    if (!ext || !ext->is_extension())
        throw PreconditionError("basis requires an extension field");
    Basis b;
    b.ext_ = ext;
    b.is_polynomial_ = true;
    const felt a = ext->alpha();
    felt cur = 1;
    for (std::uint32_t i = 0; i < ext->degree(); ++i) {
        b.elems_.push_back(cur);
        cur = ext->mul(cur, a);
    }
    return b;
}

Basis Basis::from_elements(const FieldPtr& ext, std::vector<felt> elems) {
    if (!ext || !ext->is_extension())
        throw PreconditionError("basis requires an extension field");
    const std::uint32_t m = ext->degree();
    if (elems.size() != m)
        throw PreconditionError("basis needs exactly degree-many elements");
    const Field& bf = *ext->base();

    // invert the expansion matrix (column i = coefficients of elems[i])
    std::vector<std::vector<felt>> a(m, std::vector<felt>(2 * m, 0));
    for (std::uint32_t i = 0; i < m; ++i) {
        const auto col = ext->coeffs(elems[i]);
        for (std::uint32_t r = 0; r < m; ++r) a[r][i] = col[r];
    }
    for (std::uint32_t r = 0; r < m; ++r) a[r][m + r] = 1;

    std::size_t row = 0;
    for (std::uint32_t col = 0; col < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m)
            throw PreconditionError("basis elements are not linearly independent");
        std::swap(a[row], a[piv]);
        const felt s = bf.inv(a[row][col]);
        for (auto& v : a[row]) v = bf.mul(v, s);
        for (std::uint32_t r = 0; r < m; ++r) {
            if (r == row || a[r][col] == 0) continue;
            const felt c = a[r][col];
            for (std::uint32_t t = 0; t < 2 * m; ++t)
                a[r][t] = bf.sub(a[r][t], bf.mul(c, a[row][t]));
        }
        ++row;
    }

    Basis b;
    b.ext_ = ext;
    b.elems_ = std::move(elems);
    b.inv_.assign(m, std::vector<felt>(m));
    for (std::uint32_t r = 0; r < m; ++r)
        for (std::uint32_t c = 0; c < m; ++c) b.inv_[r][c] = a[r][m + c];
    return b;
}

std::vector<felt> Basis::coordinates(felt a) const {
    const auto poly = ext_->coeffs(a);
    if (is_polynomial_) return poly;
    const Field& bf = *ext_->base();
    const std::uint32_t m = ext_->degree();
    std::vector<felt> out(m, 0);
    for (std::uint32_t r = 0; r < m; ++r)
        for (std::uint32_t c = 0; c < m; ++c)
            out[r] = bf.add(out[r], bf.mul(inv_[r][c], poly[c]));
    return out;
}

felt Basis::combine(std::span<const felt> coords) const {
    if (coords.size() != elems_.size())
        throw PreconditionError("coordinate count does not match the basis");
    felt out = 0;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (coords[i] >= ext_->coeff_size())
            throw PreconditionError("coordinate is not a base field element");
        out = ext_->add(out, ext_->mul(elems_[i], coords[i]));
    }
    return out;
}

}  // namespace fdrc
