#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fdrc/errors.hpp"

namespace fdrc {

// Field element, encoded as a radix-|coefficient field| integer with the low
// degree coefficient first. Valid values are 0 .. size()-1.
using felt = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// A finite field, either GF(p^e) over its prime field or a degree-m extension
// of another Field (towers of arbitrary height). Arithmetic on fields of size
// at most 1024 runs off full lookup tables; larger fields fall back to
// polynomial arithmetic on the coefficient digits.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr gf(std::uint32_t p, std::uint32_t e);
    static FieldPtr gf(std::uint32_t p, std::uint32_t e, std::vector<felt> modulus);
    static FieldPtr extend(FieldPtr base, std::uint32_t m);
    static FieldPtr extend(FieldPtr base, std::uint32_t m, std::vector<felt> modulus);
    // gf(p, e) for m == 1, otherwise a degree-m extension of gf(p, e)
    static FieldPtr tower(std::uint32_t p, std::uint32_t e, std::uint32_t m);

    std::uint32_t characteristic() const { return p_; }
    // degree over the coefficient field (the base field, or Z_p at the bottom)
    std::uint32_t degree() const { return deg_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t coeff_size() const { return csize_; }
    const FieldPtr& base() const { return base_; }
    bool is_extension() const { return static_cast<bool>(base_); }
    const std::vector<felt>& modulus() const { return mod_; }

    felt element(std::uint64_t index) const;
    // the residue of x, a root of the modulus (for degree 1, -mod[0])
    felt alpha() const;

    felt add(felt a, felt b) const {
        if (char2_) return a ^ b;
        if (!add_tab_.empty()) return add_tab_[std::size_t{a} * size_ + b];
        return add_slow(a, b);
    }
    felt sub(felt a, felt b) const { return add(a, neg(b)); }
    felt neg(felt a) const {
        if (char2_) return a;
        if (!neg_tab_.empty()) return neg_tab_[a];
        return neg_slow(a);
    }
    felt mul(felt a, felt b) const {
        if (!mul_tab_.empty()) return mul_tab_[std::size_t{a} * size_ + b];
        return mul_slow(a, b);
    }
    felt inv(felt a) const;
    felt pow(felt a, std::uint64_t k) const;  // 0^0 == 1
    // a^(q^i) where q is the coefficient field size; extension fields only
    felt frobenius(felt a, std::uint64_t i) const;

    std::vector<felt> coeffs(felt a) const;
    felt from_coeffs(std::span<const felt> c) const;

    // e.g. "GF(2^3)/mod=11" or "GF(2^2)/mod=7^3/mod=<int>" for towers; the
    // modulus integer is radix-|coefficient field| with low degree first
    std::string descriptor() const;
    static FieldPtr from_descriptor(const std::string& text);

    // structural equality: same characteristic, degrees and moduli at every level
    bool same(const Field& other) const;

private:
    Field() = default;
    static FieldPtr make(FieldPtr base, std::uint32_t p, std::uint32_t deg,
                         std::vector<felt> modulus);
    void init_tables();

    felt cadd(felt a, felt b) const;
    felt cneg(felt a) const;
    felt cmul(felt a, felt b) const;
    felt add_slow(felt a, felt b) const;
    felt neg_slow(felt a) const;
    felt mul_slow(felt a, felt b) const;

    std::uint32_t p_ = 0;
    std::uint32_t deg_ = 0;
    std::uint64_t size_ = 0;
    std::uint64_t csize_ = 0;
    bool char2_ = false;
    FieldPtr base_;
    std::vector<felt> mod_;
    std::vector<std::uint16_t> add_tab_, mul_tab_;
    std::vector<std::uint16_t> neg_tab_, inv_tab_;
};

// A field element paired with its field, with checked operators. Convenience
// wrapper for call sites where the bare felt plumbing would be noisy.
class Scalar {
public:
    Scalar(FieldPtr field, felt value);

    const FieldPtr& field() const { return f_; }
    felt value() const { return v_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    Scalar frobenius(std::uint64_t i) const;

private:
    FieldPtr f_;
    felt v_;
};

// An ordered basis of an extension field over its base field. Converts between
// elements and coordinate vectors over the base.
class Basis {
public:
    // 1, alpha, alpha^2, ... over the base field
    static Basis polynomial(const FieldPtr& ext);
    // arbitrary elements, validated for linear independence over the base
    static Basis from_elements(const FieldPtr& ext, std::vector<felt> elems);

    const FieldPtr& field() const { return ext_; }
    const std::vector<felt>& elements() const { return elems_; }

    std::vector<felt> coordinates(felt a) const;
    felt combine(std::span<const felt> coords) const;

private:
    Basis() = default;

    FieldPtr ext_;
    std::vector<felt> elems_;
    bool is_polynomial_ = false;
    std::vector<std::vector<felt>> inv_;  // change of coordinates, rows over base
};

}  // namespace fdrc
