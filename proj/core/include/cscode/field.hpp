#pragma once

#include <vector>

namespace cscode {

// Exact arithmetic in GF(p^k) for small prime powers. Elements are coefficient
// vectors over GF(p) (little-endian) reduced modulo a monic irreducible
// polynomial of degree k. The modulus is the lexicographically smallest monic
// irreducible polynomial, coefficient tuple compared low-degree-first, so
// constructions are reproducible byte-for-byte.
//
// Elements also carry a canonical index sum(c_i * p^i) in [0, q); index 0 is
// the zero element and index 1 the multiplicative identity. All element
// orderings elsewhere (e.g. AGL1 tables) refer to this index.
struct FieldSpec {
    int p = 0;
    int k = 0;
    int q = 0;
    std::vector<int> modulus;  // length k+1, monic, little-endian coefficients

    bool operator==(const FieldSpec& o) const = default;
};

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const FieldSpec* spec, std::vector<int> coeffs);

    const FieldSpec& spec() const { return *spec_; }
    const std::vector<int>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    const FieldSpec* spec_ = nullptr;
    std::vector<int> coeffs_;
};

// Builds GF(p^k). Throws std::invalid_argument for non-prime p, k == 0 or
// p^k > 2^16.
FieldSpec field_make(int p, int k);

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
// Multiplicative inverse by exhaustive scan (q is tiny). Throws on zero.
FieldElement field_inv(const FieldElement& a);
FieldElement field_neg(const FieldElement& a);

// index <-> element, index = sum(c_i * p^i)
FieldElement field_element(const FieldSpec& spec, int index);
int field_index(const FieldElement& a);

bool is_prime(int n);

}  // namespace cscode
