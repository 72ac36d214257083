#include "cscode/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace cscode {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

int mod(int a, int p) {
    int r = a % p;
    return r < 0 ? r + p : r;
}

// polynomial remainder of a by monic b over GF(p), little-endian coefficients
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) > db) {
        int da = static_cast<int>(a.size()) - 1;
        int lead = a[da];
        if (lead != 0) {
            int shift = da - db;
            for (int i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - lead * b[i], p);
        }
        a.pop_back();
    }
    return a;
}

bool poly_is_zero(const std::vector<int>& a) {
    return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// irreducibility by exhaustive trial division over GF(p)[x] up to degree k/2
bool is_irreducible(const std::vector<int>& m, int p, int k) {
    if (k == 1) return true;
    for (int d = 1; d <= k / 2; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int v = 0; v < count; ++v) {
            std::vector<int> divisor(d + 1, 0);
            int t = v;
            for (int i = 0; i < d; ++i) {
                divisor[i] = t % p;
                t /= p;
            }
            divisor[d] = 1;  // monic
            if (poly_is_zero(poly_mod(m, divisor, p))) return false;
        }
    }
    return true;
}

void require_same_spec(const FieldElement& a, const FieldElement& b) {
    if (!(a.spec() == b.spec())) throw std::invalid_argument("field element spec mismatch");
}

}  // namespace

FieldElement::FieldElement(const FieldSpec* spec, std::vector<int> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != spec_->k)
        throw std::invalid_argument("field element has wrong coefficient count");
    for (int c : coeffs_)
        if (c < 0 || c >= spec_->p) throw std::invalid_argument("field coefficient out of range");
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool FieldElement::operator==(const FieldElement& o) const {
    return *spec_ == *o.spec_ && coeffs_ == o.coeffs_;
}

FieldSpec field_make(int p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("field extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > (1 << 16)) throw std::invalid_argument("field order exceeds 2^16");
    }
    FieldSpec spec;
    spec.p = p;
    spec.k = k;
    spec.q = static_cast<int>(q);
    if (k == 1) {
        spec.modulus = {0, 1};  // x, unused: the prime field needs no reduction
        return spec;
    }
    // lexicographically smallest monic irreducible, non-leading coefficient
    // tuple (c0..c_{k-1}) compared low-degree-first
    std::vector<int> tuple(k, 0);
    for (;;) {
        std::vector<int> m(tuple);
        m.push_back(1);
        if (is_irreducible(m, p, k)) {
            spec.modulus = m;
            return spec;
        }
        int i = k - 1;
        while (i >= 0 && tuple[i] == p - 1) tuple[i--] = 0;
        if (i < 0) throw std::logic_error("no irreducible polynomial found");
        ++tuple[i];
    }
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    const FieldSpec& s = a.spec();
    std::vector<int> c(s.k);
    for (int i = 0; i < s.k; ++i) c[i] = mod(a.coeffs()[i] + b.coeffs()[i], s.p);
    return FieldElement(&a.spec(), std::move(c));
}

FieldElement field_neg(const FieldElement& a) {
    const FieldSpec& s = a.spec();
    std::vector<int> c(s.k);
    for (int i = 0; i < s.k; ++i) c[i] = mod(-a.coeffs()[i], s.p);
    return FieldElement(&a.spec(), std::move(c));
}

FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
    require_same_spec(a, b);
    const FieldSpec& s = a.spec();
    if (s.k == 1) {
        return FieldElement(&a.spec(), {mod(a.coeffs()[0] * b.coeffs()[0], s.p)});
    }
    std::vector<int> prod(2 * s.k - 1, 0);
    for (int i = 0; i < s.k; ++i)
        for (int j = 0; j < s.k; ++j) prod[i + j] = mod(prod[i + j] + a.coeffs()[i] * b.coeffs()[j], s.p);
    std::vector<int> r = poly_mod(std::move(prod), s.modulus, s.p);
    r.resize(s.k, 0);
    return FieldElement(&a.spec(), std::move(r));
}

FieldElement field_inv(const FieldElement& a) {
    if (a.is_zero()) throw std::invalid_argument("zero has no multiplicative inverse");
    const FieldSpec& s = a.spec();
    FieldElement one = field_element(s, 1);
    for (int i = 1; i < s.q; ++i) {
        FieldElement b = field_element(s, i);
        if (field_mul(a, b) == one) return b;
    }
    throw std::logic_error("inverse scan failed");
}

FieldElement field_element(const FieldSpec& spec, int index) {
    if (index < 0 || index >= spec.q) throw std::invalid_argument("field element index out of range");
    std::vector<int> c(spec.k);
    for (int i = 0; i < spec.k; ++i) {
        c[i] = index % spec.p;
        index /= spec.p;
    }
    return FieldElement(&spec, std::move(c));
}

int field_index(const FieldElement& a) {
    int idx = 0;
    for (int i = a.spec().k - 1; i >= 0; --i) idx = idx * a.spec().p + a.coeffs()[i];
    return idx;
}

}  // namespace cscode
