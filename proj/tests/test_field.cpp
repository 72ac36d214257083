#include <doctest.h>

#include "cscode/field.hpp"

using namespace cscode;

namespace {

// independent irreducibility route for quadratics/cubics: no root in GF(p)
bool has_root(const std::vector<int>& poly, int p) {
    for (int r = 0; r < p; ++r) {
        long long v = 0, pw = 1;
        for (int c : poly) {
            v = (v + c * pw) % p;
            pw = (pw * r) % p;
        }
        if (v % p == 0) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("prime field uses the k=1 convention") {
    FieldSpec f = field_make(2, 1);
    CHECK(f.q == 2);
    CHECK(f.modulus == std::vector<int>{0, 1});  // x, unused
}

TEST_CASE("GF(4) modulus is x^2+x+1") {
    // oracle: root-check all four monic quadratics over GF(2) in lex order
    FieldSpec f = field_make(2, 2);
    std::vector<std::vector<int>> quadratics = {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
    std::vector<int> expect;
    for (const auto& q : quadratics)
        if (!has_root(q, 2)) {
            expect = q;
            break;
        }
    CHECK(f.modulus == expect);
    CHECK(f.modulus == std::vector<int>{1, 1, 1});
}

TEST_CASE("GF(9) modulus is x^2+1") {
    // oracle: root-check monic quadratics over GF(3) in lex order
    FieldSpec f = field_make(3, 2);
    std::vector<int> expect;
    for (int c0 = 0; c0 < 3 && expect.empty(); ++c0)
        for (int c1 = 0; c1 < 3; ++c1) {
            std::vector<int> q{c0, c1, 1};
            if (!has_root(q, 3)) {
                expect = q;
                break;
            }
        }
    CHECK(f.modulus == expect);
    CHECK(f.modulus == std::vector<int>{1, 0, 1});
}

TEST_CASE("field_make rejects bad parameters") {
    CHECK_THROWS(field_make(4, 1));
    CHECK_THROWS(field_make(2, 0));
    CHECK_THROWS(field_make(2, 17));  // 2^17 > 2^16
}

TEST_CASE("addition examples") {
    FieldSpec f4 = field_make(2, 2);
    FieldElement x{&f4, {0, 1}};
    CHECK(field_add(x, x).is_zero());

    FieldSpec f5 = field_make(5, 1);
    CHECK(field_index(field_add(field_element(f5, 2), field_element(f5, 4))) == 1);

    FieldSpec f9 = field_make(3, 2);
    FieldElement a{&f9, {1, 1}};  // x+1
    FieldElement b{&f9, {2, 2}};  // 2x+2
    CHECK(field_add(a, b).is_zero());
}

TEST_CASE("multiplication examples") {
    FieldSpec f4 = field_make(2, 2);
    FieldElement x{&f4, {0, 1}};
    CHECK(field_mul(x, x) == FieldElement{&f4, {1, 1}});  // x^2 = x+1

    FieldSpec f9 = field_make(3, 2);
    FieldElement x9{&f9, {0, 1}};
    CHECK(field_mul(x9, x9) == FieldElement{&f9, {2, 0}});  // x^2 = 2

    for (int q : {4, 5, 9}) {
        FieldSpec f = q == 4 ? field_make(2, 2) : (q == 5 ? field_make(5, 1) : field_make(3, 2));
        FieldElement one = field_element(f, 1);
        for (int i = 0; i < f.q; ++i) CHECK(field_mul(one, field_element(f, i)) == field_element(f, i));
    }
}

TEST_CASE("inversion examples") {
    FieldSpec f5 = field_make(5, 1);
    CHECK(field_index(field_inv(field_element(f5, 2))) == 3);

    FieldSpec f4 = field_make(2, 2);
    FieldElement x{&f4, {0, 1}};
    CHECK(field_inv(x) == FieldElement{&f4, {1, 1}});

    CHECK(field_inv(field_element(f4, 1)) == field_element(f4, 1));
    CHECK_THROWS(field_inv(field_element(f4, 0)));
}

TEST_CASE("spec mismatch is rejected") {
    FieldSpec f4 = field_make(2, 2);
    FieldSpec f9 = field_make(3, 2);
    CHECK_THROWS(field_add(field_element(f4, 1), field_element(f9, 1)));
}

TEST_CASE("nonzero elements form a cyclic group of order q-1") {
    // every prime power q <= 64
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64}) {
        int p = 0, k = 0;
        for (int cand = 2; cand <= q; ++cand) {
            if (!is_prime(cand) || q % cand) continue;
            int v = q, e = 0;
            while (v % cand == 0) v /= cand, ++e;
            if (v == 1) p = cand, k = e;
            break;
        }
        REQUIRE(p > 0);
        FieldSpec f = field_make(p, k);
        FieldElement one = field_element(f, 1);

        auto order_of = [&](int idx) {
            FieldElement e = field_element(f, idx);
            FieldElement cur = e;
            int ord = 1;
            while (!(cur == one)) {
                cur = field_mul(cur, e);
                ++ord;
            }
            return ord;
        };
        bool generator_found = false;
        for (int i = 1; i < f.q && !generator_found; ++i) generator_found = order_of(i) == f.q - 1;
        CHECK(generator_found);
    }
}

TEST_CASE("distributivity holds exhaustively for q <= 16") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        int p = q, k = 1;
        if (q == 4) p = 2, k = 2;
        if (q == 8) p = 2, k = 3;
        if (q == 9) p = 3, k = 2;
        if (q == 16) p = 2, k = 4;
        FieldSpec f = field_make(p, k);
        for (int a = 0; a < f.q; ++a)
            for (int b = 0; b < f.q; ++b)
                for (int c = 0; c < f.q; ++c) {
                    FieldElement ea = field_element(f, a), eb = field_element(f, b), ec = field_element(f, c);
                    CHECK(field_mul(ea, field_add(eb, ec)) ==
                          field_add(field_mul(ea, eb), field_mul(ea, ec)));
                }
    }
}

TEST_CASE("double inversion is the identity for q <= 64") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
        int p = 0, k = 0;
        for (int cand = 2; cand <= q; ++cand) {
            if (!is_prime(cand) || q % cand) continue;
            int v = q, e = 0;
            while (v % cand == 0) v /= cand, ++e;
            if (v == 1) p = cand, k = e;
            break;
        }
        FieldSpec f = field_make(p, k);
        for (int i = 1; i < f.q; ++i) {
            FieldElement a = field_element(f, i);
            CHECK(field_inv(field_inv(a)) == a);
        }
    }
}
