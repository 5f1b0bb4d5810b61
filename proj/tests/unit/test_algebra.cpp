#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "eisenspec/eisenstein.hpp"
#include "eisenspec/unit.hpp"
#include "oracle.hpp"

using eisenspec::EisensteinRational;
using eisenspec::Unit;

TEST(Unit, ExponentIsReducedModSix) {
    EXPECT_EQ(Unit(7).exponent(), 1);
    EXPECT_EQ(Unit(-1).exponent(), 5);
    EXPECT_EQ(Unit(-12).exponent(), 0);
}

TEST(Unit, GroupLaws) {
    for (int a = 0; a < 6; ++a) {
        EXPECT_EQ(Unit(a) * Unit(a).conj(), Unit::one());
        EXPECT_EQ(Unit(a).inverse(), Unit(6 - a));
        for (int b = 0; b < 6; ++b) {
            EXPECT_EQ(Unit(a) * Unit(b), Unit(a + b));
            EXPECT_EQ((Unit(a) * Unit(b)).conj(), Unit(a).conj() * Unit(b).conj());
        }
    }
    EXPECT_TRUE(Unit::minus_one().is_real());
    EXPECT_FALSE(Unit::omega().is_real());
}

TEST(Unit, TwiceRealPart) {
    const int expected[6] = {2, 1, -1, -2, -1, 1};
    for (int k = 0; k < 6; ++k) EXPECT_EQ(Unit(k).twice_real_part(), expected[k]);
}

TEST(Eisenstein, UnitEmbeddingMatchesReference) {
    for (int k = 0; k < 6; ++k) {
        const EisensteinRational e = eisenspec::unit_to_eis(Unit(k));
        const oracle::ZOmega z = oracle::unit_value(k);
        EXPECT_EQ(e.a(), mpq_class(z.re));
        EXPECT_EQ(e.b(), mpq_class(z.om));
        EXPECT_EQ(e.norm(), 1);
        EXPECT_EQ(e.real_part() * 2, Unit(k).twice_real_part());
    }
}

TEST(Eisenstein, OmegaSquared) {
    const EisensteinRational w(0, 1);
    EXPECT_EQ(w * w, EisensteinRational(-1, 1));
    EXPECT_EQ(w * w * w, EisensteinRational(-1, 0));
}

TEST(Eisenstein, ConjugateAndNorm) {
    const EisensteinRational x(3, 2);
    EXPECT_EQ(x.conj(), EisensteinRational(5, -2));
    EXPECT_EQ(x.norm(), 9 + 6 + 4);
    EXPECT_EQ(x * x.conj(), EisensteinRational(19, 0));
}

TEST(Eisenstein, DivisionByZeroThrows) {
    EXPECT_THROW((void)EisensteinRational(0, 0).inverse(), std::domain_error);
}

TEST(Eisenstein, FieldAxiomsOnRandomElements) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coord(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    auto draw = [&] {
        return EisensteinRational(mpq_class(coord(rng), den(rng)), mpq_class(coord(rng), den(rng)));
    };
    for (int trial = 0; trial < 500; ++trial) {
        const auto x = draw();
        const auto y = draw();
        const auto z = draw();
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
        EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
        if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
        EXPECT_EQ(x - x, EisensteinRational(0, 0));
    }
}

TEST(Eisenstein, LowestTerms) {
    const EisensteinRational x(mpq_class(2, 4), mpq_class(-6, 8));
    EXPECT_EQ(x.a().get_den(), 2);
    EXPECT_EQ(x.b().get_den(), 4);
}
