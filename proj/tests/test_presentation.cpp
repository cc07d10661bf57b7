#include "doctest.h"
#include "qrep/catalogue.hpp"
#include "qrep/prng.hpp"

using namespace qrep;

namespace {

Presentation random_presentation(const FieldSpec& f, const DimVector& d, Prng& rng) {
    Presentation v = Presentation::zero(f, d);
    auto fill = [&](Mat& m) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                m.at(i, j) = Scalar::of_int(f, static_cast<long long>(rng.below(f.p)));
    };
    fill(v.A);
    fill(v.B);
    fill(v.G);
    fill(v.D);
    return v;
}

DimVector random_dims(Prng& rng, int max_side) {
    auto side = [&] { return static_cast<int>(rng.below(max_side + 1)); };
    return {side(), side(), side(), side()};
}

}  // namespace

TEST_CASE("tits form values") {
    CHECK(tits_q({1, 1, 1, 1}) == 0);
    CHECK(tits_q({1, 0, 0, 0}) == 1);
    CHECK(tits_q({2, 1, 2, 1}) == 1);
    CHECK(tits_q({3, 3, 3, 3}) == 0);
    CHECK(tits_q({2, 1, 1, 1}) == 1);
}

TEST_CASE("root classification") {
    CHECK(root_class({3, 3, 3, 3}) == RootClass::imaginary);
    CHECK(root_class({2, 1, 1, 1}) == RootClass::real);
    CHECK(root_class({0, 0, 0, 0}) == RootClass::none);
    CHECK(root_class({5, 0, 0, 0}) == RootClass::none);
}

TEST_CASE("direct sums add dimension vectors blockwise") {
    auto g2 = FieldSpec::gf(2);
    Presentation a = Presentation::zero(g2, {1, 0, 1, 0});
    a.A.at(0, 0) = Scalar::one(g2);
    Presentation b = Presentation::zero(g2, {0, 1, 0, 1});
    b.D.at(0, 0) = Scalar::one(g2);
    Presentation s = direct_sum(a, b);
    CHECK(s.dims() == DimVector{1, 1, 1, 1});
    CHECK(s.A == Mat::from_ints(g2, {{1}}));
    CHECK(s.D == Mat::from_ints(g2, {{1}}));
    CHECK(s.B.is_zero());
    CHECK(s.G.is_zero());

    Presentation z = Presentation::zero(g2, {0, 0, 0, 0});
    CHECK(direct_sum(a, z) == a);

    Presentation two = direct_sum(generate(Descriptor::plain(DType::TII, 0), g2),
                                  generate(Descriptor::plain(DType::TII, 0), g2));
    CHECK(two.dims() == DimVector{2, 0, 2, 0});
    CHECK(two.A == Mat::identity(g2, 2));
}

TEST_CASE("symmetries compose as a group of order eight") {
    auto g3 = FieldSpec::gf(3);
    Prng rng(99);
    Presentation v = random_presentation(g3, {2, 1, 2, 1}, rng);

    auto all = SymmetryElem::all();
    // distinctness on a generic element
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            CHECK_FALSE(all[i] == all[j]);

    for (const auto& s1 : all)
        for (const auto& s2 : all) {
            Presentation lhs = apply_symmetry(s2, apply_symmetry(s1, v));
            Presentation rhs = apply_symmetry(compose(s2, s1), v);
            CHECK(lhs == rhs);
        }
    for (const auto& s : all) {
        CHECK(apply_symmetry(s.inverse(), apply_symmetry(s, v)) == v);
        CHECK(compose(s, s.inverse()).is_identity());
    }
}

TEST_CASE("symmetry examples") {
    auto g2 = FieldSpec::gf(2);
    Presentation v = generate(Descriptor::plain(DType::TIII, 1), g2);
    CHECK(apply_symmetry(SymmetryElem::identity(), v) == v);
    CHECK(apply_symmetry(SymmetryElem::tr(), apply_symmetry(SymmetryElem::tr(), v)) == v);
    CHECK(apply_symmetry(SymmetryElem::tr(), v).dims() == DimVector{1, 1, 2, 1});
}

TEST_CASE("hom spaces") {
    auto g2 = FieldSpec::gf(2);
    Presentation i2 = generate(Descriptor::plain(DType::TI, 2), g2);
    auto endo = hom_space(i2, i2);
    CHECK(endo.size() == 2);
    for (const auto& m : endo) CHECK(morphism_valid(i2, i2, m));

    Presentation iii1 = generate(Descriptor::plain(DType::TIII, 1), g2);
    CHECK(hom_space(iii1, iii1).size() == 1);

    // the identity lies in the span of the endomorphism basis
    auto idm = identity_morphism(iii1);
    auto basis = hom_space(iii1, iii1);
    bool found = false;
    for (const auto& b : basis)
        if (b.L1 == idm.L1 && b.L2 == idm.L2 && b.L3 == idm.L3 && b.L4 == idm.L4) found = true;
    CHECK(found);
}

TEST_CASE("hom spaces are additive in the first argument") {
    for (long long p : {2, 3}) {
        auto f = FieldSpec::gf(p);
        Prng rng(1234 + static_cast<std::uint64_t>(p));
        for (int trial = 0; trial < 12; ++trial) {
            Presentation v = random_presentation(f, random_dims(rng, 2), rng);
            Presentation v2 = random_presentation(f, random_dims(rng, 2), rng);
            Presentation w = random_presentation(f, random_dims(rng, 2), rng);
            size_t lhs = hom_space(direct_sum(v, v2), w).size();
            size_t rhs = hom_space(v, w).size() + hom_space(v2, w).size();
            CHECK(lhs == rhs);
            for (const auto& m : hom_space(v, w)) CHECK(morphism_valid(v, w, m));
        }
    }
}

TEST_CASE("admissible shuffles keep shape and change nothing at zero steps") {
    auto g3 = FieldSpec::gf(3);
    Presentation v = generate(Descriptor::plain(DType::TII, 1), g3);
    CHECK(random_admissible_shuffle(v, 5, 0) == v);
    Presentation w = random_admissible_shuffle(v, 7, 100);
    CHECK(w.dims() == v.dims());
    CHECK(rank(w.A) == rank(v.A));
    CHECK(rank(w.G) == rank(v.G));
}

TEST_CASE("shuffles over the rationals stay exact") {
    auto q = FieldSpec::rationals();
    Presentation v = generate(Descriptor::plain(DType::TI, 2), q);
    Presentation w = random_admissible_shuffle(v, 11, 60);
    CHECK(w.dims() == v.dims());
    CHECK(rank(w.G) == 1);
}

TEST_CASE("witness application composes") {
    auto g5 = FieldSpec::gf(5);
    Prng rng(5150);
    Presentation v = random_presentation(g5, {2, 2, 2, 2}, rng);
    PresWitness id = PresWitness::identity(g5, v.dims());
    CHECK(id.apply(v) == v);
}
