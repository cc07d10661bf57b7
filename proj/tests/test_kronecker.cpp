#include "doctest.h"
#include "qrep/kronecker.hpp"
#include "qrep/prng.hpp"

using namespace qrep;

namespace {

Mat random_mat(const FieldSpec& f, int r, int c, Prng& rng) {
    Mat m(f, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = Scalar::of_int(f, static_cast<long long>(rng.below(f.p)));
    return m;
}

Mat random_invertible(const FieldSpec& f, int n, Prng& rng) {
    while (true) {
        Mat m = random_mat(f, n, n, rng);
        if (is_invertible(m)) return m;
    }
}

template <typename Block, typename Eq>
bool same_multiset(std::vector<Block> a, std::vector<Block> b, Eq eq) {
    if (a.size() != b.size()) return false;
    for (const Block& x : a) {
        bool found = false;
        for (size_t i = 0; i < b.size(); ++i)
            if (eq(b[i], x)) {
                b.erase(b.begin() + static_cast<long>(i));
                found = true;
                break;
            }
        if (!found) return false;
    }
    return b.empty();
}

}  // namespace

TEST_CASE("pencil embedding shapes") {
    auto g2 = FieldSpec::gf(2);
    Pencil p(Mat::identity(g2, 1), Mat::identity(g2, 1));
    Presentation v = embed_kronecker(p);
    CHECK(v.dims() == DimVector{1, 1, 1, 1});
    CHECK(v.A == Mat::identity(g2, 1));
    CHECK(v.B == Mat::identity(g2, 1));
    CHECK(v.G == Mat::identity(g2, 1));
    CHECK(v.D == Mat::identity(g2, 1));

    Pencil p2(Mat::identity(g2, 2), build_frobenius(Poly::from_ints(g2, {1, 1, 1}), 1));
    CHECK(embed_kronecker(p2).dims() == DimVector{2, 2, 2, 2});

    Pencil empty(Mat(g2, 0, 0), Mat(g2, 0, 0));
    CHECK(embed_kronecker(empty).dims().is_zero());

    CHECK_THROWS_AS(Pencil(Mat(g2, 1, 2), Mat(g2, 2, 1)), std::invalid_argument);
}

TEST_CASE("pencil classification of named pairs") {
    auto g2 = FieldSpec::gf(2);
    Poly p = Poly::from_ints(g2, {1, 1, 1});
    auto b0 = kronecker_decompose(Pencil(Mat::identity(g2, 2), build_frobenius(p, 1)));
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].tag == PencilTag::t0);
    CHECK(b0[0].p == p);
    CHECK(b0[0].s == 1);

    auto b1 = kronecker_decompose(Pencil(build_i_down(g2, 1), build_i_up(g2, 1)));
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].tag == PencilTag::down_up);
    CHECK(b1[0].n == 1);

    auto b2 = kronecker_decompose(Pencil(build_jordan(g2, 2, true), Mat::identity(g2, 2)));
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].tag == PencilTag::jordan_left);
    CHECK(b2[0].n == 2);

    auto b3 = kronecker_decompose(Pencil(Mat::identity(g2, 2), build_jordan(g2, 2, true)));
    REQUIRE(b3.size() == 1);
    CHECK(b3[0].tag == PencilTag::jordan_right);

    auto b4 = kronecker_decompose(Pencil(build_i_right(g2, 1), build_i_left(g2, 1)));
    REQUIRE(b4.size() == 1);
    CHECK(b4[0].tag == PencilTag::right_left);
}

TEST_CASE("contragredient classification of named pairs") {
    auto g3 = FieldSpec::gf(3);
    auto b0 = contragredient_decompose(ContraPair(Mat::identity(g3, 2), Mat::identity(g3, 2)));
    REQUIRE(b0.size() == 2);
    for (const auto& b : b0) {
        CHECK(b.tag == ContraTag::t0);
        CHECK(b.p == Poly::from_ints(g3, {2, 1}));  // t - 1
        CHECK(b.s == 1);
    }

    auto b1 = contragredient_decompose(ContraPair(build_i_up(g3, 0), build_i_right(g3, 0)));
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].tag == ContraTag::up_right);
    CHECK(b1[0].n == 0);

    auto b2 = contragredient_decompose(ContraPair(build_jordan(g3, 1, true), Mat::identity(g3, 1)));
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].tag == ContraTag::jordan_in_a);
    CHECK(b2[0].n == 1);
}

TEST_CASE("random pencils stay inside the allowed block families") {
    for (long long pf : {2, 3}) {
        auto f = FieldSpec::gf(pf);
        Prng rng(555 * static_cast<std::uint64_t>(pf));
        for (int trial = 0; trial < 40; ++trial) {
            int m = static_cast<int>(rng.below(5));
            int n = static_cast<int>(rng.below(5));
            Pencil p(random_mat(f, m, n, rng), random_mat(f, m, n, rng));
            auto blocks = kronecker_decompose(p);  // throws on a foreign summand

            // rebuild and redecompose: the multiset is reproduced
            std::vector<Mat> as, cs;
            for (const auto& b : blocks) {
                Pencil pb = pencil_of_block(b, f);
                as.push_back(pb.A);
                cs.push_back(pb.C);
            }
            Pencil rebuilt(direct_sum_diag(as, f), direct_sum_diag(cs, f));
            auto again = kronecker_decompose(rebuilt);
            CHECK(same_multiset(blocks, again, pencil_block_eq));

            // simultaneous equivalence invariance
            if (trial % 4 == 0) {
                Mat x = random_invertible(f, m, rng);
                Mat y = random_invertible(f, n, rng);
                Pencil moved(x * p.A * y, x * p.C * y);
                CHECK(same_multiset(blocks, kronecker_decompose(moved), pencil_block_eq));
            }
        }
    }
}

TEST_CASE("random contragredient pairs stay inside the allowed block families") {
    for (long long pf : {2, 3}) {
        auto f = FieldSpec::gf(pf);
        Prng rng(919 * static_cast<std::uint64_t>(pf));
        for (int trial = 0; trial < 40; ++trial) {
            int m = static_cast<int>(rng.below(5));
            int n = static_cast<int>(rng.below(5));
            ContraPair c(random_mat(f, m, n, rng), random_mat(f, n, m, rng));
            auto blocks = contragredient_decompose(c);

            std::vector<Mat> as, ds;
            for (const auto& b : blocks) {
                ContraPair cb = contra_of_block(b, f);
                as.push_back(cb.A);
                ds.push_back(cb.D);
            }
            ContraPair rebuilt(direct_sum_diag(as, f), direct_sum_diag(ds, f));
            auto again = contragredient_decompose(rebuilt);
            CHECK(same_multiset(blocks, again, contra_block_eq));

            if (trial % 4 == 0) {
                Mat x = random_invertible(f, m, rng);
                Mat y = random_invertible(f, n, rng);
                ContraPair moved(x * c.A * y, inverse(y) * c.D * inverse(x));
                CHECK(same_multiset(blocks, contragredient_decompose(moved), contra_block_eq));
            }
        }
    }
}
