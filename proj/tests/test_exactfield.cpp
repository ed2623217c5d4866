#include "doctest.h"

#include <random>

#include "hopf2x/linalg.hpp"

using namespace hopf2x;

namespace {

const Field Q = Field::rationals();

Vec vec(Field f, std::initializer_list<std::int64_t> xs)
{
    VecBuilder vb;
    Index i = 0;
    for (auto x : xs) vb.add(i++, Scalar(f, x));
    return vb.build();
}

DenseMatrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937& rng, int spread = 3)
{
    std::uniform_int_distribution<int> d(-spread, spread);
    DenseMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = Scalar(f, d(rng) * (d(rng) > 0 ? 1 : 0));
    return m;
}

Vec apply_dense(const DenseMatrix& m, const Vec& v) { return LinearMap::from_dense(m).apply(v); }

}  // namespace

TEST_CASE("scalars stay normalized")
{
    CHECK(Scalar(Q, 4, 6).str() == "2/3");
    CHECK(Scalar(Q, 3, -6).str() == "-1/2");
    CHECK(Scalar::parse(Q, "4/6") == Scalar(Q, 2, 3));
    CHECK(Scalar::parse(Q, "-10/5").str() == "-2");
    CHECK((Scalar(Q, 1, 3) + Scalar(Q, 1, 6)).str() == "1/2");
    CHECK((Scalar(Q, 2, 3) * Scalar(Q, 3, 2)).is_one());
    CHECK_THROWS_AS(Scalar(Q, 1) / Scalar::zero(Q), DivisionByZero);
    CHECK_THROWS_AS(Scalar(Q, 1, 0), DivisionByZero);
    CHECK_THROWS_AS(Scalar::parse(Q, "1/x"), Error);
}

TEST_CASE("rationals promote to GMP and demote back")
{
    Scalar big(Q, std::int64_t{1} << 62);
    Scalar sq = big * big;
    CHECK(sq.str() == "21267647932558653966460912964485513216");
    CHECK((sq / big) == big);
    CHECK((sq - sq).is_zero());
    Scalar tiny = Scalar(Q, 1) / sq;
    CHECK((tiny * sq).is_one());
    CHECK(Scalar::parse(Q, "21267647932558653966460912964485513216") == sq);
}

TEST_CASE("prime field residues")
{
    Field f5 = Field::prime(5);
    CHECK(Scalar(f5, -1).str() == "4");
    CHECK((Scalar(f5, 2) * Scalar(f5, 3)).is_one());
    CHECK(Scalar(f5, 3).inverse() == Scalar(f5, 2));
    CHECK(Scalar::parse(f5, "7/3") == Scalar(f5, 4));  // 2 * 2 = 4
    CHECK_THROWS_AS(Scalar(f5, 5).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Field::prime(6), Error);
    CHECK_THROWS_AS(Scalar(f5, 1) + Scalar(Q, 1), FieldMismatch);
}

TEST_CASE("kernel_of examples")
{
    CHECK(kernel_of(DenseMatrix::from_ints(Q, {{1, 1}, {1, 1}})) ==
          Subspace::span(Q, 2, std::vector{vec(Q, {1, -1})}));
    CHECK(kernel_of(DenseMatrix::identity(Q, 3)).dim() == 0);

    // Oracle: enumerate all nine vectors of F_3^2.
    Field f3 = Field::prime(3);
    DenseMatrix m = DenseMatrix::from_ints(f3, {{1, 2}});
    std::vector<Vec> sols;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if ((a + 2 * b) % 3 == 0) sols.push_back(vec(f3, {a, b}));
    CHECK(sols.size() == 3);
    Subspace k = kernel_of(m);
    CHECK(k == Subspace::span(f3, 2, sols));
    CHECK(k == Subspace::span(f3, 2, std::vector{vec(f3, {1, 1})}));
}

TEST_CASE("intersect examples")
{
    Subspace x = Subspace::span(Q, 2, std::vector{vec(Q, {1, 0})});
    Subspace y = Subspace::span(Q, 2, std::vector{vec(Q, {0, 1})});
    CHECK(intersect(x, x) == x);
    CHECK(intersect(x, y).dim() == 0);
    Subspace a = Subspace::span(Q, 3, std::vector{vec(Q, {1, 1, 0}), vec(Q, {0, 0, 1})});
    Subspace b = Subspace::span(Q, 3, std::vector{vec(Q, {1, 1, 1})});
    CHECK(intersect(a, b) == b);
    CHECK_THROWS_AS(intersect(x, a), DimensionMismatch);
}

TEST_CASE("image_of examples")
{
    CHECK(image_of(DenseMatrix(Q, 3, 2)).dim() == 0);
    CHECK(image_of(DenseMatrix::identity(Q, 4)) == Subspace::full(Q, 4));
    CHECK(image_of(DenseMatrix::from_ints(Q, {{1}, {2}})) ==
          Subspace::span(Q, 2, std::vector{vec(Q, {1, 2})}));
}

TEST_CASE("tensor_map examples")
{
    CHECK(tensor_map(DenseMatrix::identity(Q, 2), DenseMatrix::identity(Q, 3)) == DenseMatrix::identity(Q, 6));

    std::mt19937 rng(7);
    DenseMatrix f = random_matrix(Q, 2, 3, rng), g = random_matrix(Q, 3, 2, rng);
    DenseMatrix fg = tensor_map(f, g);
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 2; ++j)
            CHECK(fg.column(pair_index(i, j, 2)) == tensor(f.column(i), g.column(j), 3));

    // Oracle: the 16x16 permutation (a,b,c,d) -> (b,a,d,c) built bit by bit.
    DenseMatrix swap = DenseMatrix::from_ints(Q, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    DenseMatrix oracle(Q, 16, 16);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    oracle.at(b * 8 + a * 4 + d * 2 + c, a * 8 + b * 4 + c * 2 + d) = Scalar::one(Q);
    DenseMatrix ss = tensor_map(swap, swap);
    CHECK(ss == oracle);
    CHECK(ss.column(5) == Vec::unit(Q, 10));
}

TEST_CASE("property: rank plus nullity")
{
    std::mt19937 rng(11);
    for (Field f : {Q, Field::prime(2), Field::prime(5)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
            DenseMatrix m = random_matrix(f, r, c, rng);
            Subspace k = kernel_of(m);
            CHECK(k.dim() + image_of(m).dim() == c);
            for (const auto& v : k.rows()) CHECK(apply_dense(m, v).is_zero());
        }
    }
}

TEST_CASE("property: kernel size matches brute force over F_2")
{
    std::mt19937 rng(3);
    Field f2 = Field::prime(2);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 8;
        DenseMatrix m = random_matrix(f2, r, c, rng, 1);
        std::size_t count = 0;
        for (unsigned bits = 0; bits < (1u << c); ++bits) {
            VecBuilder vb;
            for (std::size_t i = 0; i < c; ++i)
                if (bits >> i & 1) vb.add(i, Scalar::one(f2));
            if (apply_dense(m, vb.build()).is_zero()) ++count;
        }
        CHECK(count == (1u << kernel_of(m).dim()));
    }
}

TEST_CASE("property: intersect is commutative, associative, idempotent")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        auto sub = [&] { return image_of(random_matrix(Q, 5, 1 + rng() % 4, rng)); };
        Subspace a = sub(), b = sub(), c = sub();
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        CHECK(intersect(a, a) == a);
        Subspace ab = intersect(a, b);
        for (const auto& v : ab.rows()) {
            CHECK(a.contains(v));
            CHECK(b.contains(v));
        }
    }
}

TEST_CASE("property: tensor_map respects composition")
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        DenseMatrix f = random_matrix(Q, 2, 3, rng), f2 = random_matrix(Q, 3, 2, rng);
        DenseMatrix g = random_matrix(Q, 3, 2, rng), g2 = random_matrix(Q, 2, 3, rng);
        CHECK(tensor_map(f, g) * tensor_map(f2, g2) == tensor_map(f * f2, g * g2));
        CHECK(tensor_map(LinearMap::from_dense(f), LinearMap::from_dense(g)).to_dense() == tensor_map(f, g));
    }
}

TEST_CASE("subspace basis is canonical")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        DenseMatrix m = random_matrix(Q, 6, 4, rng);
        std::vector<Vec> cols;
        for (std::size_t c = 0; c < 4; ++c) cols.push_back(m.column(c).scaled(Scalar(Q, 1 + c)));
        std::reverse(cols.begin(), cols.end());
        Subspace s = Subspace::span(Q, 6, cols);
        CHECK(s == image_of(m));
        DenseMatrix b = s.basis();
        for (std::size_t r = 0; r < s.dim(); ++r) {
            CHECK(b.at(r, s.pivots()[r]).is_one());
            for (std::size_t r2 = 0; r2 < s.dim(); ++r2)
                if (r2 != r) CHECK(b.at(r2, s.pivots()[r]).is_zero());
        }
        for (const auto& v : cols) CHECK(s.inclusion().apply(s.coordinates(v)) == v);
    }
}
