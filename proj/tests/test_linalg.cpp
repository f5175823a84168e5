#include <catch2/catch.hpp>

#include <random>

#include "permext/linalg.hpp"

using namespace permext;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Matrix random_matrix(FieldSpec f, std::size_t rows, std::size_t cols, std::mt19937& rng) {
    std::uniform_int_distribution<long> dist(-4, 4);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, Scalar(f, dist(rng)));
    return m;
}

}  // namespace

TEST_CASE("vector basics", "[linalg]") {
    auto v = Vector::from_ints(Q, {1, -2, 3});
    CHECK(v.size() == 3);
    CHECK(v[1] == Scalar(Q, -2));
    CHECK(v.to_string() == "(1, -2, 3)");
    CHECK((v - v).is_zero());
    CHECK(Vector::unit(Q, 3, 0) + Vector::unit(Q, 3, 1) == Vector::from_ints(Q, {1, 1, 0}));
    CHECK(Scalar(Q, 2) * v == Vector::from_ints(Q, {2, -4, 6}));
    CHECK_THROWS_AS(v + Vector::from_ints(Q, {1, 2}), DimensionError);
    CHECK_THROWS_AS(v + Vector::from_ints(FieldSpec::prime_field(5), {1, 2, 3}),
                    FieldMismatchError);
}

TEST_CASE("rref identity case", "[linalg]") {
    auto rr = rref(Matrix::identity(Q, 2));
    CHECK(rr.reduced == Matrix::identity(Q, 2));
    CHECK(rr.rank == 2);
    CHECK(rr.pivot_columns == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref of dependent rows over Q", "[linalg]") {
    // rows (1,0),(0,1),(1,1): hand reduction leaves two pivot rows
    auto m = Matrix::from_ints(Q, {{1, 0}, {0, 1}, {1, 1}});
    auto rr = rref(m);
    CHECK(rr.rank == 2);
    CHECK(rr.pivot_columns == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref over GF(5) sees the modular dependence", "[linalg]") {
    // second row = 2 * first mod 5
    auto f5 = FieldSpec::prime_field(5);
    auto m = Matrix::from_ints(f5, {{1, 2}, {2, 4}});
    auto rr = rref(m);
    CHECK(rr.rank == 1);
    CHECK(rr.pivot_columns == std::vector<std::size_t>{0});
}

TEST_CASE("kernel of independent columns is empty", "[linalg]") {
    auto m = Matrix::from_columns(Q, {Vector::from_ints(Q, {1, 0}), Vector::from_ints(Q, {0, 1})});
    CHECK(kernel_basis(m).empty());
}

TEST_CASE("kernel of a unique dependence", "[linalg]") {
    // columns (1,0),(0,1),(1,1): kernel spanned by (1,1,-1) up to scale
    auto m = Matrix::from_columns(
        Q, {Vector::from_ints(Q, {1, 0}), Vector::from_ints(Q, {0, 1}),
            Vector::from_ints(Q, {1, 1})});
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == Vector::from_ints(Q, {-1, -1, 1}));
    CHECK((m * basis[0]).is_zero());

    auto f2 = FieldSpec::prime_field(2);
    auto m2 = Matrix::from_columns(
        f2, {Vector::from_ints(f2, {1, 0}), Vector::from_ints(f2, {0, 1}),
             Vector::from_ints(f2, {1, 1})});
    auto basis2 = kernel_basis(m2);
    REQUIRE(basis2.size() == 1);
    CHECK(basis2[0] == Vector::from_ints(f2, {1, 1, 1}));  // -1 = 1 in GF(2)
}

TEST_CASE("relation space fixtures", "[linalg]") {
    CHECK(relation_space({Vector::from_ints(Q, {1, 0}), Vector::from_ints(Q, {0, 1})}).empty());

    auto rels = relation_space({Vector::from_ints(Q, {1, 0}), Vector::from_ints(Q, {0, 1}),
                                Vector::from_ints(Q, {-1, -1})});
    REQUIRE(rels.size() == 1);
    CHECK(rels[0] == Vector::from_ints(Q, {1, 1, 1}));

    // 2 x1 - x2 = 0: one relation, proportional to (2,-1)
    auto rels2 = relation_space({Vector::from_ints(Q, {1, 0}), Vector::from_ints(Q, {2, 0})});
    REQUIRE(rels2.size() == 1);
    auto sum = rels2[0][0] * Vector::from_ints(Q, {1, 0}) + rels2[0][1] * Vector::from_ints(Q, {2, 0});
    CHECK(sum.is_zero());
    CHECK(rels2[0][0] * Scalar(Q, -1) == rels2[0][1] * Scalar(Q, 2));  // span of (2,-1)
}

TEST_CASE("invert and determinant basics", "[linalg]") {
    CHECK(*invert(Matrix::identity(Q, 3)) == Matrix::identity(Q, 3));

    auto m = Matrix::from_ints(Q, {{1, 1}, {0, 1}});
    auto mi = invert(m);
    REQUIRE(mi.has_value());
    CHECK(*mi == Matrix::from_ints(Q, {{1, -1}, {0, 1}}));
    CHECK(*mi * m == Matrix::identity(Q, 2));
    CHECK(m * *mi == Matrix::identity(Q, 2));

    auto f5 = FieldSpec::prime_field(5);
    CHECK(determinant(Matrix::from_ints(f5, {{2, 0}, {0, 2}})) == Scalar(f5, 4));

    CHECK_FALSE(invert(Matrix::from_ints(Q, {{1, 2}, {2, 4}})).has_value());
    CHECK(determinant(Matrix::from_ints(Q, {{1, 2}, {2, 4}})).is_zero());
}

TEST_CASE("solve returns an exact particular solution", "[linalg]") {
    auto a = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
    auto x = solve(a, Vector::from_ints(Q, {5, 6}));
    REQUIRE(x.has_value());
    CHECK(a * *x == Vector::from_ints(Q, {5, 6}));

    // inconsistent system
    auto bad = solve(Matrix::from_ints(Q, {{1, 1}, {1, 1}}), Vector::from_ints(Q, {0, 1}));
    CHECK_FALSE(bad.has_value());

    CHECK_THROWS_AS(solve(a, Vector::from_ints(Q, {1, 2, 3})), DimensionError);
}

TEST_CASE("inverse multiplies back to identity exactly", "[linalg][property]") {
    std::mt19937 rng(4242);
    for (auto f : {Q, FieldSpec::prime_field(5), FieldSpec::prime_field(13)}) {
        for (int iter = 0; iter < 60; ++iter) {
            auto m = random_matrix(f, 3, 3, rng);
            auto mi = invert(m);
            if (!mi.has_value()) {
                CHECK(determinant(m).is_zero());
                continue;
            }
            CHECK_FALSE(determinant(m).is_zero());
            CHECK(m * *mi == Matrix::identity(f, 3));
            CHECK(*mi * m == Matrix::identity(f, 3));
        }
    }
}

TEST_CASE("rank plus nullity equals column count", "[linalg][property]") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<std::size_t> rows_dist(1, 4), cols_dist(1, 5);
    for (auto f : {Q, FieldSpec::prime_field(2), FieldSpec::prime_field(7)}) {
        for (int iter = 0; iter < 80; ++iter) {
            auto m = random_matrix(f, rows_dist(rng), cols_dist(rng), rng);
            auto rr = rref(m);
            auto kernel = kernel_basis(m);
            CHECK(rr.rank + kernel.size() == m.cols());
            for (const auto& c : kernel) CHECK((m * c).is_zero());
        }
    }
}

TEST_CASE("relation vectors re-substitute to zero", "[linalg][property]") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<long> dist(-3, 3);
    std::uniform_int_distribution<std::size_t> count(1, 5);
    for (auto f : {Q, FieldSpec::prime_field(3)}) {
        for (int iter = 0; iter < 60; ++iter) {
            std::vector<Vector> xs;
            std::size_t k = count(rng);
            for (std::size_t i = 0; i < k; ++i)
                xs.push_back(Vector::from_ints(f, {dist(rng), dist(rng), dist(rng)}));
            auto rels = relation_space(xs);
            CHECK(rels.size() == xs.size() - span_rank(xs));
            for (const auto& c : rels) {
                auto acc = Vector::zero(f, 3);
                for (std::size_t i = 0; i < k; ++i) acc = acc + c[i] * xs[i];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("mixed-field matrix input is rejected", "[linalg]") {
    Matrix m(Q, 2, 2);
    CHECK_THROWS_AS(m.set(0, 0, Scalar(FieldSpec::prime_field(3), 1)), FieldMismatchError);
    CHECK_THROWS_AS(Matrix::identity(Q, 2) * Matrix::identity(FieldSpec::prime_field(3), 2),
                    FieldMismatchError);
    CHECK_THROWS_AS(Matrix::identity(Q, 2) * Matrix::identity(Q, 3), DimensionError);
}
