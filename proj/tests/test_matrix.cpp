#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "glcq/glcq.hpp"

using namespace glcq;

namespace {

// Cofactor-expansion determinant, an independent oracle for rank.
Scalar det(const std::vector<std::vector<Scalar>>& a, const FieldPtr& F) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    Scalar acc = Scalar::zero(F);
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        std::vector<std::vector<Scalar>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Scalar> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        const Scalar term = a[0][j] * det(minor, F);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Largest k with a nonsingular k x k submatrix.
std::size_t rank_oracle(const ScalarMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    for (std::size_t k = std::min(R, C); k >= 1; --k) {
        for (std::uint64_t rmask = 0; rmask < (1ull << R); ++rmask) {
            if (static_cast<std::size_t>(__builtin_popcountll(rmask)) != k) continue;
            for (std::uint64_t cmask = 0; cmask < (1ull << C); ++cmask) {
                if (static_cast<std::size_t>(__builtin_popcountll(cmask)) != k) continue;
                std::vector<std::vector<Scalar>> sub;
                for (std::size_t r = 0; r < R; ++r) {
                    if (!(rmask >> r & 1)) continue;
                    std::vector<Scalar> row;
                    for (std::size_t c = 0; c < C; ++c)
                        if (cmask >> c & 1) row.push_back(m.at(r, c));
                    sub.push_back(std::move(row));
                }
                if (!det(sub, m.field()).is_zero()) return k;
            }
        }
    }
    return 0;
}

bool is_zero_vector_image(const ScalarMatrix& m, const std::vector<Scalar>& v) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Scalar acc = Scalar::zero(m.field());
        for (std::size_t c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[c];
        if (!acc.is_zero()) return false;
    }
    return true;
}

// Independence of the basis: stacking the vectors as rows keeps full rank.
std::size_t stacked_rank(const FieldPtr& F, const std::vector<std::vector<Scalar>>& basis,
                         std::size_t cols) {
    ScalarMatrix B(F, basis.size(), cols);
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) B.set(r, c, basis[r][c]);
    return rank(B);
}

ScalarMatrix random_matrix(Rng& rng, const FieldPtr& F, std::size_t rows, std::size_t cols) {
    ScalarMatrix m(F, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            // sparse-ish small entries, sometimes q powers
            const long long kind = rng.uniform(0, 3);
            if (kind == 0) continue;
            Scalar v = Scalar::integer(F, rng.uniform(-3, 3));
            if (kind == 2) v *= Scalar::qpow(F, rng.uniform(-2, 2));
            m.set(r, c, v);
        }
    return m;
}

} // namespace

TEST_CASE("nullspace of the identity is empty") {
    auto F = Field::generic_q();
    ScalarMatrix m(F, 2, 2);
    m.set(0, 0, Scalar::one(F));
    m.set(1, 1, Scalar::one(F));
    CHECK(nullspace(m).empty());
    CHECK(rank(m) == 2);
}

TEST_CASE("nullspace of a zero matrix is the full space") {
    auto F = Field::generic_q();
    ScalarMatrix m(F, 2, 3);
    const auto basis = nullspace(m);
    REQUIRE(basis.size() == 3);
    CHECK(rank(m) == 0);
    // reduced echelon normal form: unit vectors
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(basis[i][j] == (i == j ? Scalar::one(F) : Scalar::zero(F)));
}

TEST_CASE("rank-1 generic example has the expected kernel") {
    auto F = Field::generic_q();
    const Scalar q = Scalar::qpow(F, 1);
    ScalarMatrix m(F, 2, 2);
    m.set(0, 0, Scalar::one(F));
    m.set(0, 1, q);
    m.set(1, 0, q);
    m.set(1, 1, q * q);
    const auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == -q);
    CHECK(basis[0][1] == Scalar::one(F));
    CHECK(rank(m) == 1);
    CHECK(rank_oracle(m) == 1);
}

TEST_CASE("zero-row matrices are handled") {
    auto F = Field::rational_q(Rational(2));
    ScalarMatrix m(F, 0, 4);
    CHECK(rank(m) == 0);
    CHECK(nullspace(m).size() == 4);
}

TEST_CASE("nullspace invariants on random matrices in all modes") {
    for (const auto& F :
         {Field::generic_q(), Field::root_of_unity(5), Field::rational_q(Rational(2, 3))}) {
        CAPTURE(F->describe());
        Rng rng(23);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 4));
            const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 5));
            const ScalarMatrix m = random_matrix(rng, F, rows, cols);

            const std::size_t rk = rank(m);
            const auto basis = nullspace(m);

            CHECK(rk == rank_oracle(m));
            CHECK(rk + basis.size() == cols);
            for (const auto& v : basis) CHECK(is_zero_vector_image(m, v));
            if (!basis.empty()) CHECK(stacked_rank(F, basis, cols) == basis.size());
        }
    }
}
