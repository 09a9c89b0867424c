#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gader/linalg.hpp"

using namespace gader;

namespace {

SparseRow row(std::initializer_list<Rational> dense) {
    SparseRow r;
    std::size_t j = 0;
    for (const Rational& q : dense) {
        if (!q.is_zero()) r.emplace_back(j, q);
        ++j;
    }
    return r;
}

Rational dot(const SparseRow& r, const std::vector<Rational>& v) {
    Rational s = 0;
    for (const auto& [j, q] : r) s += q * v[j];
    return s;
}

} // namespace

TEST_CASE("kernel of a rank-1 system") {
    std::vector<SparseRow> rows{row({1, 2, 3}), row({2, 4, 6})};
    auto basis = kernel_basis(rows, 3);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == std::vector<Rational>{2, -1, 0});
    CHECK(basis[1] == std::vector<Rational>{3, 0, -1});
    for (const auto& v : basis)
        for (const auto& r : rows) CHECK(dot(r, v) == Rational(0));
    CHECK(matrix_rank(rows, 3) == 1);
}

TEST_CASE("full-rank systems have empty kernels") {
    // A zero entry under a unit pivot once tripped an unsound elimination
    // shortcut; this matrix exercises exactly that shape.
    std::vector<SparseRow> rows{row({2, 1, 0}), row({0, 1, 1}), row({1, 0, 1})};
    CHECK(matrix_rank(rows, 3) == 3);
    CHECK(kernel_basis(rows, 3).empty());
}

TEST_CASE("rational rows are cleared exactly") {
    std::vector<SparseRow> rows{row({Rational(1, 2), Rational(1, 3)})};
    auto basis = kernel_basis(rows, 2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<Rational>{2, -3});
}

TEST_CASE("empty and zero systems leave everything free") {
    CHECK(kernel_basis({}, 4).size() == 4);
    std::vector<SparseRow> rows{row({0, 0, 0})};
    CHECK(kernel_basis(rows, 3).size() == 3);
    CHECK(matrix_rank(rows, 3) == 0);
}

TEST_CASE("span_rank") {
    std::vector<std::vector<Rational>> vecs{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}};
    CHECK(span_rank(vecs) == 2);
    CHECK(span_rank({}) == 0);
    CHECK(span_rank({{Rational(1, 7), Rational(2, 7)}}) == 1);
}

TEST_CASE("kernel vectors are integer, content-free, positive-lead") {
    std::vector<SparseRow> rows{row({1, 1, 1, 1}), row({0, 2, 4, 6})};
    auto basis = kernel_basis(rows, 4);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        for (const auto& r : rows) CHECK(dot(r, v) == Rational(0));
        bool lead = false;
        for (const Rational& q : v) {
            CHECK(q.is_integer());
            if (!q.is_zero() && !lead) {
                CHECK(q > Rational(0));
                lead = true;
            }
        }
    }
}
