#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dialg/linalg.hpp"
#include "support.hpp"

#include <random>

using namespace dialg;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<Rat>>& rows, int cols)
{
    SparseMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < cols; ++c)
            if (rows[r][c] != 0)
                m.set(static_cast<int>(r), c, rows[r][c]);
    return m;
}

} // namespace

TEST_CASE("kernel basics")
{
    SparseMatrix zero(3, 3);
    CHECK(kernel(zero).dim() == 3);

    SparseMatrix id(4, 4);
    for (int i = 0; i < 4; ++i)
        id.set(i, i, Rat(1));
    CHECK(kernel(id).dim() == 0);

    SparseMatrix m = from_dense({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, 2);
    Subspace k = kernel(m);
    CHECK(k.dim() == 1);
    CHECK(k.contains({Rat(-2), Rat(1)}));
}

TEST_CASE("image basics")
{
    SparseMatrix zero(3, 2);
    CHECK(image(zero).dim() == 0);
    SparseMatrix id(4, 4);
    for (int i = 0; i < 4; ++i)
        id.set(i, i, Rat(1));
    CHECK(image(id).dim() == 4);
    SparseMatrix m = from_dense({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, 2);
    CHECK(image(m).dim() == 1);
}

TEST_CASE("solve basics")
{
    SparseMatrix id(3, 3);
    for (int i = 0; i < 3; ++i)
        id.set(i, i, Rat(1));
    std::vector<Rat> b{Rat(5), Rat(-1, 2), Rat(0)};
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    SparseMatrix zero(2, 2);
    CHECK_FALSE(solve(zero, {Rat(1), Rat(0)}).has_value());

    SparseMatrix m = from_dense({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, 2);
    auto y = solve(m, {Rat(1), Rat(2)});
    REQUIRE(y.has_value());
    CHECK(m.apply(*y) == std::vector<Rat>{Rat(1), Rat(2)});
}

TEST_CASE("quotient coordinates")
{
    std::vector<SparseRow> full = {{{0, Rat(1)}}, {{1, Rat(1)}}, {{2, Rat(1)}}};
    Subspace v3 = Subspace::from_rows(3, full);

    // W = V: the zero map
    QuotientMap all(v3, v3);
    CHECK(all.dim() == 0);
    CHECK(all.coords({Rat(1), Rat(2), Rat(3)}).empty());

    // W = 0: identity coordinates
    QuotientMap none(v3, Subspace(3));
    CHECK(none.dim() == 3);
    CHECK(none.coords({Rat(1), Rat(2), Rat(3)}) == std::vector<Rat>{Rat(1), Rat(2), Rat(3)});

    // V a plane, W a line inside it
    Subspace plane = Subspace::from_vectors(
        3, {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}});
    Subspace line = Subspace::from_vectors(3, {{Rat(1), Rat(1), Rat(2)}});
    QuotientMap q(plane, line);
    CHECK(q.dim() == 1);
    CHECK(is_zero_vec(q.coords({Rat(2), Rat(2), Rat(4)}))); // in W
    CHECK_FALSE(is_zero_vec(q.coords({Rat(1), Rat(0), Rat(1)})));
    CHECK_THROWS_AS(q.coords({Rat(1), Rat(0), Rat(0)}), math_error); // outside V

    Subspace not_inside = Subspace::from_vectors(3, {{Rat(1), Rat(0), Rat(0)}});
    CHECK_THROWS_AS(QuotientMap(plane, not_inside), math_error);
}

TEST_CASE("rank-nullity and exactness on randomized matrices")
{
    std::mt19937 rng(20260810);
    const std::pair<int, int> shapes[] = {{5, 7}, {20, 15}, {60, 60}, {120, 80}, {200, 200}};
    for (auto [rows, cols] : shapes) {
        SparseMatrix m(rows, cols);
        std::uniform_int_distribution<int> rpick(0, rows - 1), cpick(0, cols - 1);
        int fill = rows * cols / 40 + 5;
        for (int t = 0; t < fill; ++t)
            m.set(rpick(rng), cpick(rng), test::small_rat(rng, 9));
        Subspace ker = kernel(m);
        CHECK(rank(m) + ker.dim() == cols);
        CHECK(rank(m) == test::dense_rank(test::to_dense(m)));
        for (int i = 0; i < ker.dim(); ++i)
            CHECK(is_zero_vec(m.apply(ker.basis_vector(i)))); // exact, no tolerance

        // consistent and inconsistent right-hand sides
        std::vector<Rat> x0(cols, Rat(0));
        for (int c = 0; c < cols; ++c)
            x0[c] = test::small_rat(rng, 3);
        std::vector<Rat> b = m.apply(x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);

        std::vector<Rat> bad(rows, Rat(0));
        for (int r = 0; r < rows; ++r)
            bad[r] = test::small_rat(rng, 3);
        auto maybe = solve(m, bad);
        if (!maybe.has_value())
            CHECK_FALSE(image(m).contains(bad));
        else
            CHECK(m.apply(*maybe) == bad);
    }
}

TEST_CASE("subspace equality is canonical")
{
    Subspace a = Subspace::from_vectors(3, {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}});
    Subspace b = Subspace::from_vectors(3, {{Rat(2), Rat(2), Rat(2)}, {Rat(0), Rat(0), Rat(-5)}});
    CHECK(a == b);
    Subspace c = Subspace::from_vectors(3, {{Rat(1), Rat(0), Rat(0)}});
    CHECK_FALSE(a == c);
}
