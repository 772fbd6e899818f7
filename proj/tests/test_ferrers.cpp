#include <doctest.h>

#include <numeric>

#include "fdrc/ferrers.hpp"

using namespace fdrc;

namespace {

// independent counter: chains 1 <= g_0 <= ... <= g_{n-2} <= m with g_{n-1} = m
std::size_t count_chains(std::size_t m, std::size_t free_cols, std::size_t lo) {
    if (free_cols == 0) return 1;
    std::size_t total = 0;
    for (std::size_t g = lo; g <= m; ++g) total += count_chains(m, free_cols - 1, g);
    return total;
}

const std::string kExample1Grid =
    "XXXX\n"
    "XXXX\n"
    "..XX\n"
    "..XX\n"
    "...X\n";

}  // namespace

TEST_CASE("gamma chain validation") {
    CHECK_THROWS_AS(FerrersDiagram({}), PreconditionError);
    CHECK_THROWS_AS(FerrersDiagram({0, 2}), PreconditionError);
    CHECK_THROWS_AS(FerrersDiagram({2, 1}), PreconditionError);
    CHECK(FerrersDiagram({1, 2, 2}).rows() == 2);  // wide shapes are representable
    CHECK(FerrersDiagram({5}).cols() == 1);
}

TEST_CASE("grid parse and render round trip") {
    auto f = FerrersDiagram::parse(kExample1Grid);
    CHECK(f.gamma() == std::vector<std::size_t>{2, 2, 4, 5});
    CHECK(f.rows() == 5);
    CHECK(f.cols() == 4);
    CHECK(f.total_dots() == 13);
    CHECK(f.render() == kExample1Grid);
    CHECK(FerrersDiagram::parse(f.render()) == f);
    CHECK(f.render_compact() == "gamma: 2 2 4 5");
    CHECK(FerrersDiagram::parse(f.render_compact()) == f);
}

TEST_CASE("parse rejects malformed grids") {
    CHECK_THROWS_AS(FerrersDiagram::parse(""), ParseError);
    CHECK_THROWS_AS(FerrersDiagram::parse("XX\nX"), ParseError);       // ragged
    CHECK_THROWS_AS(FerrersDiagram::parse("XX.\nXXX"), ParseError);    // left shifted
    CHECK_THROWS_AS(FerrersDiagram::parse("X.\n.X"), ParseError);      // column gap
    CHECK_THROWS_AS(FerrersDiagram::parse(".X\nX."), ParseError);
    CHECK_THROWS_AS(FerrersDiagram::parse("X\n."), ParseError);        // empty bottom row
    CHECK_THROWS_AS(FerrersDiagram::parse(".\nX"), ParseError);
    CHECK_THROWS_AS(FerrersDiagram::parse("XO\nXX"), ParseError);      // bad char
    CHECK_THROWS_AS(FerrersDiagram::parse("gamma: 2 1"), ParseError);
    CHECK_THROWS_AS(FerrersDiagram::parse("gamma: 0 1"), ParseError);
    CHECK_THROWS_AS(FerrersDiagram::parse("gamma:"), ParseError);
    CHECK_THROWS_AS(FerrersDiagram::parse("gamma: x"), ParseError);
    CHECK(FerrersDiagram::parse("XX\nXX\r\n").gamma() == std::vector<std::size_t>{2, 2});
}

TEST_CASE("row counts") {
    auto f = FerrersDiagram({2, 2, 4, 5});
    CHECK(f.rho() == std::vector<std::size_t>{4, 4, 2, 2, 1});
    CHECK(f.row_count(0) == f.cols());
    CHECK_THROWS_AS((void)f.row_count(5), PreconditionError);
}

TEST_CASE("dot membership and conformance") {
    auto f = FerrersDiagram({2, 2, 4, 5});
    CHECK(f.has_dot(0, 0));
    CHECK(f.has_dot(1, 1));
    CHECK_FALSE(f.has_dot(2, 0));
    CHECK(f.has_dot(4, 3));
    CHECK_FALSE(f.has_dot(4, 2));
    CHECK_THROWS_AS((void)f.has_dot(5, 0), PreconditionError);

    auto q2 = Field::gf(2, 1);
    CHECK(f.conforms(Mat(q2, 5, 4)));
    Mat ones(q2, 5, 4);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 4; ++c) ones.set(r, c, 1);
    CHECK_FALSE(f.conforms(ones));
    auto full = FerrersDiagram({5, 5, 5, 5});
    CHECK(full.conforms(ones));
    Mat on_dots(q2, 5, 4);
    on_dots.set(1, 0, 1);
    on_dots.set(3, 2, 1);
    CHECK(f.conforms(on_dots));
    on_dots.set(2, 1, 1);  // a hole
    CHECK_FALSE(f.conforms(on_dots));
    CHECK_THROWS_AS(f.conforms(Mat(q2, 4, 4)), PreconditionError);
}

TEST_CASE("diagonal dot counts") {
    auto tri = FerrersDiagram({1, 2, 3, 4, 5});
    CHECK(tri.thetas() == std::vector<std::size_t>{1, 2, 3, 4, 5});
    CHECK(tri.theta(0) == 1);
    CHECK(tri.theta(4) == 5);
    CHECK_THROWS_AS((void)tri.theta(5), PreconditionError);

    auto wide8x5 = FerrersDiagram({2, 4, 4, 6, 8});
    CHECK(wide8x5.thetas() == std::vector<std::size_t>{1, 2, 3, 4, 5, 5, 3, 1});

    auto mid6 = FerrersDiagram({1, 1, 1, 3, 4, 6});
    CHECK(mid6.thetas() == std::vector<std::size_t>{1, 2, 3, 4, 4, 2});
}

TEST_CASE("diagonal cells come topmost first and may skip holes") {
    auto tri = FerrersDiagram({1, 2, 3, 4, 5});
    using Cell = std::pair<std::size_t, std::size_t>;
    CHECK(tri.diagonal_dots(4) ==
          std::vector<Cell>{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}});
    CHECK(tri.diagonal_dots(0) == std::vector<Cell>{{0, 4}});

    auto gapped = FerrersDiagram({2, 2, 2, 5, 5});
    CHECK(gapped.diagonal_dots(4) == std::vector<Cell>{{0, 0}, {1, 1}, {3, 3}, {4, 4}});
    CHECK(gapped.theta(4) == 4);
}

TEST_CASE("diagonal coverage predicate") {
    CHECK(FerrersDiagram({1, 2, 3, 4, 5}).diagonals_cover_all_dots());
    CHECK(FerrersDiagram({2, 4, 4, 6, 8}).diagonals_cover_all_dots());
    CHECK_FALSE(FerrersDiagram({2, 2}).diagonals_cover_all_dots());
    CHECK_FALSE(FerrersDiagram({5, 5, 5, 5, 5}).diagonals_cover_all_dots());
    CHECK(FerrersDiagram({1, 1, 1, 3, 4, 6}).diagonals_cover_all_dots());
}

TEST_CASE("dots removed for the bound") {
    auto ex1 = FerrersDiagram({2, 2, 4, 5});
    CHECK(ex1.nu(0, 1) == ex1.total_dots());
    CHECK(ex1.nu(0, 2) == 8);
    CHECK(ex1.nu(1, 2) == 9);
    CHECK_THROWS_AS((void)ex1.nu(2, 2), PreconditionError);
    CHECK_THROWS_AS((void)ex1.nu(0, 5), PreconditionError);
    CHECK_THROWS_AS((void)ex1.nu(0, 0), PreconditionError);
}

TEST_CASE("upper bound on worked diagrams") {
    auto ex1 = FerrersDiagram({2, 2, 4, 5});
    auto b1 = ex1.upper_bound(2);
    CHECK(b1.value == 8);
    CHECK(b1.argmin == 0);
    CHECK(b1.nus == std::vector<std::size_t>{8, 9});
    CHECK(b1.argmins == std::vector<std::size_t>{0});

    auto tri = FerrersDiagram({1, 2, 3, 4, 5});
    auto b2 = tri.upper_bound(3);
    CHECK(b2.value == 6);
    CHECK(b2.argmin == 0);
    CHECK(b2.argmins == std::vector<std::size_t>{0, 1, 2});

    CHECK(FerrersDiagram({1, 3, 3, 4}).upper_bound(3).value == 4);
    CHECK(FerrersDiagram({1, 3, 3, 4}).upper_bound(3).nus ==
          std::vector<std::size_t>{4, 4, 4});

    auto w = FerrersDiagram({2, 4, 4, 6, 8}).upper_bound(3);
    CHECK(w.value == 10);
    CHECK(w.argmin == 0);

    auto mid6 = FerrersDiagram({1, 1, 1, 3, 4, 6}).upper_bound(3);
    CHECK(mid6.value == 5);
    CHECK(mid6.argmin == 1);

    auto full = FerrersDiagram({4, 4, 4}).upper_bound(2);
    CHECK(full.value == 8);  // m(n-delta+1) at i = 0

    auto ex7 = FerrersDiagram({1, 2, 3, 3, 3, 3, 13}).upper_bound(3);
    CHECK(ex7.value == 9);
    CHECK(ex7.argmin == 1);
    CHECK(ex7.nus == std::vector<std::size_t>{12, 9, 15});
}

TEST_CASE("bound is monotone in delta and capped by the dot count") {
    for (const auto& f : enumerate_diagrams(4, 4)) {
        std::size_t prev = f.total_dots();
        CHECK(f.upper_bound(1).value == prev);
        for (std::size_t d = 1; d <= f.cols(); ++d) {
            const auto b = f.upper_bound(d);
            CHECK(b.value <= prev);
            prev = b.value;
        }
    }
}

TEST_CASE("row and diagonal countings agree with the dot total") {
    for (const auto& f : enumerate_diagrams(5, 5)) {
        const auto sum = [](const std::vector<std::size_t>& v) {
            return std::accumulate(v.begin(), v.end(), std::size_t{0});
        };
        CHECK(sum(f.rho()) == f.total_dots());
        // the diagonals only count dots they cover; equality needs coverage
        if (f.diagonals_cover_all_dots())
            CHECK(sum(f.thetas()) == f.total_dots());
        else
            CHECK(sum(f.thetas()) < f.total_dots());
    }
}

TEST_CASE("anti transpose") {
    auto ex1 = FerrersDiagram({2, 2, 4, 5});
    auto t = ex1.anti_transpose();
    CHECK(t.gamma() == std::vector<std::size_t>{1, 2, 2, 4, 4});
    CHECK(t.rows() == 4);
    CHECK(t.cols() == 5);
    CHECK(t.anti_transpose() == ex1);
    CHECK(t.total_dots() == ex1.total_dots());

    auto tri = FerrersDiagram({1, 2, 3, 4, 5});
    CHECK(tri.anti_transpose() == tri);

    auto full = FerrersDiagram({3, 3});
    CHECK(full.anti_transpose().gamma() == std::vector<std::size_t>{2, 2, 2});

    for (const auto& f : enumerate_diagrams(5, 4))
        for (std::size_t d = 1; d <= 4; ++d)
            CHECK(f.upper_bound(d).value == f.anti_transpose().upper_bound(d).value);
}

TEST_CASE("anti transpose matches the matrix cell map") {
    auto f = FerrersDiagram({2, 2, 4, 5});
    auto t = f.anti_transpose();
    for (std::size_t r = 0; r < f.rows(); ++r)
        for (std::size_t c = 0; c < f.cols(); ++c)
            CHECK(f.has_dot(r, c) == t.has_dot(f.cols() - 1 - c, f.rows() - 1 - r));
}

TEST_CASE("top right subdiagram") {
    auto tri = FerrersDiagram({1, 2, 3, 4, 5});
    CHECK(tri.subdiagram_top_right(5, 5) == tri);
    CHECK(tri.subdiagram_top_right(1, 1).gamma() == std::vector<std::size_t>{1});
    CHECK(tri.subdiagram_top_right(4, 4).gamma() == std::vector<std::size_t>{2, 3, 4, 4});
    CHECK_THROWS_AS(tri.subdiagram_top_right(0, 1), PreconditionError);
    CHECK_THROWS_AS(tri.subdiagram_top_right(6, 1), PreconditionError);
    CHECK_THROWS_AS(tri.subdiagram_top_right(1, 6), PreconditionError);
}

TEST_CASE("diagram enumeration") {
    CHECK(enumerate_diagrams(1, 1).size() == 1);
    auto two = enumerate_diagrams(2, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].gamma() == std::vector<std::size_t>{1, 2});
    CHECK(two[1].gamma() == std::vector<std::size_t>{2, 2});

    auto d32 = enumerate_diagrams(3, 2);
    REQUIRE(d32.size() == 3);
    CHECK(d32[0].gamma() == std::vector<std::size_t>{1, 3});
    CHECK(d32[2].gamma() == std::vector<std::size_t>{3, 3});

    auto d44 = enumerate_diagrams(4, 4);
    CHECK(d44.size() == count_chains(4, 3, 1));
    CHECK(d44.size() == 20);
    for (std::size_t i = 1; i < d44.size(); ++i)
        CHECK(d44[i - 1].gamma() < d44[i].gamma());  // strictly ascending, so unique

    std::size_t total = 0;
    for (std::size_t m = 1; m <= 5; ++m)
        for (std::size_t n = 1; n <= m; ++n) {
            auto ds = enumerate_diagrams(m, n);
            CHECK(ds.size() == count_chains(m, n - 1, 1));
            total += ds.size();
        }
    CHECK(total == 175);
}
