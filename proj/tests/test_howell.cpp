#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ringauto/howell.hpp"
#include "ringauto/residues.hpp"

using namespace ringauto;
using howell::Row;

namespace {

// Every Z_n-combination of the generators, by brute force.
std::set<Row> brute_span(const std::vector<Row>& gens, std::uint64_t n,
                         std::size_t cols) {
    std::set<Row> out;
    std::vector<std::uint64_t> c(gens.size(), 0);
    while (true) {
        Row v(cols, 0);
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                v[j] = addmod(v[j], mulmod(c[i], gens[i][j], n), n);
        out.insert(v);
        std::size_t pos = 0;
        while (pos < c.size() && ++c[pos] == n) c[pos++] = 0;
        if (pos == c.size()) break;
    }
    return out;
}

std::vector<Row> rand_rows(std::mt19937_64& rng, std::uint64_t n,
                           std::size_t rows, std::size_t cols) {
    std::vector<Row> out(rows, Row(cols));
    for (auto& r : out)
        for (auto& v : r) v = rng() % n;
    return out;
}

} // namespace

TEST_CASE("canonical form of a single-row module over Z_4") {
    const auto basis = howell::howell_form({{2, 1}}, 4, 2);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == Row{2, 1});
    CHECK(basis[1] == Row{0, 2});
}

TEST_CASE("pivot structure of the canonical form") {
    std::mt19937_64 rng(5);
    for (const std::uint64_t n : {4u, 6u, 9u, 12u}) {
        for (int rep = 0; rep < 50; ++rep) {
            const auto basis =
                howell::howell_form(rand_rows(rng, n, 4, 5), n, 5);
            std::size_t last_pivot = 0;
            bool first = true;
            for (const Row& r : basis) {
                std::size_t j = 0;
                while (j < r.size() && r[j] == 0) ++j;
                REQUIRE(j < r.size());
                if (!first) CHECK(j > last_pivot);
                first = false;
                last_pivot = j;
                CHECK(n % r[j] == 0); // pivots divide n
            }
            // Entries above a pivot are reduced modulo the pivot.
            for (std::size_t i = 0; i < basis.size(); ++i) {
                std::size_t j = 0;
                while (basis[i][j] == 0) ++j;
                for (std::size_t k = 0; k < i; ++k)
                    CHECK(basis[k][j] < basis[i][j]);
            }
        }
    }
}

TEST_CASE("membership agrees with the brute-force span") {
    std::mt19937_64 rng(17);
    for (const std::uint64_t n : {4u, 6u, 12u}) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto gens = rand_rows(rng, n, 3, 4);
            const auto span = brute_span(gens, n, 4);
            const auto basis = howell::howell_form(gens, n, 4);
            Row v(4);
            for (v[0] = 0; v[0] < n; ++v[0])
                for (v[1] = 0; v[1] < n; ++v[1])
                    for (v[2] = 0; v[2] < n; ++v[2])
                        for (v[3] = 0; v[3] < n; ++v[3])
                            CHECK(howell::member(basis, v, n) ==
                                  (span.count(v) > 0));
        }
    }
}

TEST_CASE("the form is canonical under re-generation") {
    std::mt19937_64 rng(29);
    for (const std::uint64_t n : {4u, 9u, 12u}) {
        for (int rep = 0; rep < 30; ++rep) {
            auto gens = rand_rows(rng, n, 4, 5);
            const auto reference = howell::howell_form(gens, n, 5);

            // Shuffle, duplicate, zero-pad, and mix in row operations.
            std::shuffle(gens.begin(), gens.end(), rng);
            gens.push_back(gens.front());
            gens.emplace_back(5, 0);
            Row mixed(5, 0);
            for (const Row& g : gens) {
                const std::uint64_t c = rng() % n;
                for (std::size_t j = 0; j < 5; ++j)
                    mixed[j] = addmod(mixed[j], mulmod(c, g[j], n), n);
            }
            gens.push_back(mixed);
            std::shuffle(gens.begin(), gens.end(), rng);

            CHECK(howell::howell_form(gens, n, 5) == reference);
        }
    }
}

TEST_CASE("kernel agrees with a brute-force scan") {
    std::mt19937_64 rng(41);
    for (const std::uint64_t n : {4u, 6u, 9u}) {
        for (int rep = 0; rep < 20; ++rep) {
            const std::size_t k = 3, mcols = 3;
            const auto map_rows = rand_rows(rng, n, k, mcols);
            const auto ker = howell::kernel(map_rows, mcols, n);
            Row v(k);
            for (v[0] = 0; v[0] < n; ++v[0])
                for (v[1] = 0; v[1] < n; ++v[1])
                    for (v[2] = 0; v[2] < n; ++v[2]) {
                        Row image(mcols, 0);
                        for (std::size_t i = 0; i < k; ++i)
                            for (std::size_t j = 0; j < mcols; ++j)
                                image[j] = addmod(
                                    image[j], mulmod(v[i], map_rows[i][j], n),
                                    n);
                        const bool in_kernel = std::all_of(
                            image.begin(), image.end(),
                            [](std::uint64_t x) { return x == 0; });
                        CHECK(howell::member(ker, v, n) == in_kernel);
                    }
        }
    }
}

TEST_CASE("kernel of an injective map is trivial") {
    // Determinant 3, a unit mod 5, so the kernel must vanish.
    const auto ker = howell::kernel({{2, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3, 5);
    CHECK(ker.empty());
}
