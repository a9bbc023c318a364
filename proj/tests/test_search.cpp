#include <catch2/catch.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>

#include "helpers.hpp"

using namespace bsform;
using namespace bsform::testing;

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / fs::path("bsform_test_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
};

std::vector<std::string> split(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == delim) { out.push_back(cur); cur.clear(); }
        else cur += c;
    }
    out.push_back(cur);
    return out;
}

// 64-bit trial division, the independent factorization oracle.
std::vector<std::pair<std::uint64_t, int>> trial_division(std::uint64_t x) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p = 2; p * p <= x; ++p) {
        int e = 0;
        while (x % p == 0) { x /= p; ++e; }
        if (e) out.emplace_back(p, e);
    }
    if (x > 1) out.emplace_back(x, 1);
    return out;
}

} // namespace

TEST_CASE("factorize") {
    SECTION("units have the empty factorization") {
        REQUIRE(factorize(mpz_class(1)).empty());
        REQUIRE(factorize(mpz_class(-1)).empty());
    }
    SECTION("12 = 2^2 * 3") {
        REQUIRE(factorize(mpz_class(12)) == Factorization{{mpz_class(2), 2}, {mpz_class(3), 1}});
        REQUIRE(factorize(mpz_class(-12)) == Factorization{{mpz_class(2), 2}, {mpz_class(3), 1}});
    }
    SECTION("zero is rejected") {
        REQUIRE_THROWS_AS(factorize(mpz_class(0)), std::invalid_argument);
    }
    SECTION("random 64-bit values against the trial-division oracle") {
        Rng rng(424242);
        std::uniform_int_distribution<std::uint64_t> pick(2, (std::uint64_t{1} << 40));
        for (int trial = 0; trial < 40; ++trial) {
            const std::uint64_t x = pick(rng);
            const auto expected = trial_division(x);
            const auto got = factorize(mpz_class(static_cast<unsigned long>(x)));
            REQUIRE(got.size() == expected.size());
            for (std::size_t k = 0; k < got.size(); ++k) {
                REQUIRE(got[k].first == mpz_class(static_cast<unsigned long>(expected[k].first)));
                REQUIRE(got[k].second == expected[k].second);
            }
        }
    }
    SECTION("semiprime past the trial-division bound") {
        const mpz_class p("1000003"), q("1000033");
        const auto f = factorize(p * q);
        REQUIRE(f == Factorization{{p, 1}, {q, 1}});
    }
    SECTION("prime power with a large prime") {
        const mpz_class p("1000003");
        REQUIRE(factorize(p * p) == Factorization{{p, 2}});
    }
    SECTION("max_prime_factor") {
        REQUIRE(max_prime_factor(factorize(mpz_class(12))) == 3);
        REQUIRE(max_prime_factor({}) == 0);
    }
}

TEST_CASE("seed enumeration") {
    SECTION("tightest bounds give the single minimal seed") {
        const auto seeds = enumerate_seeds(2, 2, 1, 1);
        REQUIRE(seeds.size() == 1);
        REQUIRE(seeds[0] == SeedData{2, {{1, 1}}});
    }
    SECTION("n = 2 with room for two blocks") {
        const auto seeds = enumerate_seeds(2, 2, 2, 2);
        REQUIRE(seeds.size() == 2);
        REQUIRE(seeds[0] == SeedData{2, {{1, 1}}});
        REQUIRE(seeds[1] == SeedData{2, {{1, 1}, {1, 1}}});
    }
    SECTION("count matches the unfiltered brute force, n = 3, a <= 4") {
        // brute force: every (k, a) tuple list, balance checked afterwards
        std::size_t expected = 0;
        const int n = 3, m_max = 4, a_max = 4;
        std::function<void(std::vector<SeedData::Block>&)> rec =
            [&](std::vector<SeedData::Block>& acc) {
                if (!acc.empty()) {
                    SeedData s{n, acc};
                    int total_a = 0;
                    for (const auto& b : acc) total_a += b.a;
                    if (total_a <= a_max && s.total_w_length() == total_a) ++expected;
                }
                if (static_cast<int>(acc.size()) == m_max) return;
                for (int k = 1; k <= n - 1; ++k)
                    for (int a = 1; a <= a_max; ++a) {
                        acc.push_back({k, a});
                        rec(acc);
                        acc.pop_back();
                    }
            };
        std::vector<SeedData::Block> acc;
        rec(acc);
        REQUIRE(enumerate_seeds(3, 3, m_max, a_max).size() == expected);
    }
    SECTION("lexicographic order and uniqueness, every seed balanced") {
        const auto seeds = enumerate_seeds(2, 4, 4, 5);
        for (std::size_t k = 0; k < seeds.size(); ++k) {
            REQUIRE_NOTHROW(seeds[k].validate());
            if (k == 0) continue;
            const auto& a = seeds[k - 1];
            const auto& b = seeds[k];
            auto key = [](const SeedData& s) {
                std::vector<int> v{s.n, s.m()};
                for (const auto& blk : s.blocks) v.push_back(blk.k);
                for (const auto& blk : s.blocks) v.push_back(blk.a);
                return v;
            };
            REQUIRE(key(a) < key(b));
        }
    }
    SECTION("bad bounds are rejected") {
        REQUIRE_THROWS_AS(enumerate_seeds(1, 2, 1, 1), std::invalid_argument);
        REQUIRE_THROWS_AS(enumerate_seeds(2, 2, 0, 1), std::invalid_argument);
    }
    SECTION("the worked example seed appears exactly once in the n = 4 enumeration") {
        const SeedData example{4, {{2, 3}, {3, 2}, {2, 2}, {1, 2}, {1, 2}}};
        const auto seeds = enumerate_seeds(4, 4, 5, 11);
        std::size_t hits = 0;
        for (const auto& s : seeds)
            if (s == example) ++hits;
        REQUIRE(hits == 1);
    }
}

TEST_CASE("CSV rows") {
    SearchRecord rec;
    rec.seed = SeedData{4, {{2, 3}, {3, 2}}};
    rec.N = 9;
    rec.len_x = 20;
    rec.C_abs = 12;
    rec.factors = {{mpz_class(2), 2}, {mpz_class(3), 1}};
    REQUIRE(record_to_csv(rec) == "4,2,2:3 3:2,9,20,12,2^2 3^1,3");
    rec.C_abs = 1;
    rec.factors.clear();
    REQUIRE(record_to_csv(rec) == "4,2,2:3 3:2,9,20,1,,1");
    rec.C_abs = 0;
    REQUIRE(record_to_csv(rec) == "4,2,2:3 3:2,9,20,0,,0");
}

TEST_CASE("search runs deterministically and resumes cleanly") {
    TempDir tmp;
    const SearchBounds bounds{3, 3, 6, 6};

    SearchOptions opt1;
    opt1.threads = 1;
    const auto full = run_search(bounds, (tmp.path / "a.csv").string(), opt1);
    REQUIRE(full.completed);
    REQUIRE(full.seeds_processed > 0);

    SECTION("byte-identical across runs and thread counts") {
        SearchOptions opt4;
        opt4.threads = 4;
        run_search(bounds, (tmp.path / "b.csv").string(), opt4);
        REQUIRE(slurp(tmp.path / "a.csv") == slurp(tmp.path / "b.csv"));
    }

    SECTION("interrupt and resume reproduces the uninterrupted run") {
        SearchOptions first;
        first.threads = 2;
        first.stop_after = full.seeds_processed / 2;
        const auto partial = run_search(bounds, (tmp.path / "c.csv").string(), first);
        REQUIRE_FALSE(partial.completed);
        SearchOptions second;
        second.threads = 2;
        second.resume_checkpoint = (tmp.path / "c.csv").string() + ".checkpoint";
        const auto resumed = run_search(bounds, (tmp.path / "c.csv").string(), second);
        REQUIRE(resumed.completed);
        REQUIRE(resumed.seeds_skipped == partial.seeds_processed);
        REQUIRE(slurp(tmp.path / "a.csv") == slurp(tmp.path / "c.csv"));
    }

    SECTION("records replay: every |C| re-verifies under the direct route") {
        std::ifstream in(tmp.path / "a.csv");
        std::string line;
        std::getline(in, line);
        REQUIRE(line == kCsvHeader);
        std::size_t rows = 0;
        while (std::getline(in, line)) {
            const auto cells = split(line, ',');
            REQUIRE(cells.size() == 8);
            SeedData seed;
            seed.n = std::stoi(cells[0]);
            for (const auto& blk : split(cells[2], ' ')) {
                const auto ka = split(blk, ':');
                seed.blocks.push_back({std::stoi(ka[0]), std::stoi(ka[1])});
            }
            REQUIRE(seed.m() == std::stoi(cells[1]));
            REQUIRE(seed.N() == std::stoi(cells[3]));
            REQUIRE(abs(compute_C_direct(seed)) == mpz_class(cells[5]));
            // factor product reassembles C_abs
            mpz_class prod(1);
            if (!cells[6].empty()) {
                for (const auto& pe : split(cells[6], ' ')) {
                    const auto parts = split(pe, '^');
                    mpz_class p(parts[0]);
                    for (int e = std::stoi(parts[1]); e > 0; --e) prod *= p;
                }
            }
            if (mpz_class(cells[5]) > 1) REQUIRE(prod == mpz_class(cells[5]));
            ++rows;
        }
        REQUIRE(rows == full.seeds_processed);
    }

    SECTION("record table is weakly increasing in N") {
        for (std::size_t k = 1; k < full.table.size(); ++k) {
            REQUIRE(full.table[k].N > full.table[k - 1].N);
            REQUIRE(full.table[k].best_prime >= full.table[k - 1].best_prime);
        }
    }

    SECTION("missing checkpoint is an input error") {
        SearchOptions bad;
        bad.resume_checkpoint = (tmp.path / "nope.checkpoint").string();
        REQUIRE_THROWS_AS(run_search(bounds, (tmp.path / "d.csv").string(), bad),
                          std::invalid_argument);
    }
}

TEST_CASE("every n = 2 seed is a unit") {
    TempDir tmp;
    const auto summary = run_search(SearchBounds{2, 2, 8, 8}, (tmp.path / "n2.csv").string(), {});
    REQUIRE(summary.seeds_processed == 8);  // one balanced seed per block count
    std::ifstream in(tmp.path / "n2.csv");
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        const auto cells = split(line, ',');
        REQUIRE(cells[5] == "1");
    }
}
