#include "frobcy/cache.hpp"
#include "frobcy/catalog.hpp"
#include "frobcy/errors.hpp"
#include "frobcy/table.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

using namespace frobcy;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("frobcy_" + tag + "_" + std::to_string(::getpid())))
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::size_t count_json(const fs::path& dir)
{
    std::size_t n = 0;
    for (const auto& e : fs::directory_iterator(dir))
        n += e.path().extension() == ".json";
    return n;
}

}  // namespace

TEST_CASE("sha256_hex")
{
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("default_cache_dir")
{
    const char* old = std::getenv("FROBCY_CACHE_DIR");
    std::string saved = old ? old : "";
    ::setenv("FROBCY_CACHE_DIR", "/tmp/somewhere", 1);
    CHECK(default_cache_dir() == "/tmp/somewhere");
    ::unsetenv("FROBCY_CACHE_DIR");
    ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
    CHECK(default_cache_dir() == "/tmp/xdg/frobcy");
    ::unsetenv("XDG_CACHE_HOME");
    if (old)
        ::setenv("FROBCY_CACHE_DIR", saved.c_str(), 1);
}

TEST_CASE("cache hit, miss and fault injection")
{
    TempDir dir("cache");
    const ThetaOperator& op = catalog_entry("A*a").op;
    auto ref = solve_series(op, 342, SeriesMode::modular(7, 3)).coeffs;

    CacheOutcome o;
    CHECK(cache_series(op, 7, 3, 342, "", &o) == ref);
    CHECK(o == CacheOutcome::Disabled);

    CHECK(cache_series(op, 7, 3, 342, dir.path.string(), &o) == ref);
    CHECK(o == CacheOutcome::Miss);
    CHECK(count_json(dir.path) == 1);
    CHECK(cache_series(op, 7, 3, 342, dir.path.string(), &o) == ref);
    CHECK(o == CacheOutcome::Hit);

    auto rows = op.rows();
    rows[1][0] += 1;
    ThetaOperator bumped(rows, op.name());
    CHECK(sha256_hex(bumped.to_json()) != sha256_hex(op.to_json()));
    try {
        cache_series(bumped, 7, 3, 342, dir.path.string(), &o);
        CHECK(o == CacheOutcome::Miss);
    } catch (const NonIntegralSolution&) {
        // the perturbed operator need not have an integral solution; the key still differed
    }

    std::string file = cache_path(dir.path.string(), sha256_hex(op.to_json()), 7, 3, 342);
    REQUIRE(fs::exists(file));
    fs::resize_file(file, fs::file_size(file) / 2);
    CHECK_THROWS_AS(load_cached_series(file, sha256_hex(op.to_json()), 7, 3, 342), CorruptCache);
    CHECK(cache_series(op, 7, 3, 342, dir.path.string(), &o) == ref);
    CHECK(o == CacheOutcome::Recomputed);
    CHECK(cache_series(op, 7, 3, 342, dir.path.string(), &o) == ref);
    CHECK(o == CacheOutcome::Hit);

    {
        std::ofstream f(file, std::ios::trunc);
        f << R"({"operator_hash": "deadbeef", "p": 7, "K": 3, "N": 342, "residues": []})";
    }
    CHECK_THROWS_AS(load_cached_series(file, sha256_hex(op.to_json()), 7, 3, 342), CorruptCache);
    CHECK_FALSE(load_cached_series(file + ".missing", "x", 7, 3, 342));
    for (const auto& e : fs::directory_iterator(dir.path))
        CHECK(e.path().string().find(".tmp.") == std::string::npos);
}

TEST_CASE("tables are identical with and without cache and across job counts")
{
    TempDir dir("table");
    OperatorPair ops = make_pair_for(catalog_entry("C*c").op);
    auto render = [&](const TableOptions& o) {
        std::string out = csv_header();
        for (unsigned long p : {5ul, 7ul, 11ul})
            for (const auto& r : compute_row(ops, p, o))
                out += render_csv_row(r);
        return out;
    };
    TableOptions serial;
    const std::string base = render(serial);
    TableOptions cached;
    cached.cache_dir = dir.path.string();
    CHECK(render(cached) == base);
    CHECK(render(cached) == base);
    TableOptions par;
    par.jobs = 4;
    CHECK(render(par) == base);
    par.cache_dir = dir.path.string();
    CHECK(render(par) == base);
}

TEST_CASE("parallel_for rethrows the first failing index")
{
    std::vector<int> hit(50, 0);
    parallel_for(50, 4, [&](std::size_t i) { hit[i] = 1; });
    CHECK(std::count(hit.begin(), hit.end(), 1) == 50);
    try {
        parallel_for(20, 3, [](std::size_t i) {
            if (i == 7 || i == 13)
                throw BadInput("index " + std::to_string(i));
        });
        CHECK(false);
    } catch (const BadInput& e) {
        CHECK(std::string(e.what()) == "index 7");
    }
}

TEST_CASE("rendering")
{
    OperatorPair ops = make_pair_for(catalog_entry("A*a").op);
    TableOptions o;
    auto row = compute_row(ops, 7, o);
    std::vector<std::string> cells;
    for (const auto& r : row)
        cells.push_back(cell_text(r));
    CHECK(cells == reference_rows("A*a").at(7));
    CHECK(render_markdown("A*a", 3, {"-", "-"}) ==
          "### A*a p=3\n\n| z | 1 | 2 |\n|---|---|---|\n|   | - | - |\n");
    CHECK(render_csv_row(row[1]) == "A*a,7,2,smooth,-8,2,,,,,\n");
    CHECK(render_csv_row(row[5]) == "A*a,7,6,undefined,,,,,,,\n");
    CHECK(render_csv_row(row[4]).rfind("A*a,7,5,reducible,10,50,", 0) == 0);
    CHECK(render_csv_row(row[2], "8/1") == "A*a,7,3,singular,32,-94,,,-1,24,8/1\n");
    CHECK(row[2].symbol_root);
    CHECK(render_json({row[1]}).find("\"(-8,2)\"") != std::string::npos);
}

TEST_CASE("resolve_operator")
{
    CHECK(resolve_operator("A*a") == catalog_entry("A*a").op);
    TempDir dir("op");
    fs::path f = dir.path / "op.json";
    {
        std::ofstream out(f);
        out << catalog_entry("B*c").op.to_json();
    }
    CHECK(resolve_operator(f.string()) == catalog_entry("B*c").op);
    CHECK_THROWS_AS(resolve_operator("nope"), BadInput);
}
