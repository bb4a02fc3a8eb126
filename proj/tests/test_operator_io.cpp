#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <qmat/operator_io.hpp>
#include <qmat/scalar.hpp>

using namespace qmat;

namespace {

using R = Rational;

const std::string data_dir = QMAT_DATA_DIR;

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("bundled operator files load and match the builtin formulas") {
    const R p2 = R::from_string("2");
    struct Row {
        const char* file;
        HeckeOp<R> expect;
    };
    const Row rows[] = {
        {"std1.json", make_standard(1, p2)},
        {"std2.json", make_standard(2, p2)},
        {"std3.json", make_standard(3, p2)},
        {"super11.json", make_super(1, 1, p2)},
        {"super21.json", make_super(2, 1, p2)},
        {"flip2.json", make_flip<R>(2)},
        {"superflip11.json", make_superflip<R>(1, 1)},
    };
    for (const Row& row : rows) {
        HeckeOp<R> op = load_operator<R>(data_dir + "/" + row.file);
        CHECK(op.d == row.expect.d);
        CHECK(op.q == row.expect.q);
        CHECK(op.R == row.expect.R);
    }
}

TEST_CASE("save and reload round trips, deterministically") {
    const R p2 = R::from_string("2");
    HeckeOp<R> op = make_super(2, 1, p2);
    auto path1 = temp_file("qmat_io_a.json");
    auto path2 = temp_file("qmat_io_b.json");
    save_operator(op, path1.string());
    save_operator(op, path2.string());
    CHECK(slurp(path1) == slurp(path2));
    HeckeOp<R> back = load_operator<R>(path1.string());
    CHECK(back.d == op.d);
    CHECK(back.q == op.q);
    CHECK(back.R == op.R);
    CHECK(back.name == "qmat_io_a");
    std::filesystem::remove(path1);
    std::filesystem::remove(path2);
}

TEST_CASE("entry quadruples are row-major source, column-major target") {
    // [i, j, k, l, s] means the operator sends e_i (x) e_j to
    // s e_k (x) e_l plus other listed terms
    auto path = temp_file("qmat_io_flip.json");
    {
        std::ofstream out(path);
        out << R"({"dim": 2, "q": "1", "entries": [)"
            << R"([0,0,0,0,"1"],[0,1,1,0,"1"],[1,0,0,1,"1"],[1,1,1,1,"1"]]})";
    }
    HeckeOp<R> op = load_operator<R>(path.string());
    CHECK(op.R == make_flip<R>(2).R);
    std::filesystem::remove(path);
}

TEST_CASE("operational failures raise IOError") {
    auto expect_io_error = [](const std::string& path) {
        try {
            load_operator<R>(path);
            FAIL("expected IOError for ", path);
        } catch (const Error& e) {
            CHECK(e.code() == "IOError");
        }
    };
    expect_io_error("/nonexistent/qmat_missing.json");

    auto write_and_check = [&](const char* name, const std::string& body) {
        auto path = temp_file(name);
        {
            std::ofstream out(path);
            out << body;
        }
        expect_io_error(path.string());
        std::filesystem::remove(path);
    };
    write_and_check("qmat_io_bad1.json", "this is not json");
    write_and_check("qmat_io_bad2.json", R"({"dim": 2, "entries": []})");
    write_and_check("qmat_io_bad3.json",
                    R"({"dim": 2, "q": "4", "entries": [[0,0,0,2,"4"]]})");
    write_and_check("qmat_io_bad4.json",
                    R"({"dim": 2, "q": "4", "entries": [[0,0,0,0,"4/"]]})");
}

TEST_CASE("a well-formed file that is not a Hecke operator is flagged") {
    auto path = temp_file("qmat_io_nonop.json");
    {
        // twice the classical operator: well-formed, wrong eigenvalues
        std::ofstream out(path);
        out << R"({"dim": 1, "q": "4", "entries": [[0,0,0,0,"8"]]})";
    }
    try {
        load_operator<R>(path.string());
        FAIL("expected InvalidOperator");
    } catch (const Error& e) {
        CHECK(e.code() == "InvalidOperator");
    }
    HeckeOp<R> raw = load_operator<R>(path.string(), false);
    CHECK(raw.R.at(0, 0) == R::from_string("8"));
    std::filesystem::remove(path);
}
